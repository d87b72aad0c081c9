// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "symsep/criteria.hpp"
#include "symsep/rng.hpp"
#include "symsep/schmidt.hpp"
#include "symsep/states.hpp"
#include "symsep/witness.hpp"

using namespace symsep;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& details) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(),
              details.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct CorpusEntry {
  BipartiteState state;
  Eigen::MatrixXcd pt;
  double ppt_min;
};

std::vector<CorpusEntry> make_corpus(int d, int count,
                                     std::uint64_t seed_base) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  for (int seed = 0; seed < count; ++seed) {
    BipartiteState s = random_symmetric_state(
        d, Rng::derive(seed_base + static_cast<std::uint64_t>(d), seed));
    Eigen::MatrixXcd pt = partial_transpose(s);
    const double ppt_min = min_eigenvalue(pt);
    corpus.push_back({std::move(s), std::move(pt), ppt_min});
  }
  return corpus;
}

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3g", x);
  return buffer;
}

}  // namespace

int main() {
  const auto t_total = std::chrono::steady_clock::now();

  std::vector<std::vector<CorpusEntry>> corpus_by_d;
  for (int d : {2, 3, 4}) corpus_by_d.push_back(make_corpus(d, 100, 9000));

  // Flip-realignment identity.
  {
    const auto start = std::chrono::steady_clock::now();
    double worst_flip = 0.0, worst_eta = 0.0;
    for (const auto& corpus : corpus_by_d) {
      const int d = corpus.front().state.d;
      const Eigen::MatrixXcd f = flip_operator(d);
      const auto units = matrix_unit_basis(d);
      for (const auto& entry : corpus) {
        const Eigen::MatrixXcd re = realign(entry.state);
        worst_flip = std::max(worst_flip, (f * re - entry.pt).norm());
        const Eigen::MatrixXcd eta =
            expectation_value_matrix(entry.state, units);
        worst_eta = std::max(worst_eta, (entry.pt - eta).norm());
      }
    }
    const double elapsed = seconds_since(start);
    report("flip-realignment identity",
           worst_flip <= 1e-10 && worst_eta <= 1e-10 && elapsed < 10.0,
           "max ||F rho^R - rho^TA|| = " + fmt(worst_flip) +
               ", max ||rho^TA - eta|| = " + fmt(worst_eta) + ", " +
               fmt(elapsed) + " s over 300 states");
  }

  // Spectral link between realignment singular values and partial-transpose
  // eigenvalues.
  {
    double worst = 0.0;
    for (const auto& corpus : corpus_by_d) {
      for (const auto& entry : corpus) {
        Eigen::VectorXd sv = singular_values(realign(entry.state));
        std::sort(sv.data(), sv.data() + sv.size());
        Eigen::VectorXd abs_eig =
            hermitian_eig(entry.pt).eigenvalues.cwiseAbs();
        std::sort(abs_eig.data(), abs_eig.data() + abs_eig.size());
        worst = std::max(worst, (sv - abs_eig).cwiseAbs().maxCoeff());
      }
    }
    report("spectral link", worst <= 1e-9,
           "max |singular value - |eigenvalue|| = " + fmt(worst));
  }

  // Six-way verdict equivalence outside the boundary band. Separable
  // symmetric states are appended so both verdict signs appear (generic
  // random symmetric states are almost always NPT).
  {
    const double band = 1e-8;
    int checked = 0, excluded = 0, npt = 0, ppt = 0;
    bool agree = true;
    auto consider = [&](const BipartiteState& s,
                        const LocalOrthogonalBasis& basis) {
      const CriteriaReport r = full_report(s, basis, band);
      if (std::abs(r.ppt_min_eigenvalue) <= band ||
          (r.ppt_min_eigenvalue < 0.0 &&
           r.covariance_lhs - r.covariance_rhs <= band)) {
        ++excluded;
        return;
      }
      ++checked;
      (r.ppt_violated ? npt : ppt) += 1;
      agree = agree && r.ppt_violated == r.ccnr_violated &&
              r.ppt_violated == r.a_tensor_a_violated &&
              r.ppt_violated == r.eta_violated &&
              r.ppt_violated == r.correlation_violated &&
              r.ppt_violated == r.covariance_violated;
    };
    for (const auto& corpus : corpus_by_d) {
      const LocalOrthogonalBasis basis =
          hermitian_basis(corpus.front().state.d);
      for (const auto& entry : corpus) consider(entry.state, basis);
    }
    for (int d : {2, 3, 4}) {
      const LocalOrthogonalBasis basis = hermitian_basis(d);
      for (int seed = 0; seed < 30; ++seed)
        consider(random_separable_symmetric_state(
                     d, 1 + seed % 4,
                     Rng::derive(4000 + static_cast<std::uint64_t>(d), seed)),
                 basis);
    }
    report("six-way equivalence", agree && npt > 0 && ppt > 0,
           std::to_string(checked) + " states checked (" +
               std::to_string(npt) + " NPT, " + std::to_string(ppt) +
               " PPT), " + std::to_string(excluded) + " in boundary band");
  }

  // Extremal observable attains the minimal partial-transpose eigenvalue.
  {
    int npt_count = 0;
    double worst_gap = 0.0, worst_herm = 0.0, worst_norm = 0.0;
    for (const auto& corpus : corpus_by_d) {
      for (const auto& entry : corpus) {
        if (entry.ppt_min >= -1e-8) continue;
        ++npt_count;
        const ExtremalObservable ext = extremal_observable(entry.state);
        worst_gap = std::max(worst_gap, std::abs(ext.value - entry.ppt_min));
        worst_herm = std::max(worst_herm, (ext.a - ext.a.adjoint()).norm());
        worst_norm = std::max(
            worst_norm,
            std::abs((ext.a * ext.a).trace().real() - 1.0));
      }
    }
    report("extremal observable",
           npt_count > 0 && worst_gap <= 1e-7 && worst_herm <= 1e-10 &&
               worst_norm <= 1e-10,
           std::to_string(npt_count) + " NPT states, max |<A(x)A> - min "
               "eig| = " + fmt(worst_gap));
  }

  // Profile of the built-in two-qutrit bound entangled state.
  {
    const BipartiteState rho33 = builtin_rho33();
    const bool symmetric = is_symmetric(rho33, 1e-9);
    const double ppt_min = min_eigenvalue(partial_transpose(rho33));
    const double ccnr = trace_norm(realign(rho33));
    const SchmidtDecomposition sd =
        schmidt_decompose(rho33, hermitian_basis(3));
    const double lambda_min = sd.coefficients.minCoeff();
    const double lambda_sum = sd.coefficients.sum();
    report("rho33 profile",
           symmetric && ppt_min >= -1e-9 && ccnr <= 1.0 + 1e-9 &&
               lambda_min >= -1e-9 && std::abs(lambda_sum - 1.0) <= 1e-9,
           "PT min = " + fmt(ppt_min) + ", CCNR = " + fmt(ccnr) +
               ", min lambda = " + fmt(lambda_min) + ", sum = " +
               fmt(lambda_sum));
  }

  // Witness reproduction of the reference constant and expectation value.
  Witness rho33_witness;
  {
    const auto start = std::chrono::steady_clock::now();
    rho33_witness = build_rho33_witness(200, 42);
    const BipartiteState rho33 = builtin_rho33();
    const double value = evaluate(rho33_witness, rho33);
    const double elapsed = seconds_since(start);
    const double expectation = (rho33_witness.op * rho33.rho).trace().real();
    const double literal_constant_value = 0.447775 - expectation;
    const double grid = certify_by_grid(rho33_witness.op, 40);
    report("witness reproduction",
           std::abs(rho33_witness.constant - 0.447775) <= 1e-3 &&
               std::abs(value - (-0.000753)) <= 2e-4 &&
               std::abs(literal_constant_value - (-0.000753)) <= 1e-5 &&
               grid <= rho33_witness.constant + 1e-6 && elapsed < 60.0,
           "constant = " + fmt(rho33_witness.constant) + ", value = " +
               fmt(value) + ", grid max = " + fmt(grid) + ", " +
               fmt(elapsed) + " s at 200 restarts");
  }

  // Witness soundness on separable symmetric states.
  {
    double worst = 0.0;
    for (int seed = 0; seed < 200; ++seed) {
      const BipartiteState s = random_separable_symmetric_state(
          3, 1 + seed % 6, Rng::derive(6000, seed));
      worst = std::min(worst, evaluate(rho33_witness, s));
    }
    report("witness soundness", worst >= -1e-6,
           "min value over 200 separable symmetric states = " + fmt(worst));
  }

  // Multipartite profile of the Smolin family.
  {
    const MultiQubitState smolin = smolin_state(2);
    double two_two_min = 1e300, one_three_max = -1e300;
    for (const auto& left : {std::vector<int>{0, 1}, std::vector<int>{0, 2},
                             std::vector<int>{0, 3}}) {
      const Bipartition p = make_bipartition(left, 4);
      two_two_min = std::min(
          two_two_min, min_eigenvalue(multiqubit_partial_transpose(smolin, p)));
    }
    for (int q = 0; q < 4; ++q) {
      const Bipartition p = make_bipartition({q}, 4);
      one_three_max = std::max(
          one_three_max,
          min_eigenvalue(multiqubit_partial_transpose(smolin, p)));
    }
    const double realignment = trace_norm(multiqubit_realign(
        smolin, make_bipartition({0, 1}, 4)));
    report("multipartite smolin",
           two_two_min >= -1e-9 && one_three_max < -1e-3 &&
               realignment <= 1.0 + 1e-9,
           "2:2 PT min = " + fmt(two_two_min) + ", 1:3 PT min = " +
               fmt(one_three_max) + ", realignment = " + fmt(realignment));
  }

  // Schmidt sum rules and reconstruction.
  {
    double worst_sym_sum = 0.0, worst_recon = 0.0;
    double pi_sum_low = 0.0, pi_sum_high = 0.0;
    auto reconstruction_error = [](const SchmidtDecomposition& sd,
                                   const BipartiteState& s) {
      Eigen::MatrixXcd rebuilt =
          Eigen::MatrixXcd::Zero(s.rho.rows(), s.rho.cols());
      for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
        const auto& m = sd.observables[static_cast<std::size_t>(k)];
        rebuilt += sd.coefficients(k) * kron(m, m);
      }
      return (rebuilt - s.rho).norm();
    };
    for (const auto& corpus : corpus_by_d) {
      const LocalOrthogonalBasis basis =
          hermitian_basis(corpus.front().state.d);
      for (const auto& entry : corpus) {
        const SchmidtDecomposition sd =
            schmidt_decompose(entry.state, basis);
        worst_sym_sum =
            std::max(worst_sym_sum, std::abs(sd.coefficients.sum() - 1.0));
        worst_recon =
            std::max(worst_recon, reconstruction_error(sd, entry.state));
      }
    }
    for (int seed = 0; seed < 50; ++seed) {
      const int d = 2 + seed % 3;
      const BipartiteState s = random_permutationally_invariant_state(
          d, Rng::derive(7000 + static_cast<std::uint64_t>(d), seed));
      const SchmidtDecomposition sd =
          schmidt_decompose(s, hermitian_basis(d));
      const double sum = sd.coefficients.sum();
      pi_sum_low = std::min(pi_sum_low, sum);
      pi_sum_high = std::max(pi_sum_high, sum);
      worst_recon = std::max(worst_recon, reconstruction_error(sd, s));
    }
    report("schmidt sum rules",
           worst_sym_sum <= 1e-9 && pi_sum_low >= -1.0 - 1e-9 &&
               pi_sum_high <= 1.0 + 1e-9 && worst_recon <= 1e-9,
           "max |sum - 1| = " + fmt(worst_sym_sum) + " (symmetric), sums in [" +
               fmt(pi_sum_low) + ", " + fmt(pi_sum_high) +
               "] (invariant), max reconstruction = " + fmt(worst_recon));
  }

  // Positive quasi-mixtures (shifted to PSD when needed) pass CCNR.
  {
    double worst = 0.0;
    int shifted_count = 0;
    for (int seed = 0; seed < 50; ++seed) {
      const int d = 2 + seed % 2;
      const int terms = 2 + seed % 3;
      Rng rng(Rng::derive(8000, seed));
      std::vector<Eigen::MatrixXcd> ops;
      std::vector<double> coeffs;
      for (int k = 0; k < terms; ++k) {
        ops.push_back(rng.hermitian_unit(d));
        coeffs.push_back(0.05 + rng.uniform());
      }
      Eigen::MatrixXcd o = quasi_mixture_build(coeffs, ops, 2);
      const double lambda_min = min_eigenvalue(o);
      if (lambda_min < -1e-12) {
        o -= lambda_min * Eigen::MatrixXcd::Identity(o.rows(), o.cols());
        ++shifted_count;
      }
      o /= o.trace().real();
      worst = std::max(worst, trace_norm(realign(BipartiteState{d, o})));
    }
    report("quasi-mixture CCNR", worst <= 1.0 + 1e-9,
           "max CCNR trace norm = " + fmt(worst) + " over 50 mixtures (" +
               std::to_string(shifted_count) + " shifted to PSD)");
  }

  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failures,
              seconds_since(t_total));
  return failures;
}
