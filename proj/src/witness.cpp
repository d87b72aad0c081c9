#include "symsep/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symsep/rng.hpp"

namespace symsep {

namespace {

int local_dim(const Eigen::MatrixXcd& m) {
  const int d = static_cast<int>(std::lround(std::sqrt(double(m.rows()))));
  if (m.rows() != m.cols() || Eigen::Index(d) * d != m.rows())
    throw NonSquareError("operator is not a square on d (x) d");
  return d;
}

double pair_value(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& psi1,
                  const Eigen::VectorXcd& psi2) {
  const Eigen::VectorXcd prod = kron(psi1, psi2);
  return (prod.adjoint() * m * prod)(0).real();
}

double symmetric_value(const Eigen::MatrixXcd& m,
                       const Eigen::VectorXcd& psi) {
  return pair_value(m, psi, psi);
}

// E2[a,b] = <a psi| M |b psi>, the contraction over the second slot.
Eigen::MatrixXcd contract_second(const Eigen::MatrixXcd& m,
                                 const Eigen::VectorXcd& psi, int d) {
  Eigen::MatrixXcd e(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      e(a, b) = psi.dot(m.block(a * d, b * d, d, d) * psi);
  return e;
}

// E1[p,q] = <psi p| M |psi q>, the contraction over the first slot.
Eigen::MatrixXcd contract_first(const Eigen::MatrixXcd& m,
                                const Eigen::VectorXcd& psi, int d) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      e += std::conj(psi(a)) * psi(b) * m.block(a * d, b * d, d, d);
  return e;
}

Eigen::VectorXcd top_eigenvector(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXcd v = solver.eigenvectors().col(h.rows() - 1);
  // Fix the global phase for bit-stable results.
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      v *= std::conj(v(i)) / std::abs(v(i));
      break;
    }
  }
  return v;
}

struct SeesawRun {
  double value = 0.0;
  Eigen::VectorXcd psi;
  bool converged = false;
};

Eigen::MatrixXcd effective_matrix(const Eigen::MatrixXcd& m,
                                  const Eigen::VectorXcd& psi, int d) {
  const Eigen::MatrixXcd e =
      0.5 * (contract_second(m, psi, d) + contract_first(m, psi, d));
  return 0.5 * (e + e.adjoint());
}

SeesawRun seesaw_from(const Eigen::MatrixXcd& m, Eigen::VectorXcd psi, int d,
                      int iters) {
  double value = symmetric_value(m, psi);
  bool settled = false;
  for (int it = 0; it < iters; ++it) {
    const Eigen::VectorXcd direction =
        top_eigenvector(effective_matrix(m, psi, d));

    // The bare eigenstep can two-cycle on symmetric objectives (for a
    // rank-one M it maps psi to a vector with the same objective), so the
    // step is chosen as the best point on a short blend line between psi
    // and the phase-aligned eigenvector.
    Eigen::VectorXcd aligned = direction;
    const Complex overlap = psi.dot(direction);
    if (std::abs(overlap) > 1e-12)
      aligned *= std::conj(overlap) / std::abs(overlap);

    Eigen::VectorXcd best_step = psi;
    double best_value = value;
    for (const double t : {1.0, 0.75, 0.5, 0.25, 0.0625}) {
      Eigen::VectorXcd blend = (1.0 - t) * psi + t * aligned;
      const double norm = blend.norm();
      if (norm < 1e-12) continue;
      blend /= norm;
      const double blend_value = symmetric_value(m, blend);
      if (blend_value > best_value) {
        best_value = blend_value;
        best_step = blend;
      }
    }
    if (best_value <= value + kSeesawConvergence) {
      psi = best_value > value ? best_step : psi;
      value = std::max(value, best_value);
      settled = true;
      break;
    }
    psi = best_step;
    value = best_value;
  }

  // Polish along the stationarity residual so the returned point satisfies
  // ||E(psi) psi - f psi|| <= 1e-8. Near the optimum the line-search gains
  // underflow double precision, so a quadratic-fit step leads; fit steps
  // are accepted on noise-level ties because the gradient norm oscillates
  // while the iterates converge, and the best iterate seen is kept.
  Eigen::VectorXcd best_res_psi = psi;
  double best_res = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 300; ++round) {
    const Eigen::MatrixXcd e = effective_matrix(m, psi, d);
    const Eigen::VectorXcd grad = e * psi - value * psi;
    const double grad_norm = grad.norm();
    if (grad_norm < best_res) {
      best_res = grad_norm;
      best_res_psi = psi;
    }
    if (grad_norm <= 1e-10) break;
    const Eigen::VectorXcd dir = grad / grad_norm;
    const double noise = 1e-15 * std::max(1.0, std::abs(value));

    auto point_at = [&](double tau) {
      Eigen::VectorXcd cand = psi + tau * dir;
      cand /= cand.norm();
      return cand;
    };

    const double h = 1e-3;
    const double f_plus = symmetric_value(m, point_at(h));
    const double f_minus = symmetric_value(m, point_at(-h));
    const double curvature = f_plus + f_minus - 2.0 * value;
    if (curvature < 0.0) {
      const double tau = 0.5 * h * (f_plus - f_minus) / (-curvature);
      if (std::abs(tau) <= 0.5) {
        const Eigen::VectorXcd cand = point_at(tau);
        const double cand_value = symmetric_value(m, cand);
        if (cand_value >= value - noise) {
          psi = cand;
          value = std::max(value, cand_value);
          continue;
        }
      }
    }

    Eigen::VectorXcd best_step = psi;
    double best_value = value;
    for (int p = -30; p <= 2; ++p) {
      const Eigen::VectorXcd cand = point_at(std::ldexp(1.0, p));
      const double cand_value = symmetric_value(m, cand);
      if (cand_value > best_value) {
        best_value = cand_value;
        best_step = cand;
      }
    }
    if (best_value <= value) break;
    psi = best_step;
    value = best_value;
  }
  // Objective values are numerically flat within ~sqrt(eps) of the
  // optimum while the residual there can still exceed 1e-8 (and the bare
  // eigenvector fixed-point map can be expansive), so finish with damped
  // Gauss-Newton on the stationarity residual r(psi) = E(psi) psi - f psi.
  {
    const double plateau = 1e-13 * std::max(1.0, std::abs(value));
    auto residual_vec = [&](const Eigen::VectorXcd& p) -> Eigen::VectorXcd {
      const Eigen::MatrixXcd e = effective_matrix(m, p, d);
      const double f_now = p.dot(e * p).real();
      return e * p - f_now * p;
    };
    auto stack_real = [d](const Eigen::VectorXcd& v) -> Eigen::VectorXd {
      Eigen::VectorXd out(2 * d);
      out.head(d) = v.real();
      out.tail(d) = v.imag();
      return out;
    };
    Eigen::VectorXcd probe = psi;
    Eigen::VectorXcd r0 = residual_vec(probe);
    for (int it = 0; it < 40; ++it) {
      if (r0.norm() <= 1e-12) break;
      const double h = 1e-7;
      Eigen::MatrixXd jac(2 * d, 2 * d);
      for (int k = 0; k < 2 * d; ++k) {
        Eigen::VectorXcd pert = probe;
        if (k < d)
          pert(k) += h;
        else
          pert(k - d) += Complex(0, h);
        pert /= pert.norm();
        jac.col(k) = stack_real(residual_vec(pert) - r0) / h;
      }
      const Eigen::VectorXd step =
          jac.colPivHouseholderQr().solve(-stack_real(r0));
      bool accepted = false;
      for (double damp = 1.0; damp > 1e-4; damp *= 0.5) {
        Eigen::VectorXcd cand = probe;
        for (int k = 0; k < d; ++k)
          cand(k) += damp * Complex(step(k), step(d + k));
        cand /= cand.norm();
        const Eigen::VectorXcd r1 = residual_vec(cand);
        if (r1.norm() < r0.norm() &&
            symmetric_value(m, cand) >= value - plateau) {
          probe = cand;
          r0 = r1;
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
    }
    const double probe_res = r0.norm();
    if (probe_res < best_res &&
        symmetric_value(m, probe) >= value - plateau) {
      best_res = probe_res;
      best_res_psi = probe;
    }
  }
  const double best_res_value = symmetric_value(m, best_res_psi);
  if (best_res_value >= value - 1e-13 * std::max(1.0, std::abs(value))) {
    psi = best_res_psi;
    value = best_res_value;
  }
  return {value, psi, settled};
}

}  // namespace

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::generic: return "generic";
    case WitnessKind::symmetric: return "symmetric";
    case WitnessKind::symmetric_mixed: return "symmetric-mixed";
  }
  return "symmetric";
}

WitnessKind witness_kind_from_string(const std::string& name) {
  if (name == "generic") return WitnessKind::generic;
  if (name == "symmetric") return WitnessKind::symmetric;
  if (name == "symmetric-mixed") return WitnessKind::symmetric_mixed;
  throw ParseError("unknown witness kind: " + name);
}

ProductOptResult optimize_symmetric_product(const Eigen::MatrixXcd& m,
                                            int restarts, int iters,
                                            std::uint64_t seed) {
  const int d = local_dim(m);
  if (!is_hermitian_within(m, kHermiticitySlack))
    throw NonHermitianError("optimize_symmetric_product: M is not Hermitian");
  if (restarts < 1) restarts = 1;

  ProductOptResult result;
  int converged = 0;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
    const SeesawRun run = seesaw_from(m, rng.unit_vector(d), d, iters);
    if (run.converged) ++converged;
    if (r == 0 || run.value > result.best_value) {
      result.best_value = run.value;
      result.best_vector = run.psi;
    }
  }
  result.restarts_used = restarts;
  result.converged_fraction =
      static_cast<double>(converged) / static_cast<double>(restarts);
  // Report exactly the value of the returned vector.
  result.best_value = symmetric_value(m, result.best_vector);
  return result;
}

double certify_by_grid(const Eigen::MatrixXcd& m, int resolution) {
  const int d = local_dim(m);
  if (d > 3)
    throw DimensionTooLargeError("certify_by_grid: only d <= 3 supported");
  if (d < 2) throw NonSquareError("certify_by_grid: local dimension < 2");
  if (resolution < 2) resolution = 2;
  const double half_pi = 1.5707963267948966;
  const double two_pi = 6.283185307179586;
  double best = -std::numeric_limits<double>::infinity();

  if (d == 2) {
    Eigen::VectorXcd psi(2);
    for (int i = 0; i < resolution; ++i) {
      const double theta = half_pi * i / (resolution - 1);
      for (int j = 0; j < resolution; ++j) {
        const double phi = two_pi * j / resolution;
        psi(0) = std::cos(theta);
        psi(1) = std::polar(std::sin(theta), phi);
        best = std::max(best, symmetric_value(m, psi));
      }
    }
    return best;
  }

  Eigen::VectorXcd psi(3);
  for (int i1 = 0; i1 < resolution; ++i1) {
    const double t1 = half_pi * i1 / (resolution - 1);
    for (int i2 = 0; i2 < resolution; ++i2) {
      const double t2 = half_pi * i2 / (resolution - 1);
      const double c1 = std::cos(t1), s1 = std::sin(t1);
      const double c2 = std::cos(t2), s2 = std::sin(t2);
      for (int j1 = 0; j1 < resolution; ++j1) {
        const double p1 = two_pi * j1 / resolution;
        for (int j2 = 0; j2 < resolution; ++j2) {
          const double p2 = two_pi * j2 / resolution;
          psi(0) = c1;
          psi(1) = std::polar(s1 * c2, p1);
          psi(2) = std::polar(s1 * s2, p2);
          best = std::max(best, symmetric_value(m, psi));
        }
      }
    }
  }
  return best;
}

Witness build_schmidt_witness(const BipartiteState& s, int kept,
                              int restarts, std::uint64_t seed) {
  const SchmidtDecomposition sd =
      schmidt_decompose(s, hermitian_basis(s.d));
  const Eigen::Index count = sd.coefficients.size();
  kept = std::clamp(kept, 1, static_cast<int>(count));
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Zero(s.d * s.d, s.d * s.d);
  for (int k = 0; k < kept; ++k) {
    const double f = std::sqrt(std::max(sd.coefficients(k), 0.0));
    if (f == 0.0) continue;
    const auto& obs = sd.observables[static_cast<std::size_t>(k)];
    m += f * kron(obs, obs);
  }
  const ProductOptResult opt =
      optimize_symmetric_product(m, restarts, 2000, seed);
  return {std::move(m), opt.best_value, WitnessKind::symmetric};
}

Witness build_rho33_witness(int restarts, std::uint64_t seed) {
  return build_schmidt_witness(builtin_rho33(), 6, std::max(restarts, 200),
                               seed);
}

double evaluate(const Witness& w, const BipartiteState& s) {
  if (w.op.rows() != s.rho.rows())
    throw DimensionMismatchError("evaluate: witness/state dimensions differ");
  return w.constant - (w.op * s.rho).trace().real();
}

double product_value_mixed(const Eigen::VectorXd& coeffs,
                           const std::vector<Eigen::MatrixXcd>& ops,
                           const Eigen::MatrixXcd& rho) {
  if (static_cast<std::size_t>(coeffs.size()) != ops.size() || ops.empty())
    throw BadDecompositionError(
        "product_value_mixed: coefficient/operator count mismatch");
  for (const auto& op : ops) {
    if (op.rows() != rho.rows() || op.cols() != rho.cols())
      throw BadDecompositionError(
          "product_value_mixed: operator/state shape mismatch");
    if (!is_hermitian_within(op, kHermiticitySlack))
      throw BadDecompositionError(
          "product_value_mixed: operators must be Hermitian");
  }
  double total = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    const double overlap =
        (ops[static_cast<std::size_t>(k)] * rho).trace().real();
    total += coeffs(k) * overlap * overlap;
  }
  return total;
}

bool witness_ordering_spotcheck(const Eigen::MatrixXcd& m, int samples,
                                std::uint64_t seed) {
  const int d = local_dim(m);
  const double scale = std::max(1.0, m.norm());
  if (min_eigenvalue(m) < -kPsdSlack * scale)
    throw NotPsdError("witness_ordering_spotcheck: M is not PSD");
  const Eigen::MatrixXcd ps = symmetric_projector(d);
  if ((ps * m * ps - m).norm() > kPsdSlack * scale)
    throw NotSymmetricOperatorError(
        "witness_ordering_spotcheck: M is not symmetric");
  if (samples < 1) samples = 1;

  const ProductOptResult sym_opt =
      optimize_symmetric_product(m, 50, 1000, Rng::derive(seed, 0));

  double pair_sup = -std::numeric_limits<double>::infinity();
  double mixed_sup = -std::numeric_limits<double>::infinity();
  const auto mixed_value = [&](const Eigen::MatrixXcd& rho) {
    return (kron(rho, rho) * m).trace().real();
  };
  // The see-saw maximizer is itself an admissible pure rho.
  mixed_sup = std::max(
      mixed_sup,
      mixed_value(sym_opt.best_vector * sym_opt.best_vector.adjoint()));

  for (int sample = 0; sample < samples; ++sample) {
    Rng rng(Rng::derive(seed, 1000 + static_cast<std::uint64_t>(sample)));
    Eigen::VectorXcd psi1 = rng.unit_vector(d);
    Eigen::VectorXcd psi2 = rng.unit_vector(d);
    // Alternating ascent over the independent pair.
    for (int it = 0; it < 500; ++it) {
      const Eigen::VectorXcd next1 =
          top_eigenvector(contract_second(m, psi2, d));
      const Eigen::VectorXcd next2 =
          top_eigenvector(contract_first(m, next1, d));
      if ((next1 - psi1).norm() + (next2 - psi2).norm() < 1e-12) {
        psi1 = next1;
        psi2 = next2;
        break;
      }
      psi1 = next1;
      psi2 = next2;
    }
    pair_sup = std::max(pair_sup, pair_value(m, psi1, psi2));

    const Eigen::MatrixXcd proj1 = psi1 * psi1.adjoint();
    const Eigen::MatrixXcd proj2 = psi2 * psi2.adjoint();
    for (int step = 0; step <= 10; ++step) {
      const double t = 0.1 * step;
      mixed_sup = std::max(mixed_sup,
                           mixed_value(t * proj1 + (1.0 - t) * proj2));
    }
    const Eigen::MatrixXcd g = rng.ginibre(d, d);
    Eigen::MatrixXcd random_rho = g * g.adjoint();
    random_rho /= random_rho.trace().real();
    mixed_sup = std::max(mixed_sup, mixed_value(random_rho));
  }
  return pair_sup <= mixed_sup + kWitnessDetection &&
         mixed_sup <= sym_opt.best_value + kWitnessDetection;
}

}  // namespace symsep
