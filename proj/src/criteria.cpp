#include "symsep/criteria.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <iostream>
#include <string>

#include "symsep/rng.hpp"

namespace symsep {

namespace {

// eta = Bt * rho^R * Bc^T where Bt(i,:) packs B_i transposed and
// Bc(j,:) packs B_j conjugated; this is the two-GEMM form of
// eta[i][j] = Tr(rho * B_i (x) B_j^dag).
Eigen::MatrixXcd eta_from_ops(const BipartiteState& s,
                              const std::vector<Eigen::MatrixXcd>& ops) {
  const int d = s.d;
  const Eigen::Index count = static_cast<Eigen::Index>(ops.size());
  Eigen::MatrixXcd bt(count, d * d);
  Eigen::MatrixXcd bc(count, d * d);
  for (Eigen::Index i = 0; i < count; ++i) {
    const auto& b = ops[static_cast<std::size_t>(i)];
    if (b.rows() != d || b.cols() != d)
      throw ShapeMismatchError("expectation_value_matrix: operator " +
                               std::to_string(i) + " is not d x d");
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) {
        bt(i, a * d + c) = b(c, a);
        bc(i, a * d + c) = std::conj(b(a, c));
      }
  }
  return bt * realign(s) * bc.transpose();
}

// Real coefficient matrix T[k][l] = Tr(rho * M_k (x) M_l) in a Hermitian
// basis. Symmetric exactly when the state is permutationally invariant.
Eigen::MatrixXd coefficient_matrix(const BipartiteState& s,
                                   const LocalOrthogonalBasis& basis) {
  return eta_from_ops(s, basis.observables).real();
}

double quadratic_expectation(const BipartiteState& s,
                             const Eigen::MatrixXcd& a) {
  return (s.rho * kron(a, a)).trace().real();
}

}  // namespace

Eigen::MatrixXcd partial_transpose(const BipartiteState& s) {
  const int d = s.d;
  Eigen::MatrixXcd out(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m)
      for (int l = 0; l < d; ++l)
        for (int n = 0; n < d; ++n)
          out(k * d + m, l * d + n) = s.rho(l * d + m, k * d + n);
  return out;
}

Eigen::MatrixXcd realign(const BipartiteState& s) {
  const int d = s.d;
  Eigen::MatrixXcd out(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m)
      for (int l = 0; l < d; ++l)
        for (int n = 0; n < d; ++n)
          out(k * d + m, l * d + n) = s.rho(k * d + l, m * d + n);
  return out;
}

Eigen::MatrixXcd reduced_state_a(const BipartiteState& s) {
  const int d = s.d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m) out(k, l) += s.rho(k * d + m, l * d + m);
  return out;
}

Eigen::MatrixXcd reduced_state_b(const BipartiteState& s) {
  const int d = s.d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int k = 0; k < d; ++k) out(m, n) += s.rho(k * d + m, k * d + n);
  return out;
}

LocalOrthogonalBasis hermitian_basis(int d) {
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  std::vector<Eigen::MatrixXcd> obs;
  obs.reserve(static_cast<std::size_t>(d) * d);

  obs.push_back(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(double(d)));
  for (int j = 1; j < d; ++j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < j; ++i) m(i, i) = 1.0;
    m(j, j) = -double(j);
    obs.push_back(m / std::sqrt(double(j) * (j + 1)));
  }
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(k, l) = inv_s2;
      sym(l, k) = inv_s2;
      obs.push_back(sym);
      Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(d, d);
      anti(k, l) = Complex(0, inv_s2);
      anti(l, k) = Complex(0, -inv_s2);
      obs.push_back(anti);
    }
  return {d, std::move(obs)};
}

std::vector<Eigen::MatrixXcd> matrix_unit_basis(int d) {
  std::vector<Eigen::MatrixXcd> units;
  units.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d, d);
      q(k, l) = 1.0;
      units.push_back(std::move(q));
    }
  return units;
}

Eigen::MatrixXcd expectation_value_matrix(
    const BipartiteState& s, const std::vector<Eigen::MatrixXcd>& basis) {
  if (static_cast<int>(basis.size()) != s.d * s.d)
    throw BasisSizeMismatchError(
        "expectation_value_matrix: need exactly d^2 basis operators");
  return eta_from_ops(s, basis);
}

EtaResult expectation_value_matrix_general(
    const BipartiteState& s, const std::vector<Eigen::MatrixXcd>& ops) {
  if (ops.empty())
    throw BasisSizeMismatchError("expectation_value_matrix: empty set");
  const Eigen::Index count = static_cast<Eigen::Index>(ops.size());
  Eigen::MatrixXcd vecs(s.d * s.d, count);
  for (Eigen::Index i = 0; i < count; ++i)
    vecs.col(i) = vec_row_major(ops[static_cast<std::size_t>(i)]);
  const Eigen::MatrixXcd gram = vecs.adjoint() * vecs;
  const Eigen::Index rank =
      Eigen::JacobiSVD<Eigen::MatrixXcd>(gram).setThreshold(1e-10).rank();
  return {eta_from_ops(s, ops), rank == Eigen::Index(s.d) * s.d};
}

Eigen::MatrixXd correlation_matrix(const BipartiteState& s,
                                   const LocalOrthogonalBasis& basis) {
  if (basis.d != s.d)
    throw DimensionMismatchError("correlation_matrix: basis dimension");
  const Eigen::MatrixXd t = coefficient_matrix(s, basis);
  const Eigen::MatrixXcd rho_a = reduced_state_a(s);
  const Eigen::MatrixXcd rho_b = reduced_state_b(s);
  const Eigen::Index count = t.rows();
  Eigen::VectorXd mu(count), nu(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    const auto& m = basis.observables[static_cast<std::size_t>(k)];
    mu(k) = (rho_a * m).trace().real();
    nu(k) = (rho_b * m).trace().real();
  }
  return t - mu * nu.transpose();
}

std::pair<double, double> covariance_condition(
    const BipartiteState& s, const LocalOrthogonalBasis& basis) {
  const Eigen::MatrixXd c = correlation_matrix(s, basis);
  const double lhs_norm = singular_values(c.cast<Complex>()).sum();
  const double purity_a = (reduced_state_a(s) * reduced_state_a(s))
                              .trace().real();
  const double purity_b = (reduced_state_b(s) * reduced_state_b(s))
                              .trace().real();
  return {lhs_norm * lhs_norm, (1.0 - purity_a) * (1.0 - purity_b)};
}

ExtremalObservable extremal_observable(const BipartiteState& s,
                                       double sym_tol) {
  if (!is_symmetric(s, sym_tol))
    throw NotSymmetricError("extremal_observable: state is not symmetric");
  const int d = s.d;
  const EigResult pt_eig = hermitian_eig(partial_transpose(s));
  const double target = pt_eig.eigenvalues(0);

  // Candidates from the reshaped minimal eigenvector. The eigenvector of
  // the partial transpose reshapes to (a phase times) the transpose of the
  // extremal observable, so the conjugated reshape is tried as well.
  Eigen::MatrixXcd best_a;
  double best_value = 0.0;
  bool have_best = false;
  const Eigen::MatrixXcd v =
      unvec_row_major(pt_eig.eigenvectors.col(0), d, d);
  const Eigen::MatrixXcd reshapes[2] = {v, v.conjugate()};
  for (const auto& r : reshapes) {
    const Eigen::MatrixXcd herm = 0.5 * (r + r.adjoint());
    const Eigen::MatrixXcd anti =
        Complex(0, 0.5) * (r - r.adjoint());
    for (const auto& cand : {herm, anti}) {
      const double norm = cand.norm();
      if (norm < 1e-12) continue;
      const Eigen::MatrixXcd a = cand / norm;
      const double value = quadratic_expectation(s, a);
      if (!have_best || value < best_value) {
        best_a = a;
        best_value = value;
        have_best = true;
      }
    }
  }
  if (have_best && std::abs(best_value - target) <= 1e-8)
    return {best_a, best_value};

  // Exact route: the real coefficient matrix T[k][l] = Tr(rho M_k (x) M_l)
  // shares its spectrum with the partial transpose for symmetric states,
  // and its minimal eigenvector gives a Hermitian combination attaining it.
  const LocalOrthogonalBasis basis = hermitian_basis(d);
  Eigen::MatrixXd t = coefficient_matrix(s, basis);
  t = 0.5 * (t + t.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  const Eigen::VectorXd x = solver.eigenvectors().col(0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index k = 0; k < x.size(); ++k)
    a += x(k) * basis.observables[static_cast<std::size_t>(k)];
  a /= a.norm();
  const double value = quadratic_expectation(s, a);
  if (std::abs(value - target) > 1e-6)
    std::cerr << "extremal_observable: residual gap "
              << std::abs(value - target) << " above 1e-6\n";
  if (!have_best || value < best_value) return {a, value};
  return {best_a, best_value};
}

bool observation3_check(const BipartiteState& s, int trials,
                        std::uint64_t seed) {
  if (!is_symmetric(s, kHermiticitySlack))
    throw NotSymmetricError("observation3_check: state is not symmetric");
  const Eigen::MatrixXcd pt = partial_transpose(s);
  if (min_eigenvalue(pt) < -kPsdSlack)
    throw NotPptError("observation3_check: state is not PPT");
  // <A^T (x) A> is taken in the partially transposed state, where it equals
  // <A (x) A> in the original one; on the input state itself the expression
  // goes negative even for separable states (A = sigma_y on P_S/3).
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd a = rng.hermitian_unit(s.d);
    const double value = (pt * kron(a.transpose(), a)).trace().real();
    if (value < -kPsdSlack) return false;
  }
  return true;
}

Eigen::MatrixXcd multiqubit_partial_transpose(const MultiQubitState& s,
                                              const Bipartition& p) {
  const int n = s.n;
  if (p.left.empty() || p.right.empty() ||
      static_cast<int>(p.left.size() + p.right.size()) != n)
    throw BadPartitionError("partition does not cover the qubits");
  for (int q : p.left)
    if (q < 0 || q >= n) throw BadPartitionError("qubit index out of range");
  // Qubit q occupies bit (n-1-q) of the basis index.
  Eigen::Index mask = 0;
  for (int q : p.left) mask |= Eigen::Index(1) << (n - 1 - q);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index r2 = (r & ~mask) | (c & mask);
      const Eigen::Index c2 = (c & ~mask) | (r & mask);
      out(r, c) = s.rho(r2, c2);
    }
  return out;
}

Eigen::MatrixXcd multiqubit_realign(const MultiQubitState& s,
                                    const Bipartition& p) {
  const int n = s.n;
  if (static_cast<int>(p.left.size() + p.right.size()) != n)
    throw BadPartitionError("partition does not cover the qubits");
  if (p.left.size() != p.right.size())
    throw BadPartitionError("realignment needs a half/half partition");
  const int half = n / 2;
  const Eigen::Index dim = Eigen::Index(1) << n;

  // Regroup so the left qubits form the most significant block.
  std::vector<int> order(p.left.begin(), p.left.end());
  order.insert(order.end(), p.right.begin(), p.right.end());
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim));
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index grouped = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int q = order[static_cast<std::size_t>(pos)];
      const Eigen::Index bit = (idx >> (n - 1 - q)) & 1;
      grouped |= bit << (n - 1 - pos);
    }
    perm[static_cast<std::size_t>(idx)] = grouped;
  }
  Eigen::MatrixXcd grouped(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      grouped(perm[static_cast<std::size_t>(r)],
              perm[static_cast<std::size_t>(c)]) = s.rho(r, c);

  BipartiteState view{1 << half, std::move(grouped)};
  return realign(view);
}

CriteriaReport full_report(const BipartiteState& s,
                           const LocalOrthogonalBasis& basis, double tol) {
  CriteriaReport report;
  report.symmetric = is_symmetric(s, std::max(tol, kHermiticitySlack));
  report.permutationally_invariant =
      is_permutationally_invariant(s, std::max(tol, kHermiticitySlack));

  report.ppt_min_eigenvalue = min_eigenvalue(partial_transpose(s));
  report.ccnr_trace_norm = trace_norm(realign(s));

  // min over Hermitian A of <A (x) A> is the smallest eigenvalue of the
  // symmetric part of the coefficient matrix; for permutationally invariant
  // states T is symmetric already and equals eta in the Hermitian basis.
  Eigen::MatrixXd t = coefficient_matrix(s, basis);
  t = 0.5 * (t + t.transpose());
  report.eta_min_eigenvalue =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t).eigenvalues()(0);

  Eigen::MatrixXd c = correlation_matrix(s, basis);
  c = 0.5 * (c + c.transpose());
  report.corr_min_eigenvalue =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues()(0);

  const auto [lhs, rhs] = covariance_condition(s, basis);
  report.covariance_lhs = lhs;
  report.covariance_rhs = rhs;

  report.ppt_violated = report.ppt_min_eigenvalue < -tol;
  report.ccnr_violated = report.ccnr_trace_norm > 1.0 + tol;
  report.a_tensor_a_violated = report.eta_min_eigenvalue < -tol;
  report.eta_violated = report.a_tensor_a_violated;
  report.correlation_violated = report.corr_min_eigenvalue < -tol;
  report.covariance_violated = lhs > rhs + tol;

  if (report.symmetric &&
      std::abs(report.ppt_min_eigenvalue - report.eta_min_eigenvalue) > 1e-8)
    throw Error("full_report: partial-transpose and expectation-value "
                "spectra disagree on a symmetric state");
  return report;
}

}  // namespace symsep
