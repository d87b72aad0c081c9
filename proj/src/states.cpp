#include "symsep/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symsep/rng.hpp"

namespace symsep {

namespace {

const Eigen::MatrixXcd& pauli(int which) {
  static const Eigen::MatrixXcd x =
      (Eigen::MatrixXcd(2, 2) << 0, 1, 1, 0).finished();
  static const Eigen::MatrixXcd y =
      (Eigen::MatrixXcd(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0)
          .finished();
  static const Eigen::MatrixXcd z =
      (Eigen::MatrixXcd(2, 2) << 1, 0, 0, -1).finished();
  switch (which) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& a, int count) {
  Eigen::MatrixXcd out = a;
  for (int i = 1; i < count; ++i) out = kron(out, a);
  return out;
}

}  // namespace

void validate_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                             double tol) {
  if (rho.rows() != rho.cols())
    throw ValidationError("density matrix must be square");
  require_finite(rho);
  if (!is_hermitian_within(rho, tol))
    throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol)
    throw ValidationError("density matrix trace differs from one");
  if (min_eigenvalue(rho, tol) < -tol)
    throw ValidationError("density matrix has a negative eigenvalue");
}

BipartiteState make_bipartite_state(int d, Eigen::MatrixXcd rho, double tol) {
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  if (rho.rows() != d * d || rho.cols() != d * d)
    throw ValidationError("bipartite state must be d^2 x d^2");
  validate_density_matrix(rho, tol);
  return {d, std::move(rho)};
}

MultiQubitState make_multiqubit_state(int n, Eigen::MatrixXcd rho,
                                      double tol) {
  if (n < 1) throw ValidationError("qubit count must be at least 1");
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (rho.rows() != dim || rho.cols() != dim)
    throw ValidationError("multi-qubit state must be 2^n x 2^n");
  validate_density_matrix(rho, tol);
  return {n, std::move(rho)};
}

Bipartition make_bipartition(std::vector<int> left, int n) {
  if (n < 2) throw BadPartitionError("need at least two qubits to partition");
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  if (left.empty())
    throw BadPartitionError("left side of partition is empty");
  if (static_cast<int>(left.size()) >= n)
    throw BadPartitionError("right side of partition is empty");
  for (int q : left)
    if (q < 0 || q >= n)
      throw BadPartitionError("qubit index " + std::to_string(q) +
                              " out of range");
  std::vector<int> right;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(left.begin(), left.end(), q)) right.push_back(q);
  return {std::move(left), std::move(right)};
}

Eigen::MatrixXcd flip_operator(int d) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) f(b * d + a, a * d + b) = 1.0;
  return f;
}

Eigen::MatrixXcd symmetric_projector(int d) {
  return 0.5 * (Eigen::MatrixXcd::Identity(d * d, d * d) + flip_operator(d));
}

bool is_symmetric(const BipartiteState& s, double tol) {
  const Eigen::MatrixXcd f = flip_operator(s.d);
  return (f * s.rho - s.rho).norm() <= tol &&
         (s.rho * f - s.rho).norm() <= tol;
}

bool is_permutationally_invariant(const BipartiteState& s, double tol) {
  const Eigen::MatrixXcd f = flip_operator(s.d);
  return (f * s.rho * f - s.rho).norm() <= tol;
}

BipartiteState builtin_rho33() {
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  // Qutrit levels alpha, beta, gamma = 0, 1, 2.
  std::vector<Eigen::VectorXcd> basis(5, Eigen::VectorXcd::Zero(9));
  basis[0](0 * 3 + 0) = 1.0;
  basis[1](0 * 3 + 1) = 1.0 / s2;
  basis[1](1 * 3 + 0) = 1.0 / s2;
  basis[2](0 * 3 + 2) = 1.0 / s6;
  basis[2](1 * 3 + 1) = 2.0 / s6;
  basis[2](2 * 3 + 0) = 1.0 / s6;
  basis[3](2 * 3 + 1) = 1.0 / s2;
  basis[3](1 * 3 + 2) = 1.0 / s2;
  basis[4](2 * 3 + 2) = 1.0;

  const double weights[5] = {0.22, 0.176, 0.167, 0.254, 0.183};
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(9, 9);
  for (int i = 0; i < 5; ++i)
    rho += weights[i] * (basis[i] * basis[i].adjoint());
  rho -= 0.059 * (basis[3] * basis[0].adjoint() +
                  basis[0] * basis[3].adjoint());
  return make_bipartite_state(3, std::move(rho));
}

MultiQubitState smolin_state(int n, int qubit_cap) {
  if (n < 1) throw ValidationError("smolin_state: n must be at least 1");
  const int qubits = 2 * n;
  if (qubits > qubit_cap)
    throw DimensionTooLargeError("smolin_state: 2n = " +
                                 std::to_string(qubits) +
                                 " exceeds the qubit cap " +
                                 std::to_string(qubit_cap));
  const Eigen::Index dim = Eigen::Index(1) << qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dim, dim);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  for (int l = 0; l < 3; ++l) rho += sign * kron_power(pauli(l), qubits);
  rho /= static_cast<double>(dim);
  return make_multiqubit_state(qubits, std::move(rho));
}

BipartiteState random_symmetric_state(int d, std::uint64_t seed, int rank) {
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  if (rank <= 0 || rank > d * d) rank = d * d;
  Rng rng(seed);
  const Eigen::MatrixXcd g = rng.ginibre(d * d, rank);
  const Eigen::MatrixXcd ps = symmetric_projector(d);
  Eigen::MatrixXcd rho = ps * (g * g.adjoint()) * ps;
  rho /= rho.trace().real();
  return {d, std::move(rho)};
}

BipartiteState random_separable_symmetric_state(int d, int terms,
                                                std::uint64_t seed) {
  if (terms < 1)
    throw ValidationError("need at least one product term");
  Rng rng(seed);
  const std::vector<double> weights = rng.simplex(terms);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int t = 0; t < terms; ++t) {
    const Eigen::VectorXcd phi = rng.unit_vector(d);
    const Eigen::MatrixXcd proj = phi * phi.adjoint();
    rho += weights[static_cast<std::size_t>(t)] * kron(proj, proj);
  }
  return {d, std::move(rho)};
}

BipartiteState random_permutationally_invariant_state(int d,
                                                      std::uint64_t seed) {
  Rng rng(seed);
  const Eigen::MatrixXcd ps = symmetric_projector(d);
  const Eigen::MatrixXcd pa =
      Eigen::MatrixXcd::Identity(d * d, d * d) - ps;

  const Eigen::MatrixXcd g = rng.ginibre(d * d, d * d);
  Eigen::MatrixXcd sym_part = ps * (g * g.adjoint()) * ps;
  sym_part /= sym_part.trace().real();

  const Eigen::MatrixXcd h = rng.ginibre(d * d, d * d);
  Eigen::MatrixXcd anti_part = pa * (h * h.adjoint()) * pa;
  anti_part /= anti_part.trace().real();

  const double w = rng.uniform();
  Eigen::MatrixXcd rho = w * sym_part + (1.0 - w) * anti_part;
  return {d, std::move(rho)};
}

}  // namespace symsep
