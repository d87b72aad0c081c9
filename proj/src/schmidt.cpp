#include "symsep/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace symsep {

namespace {

// Deterministic sign: first component above the noise floor is positive.
void fix_eigenvector_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

}  // namespace

SchmidtDecomposition schmidt_decompose(const BipartiteState& s,
                                       const LocalOrthogonalBasis& basis) {
  if (basis.d != s.d)
    throw DimensionMismatchError("schmidt_decompose: basis dimension");
  if (!is_permutationally_invariant(s, kHermiticitySlack))
    throw NotPermutationallyInvariantError(
        "schmidt_decompose: state is not permutationally invariant");

  Eigen::MatrixXcd eta = expectation_value_matrix(s, basis.observables);
  if (eta.imag().cwiseAbs().maxCoeff() > 1e-8)
    throw NotPermutationallyInvariantError(
        "schmidt_decompose: coefficient matrix is not real");
  Eigen::MatrixXd t = eta.real();
  if ((t - t.transpose()).norm() > 1e-8)
    throw NotPermutationallyInvariantError(
        "schmidt_decompose: coefficient matrix is not symmetric");
  t = 0.5 * (t + t.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  const Eigen::Index count = t.rows();

  // Ascending from the solver; emit descending with deterministic signs.
  SchmidtDecomposition out;
  out.coefficients.resize(count);
  out.observables.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::Index src = count - 1 - k;
    out.coefficients(k) = solver.eigenvalues()(src);
    Eigen::VectorXd column = solver.eigenvectors().col(src);
    fix_eigenvector_sign(column);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.d, s.d);
    for (Eigen::Index l = 0; l < count; ++l)
      m += column(l) * basis.observables[static_cast<std::size_t>(l)];
    out.observables.push_back(std::move(m));
  }
  return out;
}

bool ppt_iff_nonnegative_check(const BipartiteState& s) {
  if (!is_symmetric(s, kHermiticitySlack))
    throw NotSymmetricError(
        "ppt_iff_nonnegative_check: state is not symmetric");
  const double pt_min = min_eigenvalue(partial_transpose(s));
  const SchmidtDecomposition sd =
      schmidt_decompose(s, hermitian_basis(s.d));
  const double lambda_min = sd.coefficients.minCoeff();
  return (pt_min >= -kBoundaryBand) == (lambda_min >= -kBoundaryBand);
}

Eigen::MatrixXcd quasi_mixture_build(const std::vector<double>& coeffs,
                                     const std::vector<Eigen::MatrixXcd>& ops,
                                     int parties) {
  if (parties != 2 && parties != 4)
    throw UnsupportedError("quasi_mixture_build: parties must be 2 or 4");
  if (coeffs.size() != ops.size() || ops.empty())
    throw BadDecompositionError(
        "quasi_mixture_build: coefficient/operator count mismatch");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!is_hermitian_within(ops[k], kHermiticitySlack))
      throw NonHermitianGeneratorError("quasi_mixture_build: generator " +
                                       std::to_string(k) +
                                       " is not Hermitian");
    if (parties == 2 && coeffs[k] <= 0.0)
      throw UnsupportedError(
          "quasi_mixture_build: bipartite coefficients must be positive");
    if (parties == 4 && coeffs[k] < 0.0)
      throw UnsupportedError(
          "quasi_mixture_build: four-party coefficients must be nonnegative");
  }
  const Eigen::Index d = ops.front().rows();
  Eigen::Index dim = 1;
  for (int p = 0; p < parties; ++p) dim *= d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    Eigen::MatrixXcd term = ops[k];
    for (int p = 1; p < parties; ++p) term = kron(term, ops[k]);
    out += coeffs[k] * term;
  }
  return out;
}

}  // namespace symsep
