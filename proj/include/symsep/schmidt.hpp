#pragma once

#include <Eigen/Dense>

#include <vector>

#include "symsep/criteria.hpp"
#include "symsep/states.hpp"

namespace symsep {

/// Operator Schmidt decomposition rho = sum_k L_k M_k (x) M_k with signed
/// real coefficients (sorted descending) and orthonormal Hermitian
/// observables. Signs stay on the coefficients, never on the observables.
struct SchmidtDecomposition {
  Eigen::VectorXd coefficients;
  std::vector<Eigen::MatrixXcd> observables;
};

/// Decomposes a permutationally invariant state by eigendecomposing the
/// real symmetric coefficient matrix T[k][l] = Tr(rho M_k (x) M_l).
/// Throws NotPermutationallyInvariantError when T is not symmetric.
SchmidtDecomposition schmidt_decompose(const BipartiteState& s,
                                       const LocalOrthogonalBasis& basis);

/// For a symmetric state, checks that the partial transpose is positive
/// exactly when every Schmidt coefficient is nonnegative (both sides read
/// at the 1e-8 boundary band). Throws NotSymmetricError.
bool ppt_iff_nonnegative_check(const BipartiteState& s);

/// Builds O = sum_k c_k A_k^{(x)parties} for parties = 2 or 4 from
/// Hermitian generators. Throws NonHermitianGeneratorError / UnsupportedError.
///
/// Positive semidefinite members of the four-party family are PPT across
/// every 2:2 partition when every generator satisfies A^T = +/-A (the
/// Pauli-type generators of the Smolin family do); for generic complex
/// Hermitian generators that partial transpose can acquire small negative
/// eigenvalues.
Eigen::MatrixXcd quasi_mixture_build(const std::vector<double>& coeffs,
                                     const std::vector<Eigen::MatrixXcd>& ops,
                                     int parties);

}  // namespace symsep
