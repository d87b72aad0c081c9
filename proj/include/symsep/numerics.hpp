#pragma once

#include <Eigen/Dense>

#include <complex>

#include "symsep/errors.hpp"

namespace symsep {

using Complex = std::complex<double>;

// Central tolerance defaults. The separability criteria compare quantities
// that coincide in exact arithmetic, so every module draws its slack from
// this one place. All of them can be overridden per call.
inline constexpr double kHermiticitySlack = 1e-9;
inline constexpr double kPsdSlack = 1e-9;
inline constexpr double kEigenResidual = 1e-10;
inline constexpr double kOrthonormalitySlack = 1e-10;
inline constexpr double kBoundaryBand = 1e-8;
inline constexpr double kSeesawConvergence = 1e-12;
inline constexpr double kWitnessDetection = 1e-6;

/// Eigendecomposition of a Hermitian matrix.
/// Eigenvalues are sorted ascending; eigenvector columns are orthonormal and
/// reconstruct the input to within kEigenResidual * ||H||_F.
struct EigResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Throws if any entry of m is NaN or infinite.
void require_finite(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// Relative Hermiticity check: ||H - H^dag||_F <= tol * max(1, ||H||_F).
bool is_hermitian_within(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                         double tol = kHermiticitySlack);

/// Hermitian eigendecomposition. Throws NonSquareError / NonHermitianError.
EigResult hermitian_eig(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                        double herm_tol = kHermiticitySlack);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                      double herm_tol = kHermiticitySlack);

/// Singular values, sorted descending.
Eigen::VectorXd singular_values(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// Sum of singular values.
double trace_norm(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// Kronecker product with the row convention
/// kron(A,B)(k*rowsB + m, l*colsB + n) = A(k,l) * B(m,n).
template <typename DerivedA, typename DerivedB>
Eigen::MatrixXcd kron(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    for (Eigen::Index l = 0; l < a.cols(); ++l)
      out.block(k * b.rows(), l * b.cols(), b.rows(), b.cols()) =
          a(k, l) * b.derived();
  return out;
}

/// Hilbert-Schmidt inner product Tr(A^dag B). Throws ShapeMismatchError.
Complex hs_inner(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                 const Eigen::Ref<const Eigen::MatrixXcd>& b);

/// Row-major vectorization, v(k*cols + m) = M(k, m).
Eigen::VectorXcd vec_row_major(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// Inverse of vec_row_major.
Eigen::MatrixXcd unvec_row_major(const Eigen::Ref<const Eigen::VectorXcd>& v,
                                 Eigen::Index rows, Eigen::Index cols);

}  // namespace symsep
