#include "symsep/numerics.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace symsep {

void require_finite(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  if (!m.allFinite()) throw ValidationError("matrix has NaN or Inf entries");
}

bool is_hermitian_within(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                         double tol) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, h.norm());
  return (h - h.adjoint()).norm() <= tol * scale;
}

EigResult hermitian_eig(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                        double herm_tol) {
  if (h.rows() != h.cols())
    throw NonSquareError("hermitian_eig: matrix is not square");
  require_finite(h);
  if (!is_hermitian_within(h, herm_tol))
    throw NonHermitianError("hermitian_eig: matrix is not Hermitian");
  // Work on the exact Hermitian part so the residual contract does not
  // depend on which triangle Eigen reads.
  Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Eigen::Ref<const Eigen::MatrixXcd>& h,
                      double herm_tol) {
  return hermitian_eig(h, herm_tol).eigenvalues(0);
}

Eigen::VectorXd singular_values(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  require_finite(m);
  if (m.rows() > 16 || m.cols() > 16) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

double trace_norm(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  return singular_values(m).sum();
}

Complex hs_inner(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                 const Eigen::Ref<const Eigen::MatrixXcd>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatchError("hs_inner: operands have different shapes");
  return (a.adjoint() * b).trace();
}

Eigen::VectorXcd vec_row_major(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  Eigen::VectorXcd v(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

Eigen::MatrixXcd unvec_row_major(const Eigen::Ref<const Eigen::VectorXcd>& v,
                                 Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw ShapeMismatchError("unvec_row_major: size mismatch");
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
  return m;
}

}  // namespace symsep
