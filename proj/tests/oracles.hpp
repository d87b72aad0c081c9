// Test-only reference computations, kept independent of the library code
// paths they check: definitional sums, closed forms and power iteration.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace oracles {

using Complex = std::complex<double>;

inline Eigen::MatrixXcd naive_kron(const Eigen::MatrixXcd& a,
                                   const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    for (Eigen::Index l = 0; l < a.cols(); ++l)
      for (Eigen::Index m = 0; m < b.rows(); ++m)
        for (Eigen::Index n = 0; n < b.cols(); ++n)
          out(k * b.rows() + m, l * b.cols() + n) = a(k, l) * b(m, n);
  return out;
}

inline Eigen::MatrixXcd matrix_unit(int d, int k, int l) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(k, l) = 1.0;
  return m;
}

inline Complex naive_trace_product(const Eigen::MatrixXcd& rho,
                                   const Eigen::MatrixXcd& x) {
  Complex total = 0.0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r)
    for (Eigen::Index c = 0; c < rho.cols(); ++c) total += rho(r, c) * x(c, r);
  return total;
}

// Partial transpose built from its definitional expansion
// rho^{T_A} = sum rho_{lk,mn} |k><l| (x) |m><n|.
inline Eigen::MatrixXcd definitional_partial_transpose(
    const Eigen::MatrixXcd& rho, int d) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Complex coeff = rho(l * d + m, k * d + n);  // rho_{lk,mn}
          out += coeff *
                 naive_kron(matrix_unit(d, k, l), matrix_unit(d, m, n));
        }
  return out;
}

// Realignment built from rho^R = sum rho_{km,ln} |k><l| (x) |m><n|.
inline Eigen::MatrixXcd definitional_realign(const Eigen::MatrixXcd& rho,
                                             int d) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Complex coeff = rho(k * d + l, m * d + n);  // rho_{km,ln}
          out += coeff *
                 naive_kron(matrix_unit(d, k, l), matrix_unit(d, m, n));
        }
  return out;
}

// Closed-form eigenvalues of a 2x2 Hermitian matrix [[a, b], [conj b, c]].
inline std::pair<double, double> eig2_hermitian(double a, Complex b,
                                                double c) {
  const double mean = 0.5 * (a + c);
  const double radius =
      std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  return {mean - radius, mean + radius};
}

// Smallest eigenvalue by shifted power iteration on s*1 - H.
inline double power_min_eigenvalue(const Eigen::MatrixXcd& h,
                                   int iters = 20000) {
  const double shift = h.norm() + 1.0;
  const Eigen::MatrixXcd shifted =
      shift * Eigen::MatrixXcd::Identity(h.rows(), h.cols()) - h;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(h.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) += Complex(0.01 * double(i + 1), 0.003 * double(i + 1));
  v /= v.norm();
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    v = shifted * v;
    const double norm = v.norm();
    v /= norm;
    lambda = norm;
  }
  lambda = (v.adjoint() * shifted * v)(0).real();
  return shift - lambda;
}

inline Eigen::VectorXcd bell_triplet_vector() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

inline Eigen::VectorXcd bell_singlet_vector() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

inline Eigen::MatrixXcd bell_triplet_density() {
  const Eigen::VectorXcd v = bell_triplet_vector();
  return v * v.adjoint();
}

inline Eigen::MatrixXcd bell_singlet_density() {
  const Eigen::VectorXcd v = bell_singlet_vector();
  return v * v.adjoint();
}

inline bool exactly_equal(const Eigen::MatrixXcd& a,
                          const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

}  // namespace oracles
