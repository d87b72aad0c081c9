#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace symsep {

/// Deterministic random source used by every randomized routine.
///
/// The engine is std::mt19937_64 and all real-valued draws are derived from
/// raw 64-bit words (uniform via the top 53 bits, normals via Box-Muller),
/// so a run replays bit-for-bit from its seed on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Derives an independent sub-seed for stream `index` (splitmix64 mix).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * 0.7071067811865476, im * 0.7071067811865476};
  }

  Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = complex_gaussian();
    return g;
  }

  Eigen::VectorXcd unit_vector(Eigen::Index d) {
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = complex_gaussian();
    return v / v.norm();
  }

  /// Random Hermitian matrix with unit Hilbert-Schmidt norm.
  Eigen::MatrixXcd hermitian_unit(Eigen::Index d) {
    Eigen::MatrixXcd g = ginibre(d, d);
    Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    return h / h.norm();
  }

  /// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed by R).
  Eigen::MatrixXcd unitary(Eigen::Index d) {
    Eigen::MatrixXcd g = ginibre(d, d);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
      const std::complex<double> rii = r(i, i);
      if (std::abs(rii) > 0) q.col(i) *= rii / std::abs(rii);
    }
    return q;
  }

  /// Random point on the probability simplex.
  std::vector<double> simplex(int k) {
    std::vector<double> w(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& x : w) {
      x = -std::log(uniform());
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace symsep
