#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "symsep/schmidt.hpp"
#include "symsep/states.hpp"

namespace symsep {

enum class WitnessKind { generic, symmetric, symmetric_mixed };

std::string to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(const std::string& name);

/// Entanglement witness c * 1 - M with a certified product bound c.
/// A negative evaluation certifies entanglement; for kind == symmetric the
/// verdict is only meaningful on symmetric states.
struct Witness {
  Eigen::MatrixXcd op;
  double constant = 0.0;
  WitnessKind kind = WitnessKind::symmetric;
};

/// Outcome of the multi-start see-saw maximization of <psi psi|M|psi psi>.
struct ProductOptResult {
  double best_value = 0.0;
  Eigen::VectorXcd best_vector;
  int restarts_used = 0;
  double converged_fraction = 0.0;
};

/// Maximizes <psi psi| M |psi psi> over unit vectors by alternating
/// eigenvector ascent on the swap-symmetrized single-site contraction of M,
/// restarted from `restarts` seeded random starts. Deterministic for a
/// fixed seed; ties between restarts go to the lowest sub-seed.
/// Throws NonHermitianError.
ProductOptResult optimize_symmetric_product(const Eigen::MatrixXcd& m,
                                            int restarts = 200,
                                            int iters = 2000,
                                            std::uint64_t seed = 42);

/// Brute-force lower bound on sup <psi psi|M|psi psi> over a deterministic
/// quasi-uniform grid (resolution points per angle, first component real).
/// Only d <= 3; throws DimensionTooLargeError.
double certify_by_grid(const Eigen::MatrixXcd& m, int resolution);

/// Schmidt-based witness: decompose the state, keep the `kept` largest
/// coefficients, set f_k = sqrt(max(lambda_k, 0)) and build
/// M = sum f_k M_k (x) M_k with the see-saw product bound as constant.
Witness build_schmidt_witness(const BipartiteState& s, int kept,
                              int restarts = 200, std::uint64_t seed = 42);

/// The witness for the built-in two-qutrit bound entangled state: square
/// roots of its six largest Schmidt coefficients, see-saw constant over at
/// least 200 restarts.
Witness build_rho33_witness(int restarts = 200, std::uint64_t seed = 42);

/// c - Tr(M rho). Throws DimensionMismatchError.
double evaluate(const Witness& w, const BipartiteState& s);

/// For M = sum_k c_k M_k (x) M_k, returns sum_k c_k Tr(M_k rho)^2, which
/// equals Tr(M rho (x) rho). Throws BadDecompositionError.
double product_value_mixed(const Eigen::VectorXd& coeffs,
                           const std::vector<Eigen::MatrixXcd>& ops,
                           const Eigen::MatrixXcd& rho);

/// Spot check of the witness-constant ordering for a positive semidefinite
/// symmetric M: locally optimized product pairs never beat the mixed
/// rho (x) rho samples, which never beat the see-saw symmetric bound.
/// Throws NotPsdError / NotSymmetricOperatorError.
bool witness_ordering_spotcheck(const Eigen::MatrixXcd& m, int samples,
                                std::uint64_t seed);

}  // namespace symsep
