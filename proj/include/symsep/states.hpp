#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "symsep/numerics.hpp"

namespace symsep {

// Index convention, fixed globally: a bipartite operator on two d-level
// systems is stored as a d^2 x d^2 matrix with
//
//   rho(k*d + m, l*d + n) = <k m| rho |l n>,
//
// i.e. the first tensor factor ("Alice") is the major index. Multi-qubit
// operators use the same rule recursively, so qubit 0 is the most
// significant bit of the computational-basis index.

/// Validated density matrix on a d x d bipartite system.
struct BipartiteState {
  int d = 0;
  Eigen::MatrixXcd rho;
};

/// Validated density matrix on n qubits.
struct MultiQubitState {
  int n = 0;
  Eigen::MatrixXcd rho;
};

/// A split of qubit indices {0..n-1} into two non-empty sorted halves.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Checks Hermiticity, unit trace and positivity (min eigenvalue >= -tol).
/// Throws ValidationError on failure.
void validate_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                             double tol = kPsdSlack);

BipartiteState make_bipartite_state(int d, Eigen::MatrixXcd rho,
                                    double tol = kPsdSlack);
MultiQubitState make_multiqubit_state(int n, Eigen::MatrixXcd rho,
                                      double tol = kPsdSlack);

/// Builds a bipartition from the left index set. Throws BadPartitionError.
Bipartition make_bipartition(std::vector<int> left, int n);

/// Flip (swap) operator F with F |a b> = |b a>. Hermitian, unitary, F^2 = 1.
Eigen::MatrixXcd flip_operator(int d);

/// Projector onto the symmetric subspace, (1 + F)/2. Rank d(d+1)/2.
Eigen::MatrixXcd symmetric_projector(int d);

/// True iff F rho = rho F = rho within tol (Frobenius norm).
bool is_symmetric(const BipartiteState& s, double tol = kHermiticitySlack);

/// True iff F rho F = rho within tol.
bool is_permutationally_invariant(const BipartiteState& s,
                                  double tol = kHermiticitySlack);

/// The two-qutrit bound entangled state assembled from the five symmetric
/// basis vectors |alpha alpha>, (|alpha beta>+|beta alpha>)/sqrt2,
/// (|alpha gamma>+2|beta beta>+|gamma alpha>)/sqrt6,
/// (|gamma beta>+|beta gamma>)/sqrt2, |gamma gamma> with weights
/// 0.22, 0.176, 0.167, 0.254, 0.183 and coupling -0.059 between the first
/// and fourth of them.
BipartiteState builtin_rho33();

/// Generalized Smolin state on 2n qubits,
///   rho = 2^{-2n} [ 1^{(x)2n} + (-1)^n sum_{l=x,y,z} sigma_l^{(x)2n} ].
/// n = 2 is the four-qubit Smolin state. Throws DimensionTooLargeError when
/// 2n exceeds qubit_cap.
MultiQubitState smolin_state(int n, int qubit_cap = 8);

/// Random state supported on the symmetric subspace:
/// P_S G G^dag P_S normalized, G complex Ginibre with `rank` columns.
BipartiteState random_symmetric_state(int d, std::uint64_t seed,
                                      int rank = -1);

/// Random convex combination of `terms` symmetric product projectors
/// |phi phi><phi phi|. Separable by construction.
BipartiteState random_separable_symmetric_state(int d, int terms,
                                                std::uint64_t seed);

/// Random permutationally invariant state: a weighted mixture of a
/// symmetric-subspace state and an antisymmetric-subspace state.
BipartiteState random_permutationally_invariant_state(int d,
                                                      std::uint64_t seed);

}  // namespace symsep
