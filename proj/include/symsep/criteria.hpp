#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "symsep/states.hpp"

namespace symsep {

/// A complete set of d^2 Hermitian local observables with
/// Tr(M_k M_l) = delta_kl.
struct LocalOrthogonalBasis {
  int d = 0;
  std::vector<Eigen::MatrixXcd> observables;
};

/// Result of evaluating the expectation-value matrix for an arbitrary
/// (possibly non-orthogonal, possibly incomplete) operator set.
struct EtaResult {
  Eigen::MatrixXcd eta;
  bool tomographically_complete = false;
};

/// Hermitian observable attaining the smallest partial-transpose eigenvalue
/// of a symmetric state as <A (x) A>.
struct ExtremalObservable {
  Eigen::MatrixXcd a;
  double value = 0.0;
};

/// Values and verdicts for the six separability criteria. The per-criterion
/// "violated" flags certify entanglement for symmetric states; for general
/// states only the PPT, CCNR and covariance flags do.
struct CriteriaReport {
  double ppt_min_eigenvalue = 0.0;
  double ccnr_trace_norm = 0.0;
  double eta_min_eigenvalue = 0.0;
  double corr_min_eigenvalue = 0.0;
  double covariance_lhs = 0.0;
  double covariance_rhs = 0.0;
  bool ppt_violated = false;
  bool ccnr_violated = false;
  bool a_tensor_a_violated = false;
  bool eta_violated = false;
  bool correlation_violated = false;
  bool covariance_violated = false;
  bool symmetric = false;
  bool permutationally_invariant = false;
};

/// Partial transpose on the first subsystem:
/// out(k*d+m, l*d+n) = rho(l*d+m, k*d+n).
Eigen::MatrixXcd partial_transpose(const BipartiteState& s);

/// Realignment: out(k*d+m, l*d+n) = rho(k*d+l, m*d+n).
Eigen::MatrixXcd realign(const BipartiteState& s);

/// Reduced states by index contraction over the other subsystem.
Eigen::MatrixXcd reduced_state_a(const BipartiteState& s);
Eigen::MatrixXcd reduced_state_b(const BipartiteState& s);

/// Generalized Gell-Mann construction: identity/sqrt(d), d-1 diagonal
/// traceless matrices, then (|k><l|+|l><k|)/sqrt2 and i(|k><l|-|l><k|)/sqrt2
/// for each k < l.
LocalOrthogonalBasis hermitian_basis(int d);

/// The d^2 matrix units |k><l| in row-major order (k*d + l).
std::vector<Eigen::MatrixXcd> matrix_unit_basis(int d);

/// Expectation-value matrix eta[i][j] = Tr(rho * B_i (x) B_j^dag) for a
/// basis of exactly d^2 operators. Throws BasisSizeMismatchError.
Eigen::MatrixXcd expectation_value_matrix(
    const BipartiteState& s, const std::vector<Eigen::MatrixXcd>& basis);

/// Same matrix for an arbitrary operator set, with a completeness flag
/// computed from the rank of the Gram matrix of the vectorized operators.
EtaResult expectation_value_matrix_general(
    const BipartiteState& s, const std::vector<Eigen::MatrixXcd>& ops);

/// Correlation matrix C[k][l] = <M_k (x) M_l> - <M_k (x) 1><1 (x) M_l>.
/// Real-valued; symmetric for permutationally invariant states.
Eigen::MatrixXd correlation_matrix(const BipartiteState& s,
                                   const LocalOrthogonalBasis& basis);

/// Covariance inequality of the criteria list: returns
/// (||C||_1^2, [1 - Tr rho_A^2][1 - Tr rho_B^2]).
std::pair<double, double> covariance_condition(
    const BipartiteState& s, const LocalOrthogonalBasis& basis);

/// For a symmetric state, finds a Hermitian A with Tr(A^2) = 1 whose
/// correlation <A (x) A> equals the minimal partial-transpose eigenvalue.
/// Throws NotSymmetricError.
ExtremalObservable extremal_observable(const BipartiteState& s,
                                       double sym_tol = kHermiticitySlack);

/// Samples `trials` random Hermitian unit-norm observables A and checks
/// Tr(rho^{T_A} * A^T (x) A) >= -1e-9 for a PPT symmetric state (the
/// partially transposed state is a valid density matrix there, and the
/// expression equals Tr(rho * A (x) A)).
/// Throws NotSymmetricError / NotPptError.
bool observation3_check(const BipartiteState& s, int trials,
                        std::uint64_t seed);

/// Transposes every qubit in p.left.
Eigen::MatrixXcd multiqubit_partial_transpose(const MultiQubitState& s,
                                              const Bipartition& p);

/// Realignment across a half/half bipartition (p.left plays the role of the
/// first subsystem). Throws BadPartitionError if the halves differ in size.
Eigen::MatrixXcd multiqubit_realign(const MultiQubitState& s,
                                    const Bipartition& p);

/// Evaluates all six criteria at the given verdict tolerance.
CriteriaReport full_report(const BipartiteState& s,
                           const LocalOrthogonalBasis& basis,
                           double tol = kPsdSlack);

}  // namespace symsep
