#pragma once

#include <Eigen/Dense>
#include <vector>

#include "diracspec/signature.hpp"

namespace diracspec {

// Dirac spinor representation of the complexified Clifford algebra of
// signature (p,q), realized by Kronecker products of the 2x2 generators
//
//   E = id,  U1 = i*sigma_3,  U2 = i*sigma_1,  T = sigma_2.
//
// The j-th generator image (1-based j, even n = 2m) is
//   gamma_j = tau(j) E x ... x E x U_{sigma(j)} x T^{x floor((j-1)/2)}
// with tau(j) = i for time-like axes and 1 otherwise, sigma(j) = 1 for odd
// and 2 for even j.  For odd n the first projection of the direct-sum
// representation is used: the first n-1 matrices coincide with the even
// construction and gamma_n = tau(n) * i * T^{x m}.
//
// Kronecker factors are ordered left to right, leftmost slowest.  All
// entries lie in {0, +1, -1, +i, -i}, so the algebraic identities below
// hold exactly in double arithmetic.
struct GammaSet {
  Signature sig;
  std::vector<Eigen::MatrixXcd> gammas;  // n matrices of size 2^m x 2^m
  Eigen::MatrixXcd beta;                 // matrix of the element b

  Eigen::Index dim() const { return sig.spinor_dim(); }
};

// Scalar convention for the element b defining the fundamental symmetry.
// CaseSplit is the default: b = e_1...e_p, times i when p = 2,3 mod 4.
// ExponentForm is the alternative normalization b = i^{p(p-1)/2} e_1...e_p;
// the two agree up to a global sign and are not silently reconciled.
enum class BetaConvention { CaseSplit, ExponentForm };

GammaSet build_gammas(const Signature& sig);
GammaSet build_gammas(int p, int q, int dim_cap = default_dim_cap);

Eigen::MatrixXcd beta_matrix(const Signature& sig,
                             const std::vector<Eigen::MatrixXcd>& gammas,
                             BetaConvention convention);

// Kronecker product, A slowest index.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// x. as a matrix: sum_j x_j gamma_j.
Eigen::MatrixXcd gamma_of(const GammaSet& g, const Eigen::VectorXd& x);

// (x.)v
Eigen::VectorXcd clifford_multiply(const GammaSet& g, const Eigen::VectorXd& x,
                                   const Eigen::VectorXcd& v);

// <v,w>_Delta = sum_i v_i conj(w_i)
cplx hermitian_product(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w);

// <v,w> = <b.v, w>_Delta, the indefinite inner product of signature
// (2^{m-1}, 2^{m-1}) on the spinor module (defined for 0 < p < n).
cplx indefinite_product(const GammaSet& g, const Eigen::VectorXcd& v,
                        const Eigen::VectorXcd& w);

// Exact-arithmetic identity checks on a constructed representation.
struct CliffordIdentityReport {
  double max_anticommutator_error = 0.0;  // gamma_j gamma_k + gamma_k gamma_j + 2<e_j,e_k> id
  double max_square_error = 0.0;          // gamma_j^2 + kappa_j id
  double max_trace_error = 0.0;           // |tr gamma_j|
  double beta_hermiticity_error = 0.0;
  double beta_square_error = 0.0;         // beta^2 - id
  double beta_eigenvalue_error = 0.0;     // distance of spec(beta) from {-1,+1}
  bool beta_balanced = false;             // +1 and -1 each with multiplicity 2^{m-1}
  bool beta_checked = false;              // only meaningful for 0 < p < n
};

CliffordIdentityReport verify_clifford_identities(const GammaSet& g);

// Draws random elements of the maximal-compact generating set (Clifford
// products of time-like unit vectors y, <y,y> = -1, and space-like unit
// vectors x, <x,x> = +1) and reports the worst deviation of |g.v|_Delta
// from |v|_Delta.  The standard Hermitian product is invariant under this
// subgroup, so the deviation must stay below tol::floating.
struct InvarianceReport {
  int samples = 0;
  double max_deviation = 0.0;
};

InvarianceReport verify_compact_invariance(const GammaSet& g, int samples,
                                           unsigned seed = 0x5eed);

}  // namespace diracspec
