#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "diracspec/gamma.hpp"
#include "diracspec/multop.hpp"

namespace diracspec {

// Spectrum of the Dirac operator on T^{1,1} x F.  The compact Riemannian
// factor F enters only through a truncation of its (real, discrete) Dirac
// spectrum; the fiber operator over k in Z^2 decomposes into 2x2 blocks
//           M_l(k) = [ -lambda_l    i(k1-k2) ]
//                    [  i(k1+k2)    lambda_l ]
// with eigenvalues +-sqrt(lambda_l^2 - k1^2 + k2^2).

struct EigenvalueEntry {
  double value = 0.0;
  int multiplicity = 1;
};

using FiberEigenvalueList = std::vector<EigenvalueEntry>;

// { "eigenvalues": [ {"value": ..., "multiplicity": ...} ] }
FiberEigenvalueList load_eigenvalue_list(std::istream& in);
FiberEigenvalueList load_eigenvalue_list_file(const std::string& path);
std::string eigenvalue_list_json(const FiberEigenvalueList& evs);

// Dirac spectrum of the flat Riemannian torus T^{2N} with spin structure
// delta in {0,1}^{2N}, truncated to |z|_inf <= zmax:
//   { +-sqrt( sum_j (z_j + delta_j/2)^2 ) : z in Z^{2N} },
// each sign with multiplicity 2^{N-1} per lattice witness.  literal=true
// switches to the reading z_j (1 + delta_j/2); the two coincide at
// delta = 0.
FiberEigenvalueList friedrich_torus_eigenvalues(int N, const std::vector<int>& delta,
                                                long zmax, bool literal = false);

// Splitting of Delta_{1,2N+1} along the last Kronecker slot,
// psi = psi_plus x u(+1) + psi_minus x u(-1) with u(eps) = (1, -eps i)/sqrt(2).
struct SplitSpinor {
  Eigen::VectorXcd plus;
  Eigen::VectorXcd minus;
};

SplitSpinor split(const Eigen::VectorXcd& psi);
Eigen::VectorXcd unsplit(const SplitSpinor& s);

// Clifford multiplication by e_j (0-based axis, 0 <= axis < 2N+2) in split
// coordinates:
//   e_1 (p,m) = (-m, -p),   e_2 (p,m) = (-m, +p),
//   e_j (p,m) = (-e_{j-2} p, e_{j-2} m)  for j > 2,
// where e_{j-2} acts through the Delta_{0,2N} gamma matrices g_even.
SplitSpinor clifford_action_split(int axis, const SplitSpinor& s,
                                  const GammaSet& g_even);
// Axes 0 and 1 act without the even gammas.
SplitSpinor clifford_action_split(int axis, const SplitSpinor& s);

Eigen::Matrix2cd product_block(double lambda_l, long k1, long k2);

// (lambda - M_l(k))^{-1}; throws SingularPoint on the block spectrum.
Eigen::Matrix2cd block_resolvent(double lambda_l, long k1, long k2, cplx lambda);

// { +-sqrt(lambda_l^2 - k1^2 + k2^2) : l, |k|_inf <= K }, deduplicated with
// witnesses [l, k1, k2] (l is the 0-based index into evs).
std::vector<PointValue> product_point_spectrum(const FiberEigenvalueList& evs, long K);

// The truncated fiber operator A(k) = diag(M_1(k), ..., M_L(k)) as a
// multop family over Z^2; the blocks decouple, so truncation in l is exact
// per block.
FiberFamily product_fiber_family(const FiberEigenvalueList& evs);

}  // namespace diracspec
