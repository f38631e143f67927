#pragma once

#include <string>
#include <vector>

#include "diracspec/multop.hpp"

namespace diracspec {

// Point spectrum of the Dirac operator on the flat torus T^{p,q} with the
// trivial spin structure: { +-sqrt(<k,k>) : k in Z^n }, enumerated over
// |k|_inf <= K.  Every value carries its witnessing lattice points; the
// multiplicity inside each fiber is 2^{m-1} per sign.
struct TorusSpectrumReport {
  Signature sig;
  long window = 0;
  std::vector<PointValue> point;
  // The complement is continuous spectrum; membership off the point set is
  // only ever witnessed by sampled resolvent scans, never decided.
  std::string continuous_note;
};

TorusSpectrumReport torus_point_spectrum(const Signature& sig, long K);

// Finite-section oracle: eigensolve the truncated block operator of the
// symbol family (in quad precision, see eigenvalues_quad) and compare with
// the closed-form value set.  The assembled dense matrix is diagonalized
// when its dimension stays below assemble_cap; above it the blocks are
// diagonalized one by one, which is the same operator in its invariant
// decomposition.
struct TorusOracleCheck {
  double hausdorff = 0.0;
  long total_dim = 0;
  bool assembled = false;
};

TorusOracleCheck torus_oracle_check(const Signature& sig, long K,
                                    long assemble_cap = 128,
                                    long oracle_cap = oracle_cap_from_env());

// Resolvent-norm divergence evidence for sigma(D) = C on R^{p,q} / T^{p,q}.
//
// For lambda != 0 the scan walks the null ray x = a (e_1 + e_{p+1}),
// a = step, 2*step, ..., and records the closed-form resolvent norm
// together with the analytic lower bound |a ||A(X_0)|| - |lambda|| /
// |lambda|^2 from the reverse triangle inequality.  For lambda = 0 the
// scan approaches the null direction on the Euclidean unit sphere at
// offsets eps = 1e-1 .. 1e-6 and records the 1/|<x,x>| growth.
struct MinkowskiScan {
  cplx lambda;
  std::string ray;               // "null" or "sphere"
  std::vector<double> params;    // ray parameter per sample
  std::vector<double> norms;
  std::vector<double> lower_bounds;
  bool bounds_respected = false;
  long first_exceed = -1;  // first sample index with norm > tol::divergence
};

MinkowskiScan minkowski_continuous_evidence(const GammaSet& g, cplx lambda,
                                            long j_max, double step = 1.0,
                                            bool stop_after_exceed = false);

}  // namespace diracspec
