#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "diracspec/signature.hpp"

namespace diracspec {

// Uniform rectangular sample grid in R^d (or T^d when periodic).
struct Grid {
  std::vector<double> origin;
  std::vector<double> step;
  std::vector<long> count;
  bool periodic = false;

  int dim() const { return static_cast<int>(count.size()); }
  long size() const;
  std::vector<double> point(long flat) const;          // lexicographic, leftmost slowest
  std::vector<long> coords(long flat) const;
  bool on_boundary(long flat) const;
};

Grid uniform_grid_1d(double lo, double hi, long count, bool periodic = false);

// Sampled map into SO_0(p,q).  For signature (1,1) a scalar hyperbolic
// angle a(m) determines the frame
//   A(m) = [ cosh 2a   sinh 2a ]
//          [ sinh 2a   cosh 2a ].
struct BoostField {
  Signature sig;
  Grid grid;
  std::vector<Eigen::MatrixXd> frames;  // one n x n matrix per sample

  const Eigen::MatrixXd& at(long flat) const { return frames.at(flat); }
};

BoostField boost_field_from_angle(const Grid& grid,
                                  const std::function<double(const std::vector<double>&)>& angle);
BoostField boost_field_from_frames(const Signature& sig, const Grid& grid,
                                   std::vector<Eigen::MatrixXd> frames);

// Membership check A^T eta A = eta (relative tolerance) plus positivity of
// the time-block and space-block determinants, which pins the identity
// component.  Throws InvalidFrame.
void validate_frame(const Signature& sig, const Eigen::MatrixXd& frame);

struct FrameScan {
  double max_norm = 0.0;
  double max_inverse_norm = 0.0;
  long argmax = 0;
  long arg_inverse_max = 0;
};

FrameScan frame_norm_scan(const BoostField& field);

// For frames in O(p,q): A^{-1} = eta A^T eta.
Eigen::MatrixXd frame_inverse(const Signature& sig, const Eigen::MatrixXd& frame);

struct QuasiIsoVerdict {
  bool quasi_isometric = true;
  double bound = 1.0;  // smallest observed C >= 1 with C^{-1} h1 <= h2 <= C h1
  // Unboundedness evidence: strictly increasing record norms of the
  // transition frames along the scan, with their sample indices.
  std::vector<double> evidence_norms;
  std::vector<long> evidence_samples;
  std::string note;
};

// Samples the transition x(m) = A_1(m)^{-1} A_2(m) and applies the
// principal-bundle criterion: quasi-isometric on the samples iff both
// ||x(m)|| and ||x(m)^{-1}|| stay bounded; the observed constant is the
// square of the larger maximum.  On a periodic grid the verdict is always
// quasi-isometric.  Unboundedness evidence requires the norm records to
// exceed the divergence threshold while growing toward the grid boundary.
QuasiIsoVerdict decide_quasi_isometry(const BoostField& f1, const BoostField& f2,
                                      double threshold = tol::divergence);

// Induced Riemannian metric in the adapted frame:
// r(X,Y) = <A(m)^{-1} X, A(m)^{-1} Y>_Euclid.
double riemannian_metric_at(const BoostField& field, long flat,
                            const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

struct EqualityNote {
  std::string conclusion;  // "spectra coincide" or "no conclusion"
  std::string hypothesis;
};

// Consequence for the Dirac spectra of the two adapted Hilbert-space
// structures.  Quasi-isometry (on samples) yields spectral equality; for
// unbounded transitions no conclusion is available either way.  On a
// compact (periodic) domain equality holds unconditionally.
EqualityNote spectral_equality_report(const QuasiIsoVerdict& verdict,
                                      bool compact_domain = false);

// Grid file formats: JSON {"signature":[p,q], "grid":{...}, "frames":[...]}
// (or "angles":[...] for signature (1,1)); CSV with header m1..md followed
// by row-major frame entries.
BoostField load_boost_field_file(const std::string& path);

}  // namespace diracspec
