#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "diracspec/gamma.hpp"
#include "diracspec/signature.hpp"

namespace diracspec {

using LatticeIndex = std::vector<long>;

// Family of fiber operators A(k) over Z^n (or N^n), k evaluated lazily.
// Evaluation must be pure: at(k) called twice with the same k yields the
// same matrix, so families are safe to share across threads.
struct FiberFamily {
  int lattice_dim = 0;
  int fiber_dim = 0;
  bool natural_domain = false;  // index N^n instead of Z^n
  std::function<Eigen::MatrixXcd(const LatticeIndex&)> at;
};

// All lattice points with |k|_inf <= K in lexicographic order
// (coordinates ascending, leftmost slowest).
std::vector<LatticeIndex> lattice_window(int dim, long K, bool natural_domain = false);

// One deduplicated point-spectrum value with all witnessing lattice points
// and the multiplicity of the value inside each witnessing fiber.
struct PointValue {
  cplx value;
  std::vector<LatticeIndex> witnesses;
  std::vector<int> multiplicities;  // aligned with witnesses
};

// Deterministic report order: by (|value|, arg value), witnesses
// lexicographic.
void sort_point_values(std::vector<PointValue>& values);

void merge_point_value(std::vector<PointValue>& out, cplx value,
                       const LatticeIndex& witness, int multiplicity,
                       double tolerance = tol::dedup);

// Union of the fiber eigenvalue multisets over the window, through a dense
// eigensolver on each fiber, deduplicated to tol::dedup.
std::vector<PointValue> point_spectrum(const FiberFamily& fam, long K,
                                       double dedup_tolerance = tol::dedup);

struct ScanSample {
  LatticeIndex index;
  double norm = 0.0;
  bool singular = false;  // lambda hit the fiber spectrum at this sample
};

using Ray = std::function<LatticeIndex(long)>;

// The null ray a_j = j (e_1 + e_{p+1}) along which torus fiber resolvents
// diverge.
Ray null_ray(const Signature& sig);

// ||(lambda - A(ray(j)))^{-1}|| for j = 1..j_max; samples where lambda lies
// in the fiber spectrum are flagged singular instead of carrying a norm.
std::vector<ScanSample> resolvent_scan(const FiberFamily& fam, cplx lambda,
                                       const Ray& ray, long j_max);

enum class Verdict { Point, ContinuousEvidence, ResolventBounded };

std::string to_string(Verdict v);

struct SpectrumClassification {
  Verdict verdict = Verdict::ResolventBounded;
  cplx lambda;
  // Point: witnessing lattice points.
  std::vector<LatticeIndex> point_witnesses;
  // Scan record (ContinuousEvidence carries the strictly increasing tail
  // that crossed the divergence threshold).
  std::vector<ScanSample> scan;
  std::vector<double> increasing_tail;
};

// Semi-decision of the spectrum membership of lambda: Point if some fiber
// in the window has lambda as an eigenvalue, ContinuousEvidence if the
// resolvent scan exceeds the divergence threshold with a strictly
// increasing tail, ResolventBounded otherwise.  Boundedness over the
// infinite lattice is not decidable from samples; the verdict names what
// was checked.  Point takes precedence when both tests fire.
SpectrumClassification classify(const FiberFamily& fam, cplx lambda, long K,
                                const Ray& ray, long j_max,
                                double divergence_threshold = tol::divergence,
                                double point_tolerance = tol::floating);

FiberFamily adjoint_family(const FiberFamily& fam);

long oracle_cap_from_env();  // DIRAC_SPECTRA_ORACLE_CAP, default 4096

// Finite section of M_A: block-diagonal direct sum of the fibers over the
// window, lexicographic block order.  Its eigenvalue multiset equals the
// union of the fiber multisets; this is the brute-force oracle for
// point_spectrum.
Eigen::MatrixXcd truncated_matrix(const FiberFamily& fam, long K,
                                  long oracle_cap = oracle_cap_from_env());

// The Dirac symbol as a fiber family over Z^n.
FiberFamily dirac_fiber_family(const GammaSet& g);

// Dense eigensolver run in quad precision.  Fibers on the null cone are
// defective (nilpotent Jordan blocks), where a double-precision solve can
// only resolve eigenvalues to ~sqrt(eps) = 1e-8; the quad solve brings the
// smearing below 1e-15, so oracle comparisons at 1e-9 stay meaningful.
std::vector<cplx> eigenvalues_quad(const Eigen::MatrixXcd& a);

// max over a of dist(a, B), symmetrized.
double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace diracspec
