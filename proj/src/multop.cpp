#include "diracspec/multop.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdlib>

#include "diracspec/symbol.hpp"

namespace diracspec {

std::vector<LatticeIndex> lattice_window(int dim, long K, bool natural_domain) {
  if (dim < 1) throw std::invalid_argument("lattice_window: dimension >= 1 required");
  if (K < 0) throw std::invalid_argument("lattice_window: window K >= 0 required");
  const long lo = natural_domain ? 0 : -K;
  const long per_axis = natural_domain ? K + 1 : 2 * K + 1;

  double total = 1.0;
  for (int d = 0; d < dim; ++d) total *= static_cast<double>(per_axis);
  if (total > 1e7) throw std::invalid_argument("lattice_window: window too large");

  std::vector<LatticeIndex> out;
  out.reserve(static_cast<size_t>(total));
  LatticeIndex k(dim, lo);
  while (true) {
    out.push_back(k);
    int axis = dim - 1;
    while (axis >= 0) {
      if (++k[axis] <= K) break;
      k[axis] = lo;
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

namespace {

bool lex_less(const LatticeIndex& a, const LatticeIndex& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Order: (|value|, arg value); arg in (-pi, pi].  Values within solver
// noise of the real or imaginary axis are snapped onto it first, so the
// branch cut at arg = pi cannot scramble the order.
cplx snap_to_axes(cplx v) {
  const double guard = 1e-12 * (1.0 + std::abs(v));
  if (std::abs(v.imag()) <= guard) v.imag(0.0);
  if (std::abs(v.real()) <= guard) v.real(0.0);
  return v;
}

bool value_less(cplx a, cplx b) {
  a = snap_to_axes(a);
  b = snap_to_axes(b);
  const double ra = std::abs(a), rb = std::abs(b);
  if (std::abs(ra - rb) > 1e-12 * (1.0 + std::min(ra, rb))) return ra < rb;
  return std::arg(a) < std::arg(b);
}

std::vector<std::pair<cplx, int>> cluster_multiset(std::vector<cplx> values,
                                                   double tolerance) {
  std::vector<std::pair<cplx, int>> clusters;
  for (cplx v : values) {
    bool merged = false;
    for (auto& [rep, count] : clusters) {
      if (std::abs(v - rep) <= tolerance) {
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(v, 1);
  }
  return clusters;
}

}  // namespace

void sort_point_values(std::vector<PointValue>& values) {
  for (auto& pv : values) {
    std::vector<size_t> order(pv.witnesses.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return lex_less(pv.witnesses[a], pv.witnesses[b]);
    });
    std::vector<LatticeIndex> w;
    std::vector<int> m;
    w.reserve(order.size());
    m.reserve(order.size());
    for (size_t i : order) {
      w.push_back(pv.witnesses[i]);
      m.push_back(pv.multiplicities[i]);
    }
    pv.witnesses = std::move(w);
    pv.multiplicities = std::move(m);
  }
  std::sort(values.begin(), values.end(),
            [](const PointValue& a, const PointValue& b) { return value_less(a.value, b.value); });
}

void merge_point_value(std::vector<PointValue>& out, cplx value,
                       const LatticeIndex& witness, int multiplicity,
                       double tolerance) {
  value = cplx(value.real() + 0.0, value.imag() + 0.0);  // normalize -0.0
  for (auto& pv : out) {
    if (std::abs(pv.value - value) <= tolerance) {
      for (size_t i = 0; i < pv.witnesses.size(); ++i) {
        if (pv.witnesses[i] == witness) {
          pv.multiplicities[i] += multiplicity;
          return;
        }
      }
      pv.witnesses.push_back(witness);
      pv.multiplicities.push_back(multiplicity);
      return;
    }
  }
  out.push_back(PointValue{value, {witness}, {multiplicity}});
}

std::vector<PointValue> point_spectrum(const FiberFamily& fam, long K,
                                       double dedup_tolerance) {
  std::vector<PointValue> out;
  for (const LatticeIndex& k : lattice_window(fam.lattice_dim, K, fam.natural_domain)) {
    for (auto [value, count] : cluster_multiset(eigenvalues_quad(fam.at(k)), dedup_tolerance))
      merge_point_value(out, value, k, count, dedup_tolerance);
  }
  sort_point_values(out);
  return out;
}

Ray null_ray(const Signature& sig) {
  return [sig](long j) {
    LatticeIndex k(sig.n(), 0);
    k[0] = j;
    k[sig.p] = j;
    return k;
  };
}

std::vector<ScanSample> resolvent_scan(const FiberFamily& fam, cplx lambda,
                                       const Ray& ray, long j_max) {
  std::vector<ScanSample> out;
  out.reserve(j_max);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(fam.fiber_dim, fam.fiber_dim);
  for (long j = 1; j <= j_max; ++j) {
    ScanSample sample;
    sample.index = ray(j);
    const Eigen::MatrixXcd a = fam.at(sample.index);
    double gap = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (cplx ev : eigenvalues_quad(a)) {
      gap = std::min(gap, std::abs(lambda - ev));
      scale = std::max(scale, std::abs(ev));
    }
    if (gap <= 1e-12 * (1.0 + scale + std::abs(lambda))) {
      sample.singular = true;
    } else {
      sample.norm = operator_norm((lambda * id - a).partialPivLu().inverse());
    }
    out.push_back(std::move(sample));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Point: return "Point";
    case Verdict::ContinuousEvidence: return "ContinuousEvidence";
    default: return "ResolventBounded";
  }
}

SpectrumClassification classify(const FiberFamily& fam, cplx lambda, long K,
                                const Ray& ray, long j_max,
                                double divergence_threshold,
                                double point_tolerance) {
  SpectrumClassification cls;
  cls.lambda = lambda;

  for (const LatticeIndex& k : lattice_window(fam.lattice_dim, K, fam.natural_domain)) {
    for (cplx ev : eigenvalues_quad(fam.at(k))) {
      if (std::abs(lambda - ev) <= point_tolerance * (1.0 + std::abs(lambda))) {
        cls.point_witnesses.push_back(k);
        break;
      }
    }
  }
  if (!cls.point_witnesses.empty()) {
    cls.verdict = Verdict::Point;
    return cls;
  }

  cls.scan = resolvent_scan(fam, lambda, ray, j_max);
  for (const auto& s : cls.scan) {
    if (s.singular) {
      // lambda sits in the spectrum of a ray fiber: Point, witnessed there.
      cls.verdict = Verdict::Point;
      cls.point_witnesses.push_back(s.index);
      return cls;
    }
  }

  const long tail_len = (j_max + 3) / 4;
  bool tail_increasing = static_cast<long>(cls.scan.size()) >= tail_len && tail_len >= 1;
  double max_norm = 0.0;
  for (const auto& s : cls.scan) max_norm = std::max(max_norm, s.norm);
  if (tail_increasing) {
    const size_t start = cls.scan.size() - static_cast<size_t>(tail_len);
    for (size_t i = start; i + 1 < cls.scan.size(); ++i) {
      if (!(cls.scan[i].norm < cls.scan[i + 1].norm)) {
        tail_increasing = false;
        break;
      }
    }
    if (tail_increasing)
      for (size_t i = start; i < cls.scan.size(); ++i)
        cls.increasing_tail.push_back(cls.scan[i].norm);
  }

  if (max_norm > divergence_threshold && tail_increasing) {
    cls.verdict = Verdict::ContinuousEvidence;
  } else {
    cls.verdict = Verdict::ResolventBounded;
    cls.increasing_tail.clear();
  }
  return cls;
}

FiberFamily adjoint_family(const FiberFamily& fam) {
  FiberFamily adj = fam;
  auto base = fam.at;
  adj.at = [base](const LatticeIndex& k) { return base(k).adjoint().eval(); };
  return adj;
}

long oracle_cap_from_env() {
  if (const char* s = std::getenv("DIRAC_SPECTRA_ORACLE_CAP")) {
    const long v = std::atol(s);
    if (v > 0) return v;
  }
  return 4096;
}

Eigen::MatrixXcd truncated_matrix(const FiberFamily& fam, long K, long oracle_cap) {
  const auto window = lattice_window(fam.lattice_dim, K, fam.natural_domain);
  const long total = static_cast<long>(window.size()) * fam.fiber_dim;
  if (total > oracle_cap)
    throw OracleCapExceeded("truncated_matrix: total dimension " + std::to_string(total) +
                            " exceeds oracle cap " + std::to_string(oracle_cap));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
  long offset = 0;
  for (const LatticeIndex& k : window) {
    out.block(offset, offset, fam.fiber_dim, fam.fiber_dim) = fam.at(k);
    offset += fam.fiber_dim;
  }
  return out;
}

FiberFamily dirac_fiber_family(const GammaSet& g) {
  FiberFamily fam;
  fam.lattice_dim = g.sig.n();
  fam.fiber_dim = static_cast<int>(g.dim());
  fam.at = [g](const LatticeIndex& k) {
    Eigen::VectorXd x(k.size());
    for (size_t j = 0; j < k.size(); ++j) x[static_cast<Eigen::Index>(j)] = static_cast<double>(k[j]);
    return symbol_at(g, x);
  };
  return fam;
}

std::vector<cplx> eigenvalues_quad(const Eigen::MatrixXcd& a) {
  using quad = boost::multiprecision::cpp_bin_float_quad;
  using quadc = std::complex<quad>;
  using MatrixXq = Eigen::Matrix<quadc, Eigen::Dynamic, Eigen::Dynamic>;
  MatrixXq aq(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      aq(r, c) = quadc(quad(a(r, c).real()), quad(a(r, c).imag()));
  Eigen::ComplexEigenSolver<MatrixXq> es(aq, false);
  std::vector<cplx> out;
  out.reserve(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    out.emplace_back(es.eigenvalues()(i).real().convert_to<double>(),
                     es.eigenvalues()(i).imag().convert_to<double>());
  return out;
}

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  auto directed = [](const std::vector<cplx>& from, const std::vector<cplx>& to) {
    double worst = 0.0;
    for (cplx v : from) {
      double best = std::numeric_limits<double>::infinity();
      for (cplx w : to) best = std::min(best, std::abs(v - w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace diracspec
