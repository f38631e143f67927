#include "diracspec/torus.hpp"

#include <cmath>

#include "diracspec/symbol.hpp"

namespace diracspec {

TorusSpectrumReport torus_point_spectrum(const Signature& sig, long K) {
  if (K < 0) throw std::invalid_argument("torus_point_spectrum: window K >= 0 required");
  TorusSpectrumReport rep;
  rep.sig = sig;
  rep.window = K;
  const int half = 1 << (sig.m() - 1);

  for (const LatticeIndex& k : lattice_window(sig.n(), K)) {
    Eigen::VectorXd x(sig.n());
    for (int j = 0; j < sig.n(); ++j) x[j] = static_cast<double>(k[j]);
    const double kk = sig.quadratic(x);
    const cplx root = std::sqrt(cplx(kk, 0.0));
    if (kk == 0.0) {
      merge_point_value(rep.point, cplx{0.0, 0.0}, k, 2 * half);
    } else {
      merge_point_value(rep.point, root, k, half);
      merge_point_value(rep.point, -root, k, half);
    }
  }
  sort_point_values(rep.point);
  rep.continuous_note =
      "every lambda off the listed point values belongs to the continuous "
      "spectrum; sampled null-ray scans provide divergence evidence, "
      "boundedness over the full lattice is never decided";
  return rep;
}

TorusOracleCheck torus_oracle_check(const Signature& sig, long K,
                                    long assemble_cap, long oracle_cap) {
  const GammaSet g = build_gammas(sig);
  const FiberFamily fam = dirac_fiber_family(g);
  const auto window = lattice_window(sig.n(), K);
  TorusOracleCheck check;
  check.total_dim = static_cast<long>(window.size()) * fam.fiber_dim;

  std::vector<cplx> numeric;
  numeric.reserve(check.total_dim);
  if (check.total_dim <= assemble_cap) {
    check.assembled = true;
    numeric = eigenvalues_quad(truncated_matrix(fam, K, oracle_cap));
  } else {
    // Above the assembly cap the block operator is diagonalized block by
    // block; the truncation is block-diagonal, so this is the same spectrum.
    for (const LatticeIndex& k : window) {
      const std::vector<cplx> ev = eigenvalues_quad(fam.at(k));
      numeric.insert(numeric.end(), ev.begin(), ev.end());
    }
  }

  std::vector<cplx> closed;
  for (const PointValue& pv : torus_point_spectrum(sig, K).point)
    closed.push_back(pv.value);
  check.hausdorff = hausdorff_distance(numeric, closed);
  return check;
}

MinkowskiScan minkowski_continuous_evidence(const GammaSet& g, cplx lambda,
                                            long j_max, double step,
                                            bool stop_after_exceed) {
  if (j_max < 2)
    throw std::invalid_argument("minkowski_continuous_evidence: j_max >= 2 required");
  MinkowskiScan scan;
  scan.lambda = lambda;
  scan.bounds_respected = true;

  const int n = g.sig.n();
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  x0[0] = 1.0;
  x0[g.sig.p] = 1.0;

  if (lambda != cplx{0.0, 0.0}) {
    scan.ray = "null";
    const double base_norm = operator_norm(symbol_at(g, x0));
    for (long j = 1; j <= j_max; ++j) {
      const double a = static_cast<double>(j) * step;
      const double norm = resolvent_norm(g, a * x0, lambda);
      const double bound =
          std::abs(a * base_norm - std::abs(lambda)) / std::norm(lambda);
      scan.params.push_back(a);
      scan.norms.push_back(norm);
      scan.lower_bounds.push_back(bound);
      if (norm < bound - 1e-9 * (1.0 + bound)) scan.bounds_respected = false;
      if (scan.first_exceed < 0 && norm > tol::divergence)
        scan.first_exceed = static_cast<long>(scan.norms.size()) - 1;
      if (stop_after_exceed && scan.first_exceed >= 0) break;
    }
  } else {
    // lambda = 0: approach the null direction on the Euclidean unit sphere
    // in the (e_1, e_{p+1}) plane; <x,x> = -cos(2t), null at t = pi/4.
    scan.ray = "sphere";
    for (int i = 1; i <= 6; ++i) {
      const double eps = std::pow(10.0, -i);
      const double t = M_PI / 4.0 - eps;
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      x[0] = std::cos(t);
      x[g.sig.p] = std::sin(t);
      const double xx = g.sig.quadratic(x);
      const double norm = resolvent_norm(g, x, lambda);
      const double bound = 1.0 / std::abs(xx);
      scan.params.push_back(eps);
      scan.norms.push_back(norm);
      scan.lower_bounds.push_back(bound);
      if (norm < bound - 1e-9 * (1.0 + bound)) scan.bounds_respected = false;
      if (scan.first_exceed < 0 && norm > tol::divergence)
        scan.first_exceed = static_cast<long>(scan.norms.size()) - 1;
    }
  }
  return scan;
}

}  // namespace diracspec
