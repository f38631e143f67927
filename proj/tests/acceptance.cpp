// Acceptance suite: one check per release criterion, each printed as a
// single [PASS]/[FAIL] line with the measured figure of merit.  Exit code
// is the number of failed criteria.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diracspec/gamma.hpp"
#include "diracspec/multop.hpp"
#include "diracspec/product.hpp"
#include "diracspec/quasi_iso.hpp"
#include "diracspec/symbol.hpp"
#include "diracspec/torus.hpp"

using namespace diracspec;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& metric) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), metric.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// 1. Anticommutation and squares, exact, every signature with 2 <= n <= 8.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 0; p <= n; ++p) {
      const CliffordIdentityReport rep = verify_clifford_identities(build_gammas(p, n - p));
      worst = std::max({worst, rep.max_anticommutator_error, rep.max_square_error});
    }
  }
  const double dt = seconds_since(t0);
  report(1, worst == 0.0 && dt < 5.0,
         "clifford anticommutators and squares exact for all 2 <= p+q <= 8",
         fmt("max entry error %.1e, %.2f s", worst, dt));
}

// 2. Indefinite-form signature: spec(beta) = {+1, -1}, equal multiplicity.
void criterion_2() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 1; p < n; ++p) {
      const GammaSet g = build_gammas(p, n - p);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.beta);
      Eigen::Index plus = 0, minus = 0;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        worst = std::max(worst, std::abs(std::abs(es.eigenvalues()[i]) - 1.0));
        (es.eigenvalues()[i] > 0 ? plus : minus) += 1;
      }
      ok = ok && plus == g.dim() / 2 && minus == g.dim() / 2;
    }
  }
  ok = ok && worst <= 1e-12;
  report(2, ok, "beta eigenvalues +-1 with multiplicity 2^{m-1} for 0 < p < n",
         fmt("max |lambda| deviation %.1e", worst));
}

// 3. Torus closed form vs dense finite-section eigensolver.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    for (long K = 0; K <= 3; ++K)
      worst = std::max(worst, torus_oracle_check(Signature{p, q}, K).hausdorff);
  }
  const double dt = seconds_since(t0);
  report(3, worst <= 1e-9 && dt < 10.0,
         "torus spectrum equals the truncated block-operator spectrum, K <= 3",
         fmt("hausdorff %.1e, %.2f s", worst, dt));
}

// 4. sigma(D) = C evidence on R^{1,1} and T^{1,1}.
void criterion_4() {
  const GammaSet g = build_gammas(1, 1);
  std::mt19937 rng(0xd15ac);
  std::uniform_real_distribution<double> radius(0.1, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  // the point set of T^{1,1} up to |lambda| <= 3: +-sqrt(c), |c| <= 9
  std::vector<cplx> point_set;
  for (long c = -9; c <= 9; ++c) {
    const cplx r = std::sqrt(cplx(static_cast<double>(c), 0.0));
    point_set.push_back(r);
    point_set.push_back(-r);
  }

  bool ok = true;
  double worst_margin = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    cplx lambda;
    double gap = 0.0;
    do {
      const double r = radius(rng), a = angle(rng);
      lambda = cplx(r * std::cos(a), r * std::sin(a));
      gap = std::numeric_limits<double>::infinity();
      for (cplx v : point_set) gap = std::min(gap, std::abs(lambda - v));
    } while (gap < 1e-3);

    const long j_cap = static_cast<long>(std::ceil(1e4 * (1.0 + std::norm(lambda))));
    // lattice ray on T^{1,1} and a non-integer continuum ray on R^{1,1}
    for (double step : {1.0, 0.7}) {
      const MinkowskiScan scan =
          minkowski_continuous_evidence(g, lambda, j_cap, step, true);
      ok = ok && scan.bounds_respected && scan.first_exceed >= 0;
      worst_margin = std::max(
          worst_margin, static_cast<double>(scan.norms.size()) / static_cast<double>(j_cap));
    }
  }
  report(4, ok,
         "null-ray resolvent norms exceed 1e3 within budget and respect the "
         "analytic lower bound (20 random lambda, lattice and continuum rays)",
         fmt("worst sample fraction of budget %.3f", worst_margin));
}

// 5. Product spectrum against blocks, formula, and the resolvent display.
void criterion_5() {
  const FiberEigenvalueList evs = friedrich_torus_eigenvalues(1, {0, 0}, 3);
  const long K = 3;
  const auto spectrum = product_point_spectrum(evs, K);

  std::vector<cplx> closed;
  for (const auto& pv : spectrum) closed.push_back(pv.value);

  std::vector<cplx> numeric;
  std::vector<cplx> formula;
  for (const auto& e : evs) {
    for (const LatticeIndex& k : lattice_window(2, K)) {
      const auto ev = eigenvalues_quad(product_block(e.value, k[0], k[1]));
      numeric.insert(numeric.end(), ev.begin(), ev.end());
      const long double ll = e.value;
      const long double shifted = ll * ll -
                                  static_cast<long double>(k[0]) * static_cast<long double>(k[0]) +
                                  static_cast<long double>(k[1]) * static_cast<long double>(k[1]);
      const cplx root = shifted >= 0.0L
                            ? cplx(static_cast<double>(std::sqrt(shifted)), 0.0)
                            : cplx(0.0, static_cast<double>(std::sqrt(-shifted)));
      formula.push_back(root);
      formula.push_back(-root);
    }
  }
  const double block_dist = hausdorff_distance(closed, numeric);

  // Every reported value must be bit-exactly one of the formula outputs;
  // the formula multiset in turn is covered by the report up to the ulp
  // spread of deduplicated data-level duplicates.
  bool contained_exact = true;
  for (cplx c : closed) {
    bool hit = false;
    for (cplx f : formula) hit = hit || (c == f);
    contained_exact = contained_exact && hit;
  }
  double cover_spread = 0.0;
  for (cplx f : formula) {
    double best = std::numeric_limits<double>::infinity();
    for (cplx c : closed) best = std::min(best, std::abs(f - c));
    cover_spread = std::max(cover_spread, best / (1.0 + std::abs(f)));
  }

  // || (lambda^2 - lambda_l^2) M_l'(a_j) x_j ||^2 = (lambda + lambda_l)^2 + 4 j^2
  // along a_j = j (1,-1), x_j the second block basis vector, lambda = 1/2.
  const cplx lambda{0.5, 0.0};
  double worst_identity = 0.0;
  for (const auto& e : evs) {
    for (long j = 1; j <= 100; ++j) {
      const Eigen::Matrix2cd r = block_resolvent(e.value, j, -j, lambda);
      const cplx denom = lambda * lambda - e.value * e.value;
      const Eigen::Vector2cd xj(0.0, 1.0);
      const double lhs = (denom * r * xj).squaredNorm();
      const double rhs = std::norm(lambda + e.value) + 4.0 * static_cast<double>(j * j);
      worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / (1.0 + rhs));
    }
  }

  report(5,
         block_dist <= 1e-9 && contained_exact && cover_spread <= 1e-12 &&
             worst_identity <= 1e-9,
         "product spectrum matches block eigensolves, the closed formula "
         "(bit-exact values), and the block-resolvent norm display (j <= 100)",
         fmt("block hausdorff %.1e, identity error %.1e", block_dist, worst_identity));
}

// 6. The chi-splitting: norm identity and the three Clifford action rules.
void criterion_6() {
  std::mt19937 rng(0xc6);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int N : {1, 2}) {
    const GammaSet g_full = build_gammas(1, 2 * N + 1);
    const GammaSet g_even = build_gammas(0, 2 * N);
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXcd psi(g_full.dim());
      for (Eigen::Index i = 0; i < psi.size(); ++i) psi[i] = cplx(gauss(rng), gauss(rng));
      const SplitSpinor s = split(psi);

      const double norm_gap =
          std::abs(std::real(hermitian_product(psi, psi)) -
                   (s.plus.squaredNorm() + s.minus.squaredNorm())) /
          (1.0 + psi.squaredNorm());
      worst = std::max(worst, norm_gap);

      for (int axis = 0; axis < 2 * N + 2; ++axis) {
        const double rule_gap = (unsplit(clifford_action_split(axis, s, g_even)) -
                                 g_full.gammas[axis] * psi)
                                    .norm() /
                                psi.norm();
        worst = std::max(worst, rule_gap);
      }
    }
  }
  report(6, worst <= 1e-12,
         "chi-splitting norm identity and Clifford action rules, N in {1,2}, "
         "100 random spinors each",
         fmt("worst relative deviation %.1e", worst));
}

// 7. Quasi-isometry semi-decision.
void criterion_7() {
  const Grid grid = uniform_grid_1d(0.0, 10.0 * M_PI, 2000);
  const BoostField parallel =
      boost_field_from_angle(grid, [](const std::vector<double>&) { return 0.0; });
  const BoostField wave = boost_field_from_angle(
      grid, [](const std::vector<double>& m) { return std::sin(m[0]); });
  const QuasiIsoVerdict bounded = decide_quasi_isometry(parallel, wave);
  const bool sin_ok = bounded.quasi_isometric && bounded.bound <= std::exp(4.0) + 1e-6;

  bool growth_ok = true;
  for (double extent : {6.0, 10.0, 14.0}) {
    const Grid growing = uniform_grid_1d(0.0, extent, 200);
    const BoostField flat =
        boost_field_from_angle(growing, [](const std::vector<double>&) { return 0.0; });
    const BoostField linear = boost_field_from_angle(
        growing, [](const std::vector<double>& m) { return m[0]; });
    growth_ok = growth_ok && !decide_quasi_isometry(flat, linear).quasi_isometric;
  }

  Grid torus = uniform_grid_1d(0.0, 14.0, 200);
  torus.periodic = true;
  const BoostField flat_t =
      boost_field_from_angle(torus, [](const std::vector<double>&) { return 0.0; });
  const BoostField linear_t =
      boost_field_from_angle(torus, [](const std::vector<double>& m) { return m[0]; });
  const bool periodic_ok = decide_quasi_isometry(flat_t, linear_t).quasi_isometric;

  report(7, sin_ok && growth_ok && periodic_ok,
         "sin field quasi-isometric with C <= e^4, linear field yields "
         "unboundedness evidence, periodic grid always quasi-isometric",
         fmt("observed C %.6f vs e^4 = %.6f", bounded.bound, std::exp(4.0)));
}

// 8. CLI determinism: byte-identical reports across two runs.
void criterion_8(const char* cli) {
  if (!cli) {
    report(8, false, "cli determinism", "no CLI path supplied");
    return;
  }
  auto slurp = [](const char* path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  };
  const std::string base = std::string(cli) +
                           " spectrum torus --sig 1,1 --window 2 --format json --out ";
  const int rc1 = std::system((base + "acceptance_run1.json").c_str());
  const int rc2 = std::system((base + "acceptance_run2.json").c_str());
  const std::string a = slurp("acceptance_run1.json");
  const std::string b = slurp("acceptance_run2.json");
  std::remove("acceptance_run1.json");
  std::remove("acceptance_run2.json");
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  report(8, ok, "byte-identical torus report across two CLI runs",
         fmt("%.0f bytes", static_cast<double>(a.size())));
}

}  // namespace

int main(int argc, char** argv) {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(argc > 1 ? argv[1] : nullptr);
  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
  return g_failures;
}
