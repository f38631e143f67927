#include "diracspec/product.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

namespace diracspec {

namespace {
const cplx I{0.0, 1.0};
const double SQRT1_2 = 1.0 / std::sqrt(2.0);
}  // namespace

FiberEigenvalueList load_eigenvalue_list(std::istream& in) {
  nlohmann::json j;
  in >> j;
  FiberEigenvalueList evs;
  for (const auto& e : j.at("eigenvalues")) {
    EigenvalueEntry entry;
    entry.value = e.at("value").get<double>();
    entry.multiplicity = e.value("multiplicity", 1);
    if (entry.multiplicity < 1)
      throw std::invalid_argument("eigenvalue list: multiplicity >= 1 required");
    evs.push_back(entry);
  }
  if (evs.empty()) throw std::invalid_argument("eigenvalue list: empty");
  return evs;
}

FiberEigenvalueList load_eigenvalue_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("eigenvalue list: cannot open " + path);
  return load_eigenvalue_list(in);
}

std::string eigenvalue_list_json(const FiberEigenvalueList& evs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : evs)
    arr.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return nlohmann::json{{"eigenvalues", arr}}.dump(2) + "\n";
}

FiberEigenvalueList friedrich_torus_eigenvalues(int N, const std::vector<int>& delta,
                                                long zmax, bool literal) {
  if (N < 1) throw std::invalid_argument("friedrich: N >= 1 required");
  if (static_cast<int>(delta.size()) != 2 * N)
    throw std::invalid_argument("friedrich: delta must have 2N components");
  for (int d : delta)
    if (d != 0 && d != 1) throw std::invalid_argument("friedrich: delta components in {0,1}");
  if (zmax < 0) throw std::invalid_argument("friedrich: zmax >= 0 required");

  const int mult_per_sign = 1 << (N - 1);
  FiberEigenvalueList evs;
  auto add = [&](double value, int mult) {
    for (auto& e : evs) {
      if (std::abs(e.value - value) <= tol::dedup) {
        e.multiplicity += mult;
        return;
      }
    }
    evs.push_back({value, mult});
  };

  for (const LatticeIndex& z : lattice_window(2 * N, zmax)) {
    double sum = 0.0;
    for (int j = 0; j < 2 * N; ++j) {
      const double term = literal
                              ? static_cast<double>(z[j]) * (1.0 + 0.5 * delta[j])
                              : static_cast<double>(z[j]) + 0.5 * delta[j];
      sum += term * term;
    }
    const double root = std::sqrt(sum);
    add(root, mult_per_sign);
    add(-root, mult_per_sign);
  }
  std::sort(evs.begin(), evs.end(),
            [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.value < b.value; });
  return evs;
}

SplitSpinor split(const Eigen::VectorXcd& psi) {
  const Eigen::Index dim = psi.size();
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("split: spinor dimension must be a power of two >= 2");
  SplitSpinor s;
  s.plus.resize(dim / 2);
  s.minus.resize(dim / 2);
  for (Eigen::Index a = 0; a < dim / 2; ++a) {
    s.plus[a] = (psi[2 * a] + I * psi[2 * a + 1]) * SQRT1_2;
    s.minus[a] = (psi[2 * a] - I * psi[2 * a + 1]) * SQRT1_2;
  }
  return s;
}

Eigen::VectorXcd unsplit(const SplitSpinor& s) {
  if (s.plus.size() != s.minus.size())
    throw std::invalid_argument("unsplit: component dimension mismatch");
  Eigen::VectorXcd psi(2 * s.plus.size());
  for (Eigen::Index a = 0; a < s.plus.size(); ++a) {
    psi[2 * a] = (s.plus[a] + s.minus[a]) * SQRT1_2;
    psi[2 * a + 1] = I * (s.minus[a] - s.plus[a]) * SQRT1_2;
  }
  return psi;
}

SplitSpinor clifford_action_split(int axis, const SplitSpinor& s) {
  if (axis == 0) return SplitSpinor{-s.minus, -s.plus};
  if (axis == 1) return SplitSpinor{-s.minus, s.plus};
  throw std::invalid_argument("clifford_action_split: axis >= 2 needs the Delta_{0,2N} gammas");
}

SplitSpinor clifford_action_split(int axis, const SplitSpinor& s,
                                  const GammaSet& g_even) {
  if (axis < 2) return clifford_action_split(axis, s);
  if (axis >= g_even.sig.n() + 2)
    throw std::invalid_argument("clifford_action_split: axis out of range");
  if (g_even.dim() != s.plus.size())
    throw std::invalid_argument("clifford_action_split: split component does not match gammas");
  const Eigen::MatrixXcd& gj = g_even.gammas[axis - 2];
  return SplitSpinor{-(gj * s.plus), gj * s.minus};
}

Eigen::Matrix2cd product_block(double lambda_l, long k1, long k2) {
  Eigen::Matrix2cd m;
  m << -lambda_l, I * static_cast<double>(k1 - k2),
       I * static_cast<double>(k1 + k2), lambda_l;
  return m;
}

Eigen::Matrix2cd block_resolvent(double lambda_l, long k1, long k2, cplx lambda) {
  const double shift = lambda_l * lambda_l
                       - static_cast<double>(k1) * static_cast<double>(k1)
                       + static_cast<double>(k2) * static_cast<double>(k2);
  const cplx denom = lambda * lambda - shift;
  if (std::abs(denom) <= tol::singular(lambda, shift))
    throw SingularPoint("block_resolvent: lambda lies in the block spectrum");
  Eigen::Matrix2cd m;
  m << lambda - lambda_l, I * static_cast<double>(k1 - k2),
       I * static_cast<double>(k1 + k2), lambda + lambda_l;
  return (1.0 / denom) * m;
}

std::vector<PointValue> product_point_spectrum(const FiberEigenvalueList& evs, long K) {
  if (evs.empty()) throw std::invalid_argument("product_point_spectrum: empty eigenvalue list");
  if (K < 0) throw std::invalid_argument("product_point_spectrum: window K >= 0 required");
  std::vector<PointValue> out;
  for (size_t l = 0; l < evs.size(); ++l) {
    for (const LatticeIndex& k : lattice_window(2, K)) {
      // The radicand is evaluated in extended precision: lambda_l^2 can
      // cancel against k1^2 - k2^2 to rounding level, and the square root
      // amplifies that cancellation to ~1e-8 in plain double.
      const long double ll = evs[l].value;
      const long double shifted = ll * ll
                                  - static_cast<long double>(k[0]) * static_cast<long double>(k[0])
                                  + static_cast<long double>(k[1]) * static_cast<long double>(k[1]);
      const cplx root = shifted >= 0.0L
                            ? cplx(static_cast<double>(std::sqrt(shifted)), 0.0)
                            : cplx(0.0, static_cast<double>(std::sqrt(-shifted)));
      const double radicand = static_cast<double>(shifted);
      const LatticeIndex witness{static_cast<long>(l), k[0], k[1]};
      if (radicand == 0.0) {
        merge_point_value(out, cplx{0.0, 0.0}, witness, 2 * evs[l].multiplicity);
      } else {
        merge_point_value(out, root, witness, evs[l].multiplicity);
        merge_point_value(out, -root, witness, evs[l].multiplicity);
      }
    }
  }
  sort_point_values(out);
  return out;
}

FiberFamily product_fiber_family(const FiberEigenvalueList& evs) {
  if (evs.empty()) throw std::invalid_argument("product_fiber_family: empty eigenvalue list");
  FiberFamily fam;
  fam.lattice_dim = 2;
  fam.fiber_dim = static_cast<int>(2 * evs.size());
  fam.at = [evs](const LatticeIndex& k) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * evs.size(), 2 * evs.size());
    for (size_t l = 0; l < evs.size(); ++l)
      a.block(2 * l, 2 * l, 2, 2) = product_block(evs[l].value, k[0], k[1]);
    return a;
  };
  return fam;
}

}  // namespace diracspec
