#pragma once

#include <Eigen/Core>
#include <complex>
#include <stdexcept>

namespace diracspec {

using cplx = std::complex<double>;

// Tolerances used across the library.  The gamma-matrix construction is
// exact in Gaussian-integer arithmetic over doubles, so algebraic
// identities are compared against literal zero; anything that passes
// through an eigen/SVD routine gets tol::floating.
namespace tol {
inline constexpr double exact = 0.0;
inline constexpr double floating = 1e-12;
inline constexpr double dedup = 1e-8;
inline constexpr double divergence = 1e3;

// Relative guard for resolvent singularities.  Lattice inputs are exact
// integers and never trip this; continuum scans need it.
inline double singular(cplx lambda, double xx) {
  return 1e-9 * (1.0 + std::norm(lambda) + std::abs(xx));
}
}  // namespace tol

inline constexpr int default_dim_cap = 14;

// Pseudo-Euclidean signature (p,q): p time-like directions of square -1
// followed by q space-like directions of square +1.  Axis indices are
// 0-based throughout the library.
struct Signature {
  int p = 0;
  int q = 0;

  int n() const { return p + q; }
  int m() const { return n() / 2; }
  Eigen::Index spinor_dim() const { return Eigen::Index{1} << m(); }

  // kappa(j) = <e_j,e_j>
  double kappa(int j) const { return j < p ? -1.0 : 1.0; }

  // <x,y> = -x_1 y_1 - ... - x_p y_p + x_{p+1} y_{p+1} + ... + x_n y_n
  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    if (x.size() != n() || y.size() != n())
      throw std::invalid_argument("signature inner product: dimension mismatch");
    double s = 0.0;
    for (int j = 0; j < n(); ++j) s += kappa(j) * x[j] * y[j];
    return s;
  }

  double quadratic(const Eigen::VectorXd& x) const { return inner(x, x); }
};

// Validated constructor; rejects n < 2 and n > dim_cap.
inline Signature make_signature(int p, int q, int dim_cap = default_dim_cap) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature: p, q must be non-negative");
  if (p + q < 2) throw std::invalid_argument("signature: p+q >= 2 required");
  if (p + q > dim_cap) throw std::invalid_argument("signature: p+q exceeds dimension cap");
  return Signature{p, q};
}

struct SingularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace diracspec
