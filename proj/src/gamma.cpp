#include "diracspec/gamma.hpp"

#include <Eigen/Eigenvalues>
#include <random>

namespace diracspec {

namespace {

const cplx I{0.0, 1.0};

Eigen::Matrix2cd mat_E() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd mat_U1() {
  Eigen::Matrix2cd u;
  u << I, 0.0, 0.0, -I;
  return u;
}

Eigen::Matrix2cd mat_U2() {
  Eigen::Matrix2cd u;
  u << 0.0, I, I, 0.0;
  return u;
}

Eigen::Matrix2cd mat_T() {
  Eigen::Matrix2cd t;
  t << 0.0, -I, I, 0.0;
  return t;
}

Eigen::MatrixXcd kron_chain(const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

// gamma_j for even total dimension 2m; 1-based j, tau keyed on p.
std::vector<Eigen::MatrixXcd> even_gammas(int m, int p) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(2 * m);
  for (int j = 1; j <= 2 * m; ++j) {
    const int t = (j - 1) / 2;
    std::vector<Eigen::Matrix2cd> factors;
    factors.reserve(m);
    for (int s = 0; s < m - 1 - t; ++s) factors.push_back(mat_E());
    factors.push_back(j % 2 == 1 ? mat_U1() : mat_U2());
    for (int s = 0; s < t; ++s) factors.push_back(mat_T());
    const cplx tau = (j <= p) ? I : cplx{1.0, 0.0};
    out.push_back(tau * kron_chain(factors));
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd beta_matrix(const Signature& sig,
                             const std::vector<Eigen::MatrixXcd>& gammas,
                             BetaConvention convention) {
  const Eigen::Index dim = sig.spinor_dim();
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 0; j < sig.p; ++j) b = b * gammas[j];
  cplx scale{1.0, 0.0};
  if (convention == BetaConvention::CaseSplit) {
    const int r = sig.p % 4;
    if (r == 2 || r == 3) scale = I;
  } else {
    switch ((sig.p * (sig.p - 1) / 2) % 4) {
      case 0: scale = {1.0, 0.0}; break;
      case 1: scale = I; break;
      case 2: scale = {-1.0, 0.0}; break;
      case 3: scale = -I; break;
    }
  }
  return scale * b;
}

GammaSet build_gammas(const Signature& sig) {
  GammaSet g;
  g.sig = sig;
  const int n = sig.n();
  const int m = sig.m();
  if (n % 2 == 0) {
    g.gammas = even_gammas(m, sig.p);
  } else {
    g.gammas = even_gammas(m, sig.p);
    std::vector<Eigen::Matrix2cd> ts(m, mat_T());
    const cplx tau = (n <= sig.p) ? I : cplx{1.0, 0.0};
    g.gammas.push_back(tau * I * kron_chain(ts));
  }
  g.beta = beta_matrix(sig, g.gammas, BetaConvention::CaseSplit);
  return g;
}

GammaSet build_gammas(int p, int q, int dim_cap) {
  return build_gammas(make_signature(p, q, dim_cap));
}

Eigen::MatrixXcd gamma_of(const GammaSet& g, const Eigen::VectorXd& x) {
  if (x.size() != g.sig.n())
    throw std::invalid_argument("gamma_of: vector length does not match signature");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(g.dim(), g.dim());
  for (int j = 0; j < g.sig.n(); ++j) acc += x[j] * g.gammas[j];
  return acc;
}

Eigen::VectorXcd clifford_multiply(const GammaSet& g, const Eigen::VectorXd& x,
                                   const Eigen::VectorXcd& v) {
  if (v.size() != g.dim())
    throw std::invalid_argument("clifford_multiply: spinor length does not match module");
  return gamma_of(g, x) * v;
}

cplx hermitian_product(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("hermitian_product: dimension mismatch");
  return (v.array() * w.array().conjugate()).sum();
}

cplx indefinite_product(const GammaSet& g, const Eigen::VectorXcd& v,
                        const Eigen::VectorXcd& w) {
  if (v.size() != g.dim() || w.size() != g.dim())
    throw std::invalid_argument("indefinite_product: dimension mismatch");
  return hermitian_product(g.beta * v, w);
}

CliffordIdentityReport verify_clifford_identities(const GammaSet& g) {
  CliffordIdentityReport rep;
  const int n = g.sig.n();
  const Eigen::Index dim = g.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double form = (j == k) ? g.sig.kappa(j) : 0.0;
      const Eigen::MatrixXcd anti =
          g.gammas[j] * g.gammas[k] + g.gammas[k] * g.gammas[j] + 2.0 * form * id;
      rep.max_anticommutator_error =
          std::max(rep.max_anticommutator_error, anti.cwiseAbs().maxCoeff());
    }
    const Eigen::MatrixXcd sq = g.gammas[j] * g.gammas[j] + g.sig.kappa(j) * id;
    rep.max_square_error = std::max(rep.max_square_error, sq.cwiseAbs().maxCoeff());
    rep.max_trace_error = std::max(rep.max_trace_error, std::abs(g.gammas[j].trace()));
  }

  rep.beta_hermiticity_error = (g.beta - g.beta.adjoint()).cwiseAbs().maxCoeff();
  rep.beta_square_error = (g.beta * g.beta - id).cwiseAbs().maxCoeff();

  if (g.sig.p > 0 && g.sig.q > 0) {
    rep.beta_checked = true;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.beta);
    const Eigen::VectorXd ev = es.eigenvalues();
    Eigen::Index plus = 0, minus = 0;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      worst = std::max(worst, std::abs(std::abs(ev[i]) - 1.0));
      (ev[i] > 0 ? plus : minus) += 1;
    }
    rep.beta_eigenvalue_error = worst;
    rep.beta_balanced = (plus == dim / 2 && minus == dim / 2);
  }
  return rep;
}

InvarianceReport verify_compact_invariance(const GammaSet& g, int samples,
                                           unsigned seed) {
  if (samples < 1)
    throw std::invalid_argument("verify_compact_invariance: samples >= 1 required");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> count(0, 3);

  const int n = g.sig.n();
  const Eigen::Index dim = g.dim();
  auto unit_block_vector = [&](int lo, int hi) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int j = lo; j < hi; ++j) {
        x[j] = gauss(rng);
        norm2 += x[j] * x[j];
      }
    } while (norm2 < 1e-6);
    x /= std::sqrt(norm2);
    return x;
  };

  InvarianceReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    int k1 = g.sig.p > 0 ? count(rng) : 0;
    int k2 = g.sig.q > 0 ? count(rng) : 0;
    if (k1 + k2 == 0) (g.sig.p > 0 ? k1 : k2) = 1;

    Eigen::MatrixXcd elem = Eigen::MatrixXcd::Identity(dim, dim);
    for (int i = 0; i < k1; ++i)
      elem = elem * gamma_of(g, unit_block_vector(0, g.sig.p));
    for (int i = 0; i < k2; ++i)
      elem = elem * gamma_of(g, unit_block_vector(g.sig.p, n));

    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = cplx(gauss(rng), gauss(rng));
    v.normalize();
    rep.max_deviation = std::max(rep.max_deviation, std::abs((elem * v).norm() - 1.0));
  }
  return rep;
}

}  // namespace diracspec
