#include "diracspec/symbol.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace diracspec {

namespace {
const cplx I{0.0, 1.0};
}

Eigen::MatrixXcd symbol_at(const GammaSet& g, const Eigen::VectorXd& x) {
  if (x.size() != g.sig.n())
    throw std::invalid_argument("symbol_at: vector length does not match signature");
  Eigen::VectorXd theta(x.size());
  for (int j = 0; j < g.sig.n(); ++j) theta[j] = g.sig.kappa(j) * x[j];
  return I * gamma_of(g, theta);
}

Eigen::MatrixXcd resolvent_at(const GammaSet& g, const Eigen::VectorXd& x,
                              cplx lambda) {
  const double xx = g.sig.quadratic(x);
  const cplx denom = lambda * lambda - xx;
  if (std::abs(denom) <= tol::singular(lambda, xx))
    throw SingularPoint("resolvent_at: lambda^2 - <x,x> vanishes; lambda lies in the fiber point spectrum");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(g.dim(), g.dim());
  return (lambda * id + symbol_at(g, x)) / denom;
}

std::vector<cplx> fiber_eigenvalues(const Signature& sig, const Eigen::VectorXd& x) {
  const double xx = sig.quadratic(x);
  const cplx root = std::sqrt(cplx(xx, 0.0));
  const Eigen::Index half = sig.spinor_dim() / 2;
  std::vector<cplx> out;
  out.reserve(2 * half);
  for (Eigen::Index i = 0; i < half; ++i) out.push_back(root);
  for (Eigen::Index i = 0; i < half; ++i) out.push_back(-root);
  return out;
}

std::vector<cplx> fiber_eigenvalues_dense(const GammaSet& g, const Eigen::VectorXd& x) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(symbol_at(g, x), false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double operator_norm(const Eigen::MatrixXcd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
}

double resolvent_norm(const GammaSet& g, const Eigen::VectorXd& x, cplx lambda) {
  return operator_norm(resolvent_at(g, x, lambda));
}

}  // namespace diracspec
