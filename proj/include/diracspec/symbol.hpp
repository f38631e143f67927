#pragma once

#include <Eigen/Dense>
#include <vector>

#include "diracspec/gamma.hpp"
#include "diracspec/signature.hpp"

namespace diracspec {

// Fourier symbol of the flat Dirac operator:
//   A(x) = i theta(x). = i sum_j kappa_j x_j gamma_j,
// theta flipping the time-like coordinates.  Satisfies
// A(x)^2 = <x,x> id, is linear in x and traceless.
Eigen::MatrixXcd symbol_at(const GammaSet& g, const Eigen::VectorXd& x);

// (lambda - A(x))^{-1} = (lambda + A(x)) / (lambda^2 - <x,x>).
// Throws SingularPoint when |lambda^2 - <x,x>| falls below the relative
// guard tol::singular, i.e. lambda lies in the point spectrum of the fiber.
Eigen::MatrixXcd resolvent_at(const GammaSet& g, const Eigen::VectorXd& x,
                              cplx lambda);

// Closed-form fiber spectrum: +sqrt(<x,x>) and -sqrt(<x,x>) (principal
// branch), each with multiplicity 2^{m-1}.
std::vector<cplx> fiber_eigenvalues(const Signature& sig, const Eigen::VectorXd& x);

// Same multiset through a dense eigensolver on A(x); the independent route
// the closed form is checked against.
std::vector<cplx> fiber_eigenvalues_dense(const GammaSet& g, const Eigen::VectorXd& x);

// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& a);

double resolvent_norm(const GammaSet& g, const Eigen::VectorXd& x, cplx lambda);

}  // namespace diracspec
