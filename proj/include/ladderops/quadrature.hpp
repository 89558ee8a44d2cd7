#ifndef LADDEROPS_QUADRATURE_HPP_
#define LADDEROPS_QUADRATURE_HPP_

#include <functional>
#include <span>
#include <vector>

#include "ladderops/jacobi_core.hpp"

namespace ladderops {

/// Gauss-Jacobi rule: ascending nodes in (-1, 1), positive weights summing to mu_0.
struct QuadratureRule {
  JacobiParams params;
  int m = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Symmetric tridiagonal matrix; offdiagonal has one entry fewer than diagonal.
struct SymTridiag {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
};

struct TridiagEigen {
  std::vector<double> eigenvalues;       // ascending
  std::vector<double> first_components;  // first entry of each unit eigenvector
};

/// Jacobi matrix of order m: diagonal alpha_0..alpha_{m-1}, offdiagonal sqrt(beta_1..beta_{m-1}).
SymTridiag jacobi_matrix(const RecurrenceTable& table, int m);

/**
 * Implicit-shift QL on a symmetric tridiagonal matrix, accumulating only the
 * first row of the eigenvector matrix. At most 50 sweeps per eigenvalue.
 */
TridiagEigen eig_symtridiag(const SymTridiag& t);

/// Golub-Welsch: nodes are the Jacobi-matrix eigenvalues, weights mu_0 * v_i(0)^2.
QuadratureRule gauss_rule(const JacobiParams& p, int m);

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

/**
 * Recurrence coefficients recovered from exact moments by Gram-Schmidt on the
 * monomials, in extended precision. Independent of every closed form; capped at n_max = 8.
 */
RecurrenceTable hankel_recurrence_oracle(const JacobiParams& p, int n_max);
inline constexpr int kHankelMaxDegree = 8;

}  // namespace ladderops

#endif  // LADDEROPS_QUADRATURE_HPP_
