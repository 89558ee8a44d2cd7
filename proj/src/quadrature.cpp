#include "ladderops/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ladderops {

SymTridiag jacobi_matrix(const RecurrenceTable& table, int m) {
  if (m < 1) throw ParameterError("jacobi_matrix: order must be >= 1");
  if (static_cast<std::size_t>(m) > table.alphas.size()) {
    throw ParameterError("jacobi_matrix: table holds " + std::to_string(table.alphas.size()) +
                         " coefficients, order " + std::to_string(m) + " requested");
  }
  SymTridiag t;
  t.diagonal.assign(table.alphas.begin(), table.alphas.begin() + m);
  t.offdiagonal.resize(m - 1);
  for (int k = 1; k < m; ++k) {
    const double b = table.betas[k];
    if (!(b > 0.0)) {
      throw DomainError("jacobi_matrix: beta_" + std::to_string(k) + " is not positive");
    }
    t.offdiagonal[k - 1] = std::sqrt(b);
  }
  return t;
}

TridiagEigen eig_symtridiag(const SymTridiag& t) {
  const int n = static_cast<int>(t.diagonal.size());
  if (n == 0) return {};
  if (static_cast<int>(t.offdiagonal.size()) != n - 1) {
    throw ParameterError("eig_symtridiag: offdiagonal must have n-1 entries");
  }
  constexpr int kMaxSweeps = 50;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> d = t.diagonal;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiagonal.begin(), t.offdiagonal.end(), e.begin());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == kMaxSweeps) {
        throw NumericalFailure("eig_symtridiag: no convergence for eigenvalue " + std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        const double zf = z[i + 1];
        z[i + 1] = s * z[i] + c * zf;
        z[i] = c * z[i] - s * zf;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagEigen out;
  out.eigenvalues.reserve(n);
  out.first_components.reserve(n);
  for (int k : order) {
    out.eigenvalues.push_back(d[k]);
    out.first_components.push_back(z[k]);
  }
  return out;
}

QuadratureRule gauss_rule(const JacobiParams& p, int m) {
  if (m < 1) throw ParameterError("gauss_rule: need at least one node");
  p.validate();
  const RecurrenceTable table = make_recurrence_table(p, m - 1);
  const TridiagEigen eig = eig_symtridiag(jacobi_matrix(table, m));
  const double mu0 = weight_mass(p);
  QuadratureRule rule{p, m, eig.eigenvalues, std::vector<double>(m)};
  for (int i = 0; i < m; ++i) rule.weights[i] = mu0 * eig.first_components[i] * eig.first_components[i];
  return rule;
}

RecurrenceTable hankel_recurrence_oracle(const JacobiParams& p, int n_max) {
  if (n_max < 0 || n_max > kHankelMaxDegree) {
    throw ParameterError("hankel_recurrence_oracle: n_max must lie in [0, " +
                         std::to_string(kHankelMaxDegree) + "]");
  }
  // The Gram matrix loses about two digits per degree, so the orthogonalization
  // runs in extended precision on mu_j / mu_0 (the mass cancels in both ratios).
  using Real = long double;
  std::vector<Real> mu(2 * n_max + 2);
  for (std::size_t j = 0; j < mu.size(); ++j) mu[j] = normalized_moment(p, static_cast<int>(j));

  // <x^shift p, q> for coefficient vectors (lowest degree first)
  auto inner = [&](const std::vector<Real>& a, const std::vector<Real>& b, int shift) {
    Real sum = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) sum += a[i] * b[k] * mu[i + k + shift];
    }
    return sum;
  };

  std::vector<std::vector<Real>> polys;
  std::vector<Real> norms;
  RecurrenceTable table{p, std::vector<double>(n_max + 1), std::vector<double>(n_max + 1, 0.0)};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Real> v(n + 1, 0.0L);
    v[n] = 1.0L;
    for (int k = 0; k < n; ++k) {
      const Real c = inner(v, polys[k], 0) / norms[k];
      for (std::size_t i = 0; i < polys[k].size(); ++i) v[i] -= c * polys[k][i];
    }
    const Real h = inner(v, v, 0);
    if (!(h > 0.0L)) {
      throw NumericalFailure("hankel_recurrence_oracle: Gram matrix lost positivity at degree " +
                             std::to_string(n));
    }
    table.alphas[n] = static_cast<double>(inner(v, v, 1) / h);
    if (n >= 1) table.betas[n] = static_cast<double>(h / norms.back());
    polys.push_back(std::move(v));
    norms.push_back(h);
  }
  return table;
}

}  // namespace ladderops
