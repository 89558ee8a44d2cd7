#include "ladderops/polyeval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ladderops/quadrature.hpp"

namespace ladderops {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr int kStieltjesStartNodes = 16;
constexpr int kStieltjesMaxNodes = 4096;
constexpr double kStieltjesRelTol = 1e-12;

void require_table(const RecurrenceTable& table, int n, const char* what) {
  if (n < 0) throw ParameterError(std::string(what) + ": negative degree");
  if (n >= 1 && static_cast<std::size_t>(n - 1) >= table.alphas.size()) {
    throw ParameterError(std::string(what) + ": degree " + std::to_string(n) +
                         " needs coefficients up to index " + std::to_string(n - 1) +
                         ", table stops at " + std::to_string(table.max_index()));
  }
}

}  // namespace

PolyPair eval_recurrence(const RecurrenceTable& table, int n, double z) {
  require_table(table, n, "eval_recurrence");
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = (z - table.alphas[k]) * cur - table.betas[k] * prev;
    prev = cur;
    cur = next;
  }
  return {n, cur, prev, z};
}

PolyPair eval_recurrence(const JacobiParams& p, int n, double z) {
  return eval_recurrence(make_recurrence_table(p, std::max(n - 1, 0)), n, z);
}

double eval_numerator(const RecurrenceTable& table, double mu0, int n, double z) {
  require_table(table, n, "eval_numerator");
  if (n == 0) return 0.0;
  double prev = 0.0;
  double cur = mu0;
  for (int k = 1; k < n; ++k) {
    const double next = (z - table.alphas[k]) * cur - table.betas[k] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_derivative_recurrence(const RecurrenceTable& table, int n, double z) {
  require_table(table, n, "eval_derivative_recurrence");
  double p_prev = 0.0, p_cur = 1.0;
  double d_prev = 0.0, d_cur = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = table.alphas[k];
    const double b = table.betas[k];
    const double d_next = p_cur + (z - a) * d_cur - b * d_prev;
    const double p_next = (z - a) * p_cur - b * p_prev;
    d_prev = d_cur;
    d_cur = d_next;
    p_prev = p_cur;
    p_cur = p_next;
  }
  return d_cur;
}

double hyp2f1_terminating(int n, double b, double c, double y) {
  if (n < 0) throw ParameterError("hyp2f1_terminating: negative degree");
  const Wide wb = b;
  const Wide wc = c;
  const Wide wy = y;
  Wide term = 1;
  Wide sum = 1;
  for (int k = 0; k < n; ++k) {
    const Wide den = (wc + k) * (k + 1);
    if (den == 0) throw DegenerateError("hyp2f1_terminating: c is a non-positive integer");
    term = term * (k - n) * (wb + k) / den * wy;
    sum += term;
  }
  return static_cast<double>(sum);
}

double eval_hypergeometric(const JacobiParams& p, int n, double x) {
  if (n < 0) throw ParameterError("eval_hypergeometric: negative degree");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("eval_hypergeometric: x must lie in [-1, 1]");
  const double b = n + p.alpha + p.beta + 1.0;
  if (x <= 0.0) {
    return value_at_minus_one(p, n) * hyp2f1_terminating(n, b, p.beta + 1.0, 0.5 * (1.0 + x));
  }
  return value_at_one(p, n) * hyp2f1_terminating(n, b, p.alpha + 1.0, 0.5 * (1.0 - x));
}

double eval_derivative(const JacobiParams& p, int n, double z) {
  if (n < 0) throw ParameterError("eval_derivative: negative degree");
  if (n == 0) return 0.0;
  return n * eval_recurrence(p.shifted(1.0), n - 1, z).p_n;
}

StieltjesValue stieltjes_transform(const JacobiParams& p, double z) {
  p.validate();
  if (z == -1.0) {
    if (!(p.beta > 0.0)) throw DomainError("stieltjes_transform: F(-1) diverges for beta <= 0");
    return {z, -weight_mass({p.alpha, p.beta - 1.0})};
  }
  if (z == 1.0) {
    if (!(p.alpha > 0.0)) throw DomainError("stieltjes_transform: F(1) diverges for alpha <= 0");
    return {z, weight_mass({p.alpha - 1.0, p.beta})};
  }
  if (!(std::abs(z) > 1.0) || !std::isfinite(z)) {
    throw DomainError("stieltjes_transform: z must satisfy |z| > 1 or z = +-1");
  }
  auto f = [z](double y) { return 1.0 / (z - y); };
  double prev = integrate(gauss_rule(p, kStieltjesStartNodes), f);
  for (int m = 2 * kStieltjesStartNodes; m <= kStieltjesMaxNodes; m *= 2) {
    const double cur = integrate(gauss_rule(p, m), f);
    if (std::abs(cur - prev) <= kStieltjesRelTol * std::abs(cur)) return {z, cur};
    prev = cur;
  }
  throw NumericalFailure("stieltjes_transform: no convergence at z = " + std::to_string(z) +
                         " with " + std::to_string(kStieltjesMaxNodes) + " nodes");
}

double check_Rn_stieltjes_identity(const JacobiParams& p, int n) {
  if (!(p.beta > 0.0)) throw ParameterError("check_Rn_stieltjes_identity: requires beta > 0");
  if (n < 0) throw ParameterError("check_Rn_stieltjes_identity: negative degree");
  const RecurrenceTable table = make_recurrence_table(p, std::max(n, 1));
  const double pn = eval_recurrence(table, n, -1.0).p_n;
  const double qn = eval_numerator(table, weight_mass(p), n, -1.0);
  const double f = stieltjes_transform(p, -1.0).value;
  const double rhs = p.beta / norm_h(p, n) * pn * (qn - f * pn);
  const double R = ladder_R(p, n);
  return std::abs(R - rhs) / std::abs(R);
}

}  // namespace ladderops
