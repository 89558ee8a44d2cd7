#include "ladderops/jacobi_core.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ladderops {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr int kLinearPochhammerLimit = 64;
constexpr double kIndeterminateBeta1 = 1e-9;

void require_index(int n, int lo, const char* what) {
  if (n < lo) {
    throw ParameterError(std::string(what) + ": index " + std::to_string(n) + " below " +
                         std::to_string(lo));
  }
}

}  // namespace

double recurrence_alpha(const JacobiParams& p, int n) {
  require_index(n, 0, "recurrence_alpha");
  const double s = p.alpha + p.beta;
  if (n == 0) {
    // (b^2 - a^2) / ((a+b)(a+b+2)) with the removable factor cancelled;
    // this is also the only form valid at a + b = 0.
    const double den = s + 2.0;
    if (den == 0.0) throw DegenerateError("recurrence_alpha: alpha + beta + 2 = 0");
    return (p.beta - p.alpha) / den;
  }
  const double d0 = s + 2.0 * n;
  const double d1 = d0 + 2.0;
  if (d0 == 0.0 || d1 == 0.0) {
    throw DegenerateError("recurrence_alpha: vanishing denominator at n=" + std::to_string(n));
  }
  return (p.beta - p.alpha) * (p.beta + p.alpha) / (d0 * d1);
}

double recurrence_beta(const JacobiParams& p, int n) {
  require_index(n, 1, "recurrence_beta");
  const double a = p.alpha;
  const double b = p.beta;
  const double s = a + b;
  if (n == 1 && std::abs(s + 1.0) < kIndeterminateBeta1) {
    // (n + a + b) / (2n + a + b - 1) is 0/0 here; use mu_2/mu_0 - (mu_1/mu_0)^2.
    return 4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
  }
  const double t = 2.0 * n + s;
  return 4.0 * n * (n + a) * (n + b) * (n + s) / (t * t * (t + 1.0) * (t - 1.0));
}

RecurrenceTable make_recurrence_table(const JacobiParams& p, int N) {
  require_index(N, 0, "make_recurrence_table");
  RecurrenceTable table{p, std::vector<double>(N + 1), std::vector<double>(N + 1, 0.0)};
  for (int n = 0; n <= N; ++n) {
    table.alphas[n] = recurrence_alpha(p, n);
    if (n >= 1) table.betas[n] = recurrence_beta(p, n);
  }
  return table;
}

double ladder_R(const JacobiParams& p, int n) {
  require_index(n, 0, "ladder_R");
  return 0.5 * (p.alpha + p.beta + 2.0 * n + 1.0);
}

double ladder_r(const JacobiParams& p, int n) {
  require_index(n, 0, "ladder_r");
  const double s = p.alpha + p.beta;
  return 0.25 * (p.beta - p.alpha - 2.0 * n - (s + 2.0 * n + 2.0) * recurrence_alpha(p, n));
}

LadderCoeffs ladder_coeffs(const JacobiParams& p, int n) {
  return {n, ladder_R(p, n), ladder_r(p, n)};
}

double weight_mass(const JacobiParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  if (a + b + 2.0 < 150.0) {
    return std::exp2(a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
           std::tgamma(a + b + 2.0);
  }
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

namespace {

Wide moment_ratio(const JacobiParams& p, int j) {
  // mu_j / mu_0 = sum_k C(j,k) (-2)^k B(a+k+1, b+1) / B(a+1, b+1).
  const Wide a = p.alpha;
  const Wide s = Wide(p.alpha) + Wide(p.beta);
  Wide binom = 1;
  Wide pow2 = 1;
  Wide beta_ratio = 1;
  Wide sum = 0;
  for (int k = 0; k <= j; ++k) {
    const Wide term = binom * pow2 * beta_ratio;
    sum += (k % 2 == 0) ? term : Wide(-term);
    binom = binom * (j - k) / (k + 1);
    pow2 *= 2;
    beta_ratio = beta_ratio * (a + k + 1) / (s + k + 2);
  }
  return sum;
}

void require_moment_order(const JacobiParams& p, int j, const char* who) {
  p.validate();
  require_index(j, 0, who);
  if (j > kMaxMomentOrder) {
    throw DomainError(std::string(who) + ": order " + std::to_string(j) + " exceeds " +
                      std::to_string(kMaxMomentOrder));
  }
}

}  // namespace

double moment(const JacobiParams& p, int j) {
  require_moment_order(p, j, "moment");
  const double mass = weight_mass(p);
  if (j == 0) return mass;
  if (p.alpha == p.beta && j % 2 == 1) return 0.0;
  return mass * static_cast<double>(moment_ratio(p, j));
}

long double normalized_moment(const JacobiParams& p, int j) {
  require_moment_order(p, j, "normalized_moment");
  if (j == 0) return 1.0L;
  if (p.alpha == p.beta && j % 2 == 1) return 0.0L;
  return static_cast<long double>(moment_ratio(p, j));
}

double norm_h(const JacobiParams& p, int n) {
  require_index(n, 0, "norm_h");
  double h = weight_mass(p);
  for (int j = 1; j <= n; ++j) h *= recurrence_beta(p, j);
  return h;
}

double pochhammer(double x, int n) {
  require_index(n, 0, "pochhammer");
  if (n <= kLinearPochhammerLimit || x <= 0.0) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= x + k;
    return prod;
  }
  return std::exp(std::lgamma(x + n) - std::lgamma(x));
}

double pochhammer_ratio(double a, double b, int n) {
  require_index(n, 0, "pochhammer_ratio");
  if (n <= kLinearPochhammerLimit || a <= 0.0 || b <= 0.0) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= (a + k) / (b + k);
    return prod;
  }
  return std::exp(std::lgamma(a + n) - std::lgamma(a) - std::lgamma(b + n) + std::lgamma(b));
}

double value_at_one(const JacobiParams& p, int n) {
  require_index(n, 0, "value_at_one");
  return std::ldexp(pochhammer_ratio(p.alpha + 1.0, p.alpha + p.beta + n + 1.0, n), n);
}

double value_at_minus_one(const JacobiParams& p, int n) {
  require_index(n, 0, "value_at_minus_one");
  const double mag = std::ldexp(pochhammer_ratio(p.beta + 1.0, p.alpha + p.beta + n + 1.0, n), n);
  return (n % 2 == 0) ? mag : -mag;
}

double endpoint_product_form(const JacobiParams& p, int n, Endpoint sign) {
  require_index(n, 0, "endpoint_product_form");
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) {
    const double r = ladder_r(p, j);
    const double den = (sign == Endpoint::kPlusOne) ? r + j : r;
    if (std::abs(den) <= 1e-14 * (j + std::abs(r))) {
      throw DegenerateError("endpoint_product_form: zero denominator at j=" + std::to_string(j));
    }
    prod *= recurrence_beta(p, j) * ladder_R(p, j) / den;
  }
  return prod;
}

}  // namespace ladderops
