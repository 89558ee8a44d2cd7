#ifndef LADDEROPS_JACOBI_CORE_HPP_
#define LADDEROPS_JACOBI_CORE_HPP_

#include <cstddef>
#include <vector>

#include "ladderops/params.hpp"

namespace ladderops {

/**
 * Monic three-term recurrence data
 *   z P_n(z) = P_{n+1}(z) + alpha_n P_n(z) + beta_n P_{n-1}(z).
 *
 * alphas holds alpha_0..alpha_N. betas has the same length; betas[0] is the
 * placeholder 0 (the convention beta_0 P_{-1} = 0) and betas[n] is beta_n.
 */
struct RecurrenceTable {
  JacobiParams params;
  std::vector<double> alphas;
  std::vector<double> betas;

  std::size_t max_index() const { return alphas.empty() ? 0 : alphas.size() - 1; }
  double alpha(std::size_t n) const { return alphas.at(n); }
  double beta(std::size_t n) const { return betas.at(n); }
};

/// Scalars fixing the rational ladder functions A_n and B_n.
struct LadderCoeffs {
  int n = 0;
  double R = 0.0;
  double r = 0.0;
};

enum class Endpoint { kPlusOne = +1, kMinusOne = -1 };

double recurrence_alpha(const JacobiParams& p, int n);
double recurrence_beta(const JacobiParams& p, int n);

/// Recurrence coefficients alpha_0..alpha_N and beta_1..beta_N from the closed forms.
RecurrenceTable make_recurrence_table(const JacobiParams& p, int N);

double ladder_R(const JacobiParams& p, int n);
double ladder_r(const JacobiParams& p, int n);
LadderCoeffs ladder_coeffs(const JacobiParams& p, int n);

/// Total mass of the weight, 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2).
double weight_mass(const JacobiParams& p);

/**
 * Exact moment mu_j = int_{-1}^{1} t^j w(t) dt.
 *
 * Uses the Beta-function expansion in t = 1 - 2u. The expansion alternates
 * with terms of size up to 3^j, so it is summed in 100-digit arithmetic and
 * rounded once; j is limited to kMaxMomentOrder.
 */
double moment(const JacobiParams& p, int j);
inline constexpr int kMaxMomentOrder = 160;

/// mu_j / mu_0 rounded to long double, for consumers that amplify moment rounding.
long double normalized_moment(const JacobiParams& p, int j);

/// h_n = int P_n^2 w dx, as h_0 beta_1 ... beta_n.
double norm_h(const JacobiParams& p, int n);

/// Rising factorial (x)_n.
double pochhammer(double x, int n);
/// (a)_n / (b)_n without forming either factor separately.
double pochhammer_ratio(double a, double b, int n);

/// P_n(1) = 2^n (alpha+1)_n / (alpha+beta+n+1)_n.
double value_at_one(const JacobiParams& p, int n);
/// P_n(-1) = (-1)^n 2^n (beta+1)_n / (alpha+beta+n+1)_n.
double value_at_minus_one(const JacobiParams& p, int n);

/**
 * Endpoint value from the regularity of P_n' at z = +-1:
 *   P_n(1)  = prod_{j<=n} beta_j R_j / (r_j + j)
 *   P_n(-1) = prod_{j<=n} beta_j R_j / r_j
 * Throws DegenerateError if a denominator vanishes.
 */
double endpoint_product_form(const JacobiParams& p, int n, Endpoint sign);

}  // namespace ladderops

#endif  // LADDEROPS_JACOBI_CORE_HPP_
