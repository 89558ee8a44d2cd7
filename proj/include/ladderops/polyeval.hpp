#ifndef LADDEROPS_POLYEVAL_HPP_
#define LADDEROPS_POLYEVAL_HPP_

#include "ladderops/jacobi_core.hpp"

namespace ladderops {

/// (P_n(z), P_{n-1}(z)) at a single abscissa. For n = 0, p_nm1 is 0.
struct PolyPair {
  int n = 0;
  double p_n = 1.0;
  double p_nm1 = 0.0;
  double point = 0.0;
};

struct StieltjesValue {
  double point = 0.0;
  double value = 0.0;
};

/// Forward three-term recurrence. The table must hold coefficients up to index n-1.
PolyPair eval_recurrence(const RecurrenceTable& table, int n, double z);
/// Same, with a table built from the closed-form coefficients.
PolyPair eval_recurrence(const JacobiParams& p, int n, double z);

/// Numerator polynomial Q_n(z): same recurrence, Q_0 = 0, Q_1 = mu0.
double eval_numerator(const RecurrenceTable& table, double mu0, int n, double z);

/// P_n'(z) by differentiating the recurrence term by term.
double eval_derivative_recurrence(const RecurrenceTable& table, int n, double z);

/**
 * Terminating 2F1(-n, b; c; y), summed in extended precision.
 * The alternating terms reach ~(3+2*sqrt 2)^n for y near 1/2 while the sum is O(1).
 */
double hyp2f1_terminating(int n, double b, double c, double y);

/**
 * P_n(x) from the 2F1 representations around x = -1 (used for x <= 0) and
 * around x = +1 (used for x > 0), so the series argument never exceeds 1/2.
 * Requires x in [-1, 1].
 */
double eval_hypergeometric(const JacobiParams& p, int n, double x);

/// P_n'(z) = n P_{n-1}^{(alpha+1, beta+1)}(z); returns 0 for n = 0.
double eval_derivative(const JacobiParams& p, int n, double z);

/**
 * F(z) = int w(y) / (z - y) dy.
 *
 * |z| > 1: Gauss-Jacobi quadrature, doubling the rule until the relative
 * change drops below 1e-12 (cap 4096 nodes, NumericalFailure beyond).
 * z = -1 (beta > 0) and z = +1 (alpha > 0): closed form via the shifted weight.
 * Anything else throws DomainError.
 */
StieltjesValue stieltjes_transform(const JacobiParams& p, double z);

/// Relative residual of R_n = (beta/h_n) P_n(-1) [Q_n(-1) - F(-1) P_n(-1)]. Needs beta > 0.
double check_Rn_stieltjes_identity(const JacobiParams& p, int n);

}  // namespace ladderops

#endif  // LADDEROPS_POLYEVAL_HPP_
