#ifndef LADDEROPS_LADDER_HPP_
#define LADDEROPS_LADDER_HPP_

#include <array>

#include "ladderops/jacobi_core.hpp"

namespace ladderops {

/// res_plus / (z - 1) + res_minus / (z + 1).
struct RationalLadderFn {
  enum class Kind { A, B };
  double res_minus = 0.0;
  double res_plus = 0.0;
  Kind kind = Kind::A;

  double operator()(double z) const;
};

/// 2x2 real matrix, row-major.
struct TwoByTwo {
  std::array<double, 4> e{};

  double operator()(int i, int j) const { return e[2 * i + j]; }
  double& operator()(int i, int j) { return e[2 * i + j]; }
  double trace() const { return e[0] + e[3]; }
  double det() const { return e[0] * e[3] - e[1] * e[2]; }

  friend TwoByTwo operator*(const TwoByTwo& a, const TwoByTwo& b);
  friend TwoByTwo operator+(const TwoByTwo& a, const TwoByTwo& b);
  friend TwoByTwo operator-(const TwoByTwo& a, const TwoByTwo& b);
};

/// v'(z) = -w'(z)/w(z) = alpha/(1-z) - beta/(1+z).
double potential_vprime(const JacobiParams& p, double z);

RationalLadderFn ladder_A(const JacobiParams& p, int n);
RationalLadderFn ladder_B(const JacobiParams& p, int n);
double ladder_A_at(const JacobiParams& p, int n, double z);
double ladder_B_at(const JacobiParams& p, int n, double z);

/// R_n from its defining integral, with an m-point rule for weight (alpha, beta-1).
double compute_R_numeric(const JacobiParams& p, int n, int m);
/// r_n from its defining integral, same rule.
double compute_r_numeric(const JacobiParams& p, int n, int m);

/// beta_n, with beta_0 = 0.
double beta_or_zero(const JacobiParams& p, int n);

TwoByTwo build_M(const JacobiParams& p, int n, double z);
TwoByTwo build_U(const JacobiParams& p, int n, double z);
/// S_n = U_n' + U_n M_n - M_{n+1} U_n.
TwoByTwo build_S(const JacobiParams& p, int n, double z);

// Residuals are |lhs - rhs| / max(1, |rhs|).
double residual_ladder_down(const JacobiParams& p, int n, double z);
double residual_ladder_up(const JacobiParams& p, int n, double z);
double residual_S1(const JacobiParams& p, int n, double z);
/// Uses the pole-free form (z - alpha_n)(B_{n+1} - B_n) - beta_{n+1} A_{n+1} + beta_n A_{n-1} + 1 = 0.
double residual_S2(const JacobiParams& p, int n, double z);
/// max |S_n Phi_n| normalised by max(1, |U_n M_n|_max * |Phi_n|_max).
double residual_compatibility(const JacobiParams& p, int n, double z);

}  // namespace ladderops

#endif  // LADDEROPS_LADDER_HPP_
