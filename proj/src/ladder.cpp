#include "ladderops/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ladderops/polyeval.hpp"
#include "ladderops/quadrature.hpp"

namespace ladderops {

namespace {

void require_off_poles(double z, const char* what) {
  if (z == 1.0 || z == -1.0) throw DomainError(std::string(what) + ": pole at z = +-1");
}

double normalized(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

void require_ladder_integral(const JacobiParams& p, int n, int m, const char* what) {
  if (!p.strict_positive()) {
    throw ParameterError(std::string(what) + ": ladder integrals need alpha > 0 and beta > 0");
  }
  if (m < n + 1) throw ParameterError(std::string(what) + ": rule size must be >= n + 1");
}

}  // namespace

double RationalLadderFn::operator()(double z) const {
  return res_plus / (z - 1.0) + res_minus / (z + 1.0);
}

TwoByTwo operator*(const TwoByTwo& a, const TwoByTwo& b) {
  TwoByTwo c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  return c;
}

TwoByTwo operator+(const TwoByTwo& a, const TwoByTwo& b) {
  TwoByTwo c;
  for (int k = 0; k < 4; ++k) c.e[k] = a.e[k] + b.e[k];
  return c;
}

TwoByTwo operator-(const TwoByTwo& a, const TwoByTwo& b) {
  TwoByTwo c;
  for (int k = 0; k < 4; ++k) c.e[k] = a.e[k] - b.e[k];
  return c;
}

double potential_vprime(const JacobiParams& p, double z) {
  require_off_poles(z, "potential_vprime");
  return p.alpha / (1.0 - z) - p.beta / (1.0 + z);
}

RationalLadderFn ladder_A(const JacobiParams& p, int n) {
  const double R = ladder_R(p, n);
  return {R, -R, RationalLadderFn::Kind::A};
}

RationalLadderFn ladder_B(const JacobiParams& p, int n) {
  const double r = ladder_r(p, n);
  return {r, -(n + r), RationalLadderFn::Kind::B};
}

double ladder_A_at(const JacobiParams& p, int n, double z) {
  require_off_poles(z, "ladder_A_at");
  return ladder_A(p, n)(z);
}

double ladder_B_at(const JacobiParams& p, int n, double z) {
  require_off_poles(z, "ladder_B_at");
  return ladder_B(p, n)(z);
}

double compute_R_numeric(const JacobiParams& p, int n, int m) {
  require_ladder_integral(p, n, m, "compute_R_numeric");
  const RecurrenceTable table = make_recurrence_table(p, std::max(n - 1, 0));
  const QuadratureRule rule = gauss_rule({p.alpha, p.beta - 1.0}, m);
  const double integral = integrate(rule, [&](double y) {
    const double v = eval_recurrence(table, n, y).p_n;
    return v * v;
  });
  return p.beta / norm_h(p, n) * integral;
}

double compute_r_numeric(const JacobiParams& p, int n, int m) {
  if (n < 1) throw ParameterError("compute_r_numeric: n must be >= 1");
  require_ladder_integral(p, n, m, "compute_r_numeric");
  const RecurrenceTable table = make_recurrence_table(p, n - 1);
  const QuadratureRule rule = gauss_rule({p.alpha, p.beta - 1.0}, m);
  const double integral = integrate(rule, [&](double y) {
    const PolyPair pp = eval_recurrence(table, n, y);
    return pp.p_n * pp.p_nm1;
  });
  return p.beta / norm_h(p, n - 1) * integral;
}

double beta_or_zero(const JacobiParams& p, int n) {
  return n == 0 ? 0.0 : recurrence_beta(p, n);
}

TwoByTwo build_M(const JacobiParams& p, int n, double z) {
  if (n < 1) throw ParameterError("build_M: n must be >= 1");
  require_off_poles(z, "build_M");
  const double Bn = ladder_B_at(p, n, z);
  TwoByTwo M;
  M(0, 0) = -Bn;
  M(0, 1) = recurrence_beta(p, n) * ladder_A_at(p, n, z);
  M(1, 0) = -ladder_A_at(p, n - 1, z);
  M(1, 1) = Bn + potential_vprime(p, z);
  return M;
}

TwoByTwo build_U(const JacobiParams& p, int n, double z) {
  if (n < 0) throw ParameterError("build_U: negative index");
  TwoByTwo U;
  U(0, 0) = z - recurrence_alpha(p, n);
  U(0, 1) = -beta_or_zero(p, n);
  U(1, 0) = 1.0;
  U(1, 1) = 0.0;
  return U;
}

TwoByTwo build_S(const JacobiParams& p, int n, double z) {
  TwoByTwo dU;
  dU(0, 0) = 1.0;
  const TwoByTwo U = build_U(p, n, z);
  return dU + U * build_M(p, n, z) - build_M(p, n + 1, z) * U;
}

double residual_ladder_down(const JacobiParams& p, int n, double z) {
  if (n < 1) throw ParameterError("residual_ladder_down: n must be >= 1");
  require_off_poles(z, "residual_ladder_down");
  const PolyPair pp = eval_recurrence(p, n, z);
  const double lhs = eval_derivative(p, n, z) + ladder_B_at(p, n, z) * pp.p_n;
  const double rhs = recurrence_beta(p, n) * ladder_A_at(p, n, z) * pp.p_nm1;
  return normalized(lhs, rhs);
}

double residual_ladder_up(const JacobiParams& p, int n, double z) {
  if (n < 1) throw ParameterError("residual_ladder_up: n must be >= 1");
  require_off_poles(z, "residual_ladder_up");
  const PolyPair pp = eval_recurrence(p, n, z);
  const double lhs =
      eval_derivative(p, n - 1, z) - (ladder_B_at(p, n, z) + potential_vprime(p, z)) * pp.p_nm1;
  const double rhs = -ladder_A_at(p, n - 1, z) * pp.p_n;
  return normalized(lhs, rhs);
}

double residual_S1(const JacobiParams& p, int n, double z) {
  if (n < 0) throw ParameterError("residual_S1: negative index");
  require_off_poles(z, "residual_S1");
  const double lhs = ladder_B_at(p, n + 1, z) + ladder_B_at(p, n, z);
  const double rhs = (z - recurrence_alpha(p, n)) * ladder_A_at(p, n, z) - potential_vprime(p, z);
  return normalized(lhs, rhs);
}

double residual_S2(const JacobiParams& p, int n, double z) {
  if (n < 1) throw ParameterError("residual_S2: n must be >= 1");
  require_off_poles(z, "residual_S2");
  const double lhs = (z - recurrence_alpha(p, n)) * (ladder_B_at(p, n + 1, z) - ladder_B_at(p, n, z));
  const double rhs = recurrence_beta(p, n + 1) * ladder_A_at(p, n + 1, z) -
                     recurrence_beta(p, n) * ladder_A_at(p, n - 1, z) - 1.0;
  return normalized(lhs, rhs);
}

double residual_compatibility(const JacobiParams& p, int n, double z) {
  if (n < 1) throw ParameterError("residual_compatibility: n must be >= 1");
  require_off_poles(z, "residual_compatibility");
  const TwoByTwo U = build_U(p, n, z);
  const TwoByTwo UM = U * build_M(p, n, z);
  const TwoByTwo S = build_S(p, n, z);
  const PolyPair pp = eval_recurrence(p, n, z);
  const double r0 = std::abs(S(0, 0) * pp.p_n + S(0, 1) * pp.p_nm1);
  const double r1 = std::abs(S(1, 0) * pp.p_n + S(1, 1) * pp.p_nm1);
  double um_max = 0.0;
  for (double v : UM.e) um_max = std::max(um_max, std::abs(v));
  const double phi_max = std::max(std::abs(pp.p_n), std::abs(pp.p_nm1));
  return std::max(r0, r1) / std::max(1.0, um_max * phi_max);
}

}  // namespace ladderops
