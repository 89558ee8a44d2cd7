#include "ladderops/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ladderops {

double relative_error(double derived, double closed) {
  const double diff = std::abs(derived - closed);
  return closed != 0.0 ? diff / std::abs(closed) : diff;
}

InitialConditions initial_conditions(const JacobiParams& p) {
  p.validate();
  const double mu0 = moment(p, 0);
  const double a0 = moment(p, 1) / mu0;
  return {a0, moment(p, 2) / mu0 - a0 * a0};
}

std::vector<double> solve_alpha_sequence(const JacobiParams& p, int N) {
  if (N < 0) throw ParameterError("solve_alpha_sequence: N must be >= 0");
  const double s = p.alpha + p.beta;
  std::vector<double> alphas(N + 1);
  alphas[0] = initial_conditions(p).alpha0;
  for (int n = 0; n < N; ++n) {
    const double den = s + 2.0 * n + 4.0;
    if (den == 0.0) throw DegenerateError("solve_alpha_sequence: zero denominator at n=" + std::to_string(n));
    alphas[n + 1] = alphas[n] * (s + 2.0 * n) / den;
  }
  return alphas;
}

std::vector<double> solve_beta_sequence(const JacobiParams& p, int N, const std::vector<double>& alphas,
                                        double beta1) {
  if (N < 1) throw ParameterError("solve_beta_sequence: N must be >= 1");
  if (alphas.size() < static_cast<std::size_t>(N)) {
    throw ParameterError("solve_beta_sequence: need alpha_0..alpha_{N-1}");
  }
  std::vector<double> betas(N);
  betas[0] = beta1;
  for (int n = 1; n < N; ++n) {
    const double R_next = ladder_R(p, n + 1);
    if (R_next == 0.0) throw DegenerateError("solve_beta_sequence: R_{n+1} = 0");
    const double a = alphas[n];
    betas[n] = (betas[n - 1] * ladder_R(p, n - 1) + 0.5 * (1.0 - a * a)) / R_next;
  }
  return betas;
}

std::vector<double> solve_beta_sequence(const JacobiParams& p, int N) {
  return solve_beta_sequence(p, N, solve_alpha_sequence(p, N), initial_conditions(p).beta1);
}

std::vector<double> summed_form_residuals(const JacobiParams& p, const std::vector<double>& alphas,
                                          const std::vector<double>& betas) {
  std::vector<double> out(betas.size());
  double partial = 0.0;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    const double a = alphas.at(n - 1);
    partial += 0.5 * (1.0 - a * a) * ladder_R(p, n - 1);
    const double lhs = betas[k] * ladder_R(p, n) * ladder_R(p, n - 1);
    const double scale = std::max(std::abs(lhs), std::abs(partial));
    out[k] = scale > 0.0 ? std::abs(lhs - partial) / scale : 0.0;
  }
  return out;
}

double conserved_drift(const JacobiParams& p, const std::vector<double>& alphas) {
  const double s = p.alpha + p.beta;
  const double c1 = (p.beta - p.alpha) * (p.beta + p.alpha);
  double drift = 0.0;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const double n = static_cast<double>(k);
    const double c = alphas[k] * (s + 2.0 * n) * (s + 2.0 * n + 2.0);
    drift = std::max(drift, relative_error(c, c1));
  }
  return drift;
}

std::array<double, 4> verify_residue_equations(const JacobiParams& p, int n) {
  if (n < 1) throw ParameterError("verify_residue_equations: n must be >= 1");
  const double a = p.alpha;
  const double b = p.beta;
  const double an = recurrence_alpha(p, n);
  const double bn = recurrence_beta(p, n);
  const double bn1 = recurrence_beta(p, n + 1);
  const double Rm = ladder_R(p, n - 1);
  const double R = ladder_R(p, n);
  const double Rp = ladder_R(p, n + 1);
  const double rn = ladder_r(p, n);
  const double rn1 = ladder_r(p, n + 1);
  return {
      std::abs((-2.0 * n - 1.0 - rn - rn1) - (a - R * (1.0 - an))),
      std::abs((rn + rn1) - (b - R * (1.0 + an))),
      std::abs((rn - rn1 - 1.0) * (1.0 - an) - (bn * Rm - bn1 * Rp)),
      std::abs((rn - rn1) * (1.0 + an) - (bn1 * Rp - bn * Rm)),
  };
}

double r_chain_residual(const JacobiParams& p, int n) {
  if (n < 0) throw ParameterError("r_chain_residual: negative index");
  const double s = p.alpha + p.beta;
  const double next =
      0.25 * (p.beta - p.alpha - 2.0 * n - 2.0 - (s + 2.0 * n) * recurrence_alpha(p, n));
  return std::abs(next - ladder_r(p, n + 1));
}

DerivationReport derive_all(const JacobiParams& p, int N) {
  if (N < 1) throw ParameterError("derive_all: N must be >= 1");
  p.validate();
  DerivationReport rep;
  rep.params = p;
  rep.N = N;

  const InitialConditions ic = initial_conditions(p);
  rep.alphas_derived = solve_alpha_sequence(p, N);
  rep.betas_derived = solve_beta_sequence(p, N, rep.alphas_derived, ic.beta1);

  rep.alphas_closed.resize(N + 1);
  rep.betas_closed.resize(N);
  for (int n = 0; n <= N; ++n) {
    rep.alphas_closed[n] = recurrence_alpha(p, n);
    rep.max_rel_error_alpha =
        std::max(rep.max_rel_error_alpha, relative_error(rep.alphas_derived[n], rep.alphas_closed[n]));
  }
  for (int n = 1; n <= N; ++n) {
    rep.betas_closed[n - 1] = recurrence_beta(p, n);
    rep.max_rel_error_beta = std::max(
        rep.max_rel_error_beta, relative_error(rep.betas_derived[n - 1], rep.betas_closed[n - 1]));
    if (!(rep.betas_derived[n - 1] > 0.0)) rep.all_betas_positive = false;
  }

  rep.residue_residuals.reserve(N);
  for (int n = 1; n <= N; ++n) {
    rep.residue_residuals.push_back(verify_residue_equations(p, n));
    rep.max_r_chain_residual = std::max(rep.max_r_chain_residual, r_chain_residual(p, n - 1));
  }
  rep.summed_form_residuals = summed_form_residuals(p, rep.alphas_derived, rep.betas_derived);
  rep.max_conserved_drift = conserved_drift(p, rep.alphas_derived);
  return rep;
}

}  // namespace ladderops
