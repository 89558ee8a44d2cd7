#ifndef LADDEROPS_SOLVER_HPP_
#define LADDEROPS_SOLVER_HPP_

#include <array>
#include <vector>

#include "ladderops/jacobi_core.hpp"

namespace ladderops {

struct InitialConditions {
  double alpha0 = 0.0;
  double beta1 = 0.0;
};

/**
 * Outcome of re-deriving the recurrence coefficients from the compatibility
 * conditions, next to the closed forms they should reproduce.
 *
 * alphas_* hold indices 0..N; betas_* hold indices 1..N (element k is beta_{k+1}).
 * Per-n vectors (residue_residuals, summed_form_residuals) are indexed by n - 1.
 */
struct DerivationReport {
  JacobiParams params;
  int N = 0;
  std::vector<double> alphas_derived;
  std::vector<double> betas_derived;
  std::vector<double> alphas_closed;
  std::vector<double> betas_closed;
  double max_rel_error_alpha = 0.0;
  double max_rel_error_beta = 0.0;
  std::vector<std::array<double, 4>> residue_residuals;
  std::vector<double> summed_form_residuals;
  double max_conserved_drift = 0.0;
  double max_r_chain_residual = 0.0;
  bool all_betas_positive = true;
};

/// alpha_0 = mu_1/mu_0 and beta_1 = mu_2/mu_0 - alpha_0^2 from the exact moments.
InitialConditions initial_conditions(const JacobiParams& p);

/// alpha_0..alpha_N from alpha_{n+1} (a+b+2n+4) = alpha_n (a+b+2n), seeded by the moments.
std::vector<double> solve_alpha_sequence(const JacobiParams& p, int N);

/// beta_1..beta_N from beta_{n+1} R_{n+1} - beta_n R_{n-1} = (1 - alpha_n^2)/2.
std::vector<double> solve_beta_sequence(const JacobiParams& p, int N);
std::vector<double> solve_beta_sequence(const JacobiParams& p, int N,
                                        const std::vector<double>& alphas, double beta1);

/**
 * Relative residual of beta_n R_n R_{n-1} = (1/2) sum_{j<n} (1 - alpha_j^2) R_j
 * (integration constant zero) for n = 1..N.
 */
std::vector<double> summed_form_residuals(const JacobiParams& p, const std::vector<double>& alphas,
                                          const std::vector<double>& betas);

/// |C_1 - alpha_n (a+b+2n)(a+b+2n+2)| relative to |C_1| = |b^2 - a^2| (absolute if C_1 = 0).
double conserved_drift(const JacobiParams& p, const std::vector<double>& alphas);

/**
 * |lhs - rhs| of the four residue equations at z = -1 and z = +1 of both
 * compatibility conditions, with every quantity taken from the closed forms.
 */
std::array<double, 4> verify_residue_equations(const JacobiParams& p, int n);

/// |4 r_{n+1} - (b - a - 2n - 2 - (a+b+2n) alpha_n)| / 4.
double r_chain_residual(const JacobiParams& p, int n);

DerivationReport derive_all(const JacobiParams& p, int N);

/// |d - c| / |c|, or |d| when c = 0.
double relative_error(double derived, double closed);

}  // namespace ladderops

#endif  // LADDEROPS_SOLVER_HPP_
