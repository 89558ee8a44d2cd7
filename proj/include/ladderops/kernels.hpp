#ifndef LADDEROPS_KERNELS_HPP_
#define LADDEROPS_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ladderops/jacobi_core.hpp"
#include "ladderops/quadrature.hpp"

// Batch kernels over independent points or samples. Each kernel has an OpenMP
// version and a *_serial reference; both produce bit-identical results because
// every output element is computed by one thread in a fixed order.

namespace ladderops {

/// P_n at every z.
void eval_grid(const RecurrenceTable& table, int n, std::span<const double> z, std::span<double> out);
void eval_grid_serial(const RecurrenceTable& table, int n, std::span<const double> z,
                      std::span<double> out);

/// max_x |hypergeometric - recurrence| / max(1, |P_n(x)|) over x.
double hypergeometric_gap(const JacobiParams& p, int n, std::span<const double> x);
double hypergeometric_gap_serial(const JacobiParams& p, int n, std::span<const double> x);

struct ResidualSample {
  JacobiParams params;
  int n = 1;
  double z = 0.0;
};

struct ResidualValues {
  double ladder_down = 0.0;
  double ladder_up = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double compatibility = 0.0;
  double residue = 0.0;  // max over the four residue equations
};

std::vector<ResidualValues> residual_sweep(std::span<const ResidualSample> samples);
std::vector<ResidualValues> residual_sweep_serial(std::span<const ResidualSample> samples);

struct SampleBox {
  double alpha_lo = 0.0, alpha_hi = 4.0;
  double beta_lo = 0.0, beta_hi = 4.0;
  int n_max = 20;
  double z_lo = -5.0, z_hi = 5.0;
  double pole_exclusion = 0.05;
};

/**
 * Seeded draws of (params, n, z): exponents uniform in the half-open box
 * (lo, hi], n uniform in [1, n_max], z uniform in [z_lo, z_hi] with
 * |z -+ 1| < pole_exclusion rejected.
 */
std::vector<ResidualSample> draw_residual_samples(std::uint64_t seed, int count, const SampleBox& box);

/// G(i, j) = sum_k w_k P_i(x_k) P_j(x_k) for i, j <= n, row-major (n+1)^2.
std::vector<double> gram_matrix(const QuadratureRule& rule, const RecurrenceTable& table, int n);
std::vector<double> gram_matrix_serial(const QuadratureRule& rule, const RecurrenceTable& table, int n);

}  // namespace ladderops

#endif  // LADDEROPS_KERNELS_HPP_
