#include "ladderops/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>

#include "ladderops/ladder.hpp"
#include "ladderops/polyeval.hpp"
#include "ladderops/solver.hpp"

namespace ladderops {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw ParameterError(std::string(what) + ": input and output sizes differ");
}

double hypergeometric_point_gap(const JacobiParams& p, const RecurrenceTable& table, int n, double x) {
  const double rec = eval_recurrence(table, n, x).p_n;
  const double hyp = eval_hypergeometric(p, n, x);
  return std::abs(hyp - rec) / std::max(1.0, std::abs(rec));
}

ResidualValues residuals_at(const ResidualSample& s) {
  ResidualValues v;
  v.ladder_down = residual_ladder_down(s.params, s.n, s.z);
  v.ladder_up = residual_ladder_up(s.params, s.n, s.z);
  v.s1 = residual_S1(s.params, s.n, s.z);
  v.s2 = residual_S2(s.params, s.n, s.z);
  v.compatibility = residual_compatibility(s.params, s.n, s.z);
  const auto eq = verify_residue_equations(s.params, s.n);
  v.residue = *std::max_element(eq.begin(), eq.end());
  return v;
}

// Values P_0..P_n at every node, node-major.
std::vector<double> basis_at_nodes(const QuadratureRule& rule, const RecurrenceTable& table, int n) {
  const std::size_t m = rule.nodes.size();
  std::vector<double> vals(m * (n + 1));
  for (std::size_t k = 0; k < m; ++k) {
    const double x = rule.nodes[k];
    double prev = 0.0, cur = 1.0;
    vals[k * (n + 1)] = 1.0;
    for (int i = 0; i < n; ++i) {
      const double next = (x - table.alphas[i]) * cur - table.betas[i] * prev;
      prev = cur;
      cur = next;
      vals[k * (n + 1) + i + 1] = cur;
    }
  }
  return vals;
}

double gram_entry(const QuadratureRule& rule, const std::vector<double>& vals, int n, int i, int j) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * vals[k * (n + 1) + i] * vals[k * (n + 1) + j];
  }
  return sum;
}

void require_gram_table(const RecurrenceTable& table, int n) {
  if (n < 0 || (n >= 1 && static_cast<std::size_t>(n) > table.alphas.size())) {
    throw ParameterError("gram_matrix: table too short for degree " + std::to_string(n));
  }
}

}  // namespace

void eval_grid(const RecurrenceTable& table, int n, std::span<const double> z, std::span<double> out) {
  require_same_size(z.size(), out.size(), "eval_grid");
  const auto count = static_cast<std::ptrdiff_t>(z.size());
  eval_recurrence(table, n, 0.0);  // range check outside the parallel region
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = eval_recurrence(table, n, z[i]).p_n;
}

void eval_grid_serial(const RecurrenceTable& table, int n, std::span<const double> z,
                      std::span<double> out) {
  require_same_size(z.size(), out.size(), "eval_grid_serial");
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = eval_recurrence(table, n, z[i]).p_n;
}

double hypergeometric_gap(const JacobiParams& p, int n, std::span<const double> x) {
  const RecurrenceTable table = make_recurrence_table(p, std::max(n - 1, 0));
  const auto count = static_cast<std::ptrdiff_t>(x.size());
  for (double xi : x) {
    if (!(xi >= -1.0 && xi <= 1.0)) throw DomainError("hypergeometric_gap: x outside [-1, 1]");
  }
  double gap = 0.0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : gap)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    gap = std::max(gap, hypergeometric_point_gap(p, table, n, x[i]));
  }
  return gap;
}

double hypergeometric_gap_serial(const JacobiParams& p, int n, std::span<const double> x) {
  const RecurrenceTable table = make_recurrence_table(p, std::max(n - 1, 0));
  double gap = 0.0;
  for (double xi : x) gap = std::max(gap, hypergeometric_point_gap(p, table, n, xi));
  return gap;
}

std::vector<ResidualValues> residual_sweep(std::span<const ResidualSample> samples) {
  std::vector<ResidualValues> out(samples.size());
  const auto count = static_cast<std::ptrdiff_t>(samples.size());
  // Exceptions may not cross the region boundary; park the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = residuals_at(samples[i]);
    } catch (...) {
#pragma omp critical(ladderops_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ResidualValues> residual_sweep_serial(std::span<const ResidualSample> samples) {
  std::vector<ResidualValues> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(residuals_at(s));
  return out;
}

std::vector<ResidualSample> draw_residual_samples(std::uint64_t seed, int count, const SampleBox& box) {
  if (count < 0 || box.n_max < 1) throw ParameterError("draw_residual_samples: bad count or n_max");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ua(box.alpha_lo, box.alpha_hi);
  std::uniform_real_distribution<double> ub(box.beta_lo, box.beta_hi);
  std::uniform_int_distribution<int> un(1, box.n_max);
  std::uniform_real_distribution<double> uz(box.z_lo, box.z_hi);
  // Map [lo, hi) to (lo, hi] so that an exclusive lower bound (e.g. alpha > 0) holds.
  auto flip = [](double v, double lo, double hi) { return lo + hi - v; };
  std::vector<ResidualSample> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    ResidualSample s;
    s.params = {flip(ua(rng), box.alpha_lo, box.alpha_hi), flip(ub(rng), box.beta_lo, box.beta_hi)};
    s.n = un(rng);
    s.z = uz(rng);
    if (std::abs(s.z - 1.0) < box.pole_exclusion || std::abs(s.z + 1.0) < box.pole_exclusion) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<double> gram_matrix(const QuadratureRule& rule, const RecurrenceTable& table, int n) {
  require_gram_table(table, n);
  const std::vector<double> vals = basis_at_nodes(rule, table, n);
  const int dim = n + 1;
  std::vector<double> g(static_cast<std::size_t>(dim) * dim);
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g[i * dim + j] = gram_entry(rule, vals, n, i, j);
  }
  return g;
}

std::vector<double> gram_matrix_serial(const QuadratureRule& rule, const RecurrenceTable& table, int n) {
  require_gram_table(table, n);
  const std::vector<double> vals = basis_at_nodes(rule, table, n);
  const int dim = n + 1;
  std::vector<double> g(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g[i * dim + j] = gram_entry(rule, vals, n, i, j);
  }
  return g;
}

}  // namespace ladderops
