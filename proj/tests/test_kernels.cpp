#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "ladderops/kernels.hpp"
#include "ladderops/polyeval.hpp"
#include "ladderops/quadrature.hpp"

using namespace ladderops;

namespace {

// The host may expose a single core; oversubscribe so the parallel paths
// actually split work between threads.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

}  // namespace

TEST_CASE("eval_grid: parallel equals serial bit for bit and matches pointwise evaluation") {
  Threads guard(4);
  const auto table = make_recurrence_table({1.3, -0.4}, 40);
  const auto z = linspace(-3.0, 3.0, 1001);
  std::vector<double> par(z.size()), ser(z.size());
  eval_grid(table, 37, z, par);
  eval_grid_serial(table, 37, z, ser);
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(same_bits(par[i], ser[i]));
    CHECK(same_bits(ser[i], eval_recurrence(table, 37, z[i]).p_n));
  }
  std::vector<double> short_out(3);
  CHECK_THROWS_AS(eval_grid(table, 37, z, short_out), ParameterError);
}

TEST_CASE("hypergeometric_gap: parallel equals serial and is small") {
  Threads guard(4);
  const auto x = linspace(-1.0, 1.0, 101);
  for (double a : {-0.5, 0.0, 2.0}) {
    for (double b : {-0.5, 3.7}) {
      for (int n : {0, 5, 40}) {
        const double par = hypergeometric_gap({a, b}, n, x);
        const double ser = hypergeometric_gap_serial({a, b}, n, x);
        CHECK(same_bits(par, ser));
        CHECK(ser <= 1e-10);
      }
    }
  }
}

TEST_CASE("residual_sweep: parallel equals serial bit for bit") {
  Threads guard(4);
  const auto samples = draw_residual_samples(7, 200, {});
  const auto par = residual_sweep(samples);
  const auto ser = residual_sweep_serial(samples);
  REQUIRE(par.size() == samples.size());
  REQUIRE(ser.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(same_bits(par[i].ladder_down, ser[i].ladder_down));
    CHECK(same_bits(par[i].ladder_up, ser[i].ladder_up));
    CHECK(same_bits(par[i].s1, ser[i].s1));
    CHECK(same_bits(par[i].s2, ser[i].s2));
    CHECK(same_bits(par[i].compatibility, ser[i].compatibility));
    CHECK(same_bits(par[i].residue, ser[i].residue));
  }
}

TEST_CASE("residual_sweep: errors inside the parallel region reach the caller") {
  Threads guard(4);
  std::vector<ResidualSample> samples = draw_residual_samples(1, 64, {});
  samples[40].z = 1.0;
  CHECK_THROWS_AS(residual_sweep(samples), DomainError);
  CHECK_THROWS_AS(residual_sweep_serial(samples), DomainError);
}

TEST_CASE("draw_residual_samples: determinism, ranges and exclusion zones") {
  const SampleBox box;
  const auto a = draw_residual_samples(42, 500, box);
  const auto b = draw_residual_samples(42, 500, box);
  const auto c = draw_residual_samples(43, 500, box);
  REQUIRE(a.size() == 500);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_bits(a[i].params.alpha, b[i].params.alpha));
    CHECK(same_bits(a[i].z, b[i].z));
    CHECK(a[i].n == b[i].n);
    differs = differs || a[i].z != c[i].z;
    CHECK(a[i].params.alpha > box.alpha_lo);
    CHECK(a[i].params.alpha <= box.alpha_hi);
    CHECK(a[i].params.beta > box.beta_lo);
    CHECK(a[i].params.beta <= box.beta_hi);
    CHECK(a[i].n >= 1);
    CHECK(a[i].n <= box.n_max);
    CHECK(a[i].z >= box.z_lo);
    CHECK(a[i].z <= box.z_hi);
    CHECK(std::abs(a[i].z - 1.0) >= box.pole_exclusion);
    CHECK(std::abs(a[i].z + 1.0) >= box.pole_exclusion);
  }
  CHECK(differs);
  CHECK(draw_residual_samples(1, 0, box).empty());
  CHECK_THROWS_AS(draw_residual_samples(1, -1, box), ParameterError);
}

TEST_CASE("gram_matrix: parallel equals serial, and is diagonal with the norms") {
  Threads guard(4);
  const JacobiParams p{0.5, 2.0};
  const int n = 20;
  const auto rule = gauss_rule(p, n + 1);
  const auto table = make_recurrence_table(p, n + 1);
  const auto par = gram_matrix(rule, table, n);
  const auto ser = gram_matrix_serial(rule, table, n);
  REQUIRE(par.size() == static_cast<std::size_t>((n + 1) * (n + 1)));
  for (std::size_t k = 0; k < par.size(); ++k) CHECK(same_bits(par[k], ser[k]));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double g = ser[i * (n + 1) + j];
      if (i == j) {
        CHECK(g == doctest::Approx(norm_h(p, i)).epsilon(1e-11));
      } else {
        CHECK(std::abs(g) <= 1e-11 * std::sqrt(norm_h(p, i) * norm_h(p, j)));
        CHECK(std::abs(g - ser[j * (n + 1) + i]) <= 1e-15 * std::sqrt(norm_h(p, i) * norm_h(p, j)));
      }
    }
  }
}
