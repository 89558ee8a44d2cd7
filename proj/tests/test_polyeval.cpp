#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "ladderops/polyeval.hpp"
#include "oracle.hpp"

using namespace ladderops;
using doctest::Approx;

namespace {

const std::array<double, 6> kGrid = {-0.9, -0.5, 0.0, 0.5, 1.0, 3.0};

}  // namespace

TEST_CASE("eval_recurrence: examples") {
  const RecurrenceTable legendre = make_recurrence_table({0, 0}, 5);
  CHECK(eval_recurrence(legendre, 2, 0.0).p_n == Approx(-1.0 / 3).epsilon(1e-15));
  const PolyPair p0 = eval_recurrence(legendre, 0, 7.5);
  CHECK(p0.p_n == 1.0);
  CHECK(p0.p_nm1 == 0.0);
  CHECK(p0.point == 7.5);
  CHECK(eval_recurrence(legendre, 3, 1.0).p_n == Approx(0.4).epsilon(1e-15));
  const PolyPair p2 = eval_recurrence(legendre, 2, 0.5);
  CHECK(p2.n == 2);
  CHECK(p2.p_nm1 == 0.5);
  CHECK_THROWS_AS(eval_recurrence(legendre, 8, 0.0), ParameterError);
  CHECK_THROWS_AS(eval_recurrence(legendre, -1, 0.0), ParameterError);
}

TEST_CASE("eval_recurrence agrees with the explicit Jacobi sum") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      for (int n = 0; n <= 10; ++n) {
        for (double x : {-1.0, -0.73, -0.2, 0.0, 0.41, 0.9, 1.0, 1.7}) {
          const double want = (double)oracle::jacobi_explicit(n, a, b, x);
          CHECK(std::abs(eval_recurrence(JacobiParams{a, b}, n, x).p_n - want) <= 1e-13 * std::max(1.0, std::abs(want)));
        }
      }
    }
  }
}

TEST_CASE("monicity: P_n(z)/z^n -> 1") {
  // P_n(z) = z^n - (alpha_0 + ... + alpha_{n-1}) z^{n-1} + O(z^{n-2}); the
  // subleading term is ~1e-7 at z = 1e6 unless the weight is symmetric.
  const double z = 1e6;
  for (double a : kGrid) {
    for (double b : {a, 1.5}) {
      double trace = 0.0;
      for (int n = 1; n <= 20; ++n) {
        trace += recurrence_alpha({a, b}, n - 1);
        const double ratio = eval_recurrence(JacobiParams{a, b}, n, z).p_n / std::pow(z, n);
        CHECK(std::abs(ratio - (1.0 - trace / z)) <= 1e-9 * n);
        if (a == b) CHECK(std::abs(ratio - 1.0) <= 1e-9 * n);
      }
    }
  }
}

TEST_CASE("reflection: P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      for (int n = 0; n <= 25; ++n) {
        for (double x : {-0.95, -0.3, 0.2, 0.77}) {
          const double lhs = eval_recurrence(JacobiParams{a, b}, n, -x).p_n;
          const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * eval_recurrence(JacobiParams{b, a}, n, x).p_n;
          // absolute floor at the orthonormal scale, for x near a root
          const double scale = std::sqrt(norm_h({a, b}, n) / weight_mass({a, b}));
          CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(std::abs(rhs), scale));
        }
      }
    }
  }
}

TEST_CASE("eval_numerator: examples") {
  const RecurrenceTable legendre = make_recurrence_table({0, 0}, 5);
  CHECK(eval_numerator(legendre, 2.0, 0, 0.3) == 0.0);
  CHECK(eval_numerator(legendre, 2.0, 1, -4.0) == 2.0);
  CHECK(eval_numerator(legendre, 2.0, 2, 0.0) == 0.0);
}

TEST_CASE("eval_numerator matches its divided-difference integral") {
  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    for (double b : {-0.7, 0.5, 2.0}) {
      const JacobiParams p{a, b};
      const auto m = oracle::tanh_sinh(a, b);
      const RecurrenceTable table = make_recurrence_table(p, 8);
      for (int n = 0; n <= 8; ++n) {
        for (double z : {-1.0, -0.4, 0.6, 2.0}) {
          const long double pz = oracle::jacobi_explicit(n, a, b, z);
          // (P_n(z) - P_n(y)) / (z - y) is a polynomial in y; the oracle sums it directly.
          const double want = (double)oracle::integrate(m, [&](long double y) {
            if (std::abs((double)(z - y)) < 1e-9) {
              const long double h = 1e-6L;
              return (oracle::jacobi_explicit(n, a, b, y + h) - oracle::jacobi_explicit(n, a, b, y - h)) / (2 * h);
            }
            return (pz - oracle::jacobi_explicit(n, a, b, y)) / (z - y);
          });
          CHECK(std::abs(eval_numerator(table, weight_mass(p), n, z) - want) <=
                1e-10 * std::max(1.0, std::abs(want)));
        }
      }
    }
  }
}

TEST_CASE("Wronskian-type combination is independent of z") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      const JacobiParams p{a, b};
      const RecurrenceTable table = make_recurrence_table(p, 15);
      const double mu0 = weight_mass(p);
      for (int n = 1; n <= 15; ++n) {
        std::array<double, 3> w{};
        double scale = 0.0;
        const std::array<double, 3> zs = {-0.6, 0.25, 0.9};
        for (int k = 0; k < 3; ++k) {
          const PolyPair pp = eval_recurrence(table, n, zs[k]);
          const double t0 = pp.p_n * eval_numerator(table, mu0, n - 1, zs[k]);
          const double t1 = pp.p_nm1 * eval_numerator(table, mu0, n, zs[k]);
          w[k] = t0 - t1;
          scale = std::max({scale, std::abs(t0), std::abs(t1), std::abs(w[k])});
        }
        CHECK(std::abs(w[0] - w[1]) <= 1e-10 * scale);
        CHECK(std::abs(w[0] - w[2]) <= 1e-10 * scale);
        // The constant itself: -beta_1 ... beta_{n-1} mu_0 = -h_{n-1}.
        CHECK(oracle::rel(w[0], -norm_h(p, n - 1)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("hyp2f1_terminating: small cases") {
  CHECK(hyp2f1_terminating(0, 3.0, 2.0, 0.4) == 1.0);
  // 2F1(-1, b; c; y) = 1 - b y / c
  CHECK(hyp2f1_terminating(1, 3.0, 2.0, 0.4) == Approx(1.0 - 0.6));
  // 2F1(-n, b; b; y) = (1 - y)^n
  CHECK(hyp2f1_terminating(7, 2.5, 2.5, 0.3) == Approx(std::pow(0.7, 7)).epsilon(1e-14));
}

TEST_CASE("eval_hypergeometric: examples") {
  CHECK(eval_hypergeometric({0, 0}, 2, 0.0) == Approx(-1.0 / 3).epsilon(1e-15));
  CHECK(eval_hypergeometric({0, 0}, 1, -1.0) == Approx(-1.0));
  CHECK(eval_hypergeometric({1, 0}, 1, -1.0) == Approx(-2.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(eval_hypergeometric({0, 0}, 2, 1.5), DomainError);
}

TEST_CASE("eval_hypergeometric agrees with the explicit sum and the recurrence") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      for (int n = 0; n <= 12; ++n) {
        for (double x : {-1.0, -0.5, 0.0, 1e-3, 0.5, 1.0}) {
          const double want = (double)oracle::jacobi_explicit(n, a, b, x);
          CHECK(std::abs(eval_hypergeometric({a, b}, n, x) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
        }
      }
      // Relative agreement, far stricter than the absolute acceptance floor.
      for (int n : {20, 40}) {
        for (double x : {-0.9, -0.1, 0.0, 0.3, 0.99}) {
          const double rec = eval_recurrence(JacobiParams{a, b}, n, x).p_n;
          CHECK(oracle::rel(eval_hypergeometric({a, b}, n, x), rec) <= 1e-11);
        }
      }
    }
  }
}

TEST_CASE("eval_derivative: examples") {
  CHECK(eval_derivative({0, 0}, 2, 0.0) == 0.0);
  CHECK(eval_derivative({0, 0}, 1, 0.123) == 1.0);
  CHECK(eval_derivative({0, 0}, 2, 0.5) == Approx(1.0));
  CHECK(eval_derivative({0, 0}, 0, 0.5) == 0.0);
}

TEST_CASE("eval_derivative matches the differentiated recurrence and a central difference") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      const RecurrenceTable table = make_recurrence_table({a, b}, 25);
      for (int n = 1; n <= 25; ++n) {
        for (double z : {-0.8, -0.1, 0.35, 0.9, 2.0}) {
          const double analytic = eval_derivative({a, b}, n, z);
          const double rec = eval_derivative_recurrence(table, n, z);
          CHECK(std::abs(analytic - rec) <= 1e-12 * std::max(1.0, std::abs(rec)));
          if (std::abs(z) < 1.0) {
            const double h = 1e-6;
            const double fd =
                (eval_recurrence(table, n, z + h).p_n - eval_recurrence(table, n, z - h).p_n) / (2 * h);
            CHECK(std::abs(analytic - fd) <= 1e-6);
          }
        }
      }
    }
  }
}

TEST_CASE("stieltjes_transform: examples") {
  CHECK(stieltjes_transform({0, 0}, 3.0).value == Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(stieltjes_transform({0, 0}, -3.0).value == Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(stieltjes_transform({0, 1}, -1.0).value == Approx(-2.0).epsilon(1e-15));
  CHECK(stieltjes_transform({1, 0}, 1.0).value == Approx(2.0).epsilon(1e-15));
  CHECK(stieltjes_transform({0, 0}, 3.0).point == 3.0);
  CHECK_THROWS_AS(stieltjes_transform({0, 0}, 0.5), DomainError);
  CHECK_THROWS_AS(stieltjes_transform({0, 0}, -1.0), DomainError);
  CHECK_THROWS_AS(stieltjes_transform({0, 2}, 1.0), DomainError);
}

TEST_CASE("stieltjes_transform: positivity and tanh-sinh oracle") {
  for (double a : {-0.5, 0.0, 1.5}) {
    for (double b : {-0.5, 0.5, 2.0}) {
      const auto m = oracle::tanh_sinh(a, b);
      for (double z : {-4.0, -1.3, 1.2, 2.0, 10.0}) {
        const double want = (double)oracle::integrate(m, [z](long double y) { return 1.0L / (z - y); });
        const double got = stieltjes_transform({a, b}, z).value;
        CHECK(oracle::rel(got, want) <= 1e-11);
        if (z > 1.0) CHECK(got > 0.0);
      }
    }
  }
  // Convergence fails loudly for a point hugging the support.
  CHECK_THROWS_AS(stieltjes_transform({-0.5, 0.0}, 1.0 + 1e-12), NumericalFailure);
}

TEST_CASE("check_Rn_stieltjes_identity: examples") {
  CHECK(check_Rn_stieltjes_identity({1, 1}, 1) < 1e-10);
  CHECK(check_Rn_stieltjes_identity({0.5, 1.5}, 2) < 1e-10);
  CHECK(check_Rn_stieltjes_identity({1, 1}, 0) < 1e-12);
  CHECK_THROWS_AS(check_Rn_stieltjes_identity({1, 0}, 1), ParameterError);
}
