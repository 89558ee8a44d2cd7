#include "ladderops/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <system_error>

#include "ladderops/kernels.hpp"
#include "ladderops/ladder.hpp"
#include "ladderops/polyeval.hpp"

namespace ladderops {

std::string format_roundtrip(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf.data(), res.ptr);
}

std::string format_text(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", v);
  return buf.data();
}

nlohmann::json to_json(const DerivationReport& rep) {
  nlohmann::json residue = nlohmann::json::array();
  for (const auto& r : rep.residue_residuals) residue.push_back({r[0], r[1], r[2], r[3]});
  return {
      {"params", {{"alpha", rep.params.alpha}, {"beta", rep.params.beta}}},
      {"N", rep.N},
      {"alphas_derived", rep.alphas_derived},
      {"betas_derived", rep.betas_derived},
      {"alphas_closed", rep.alphas_closed},
      {"betas_closed", rep.betas_closed},
      {"max_rel_error_alpha", rep.max_rel_error_alpha},
      {"max_rel_error_beta", rep.max_rel_error_beta},
      {"residue_residuals", residue},
      {"summed_form_residuals", rep.summed_form_residuals},
      {"max_conserved_drift", rep.max_conserved_drift},
      {"max_r_chain_residual", rep.max_r_chain_residual},
      {"all_betas_positive", rep.all_betas_positive},
  };
}

nlohmann::json to_json(const QuadratureRule& rule) {
  return {
      {"params", {{"alpha", rule.params.alpha}, {"beta", rule.params.beta}}},
      {"m", rule.m},
      {"nodes", rule.nodes},
      {"weights", rule.weights},
  };
}

std::string to_csv(const QuadratureRule& rule) {
  std::string out = "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out += format_roundtrip(rule.nodes[i]) + "," + format_roundtrip(rule.weights[i]) + "\n";
  }
  return out;
}

double vprime_sign_check() {
  const JacobiParams p{1.0, 2.0};
  const double z = 0.3;
  const double h = 1e-6;
  auto log_w = [&](double x) { return p.alpha * std::log1p(-x) + p.beta * std::log1p(x); };
  const double fd = -(log_w(z + h) - log_w(z - h)) / (2.0 * h);
  return std::abs(potential_vprime(p, z) - fd) / std::max(1.0, std::abs(fd));
}

bool VerificationReport::passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const auto& kv) { return kv.second.passed(); });
}

namespace {

struct Tally {
  IdentityCheck check;
  void add(double residual) {
    check.max_residual = std::max(check.max_residual, residual);
    ++check.checks;
  }
};

double rel_or_abs(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& cfg) {
  cfg.params.validate();
  if (cfg.N < 1) throw ParameterError("verify: N must be >= 1");
  if (cfg.samples < 1) throw ParameterError("verify: need at least one random sample");
  const JacobiParams& p = cfg.params;
  const int N = cfg.N;

  VerificationReport rep;
  rep.config = cfg;
  auto make = [&](const std::string& name, double tol) {
    Tally t;
    t.check.name = name;
    t.check.tolerance = cfg.tol_override.value_or(tol);
    return t;
  };
  auto store = [&](const std::string& tag, Tally t) { rep.identities[tag] = std::move(t.check); };

  {
    Tally t = make("potential derivative sign convention", 1e-8);
    t.add(vprime_sign_check());
    store("vprime-sign", std::move(t));
  }

  // Derivation of the recurrence coefficients from the compatibility conditions.
  const DerivationReport d = derive_all(p, N);
  {
    Tally ta = make("derived alpha_n vs closed form", 1e-12);
    Tally tb = make("derived beta_n vs closed form", 1e-12);
    ta.check.max_residual = d.max_rel_error_alpha;
    ta.check.checks = N + 1;
    tb.check.max_residual = d.max_rel_error_beta;
    tb.check.checks = N;
    if (!d.all_betas_positive) {
      tb.check.max_residual = std::max(tb.check.max_residual, 1.0);
      tb.check.note = "non-positive derived beta_n";
    }
    store("2.15", std::move(ta));
    store("2.18", std::move(tb));

    Tally tc = make("alpha_n integrating-factor conservation", 1e-12);
    tc.add(d.max_conserved_drift);
    store("2.14", std::move(tc));

    Tally ts = make("summed beta_n identity with zero constant", 1e-12);
    for (double r : d.summed_form_residuals) ts.add(r);
    store("2.17", std::move(ts));

    Tally tr = make("r_{n+1} chain closure", 1e-13);
    tr.add(d.max_r_chain_residual);
    tr.check.checks = N;
    store("2.13", std::move(tr));

    static const std::array<const char*, 4> tags = {"2.5", "2.6", "2.7", "2.8"};
    static const std::array<const char*, 4> names = {
        "first condition residue at z = +1", "first condition residue at z = -1",
        "second condition residue at z = +1", "second condition residue at z = -1"};
    for (int e = 0; e < 4; ++e) {
      Tally te = make(names[e], 1e-10);
      for (const auto& r : d.residue_residuals) te.add(r[e]);
      store(tags[e], std::move(te));
    }
  }

  // Ladder identities at seeded random points.
  {
    SampleBox box;
    box.n_max = N;
    std::vector<ResidualSample> samples = draw_residual_samples(cfg.seed, cfg.samples, box);
    for (auto& s : samples) s.params = p;
    const std::vector<ResidualValues> vals = residual_sweep(samples);
    Tally down = make("lowering operator", 1e-10);
    Tally up = make("raising operator", 1e-10);
    Tally s1 = make("first compatibility condition", 1e-10);
    Tally s2 = make("second compatibility condition", 1e-10);
    Tally compat = make("S_n Phi_n = 0", 1e-10);
    for (const auto& v : vals) {
      down.add(v.ladder_down);
      up.add(v.ladder_up);
      s1.add(v.s1);
      s2.add(v.s2);
      compat.add(v.compatibility);
    }
    // Structural zeros of S_n at the same points.
    for (const auto& s : samples) {
      const TwoByTwo S = build_S(p, s.n, s.z);
      const double b = recurrence_beta(p, s.n);
      compat.add(std::abs(S(1, 1)));
      compat.add(std::abs(S(0, 1) - b * S(1, 0)) / std::max(1.0, std::abs(S(0, 1))));
    }
    store("1.3", std::move(down));
    store("1.4", std::move(up));
    store("S1", std::move(s1));
    store("S2", std::move(s2));
    store("1.12", std::move(compat));
  }

  // Endpoint values.
  {
    Tally prod = make("endpoint products from ladder regularity", 1e-11);
    Tally poch = make("endpoint Pochhammer forms vs recurrence", 1e-11);
    const RecurrenceTable table = make_recurrence_table(p, N);
    for (int n = 0; n <= N; ++n) {
      const double v1 = value_at_one(p, n);
      const double vm1 = value_at_minus_one(p, n);
      poch.add(rel_or_abs(eval_recurrence(table, n, 1.0).p_n, v1));
      poch.add(rel_or_abs(eval_recurrence(table, n, -1.0).p_n, vm1));
      try {
        prod.add(rel_or_abs(endpoint_product_form(p, n, Endpoint::kPlusOne), v1));
      } catch (const DegenerateError&) {
        prod.check.note = "some products degenerate; skipped";
      }
      try {
        prod.add(rel_or_abs(endpoint_product_form(p, n, Endpoint::kMinusOne), vm1));
      } catch (const DegenerateError&) {
        prod.check.note = "some products degenerate; skipped";
      }
    }
    store("3.1", std::move(prod));
    store("3.2/3.3", std::move(poch));
  }

  // Norms and orthogonality.
  {
    Tally norms = make("h_n product form vs quadrature", 1e-11);
    for (int n = 0; n <= N; ++n) {
      const RecurrenceTable table = make_recurrence_table(p, std::max(n - 1, 0));
      const double q = integrate(gauss_rule(p, n + 1), [&](double x) {
        const double v = eval_recurrence(table, n, x).p_n;
        return v * v;
      });
      norms.add(rel_or_abs(q, norm_h(p, n)));
    }
    store("3.4", std::move(norms));

    Tally orth = make("orthogonality certificate", 1e-11);
    const QuadratureRule rule = gauss_rule(p, N + 1);
    const std::vector<double> g = gram_matrix(rule, make_recurrence_table(p, N), N);
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; j <= N; ++j) {
        const double hi = norm_h(p, i);
        const double hj = norm_h(p, j);
        const double expect = (i == j) ? hi : 0.0;
        orth.add(std::abs(g[i * (N + 1) + j] - expect) / std::sqrt(hi * hj));
      }
    }
    store("1.1", std::move(orth));
  }

  // Derivative identity against a central difference.
  {
    Tally der = make("derivative lowers to the (alpha+1, beta+1) family", 1e-6);
    const double h = 1e-6;
    for (int n = 1; n <= N; ++n) {
      const RecurrenceTable table = make_recurrence_table(p, n - 1);
      for (int k = -8; k <= 8; ++k) {
        const double z = 0.1 * k;
        const double fd =
            (eval_recurrence(table, n, z + h).p_n - eval_recurrence(table, n, z - h).p_n) / (2.0 * h);
        der.add(std::abs(eval_derivative(p, n, z) - fd));
      }
    }
    store("3.8", std::move(der));
  }

  // Hypergeometric representations.
  {
    Tally hyp = make("2F1 representations vs recurrence", 1e-10);
    std::vector<double> grid(101);
    for (int i = 0; i <= 100; ++i) grid[i] = -1.0 + 0.02 * i;
    grid.back() = 1.0;
    for (int n = 0; n <= std::min(N, 40); ++n) {
      hyp.add(hypergeometric_gap(p, n, grid));
      hyp.check.checks += static_cast<long>(grid.size()) - 1;
    }
    store("3.10/3.11", std::move(hyp));
  }

  // Ladder integrals and the Stieltjes identity, only where the integrals converge.
  {
    Tally lad = make("R_n, r_n integrals vs closed forms", 1e-10);
    if (p.strict_positive()) {
      for (int n = 0; n <= std::min(N, 15); ++n) {
        lad.add(rel_or_abs(compute_R_numeric(p, n, n + 1), ladder_R(p, n)));
        if (n >= 1) lad.add(rel_or_abs(compute_r_numeric(p, n, n + 1), ladder_r(p, n)));
      }
    } else {
      lad.check.skipped = true;
      lad.check.note = "requires alpha > 0 and beta > 0";
    }
    store("2.3/2.4", std::move(lad));

    Tally st = make("R_n via numerator polynomial and Stieltjes transform", 1e-9);
    if (p.beta > 0.0) {
      for (int n = 0; n <= std::min(N, 10); ++n) st.add(check_Rn_stieltjes_identity(p, n));
    } else {
      st.check.skipped = true;
      st.check.note = "requires beta > 0";
    }
    store("Rn-Stieltjes", std::move(st));
  }

  return rep;
}

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json ids = nlohmann::json::object();
  for (const auto& [tag, c] : rep.identities) {
    nlohmann::json entry = {
        {"name", c.name},       {"max_residual", c.max_residual}, {"tolerance", c.tolerance},
        {"checks", c.checks},   {"skipped", c.skipped},           {"passed", c.passed()},
    };
    if (!c.note.empty()) entry["note"] = c.note;
    ids[tag] = std::move(entry);
  }
  const VerifyConfig& cfg = rep.config;
  nlohmann::json out = {
      {"params", {{"alpha", cfg.params.alpha}, {"beta", cfg.params.beta}}},
      {"N", cfg.N},
      {"seed", cfg.seed},
      {"samples", cfg.samples},
      {"passed", rep.passed()},
      {"identities", std::move(ids)},
  };
  if (cfg.tol_override) out["tolerance_override"] = *cfg.tol_override;
  return out;
}

}  // namespace ladderops
