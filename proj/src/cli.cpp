#include "ladderops/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ladderops/polyeval.hpp"
#include "ladderops/quadrature.hpp"
#include "ladderops/report.hpp"

namespace ladderops {

namespace {

enum class Format { kJson, kCsv, kText };

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  int N = 10;
  int n = -1;
  int m = -1;
  std::vector<double> z;
  std::string format;
  std::string backend = "recurrence";
  bool numerator = false;
  bool derivative = false;
  std::uint64_t seed = 7;
  int samples = 200;
  std::optional<double> tol;
};

Format resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv("LADDER_OPS_FORMAT");
    name = (env != nullptr && *env != '\0') ? env : "csv";
  }
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw ParameterError("unknown output format '" + name + "' (expected json, csv or text)");
}

std::string num(double v, Format f) { return f == Format::kText ? format_text(v) : format_roundtrip(v); }

// nlohmann serialises doubles with a shortest round-trip algorithm already.
void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

nlohmann::json params_json(const JacobiParams& p) { return {{"alpha", p.alpha}, {"beta", p.beta}}; }

int cmd_table(const Options& o, std::ostream& out) {
  const JacobiParams p = JacobiParams::make(o.alpha, o.beta);
  if (o.N < 0) throw ParameterError("table: N must be >= 0");
  const Format f = resolve_format(o.format);
  struct Row {
    int n;
    double alpha, beta, R, r, h, p1, pm1;
  };
  std::vector<Row> rows(o.N + 1);
#pragma omp parallel for schedule(static)
  for (int n = 0; n <= o.N; ++n) {
    rows[n] = {n,
               recurrence_alpha(p, n),
               n >= 1 ? recurrence_beta(p, n) : 0.0,
               ladder_R(p, n),
               ladder_r(p, n),
               norm_h(p, n),
               value_at_one(p, n),
               value_at_minus_one(p, n)};
  }
  if (f == Format::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Row& r : rows) {
      arr.push_back({{"n", r.n},
                     {"alpha", r.alpha},
                     {"beta", r.n >= 1 ? nlohmann::json(r.beta) : nlohmann::json(nullptr)},
                     {"R", r.R},
                     {"r", r.r},
                     {"h", r.h},
                     {"P_at_1", r.p1},
                     {"P_at_minus_1", r.pm1}});
    }
    emit_json(out, {{"params", params_json(p)}, {"N", o.N}, {"rows", std::move(arr)}});
    return kExitOk;
  }
  const char sep = f == Format::kCsv ? ',' : ' ';
  const int w = f == Format::kText ? 13 : 0;
  auto cell = [&](const std::string& s, bool last = false) {
    out << std::setw(w) << s;
    if (!last) out << sep;
  };
  cell("n");
  cell("alpha");
  cell("beta");
  cell("R");
  cell("r");
  cell("h");
  cell("P_at_1");
  cell("P_at_minus_1", true);
  out << "\n";
  for (const Row& r : rows) {
    cell(std::to_string(r.n));
    cell(num(r.alpha, f));
    cell(r.n >= 1 ? num(r.beta, f) : "");
    cell(num(r.R, f));
    cell(num(r.r, f));
    cell(num(r.h, f));
    cell(num(r.p1, f));
    cell(num(r.pm1, f), true);
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyConfig cfg;
  cfg.params = JacobiParams::make(o.alpha, o.beta);
  cfg.N = o.N;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.tol_override = o.tol;
  const Format f = resolve_format(o.format);
  const VerificationReport rep = run_verification(cfg);
  if (f == Format::kText) {
    for (const auto& [tag, c] : rep.identities) {
      out << std::left << std::setw(14) << tag << (c.skipped ? "SKIP" : c.passed() ? "PASS" : "FAIL")
          << "  max_residual=" << format_text(c.max_residual) << "  tol=" << format_text(c.tolerance)
          << "  " << c.name << "\n";
    }
  } else {
    emit_json(out, to_json(rep));
  }
  if (!rep.passed()) {
    err << "verify: one or more identities exceeded tolerance\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const JacobiParams p = JacobiParams::make(o.alpha, o.beta);
  if (o.n < 0) throw ParameterError("eval: degree n must be >= 0");
  if (o.z.empty()) throw ParameterError("eval: at least one point -z is required");
  const bool hyper = o.backend == "hypergeometric";
  if (!hyper && o.backend != "recurrence") {
    throw ParameterError("eval: backend must be 'recurrence' or 'hypergeometric'");
  }
  const Format f = resolve_format(o.format);
  const RecurrenceTable table = make_recurrence_table(p, std::max(o.n, 1));
  for (double z : o.z) {
    if (!std::isfinite(z)) throw ParameterError("eval: points must be finite");
    if (hyper && !(z >= -1.0 && z <= 1.0)) {
      throw ParameterError("eval: the hypergeometric backend needs z in [-1, 1]");
    }
  }
  struct Val {
    double z, p, q, dp;
  };
  std::vector<Val> vals;
  for (double z : o.z) {
    Val v{z, hyper ? eval_hypergeometric(p, o.n, z) : eval_recurrence(table, o.n, z).p_n, 0.0, 0.0};
    if (o.numerator) v.q = eval_numerator(table, weight_mass(p), o.n, z);
    if (o.derivative) v.dp = eval_derivative(p, o.n, z);
    vals.push_back(v);
  }
  if (f == Format::kJson) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Val& v : vals) {
      nlohmann::json e = {{"z", v.z}, {"P", v.p}};
      if (o.numerator) e["Q"] = v.q;
      if (o.derivative) e["dP"] = v.dp;
      pts.push_back(std::move(e));
    }
    emit_json(out, {{"params", params_json(p)}, {"n", o.n}, {"backend", o.backend}, {"points", pts}});
    return kExitOk;
  }
  const std::string sep = f == Format::kCsv ? "," : " ";
  out << "z" << sep << "P";
  if (o.numerator) out << sep << "Q";
  if (o.derivative) out << sep << "dP";
  out << "\n";
  for (const Val& v : vals) {
    out << num(v.z, f) << sep << num(v.p, f);
    if (o.numerator) out << sep << num(v.q, f);
    if (o.derivative) out << sep << num(v.dp, f);
    out << "\n";
  }
  return kExitOk;
}

int cmd_quad(const Options& o, std::ostream& out) {
  const JacobiParams p = JacobiParams::make(o.alpha, o.beta);
  if (o.m < 1) throw ParameterError("quad: m must be >= 1");
  const Format f = resolve_format(o.format);
  const QuadratureRule rule = gauss_rule(p, o.m);
  switch (f) {
    case Format::kJson:
      emit_json(out, to_json(rule));
      break;
    case Format::kCsv:
      out << to_csv(rule);
      break;
    case Format::kText:
      for (int i = 0; i < rule.m; ++i) {
        out << format_text(rule.nodes[i]) << " " << format_text(rule.weights[i]) << "\n";
      }
      break;
  }
  return kExitOk;
}

// Rejects exponents <= -1 during parsing, where the weight is not integrable.
const CLI::Validator kExponent(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(s, v)) return "'" + s + "' is not a number";
      if (!(v > -1.0)) return "exponent must be > -1 for an integrable weight (got " + s + ")";
      return {};
    },
    "REAL > -1");

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "exponent of (1-x)")->check(kExponent)->capture_default_str();
  sub->add_option("--beta", o.beta, "exponent of (1+x)")->check(kExponent)->capture_default_str();
  sub->add_option("--format", o.format, "json, csv or text (default csv, or $LADDER_OPS_FORMAT)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monic Jacobi polynomials from ladder-operator compatibility conditions", "ladder_ops"};
  app.require_subcommand(1);

  CLI::App* table = app.add_subcommand("table", "recurrence and ladder coefficients for n = 0..N");
  add_params(table, o);
  table->add_option("-N,--max-n", o.N, "largest index")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check every identity; JSON report");
  add_params(verify, o);
  verify->add_option("-N,--max-n", o.N, "largest index")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for random evaluation points")->capture_default_str();
  verify->add_option("--samples", o.samples, "random (n, z) samples")->capture_default_str();
  verify->add_option("--tol", o.tol, "replace every tolerance with this value");

  CLI::App* eval = app.add_subcommand("eval", "evaluate P_n at points");
  add_params(eval, o);
  eval->add_option("-n,--degree", o.n, "degree")->required();
  eval->add_option("-z,--point", o.z, "evaluation points")->required()->allow_extra_args(false);
  eval->add_option("--backend", o.backend, "recurrence or hypergeometric")->capture_default_str();
  eval->add_flag("--numerator", o.numerator, "also print Q_n(z)");
  eval->add_flag("--derivative", o.derivative, "also print P_n'(z)");

  CLI::App* quad = app.add_subcommand("quad", "Gauss-Jacobi rule");
  add_params(quad, o);
  quad->add_option("-m,--points", o.m, "number of nodes")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ladder_ops");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ladder_ops: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (eval->parsed()) return cmd_eval(o, out);
    if (quad->parsed()) return cmd_quad(o, out);
  } catch (const ParameterError& e) {
    err << "ladder_ops: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ladder_ops: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ladderops
