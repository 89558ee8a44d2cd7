#ifndef LADDEROPS_REPORT_HPP_
#define LADDEROPS_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ladderops/quadrature.hpp"
#include "ladderops/solver.hpp"

namespace ladderops {

/// Shortest decimal string that parses back to the same binary64.
std::string format_roundtrip(double v);
/// Six significant digits for human-readable output.
std::string format_text(double v);

nlohmann::json to_json(const DerivationReport& rep);
nlohmann::json to_json(const QuadratureRule& rule);
/// Header "node,weight" then one LF-terminated line per node.
std::string to_csv(const QuadratureRule& rule);

struct VerifyConfig {
  JacobiParams params;
  int N = 20;
  std::uint64_t seed = 7;
  int samples = 200;
  std::optional<double> tol_override;
};

struct IdentityCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  long checks = 0;
  bool skipped = false;
  std::string note;

  bool passed() const { return skipped || max_residual <= tolerance; }
};

struct VerificationReport {
  VerifyConfig config;
  std::map<std::string, IdentityCheck> identities;  // keyed by identity tag

  bool passed() const;
};

/**
 * Runs every identity check for one parameter pair: the compatibility-condition
 * derivation, the ladder residuals at seeded random points, endpoint values,
 * norms and orthogonality, the derivative identity, the hypergeometric form,
 * the ladder integrals and the Stieltjes identity (the last two only where
 * their integrals exist).
 */
VerificationReport run_verification(const VerifyConfig& cfg);

nlohmann::json to_json(const VerificationReport& rep);

/// v'(z) against a central difference of -log w; the sign-convention self-check.
double vprime_sign_check();

}  // namespace ladderops

#endif  // LADDEROPS_REPORT_HPP_
