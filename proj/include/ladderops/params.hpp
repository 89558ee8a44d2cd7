#ifndef LADDEROPS_PARAMS_HPP_
#define LADDEROPS_PARAMS_HPP_

#include <sstream>
#include <stdexcept>
#include <string>

namespace ladderops {

/// Invalid weight exponents or out-of-range indices supplied by the caller.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation requested at a point where the quantity is undefined (a pole,
/// a divergent integral, a region not covered by the implementation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form product or quotient hit a zero denominator for these inputs.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to converge or lost too much precision.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Exponents of the Jacobi weight w(x) = (1-x)^alpha (1+x)^beta on [-1, 1].
 *
 * Construct through make() to get the integrability check; the aggregate
 * form is kept so that tests can build shifted parameter sets cheaply.
 */
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  static JacobiParams make(double alpha, double beta) {
    JacobiParams p{alpha, beta};
    p.validate();
    return p;
  }

  void validate() const {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "Jacobi exponents must satisfy alpha > -1 and beta > -1 (got alpha=" << alpha
          << ", beta=" << beta << ")";
      throw ParameterError(msg.str());
    }
  }

  /// Both exponents strictly positive: the ladder integrals are defined.
  bool strict_positive() const { return alpha > 0.0 && beta > 0.0; }

  /// Weight with the exponents exchanged, i.e. the reflection x -> -x.
  JacobiParams swapped() const { return {beta, alpha}; }

  /// Weight (alpha + k, beta + k); the derivative family.
  JacobiParams shifted(double k) const { return {alpha + k, beta + k}; }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

}  // namespace ladderops

#endif  // LADDEROPS_PARAMS_HPP_
