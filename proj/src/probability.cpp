#include "ouroboros/probability.hpp"

#include "ouroboros/errors.hpp"
#include "ouroboros/exact.hpp"
#include "ouroboros/numeric.hpp"

#include <cmath>
#include <string>

namespace ouroboros::probability {

namespace {

void check_mass(double p, std::size_t i, const char* what) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(i + 1) + " is " + exact::shortest(p) +
                          ", outside [0, 1]");
  }
}

void check_total(double total) {
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw InvalidArgument("probabilities sum to " + exact::shortest(total));
  }
}

}  // namespace

DiscreteRandomVariable::DiscreteRandomVariable(std::vector<double> values, std::vector<double> probs)
    : values_(std::move(values)), probs_(std::move(probs)) {
  if (values_.empty()) throw InvalidArgument("random variable needs at least one outcome");
  if (values_.size() != probs_.size()) {
    throw InvalidArgument("values and probs differ in length (" + std::to_string(values_.size()) + " vs " +
                          std::to_string(probs_.size()) + ")");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw InvalidArgument("value " + std::to_string(i + 1) + " is not finite");
    check_mass(probs_[i], i, "probability");
  }
  check_total(compensated_sum(probs_));
}

SimpleRandomVariable::SimpleRandomVariable(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidArgument("simple random variable needs at least one piece");
  CompensatedSum total;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!std::isfinite(pieces_[i].level)) throw InvalidArgument("level " + std::to_string(i + 1) + " is not finite");
    check_mass(pieces_[i].mass, i, "mass");
    total.add(pieces_[i].mass);
  }
  check_total(total.value());
}

SimpleRandomVariable SimpleRandomVariable::indicator(double c) { return SimpleRandomVariable({{c, 1.0}}); }

double expected_value(const DiscreteRandomVariable& x) {
  CompensatedSum s;
  for (std::size_t i = 0; i < x.size(); ++i) s.add(x.values()[i] * x.probs()[i]);
  return s.value();
}

double lebesgue_integral(const SimpleRandomVariable& s) {
  CompensatedSum total;
  for (const auto& piece : s.pieces()) total.add(piece.level * piece.mass);
  return total.value();
}

DiscreteRandomVariable as_constant_rv(double c) { return DiscreteRandomVariable({c}, {1.0}); }

ExpectationCheck check_expectation_ouroboros(const DiscreteRandomVariable& x, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  ExpectationCheck check;
  check.tolerance = tol;
  check.expectation = expected_value(x);
  check.iterated_expectation = expected_value(as_constant_rv(check.expectation));
  check.deviation = std::abs(check.iterated_expectation - check.expectation);
  check.holds = check.deviation <= tol;
  return check;
}

}  // namespace ouroboros::probability
