#pragma once

// Finite discrete random variables and the expectation functional.

#include <vector>

namespace ouroboros::probability {

inline constexpr double kProbabilityTolerance = 1e-12;

/// X takes value values[i] with probability probs[i]. Duplicate values are
/// allowed; their masses add under expectation.
class DiscreteRandomVariable {
 public:
  /// Throws InvalidArgument unless lengths match, n >= 1, values are finite,
  /// each p in [0, 1] and sum p = 1 within kProbabilityTolerance.
  DiscreteRandomVariable(std::vector<double> values, std::vector<double> probs);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<double> probs_;
};

/// A level a_j on a partition cell of mass P(A_j).
struct Piece {
  double level = 0.0;
  double mass = 0.0;
};

class SimpleRandomVariable {
 public:
  explicit SimpleRandomVariable(std::vector<Piece> pieces);

  /// c * 1_Omega: one piece of mass 1.
  static SimpleRandomVariable indicator(double c);

  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

/// sum x_i p_i, compensated.
double expected_value(const DiscreteRandomVariable& x);

/// sum a_j P(A_j).
double lebesgue_integral(const SimpleRandomVariable& s);

/// Point mass at c.
DiscreteRandomVariable as_constant_rv(double c);

struct ExpectationCheck {
  bool holds = false;
  double expectation = 0.0;         // E[X]
  double iterated_expectation = 0.0;  // E[E[X]]
  double deviation = 0.0;
  double tolerance = 0.0;
};

/// E[E[X]] = E[X] within `tol`, with E[X] re-entered as a point mass.
ExpectationCheck check_expectation_ouroboros(const DiscreteRandomVariable& x, double tol = 1e-12);

}  // namespace ouroboros::probability
