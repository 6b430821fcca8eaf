#pragma once

#include "ouroboros/expr.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ouroboros::core {

/// u(x) = c1*x1 + ... + cn*xn.
class LinearForm {
 public:
  /// Throws InvalidArgument on an empty or non-finite coefficient vector.
  explicit LinearForm(std::vector<double> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coefficient_sum() const;
  double operator()(std::span<const double> x) const;
  expr::Expr to_expr() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<double> coeffs_;
};

/// The box [-radius, radius]^n sampled `count` times from `seed`.
struct SampleDomain {
  int n = 1;
  double radius = 10.0;
  std::uint64_t seed = 0;
  int count = 200;

  /// Throws InvalidArgument unless n >= 1, radius > 0 and count >= 1.
  void validate() const;
  /// Sample i (0-based). Pure function of (seed, n, radius, i).
  std::vector<double> sample(int i) const;
  std::vector<std::vector<double>> samples() const;
};

enum class Verdict { HoldsExact, HoldsSampled, Fails, Error };

std::string to_string(Verdict v);

struct OuroborosReport {
  Verdict verdict = Verdict::Fails;
  double max_deviation = 0.0;
  std::optional<std::vector<double>> witness;
  /// |f(f(w),...,f(w)) - f(w)| at the witness.
  double witness_deviation = 0.0;
  int samples_used = 0;
  double tolerance = 0.0;
  /// Sampled checks only: whether every f(x) stayed inside [-R, R].
  std::optional<bool> range_contained;
  std::string message;

  bool holds() const { return verdict == Verdict::HoldsExact || verdict == Verdict::HoldsSampled; }
};

/// Exact decision for linear forms: Ouroboros iff the coefficients sum to 1
/// or the form is identically zero.
OuroborosReport check_linear_exact(const LinearForm& f, double tol = 1e-12);

/// Seeded sampling of |f(y,...,y) - y| with y = f(x); a sample passes when
/// the defect is at most tol * (1 + |y|).
OuroborosReport check_sampled(const expr::Expr& f, const SampleDomain& dom, double tol = 1e-9);

/// (f(x), f(f(x), ..., f(x))) with `x.size()` copies on the diagonal.
std::pair<double, double> diagonal_self_apply(const expr::Expr& f, std::span<const double> x);

}  // namespace ouroboros::core
