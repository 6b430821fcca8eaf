#pragma once

// Numerical search over polynomial ansaetze u(theta) in even dimension n for
// solutions of the overdetermined system
//   sum_{k=1..n} du/dx_k = n du/dx_n,   sum_k (-1)^k du/dx_k = 0,
//   u(u(x), ..., u(x)) = u(x),
// normalized by u(0,...,0) = 0 and u(1,...,1) = 1 (which excludes constants).
//
// The search reports per-start evidence only. It never claims the arithmetic
// mean is the unique solution.

#include "ouroboros/core.hpp"
#include "ouroboros/expr.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ouroboros::explorer {

std::size_t binomial(std::size_t n, std::size_t k);

/// All monomials in x1..xn of total degree <= d, graded: the constant first,
/// then degree 1 (x1, ..., xn), then degree 2, ... Within a degree, exponent
/// vectors are in descending lexicographic order (x1^2, x1*x2, ..., xn^2).
class MonomialBasis {
 public:
  MonomialBasis(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<unsigned>& exponents(std::size_t j) const { return exponents_[j]; }
  unsigned degree_of(std::size_t j) const { return degrees_[j]; }
  /// Basis slot of the degree-1 monomial x_k (1-based k); equals k.
  std::size_t slot_of_variable(int k) const { return static_cast<std::size_t>(k); }
  std::string name(std::size_t j) const;

  /// out[j] = m_j(x).
  void evaluate(std::span<const double> x, std::span<double> out) const;
  /// out[j] = d m_j / d x_k (x), 1-based k.
  void evaluate_partial(int k, std::span<const double> x, std::span<double> out) const;

 private:
  void powers(std::span<const double> x, std::vector<double>& table) const;

  int n_;
  int degree_;
  std::vector<std::vector<unsigned>> exponents_;
  std::vector<unsigned> degrees_;
};

/// u(x) = sum_j theta_j m_j(x) over a MonomialBasis.
struct AnsatzPolynomial {
  int n = 2;
  int degree = 1;
  std::vector<double> theta;

  /// theta with 1/n in every degree-1 slot and zero elsewhere.
  static AnsatzPolynomial mean(int n, int degree);

  double operator()(std::span<const double> x) const;
  expr::Expr to_expr() const;
};

struct Weights {
  double eq1 = 1.0;
  double eq2 = 1.0;
  double ouroboros = 1.0;
};

enum class InitMode { Random, Mean };

struct ExplorationConfig {
  int n = 2;
  int degree = 2;
  /// 0 selects max(10 * basis size, 50).
  int samples = 0;
  double radius = 1.0;
  std::uint64_t seed = 0;
  int starts = 20;
  Weights weights;
  int max_iterations = 200;
  /// A run counts as converged when J <= this.
  double convergence_tolerance = 1e-10;
  /// Standard deviation of the Gaussian over free theta coordinates.
  double init_scale = 0.5;
  InitMode init = InitMode::Random;

  /// Throws InvalidArgument: n must be even >= 2, degree >= 1, weights > 0, ...
  void validate() const;
  int resolved_samples() const;
};

struct ObjectiveValue {
  double value = 0.0;      // J
  double eq1 = 0.0;        // mean r_I^2
  double eq2 = 0.0;        // mean r_II^2
  double ouroboros = 0.0;  // mean (u(u(x) 1) - u(x))^2
  std::vector<double> gradient;
};

/// J(theta) = w_I mean r_I^2 + w_II mean r_II^2 + w_O mean defect^2 over a
/// fixed sample set. Two theta coordinates are eliminated by the
/// normalization: theta_const = 0 and theta_{x1} = 1 - (sum of the rest).
class Objective {
 public:
  Objective(const ExplorationConfig& config, std::vector<std::vector<double>> samples);

  const MonomialBasis& basis() const { return basis_; }
  std::size_t theta_size() const { return basis_.size(); }
  std::size_t free_size() const { return basis_.size() - 2; }
  std::size_t sample_count() const { return samples_.size(); }

  /// Gradient with respect to every theta coordinate (normalization ignored).
  ObjectiveValue evaluate(std::span<const double> theta) const;
  /// Gradient with respect to the free coordinates.
  ObjectiveValue evaluate_free(std::span<const double> z) const;

  std::vector<double> to_theta(std::span<const double> z) const;
  /// Throws InvalidArgument when theta violates the normalization.
  std::vector<double> to_free(std::span<const double> theta) const;
  bool feasible(std::span<const double> theta, double tol = 1e-12) const;

  /// Stacked residual vector (length 3N) whose squared norm is J, and its
  /// Jacobian with respect to the free coordinates (row-major, 3N x free).
  void residuals(std::span<const double> z, std::vector<double>& r, std::vector<double>* jacobian) const;

 private:
  struct Row {
    std::vector<double> monomials;
    std::vector<double> eq1;
    std::vector<double> eq2;
  };

  ExplorationConfig config_;
  MonomialBasis basis_;
  std::vector<std::vector<double>> samples_;
  std::vector<Row> rows_;
  std::vector<std::size_t> free_slots_;
};

/// Objective at a feasible full theta; throws InvalidArgument otherwise.
ObjectiveValue objective(std::span<const double> theta, const ExplorationConfig& config,
                         const std::vector<std::vector<double>>& samples);

/// The sample set an exploration with `config` uses.
std::vector<std::vector<double>> sample_set(const ExplorationConfig& config, std::uint64_t seed, int count);

/// Affine solution set {particular + span(basis)} of the degree-1 system.
struct LinearSolutionSet {
  int n = 0;
  std::vector<double> particular;
  std::vector<std::vector<double>> basis;
  /// Exact rational text of particular/basis entries.
  std::vector<std::string> particular_exact;
  std::vector<std::vector<std::string>> basis_exact;

  std::size_t dimension() const { return basis.size(); }
  /// Euclidean distance from c to the affine set.
  double distance(std::span<const double> c) const;
  bool contains(std::span<const double> c, double tol = 1e-9) const { return distance(c) <= tol; }
};

/// Closed-form solution of the degree-1 case: (I) with beta = n, (II) and
/// sum c = 1, by exact Gauss-Jordan elimination. n must be even.
LinearSolutionSet linear_case_exact(int n);

enum class Classification { MeanLike, ConstantLike, OtherCandidate, NonConverged };
std::string to_string(Classification c);

struct Reverification {
  std::uint64_t seed = 0;
  int samples = 0;
  double objective = 0.0;
  bool passed = false;
};

struct RunRecord {
  int start = 0;
  std::vector<double> theta;
  double objective = 0.0;
  double eq1 = 0.0;
  double eq2 = 0.0;
  double ouroboros = 0.0;
  double distance_to_mean = 0.0;
  int iterations = 0;
  Classification classification = Classification::NonConverged;
  std::optional<Reverification> reverification;
  /// Degree-1 runs only: distance of the linear coefficients to linear_case_exact.
  std::optional<double> linear_set_distance;
};

struct ClassificationCounts {
  int mean_like = 0;
  int constant_like = 0;
  int other_candidate = 0;
  int non_converged = 0;
};

struct ExplorationReport {
  ExplorationConfig config;
  int samples = 0;
  std::vector<std::string> basis;
  std::vector<double> mean_theta;
  std::vector<RunRecord> runs;
  ClassificationCounts counts;
  std::optional<LinearSolutionSet> linear_case;
};

inline constexpr double kMeanDistanceThreshold = 1e-3;
inline constexpr double kReverifyFactor = 10.0;
inline constexpr int kReverifySampleFactor = 10;

ExplorationReport explore(const ExplorationConfig& config);

}  // namespace ouroboros::explorer
