#include "ouroboros/explorer.hpp"

#include "ouroboros/errors.hpp"
#include "ouroboros/exact.hpp"
#include "ouroboros/numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

namespace ouroboros::explorer {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// ---------------------------------------------------------------------------
// Basis

MonomialBasis::MonomialBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw InvalidArgument("basis dimension must be >= 1");
  if (degree < 0) throw InvalidArgument("basis degree must be >= 0");
  std::vector<unsigned> current(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned remaining) {
    if (i + 1 == current.size()) {
      current[i] = remaining;
      exponents_.push_back(current);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[i] = e;
      fill(i + 1, remaining - e);
    }
  };
  for (int d = 0; d <= degree; ++d) {
    const std::size_t before = exponents_.size();
    fill(0, static_cast<unsigned>(d));
    degrees_.insert(degrees_.end(), exponents_.size() - before, static_cast<unsigned>(d));
  }
}

std::string MonomialBasis::name(std::size_t j) const {
  std::string out;
  const auto& e = exponents_[j];
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

void MonomialBasis::powers(std::span<const double> x, std::vector<double>& table) const {
  const auto stride = static_cast<std::size_t>(degree_) + 1;
  table.assign(static_cast<std::size_t>(n_) * stride, 1.0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    for (std::size_t p = 1; p < stride; ++p) table[i * stride + p] = table[i * stride + p - 1] * x[i];
  }
}

void MonomialBasis::evaluate(std::span<const double> x, std::span<double> out) const {
  if (x.size() < static_cast<std::size_t>(n_)) throw EvaluationError("point shorter than basis dimension");
  std::vector<double> table;
  powers(x, table);
  const auto stride = static_cast<std::size_t>(degree_) + 1;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    double v = 1.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) v *= table[i * stride + exponents_[j][i]];
    out[j] = v;
  }
}

void MonomialBasis::evaluate_partial(int k, std::span<const double> x, std::span<double> out) const {
  if (x.size() < static_cast<std::size_t>(n_)) throw EvaluationError("point shorter than basis dimension");
  std::vector<double> table;
  powers(x, table);
  const auto stride = static_cast<std::size_t>(degree_) + 1;
  const auto kk = static_cast<std::size_t>(k - 1);
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    const unsigned ek = exponents_[j][kk];
    if (ek == 0) {
      out[j] = 0.0;
      continue;
    }
    double v = static_cast<double>(ek) * table[kk * stride + ek - 1];
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
      if (i != kk) v *= table[i * stride + exponents_[j][i]];
    }
    out[j] = v;
  }
}

AnsatzPolynomial AnsatzPolynomial::mean(int n, int degree) {
  AnsatzPolynomial u{n, degree, std::vector<double>(binomial(static_cast<std::size_t>(n + degree), static_cast<std::size_t>(degree)), 0.0)};
  for (int k = 1; k <= n; ++k) u.theta[static_cast<std::size_t>(k)] = 1.0 / n;
  return u;
}

double AnsatzPolynomial::operator()(std::span<const double> x) const {
  const MonomialBasis basis(n, degree);
  std::vector<double> m(basis.size());
  basis.evaluate(x, m);
  CompensatedSum s;
  for (std::size_t j = 0; j < m.size(); ++j) s.add(theta[j] * m[j]);
  return s.value();
}

expr::Expr AnsatzPolynomial::to_expr() const {
  const MonomialBasis basis(n, degree);
  expr::Expr result;
  bool first = true;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (theta[j] == 0.0) continue;
    expr::Expr term = expr::Expr::constant(theta[j]);
    const auto& e = basis.exponents(j);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      expr::Expr factor = expr::Expr::variable(static_cast<int>(i + 1));
      if (e[i] > 1) factor = expr::Expr::pow(factor, e[i]);
      term = expr::Expr::mul(term, factor);
    }
    result = first ? term : expr::Expr::add(result, term);
    first = false;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Config

void ExplorationConfig::validate() const {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("the system is posed for even n >= 2 (got n=" + std::to_string(n) + ")");
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  if (samples < 0) throw InvalidArgument("samples must be >= 0 (0 = automatic)");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be positive");
  if (starts < 1) throw InvalidArgument("starts must be >= 1");
  if (!(weights.eq1 > 0.0) || !(weights.eq2 > 0.0) || !(weights.ouroboros > 0.0)) {
    throw InvalidArgument("all objective weights must be positive");
  }
  if (max_iterations < 0) throw InvalidArgument("max_iterations must be >= 0");
  if (!(convergence_tolerance > 0.0)) throw InvalidArgument("convergence tolerance must be positive");
  if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) throw InvalidArgument("init scale must be >= 0");
  if (binomial(static_cast<std::size_t>(n + degree), static_cast<std::size_t>(degree)) > 2000) {
    throw InvalidArgument("basis too large for this search (more than 2000 monomials)");
  }
}

int ExplorationConfig::resolved_samples() const {
  if (samples > 0) return samples;
  const auto p = binomial(static_cast<std::size_t>(n + degree), static_cast<std::size_t>(degree));
  return std::max(static_cast<int>(10 * p), 50);
}

std::vector<std::vector<double>> sample_set(const ExplorationConfig& config, std::uint64_t seed, int count) {
  core::SampleDomain dom{config.n, config.radius, seed, count};
  return dom.samples();
}

// ---------------------------------------------------------------------------
// Objective

Objective::Objective(const ExplorationConfig& config, std::vector<std::vector<double>> samples)
    : config_(config), basis_(config.n, config.degree), samples_(std::move(samples)) {
  config_.validate();
  if (samples_.empty()) throw InvalidArgument("objective needs at least one sample");
  const std::size_t p = basis_.size();
  const int n = config_.n;
  std::vector<double> partial(p);
  rows_.reserve(samples_.size());
  for (const auto& x : samples_) {
    Row row{std::vector<double>(p), std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
    basis_.evaluate(x, row.monomials);
    for (int k = 1; k <= n; ++k) {
      basis_.evaluate_partial(k, x, partial);
      // (I) with beta = n: sum_k d_k u - n d_n u.  (II): sum_k (-1)^k d_k u.
      const double w1 = (k == n) ? 1.0 - n : 1.0;
      const double w2 = (k % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t j = 0; j < p; ++j) {
        row.eq1[j] += w1 * partial[j];
        row.eq2[j] += w2 * partial[j];
      }
    }
    rows_.push_back(std::move(row));
  }
  for (std::size_t j = 2; j < p; ++j) free_slots_.push_back(j);
}

std::vector<double> Objective::to_theta(std::span<const double> z) const {
  if (z.size() != free_size()) throw InvalidArgument("free coordinate vector has wrong length");
  std::vector<double> theta(theta_size(), 0.0);
  CompensatedSum rest;
  for (std::size_t f = 0; f < z.size(); ++f) {
    theta[free_slots_[f]] = z[f];
    rest.add(z[f]);
  }
  theta[1] = 1.0 - rest.value();
  return theta;
}

bool Objective::feasible(std::span<const double> theta, double tol) const {
  if (theta.size() != theta_size()) return false;
  std::span<const double> rest = theta.subspan(1);
  return std::abs(theta[0]) <= tol && std::abs(compensated_sum(rest) - 1.0) <= tol;
}

std::vector<double> Objective::to_free(std::span<const double> theta) const {
  if (theta.size() != theta_size()) {
    throw InvalidArgument("theta has length " + std::to_string(theta.size()) + ", basis has " +
                          std::to_string(theta_size()));
  }
  if (!feasible(theta)) {
    throw InvalidArgument("theta violates the normalization u(0,...,0) = 0, u(1,...,1) = 1");
  }
  std::vector<double> z;
  z.reserve(free_size());
  for (std::size_t j : free_slots_) z.push_back(theta[j]);
  return z;
}

namespace {

// Diagonal restriction p(t) = u(t, ..., t) = sum_e S_e t^e.
struct Diagonal {
  std::vector<double> by_degree;

  double value(double t) const {
    double v = 0.0;
    for (std::size_t e = by_degree.size(); e-- > 0;) v = v * t + by_degree[e];
    return v;
  }
  double slope(double t) const {
    double v = 0.0;
    for (std::size_t e = by_degree.size(); e-- > 1;) v = v * t + static_cast<double>(e) * by_degree[e];
    return v;
  }
};

}  // namespace

ObjectiveValue Objective::evaluate(std::span<const double> theta) const {
  if (theta.size() != theta_size()) throw InvalidArgument("theta has wrong length");
  const std::size_t p = theta_size();
  const double inv_n = 1.0 / static_cast<double>(rows_.size());
  const auto& w = config_.weights;

  Diagonal diag{std::vector<double>(static_cast<std::size_t>(config_.degree) + 1, 0.0)};
  for (std::size_t j = 0; j < p; ++j) diag.by_degree[basis_.degree_of(j)] += theta[j];

  ObjectiveValue out;
  out.gradient.assign(p, 0.0);
  std::vector<double> y_pow(static_cast<std::size_t>(config_.degree) + 1);
  for (const auto& row : rows_) {
    double r1 = 0.0;
    double r2 = 0.0;
    double y = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      r1 += row.eq1[j] * theta[j];
      r2 += row.eq2[j] * theta[j];
      y += row.monomials[j] * theta[j];
    }
    const double defect = diag.value(y) - y;
    const double slope = diag.slope(y) - 1.0;
    y_pow[0] = 1.0;
    for (std::size_t e = 1; e < y_pow.size(); ++e) y_pow[e] = y_pow[e - 1] * y;

    out.eq1 += r1 * r1 * inv_n;
    out.eq2 += r2 * r2 * inv_n;
    out.ouroboros += defect * defect * inv_n;
    for (std::size_t j = 0; j < p; ++j) {
      const double d_defect = y_pow[basis_.degree_of(j)] + slope * row.monomials[j];
      out.gradient[j] += 2.0 * inv_n * (w.eq1 * r1 * row.eq1[j] + w.eq2 * r2 * row.eq2[j] + w.ouroboros * defect * d_defect);
    }
  }
  out.value = w.eq1 * out.eq1 + w.eq2 * out.eq2 + w.ouroboros * out.ouroboros;
  return out;
}

ObjectiveValue Objective::evaluate_free(std::span<const double> z) const {
  const auto theta = to_theta(z);
  ObjectiveValue full = evaluate(theta);
  // d theta_f / d z_f = 1, d theta_{x1} / d z_f = -1.
  std::vector<double> g(free_size());
  for (std::size_t f = 0; f < g.size(); ++f) g[f] = full.gradient[free_slots_[f]] - full.gradient[1];
  full.gradient = std::move(g);
  return full;
}

void Objective::residuals(std::span<const double> z, std::vector<double>& r, std::vector<double>* jacobian) const {
  const auto theta = to_theta(z);
  const std::size_t p = theta_size();
  const std::size_t q = free_size();
  const std::size_t m = rows_.size();
  const double inv_n = 1.0 / static_cast<double>(m);
  const double s1 = std::sqrt(config_.weights.eq1 * inv_n);
  const double s2 = std::sqrt(config_.weights.eq2 * inv_n);
  const double s3 = std::sqrt(config_.weights.ouroboros * inv_n);

  Diagonal diag{std::vector<double>(static_cast<std::size_t>(config_.degree) + 1, 0.0)};
  for (std::size_t j = 0; j < p; ++j) diag.by_degree[basis_.degree_of(j)] += theta[j];

  r.assign(3 * m, 0.0);
  if (jacobian) jacobian->assign(3 * m * q, 0.0);
  std::vector<double> y_pow(static_cast<std::size_t>(config_.degree) + 1);
  std::vector<double> d_defect(p);
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = rows_[i];
    double r1 = 0.0;
    double r2 = 0.0;
    double y = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      r1 += row.eq1[j] * theta[j];
      r2 += row.eq2[j] * theta[j];
      y += row.monomials[j] * theta[j];
    }
    r[i] = s1 * r1;
    r[m + i] = s2 * r2;
    r[2 * m + i] = s3 * (diag.value(y) - y);
    if (!jacobian) continue;

    const double slope = diag.slope(y) - 1.0;
    y_pow[0] = 1.0;
    for (std::size_t e = 1; e < y_pow.size(); ++e) y_pow[e] = y_pow[e - 1] * y;
    for (std::size_t j = 0; j < p; ++j) d_defect[j] = y_pow[basis_.degree_of(j)] + slope * row.monomials[j];

    double* j1 = jacobian->data() + i * q;
    double* j2 = jacobian->data() + (m + i) * q;
    double* j3 = jacobian->data() + (2 * m + i) * q;
    for (std::size_t f = 0; f < q; ++f) {
      const std::size_t slot = free_slots_[f];
      j1[f] = s1 * (row.eq1[slot] - row.eq1[1]);
      j2[f] = s2 * (row.eq2[slot] - row.eq2[1]);
      j3[f] = s3 * (d_defect[slot] - d_defect[1]);
    }
  }
}

ObjectiveValue objective(std::span<const double> theta, const ExplorationConfig& config,
                         const std::vector<std::vector<double>>& samples) {
  const Objective obj(config, samples);
  obj.to_free(theta);  // feasibility check
  return obj.evaluate(theta);
}

// ---------------------------------------------------------------------------
// Closed-form degree-1 case

double LinearSolutionSet::distance(std::span<const double> c) const {
  if (c.size() != static_cast<std::size_t>(n)) throw InvalidArgument("coefficient vector has wrong length");
  Eigen::VectorXd diff(n);
  for (int i = 0; i < n; ++i) diff(i) = c[static_cast<std::size_t>(i)] - particular[static_cast<std::size_t>(i)];
  if (!basis.empty()) {
    Eigen::MatrixXd b(n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      for (int i = 0; i < n; ++i) b(i, static_cast<Eigen::Index>(col)) = basis[col][static_cast<std::size_t>(i)];
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, b.cols());
    diff -= q * (q.transpose() * diff);
  }
  return diff.norm();
}

LinearSolutionSet linear_case_exact(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("the system is posed for even n >= 2 (got n=" + std::to_string(n) + ")");
  using exact::Rational;
  const auto cols = static_cast<std::size_t>(n);
  // Augmented rows [a_1 .. a_n | b].
  std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t k = 0; k < cols; ++k) {
    rows[0][k] = (k + 1 == cols) ? Rational(1 - n) : Rational(1);  // (I), beta = n
    rows[1][k] = ((k + 1) % 2 == 0) ? Rational(1) : Rational(-1);  // (II)
    rows[2][k] = Rational(1);                                       // u(1,...,1) = 1
  }
  rows[2][cols] = Rational(1);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational lead = rows[r][col];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][col] == 0) continue;
      const Rational factor = rows[other][col];
      for (std::size_t c = 0; c <= cols; ++c) rows[other][c] -= factor * rows[r][c];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][cols] != 0) throw std::logic_error("degree-1 system is inconsistent");
  }

  LinearSolutionSet set;
  set.n = n;
  std::vector<Rational> particular(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = rows[i][cols];

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free_col];
    basis.push_back(std::move(v));
  }

  for (const auto& v : particular) {
    set.particular.push_back(exact::to_double(v));
    set.particular_exact.push_back(exact::to_string(v));
  }
  for (const auto& b : basis) {
    std::vector<double> numeric;
    std::vector<std::string> text;
    for (const auto& v : b) {
      numeric.push_back(exact::to_double(v));
      text.push_back(exact::to_string(v));
    }
    set.basis.push_back(std::move(numeric));
    set.basis_exact.push_back(std::move(text));
  }
  return set;
}

// ---------------------------------------------------------------------------
// Search

std::string to_string(Classification c) {
  switch (c) {
    case Classification::MeanLike:
      return "mean_like";
    case Classification::ConstantLike:
      return "constant_like";
    case Classification::OtherCandidate:
      return "other_candidate";
    case Classification::NonConverged:
      return "non_converged";
  }
  return "non_converged";
}

namespace {

struct Minimum {
  std::vector<double> z;
  double cost = 0.0;
  int iterations = 0;
};

// Levenberg-Marquardt on the stacked residual vector.
Minimum levenberg_marquardt(const Objective& objective, std::vector<double> z, int max_iterations) {
  const auto q = static_cast<Eigen::Index>(objective.free_size());
  std::vector<double> r;
  std::vector<double> jac;
  std::vector<double> r_trial;

  auto cost_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
  };

  objective.residuals(z, r, &jac);
  double cost = cost_of(r);
  double lambda = 1e-3;
  int iteration = 0;
  constexpr double kNegligibleCost = 1e-28;

  while (iteration < max_iterations && cost > kNegligibleCost && std::isfinite(cost)) {
    const auto m = static_cast<Eigen::Index>(r.size());
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> j(jac.data(), m, q);
    const Eigen::Map<const Eigen::VectorXd> res(r.data(), m);
    const Eigen::MatrixXd h = j.transpose() * j;
    const Eigen::VectorXd g = j.transpose() * res;

    bool accepted = false;
    bool stalled = false;
    std::vector<double> z_trial(z.size());
    double trial_cost = cost;
    while (!accepted) {
      Eigen::MatrixXd a = h;
      for (Eigen::Index i = 0; i < q; ++i) a(i, i) += lambda * std::max(h(i, i), 1e-12);
      const Eigen::VectorXd step = a.ldlt().solve(-g);
      for (Eigen::Index i = 0; i < q; ++i) z_trial[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] + step(i);
      objective.residuals(z_trial, r_trial, nullptr);
      trial_cost = cost_of(r_trial);
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        accepted = true;
        lambda = std::max(lambda / 3.0, 1e-12);
      } else {
        lambda *= 4.0;
        if (lambda > 1e16) {
          stalled = true;
          break;
        }
      }
    }
    ++iteration;
    if (stalled) break;

    double step_norm = 0.0;
    double z_norm = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      step_norm += (z_trial[i] - z[i]) * (z_trial[i] - z[i]);
      z_norm += z[i] * z[i];
    }
    const double improvement = cost - trial_cost;
    z = z_trial;
    objective.residuals(z, r, &jac);
    cost = cost_of(r);
    if (std::sqrt(step_norm) <= 1e-15 * (1.0 + std::sqrt(z_norm)) || improvement <= 1e-16 * cost) break;
  }
  return {std::move(z), cost, iteration};
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

ExplorationReport explore(const ExplorationConfig& config) {
  config.validate();
  ExplorationReport report;
  report.config = config;
  report.samples = config.resolved_samples();

  const Objective objective(config, sample_set(config, config.seed, report.samples));
  const auto& basis = objective.basis();
  for (std::size_t j = 0; j < basis.size(); ++j) report.basis.push_back(basis.name(j));
  report.mean_theta = AnsatzPolynomial::mean(config.n, config.degree).theta;
  if (config.degree == 1) report.linear_case = linear_case_exact(config.n);

  const std::vector<double> mean_free = objective.to_free(report.mean_theta);

  for (int start = 0; start < config.starts; ++start) {
    std::vector<double> z0(objective.free_size());
    if (config.init == InitMode::Mean) {
      z0 = mean_free;
    } else {
      const CounterRng rng(config.seed, 1 + static_cast<std::uint64_t>(start));
      for (std::size_t f = 0; f < z0.size(); ++f) z0[f] = config.init_scale * rng.normal(f);
    }

    Minimum best = levenberg_marquardt(objective, std::move(z0), config.max_iterations);

    RunRecord record;
    record.start = start;
    record.theta = objective.to_theta(best.z);
    const ObjectiveValue value = objective.evaluate(record.theta);
    record.objective = value.value;
    record.eq1 = value.eq1;
    record.eq2 = value.eq2;
    record.ouroboros = value.ouroboros;
    record.iterations = best.iterations;
    record.distance_to_mean = distance(record.theta, report.mean_theta);
    if (report.linear_case) {
      record.linear_set_distance = report.linear_case->distance(std::span<const double>(record.theta).subspan(1, static_cast<std::size_t>(config.n)));
    }

    const bool converged = std::isfinite(record.objective) && record.objective <= config.convergence_tolerance;
    if (!converged) {
      record.classification = Classification::NonConverged;
    } else if (record.distance_to_mean <= kMeanDistanceThreshold) {
      record.classification = Classification::MeanLike;
    } else {
      Reverification check;
      check.seed = CounterRng::mix(config.seed ^ (0xa5a5a5a5a5a5a5a5ULL + static_cast<std::uint64_t>(start)));
      check.samples = kReverifySampleFactor * report.samples;
      const Objective fresh(config, sample_set(config, check.seed, check.samples));
      check.objective = fresh.evaluate(record.theta).value;
      check.passed = check.objective <= kReverifyFactor * config.convergence_tolerance;
      record.classification = check.passed ? Classification::OtherCandidate : Classification::NonConverged;
      record.reverification = check;
    }

    switch (record.classification) {
      case Classification::MeanLike:
        ++report.counts.mean_like;
        break;
      case Classification::ConstantLike:
        ++report.counts.constant_like;
        break;
      case Classification::OtherCandidate:
        ++report.counts.other_candidate;
        break;
      case Classification::NonConverged:
        ++report.counts.non_converged;
        break;
    }
    report.runs.push_back(std::move(record));
  }
  return report;
}

}  // namespace ouroboros::explorer
