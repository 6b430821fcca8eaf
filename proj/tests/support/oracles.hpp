#pragma once

// Test-only generators and reference computations. Nothing here calls into
// the library's own sampling, differencing or linear algebra, so the suites
// compare against an independent path.

#include "ouroboros/exact.hpp"
#include "ouroboros/expr.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace ouroboros::testing {

/// Seeded generator built on std::mt19937_64 (deliberately not the library RNG).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::vector<double> vector(int n, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Central difference (f(x + h e_k) - f(x - h e_k)) / 2h, 0-based k.
inline double central_difference(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x, std::size_t k, double h) {
  const double x0 = x[k];
  x[k] = x0 + h;
  const double up = f(x);
  x[k] = x0 - h;
  const double down = f(x);
  return (up - down) / (2.0 * h);
}

/// Polynomial kept as a list of (coefficient, exponent vector) terms.
struct TermPolynomial {
  struct Term {
    double coeff;
    std::vector<unsigned> exponents;
  };
  int n = 1;
  std::vector<Term> terms;

  double operator()(const std::vector<double>& x) const {
    double total = 0.0;
    for (const auto& t : terms) {
      double v = t.coeff;
      for (int j = 0; j < n; ++j) v *= std::pow(x[static_cast<std::size_t>(j)], static_cast<int>(t.exponents[static_cast<std::size_t>(j)]));
      total += v;
    }
    return total;
  }

  std::string text() const {
    std::string out;
    for (const auto& t : terms) {
      if (!out.empty()) out += " + ";
      out += "(" + exact::shortest(t.coeff) + ")";
      for (int j = 0; j < n; ++j) {
        const unsigned e = t.exponents[static_cast<std::size_t>(j)];
        if (e > 0) out += "*x" + std::to_string(j + 1) + "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }
};

inline TermPolynomial random_polynomial(Gen& g, int n, int degree, double coeff_range) {
  TermPolynomial p;
  p.n = n;
  const int count = g.integer(1, 6);
  for (int i = 0; i < count; ++i) {
    TermPolynomial::Term t{g.uniform(-coeff_range, coeff_range), std::vector<unsigned>(static_cast<std::size_t>(n), 0)};
    int budget = g.integer(0, degree);
    while (budget-- > 0) ++t.exponents[static_cast<std::size_t>(g.integer(0, n - 1))];
    p.terms.push_back(std::move(t));
  }
  return p;
}

/// Random expression tree over x1..xn built with the raw (non-folding)
/// factories, restricted to trees the parser can produce.
inline expr::Expr random_expr(Gen& g, int n, int depth) {
  using expr::Expr;
  if (depth == 0 || g.coin(0.25)) {
    switch (g.integer(0, 3)) {
      case 0:
        return Expr::variable(g.integer(1, n));
      case 1:
        return Expr::constant(exact::Rational(g.integer(0, 99)));
      case 2:
        // Parsed text only ever yields terminating decimals.
        return Expr::constant(exact::Rational(g.integer(-50, 50), g.coin() ? 8 : 25));
      default:
        return Expr::constant(std::round(g.uniform(-100.0, 100.0) * 1000.0) / 1000.0);
    }
  }
  switch (g.integer(0, 5)) {
    case 0:
      return Expr::add(random_expr(g, n, depth - 1), random_expr(g, n, depth - 1));
    case 1:
      return Expr::sub(random_expr(g, n, depth - 1), random_expr(g, n, depth - 1));
    case 2:
      return Expr::mul(random_expr(g, n, depth - 1), random_expr(g, n, depth - 1));
    case 3:
      return Expr::div(random_expr(g, n, depth - 1), random_expr(g, n, depth - 1));
    case 4:
      return Expr::neg(random_expr(g, n, depth - 1));
    default:
      return Expr::pow(random_expr(g, n, depth - 1), static_cast<unsigned>(g.integer(0, 4)));
  }
}

struct MalformedCase {
  std::string text;
  std::size_t offset;
};

/// Hand-written syntax errors with the offset a caret should point at.
inline std::vector<MalformedCase> malformed_corpus() {
  return {
      {"", 0},
      {"x1 +", 4},
      {"(x1 + x2", 8},
      {"x1 + * x2", 5},
      {"x0", 0},
      {"x", 1},
      {"x1^-2", 3},
      {"x1^2.5", 4},
      {"1.2.3", 0},
      {"x1 x2", 3},
      {"x1)", 2},
      {"2*/x1", 2},
      {"sin(x1)", 0},
      {"x1 ^", 4},
      {"()", 1},
      {"x1 + 1e", 5},
      {std::string(300, '(') + "x1" + std::string(300, ')'), 256},
      {"((((x1)))", 9},
      {"x1^1001", 3},
      {"1e999", 0},
  };
}

}  // namespace ouroboros::testing
