#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ouroboros/core.hpp"
#include "ouroboros/errors.hpp"
#include "ouroboros/families.hpp"
#include "ouroboros/pde.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace ouroboros;
using pde::PdeSpec;
using pde::SymbolicStatus;

namespace {

core::SampleDomain box(int n, double r = 2.0, int count = 100) { return core::SampleDomain{n, r, 0, count}; }

}  // namespace

TEST_CASE("equation parameter validation") {
  CHECK_NOTHROW(PdeSpec::eq1(4, 4).validate());
  CHECK_NOTHROW(PdeSpec::eq1(4, 1).validate());
  CHECK_THROWS_AS(PdeSpec::eq1(4, 5).validate(), InvalidArgument);
  CHECK_THROWS_AS(PdeSpec::eq1(4, 0).validate(), InvalidArgument);
  CHECK_THROWS_AS(PdeSpec::eq2(0).validate(), InvalidArgument);
  CHECK(PdeSpec::eq1(2, 1).name() == "I");
  CHECK(PdeSpec::eq2(2).name() == "II");
}

TEST_CASE("residuals of hand-differentiated examples") {
  const auto mean4 = pde::check_residual(families::arithmetic_mean(4).to_expr(), PdeSpec::eq1(4, 4), box(4));
  CHECK(mean4.status == SymbolicStatus::Zero);
  CHECK(mean4.max_abs_residual == 0.0);

  const auto x1 = pde::check_residual(expr::parse("x1"), PdeSpec::eq1(2, 2), box(2));
  CHECK(x1.status == SymbolicStatus::Nonzero);
  CHECK(x1.residual == "1");
  CHECK(x1.max_abs_residual == 1.0);

  const auto sum = pde::check_residual(expr::parse("x1 + x2"), PdeSpec::eq2(2), box(2));
  CHECK(sum.status == SymbolicStatus::Zero);
  CHECK(sum.symbolic_zero);

  const auto sq = pde::check_residual(expr::parse("x1^2"), PdeSpec::eq1(2, 2), box(2, 2.0, 500));
  CHECK(sq.residual == "2*x1");
  CHECK(sq.status == SymbolicStatus::Nonzero);
  CHECK(sq.max_abs_residual <= 4.0);
  CHECK(sq.max_abs_residual > 3.9);
  CHECK(sq.oracle_agreement);

  const auto p2 = families::prop2_solution({2.0, -3.0}, 2);
  CHECK(pde::check_residual(p2.expr(), PdeSpec::eq1(3, 2), box(3)).symbolic_zero);
  CHECK(pde::check_residual(families::arithmetic_mean(6).to_expr(), PdeSpec::eq2(6), box(6)).symbolic_zero);
}

TEST_CASE("residual sign convention is LHS - RHS") {
  // u = x2 with n = 2, beta = 2: LHS = 1, RHS = 2*1, residual = -1.
  const auto r = pde::check_residual(expr::parse("x2"), PdeSpec::eq1(2, 2), box(2));
  CHECK(r.residual == "-1");
  // Equation II: sum (-1)^k du/dx_k = -du/dx1 + du/dx2.
  const auto r2 = pde::check_residual(expr::parse("x1"), PdeSpec::eq2(2), box(2));
  CHECK(r2.residual == "-1");
  CHECK(std::string(pde::kResidualConvention) == "residual = LHS - RHS");
}

TEST_CASE("symbolic status of non-polynomial residuals") {
  CHECK(pde::symbolic_status(expr::parse("x1 - x1")) == SymbolicStatus::Zero);
  CHECK(pde::symbolic_status(expr::parse("1/x1 - 1/x1")) == SymbolicStatus::Inconclusive);
  CHECK(pde::symbolic_status(expr::parse("0*(1/x1)")) != SymbolicStatus::Nonzero);
  CHECK(pde::symbolic_status(expr::parse("x1^2 - x1*x1")) == SymbolicStatus::Zero);
  CHECK(pde::symbolic_status(expr::parse("0.1 + 0.2 - 0.3")) == SymbolicStatus::Zero);
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(pde::check_residual(expr::parse("x3"), PdeSpec::eq2(2), box(2)), InvalidArgument);
  CHECK_THROWS_AS(pde::check_residual(expr::parse("x1"), PdeSpec::eq2(2), box(3)), InvalidArgument);
}

TEST_CASE("finite differences") {
  CHECK(pde::finite_difference(expr::parse("x1^2"), 1, std::vector<double>{3.0}) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(pde::finite_difference(expr::parse("5"), 1, std::vector<double>{0.2}) == 0.0);
  testing::Gen g(61);
  const auto mean = families::arithmetic_mean(4).to_expr();
  for (int i = 0; i < 20; ++i) {
    const auto x = g.vector(4, -10.0, 10.0);
    CHECK(std::abs(pde::finite_difference(mean, g.integer(1, 4), x) - 0.25) <= 1e-10);
  }
}

TEST_CASE("odd and even coefficient sums") {
  const auto half = pde::check_prop3(std::vector<double>{0.5, 0.5}, 2);
  CHECK(half.holds);
  CHECK(half.odd_sum == 0.5);
  CHECK(half.even_sum == 0.5);
  CHECK_FALSE(pde::check_prop3(std::vector<double>{1, 0}, 2).holds);
  const auto mixed = pde::check_prop3(std::vector<double>{0.1, 0.4, 0.5, 0.2}, 4);
  CHECK(mixed.holds);
  CHECK(mixed.odd_sum == doctest::Approx(0.6));
  CHECK_THROWS_AS(pde::check_prop3(std::vector<double>{1, 2, 3}, 3), InvalidArgument);
  CHECK_THROWS_AS(pde::check_prop3(std::vector<double>{1, 2}, 4), InvalidArgument);
}

TEST_CASE("arithmetic mean solves the system") {
  for (int n : {2, 4, 6, 8}) {
    const auto r = pde::verify_prop4(n, box(n, 10.0, 200));
    CHECK(r.eq1);
    CHECK(r.eq2);
    CHECK(r.origin_zero);
    CHECK(r.ouroboros);
    CHECK(r.all_hold());
  }
  CHECK_THROWS_AS(pde::verify_prop4(3, box(3)), InvalidArgument);
}

TEST_CASE("property: equation II verdict matches the alternating sums") {
  testing::Gen g(62);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * g.integer(1, 4);
    std::vector<long> eighths(static_cast<std::size_t>(n));
    for (auto& v : eighths) v = g.integer(-40, 40);
    if (g.coin()) {
      long diff = 0;
      for (int k = 0; k < n; ++k) diff += (k % 2 == 0 ? 1 : -1) * eighths[static_cast<std::size_t>(k)];
      eighths.back() += diff;
    }
    std::vector<double> c;
    for (long v : eighths) c.push_back(static_cast<double>(v) / 8.0);
    const bool sums = pde::check_prop3(c, n).holds;
    const auto r = pde::check_residual(core::LinearForm(c).to_expr(), PdeSpec::eq2(n), box(n));
    CHECK(sums == r.symbolic_zero);
    CHECK(r.oracle_agreement);
  }
}

TEST_CASE("property: symbolic and difference oracles agree on random polynomials") {
  testing::Gen g(63);
  for (int i = 0; i < 100; ++i) {
    const int n = g.integer(2, 5);
    const auto p = testing::random_polynomial(g, n, 3, 2.0);
    const auto spec = g.coin() ? PdeSpec::eq2(n) : PdeSpec::eq1(n, g.integer(1, n));
    const auto r = pde::check_residual(expr::parse(p.text()), spec, core::SampleDomain{n, 2.0, static_cast<std::uint64_t>(i), 20});
    CAPTURE(p.text());
    CHECK(r.oracle_agreement);
    CHECK(r.status != SymbolicStatus::Inconclusive);
  }
}
