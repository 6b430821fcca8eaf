#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ouroboros/core.hpp"
#include "ouroboros/errors.hpp"
#include "ouroboros/families.hpp"
#include "ouroboros/pde.hpp"

#include "oracles.hpp"

using namespace ouroboros;

TEST_CASE("weighted averages") {
  CHECK(families::weighted_average({0.25, 0.75}).coeffs() == std::vector<double>{0.25, 0.75});
  CHECK(families::weighted_average({1.0}).size() == 1);
  CHECK(families::weighted_average({0.2, 0.2, 0.2, 0.2, 0.2}).coeffs() == families::arithmetic_mean(5).coeffs());
  CHECK_THROWS_WITH_AS(families::weighted_average({0.5, 0.6}), doctest::Contains("not 1"), InvalidArgument);
}

TEST_CASE("arithmetic mean") {
  CHECK(families::arithmetic_mean(2).coeffs() == std::vector<double>{0.5, 0.5});
  CHECK(families::arithmetic_mean(1).coeffs() == std::vector<double>{1.0});
  const auto m4 = families::arithmetic_mean(4);
  CHECK(m4.coeffs() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK(core::check_linear_exact(m4).holds());
  CHECK_THROWS_AS(families::arithmetic_mean(0), InvalidArgument);
}

TEST_CASE("constant functions") {
  const auto zero = families::constant_fn(0.0, 3);
  CHECK(core::check_sampled(zero, core::SampleDomain{3, 10.0, 0, 50}).holds());
  const auto seven = families::constant_fn(7.0, 2);
  CHECK(expr::evaluate(seven, std::vector<double>{7, 7}) == 7.0);
  const auto r = core::check_sampled(families::constant_fn(-2.5, 5), core::SampleDomain{5, 10.0, 0, 100});
  CHECK(r.verdict == core::Verdict::HoldsSampled);
  CHECK(r.max_deviation == 0.0);
}

TEST_CASE("averaged-coefficient solutions of equation I") {
  const auto a = families::prop2_solution({2.0, -3.0}, 2);
  CHECK(a.n() == 3);
  CHECK(a.mu_beta() == -0.5);
  CHECK(pde::symbolic_status(pde::residual_expr(a.expr(), pde::PdeSpec::eq1(3, 2))) == pde::SymbolicStatus::Zero);

  const auto b = families::prop2_solution({1.7}, 1);
  CHECK(b.mu_beta() == 1.7);
  CHECK(pde::symbolic_status(pde::residual_expr(b.expr(), pde::PdeSpec::eq1(2, 1))) == pde::SymbolicStatus::Zero);

  const auto c = families::prop2_solution({1.0, 1.0, 1.0}, 3);
  CHECK(c.mu_beta() == 1.0);
  CHECK(c.linear_form().coeffs() == std::vector<double>{1, 1, 1, 1});
  CHECK(pde::symbolic_status(pde::residual_expr(c.expr(), pde::PdeSpec::eq1(4, 3))) == pde::SymbolicStatus::Zero);

  CHECK_THROWS_AS(families::prop2_solution({1.0, 2.0}, 3), InvalidArgument);
  CHECK_THROWS_AS(families::prop2_solution({1.0, 2.0}, 0), InvalidArgument);
  CHECK_THROWS_AS(families::prop2_solution({}, 1), InvalidArgument);
}

TEST_CASE("property: thirds stay exact in the expression") {
  // mu = (0.1 + 0.2 + 0.4)/3 is not a terminating decimal; the residual must still vanish exactly.
  const auto s = families::prop2_solution({0.1, 0.2, 0.4, 9.0}, 3);
  CHECK(pde::symbolic_status(pde::residual_expr(s.expr(), pde::PdeSpec::eq1(5, 3))) == pde::SymbolicStatus::Zero);
  testing::Gen g(41);
  for (int i = 0; i < 100; ++i) {
    const int n = g.integer(2, 8);
    const int beta = g.integer(1, n - 1);
    const auto sol = families::prop2_solution(g.vector(n - 1, -5.0, 5.0), beta);
    CHECK(pde::symbolic_status(pde::residual_expr(sol.expr(), pde::PdeSpec::eq1(n, beta))) == pde::SymbolicStatus::Zero);
  }
}

TEST_CASE("unit-sum family for equation I with beta = n") {
  const auto half = families::pde1_unit_sum_family({0.5, 0.5});
  CHECK(half.coeffs() == std::vector<double>{0.5, 0.5});

  const auto f = families::pde1_unit_sum_family({0.15, 0.35, 0.25, 0.25});
  CHECK(core::check_linear_exact(f).holds());
  const auto report = pde::check_residual(f.to_expr(), pde::PdeSpec::eq1(4, 4), core::SampleDomain{4, 2.0, 0, 50});
  CHECK(report.status == pde::SymbolicStatus::Zero);

  CHECK_THROWS_AS(families::pde1_unit_sum_family({0.25, 0.75}), InvalidArgument);
  CHECK_THROWS_AS(families::pde1_unit_sum_family({0.5, 0.25, 1.0 / 3.0}), InvalidArgument);
}
