#include "ouroboros/report_json.hpp"

namespace ouroboros::json {

namespace {

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const core::SampleDomain& dom) {
  return Json{{"n", dom.n}, {"radius", dom.radius}, {"seed", dom.seed}, {"count", dom.count}};
}

Json to_json(const core::OuroborosReport& report) {
  Json j;
  j["verdict"] = core::to_string(report.verdict);
  j["max_deviation"] = report.max_deviation;
  j["witness"] = optional_value(report.witness);
  j["witness_deviation"] = report.witness_deviation;
  j["samples_used"] = report.samples_used;
  j["tolerance"] = report.tolerance;
  j["range_contained"] = optional_value(report.range_contained);
  j["message"] = report.message;
  return j;
}

Json to_json(const pde::ResidualReport& report) {
  Json j;
  j["equation"] = report.spec.name();
  j["n"] = report.spec.n;
  j["beta"] = report.spec.kind == pde::Equation::EqI ? Json(report.spec.beta) : Json(nullptr);
  j["convention"] = pde::kResidualConvention;
  j["residual"] = report.residual;
  j["symbolic_status"] = pde::to_string(report.status);
  j["symbolic_zero"] = report.symbolic_zero;
  j["max_abs_residual"] = report.max_abs_residual;
  j["max_abs_residual_fd"] = report.max_abs_residual_fd;
  j["max_oracle_gap"] = report.max_oracle_gap;
  j["oracle_agreement"] = report.oracle_agreement;
  j["fd_step"] = report.step;
  j["samples_used"] = report.samples_used;
  j["note"] = report.note;
  return j;
}

Json to_json(const pde::Prop3Check& check) {
  return Json{{"holds", check.holds}, {"odd_sum", check.odd_sum}, {"even_sum", check.even_sum}};
}

Json to_json(const pde::Prop4Report& report) {
  Json j;
  j["n"] = report.n;
  j["eq_I"] = report.eq1;
  j["eq_II"] = report.eq2;
  j["origin_zero"] = report.origin_zero;
  j["ouroboros"] = report.ouroboros;
  j["all_hold"] = report.all_hold();
  j["eq_I_report"] = to_json(report.eq1_report);
  j["eq_II_report"] = to_json(report.eq2_report);
  j["ouroboros_report"] = to_json(report.ouroboros_report);
  return j;
}

Json to_json(const probability::ExpectationCheck& check) {
  Json j;
  j["expectation"] = check.expectation;
  j["iterated_expectation"] = check.iterated_expectation;
  j["deviation"] = check.deviation;
  j["tolerance"] = check.tolerance;
  j["verdict"] = check.holds ? "holds" : "fails";
  return j;
}

Json to_json(const explorer::ExplorationConfig& config) {
  Json j;
  j["n"] = config.n;
  j["degree"] = config.degree;
  j["samples"] = config.samples;
  j["radius"] = config.radius;
  j["seed"] = config.seed;
  j["starts"] = config.starts;
  j["weights"] = Json{{"eq_I", config.weights.eq1}, {"eq_II", config.weights.eq2}, {"ouroboros", config.weights.ouroboros}};
  j["max_iterations"] = config.max_iterations;
  j["convergence_tolerance"] = config.convergence_tolerance;
  j["init_scale"] = config.init_scale;
  j["init"] = config.init == explorer::InitMode::Mean ? "mean" : "random";
  return j;
}

Json to_json(const explorer::LinearSolutionSet& set) {
  Json j;
  j["n"] = set.n;
  j["dimension"] = set.dimension();
  j["particular"] = set.particular;
  j["particular_exact"] = set.particular_exact;
  j["basis"] = set.basis;
  j["basis_exact"] = set.basis_exact;
  return j;
}

Json to_json(const explorer::RunRecord& record) {
  Json j;
  j["start"] = record.start;
  j["classification"] = explorer::to_string(record.classification);
  j["objective"] = record.objective;
  j["eq_I_residual"] = record.eq1;
  j["eq_II_residual"] = record.eq2;
  j["ouroboros_defect"] = record.ouroboros;
  j["distance_to_mean"] = record.distance_to_mean;
  j["iterations"] = record.iterations;
  j["theta"] = record.theta;
  if (record.reverification) {
    const auto& r = *record.reverification;
    j["reverification"] = Json{{"seed", r.seed}, {"samples", r.samples}, {"objective", r.objective}, {"passed", r.passed}};
  } else {
    j["reverification"] = nullptr;
  }
  j["linear_set_distance"] = optional_value(record.linear_set_distance);
  return j;
}

Json to_json(const explorer::ExplorationReport& report) {
  Json j;
  j["reading"] = Json{
      {"nontrivial", "read as nonconstant; enforced by the normalization u(0,...,0) = 0 and u(1,...,1) = 1"},
      {"search_class", "polynomials of total degree <= " + std::to_string(report.config.degree) + " in " +
                           std::to_string(report.config.n) + " variables"},
      {"system", "sum_k du/dx_k = n du/dx_n; sum_k (-1)^k du/dx_k = 0; u(u(x),...,u(x)) = u(x)"},
      {"convention", pde::kResidualConvention},
      {"scope", "per-run evidence only; no uniqueness claim is made"}};
  j["config"] = to_json(report.config);
  j["samples"] = report.samples;
  j["thresholds"] = Json{{"converged_objective", report.config.convergence_tolerance},
                         {"mean_distance", explorer::kMeanDistanceThreshold},
                         {"reverify_objective_factor", explorer::kReverifyFactor},
                         {"reverify_sample_factor", explorer::kReverifySampleFactor}};
  j["basis"] = report.basis;
  j["mean_theta"] = report.mean_theta;
  Json runs = Json::array();
  for (const auto& record : report.runs) runs.push_back(to_json(record));
  j["runs"] = std::move(runs);
  j["counts"] = Json{{"mean_like", report.counts.mean_like},
                     {"constant_like", report.counts.constant_like},
                     {"other_candidate", report.counts.other_candidate},
                     {"non_converged", report.counts.non_converged}};
  j["linear_case"] = report.linear_case ? to_json(*report.linear_case) : Json(nullptr);
  return j;
}

}  // namespace ouroboros::json
