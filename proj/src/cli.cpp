#include "ouroboros/cli.hpp"

#include "ouroboros/core.hpp"
#include "ouroboros/errors.hpp"
#include "ouroboros/exact.hpp"
#include "ouroboros/explorer.hpp"
#include "ouroboros/expr.hpp"
#include "ouroboros/pde.hpp"
#include "ouroboros/probability.hpp"
#include "ouroboros/report_json.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ouroboros::cli {

namespace {

using json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) items.push_back(current);
  return items;
}

std::vector<exact::Rational> parse_exact_list(const std::string& text, const std::string& what) {
  std::vector<exact::Rational> values;
  for (const auto& item : split_list(text)) values.push_back(exact::parse_number(item));
  if (values.empty()) throw InvalidArgument(what + " list is empty");
  return values;
}

std::vector<double> to_doubles(const std::vector<exact::Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(exact::to_double(v));
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  return to_doubles(parse_exact_list(text, what));
}

Json envelope(const std::string& command, Json config, std::uint64_t seed, Json result) {
  Json manifest;
  manifest["command"] = command;
  manifest["config"] = std::move(config);
  manifest["seed"] = seed;
  manifest["tool_version"] = kVersion;
  manifest["timestamp"] = utc_timestamp();
  Json doc;
  doc["manifest"] = std::move(manifest);
  doc["result"] = std::move(result);
  return doc;
}

std::string parse_diagnostic(const std::string& text, const ParseError& e) {
  std::ostringstream msg;
  msg << "error: cannot parse expression at offset " << e.offset() << ": " << e.detail() << "\n"
      << "  " << text << "\n"
      << "  " << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
  return msg.str();
}

// Turns a JSON config object into flags placed ahead of the user's own flags,
// so the command line wins under the take-last policy.
std::vector<std::string> config_flags(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  Json config;
  try {
    config = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> flags;
  for (const auto& [key, value] : config.items()) {
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) flags.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ",";
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      flags.push_back(flag + "=" + joined);
    } else if (value.is_string()) {
      flags.push_back(flag + "=" + value.get<std::string>());
    } else if (value.is_number()) {
      flags.push_back(flag + "=" + value.dump());
    } else {
      throw UsageError("config key '" + key + "' has an unsupported value");
    }
  }
  return flags;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.empty()) return args;
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::vector<std::string> expanded{args.front()};
  for (auto& flag : config_flags(*path)) expanded.push_back(std::move(flag));
  expanded.insert(expanded.end(), args.begin() + 1, args.end());
  return expanded;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string coeffs;
  std::string expr;
  int dim = 0;
  int samples = 200;
  double radius = 10.0;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.coeffs.empty() == a.expr.empty()) throw UsageError("give exactly one of --coeffs or --expr");

  Json config{{"coeffs", a.coeffs.empty() ? Json(nullptr) : Json(a.coeffs)},
              {"expr", a.expr.empty() ? Json(nullptr) : Json(a.expr)},
              {"dim", a.dim > 0 ? Json(a.dim) : Json(nullptr)},
              {"samples", a.samples},
              {"radius", a.radius},
              {"seed", a.seed},
              {"tol", nullptr}};
  Json result;
  result["kind"] = "check";
  core::OuroborosReport report;

  if (!a.coeffs.empty()) {
    const auto exact_coeffs = parse_exact_list(a.coeffs, "coefficient");
    const core::LinearForm form(to_doubles(exact_coeffs));
    const double tol = a.tol.value_or(1e-12);
    config["tol"] = tol;
    report = core::check_linear_exact(form, tol);
    result["mode"] = "linear_exact";
    result["function"] = expr::print(expr::linear_expr(exact_coeffs));
    result["coefficients"] = form.coeffs();
    result["exact_coefficient_sum"] = exact::to_string(exact::sum(exact_coeffs));
    result["domain"] = nullptr;
  } else {
    expr::ParseResult parsed;
    try {
      parsed = expr::parse(a.expr, a.dim);
    } catch (const ParseError& e) {
      err << parse_diagnostic(a.expr, e);
      return kExitUsage;
    }
    if (a.dim > 0 && parsed.expr.dimension() > a.dim) {
      throw UsageError("expression uses x" + std::to_string(parsed.expr.dimension()) + " but --dim is " +
                       std::to_string(a.dim));
    }
    const core::SampleDomain dom{std::max(parsed.dimension, 1), a.radius, a.seed, a.samples};
    const double tol = a.tol.value_or(1e-9);
    config["dim"] = dom.n;
    config["tol"] = tol;
    report = core::check_sampled(parsed.expr, dom, tol);
    result["mode"] = "sampled";
    result["function"] = expr::print(parsed.expr);
    result["coefficients"] = nullptr;
    result["exact_coefficient_sum"] = nullptr;
    result["domain"] = json::to_json(dom);
  }
  const Json report_json = json::to_json(report);
  for (const auto& [key, value] : report_json.items()) result[key] = value;
  emit(out, envelope("check", config, a.seed, result));
  switch (report.verdict) {
    case core::Verdict::HoldsExact:
    case core::Verdict::HoldsSampled:
      return kExitOk;
    case core::Verdict::Fails:
      return kExitCheckFailed;
    case core::Verdict::Error:
      err << "error: " << report.message << "\n";
      return kExitUsage;
  }
  return kExitUsage;
}

// ---------------------------------------------------------------------------

struct PdeArgs {
  std::string coeffs;
  std::string expr;
  std::string eq;
  int beta = 0;
  int n = 0;
  bool prop3 = false;
  int samples = 100;
  double radius = 2.0;
  std::uint64_t seed = 0;
};

bool residual_passes(const pde::ResidualReport& r) {
  if (r.status == pde::SymbolicStatus::Zero) return true;
  if (r.status == pde::SymbolicStatus::Inconclusive) return r.max_abs_residual <= 1e-9;
  return false;
}

Json check_entry(const std::string& name, bool passed, Json details) {
  return Json{{"name", name}, {"passed", passed}, {"details", std::move(details)}};
}

int cmd_pde(const PdeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.coeffs.empty() == a.expr.empty()) throw UsageError("give exactly one of --coeffs or --expr");
  if (a.eq != "I" && a.eq != "II" && a.eq != "system") throw UsageError("--eq must be I, II or system");

  std::optional<std::vector<exact::Rational>> exact_coeffs;
  expr::Expr u;
  if (!a.coeffs.empty()) {
    exact_coeffs = parse_exact_list(a.coeffs, "coefficient");
    u = expr::linear_expr(*exact_coeffs);
  } else {
    try {
      u = expr::parse(a.expr);
    } catch (const ParseError& e) {
      err << parse_diagnostic(a.expr, e);
      return kExitUsage;
    }
  }
  int n = a.n;
  if (n == 0) n = exact_coeffs ? static_cast<int>(exact_coeffs->size()) : std::max(u.dimension(), 1);
  if (exact_coeffs && static_cast<int>(exact_coeffs->size()) != n) {
    throw UsageError("--n is " + std::to_string(n) + " but " + std::to_string(exact_coeffs->size()) +
                     " coefficients were given");
  }
  if (u.dimension() > n) throw UsageError("expression uses x" + std::to_string(u.dimension()) + " but --n is " + std::to_string(n));
  if (a.eq == "system" && n % 2 != 0) throw UsageError("--eq system requires even n (got " + std::to_string(n) + ")");
  if (a.prop3) {
    if (n % 2 != 0) throw UsageError("the alternating-sum check requires even n (got " + std::to_string(n) + ")");
    if (!exact_coeffs) throw UsageError("the alternating-sum check needs --coeffs");
  }
  const int beta = a.beta > 0 ? a.beta : n;
  if (a.eq == "I") pde::PdeSpec::eq1(n, beta).validate();

  const core::SampleDomain dom{n, a.radius, a.seed, a.samples};
  dom.validate();

  Json config{{"coeffs", a.coeffs.empty() ? Json(nullptr) : Json(a.coeffs)},
              {"expr", a.expr.empty() ? Json(nullptr) : Json(a.expr)},
              {"eq", a.eq},
              {"beta", a.eq == "I" ? Json(beta) : Json(nullptr)},
              {"n", n},
              {"prop3", a.prop3},
              {"samples", a.samples},
              {"radius", a.radius},
              {"seed", a.seed}};

  Json checks = Json::array();
  bool all = true;
  auto add = [&](const std::string& name, bool passed, Json details) {
    all = all && passed;
    checks.push_back(check_entry(name, passed, std::move(details)));
  };

  if (a.eq == "I" || a.eq == "system") {
    const auto report = pde::check_residual(u, pde::PdeSpec::eq1(n, a.eq == "I" ? beta : n), dom);
    add("eq_I", residual_passes(report), json::to_json(report));
  }
  if (a.eq == "II" || a.eq == "system") {
    const auto report = pde::check_residual(u, pde::PdeSpec::eq2(n), dom);
    add("eq_II", residual_passes(report), json::to_json(report));
  }
  const bool want_prop3 = a.prop3 || (a.eq != "I" && exact_coeffs && n % 2 == 0);
  if (want_prop3) {
    const auto c = to_doubles(*exact_coeffs);
    const auto check = pde::check_prop3(c, n);
    add("alternating_sums", check.holds, json::to_json(check));
  }
  if (a.eq == "system") {
    const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
    const double value = expr::evaluate(u, origin);
    add("origin", value == 0.0, Json{{"value", value}});
    core::OuroborosReport report;
    if (exact_coeffs) {
      report = core::check_linear_exact(core::LinearForm(to_doubles(*exact_coeffs)));
    } else {
      report = core::check_sampled(u, dom);
    }
    add("ouroboros", report.holds(), json::to_json(report));
  }

  Json result;
  result["kind"] = "pde";
  result["equation"] = a.eq;
  result["n"] = n;
  result["function"] = expr::print(u);
  result["convention"] = pde::kResidualConvention;
  result["domain"] = json::to_json(dom);
  result["checks"] = std::move(checks);
  result["all_passed"] = all;
  emit(out, envelope("pde", config, a.seed, result));
  return all ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct ExpectArgs {
  std::string rv;
  std::string values;
  std::string probs;
  std::optional<double> constant;
  double tol = 1e-12;
};

probability::DiscreteRandomVariable load_rv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open random variable file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc.contains("probs") || !doc["values"].is_array() ||
      !doc["probs"].is_array()) {
    throw UsageError("random variable file needs \"values\" and \"probs\" arrays");
  }
  std::vector<double> values;
  std::vector<double> probs;
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) throw UsageError("\"values\" must hold numbers");
    values.push_back(v.get<double>());
  }
  for (const auto& p : doc["probs"]) {
    if (!p.is_number()) throw UsageError("\"probs\" must hold numbers");
    probs.push_back(p.get<double>());
  }
  return probability::DiscreteRandomVariable(std::move(values), std::move(probs));
}

int cmd_expect(const ExpectArgs& a, std::ostream& out) {
  const int sources = (!a.rv.empty() ? 1 : 0) + (!a.values.empty() || !a.probs.empty() ? 1 : 0) + (a.constant ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --rv, --values/--probs or --constant");

  std::optional<probability::DiscreteRandomVariable> x;
  if (!a.rv.empty()) {
    x = load_rv(a.rv);
  } else if (a.constant) {
    x = probability::as_constant_rv(*a.constant);
  } else {
    if (a.values.empty() || a.probs.empty()) throw UsageError("--values and --probs go together");
    x = probability::DiscreteRandomVariable(parse_double_list(a.values, "value"), parse_double_list(a.probs, "probability"));
  }
  const auto check = probability::check_expectation_ouroboros(*x, a.tol);

  Json config{{"rv", a.rv.empty() ? Json(nullptr) : Json(a.rv)},
              {"values", a.values.empty() ? Json(nullptr) : Json(a.values)},
              {"probs", a.probs.empty() ? Json(nullptr) : Json(a.probs)},
              {"constant", a.constant ? Json(*a.constant) : Json(nullptr)},
              {"tol", a.tol}};
  Json result;
  result["kind"] = "expect";
  result["values"] = x->values();
  result["probs"] = x->probs();
  const Json check_json = json::to_json(check);
  for (const auto& [key, value] : check_json.items()) result[key] = value;
  emit(out, envelope("expect", config, 0, result));
  return check.holds ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct ExploreArgs {
  explorer::ExplorationConfig config;
  std::string init = "random";
  std::string out;
  std::string csv;
};

void write_csv(const explorer::ExplorationReport& report, const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw UsageError("cannot write '" + path + "'");
  csv << "start,classification,objective,eq_I_residual,eq_II_residual,ouroboros_defect,distance_to_mean,iterations";
  for (const auto& name : report.basis) csv << ",theta[" << name << "]";
  csv << "\n";
  for (const auto& run : report.runs) {
    csv << run.start << "," << explorer::to_string(run.classification) << "," << exact::shortest(run.objective) << ","
        << exact::shortest(run.eq1) << "," << exact::shortest(run.eq2) << "," << exact::shortest(run.ouroboros) << ","
        << exact::shortest(run.distance_to_mean) << "," << run.iterations;
    for (double t : run.theta) csv << "," << exact::shortest(t);
    csv << "\n";
  }
}

int cmd_explore(ExploreArgs a, std::ostream& out, std::ostream& err) {
  if (a.init == "mean") {
    a.config.init = explorer::InitMode::Mean;
  } else if (a.init == "random") {
    a.config.init = explorer::InitMode::Random;
  } else {
    throw UsageError("--init must be random or mean");
  }
  a.config.validate();
  const auto report = explorer::explore(a.config);
  Json config = json::to_json(a.config);
  config["out"] = a.out.empty() ? Json(nullptr) : Json(a.out);
  config["csv"] = a.csv.empty() ? Json(nullptr) : Json(a.csv);
  Json result{{"kind", "explore"}};
  const Json report_json = json::to_json(report);
  for (const auto& [key, value] : report_json.items()) result[key] = value;
  Json doc = envelope("explore", config, a.config.seed, result);

  if (!a.csv.empty()) write_csv(report, a.csv);
  if (a.out.empty()) {
    emit(out, doc);
  } else {
    std::ofstream file(a.out);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
    emit(file, doc);
    err << "wrote " << a.out << " (" << report.runs.size() << " runs)\n";
  }
  return kExitOk;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification and exploration toolkit for Ouroboros functions", "ouroboros"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide or sample the Ouroboros property f(f(x),...,f(x)) = f(x)");
  check->add_option("--coeffs", check_args.coeffs, "Linear form coefficients, comma separated (decimals or p/q)");
  check->add_option("--expr", check_args.expr, "Expression in x1..xn");
  check->add_option("--dim", check_args.dim, "Dimension n for --expr (default: highest variable index)");
  check->add_option("--samples", check_args.samples, "Sample count")->capture_default_str();
  check->add_option("--radius", check_args.radius, "Sampling box half-width R")->capture_default_str();
  check->add_option("--seed", check_args.seed, "Sampling seed")->capture_default_str();
  check->add_option("--tol", check_args.tol, "Tolerance (1e-12 exact, 1e-9 sampled)");
  check->add_option("--config", config_path, "JSON file of option values; flags override it");

  PdeArgs pde_args;
  auto* pde_cmd = app.add_subcommand("pde", "Residuals of the transport equations I, II and their system");
  pde_cmd->add_option("--coeffs", pde_args.coeffs, "Linear form coefficients, comma separated");
  pde_cmd->add_option("--expr", pde_args.expr, "Expression in x1..xn");
  pde_cmd->add_option("--eq", pde_args.eq, "I, II or system")->required();
  pde_cmd->add_option("--beta", pde_args.beta, "Equation I parameter (default n)");
  pde_cmd->add_option("--n", pde_args.n, "Dimension (default: inferred)");
  pde_cmd->add_flag("--prop3", pde_args.prop3, "Also compare odd- and even-index coefficient sums");
  pde_cmd->add_option("--samples", pde_args.samples, "Sample count")->capture_default_str();
  pde_cmd->add_option("--radius", pde_args.radius, "Sampling box half-width")->capture_default_str();
  pde_cmd->add_option("--seed", pde_args.seed, "Sampling seed")->capture_default_str();
  pde_cmd->add_option("--config", config_path, "JSON file of option values; flags override it");

  ExpectArgs expect_args;
  auto* expect = app.add_subcommand("expect", "Expectation functional and E[E[X]] = E[X]");
  expect->add_option("--rv", expect_args.rv, "JSON file {\"values\": [...], \"probs\": [...]}");
  expect->add_option("--values", expect_args.values, "Outcome values, comma separated");
  expect->add_option("--probs", expect_args.probs, "Outcome probabilities, comma separated");
  expect->add_option("--constant", expect_args.constant, "Point mass at this value");
  expect->add_option("--tol", expect_args.tol, "Tolerance")->capture_default_str();
  expect->add_option("--config", config_path, "JSON file of option values; flags override it");

  ExploreArgs explore_args;
  auto& ec = explore_args.config;
  auto* explore = app.add_subcommand("explore", "Multi-start polynomial search over the overdetermined system");
  explore->add_option("--n", ec.n, "Even dimension")->capture_default_str();
  explore->add_option("--degree", ec.degree, "Total degree of the ansatz")->capture_default_str();
  explore->add_option("--starts", ec.starts, "Number of starts")->capture_default_str();
  explore->add_option("--seed", ec.seed, "Seed for samples and starts")->capture_default_str();
  explore->add_option("--samples", ec.samples, "Sample count (0 = 10 x basis size, at least 50)")->capture_default_str();
  explore->add_option("--radius", ec.radius, "Sampling box half-width")->capture_default_str();
  explore->add_option("--iters", ec.max_iterations, "Optimizer iteration cap")->capture_default_str();
  explore->add_option("--tol", ec.convergence_tolerance, "Objective threshold for convergence")->capture_default_str();
  explore->add_option("--init-scale", ec.init_scale, "Std. dev. of random starts")->capture_default_str();
  explore->add_option("--w-eq1", ec.weights.eq1, "Weight of equation I")->capture_default_str();
  explore->add_option("--w-eq2", ec.weights.eq2, "Weight of equation II")->capture_default_str();
  explore->add_option("--w-ouroboros", ec.weights.ouroboros, "Weight of the Ouroboros defect")->capture_default_str();
  explore->add_option("--init", explore_args.init, "random or mean")->capture_default_str();
  explore->add_option("--out", explore_args.out, "Write the JSON report here instead of stdout");
  explore->add_option("--csv", explore_args.csv, "Also write per-start rows as CSV");
  explore->add_option("--config", config_path, "JSON file of option values; flags override it");

  app.add_subcommand("version", "Print the tool version");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, out, err);
    if (pde_cmd->parsed()) return cmd_pde(pde_args, out, err);
    if (expect->parsed()) return cmd_expect(expect_args, out);
    if (explore->parsed()) return cmd_explore(explore_args, out, err);
    out << "ouroboros " << kVersion << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace ouroboros::cli
