#pragma once

// JSON renderings of every report type. Key order is fixed so that equal
// reports serialize to identical bytes.

#include "ouroboros/core.hpp"
#include "ouroboros/explorer.hpp"
#include "ouroboros/pde.hpp"
#include "ouroboros/probability.hpp"

#include "json.hpp"

namespace ouroboros::json {

using Json = nlohmann::ordered_json;

Json to_json(const core::SampleDomain& dom);
Json to_json(const core::OuroborosReport& report);
Json to_json(const pde::ResidualReport& report);
Json to_json(const pde::Prop3Check& check);
Json to_json(const pde::Prop4Report& report);
Json to_json(const probability::ExpectationCheck& check);
Json to_json(const explorer::ExplorationConfig& config);
Json to_json(const explorer::LinearSolutionSet& set);
Json to_json(const explorer::RunRecord& record);
Json to_json(const explorer::ExplorationReport& report);

}  // namespace ouroboros::json
