#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "walkinv/campaigns.hpp"
#include "walkinv/graph.hpp"
#include "walkinv/invariants.hpp"
#include "walkinv/rational.hpp"
#include "walkinv/simulate.hpp"
#include "walkinv/spectral.hpp"
#include "walkinv/verify.hpp"
#include "walkinv/walk_costs.hpp"

// JSON encodings. Exact values are "p/q" strings; where a record also
// carries doubles they sit under an "approx" key.

namespace walkinv {

nlohmann::json exact(const Rational& value);
nlohmann::json exact(const Integer& value);
nlohmann::json exact(std::span<const Rational> values);
nlohmann::json approx(std::span<const Rational> values);

void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const GlobalInvariants& inv);
void to_json(nlohmann::json& j, const VertexInvariants& inv);
void to_json(nlohmann::json& j, const CostTable& costs);
void to_json(nlohmann::json& j, const SpectralSums& sums);
void to_json(nlohmann::json& j, const CoefficientCheck& check);
void to_json(nlohmann::json& j, const PuvRelations& rel);
void to_json(nlohmann::json& j, const Estimate& est);
void to_json(nlohmann::json& j, const CounterexampleWitness& w);
void to_json(nlohmann::json& j, const BrushEvaluation& b);
void to_json(nlohmann::json& j, const ExtremalCertificate& c);
void to_json(nlohmann::json& j, const ScalingRow& row);
void to_json(nlohmann::json& j, const CampaignResult& result);

/// Global and per-vertex invariants, cost table and spectral sums of g,
/// with an "approx" block of decimals for the scalar quantities.
nlohmann::json invariants_report(const Graph& g);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump_report(const nlohmann::json& report);

}  // namespace walkinv
