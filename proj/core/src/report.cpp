#include "walkinv/report.hpp"

#include "walkinv/linalg.hpp"

namespace walkinv {

using nlohmann::json;

json exact(const Rational& value) { return to_string(value); }
json exact(const Integer& value) { return to_string(value); }

json exact(std::span<const Rational> values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

json approx(std::span<const Rational> values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_double(v));
  return out;
}

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j = {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

void to_json(json& j, const GlobalInvariants& inv) {
  j = {{"n", inv.n},           {"m", inv.m},
       {"tau", exact(inv.tau)}, {"W", exact(inv.W)},
       {"K", exact(inv.K)},     {"K_pi", exact(inv.K_pi)},
       {"K_pi2", exact(inv.K_pi2)}, {"schultz", exact(inv.schultz)},
       {"gutman", exact(inv.gutman)}};
}

void to_json(json& j, const VertexInvariants& inv) {
  j = {{"D", exact(inv.D)}, {"D_pi", exact(inv.D_pi)}, {"R", exact(inv.R)}, {"R_pi", exact(inv.R_pi)}};
}

void to_json(json& j, const CostTable& costs) {
  j = {{"cc", exact(costs.cc)},
       {"rc", exact(costs.rc)},
       {"cc_pi", exact(costs.cc_pi)},
       {"rc_pi", exact(costs.rc_pi)},
       {"kemeny", exact(costs.kemeny)}};
}

void to_json(json& j, const SpectralSums& sums) {
  j = {{"sum_inv_nonzero_L", exact(sums.sum_inv_nonzero_L)},
       {"sum_inv_nonzero_N", exact(sums.sum_inv_nonzero_N)},
       {"sum_inv_Lv", exact(sums.sum_inv_Lv)},
       {"sum_inv_Nv", exact(sums.sum_inv_Nv)},
       {"laplacian_zero_multiplicity", sums.laplacian_zero_multiplicity}};
}

void to_json(json& j, const CoefficientCheck& check) {
  j = {{"actual", exact(check.actual)}, {"expected", exact(check.expected)}, {"holds", check.holds()}};
}

void to_json(json& j, const PuvRelations& rel) {
  j = {{"u", rel.u},
       {"v", rel.v},
       {"uu", rel.uu},
       {"uv", rel.uv},
       {"vv", rel.vv},
       {"origin_vanishes", rel.origin_vanishes},
       {"u_slice_is_charpoly_L", rel.u_slice_is_charpoly_L},
       {"v_slice_is_multiple_of_N", rel.v_slice_is_multiple_of_N}};
}

void to_json(json& j, const Estimate& est) {
  j = {{"mean", est.mean}, {"std_error", est.std_error}, {"walks", est.walks}, {"truncated", est.truncated}};
}

void to_json(json& j, const CounterexampleWitness& w) {
  j = {{"mode", std::string(to_string(w.mode))},
       {"graph", w.graph},
       {"x", w.x},
       {"y", w.y},
       {"R_x", exact(w.R_x)},
       {"R_y", exact(w.R_y)},
       {"R_pi_x", exact(w.R_pi_x)},
       {"R_pi_y", exact(w.R_pi_y)},
       {"orderings", {std::string(to_string(w.first)), std::string(to_string(w.second))}},
       {"source", w.source}};
}

void to_json(json& j, const BrushEvaluation& b) {
  j = {{"k", b.k},
       {"p", b.p},
       {"l", b.l},
       {"delta_R", exact(b.delta_R)},
       {"delta_R_pi", exact(b.delta_R_pi)},
       {"condition", b.condition}};
}

void to_json(json& j, const ExtremalCertificate& c) {
  j = {{"n", c.n},
       {"quantity", std::string(to_string(c.quantity))},
       {"value", exact(c.value)},
       {"formula_value", exact(c.formula_value)},
       {"first", c.first},
       {"trees_checked", c.trees_checked},
       {"optimizers", c.optimizers},
       {"optimizers_in_family", c.optimizers_in_family},
       {"valid", c.valid()}};
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  j["second"] = c.second ? json(*c.second) : json(nullptr);
}

void to_json(json& j, const ScalingRow& row) {
  j = {{"n", row.n},
       {"samples", row.samples},
       {"cc_norm_mean", row.cc_norm_mean},
       {"rc_norm_mean", row.rc_norm_mean},
       {"ct_norm_mean", row.ct_norm_mean}};
}

void to_json(json& j, const CampaignResult& r) {
  j = {{"name", r.name},
       {"max_n", r.max_n},
       {"graphs", r.graphs},
       {"checks", r.checks},
       {"failures", r.failures},
       {"failure_samples", r.failure_samples},
       {"details", r.details},
       {"inconclusive", r.inconclusive},
       {"passed", r.passed()}};
}

json invariants_report(const Graph& g) {
  const GraphAnalysis a = analyze(g);
  const SpectralSums sums = spectral_sums(g);
  json out;
  out["graph"] = g;
  out["global"] = a.ginv;
  out["vertex"] = a.vinv;
  out["costs"] = a.costs;
  out["spectral"] = sums;
  out["approx"] = {{"W", to_double(a.ginv.W)},
                   {"K", to_double(a.ginv.K)},
                   {"K_pi", to_double(a.ginv.K_pi)},
                   {"K_pi2", to_double(a.ginv.K_pi2)},
                   {"kemeny", to_double(a.costs.kemeny)},
                   {"cc", approx(a.costs.cc)},
                   {"rc", approx(a.costs.rc)}};
  return out;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace walkinv
