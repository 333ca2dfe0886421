#ifndef GALOIS_REPORT_HPP
#define GALOIS_REPORT_HPP

#include <json.hpp>

#include "galois/engine.hpp"
#include "galois/lattice.hpp"

namespace galois {

using Json = nlohmann::ordered_json;

inline Json json_group(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.to_string());
  j["generators"] = gens;
  Json types = Json::array();
  for (const auto& t : g.cycle_types()) types.push_back(t);
  j["cycle_types"] = types;
  return j;
}

inline Json json_triangular(const TriangularIdeal& t) {
  Json j;
  j["init_degrees"] = t.init_degrees;
  Json gens = Json::array();
  for (const MultiPoly& f : t.gens) gens.push_back(f.to_string());
  j["generators"] = gens;
  return j;
}

inline Json json_result(const GaloisResult& r) {
  Json j;
  j["polynomial"] = r.f.to_string();
  j["degree"] = r.f.degree();
  j["reducible"] = r.reducible;
  j["group"] = json_group(r.group);
  if (r.label)
    j["group"]["label"] = *r.label;
  else
    j["group"]["label"] = nullptr;
  Json steps = Json::array();
  for (const ChainStep& s : r.steps) {
    Json e;
    e["from_order"] = s.from_order;
    e["to_order"] = s.to_order;
    e["invariant"] = s.invariant;
    e["resolvent"] = s.resolvent;
    e["chosen_factor"] = s.chosen_factor;
    e["dim_before"] = s.dim_before;
    e["dim_after"] = s.dim_after;
    steps.push_back(e);
  }
  j["chain"] = steps;
  j["dimension"] = r.relations_ideal->dimension();
  j["triangular"] = json_triangular(r.triangular);
  Json dedekind = Json::array();
  for (const auto& [p, degrees] : r.oracles.dedekind) {
    Json e;
    e["prime"] = p;
    e["degrees"] = degrees;
    dedekind.push_back(e);
  }
  j["oracles"]["dedekind"] = dedekind;
  j["oracles"]["skipped_primes"] = r.oracles.skipped_primes;
  j["oracles"]["disc_is_square"] = r.oracles.disc_is_square;
  j["oracles"]["cycle_types_consistent"] = r.oracles.cycle_types_consistent;
  j["oracles"]["disc_consistent"] = r.oracles.disc_consistent;
  j["purity"]["dim_eq_stabilizer"] = r.purity_dim_eq_stab;
  j["purity"]["init_degree_product"] = r.purity_initdeg_product;
  j["purity"]["group_eq_self_injector"] = r.purity_group_eq_injector;
  return j;
}

}  // namespace galois

#endif
