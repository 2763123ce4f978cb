#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "crystals/crystal_graph.hpp"
#include "crystals/decomposition.hpp"
#include "crystals/monomial.hpp"
#include "crystals/weights.hpp"

namespace crystals {

// Monomials travel as arrays of [index, shift, exponent] triples in canonical
// order; weights travel as their text form.

inline nlohmann::ordered_json monomial_to_json(const Monomial& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const VarExp& e : m.entries()) {
    out.push_back({e.index, e.shift, e.exp});
  }
  return out;
}

inline Monomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("monomial JSON must be an array of triples");
  }
  std::vector<VarExp> entries;
  entries.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number_integer()) {
      throw std::invalid_argument("monomial JSON entries must be [index, shift, exp]");
    }
    entries.push_back(VarExp{item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }
  return Monomial::from_entries(std::move(entries));
}

template <typename E>
nlohmann::ordered_json decomposition_to_json(const Decomposition<E>& dec) {
  nlohmann::ordered_json components = nlohmann::ordered_json::array();
  for (const ComponentInfo& comp : dec.components) {
    nlohmann::ordered_json entry;
    entry["weight"] = to_string(comp.highest_weight);
    entry["size"] = comp.size();
    entry["highest"] = dec.graph.labels[static_cast<std::size_t>(comp.highest_node)];
    components.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["components"] = std::move(components);
  out["universe_size"] = dec.graph.size();
  return out;
}

inline nlohmann::ordered_json report_to_json(const DecompositionReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["p"] = report.p;
  out["q"] = report.q;
  out["m"] = report.m;
  nlohmann::ordered_json computed = nlohmann::ordered_json::array();
  for (const Weight& w : report.computed) computed.push_back(to_string(w));
  out["computed"] = std::move(computed);
  nlohmann::ordered_json predicted = nlohmann::ordered_json::array();
  for (const Weight& w : report.predicted) predicted.push_back(to_string(w));
  out["predicted"] = std::move(predicted);
  out["match"] = report.match;
  out["universe_size"] = report.universe_size;
  out["tensor_size"] = report.tensor_size;
  nlohmann::ordered_json components = nlohmann::ordered_json::array();
  for (const ComponentReport& comp : report.components) {
    nlohmann::ordered_json entry;
    entry["weight"] = to_string(comp.weight);
    entry["size"] = comp.size;
    entry["highest"] = monomial_to_json(comp.highest);
    components.push_back(std::move(entry));
  }
  out["components"] = std::move(components);
  if (!report.failures.empty()) {
    out["failures"] = report.failures;
  }
  return out;
}

// Graph payload for monomial crystals: nodes in canonical order plus
// lowering edges [source, color, target] sorted by (source, color).
inline nlohmann::ordered_json graph_to_json(const CrystalGraph<Monomial>& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const Monomial& m : g.nodes) nodes.push_back(monomial_to_json(m));
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (int i = 1; i <= g.rank; ++i) {
      const int v = g.f_edge[u][static_cast<std::size_t>(i - 1)];
      if (v >= 0) edges.push_back({u, i, v});
    }
  }
  nlohmann::ordered_json out;
  out["size"] = g.size();
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace crystals
