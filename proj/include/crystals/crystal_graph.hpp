#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystals/weights.hpp"

namespace crystals {

class NotClosedError : public std::runtime_error {
 public:
  explicit NotClosedError(const std::string& msg) : std::runtime_error(msg) {}
};

class UncoveredError : public std::runtime_error {
 public:
  explicit UncoveredError(const std::string& msg) : std::runtime_error(msg) {}
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Element operations a crystal-graph builder needs: statistics, raising and
// lowering operators, and a printable label.
template <typename Ops>
concept CrystalOps = requires(const Ops& ops, const typename Ops::element_type& b, int i) {
  typename Ops::element_type;
  { ops.rank() } -> std::convertible_to<int>;
  { ops.weight(b) } -> std::convertible_to<Weight>;
  { ops.phi(b, i) } -> std::convertible_to<int>;
  { ops.eps(b, i) } -> std::convertible_to<int>;
  { ops.f_tilde(b, i) } -> std::convertible_to<std::optional<typename Ops::element_type>>;
  { ops.e_tilde(b, i) } -> std::convertible_to<std::optional<typename Ops::element_type>>;
  { ops.label(b) } -> std::convertible_to<std::string>;
};

// Finite colored graph with cached statistics.  Nodes are kept sorted, edges
// are node indices with -1 meaning the operator is disengaged.  Plain data on
// purpose: validators work on the cached values, so tests can tamper freely.
template <typename E>
struct CrystalGraph {
  int rank = 0;
  std::vector<E> nodes;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::vector<std::vector<int>> phi;     // [node][color-1]
  std::vector<std::vector<int>> eps;     // [node][color-1]
  std::vector<std::vector<int>> f_edge;  // [node][color-1] -> node or -1
  std::vector<std::vector<int>> e_edge;  // [node][color-1] -> node or -1

  std::size_t size() const { return nodes.size(); }

  int node_index(const E& e) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
    if (it != nodes.end() && *it == e) {
      return static_cast<int>(it - nodes.begin());
    }
    return -1;
  }
};

// Builds the graph over exactly the given universe; any operator image that
// falls outside it raises NotClosedError.
template <CrystalOps Ops>
CrystalGraph<typename Ops::element_type> build_graph(
    std::vector<typename Ops::element_type> universe, const Ops& ops) {
  using E = typename Ops::element_type;
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  CrystalGraph<E> g;
  g.rank = ops.rank();
  g.nodes = std::move(universe);
  const std::size_t count = g.nodes.size();
  const std::size_t colors = static_cast<std::size_t>(g.rank);
  g.labels.reserve(count);
  g.weights.reserve(count);
  g.phi.assign(count, std::vector<int>(colors, 0));
  g.eps.assign(count, std::vector<int>(colors, 0));
  g.f_edge.assign(count, std::vector<int>(colors, -1));
  g.e_edge.assign(count, std::vector<int>(colors, -1));

  for (const E& node : g.nodes) {
    g.labels.push_back(ops.label(node));
    g.weights.push_back(ops.weight(node));
  }
  for (std::size_t u = 0; u < count; ++u) {
    for (int i = 1; i <= g.rank; ++i) {
      g.phi[u][static_cast<std::size_t>(i - 1)] = ops.phi(g.nodes[u], i);
      g.eps[u][static_cast<std::size_t>(i - 1)] = ops.eps(g.nodes[u], i);
      const std::optional<E> f = ops.f_tilde(g.nodes[u], i);
      if (f) {
        const int v = g.node_index(*f);
        if (v < 0) {
          throw NotClosedError("lowering operator " + std::to_string(i) +
                               " leaves the universe at " + g.labels[u]);
        }
        g.f_edge[u][static_cast<std::size_t>(i - 1)] = v;
      }
      const std::optional<E> e = ops.e_tilde(g.nodes[u], i);
      if (e) {
        const int v = g.node_index(*e);
        if (v < 0) {
          throw NotClosedError("raising operator " + std::to_string(i) +
                               " leaves the universe at " + g.labels[u]);
        }
        g.e_edge[u][static_cast<std::size_t>(i - 1)] = v;
      }
    }
  }
  return g;
}

// Closure of a seed under both operators, then the graph over that closure.
template <CrystalOps Ops>
CrystalGraph<typename Ops::element_type> generate_component(
    const typename Ops::element_type& seed, const Ops& ops,
    std::size_t node_budget = 1000000) {
  using E = typename Ops::element_type;
  std::set<E> seen;
  std::deque<E> frontier;
  seen.insert(seed);
  frontier.push_back(seed);
  while (!frontier.empty()) {
    const E current = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= ops.rank(); ++i) {
      for (const std::optional<E>& next :
           {ops.f_tilde(current, i), ops.e_tilde(current, i)}) {
        if (next && seen.insert(*next).second) {
          if (seen.size() > node_budget) {
            throw BudgetExceededError("component exceeds node budget of " +
                                      std::to_string(node_budget));
          }
          frontier.push_back(*next);
        }
      }
    }
  }
  return build_graph<Ops>(std::vector<E>(seen.begin(), seen.end()), ops);
}

struct ComponentInfo {
  int highest_node;
  Weight highest_weight;
  std::vector<int> nodes;  // ascending node indices

  std::size_t size() const { return nodes.size(); }
};

template <typename E>
struct Decomposition {
  CrystalGraph<E> graph;
  std::vector<ComponentInfo> components;  // ordered by highest node index
};

// Splits a graph into connected components, each rooted at its unique node
// with every raising operator disengaged.  UncoveredError reports nodes not
// reachable from any such root — impossible for a genuine finite crystal.
template <typename E>
Decomposition<E> decompose_graph(CrystalGraph<E> graph) {
  const std::size_t count = graph.size();
  std::vector<int> component(count, -1);
  std::vector<ComponentInfo> infos;
  for (std::size_t root = 0; root < count; ++root) {
    const std::vector<int>& up = graph.e_edge[root];
    if (!std::all_of(up.begin(), up.end(), [](int v) { return v < 0; })) {
      continue;
    }
    ComponentInfo info{static_cast<int>(root), graph.weights[root], {}};
    const int id = static_cast<int>(infos.size());
    std::deque<int> frontier;
    if (component[root] != -1) {
      throw std::logic_error("two roots share a connected component");
    }
    component[root] = id;
    frontier.push_back(static_cast<int>(root));
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop_front();
      info.nodes.push_back(u);
      for (int c = 0; c < graph.rank; ++c) {
        for (int v : {graph.f_edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)],
                      graph.e_edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]}) {
          if (v < 0) continue;
          if (component[static_cast<std::size_t>(v)] == -1) {
            component[static_cast<std::size_t>(v)] = id;
            frontier.push_back(v);
          } else if (component[static_cast<std::size_t>(v)] != id) {
            throw std::logic_error("two roots share a connected component");
          }
        }
      }
    }
    std::sort(info.nodes.begin(), info.nodes.end());
    infos.push_back(std::move(info));
  }
  for (std::size_t u = 0; u < count; ++u) {
    if (component[u] == -1) {
      throw UncoveredError("node " + graph.labels[u] +
                           " is not reachable from any highest node");
    }
  }
  return Decomposition<E>{std::move(graph), std::move(infos)};
}

template <CrystalOps Ops>
Decomposition<typename Ops::element_type> decompose(
    std::vector<typename Ops::element_type> universe, const Ops& ops) {
  return decompose_graph(build_graph<Ops>(std::move(universe), ops));
}

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the crystal axioms and semi-normality on the cached graph data:
// phi = eps + <h_i, wt> at every node, weight and statistic steps across
// every edge, lowering/raising operators mutually inverse, operators engaged
// exactly when the matching statistic is positive, and string lengths along
// each color equal to the statistics.
template <typename E>
AxiomReport validate_axioms(const CrystalGraph<E>& g) {
  AxiomReport report;
  if (g.size() == 0) return report;
  const RankedCartan cartan(g.rank);
  const auto complain = [&report, &g](std::size_t u, int i, const std::string& what) {
    report.violations.push_back("node " + g.labels[u] + " color " +
                                std::to_string(i) + ": " + what);
  };
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (int i = 1; i <= g.rank; ++i) {
      const std::size_t c = static_cast<std::size_t>(i - 1);
      const int phi_u = g.phi[u][c];
      const int eps_u = g.eps[u][c];
      if (phi_u < 0 || eps_u < 0) {
        complain(u, i, "negative statistic");
      }
      if (phi_u != eps_u + pairing(cartan, g.weights[u], i)) {
        complain(u, i, "phi - eps does not match the weight pairing");
      }
      const int fv = g.f_edge[u][c];
      if ((fv >= 0) != (phi_u > 0)) {
        complain(u, i, "lowering operator engaged iff phi > 0 fails");
      }
      const int ev = g.e_edge[u][c];
      if ((ev >= 0) != (eps_u > 0)) {
        complain(u, i, "raising operator engaged iff eps > 0 fails");
      }
      if (fv >= 0) {
        const std::size_t v = static_cast<std::size_t>(fv);
        if (g.weights[v] != g.weights[u] - simple_root(cartan, i)) {
          complain(u, i, "lowering edge does not subtract the simple root");
        }
        if (g.phi[v][c] != phi_u - 1 || g.eps[v][c] != eps_u + 1) {
          complain(u, i, "statistics do not step by one along lowering edge");
        }
        if (g.e_edge[v][c] != static_cast<int>(u)) {
          complain(u, i, "inverse pair broken: raising does not undo lowering");
        }
      }
      if (ev >= 0) {
        const std::size_t v = static_cast<std::size_t>(ev);
        if (g.weights[v] != g.weights[u] + simple_root(cartan, i)) {
          complain(u, i, "raising edge does not add the simple root");
        }
        if (g.phi[v][c] != phi_u + 1 || g.eps[v][c] != eps_u - 1) {
          complain(u, i, "statistics do not step by one along raising edge");
        }
        if (g.f_edge[v][c] != static_cast<int>(u)) {
          complain(u, i, "inverse pair broken: lowering does not undo raising");
        }
      }
      // Walk the full i-string from its head to cross-check the statistics.
      if (eps_u == 0) {
        int steps = 0;
        std::size_t w = u;
        while (g.f_edge[w][c] >= 0) {
          w = static_cast<std::size_t>(g.f_edge[w][c]);
          ++steps;
          if (steps > phi_u) break;
        }
        if (steps != phi_u || g.phi[w][c] != 0) {
          complain(u, i, "string length does not equal phi at the string head");
        }
      }
    }
  }
  return report;
}

template <typename L, typename R>
struct TensorElement {
  L left;
  R right;
  auto operator<=>(const TensorElement&) const = default;
};

// Tensor-product crystal structure on pairs, highest-weight-first rule:
// lowering acts on the left factor iff phi(left) > eps(right), raising acts
// on the left factor iff phi(left) >= eps(right).
template <CrystalOps OpsL, CrystalOps OpsR>
class TensorOps {
 public:
  using element_type = TensorElement<typename OpsL::element_type, typename OpsR::element_type>;

  TensorOps(OpsL left, OpsR right)
      : left_(std::move(left)), right_(std::move(right)), cartan_(left_.rank()) {
    if (left_.rank() != right_.rank()) {
      throw std::invalid_argument("tensor factors must share a rank");
    }
  }

  int rank() const { return left_.rank(); }

  Weight weight(const element_type& b) const {
    return left_.weight(b.left) + right_.weight(b.right);
  }

  int eps(const element_type& b, int i) const {
    return std::max(left_.eps(b.left, i),
                    right_.eps(b.right, i) - pairing(cartan_, left_.weight(b.left), i));
  }

  int phi(const element_type& b, int i) const {
    return std::max(right_.phi(b.right, i),
                    left_.phi(b.left, i) + pairing(cartan_, right_.weight(b.right), i));
  }

  std::optional<element_type> f_tilde(const element_type& b, int i) const {
    if (left_.phi(b.left, i) > right_.eps(b.right, i)) {
      const auto next = left_.f_tilde(b.left, i);
      assert(next && "semi-normality: phi > 0 forces an engaged operator");
      return element_type{*next, b.right};
    }
    const auto next = right_.f_tilde(b.right, i);
    if (!next) return std::nullopt;
    return element_type{b.left, *next};
  }

  std::optional<element_type> e_tilde(const element_type& b, int i) const {
    if (left_.phi(b.left, i) >= right_.eps(b.right, i)) {
      const auto next = left_.e_tilde(b.left, i);
      if (!next) return std::nullopt;
      return element_type{*next, b.right};
    }
    const auto next = right_.e_tilde(b.right, i);
    assert(next && "semi-normality: eps > 0 forces an engaged operator");
    return element_type{b.left, *next};
  }

  std::string label(const element_type& b) const {
    return left_.label(b.left) + " ⊗ " + right_.label(b.right);
  }

 private:
  OpsL left_;
  OpsR right_;
  RankedCartan cartan_;
};

// Full tensor product of two finite crystals as a graph over all pairs.
template <typename E1, typename E2, CrystalOps OpsL, CrystalOps OpsR>
CrystalGraph<TensorElement<E1, E2>> tensor_product(const CrystalGraph<E1>& a,
                                                   const CrystalGraph<E2>& b,
                                                   const OpsL& ops_a,
                                                   const OpsR& ops_b) {
  std::vector<TensorElement<E1, E2>> universe;
  universe.reserve(a.size() * b.size());
  for (const E1& x : a.nodes) {
    for (const E2& y : b.nodes) {
      universe.push_back(TensorElement<E1, E2>{x, y});
    }
  }
  return build_graph(std::move(universe), TensorOps<OpsL, OpsR>(ops_a, ops_b));
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace detail

// Deterministic DOT rendering: nodes sorted by label, edges by source then
// color.  Only lowering edges are drawn; raising edges are their inverses.
template <typename E>
std::string to_dot(const CrystalGraph<E>& g) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) order[u] = u;
  std::sort(order.begin(), order.end(), [&g](std::size_t a, std::size_t b) {
    if (g.labels[a] != g.labels[b]) return g.labels[a] < g.labels[b];
    return a < b;
  });
  std::vector<std::size_t> position(g.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;

  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t k = 0; k < order.size(); ++k) {
    out << "  n" << k << " [label=\"" << detail::dot_escape(g.labels[order[k]])
        << "\"];\n";
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t u = order[k];
    for (int i = 1; i <= g.rank; ++i) {
      const int v = g.f_edge[u][static_cast<std::size_t>(i - 1)];
      if (v >= 0) {
        out << "  n" << k << " -> n" << position[static_cast<std::size_t>(v)]
            << " [label=\"" << i << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace crystals
