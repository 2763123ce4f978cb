#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "crystals/crystal_graph.hpp"
#include "crystals/decomposition.hpp"
#include "crystals/monomial.hpp"
#include "crystals/serialize.hpp"
#include "crystals/weights.hpp"

namespace crystals::cli {

namespace {

enum class Format { text, json, dot };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};

MonomialOps default_ops(int n) {
  return MonomialOps{Convention{RankedCartan(n)}};
}

std::string weights_text(const std::vector<Weight>& ws) {
  std::string out = "[";
  for (std::size_t j = 0; j < ws.size(); ++j) {
    if (j) out += ", ";
    out += to_string(ws[j]);
  }
  return out + "]";
}

int run_component(int n, int k, int shift, Format format, std::size_t budget,
                  std::ostream& out) {
  const MonomialOps ops = default_ops(n);
  const CrystalGraph<Monomial> graph =
      generate_component(Monomial::y(k, shift), ops, budget);
  switch (format) {
    case Format::text:
      for (const std::string& label : graph.labels) out << label << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["shift"] = shift;
      j.update(graph_to_json(graph));
      out << j.dump() << '\n';
      break;
    }
    case Format::dot:
      out << to_dot(graph);
      break;
  }
  return 0;
}

int run_product(int n, int p, int q, int m, Format format, std::ostream& out) {
  const ProductSet universe =
      product_set(fundamental_crystal(n, p, m), fundamental_crystal(n, q, 1));
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["q"] = q;
    j["m"] = m;
    j["size"] = universe.elements.size();
    j["pair_count"] = universe.pair_count;
    nlohmann::ordered_json elements = nlohmann::ordered_json::array();
    for (const Monomial& mono : universe.elements) {
      elements.push_back(monomial_to_json(mono));
    }
    j["elements"] = std::move(elements);
    out << j.dump() << '\n';
  } else {
    for (const Monomial& mono : universe.elements) {
      out << to_string(mono) << '\n';
    }
  }
  return 0;
}

std::vector<Monomial> read_universe(std::istream& in) {
  std::string src(std::istreambuf_iterator<char>(in), {});
  const auto first = src.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("no monomials on stdin");
  }
  std::vector<Monomial> universe;
  if (src[first] == '[' || src[first] == '{') {
    const nlohmann::json payload = nlohmann::json::parse(src);
    const nlohmann::json& nodes =
        payload.is_object() ? payload.at("nodes") : payload;
    if (!nodes.is_array()) {
      throw std::invalid_argument("JSON input must be an array of monomials");
    }
    for (const auto& item : nodes) universe.push_back(monomial_from_json(item));
  } else {
    std::size_t pos = 0;
    while (pos < src.size()) {
      std::size_t end = src.find('\n', pos);
      if (end == std::string::npos) end = src.size();
      std::string line = src.substr(pos, end - pos);
      pos = end + 1;
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
        line.pop_back();
      }
      std::size_t start = 0;
      while (start < line.size() &&
             std::isspace(static_cast<unsigned char>(line[start]))) {
        ++start;
      }
      if (start > 0) line.erase(0, start);
      if (line.empty()) continue;
      universe.push_back(parse_monomial(line));
    }
  }
  return universe;
}

int run_decompose(int n, Format format, std::istream& in, std::ostream& out) {
  const std::vector<Monomial> universe = read_universe(in);
  const MonomialOps ops = default_ops(n);
  const Decomposition<Monomial> dec = decompose(universe, ops);
  if (format == Format::json) {
    out << decomposition_to_json(dec).dump() << '\n';
  } else {
    for (const ComponentInfo& comp : dec.components) {
      out << "B(" << to_string(comp.highest_weight) << ") size=" << comp.size()
          << " highest="
          << dec.graph.labels[static_cast<std::size_t>(comp.highest_node)]
          << '\n';
    }
    out << "components=" << dec.components.size()
        << " universe=" << dec.graph.size() << '\n';
  }
  return 0;
}

int run_tensor(int n, int p, int q, Format format, std::size_t budget,
               std::ostream& out) {
  const MonomialOps ops = default_ops(n);
  const CrystalGraph<Monomial> left =
      generate_component(Monomial::y(p, 1), ops, budget);
  const CrystalGraph<Monomial> right =
      generate_component(Monomial::y(q, 1), ops, budget);
  const auto dec = decompose_graph(tensor_product(left, right, ops, ops));
  std::vector<Weight> computed;
  for (const ComponentInfo& comp : dec.components) {
    computed.push_back(comp.highest_weight);
  }
  std::sort(computed.begin(), computed.end());
  const std::vector<Weight> predicted = predicted_tensor_decomposition(n, p, q);
  const bool match = computed == predicted;
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["q"] = q;
    nlohmann::ordered_json computed_json = nlohmann::ordered_json::array();
    for (const Weight& w : computed) computed_json.push_back(to_string(w));
    j["computed"] = std::move(computed_json);
    nlohmann::ordered_json predicted_json = nlohmann::ordered_json::array();
    for (const Weight& w : predicted) predicted_json.push_back(to_string(w));
    j["predicted"] = std::move(predicted_json);
    j["match"] = match;
    j["size"] = dec.graph.size();
    nlohmann::ordered_json components = nlohmann::ordered_json::array();
    for (const ComponentInfo& comp : dec.components) {
      nlohmann::ordered_json entry;
      entry["weight"] = to_string(comp.highest_weight);
      entry["size"] = comp.size();
      entry["highest"] =
          dec.graph.labels[static_cast<std::size_t>(comp.highest_node)];
      components.push_back(std::move(entry));
    }
    j["components"] = std::move(components);
    out << j.dump() << '\n';
  } else {
    out << "computed: " << weights_text(computed) << '\n';
    out << "predicted: " << weights_text(predicted) << '\n';
    out << "match: " << (match ? "true" : "false") << '\n';
  }
  return match ? 0 : 2;
}

std::string sweep_text_line(const DecompositionReport& report) {
  std::string line = "n=" + std::to_string(report.n) +
                     " p=" + std::to_string(report.p) +
                     " q=" + std::to_string(report.q) +
                     " m=" + std::to_string(report.m) +
                     " ok=" + (report.all_good() ? "true" : "false") +
                     " computed=" + weights_text(report.computed) +
                     " predicted=" + weights_text(report.predicted);
  for (const std::string& failure : report.failures) {
    line += " failure\"" + failure + "\"";
  }
  return line;
}

int run_verify(int n, int p, int q, int m, Format format, std::ostream& out) {
  const DecompositionReport report = verify_case(n, p, q, m, true);
  if (format == Format::json) {
    out << report_to_json(report).dump() << '\n';
  } else {
    out << "computed: " << weights_text(report.computed) << '\n';
    out << "predicted: " << weights_text(report.predicted) << '\n';
    out << "match: " << (report.match ? "true" : "false") << '\n';
    out << "universe: " << report.universe_size << " of " << report.tensor_size
        << " pair products" << '\n';
    for (const std::string& failure : report.failures) {
      out << "failure: " << failure << '\n';
    }
  }
  return report.all_good() ? 0 : 2;
}

unsigned sweep_thread_count(std::size_t cases) {
  unsigned count = std::thread::hardware_concurrency();
  if (count == 0) count = 1;
  if (const char* env = std::getenv("CRYSTAL_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1 && parsed <= 256) {
      count = static_cast<unsigned>(parsed);
    }
  }
  if (static_cast<std::size_t>(count) > cases) {
    count = static_cast<unsigned>(cases == 0 ? 1 : cases);
  }
  return count;
}

int run_sweep(int n_max, int m_max, Format format, std::ostream& out) {
  struct Case {
    int n, p, q, m;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (int m = 1; m <= m_max; ++m) {
          cases.push_back(Case{n, p, q, m});
        }
      }
    }
  }
  std::vector<std::string> lines(cases.size());
  std::vector<char> good(cases.size(), 0);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cases.size()) break;
      const Case c = cases[idx];
      try {
        const DecompositionReport report = verify_case(c.n, c.p, c.q, c.m);
        good[idx] = report.all_good() ? 1 : 0;
        lines[idx] = format == Format::json ? report_to_json(report).dump()
                                            : sweep_text_line(report);
      } catch (const std::exception& e) {
        good[idx] = 0;
        if (format == Format::json) {
          nlohmann::ordered_json j;
          j["n"] = c.n;
          j["p"] = c.p;
          j["q"] = c.q;
          j["m"] = c.m;
          j["error"] = e.what();
          lines[idx] = j.dump();
        } else {
          lines[idx] = "n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) +
                       " q=" + std::to_string(c.q) + " m=" + std::to_string(c.m) +
                       " error=\"" + e.what() + "\"";
        }
      }
    }
  };
  const unsigned threads = sweep_thread_count(cases.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  bool all_good = true;
  for (std::size_t idx = 0; idx < cases.size(); ++idx) {
    out << lines[idx] << '\n';
    if (!good[idx]) all_good = false;
  }
  return all_good ? 0 : 2;
}

int run_graph(int n, bool component_params, int k, int shift, int p, int q,
              int m, std::size_t budget, std::ostream& out) {
  const MonomialOps ops = default_ops(n);
  if (component_params) {
    out << to_dot(generate_component(Monomial::y(k, shift), ops, budget));
  } else {
    const ProductSet universe =
        product_set(fundamental_crystal(n, p, m), fundamental_crystal(n, q, 1));
    out << to_dot(build_graph(universe.elements, ops));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Nakajima monomial crystals for type A: component generation, "
               "products of fundamental crystals, brute-force decomposition, "
               "and closed-form verification",
               "crystal"};
  app.require_subcommand(1);

  int n = 0, k = 0, shift = 0, p = 0, q = 0, m = 0, n_max = 0, m_max = 0;
  std::size_t budget = 1000000;
  Format component_fmt = Format::text;
  Format product_fmt = Format::text;
  Format decompose_fmt = Format::text;
  Format tensor_fmt = Format::json;
  Format verify_fmt = Format::json;
  Format sweep_fmt = Format::json;

  const auto add_rank = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "rank of the type-A root system")->required();
  };
  const auto add_budget = [&budget](CLI::App* cmd) {
    cmd->add_option("--node-budget", budget,
                    "abort component generation beyond this many nodes")
        ->check(CLI::PositiveNumber);
  };
  const auto add_output = [](CLI::App* cmd, Format& target, const char* what) {
    cmd->add_option("--output", target, what)
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  CLI::App* component = app.add_subcommand(
      "component", "generate the crystal component of Y_k(shift)");
  add_rank(component);
  component->add_option("--k", k, "variable index of the seed")->required();
  component->add_option("--shift", shift, "integer shift of the seed")->required();
  add_output(component, component_fmt, "text, json, or dot");
  add_budget(component);

  CLI::App* product = app.add_subcommand(
      "product", "list the product set M(Y_p(m)) * M(Y_q(1))");
  add_rank(product);
  product->add_option("--p", p, "index of the first factor")->required();
  product->add_option("--q", q, "index of the second factor")->required();
  product->add_option("--m", m, "shift of the first factor")->required();
  add_output(product, product_fmt, "text or json");

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "decompose the set of monomials read from stdin");
  add_rank(decompose_cmd);
  add_output(decompose_cmd, decompose_fmt, "text or json");

  CLI::App* tensor = app.add_subcommand(
      "tensor", "decompose B(L_p) (x) B(L_q) and compare with the closed form");
  add_rank(tensor);
  tensor->add_option("--p", p, "index of the left factor")->required();
  tensor->add_option("--q", q, "index of the right factor")->required();
  add_output(tensor, tensor_fmt, "text or json");
  add_budget(tensor);

  CLI::App* verify = app.add_subcommand(
      "verify", "verify the predicted decomposition of M(Y_p(m)) * M(Y_q(1))");
  add_rank(verify);
  verify->add_option("--p", p, "index of the first factor")->required();
  verify->add_option("--q", q, "index of the second factor")->required();
  verify->add_option("--m", m, "shift of the first factor (>= 1)")->required();
  add_output(verify, verify_fmt, "text or json");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "verify every case with n <= n-max, p,q <= n, 1 <= m <= m-max");
  sweep->add_option("--n-max", n_max, "largest rank")->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--m-max", m_max, "largest first-factor shift")->required()
      ->check(CLI::PositiveNumber);
  add_output(sweep, sweep_fmt, "json (one case per line) or text");

  CLI::App* graph = app.add_subcommand(
      "graph", "emit DOT for a component (--k/--shift) or a product universe "
               "(--p/--q/--m)");
  add_rank(graph);
  CLI::Option* graph_k = graph->add_option("--k", k, "variable index of the seed");
  CLI::Option* graph_shift =
      graph->add_option("--shift", shift, "integer shift of the seed");
  CLI::Option* graph_p = graph->add_option("--p", p, "index of the first factor");
  CLI::Option* graph_q = graph->add_option("--q", q, "index of the second factor");
  CLI::Option* graph_m = graph->add_option("--m", m, "shift of the first factor");
  graph_k->needs(graph_shift);
  graph_shift->needs(graph_k);
  graph_p->needs(graph_q, graph_m);
  graph_q->needs(graph_p, graph_m);
  graph_m->needs(graph_p, graph_q);
  graph_k->excludes(graph_p);
  add_budget(graph);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;  // usage errors are exit 1; --help stays 0
  }

  try {
    if (component->parsed()) {
      return run_component(n, k, shift, component_fmt, budget, out);
    }
    if (product->parsed()) {
      if (product_fmt == Format::dot) {
        err << "product supports --output text or json\n";
        return 1;
      }
      return run_product(n, p, q, m, product_fmt, out);
    }
    if (decompose_cmd->parsed()) {
      if (decompose_fmt == Format::dot) {
        err << "decompose supports --output text or json\n";
        return 1;
      }
      return run_decompose(n, decompose_fmt, in, out);
    }
    if (tensor->parsed()) {
      if (tensor_fmt == Format::dot) {
        err << "tensor supports --output text or json\n";
        return 1;
      }
      return run_tensor(n, p, q, tensor_fmt, budget, out);
    }
    if (verify->parsed()) {
      if (verify_fmt == Format::dot) {
        err << "verify supports --output text or json\n";
        return 1;
      }
      return run_verify(n, p, q, m, verify_fmt, out);
    }
    if (sweep->parsed()) {
      if (sweep_fmt == Format::dot) {
        err << "sweep supports --output text or json\n";
        return 1;
      }
      return run_sweep(n_max, m_max, sweep_fmt, out);
    }
    if (graph->parsed()) {
      const bool component_params = graph_k->count() > 0;
      const bool product_params = graph_p->count() > 0;
      if (component_params == product_params) {
        err << "graph needs either --k/--shift or --p/--q/--m\n";
        return 1;
      }
      return run_graph(n, component_params, k, shift, p, q, m, budget, out);
    }
  } catch (const NotClosedError& e) {
    err << "not closed: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "json error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace crystals::cli
