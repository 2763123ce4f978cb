#include "crystals/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace crystals {

namespace {

void check_index_range(int k, int n, const char* what) {
  if (k < 1 || k > n) {
    throw std::out_of_range(std::string(what) + " out of range");
  }
}

}  // namespace

long long binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (int j = 1; j <= k; ++j) {
    out = out * (n - k + j) / j;
  }
  return out;
}

std::vector<Monomial> fundamental_crystal(int n, int k, int shift) {
  const RankedCartan cartan(n);
  check_index_range(k, n, "fundamental crystal index");
  std::vector<int> tuple(static_cast<std::size_t>(k));
  std::iota(tuple.begin(), tuple.end(), 1);
  std::vector<Monomial> out;
  while (true) {
    Monomial m;
    for (int j = 0; j < k; ++j) {
      m = m * x_monomial(cartan, tuple[static_cast<std::size_t>(j)], k + shift - 1 - j);
    }
    out.push_back(std::move(m));
    // Advance to the next strictly increasing tuple in 1..n+1.
    int t = k - 1;
    while (t >= 0 && tuple[static_cast<std::size_t>(t)] == n + 1 - (k - 1 - t)) --t;
    if (t < 0) break;
    ++tuple[static_cast<std::size_t>(t)];
    for (int j = t + 1; j < k; ++j) {
      tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  assert(static_cast<long long>(out.size()) == binomial(n + 1, k));
  return out;
}

bool is_fundamental_member(int n, const Monomial& m, int k, int shift) {
  [[maybe_unused]] const RankedCartan cartan(n);
  check_index_range(k, n, "fundamental crystal index");
  std::vector<std::pair<int, int>> pos;  // (index, shift) of exponent +1
  std::vector<std::pair<int, int>> neg;  // (index, shift) of exponent -1
  for (const VarExp& e : m.entries()) {
    if (e.index > n) return false;
    if (e.exp == 1) {
      pos.emplace_back(e.index, e.shift);
    } else if (e.exp == -1) {
      neg.emplace_back(e.index, e.shift);
    } else {
      return false;
    }
  }
  const int npos = static_cast<int>(pos.size());
  const int nneg = static_cast<int>(neg.size());

  // absorb_low: a_1 = 0 (the factor Y_0(m_0)^{-1} is trivial); absorb_high:
  // b_r = n+1.  Remaining a's come from the negative support, b's from the
  // positive support, both in index order.
  const auto attempt = [&](bool absorb_low, bool absorb_high) -> bool {
    const int r = nneg + (absorb_low ? 1 : 0);
    if (r != npos + (absorb_high ? 1 : 0)) return false;
    if (r == 0) return false;  // an empty factorization cannot bridge k > 0
    std::vector<int> a(static_cast<std::size_t>(r));
    std::vector<int> b(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      a[static_cast<std::size_t>(j)] =
          absorb_low ? (j == 0 ? 0 : neg[static_cast<std::size_t>(j - 1)].first)
                     : neg[static_cast<std::size_t>(j)].first;
      b[static_cast<std::size_t>(j)] =
          (absorb_high && j == r - 1) ? n + 1 : pos[static_cast<std::size_t>(j)].first;
    }
    for (int j = 0; j < r; ++j) {
      if (a[static_cast<std::size_t>(j)] >= b[static_cast<std::size_t>(j)]) return false;
      if (j + 1 < r && b[static_cast<std::size_t>(j)] >= a[static_cast<std::size_t>(j + 1)]) {
        return false;
      }
    }
    std::vector<int> ms(static_cast<std::size_t>(r) + 1);
    ms[0] = k + shift;
    ms[static_cast<std::size_t>(r)] = shift;
    for (int j = 1; j < r; ++j) {
      ms[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)].second;
    }
    if (!absorb_high && pos[static_cast<std::size_t>(r - 1)].second != shift) return false;
    for (int j = 1; j <= r; ++j) {
      if (ms[static_cast<std::size_t>(j - 1)] <= ms[static_cast<std::size_t>(j)]) return false;
    }
    for (int j = 0; j < r; ++j) {
      if (a[static_cast<std::size_t>(j)] + ms[static_cast<std::size_t>(j)] !=
          b[static_cast<std::size_t>(j)] + ms[static_cast<std::size_t>(j + 1)]) {
        return false;
      }
    }
    for (int t = 0; t < nneg; ++t) {
      const int j = absorb_low ? t + 1 : t;  // factor index holding this negative
      if (neg[static_cast<std::size_t>(t)].second != ms[static_cast<std::size_t>(j)]) {
        return false;
      }
    }
    return true;
  };

  if (nneg == npos) return attempt(false, false) || attempt(true, true);
  if (npos == nneg + 1) return attempt(true, false);
  if (nneg == npos + 1) return attempt(false, true);
  return false;
}

ProductSet product_set(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  ProductSet out;
  out.pair_count = static_cast<long long>(a.size()) * static_cast<long long>(b.size());
  out.elements.reserve(a.size() * b.size());
  for (const Monomial& x : a) {
    for (const Monomial& y : b) {
      out.elements.push_back(x * y);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  return out;
}

std::vector<Monomial> multi_product(const ProductSpec& spec) {
  if (spec.factors.empty()) {
    throw std::invalid_argument("product needs at least one factor");
  }
  std::vector<Monomial> acc =
      fundamental_crystal(spec.n, spec.factors.front().index, spec.factors.front().shift);
  for (std::size_t j = 1; j < spec.factors.size(); ++j) {
    acc = product_set(acc, fundamental_crystal(spec.n, spec.factors[j].index,
                                               spec.factors[j].shift))
              .elements;
  }
  return acc;
}

namespace {

Weight fundamental_or_zero(int n, int k) {
  return k == 0 ? Weight(n) : Weight::fundamental(n, k);
}

}  // namespace

std::vector<Weight> predicted_tensor_decomposition(int n, int p, int q) {
  const RankedCartan cartan(n);
  check_index_range(p, n, "tensor factor index");
  check_index_range(q, n, "tensor factor index");
  std::vector<Weight> out;
  if (p + q > n) {
    for (int i = std::min(p, q); i >= p + q - n; --i) {
      out.push_back(Weight::fundamental(n, i) + Weight::fundamental(n, p + q - i));
    }
    out.push_back(fundamental_or_zero(n, p + q - n - 1));
  } else {
    for (int i = std::min(p, q); i >= 1; --i) {
      out.push_back(Weight::fundamental(n, i) + Weight::fundamental(n, p + q - i));
    }
    out.push_back(Weight::fundamental(n, p + q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> predicted_product_decomposition(int n, int p, int q, int m) {
  const RankedCartan cartan(n);
  check_index_range(p, n, "product factor index");
  check_index_range(q, n, "product factor index");
  if (m < 1) {
    throw std::invalid_argument("prediction requires a first-factor shift >= 1");
  }
  std::vector<Weight> out;
  out.push_back(Weight::fundamental(n, p) + Weight::fundamental(n, q));
  const int hi = std::min(p, q) - 1;
  if (p + q > n) {
    for (int i = std::max({1, p + q - n, q + 1 - m}); i <= hi; ++i) {
      out.push_back(Weight::fundamental(n, i) + Weight::fundamental(n, p + q - i));
    }
    if (m >= n - p + 2) out.push_back(fundamental_or_zero(n, p + q - n - 1));
  } else {
    for (int i = std::max(1, q + 1 - m); i <= hi; ++i) {
      out.push_back(Weight::fundamental(n, i) + Weight::fundamental(n, p + q - i));
    }
    if (m >= q + 1) out.push_back(Weight::fundamental(n, p + q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial weight_monomials_in_fundamental(int n, int q, const Weight& target, int p) {
  const RankedCartan cartan(n);
  check_index_range(p, n, "first factor index");
  check_index_range(q, n, "second factor index");
  if (target.rank() != n) {
    throw std::invalid_argument("target weight rank mismatch");
  }
  const auto finish = [&](Monomial mono) {
    if (weight(cartan, mono) != target || !is_fundamental_member(n, mono, q, 1)) {
      throw std::logic_error("closed-form weight monomial failed its self-check");
    }
    return mono;
  };
  if (target == Weight::fundamental(n, q)) {
    return finish(Monomial::y(q, 1));
  }
  const Weight anchor = Weight::fundamental(n, p);
  for (int i = std::max(1, p + q - n); i <= std::min(p, q) - 1; ++i) {
    if (target == Weight::fundamental(n, i) + Weight::fundamental(n, p + q - i) - anchor) {
      return finish(Monomial::y(i, q - i + 1) * Monomial::y(p + q - i, 1) *
                    Monomial::y(p, q - i + 1, -1));
    }
  }
  if (p + q > n && target == fundamental_or_zero(n, p + q - n - 1) - anchor) {
    Monomial mono = Monomial::y(p, n - p + 2, -1);
    if (p + q - n - 1 >= 1) {
      mono = mono * Monomial::y(p + q - n - 1, n - p + 2);
    }
    return finish(mono);
  }
  if (p + q <= n && target == Weight::fundamental(n, p + q) - anchor) {
    return finish(Monomial::y(p + q, 1) * Monomial::y(p, q + 1, -1));
  }
  throw UnsupportedWeightError("weight " + to_string(target) +
                               " matches no closed-form pattern");
}

std::vector<std::pair<Monomial, Monomial>> classify_highest_pairs(int n, int p,
                                                                  int q, int m) {
  const Convention conv{RankedCartan(n)};
  const std::vector<Monomial> first = fundamental_crystal(n, p, m);
  const std::vector<Monomial> second = fundamental_crystal(n, q, 1);
  std::vector<std::pair<Monomial, Monomial>> out;
  for (const Monomial& a : first) {
    for (const Monomial& b : second) {
      if (is_highest(conv, a * b)) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

long long count_fillings(const std::vector<int>& row_len,
                         std::vector<std::vector<int>>& grid, int r, int c,
                         int max_entry) {
  if (r == static_cast<int>(row_len.size())) return 1;
  int next_r = r;
  int next_c = c + 1;
  if (next_c >= row_len[static_cast<std::size_t>(r)]) {
    next_r = r + 1;
    next_c = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  long long total = 0;
  for (int v = lo; v <= max_entry; ++v) {
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    total += count_fillings(row_len, grid, next_r, next_c, max_entry);
  }
  return total;
}

}  // namespace

long long ssyt_count(int n, const Weight& lambda) {
  [[maybe_unused]] const RankedCartan cartan(n);
  if (lambda.rank() != n) {
    throw std::invalid_argument("shape weight rank mismatch");
  }
  if (!is_dominant(lambda)) {
    throw std::invalid_argument("shape requires a dominant weight");
  }
  // lambda_i columns of height i; row r then spans the columns of height >= r,
  // so its length is lambda_r + lambda_{r+1} + ... + lambda_n.
  std::vector<int> row_len;
  for (int r = 1; r <= n; ++r) {
    int len = 0;
    for (int i = r; i <= n; ++i) len += lambda[i];
    if (len == 0) break;
    row_len.push_back(len);
  }
  if (row_len.empty()) return 1;
  std::vector<std::vector<int>> grid;
  grid.reserve(row_len.size());
  for (int len : row_len) {
    grid.emplace_back(static_cast<std::size_t>(len), 0);
  }
  return count_fillings(row_len, grid, 0, 0, n + 1);
}

DecompositionReport verify_case(int n, int p, int q, int m, bool validate_graph) {
  DecompositionReport report;
  report.n = n;
  report.p = p;
  report.q = q;
  report.m = m;
  report.predicted = predicted_product_decomposition(n, p, q, m);

  const std::vector<Monomial> first = fundamental_crystal(n, p, m);
  const std::vector<Monomial> second = fundamental_crystal(n, q, 1);
  const ProductSet universe = product_set(first, second);
  report.universe_size = universe.elements.size();
  report.tensor_size = universe.pair_count;

  const MonomialOps ops{Convention{RankedCartan(n)}};
  const Decomposition<Monomial> dec = decompose(universe.elements, ops);
  for (const ComponentInfo& comp : dec.components) {
    report.computed.push_back(comp.highest_weight);
    report.components.push_back(ComponentReport{
        comp.highest_weight, comp.size(),
        dec.graph.nodes[static_cast<std::size_t>(comp.highest_node)]});
  }
  std::sort(report.computed.begin(), report.computed.end());
  report.match = report.computed == report.predicted;

  const auto fail = [&report](const std::string& msg) {
    report.failures.push_back(msg);
  };

  {
    const std::vector<Weight> tensor = predicted_tensor_decomposition(n, p, q);
    if (!std::includes(tensor.begin(), tensor.end(), report.computed.begin(),
                       report.computed.end())) {
      fail("computed weights are not contained in the tensor decomposition");
    }
  }

  {
    std::size_t total = 0;
    for (const ComponentReport& comp : report.components) {
      total += comp.size;
      const long long expected = ssyt_count(n, comp.weight);
      if (static_cast<long long>(comp.size) != expected) {
        fail("component at " + to_string(comp.highest) + " has size " +
             std::to_string(comp.size) + " but the tableau count is " +
             std::to_string(expected));
      }
    }
    if (total != report.universe_size) {
      fail("component sizes do not partition the universe");
    }
  }

  report.highest_pairs = classify_highest_pairs(n, p, q, m);
  {
    const Monomial anchor = Monomial::y(p, m);
    std::vector<Monomial> products;
    std::vector<Monomial> seconds;
    for (const auto& [a, b] : report.highest_pairs) {
      if (a != anchor) {
        fail("highest pair led by " + to_string(a) + " instead of " +
             to_string(anchor));
      }
      products.push_back(a * b);
      seconds.push_back(b);
    }
    std::sort(products.begin(), products.end());
    std::vector<Monomial> roots;
    for (const ComponentReport& comp : report.components) {
      roots.push_back(comp.highest);
    }
    std::sort(roots.begin(), roots.end());
    if (products != roots) {
      fail("highest pairs do not biject with the component roots");
    }
    const Weight anchor_weight = Weight::fundamental(n, p);
    std::vector<Monomial> expected;
    for (const Weight& w : report.predicted) {
      expected.push_back(weight_monomials_in_fundamental(n, q, w - anchor_weight, p));
    }
    std::sort(expected.begin(), expected.end());
    std::sort(seconds.begin(), seconds.end());
    if (seconds != expected) {
      fail("highest second factors do not match the closed forms");
    }
  }

  if (validate_graph) {
    const AxiomReport axioms = validate_axioms(dec.graph);
    for (const std::string& violation : axioms.violations) {
      fail("axiom violation: " + violation);
    }
  }
  return report;
}

}  // namespace crystals
