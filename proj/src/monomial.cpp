#include "crystals/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <utility>

namespace crystals {

namespace {

int checked_add(int a, int b) {
  int out = 0;
  [[maybe_unused]] bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "integer overflow in exponent arithmetic");
  return out;
}

// In-place canonicalization: sort by (index, shift), merge, drop zeros.
void canonicalize(std::vector<VarExp>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const VarExp& a, const VarExp& b) {
              return std::pair(a.index, a.shift) < std::pair(b.index, b.shift);
            });
  std::vector<VarExp> merged;
  merged.reserve(entries.size());
  for (const VarExp& e : entries) {
    if (!merged.empty() && merged.back().index == e.index &&
        merged.back().shift == e.shift) {
      merged.back().exp = checked_add(merged.back().exp, e.exp);
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const VarExp& e) { return e.exp == 0; });
  entries = std::move(merged);
}

void check_positive_index(int index) {
  if (index < 1) {
    throw std::invalid_argument("variable index must be positive");
  }
}

// Exponents of Y_i(.) in ascending shift order.
std::vector<VarExp> slice(const Monomial& m, int i) {
  std::vector<VarExp> out;
  for (const VarExp& e : m.entries()) {
    if (e.index == i) out.push_back(e);
    if (e.index > i) break;
  }
  return out;
}

void check_color(const Convention& conv, const Monomial& m, int i) {
  if (i < 1 || i > conv.rank()) {
    throw std::out_of_range("color index out of range");
  }
  if (m.max_index() > conv.rank()) {
    throw std::invalid_argument("monomial mentions a variable beyond the rank");
  }
}

}  // namespace

Monomial Monomial::y(int index, int shift, int exp) {
  check_positive_index(index);
  if (exp == 0) {
    throw std::invalid_argument("exponent must be nonzero");
  }
  Monomial m;
  m.entries_.push_back(VarExp{index, shift, exp});
  return m;
}

Monomial Monomial::from_entries(std::vector<VarExp> entries) {
  for (const VarExp& e : entries) check_positive_index(e.index);
  canonicalize(entries);
  Monomial m;
  m.entries_ = std::move(entries);
  return m;
}

int Monomial::exponent(int index, int shift) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::pair(index, shift),
      [](const VarExp& e, const std::pair<int, int>& key) {
        return std::pair(e.index, e.shift) < key;
      });
  if (it != entries_.end() && it->index == index && it->shift == shift) {
    return it->exp;
  }
  return 0;
}

int Monomial::max_index() const {
  return entries_.empty() ? 0 : entries_.back().index;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    const auto ka = std::pair(ia->index, ia->shift);
    const auto kb = std::pair(ib->index, ib->shift);
    if (ka < kb) {
      out.entries_.push_back(*ia++);
    } else if (kb < ka) {
      out.entries_.push_back(*ib++);
    } else {
      const int exp = checked_add(ia->exp, ib->exp);
      if (exp != 0) out.entries_.push_back(VarExp{ia->index, ia->shift, exp});
      ++ia;
      ++ib;
    }
  }
  out.entries_.insert(out.entries_.end(), ia, a.entries_.end());
  out.entries_.insert(out.entries_.end(), ib, b.entries_.end());
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (VarExp& e : out.entries_) e.exp = -e.exp;
  return out;
}

Convention::Convention(RankedCartan cartan) : cartan_(cartan) {
  const int n = cartan_.rank();
  c_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < j) c_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
    }
  }
}

Convention::Convention(RankedCartan cartan, const std::vector<std::vector<int>>& c)
    : cartan_(cartan) {
  const int n = cartan_.rank();
  if (static_cast<int>(c.size()) != n) {
    throw std::invalid_argument("sign matrix must be rank x rank");
  }
  c_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(c[static_cast<std::size_t>(i - 1)].size()) != n) {
      throw std::invalid_argument("sign matrix must be rank x rank");
    }
    for (int j = 1; j <= n; ++j) {
      c_[static_cast<std::size_t>((i - 1) * n + (j - 1))] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && this->c(i, j) + this->c(j, i) != 1) {
        throw std::invalid_argument("sign matrix requires c_ij + c_ji = 1");
      }
    }
  }
}

int Convention::c(int i, int j) const {
  const int n = cartan_.rank();
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::out_of_range("sign matrix entry out of range");
  }
  return c_[static_cast<std::size_t>((i - 1) * n + (j - 1))];
}

Weight weight(const RankedCartan& cartan, const Monomial& m) {
  if (m.max_index() > cartan.rank()) {
    throw std::invalid_argument("monomial mentions a variable beyond the rank");
  }
  std::vector<int> coeffs(static_cast<std::size_t>(cartan.rank()), 0);
  for (const VarExp& e : m.entries()) {
    coeffs[static_cast<std::size_t>(e.index - 1)] =
        checked_add(coeffs[static_cast<std::size_t>(e.index - 1)], e.exp);
  }
  return Weight(std::move(coeffs));
}

int phi(const Monomial& m, int i) {
  if (i < 1) {
    throw std::out_of_range("color index out of range");
  }
  int prefix = 0;
  int best = 0;
  for (const VarExp& e : slice(m, i)) {
    prefix = checked_add(prefix, e.exp);
    best = std::max(best, prefix);
  }
  return best;
}

int eps(const Monomial& m, int i) {
  if (i < 1) {
    throw std::out_of_range("color index out of range");
  }
  const std::vector<VarExp> s = slice(m, i);
  int suffix = 0;
  int best = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    suffix = checked_add(suffix, it->exp);
    best = std::max(best, -suffix);
  }
  return best;
}

Monomial a_monomial(const Convention& conv, int i, int shift) {
  const int n = conv.rank();
  if (i < 1 || i > n) {
    throw std::out_of_range("color index out of range");
  }
  std::vector<VarExp> entries;
  entries.push_back(VarExp{i, shift, 1});
  entries.push_back(VarExp{i, shift + 1, 1});
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const int aji = conv.cartan().a(j, i);
    if (aji != 0) {
      entries.push_back(VarExp{j, shift + conv.c(j, i), aji});
    }
  }
  return Monomial::from_entries(std::move(entries));
}

Monomial x_monomial(const RankedCartan& cartan, int i, int shift) {
  const int n = cartan.rank();
  if (i < 1 || i > n + 1) {
    throw std::out_of_range("letter index out of range");
  }
  std::vector<VarExp> entries;
  if (i - 1 >= 1) entries.push_back(VarExp{i - 1, shift + 1, -1});
  if (i <= n) entries.push_back(VarExp{i, shift, 1});
  return Monomial::from_entries(std::move(entries));
}

std::optional<Monomial> f_tilde(const Convention& conv, const Monomial& m, int i) {
  check_color(conv, m, i);
  const std::vector<VarExp> s = slice(m, i);
  int prefix = 0;
  int best = 0;
  for (const VarExp& e : s) {
    prefix = checked_add(prefix, e.exp);
    best = std::max(best, prefix);
  }
  if (best == 0) return std::nullopt;
  // Smallest n attaining the maximum prefix sum; it is a support shift with a
  // positive exponent because the running sum starts at 0 < best.
  int nf = 0;
  prefix = 0;
  for (const VarExp& e : s) {
    prefix += e.exp;
    if (prefix == best) {
      nf = e.shift;
      break;
    }
  }
  assert(m.exponent(i, nf) > 0 && m.exponent(i, nf + 1) <= 0);
  return a_monomial(conv, i, nf).inverse() * m;
}

std::optional<Monomial> e_tilde(const Convention& conv, const Monomial& m, int i) {
  check_color(conv, m, i);
  if (eps(m, i) == 0) return std::nullopt;
  const std::vector<VarExp> s = slice(m, i);
  int prefix = 0;
  int best = 0;
  for (const VarExp& e : s) {
    prefix = checked_add(prefix, e.exp);
    best = std::max(best, prefix);
  }
  // Largest n attaining the maximum prefix sum.  The prefix is a step
  // function, constant after each support shift, so the maximum is held until
  // just before the next support entry; eps > 0 guarantees one follows.
  int last = -1;  // index into s of the last attaining support shift
  prefix = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    prefix += s[j].exp;
    if (prefix == best) last = static_cast<int>(j);
  }
  assert(last + 1 < static_cast<int>(s.size()));
  const int ne = s[static_cast<std::size_t>(last + 1)].shift - 1;
  assert(m.exponent(i, ne) >= 0 && m.exponent(i, ne + 1) < 0);
  return a_monomial(conv, i, ne) * m;
}

bool is_highest(const Convention& conv, const Monomial& m) {
  if (m.max_index() > conv.rank()) {
    throw std::invalid_argument("monomial mentions a variable beyond the rank");
  }
  for (int i = 1; i <= conv.rank(); ++i) {
    if (eps(m, i) != 0) return false;
  }
  return true;
}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return text_[pos_]; }

  void expect(char c, const char* what) {
    if (done() || peek() != c) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    ++pos_;
  }

  int integer(bool allow_sign, const char* what) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && !done() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000000L) {
        throw ParseError(std::string(what) + " too large", start);
      }
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text) {
  if (text == "1") return Monomial();
  Scanner sc(text);
  std::vector<VarExp> entries;
  while (true) {
    const std::size_t factor_pos = sc.pos();
    sc.expect('Y', "'Y'");
    sc.expect('_', "'_'");
    const int index = sc.integer(false, "variable index");
    if (index < 1) {
      throw ParseError("variable index must be positive", factor_pos);
    }
    sc.expect('(', "'('");
    const int shift = sc.integer(true, "shift");
    sc.expect(')', "')'");
    int exp = 1;
    if (!sc.done() && sc.peek() == '^') {
      const std::size_t exp_pos = sc.pos();
      sc.expect('^', "'^'");
      exp = sc.integer(true, "exponent");
      if (exp == 0) {
        throw ParseError("exponent must be nonzero", exp_pos + 1);
      }
    }
    entries.push_back(VarExp{index, shift, exp});
    if (sc.done()) break;
    sc.expect('*', "'*' or end of input");
  }
  return Monomial::from_entries(std::move(entries));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const VarExp& e : m.entries()) {
    if (!first) out << '*';
    out << "Y_" << e.index << '(' << e.shift << ')';
    if (e.exp != 1) out << '^' << e.exp;
    first = false;
  }
  return out.str();
}

}  // namespace crystals
