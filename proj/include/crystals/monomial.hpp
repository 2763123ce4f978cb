#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crystals/weights.hpp"

namespace crystals {

// One variable power Y_index(shift)^exp.
struct VarExp {
  int index = 0;
  int shift = 0;
  int exp = 0;
  auto operator<=>(const VarExp&) const = default;
};

// Laurent monomial in the doubly indexed variables Y_i(n).  Canonical form:
// entries sorted by (index, shift), no zero exponents; the empty product is 1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial y(int index, int shift, int exp = 1);
  // Merges duplicates and drops zero exponents.
  static Monomial from_entries(std::vector<VarExp> entries);

  const std::vector<VarExp>& entries() const { return entries_; }
  bool is_unit() const { return entries_.empty(); }
  int exponent(int index, int shift) const;
  // Largest variable index present; 0 for the unit monomial.
  int max_index() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial inverse() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<VarExp> entries_;
};

// Sign convention: integers c_ij for i != j with c_ij + c_ji = 1.  The
// default picks c_ij = 1 exactly when i < j, which is the convention all
// closed-form constructions below assume.
class Convention {
 public:
  explicit Convention(RankedCartan cartan);
  Convention(RankedCartan cartan, const std::vector<std::vector<int>>& c);

  const RankedCartan& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  int c(int i, int j) const;

 private:
  RankedCartan cartan_;
  std::vector<int> c_;  // row-major n x n, diagonal unused
};

// wt(M) = sum_i (sum_n y_i(n)) L_i where y_i(n) is the exponent of Y_i(n).
Weight weight(const RankedCartan& cartan, const Monomial& m);

// phi_i(M) = max(0, max_n sum_{k <= n} y_i(k)).
int phi(const Monomial& m, int i);

// eps_i(M) = max(0, max_n -sum_{k > n} y_i(k)).
int eps(const Monomial& m, int i);

// A_i(s) = Y_i(s) Y_i(s+1) prod_{j != i} Y_j(s + c_ji)^{a_ji}.
Monomial a_monomial(const Convention& conv, int i, int shift);

// X_i(s) = Y_{i-1}(s+1)^{-1} Y_i(s) for 1 <= i <= n+1 with Y_0 = Y_{n+1} = 1.
Monomial x_monomial(const RankedCartan& cartan, int i, int shift);

// Kashiwara operators; disengaged (phi/eps zero) yields nullopt.
std::optional<Monomial> f_tilde(const Convention& conv, const Monomial& m, int i);
std::optional<Monomial> e_tilde(const Convention& conv, const Monomial& m, int i);

// True iff eps_i(m) = 0 for every i, i.e. every e_tilde is disengaged.
bool is_highest(const Convention& conv, const Monomial& m);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: "1" or factors Y_<i>(<shift>)[^<exp>] joined by '*'; exp omitted
// means 1 and exp 0 is rejected.  Duplicate variables are merged.
Monomial parse_monomial(std::string_view text);

// Canonical text: entries in storage order, "^1" elided, unit renders as "1".
std::string to_string(const Monomial& m);

// Element operations of the monomial crystal, for use with the generic
// graph machinery.
class MonomialOps {
 public:
  using element_type = Monomial;

  explicit MonomialOps(Convention conv) : conv_(std::move(conv)) {}

  int rank() const { return conv_.rank(); }
  Weight weight(const Monomial& m) const { return crystals::weight(conv_.cartan(), m); }
  int phi(const Monomial& m, int i) const { return crystals::phi(m, i); }
  int eps(const Monomial& m, int i) const { return crystals::eps(m, i); }
  std::optional<Monomial> f_tilde(const Monomial& m, int i) const {
    return crystals::f_tilde(conv_, m, i);
  }
  std::optional<Monomial> e_tilde(const Monomial& m, int i) const {
    return crystals::e_tilde(conv_, m, i);
  }
  std::string label(const Monomial& m) const { return crystals::to_string(m); }

 private:
  Convention conv_;
};

}  // namespace crystals
