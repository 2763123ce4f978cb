#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystals/crystal_graph.hpp"
#include "crystals/monomial.hpp"
#include "crystals/weights.hpp"

namespace crystals {

class UnsupportedWeightError : public std::invalid_argument {
 public:
  explicit UnsupportedWeightError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

long long binomial(int n, int k);

// The crystal of monomials generated by Y_k(shift): all products
// X_{i_1}(k+shift-1) X_{i_2}(k+shift-2) ... X_{i_k}(shift) over strictly
// increasing tuples 1 <= i_1 < ... < i_k <= n+1.  Sorted, C(n+1,k) elements.
std::vector<Monomial> fundamental_crystal(int n, int k, int shift);

// Decides membership of m in the crystal of Y_k(shift) by reconstructing the
// telescoping factorization prod_j Y_{a_j}(m_{j-1})^{-1} Y_{b_j}(m_j) with
// 0 <= a_1 < b_1 < ... < a_r < b_r <= n+1, k+shift = m_0 > ... > m_r = shift
// and a_j + m_{j-1} = b_j + m_j, directly from the support of m.  Independent
// of the enumeration above.
bool is_fundamental_member(int n, const Monomial& m, int k, int shift);

struct ProductSet {
  std::vector<Monomial> elements;  // sorted, deduplicated
  long long pair_count = 0;        // |A| * |B| before deduplication
};

ProductSet product_set(const std::vector<Monomial>& a, const std::vector<Monomial>& b);

struct FundamentalFactor {
  int index = 0;
  int shift = 0;
};

struct ProductSpec {
  int n = 0;
  std::vector<FundamentalFactor> factors;
};

// Left fold of product_set over the factors' fundamental crystals.
std::vector<Monomial> multi_product(const ProductSpec& spec);

// Highest weights of B(L_p) (x) B(L_q), sorted.  One L_{p+q-i}+L_i term per
// i from min(p,q) down to the case boundary, plus the terminal weight
// (L_{p+q} when p+q <= n, else L_{p+q-n-1} with index 0 meaning weight 0).
std::vector<Weight> predicted_tensor_decomposition(int n, int p, int q);

// Highest weights predicted for M(Y_p(m)) * M(Y_q(1)), m >= 1, sorted:
// L_p+L_q, then L_{p+q-i}+L_i for i from max(1, p+q-n, q+1-m) up to
// min(p,q)-1, then the terminal weight when the shift threshold
// (m >= n-p+2 for p+q > n, m >= q+1 otherwise) holds.
std::vector<Weight> predicted_product_decomposition(int n, int p, int q, int m);

// The unique monomial of the given weight in the crystal of Y_q(1), for the
// four weight patterns that can head a component of M(Y_p(m)) * M(Y_q(1)):
// L_q; L_{p+q-i}+L_i-L_p; L_{p+q-n-1}-L_p; L_{p+q}-L_p.  Throws
// UnsupportedWeightError for any other weight.
Monomial weight_monomials_in_fundamental(int n, int q, const Weight& target, int p);

// Scans fundamental_crystal(n,p,m) x fundamental_crystal(n,q,1) and returns
// every pair whose product has all raising operators disengaged.
std::vector<std::pair<Monomial, Monomial>> classify_highest_pairs(int n, int p,
                                                                  int q, int m);

// Semistandard Young tableaux of the shape with lambda_i columns of height i
// and entries in 1..n+1, counted by direct backtracking.  This dimension
// oracle shares no code with the monomial crystal.
long long ssyt_count(int n, const Weight& lambda);

struct ComponentReport {
  Weight weight;
  std::size_t size;
  Monomial highest;
};

struct DecompositionReport {
  int n = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  std::vector<Weight> computed;   // sorted multiset of highest weights
  std::vector<Weight> predicted;  // sorted multiset
  bool match = false;             // computed == predicted as multisets
  std::size_t universe_size = 0;  // |M(Y_p(m)) * M(Y_q(1))|
  long long tensor_size = 0;      // C(n+1,p) * C(n+1,q)
  std::vector<ComponentReport> components;
  std::vector<std::pair<Monomial, Monomial>> highest_pairs;
  // Violations of the side conditions that accompany the decomposition:
  // containment in the tensor prediction, component sizes against the
  // tableau oracle, first-factor rigidity, closed-form highest pairs, and
  // (optionally) the crystal axioms.  Empty on success.
  std::vector<std::string> failures;

  bool all_good() const { return match && failures.empty(); }
};

// Builds the product set, decomposes it by brute force, compares with the
// predicted decomposition, and cross-checks every side condition above.
// validate_graph additionally runs the axiom validator over the whole
// product graph.  Propagates NotClosedError (which would falsify the closure
// property the construction rests on).
DecompositionReport verify_case(int n, int p, int q, int m,
                                bool validate_graph = false);

}  // namespace crystals
