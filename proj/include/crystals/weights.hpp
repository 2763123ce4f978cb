#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace crystals {

// Cartan data for the type A_n root system, vertices I = {1, ..., n}.
class RankedCartan {
 public:
  explicit RankedCartan(int rank);

  int rank() const { return n_; }

  // Cartan matrix entry a_ij = <h_i, alpha_j>, 1-based indices.
  int a(int i, int j) const;

 private:
  int n_;
};

// Integral weight written in the basis of fundamental weights L_1, ..., L_n.
class Weight {
 public:
  // Zero weight of the given rank.
  explicit Weight(int rank);
  explicit Weight(std::vector<int> coeffs);

  static Weight fundamental(int rank, int k);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  // Coefficient of L_i, 1-based.
  int operator[](int i) const;
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  Weight operator-() const;

  auto operator<=>(const Weight&) const = default;

 private:
  void check_same_rank(const Weight& other) const;
  std::vector<int> coeffs_;
};

// <h_i, w> = coefficient of L_i.
int pairing(const RankedCartan& cartan, const Weight& w, int i);

// alpha_i = 2 L_i - L_{i-1} - L_{i+1}, boundary terms dropped.
Weight simple_root(const RankedCartan& cartan, int i);

bool is_dominant(const Weight& w);

// Convert from the eps-basis: counts[j] (0-based j, 1-based vector slot j+1)
// is the coefficient of eps_{j+1}; counts must have length rank+1.
// eps_1 = L_1, eps_i = L_i - L_{i-1}, eps_{n+1} = -(eps_1 + ... + eps_n).
Weight from_epsilon_basis(const RankedCartan& cartan, std::span<const int> counts);

// "L2+L5", "2*L2", "L1-L3", "0"; terms sorted by index ascending.
std::string to_string(const Weight& w);

}  // namespace crystals
