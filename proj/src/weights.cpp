#include "crystals/weights.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace crystals {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw std::out_of_range(std::string(what) + " index out of range");
  }
}

int checked_add(int a, int b) {
  int out = 0;
  [[maybe_unused]] bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "integer overflow in weight arithmetic");
  return out;
}

}  // namespace

RankedCartan::RankedCartan(int rank) : n_(rank) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be at least 1");
  }
}

int RankedCartan::a(int i, int j) const {
  check_index(i, n_, "Cartan row");
  check_index(j, n_, "Cartan column");
  if (i == j) return 2;
  if (i == j + 1 || j == i + 1) return -1;
  return 0;
}

Weight::Weight(int rank) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be at least 1");
  }
  coeffs_.assign(static_cast<std::size_t>(rank), 0);
}

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("weight needs at least one coefficient");
  }
}

Weight Weight::fundamental(int rank, int k) {
  Weight w(rank);
  check_index(k, rank, "fundamental weight");
  w.coeffs_[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

int Weight::operator[](int i) const {
  check_index(i, rank(), "weight coefficient");
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

bool Weight::is_zero() const {
  for (int c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void Weight::check_same_rank(const Weight& other) const {
  if (coeffs_.size() != other.coeffs_.size()) {
    throw std::invalid_argument("weight rank mismatch");
  }
}

Weight& Weight::operator+=(const Weight& other) {
  check_same_rank(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  check_same_rank(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], -other.coeffs_[i]);
  }
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& c : w.coeffs_) c = -c;
  return w;
}

int pairing(const RankedCartan& cartan, const Weight& w, int i) {
  if (w.rank() != cartan.rank()) {
    throw std::invalid_argument("weight rank does not match Cartan rank");
  }
  check_index(i, cartan.rank(), "pairing");
  return w[i];
}

Weight simple_root(const RankedCartan& cartan, int i) {
  const int n = cartan.rank();
  check_index(i, n, "simple root");
  std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
  coeffs[static_cast<std::size_t>(i - 1)] = 2;
  if (i - 1 >= 1) coeffs[static_cast<std::size_t>(i - 2)] = -1;
  if (i + 1 <= n) coeffs[static_cast<std::size_t>(i)] = -1;
  return Weight(std::move(coeffs));
}

bool is_dominant(const Weight& w) {
  for (int c : w.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

Weight from_epsilon_basis(const RankedCartan& cartan, std::span<const int> counts) {
  const int n = cartan.rank();
  if (static_cast<int>(counts.size()) != n + 1) {
    throw std::invalid_argument("epsilon-basis vector must have length rank+1");
  }
  std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    coeffs[static_cast<std::size_t>(i - 1)] =
        checked_add(counts[static_cast<std::size_t>(i - 1)],
                    -counts[static_cast<std::size_t>(i)]);
  }
  return Weight(std::move(coeffs));
}

std::string to_string(const Weight& w) {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= w.rank(); ++i) {
    const int c = w[i];
    if (c == 0) continue;
    if (c > 0 && !first) out << '+';
    if (c == -1) {
      out << '-';
    } else if (c != 1) {
      out << c << '*';
    }
    out << 'L' << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace crystals
