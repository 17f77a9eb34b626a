#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace grothkit {

// Finite sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // |alpha|
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  // alpha_i >= 2 for every non-final part
  bool is_peak() const noexcept;

  std::string str() const;  // "(2,1)", "()" for empty

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Partial sums excluding the total.
std::set<int> descent_set(const Composition& a);
Composition from_subset(int n, const std::set<int>& s);

Composition complement(const Composition& a);
Composition reverse(const Composition& a);
Composition transpose(const Composition& a);
Composition flat(const Composition& a);
// Keeps the descent positions i with i > 1 and i - 1 not a descent.
Composition lambda_map(const Composition& a);
bool refines(const Composition& coarse, const Composition& fine);
Composition componentwise_add(const Composition& a, std::span<const int> delta);
Composition concat(const Composition& a, const Composition& b);

// Triangular solve order: smaller size first, then lexicographically greater first.
bool basis_order_less(const Composition& a, const Composition& b);

std::vector<Composition> compositions_of(int n);
// All compositions of size <= max_size, in basis order.
std::vector<Composition> compositions_up_to(int max_size);
std::vector<Composition> peak_compositions_of(int n);
std::vector<Composition> peak_compositions_up_to(int max_size);

Composition parse_composition(const std::string& text);

}  // namespace grothkit
