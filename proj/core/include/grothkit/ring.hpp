#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grothkit {

using Integer = boost::multiprecision::cpp_int;

// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of Z[b], dense coefficient vector, index = power of b.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(long long c);  // NOLINT(google-explicit-constructor)
  BetaPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit BetaPoly(std::vector<Integer> coeffs);

  static BetaPoly beta(int k = 1, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  int low_degree() const noexcept;
  Integer operator[](int k) const;

  BetaPoly& operator+=(const BetaPoly& o);
  BetaPoly& operator-=(const BetaPoly& o);
  BetaPoly& operator*=(const BetaPoly& o);
  BetaPoly& operator*=(const Integer& c);
  BetaPoly operator-() const;

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) = default;

  // multiply by b^k
  BetaPoly shifted(int k) const;
  // b -> -b
  BetaPoly negated_beta() const;
  Integer evaluate(const Integer& b) const;
  bool nonnegative() const;
  // true iff every coefficient is divisible by 2^k
  bool divisible_by_pow2(int k) const;
  BetaPoly divided_by_pow2(int k) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const BetaPoly& p);

// Exponent vector with trailing zeros stripped.
using Exponents = std::vector<std::uint8_t>;

int total_degree(const Exponents& e);
Exponents strip(Exponents e);

// Graded order: lower total degree first, then lexicographically larger first.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Polynomial in x_1..x_n over Z[b], truncated above total x-degree D.
class TruncPoly {
 public:
  using Terms = std::map<Exponents, BetaPoly, MonomialOrder>;

  TruncPoly(int n_vars, int max_deg);

  static TruncPoly constant(int n_vars, int max_deg, const BetaPoly& c);
  // x_i, 1-based
  static TruncPoly var(int n_vars, int max_deg, int i);
  static TruncPoly monomial(int n_vars, int max_deg, Exponents e, const BetaPoly& c);

  int n_vars() const noexcept { return n_; }
  int max_deg() const noexcept { return d_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BetaPoly coeff(const Exponents& e) const;
  // Adds c*x^e; silently drops e above the truncation degree.
  void add_term(Exponents e, const BetaPoly& c);
  // Lowest total degree among the terms, -1 for zero.
  int min_degree() const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly& operator*=(const BetaPoly& c);
  TruncPoly operator-() const;

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator*(TruncPoly a, const BetaPoly& c) { return a *= c; }
  friend TruncPoly operator*(const BetaPoly& c, TruncPoly a) { return a *= c; }
  friend bool operator==(const TruncPoly& a, const TruncPoly& b);

  // Text form, e.g. (2+3b)*x1^2*x2 + x3
  std::string str() const;

 private:
  void require_compatible(const TruncPoly& o) const;

  int n_;
  int d_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TruncPoly& p);

TruncPoly add(const TruncPoly& p, const TruncPoly& q);
TruncPoly mul(const TruncPoly& p, const TruncPoly& q);
TruncPoly power(const TruncPoly& p, int k);

// Formal group law x + y + b*x*y and its inverse -x/(1+b*x).
TruncPoly oplus(const TruncPoly& p, const TruncPoly& q);
TruncPoly ominus(const TruncPoly& p);
TruncPoly ominus(const TruncPoly& p, const TruncPoly& q);

// x_i -> a*x_i/(1 - b*x_i) for every variable.
TruncPoly substitute_mobius(const TruncPoly& p, const BetaPoly& a, const BetaPoly& b);
// x_i -> q (1-based); q must share the truncation of p.
TruncPoly substitute_var(const TruncPoly& p, int i, const TruncPoly& q);
// Relabels variables: x_i -> x_{target[i-1]} in a ring with n_new variables.
TruncPoly rename_vars(const TruncPoly& p, int n_new, const std::vector<int>& target);
// Sets x_i = 0 for every i in vars (1-based).
TruncPoly set_vars_zero(const TruncPoly& p, const std::vector<int>& vars);
TruncPoly truncate(const TruncPoly& p, int max_deg);

TruncPoly specialize_beta(const TruncPoly& p, const Integer& c);
TruncPoly negate_beta(const TruncPoly& p);
// Swaps x_i and x_{i+1}, 1-based.
TruncPoly swap_adjacent_vars(const TruncPoly& p, int i);

bool is_symmetric(const TruncPoly& p);
bool is_quasisymmetric(const TruncPoly& p);
// Homogeneous under deg x_i = 1, deg b = -1.
bool is_graded_homogeneous(const TruncPoly& p);

}  // namespace grothkit
