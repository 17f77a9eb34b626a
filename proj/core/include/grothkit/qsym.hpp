#pragma once

#include "grothkit/comps.hpp"
#include "grothkit/ppart.hpp"
#include "grothkit/ring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grothkit {

enum class Basis { M, L, K, Kbar, GP, GQ, GS };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);
bool is_symmetric_basis(Basis b);

// num / 2^den_pow2 with num in Z[b]; kept reduced.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BetaPoly num, int den_pow2 = 0);  // NOLINT(google-explicit-constructor)
  Dyadic(long long c) : Dyadic(BetaPoly(c)) {}  // NOLINT(google-explicit-constructor)

  const BetaPoly& num() const noexcept { return num_; }
  int den_pow2() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integral() const noexcept { return den_ == 0; }
  // throws unless integral
  const BetaPoly& integral() const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic operator-() const { return Dyadic(-num_, den_); }
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  std::string str() const;

 private:
  void reduce();
  BetaPoly num_;
  int den_ = 0;
};

// Composition (M, L, K, Kbar) or partition (GP, GQ, GS) index.
using Index = std::vector<int>;

struct BasisExpansion {
  Basis basis = Basis::M;
  std::map<Index, Dyadic> terms;
  int valid_deg = 0;

  Dyadic coeff(const Index& i) const;
  void add(const Index& i, const Dyadic& c);
  // Drops indices of size above max_size.
  BasisExpansion truncated(int max_size) const;
};

bool operator==(const BasisExpansion& a, const BasisExpansion& b);
// Equality on indices of size <= min(valid_deg).
bool agree_up_to_valid_degree(const BasisExpansion& a, const BasisExpansion& b);
int index_size(const Index& i);

// Monomial-basis coefficients of the chain sums, |alpha'| <= max_deg.
MCoeffs m_coeffs_L(const Composition& a, int max_deg);
MCoeffs m_coeffs_K(const Composition& a, int max_deg);
MCoeffs m_coeffs_Kbar(const Composition& a, int max_deg);

TruncPoly monomial_M(const Composition& a, int n_vars, int max_deg);
TruncPoly multifundamental_L(const Composition& a, int n_vars, int max_deg);
TruncPoly multipeak_K(const Composition& a, int n_vars, int max_deg);
TruncPoly multipeak_Kbar(const Composition& a, int n_vars, int max_deg);

// Coefficient of x_1^a_1 ... x_k^a_k for every composition of size <= max_deg.
MCoeffs read_m_coeffs(const TruncPoly& p);

BasisExpansion expand_in_M(const TruncPoly& p);
BasisExpansion expand_in_basis(const TruncPoly& p, Basis b);
// Same elimination starting from monomial coefficients; needs no variable count.
BasisExpansion expand_m_coeffs(const MCoeffs& c, int max_deg, Basis b);

// Sum of coefficient * basis element as a truncated polynomial.
TruncPoly synthesize(const BasisExpansion& e, int n_vars, int max_deg);
MCoeffs synthesize_m_coeffs(const BasisExpansion& e, int max_deg);

BasisExpansion k_to_kbar(const Composition& a, int max_size);
BasisExpansion kbar_to_k(const Composition& a, int max_size);
BasisExpansion k_to_kbar(const BasisExpansion& k_exp, int max_size);
BasisExpansion kbar_to_k(const BasisExpansion& kbar_exp, int max_size);

BasisExpansion theta(const BasisExpansion& l_exp);

using Coproduct = std::map<std::pair<Composition, Composition>, Dyadic>;
Coproduct coproduct_M(const BasisExpansion& m_exp);

TruncPoly omega(const BasisExpansion& l_exp, int n_vars, int max_deg);
TruncPoly psi(const BasisExpansion& l_exp, int n_vars, int max_deg);
TruncPoly rho(const BasisExpansion& l_exp, int n_vars, int max_deg);
TruncPoly antipode(const BasisExpansion& l_exp, int n_vars, int max_deg);
// Antipode of a graded-homogeneous quasisymmetric polynomial.
TruncPoly antipode(const TruncPoly& p);

}  // namespace grothkit
