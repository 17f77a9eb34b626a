#pragma once

#include "grothkit/ring.hpp"
#include "grothkit/shapes.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grothkit {

// Finitely supported combination of strict partitions with polynomial coefficients.
// Partitions with |nu| > max_size or nu_1 > max_part are discarded and flag overflow.
class SPVector {
 public:
  SPVector(int n_vars, int max_deg, int max_size, int max_part);
  static SPVector basis(const Partition& mu, int n_vars, int max_deg, int max_size, int max_part);

  int n_vars() const noexcept { return n_; }
  int max_deg() const noexcept { return d_; }
  int max_size() const noexcept { return max_size_; }
  int max_part() const noexcept { return max_part_; }
  bool overflow() const noexcept { return overflow_; }
  const std::map<Partition, TruncPoly>& terms() const noexcept { return terms_; }

  TruncPoly coeff(const Partition& nu) const;
  void add(const Partition& nu, const TruncPoly& c);
  // Keeps only partitions contained in outer.
  void restrict_to(const Partition& outer);
  void mark_overflow() noexcept { overflow_ = true; }

  SPVector empty_like() const;
  std::string str() const;

  friend bool operator==(const SPVector& a, const SPVector& b) { return a.terms_ == b.terms_; }

 private:
  int n_;
  int d_;
  int max_size_;
  int max_part_;
  bool overflow_ = false;
  std::map<Partition, TruncPoly> terms_;
};

// Removable and addable boxes of a strict partition, by diagonal.
std::vector<int> removable_diagonals(const Partition& mu);
std::vector<int> addable_diagonals(const Partition& mu);
// mu with one box added (or removed) on the given diagonal; throws if impossible.
Partition add_box(const Partition& mu, int diagonal);
Partition remove_box(const Partition& mu, int diagonal);

SPVector apply_a(int r, const SPVector& v);
// v + xp * a_r(v)
SPVector apply_A(int r, const TruncPoly& xp, const SPVector& v);
// A_n ... A_1 A_0 A_1 ... A_n, rightmost factor first.
SPVector apply_P(int n, const TruncPoly& xp, const SPVector& v);
// Same with A_0 doubled.
SPVector apply_Q(int n, const TruncPoly& xp, const SPVector& v);

TruncPoly gp_slashslash(const Partition& lambda, const Partition& mu, int n_vars, int max_deg);
TruncPoly gq_slashslash(const Partition& lambda, const Partition& mu, int n_vars, int max_deg);

// Strict nu inside mu whose difference consists of removable boxes of mu, with weight b^{|mu|-|nu|}.
std::vector<std::pair<Partition, BetaPoly>> strip_sum(const Partition& lambda, const Partition& mu);

struct RelationFailure {
  std::string relation;
  Partition witness;
  std::string lhs;
  std::string rhs;
};

struct YangBaxterReport {
  int instances = 0;
  std::vector<RelationFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Checks the local relations among the A_i(x), the four-factor identity with the
// coupled arguments, and commutation of P_n / Q_n for n = 1..3, on every strict
// partition with |mu| <= bound_size and mu_1 <= bound_part.
YangBaxterReport check_yang_baxter(int bound_size, int bound_part, int formal_deg);

}  // namespace grothkit
