#pragma once

#include "grothkit/comps.hpp"
#include "grothkit/posets.hpp"
#include "grothkit/ring.hpp"

#include <compare>
#include <functional>
#include <map>
#include <vector>

namespace grothkit {

// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...
struct MarkedLetter {
  int value = 1;
  bool primed = false;

  int key() const noexcept { return 2 * value - (primed ? 1 : 0); }
  friend bool operator==(const MarkedLetter&, const MarkedLetter&) = default;
  friend auto operator<=>(const MarkedLetter& a, const MarkedLetter& b) { return a.key() <=> b.key(); }
};

// Sorted letters of one element; plain assignments never use primed letters.
using LetterSet = std::vector<MarkedLetter>;
// Value set per poset element.
using SVAssignment = std::vector<LetterSet>;

using AssignmentVisitor = std::function<void(const SVAssignment&)>;

// Set-valued (P, gamma)-partitions with entries in [n_vars] and total size <= max_total.
void enumerate_svp(const LabeledPoset& p, int n_vars, int max_total, const AssignmentVisitor& visit);
std::vector<SVAssignment> enumerate_svp(const LabeledPoset& p, int n_vars, int max_total);

// Enriched set-valued partitions; elements of v_set take unprimed values only.
void enumerate_esvp(const LabeledPoset& p, Mask v_set, int n_vars, int max_total, const AssignmentVisitor& visit);
std::vector<SVAssignment> enumerate_esvp(const LabeledPoset& p, Mask v_set, int n_vars, int max_total);

bool is_svp(const LabeledPoset& p, const SVAssignment& s);
bool is_esvp(const LabeledPoset& p, Mask v_set, const SVAssignment& s);

// b^(|s| - |P|) x^s
TruncPoly assignment_weight(const LabeledPoset& p, const SVAssignment& s, int n_vars, int max_deg);

// Coefficients of a quasisymmetric series in the monomial basis M.
using MCoeffs = std::map<Composition, BetaPoly>;

TruncPoly from_m_coeffs(const MCoeffs& c, int n_vars, int max_deg);

// Monomial-basis coefficients of the weight enumerators, for |alpha| <= max_deg.
MCoeffs gamma_m_coeffs(const LabeledPoset& p, int max_deg);
MCoeffs omega_m_coeffs(const LabeledPoset& p, Mask v_set, int max_deg);

TruncPoly gamma_enumerator(const LabeledPoset& p, int n_vars, int max_deg);
TruncPoly omega_enumerator(const LabeledPoset& p, Mask v_set, int n_vars, int max_deg);

// Reference versions summing the enumeration streams directly.
TruncPoly gamma_enumerator_naive(const LabeledPoset& p, int n_vars, int max_deg);
TruncPoly omega_enumerator_naive(const LabeledPoset& p, Mask v_set, int n_vars, int max_deg);

}  // namespace grothkit
