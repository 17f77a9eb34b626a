#pragma once

// Brute-force reference implementations used only by the tests. Everything here
// works straight from the definitions (explicit fillings, explicit chains, explicit
// tableaux) and shares no code with the enumerators under test.

#include <grothkit/comps.hpp>
#include <grothkit/posets.hpp>
#include <grothkit/ring.hpp>
#include <grothkit/shapes.hpp>

#include <functional>
#include <vector>

namespace oracle {

using grothkit::BetaPoly;
using grothkit::Composition;
using grothkit::LabeledPoset;
using grothkit::Partition;
using grothkit::SkewShape;
using grothkit::TruncPoly;

// A set of letters as a bitmask. Plain alphabets: bit i is the integer i+1.
// Marked alphabets: bit 2k is (k+1)' and bit 2k+1 is k+1, so bit order is letter order.
using Letters = unsigned;

// Every tuple of m nonempty letter sets over an alphabet of the given size with
// total size at most max_total.
void for_each_tuple(int m, int alphabet, int max_total, const std::function<void(const std::vector<Letters>&)>& visit);

// max(S) <= min(T), and max(S) < min(T) when strict.
bool weakly_below(Letters s, Letters t, bool strict = false);
bool only_unprimed(Letters s);
bool only_primed(Letters s);

// b^(|S|-m) x^S for a plain or marked tuple.
TruncPoly tuple_weight(const std::vector<Letters>& sets, bool marked, int n_vars, int max_deg);

TruncPoly gamma(const LabeledPoset& p, int n_vars, int max_deg);
TruncPoly omega(const LabeledPoset& p, grothkit::Mask unprimed, int n_vars, int max_deg);

TruncPoly monomial(const Composition& a, int n_vars, int max_deg);
TruncPoly fundamental(const Composition& a, int n_vars, int max_deg);
TruncPoly peak(const Composition& a, int n_vars, int max_deg);
TruncPoly peak_bar(const Composition& a, int n_vars, int max_deg);

// Tableau fillings read off the (shifted) diagram grid.
TruncPoly stable_G(const SkewShape& s, int n_vars, int max_deg);
TruncPoly shifted_GQ(const SkewShape& s, int n_vars, int max_deg);
TruncPoly shifted_GP(const SkewShape& s, int n_vars, int max_deg);

// Sequences of length |P|..max_len satisfying the multiextension conditions, by brute force.
std::vector<std::vector<int>> multiextensions(const LabeledPoset& p, int max_len);

// Coefficient of x^n in (-x/(1+bx))^m.
BetaPoly ominus_power_coeff(int m, int n);

}  // namespace oracle
