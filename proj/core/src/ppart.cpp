#include "grothkit/ppart.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace grothkit {

namespace {

enum class Letter { plain, primed, unprimed };

// Letters are bits of a word: plain bit k is the value k+1, enriched bit k is key k+1.
MarkedLetter letter_of_bit(int k, bool enriched) {
  if (!enriched) return {k + 1, false};
  return {k / 2 + 1, k % 2 == 0};
}

Mask letters_to_bits(const LetterSet& s, bool enriched) {
  Mask m = 0;
  for (const auto& l : s) m |= bit(enriched ? l.key() - 1 : l.value - 1);
  return m;
}

int low_bit(Mask m) { return std::countr_zero(m); }
int high_bit(Mask m) { return 63 - std::countl_zero(m); }

bool cover_ok(bool ascending, Mask lo, Mask hi, bool enriched) {
  int a = high_bit(lo), b = low_bit(hi);
  if (!enriched) return ascending ? a <= b : a < b;
  if (a < b) return true;
  if (a > b) return false;
  bool shared_primed = a % 2 == 0;
  return ascending ? !shared_primed : shared_primed;
}

constexpr Mask kPrimedBits = 0x5555555555555555ull;

std::vector<int> topological_order(const LabeledPoset& p) {
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(p.below(a)) < popcount(p.below(b)); });
  return order;
}

void enumerate_impl(const LabeledPoset& p, Mask v_set, int n_vars, int max_total, bool enriched,
                    const AssignmentVisitor& visit) {
  const int m = p.size();
  const int letters = enriched ? 2 * n_vars : n_vars;
  if (letters > 62) throw Error("alphabet too large for enumeration");
  if (enriched && (v_set & ~valleys(p))) throw Error("V contains an element that is not a valley");
  if (m == 0) {
    if (max_total >= 0) visit({});
    return;
  }
  if (n_vars <= 0) return;
  const std::vector<int> order = topological_order(p);
  std::vector<Mask> chosen(static_cast<std::size_t>(m), 0);
  const Mask universe = (Mask{1} << letters) - 1;

  std::function<void(int, int)> rec = [&](int idx, int budget) {
    if (idx == m) {
      SVAssignment s(static_cast<std::size_t>(m));
      for (int e = 0; e < m; ++e)
        for (Mask b = chosen[e]; b; b &= b - 1) s[e].push_back(letter_of_bit(low_bit(b), enriched));
      visit(s);
      return;
    }
    const int e = order[idx];
    const int room = budget - (m - idx - 1);
    Mask allowed = universe;
    if (enriched && (v_set & bit(e))) allowed &= ~kPrimedBits;
    for (Mask a = allowed; a; a = (a - 1) & allowed) {
      int k = popcount(a);
      if (k > room) continue;
      bool ok = true;
      for (Mask lc = p.lower_covers(e); lc && ok; lc &= lc - 1) {
        int s = low_bit(lc);
        ok = cover_ok(p.label(s) < p.label(e), chosen[s], a, enriched);
      }
      if (!ok) continue;
      chosen[e] = a;
      rec(idx + 1, budget - k);
    }
    chosen[e] = 0;
  };
  rec(0, max_total);
}

bool check_impl(const LabeledPoset& p, Mask v_set, const SVAssignment& s, bool enriched) {
  if (static_cast<int>(s.size()) != p.size()) return false;
  std::vector<Mask> bits;
  for (int e = 0; e < p.size(); ++e) {
    if (s[e].empty()) return false;
    for (const auto& l : s[e])
      if (l.value < 1 || (!enriched && l.primed)) return false;
    bits.push_back(letters_to_bits(s[e], enriched));
    if (enriched && (v_set & bit(e)) && (bits.back() & kPrimedBits)) return false;
  }
  for (auto [a, b] : covers(p))
    if (!cover_ok(p.label(a) < p.label(b), bits[a], bits[b], enriched)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Transfer matrix over letters. The state is the lower set S of elements that
// have received at least one letter; an element is closed once one of its
// upper covers has started, since all of its letters must precede that cover.

struct Step {
  Mask next;
  int part;
  int beta_pow;
  long long count;
};

class TransferSystem {
 public:
  TransferSystem(const LabeledPoset& p, Mask v_set, bool enriched) : p_(p), v_(v_set), enriched_(enriched) {
    for (int t = 0; t < p.size(); ++t) {
      Mask asc = 0, desc = 0;
      for (Mask lc = p.lower_covers(t); lc; lc &= lc - 1) {
        int s = low_bit(lc);
        (p.label(s) < p.label(t) ? asc : desc) |= bit(s);
      }
      asc_low_.push_back(asc);
      desc_low_.push_back(desc);
    }
  }

  const std::vector<Step>& steps(Mask s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    std::map<std::tuple<Mask, int, int>, long long> agg;
    if (!enriched_) {
      letter(s, Letter::plain, [&](Mask x, Mask s1) { agg[{s1, popcount(x), popcount(x & s)}]++; });
    } else {
      // primed letter then unprimed letter of the same variable, not both empty
      auto after_primed = [&](Mask x1, Mask s1) {
        int bp1 = popcount(x1 & s);
        if (x1) agg[{s1, popcount(x1), bp1}]++;
        letter(s1, Letter::unprimed, [&](Mask x2, Mask s2) {
          agg[{s2, popcount(x1) + popcount(x2), bp1 + popcount(x2 & s1)}]++;
        });
      };
      after_primed(0, s);
      letter(s, Letter::primed, after_primed);
    }
    std::vector<Step> out;
    for (auto& [k, c] : agg) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
    return cache_.emplace(s, std::move(out)).first->second;
  }

 private:
  // Calls f(X, S u X) for every nonempty set X of elements that may receive one letter.
  template <class F>
  void letter(Mask s, Letter kind, F&& f) {
    Mask closed = 0;
    for (Mask t = s; t; t &= t - 1) closed |= p_.lower_covers(low_bit(t));
    Mask cand = p_.ground() & ~closed;
    if (kind == Letter::primed) cand &= ~v_;
    for (Mask x = cand; x; x = (x - 1) & cand) {
      bool ok = true;
      for (Mask t = x; t && ok; t &= t - 1) {
        int e = low_bit(t);
        Mask lc = p_.lower_covers(e);
        if (!(s & bit(e)) && (lc & ~(s | x))) ok = false;
        Mask shared = lc & x;
        Mask allowed = kind == Letter::primed ? desc_low_[e] : asc_low_[e];
        if (shared & ~allowed) ok = false;
      }
      if (ok) f(x, s | x);
    }
  }

  const LabeledPoset& p_;
  Mask v_;
  bool enriched_;
  std::vector<Mask> asc_low_, desc_low_;
  std::map<Mask, std::vector<Step>> cache_;
};

MCoeffs transfer_m_coeffs(const LabeledPoset& p, Mask v_set, bool enriched, int max_deg) {
  if (enriched && (v_set & ~valleys(p))) throw Error("V contains an element that is not a valley");
  MCoeffs result;
  const Mask full = p.ground();
  if (p.size() == 0) {
    result[Composition{}] = 1;
    return result;
  }
  TransferSystem sys(p, v_set, enriched);
  std::map<Mask, std::map<std::vector<int>, BetaPoly>> cur;
  cur[0][{}] = 1;
  for (int round = 0; round < max_deg && !cur.empty(); ++round) {
    std::map<Mask, std::map<std::vector<int>, BetaPoly>> next;
    for (const auto& [s, polys] : cur) {
      for (const Step& st : sys.steps(s)) {
        auto& dst = next[st.next];
        for (const auto& [alpha, c] : polys) {
          int size = std::accumulate(alpha.begin(), alpha.end(), 0);
          if (size + st.part > max_deg) continue;
          std::vector<int> grown = alpha;
          grown.push_back(st.part);
          BetaPoly add = c.shifted(st.beta_pow);
          add *= Integer(st.count);
          auto [it, fresh] = dst.try_emplace(std::move(grown), add);
          if (!fresh) it->second += add;
        }
      }
    }
    cur = std::move(next);
    if (auto it = cur.find(full); it != cur.end())
      for (const auto& [alpha, c] : it->second)
        if (!c.is_zero()) result[Composition(alpha)] += c;
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

}  // namespace

void enumerate_svp(const LabeledPoset& p, int n_vars, int max_total, const AssignmentVisitor& visit) {
  enumerate_impl(p, 0, n_vars, max_total, false, visit);
}

std::vector<SVAssignment> enumerate_svp(const LabeledPoset& p, int n_vars, int max_total) {
  std::vector<SVAssignment> out;
  enumerate_svp(p, n_vars, max_total, [&](const SVAssignment& s) { out.push_back(s); });
  return out;
}

void enumerate_esvp(const LabeledPoset& p, Mask v_set, int n_vars, int max_total, const AssignmentVisitor& visit) {
  enumerate_impl(p, v_set, n_vars, max_total, true, visit);
}

std::vector<SVAssignment> enumerate_esvp(const LabeledPoset& p, Mask v_set, int n_vars, int max_total) {
  std::vector<SVAssignment> out;
  enumerate_esvp(p, v_set, n_vars, max_total, [&](const SVAssignment& s) { out.push_back(s); });
  return out;
}

bool is_svp(const LabeledPoset& p, const SVAssignment& s) { return check_impl(p, 0, s, false); }

bool is_esvp(const LabeledPoset& p, Mask v_set, const SVAssignment& s) { return check_impl(p, v_set, s, true); }

TruncPoly assignment_weight(const LabeledPoset& p, const SVAssignment& s, int n_vars, int max_deg) {
  Exponents e(static_cast<std::size_t>(n_vars), 0);
  int total = 0;
  for (const auto& set : s)
    for (const auto& l : set) {
      if (l.value > n_vars) throw Error("letter exceeds the number of variables");
      ++e[l.value - 1];
      ++total;
    }
  return TruncPoly::monomial(n_vars, max_deg, std::move(e), BetaPoly::beta(total - p.size()));
}

TruncPoly from_m_coeffs(const MCoeffs& c, int n_vars, int max_deg) {
  TruncPoly r(n_vars, max_deg);
  for (const auto& [alpha, coeff] : c) {
    int k = alpha.length();
    if (k > n_vars || alpha.size() > max_deg) continue;
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      Exponents e(static_cast<std::size_t>(n_vars), 0);
      for (int i = 0; i < k; ++i) e[pos[i]] = static_cast<std::uint8_t>(alpha[i]);
      r.add_term(std::move(e), coeff);
      int j = k - 1;
      while (j >= 0 && pos[j] == n_vars - k + j) --j;
      if (j < 0) break;
      ++pos[j];
      for (int t = j + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
    }
  }
  return r;
}

MCoeffs gamma_m_coeffs(const LabeledPoset& p, int max_deg) { return transfer_m_coeffs(p, 0, false, max_deg); }

MCoeffs omega_m_coeffs(const LabeledPoset& p, Mask v_set, int max_deg) {
  return transfer_m_coeffs(p, v_set, true, max_deg);
}

TruncPoly gamma_enumerator(const LabeledPoset& p, int n_vars, int max_deg) {
  return from_m_coeffs(gamma_m_coeffs(p, max_deg), n_vars, max_deg);
}

TruncPoly omega_enumerator(const LabeledPoset& p, Mask v_set, int n_vars, int max_deg) {
  return from_m_coeffs(omega_m_coeffs(p, v_set, max_deg), n_vars, max_deg);
}

TruncPoly gamma_enumerator_naive(const LabeledPoset& p, int n_vars, int max_deg) {
  TruncPoly r(n_vars, max_deg);
  enumerate_svp(p, n_vars, max_deg, [&](const SVAssignment& s) { r += assignment_weight(p, s, n_vars, max_deg); });
  return r;
}

TruncPoly omega_enumerator_naive(const LabeledPoset& p, Mask v_set, int n_vars, int max_deg) {
  TruncPoly r(n_vars, max_deg);
  enumerate_esvp(p, v_set, n_vars, max_deg,
                 [&](const SVAssignment& s) { r += assignment_weight(p, s, n_vars, max_deg); });
  return r;
}

}  // namespace grothkit
