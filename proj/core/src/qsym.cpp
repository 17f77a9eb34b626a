#include "grothkit/qsym.hpp"

#include "grothkit/shapes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace grothkit {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::L: return "L";
    case Basis::K: return "K";
    case Basis::Kbar: return "Kbar";
    case Basis::GP: return "GP";
    case Basis::GQ: return "GQ";
    case Basis::GS: return "GS";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::M, Basis::L, Basis::K, Basis::Kbar, Basis::GP, Basis::GQ, Basis::GS})
    if (basis_name(b) == name) return b;
  throw Error("unknown basis: " + name);
}

bool is_symmetric_basis(Basis b) { return b == Basis::GP || b == Basis::GQ || b == Basis::GS; }

// ---------------------------------------------------------------------------

Dyadic::Dyadic(BetaPoly num, int den_pow2) : num_(std::move(num)), den_(den_pow2) {
  if (den_ < 0) {
    num_ *= Integer(1) << -den_;
    den_ = 0;
  }
  reduce();
}

void Dyadic::reduce() {
  if (num_.is_zero()) {
    den_ = 0;
    return;
  }
  while (den_ > 0 && num_.divisible_by_pow2(1)) {
    num_ = num_.divided_by_pow2(1);
    --den_;
  }
}

const BetaPoly& Dyadic::integral() const {
  if (den_ != 0) throw Error("coefficient " + str() + " is not integral");
  return num_;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  int d = std::max(den_, o.den_);
  BetaPoly a = num_, b = o.num_;
  a *= Integer(1) << (d - den_);
  b *= Integer(1) << (d - o.den_);
  num_ = a + b;
  den_ = d;
  reduce();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.num_ * b.num_, a.den_ + b.den_); }

std::string Dyadic::str() const {
  if (den_ == 0) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/" << (Integer(1) << den_);
  return os.str();
}

int index_size(const Index& i) { return std::accumulate(i.begin(), i.end(), 0); }

Dyadic BasisExpansion::coeff(const Index& i) const {
  auto it = terms.find(i);
  return it == terms.end() ? Dyadic{} : it->second;
}

void BasisExpansion::add(const Index& i, const Dyadic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

BasisExpansion BasisExpansion::truncated(int max_size) const {
  BasisExpansion r{basis, {}, std::min(valid_deg, max_size)};
  for (const auto& [i, c] : terms)
    if (index_size(i) <= max_size) r.terms.emplace(i, c);
  return r;
}

bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
  return a.basis == b.basis && a.valid_deg == b.valid_deg && a.terms == b.terms;
}

bool agree_up_to_valid_degree(const BasisExpansion& a, const BasisExpansion& b) {
  if (a.basis != b.basis) return false;
  int d = std::min(a.valid_deg, b.valid_deg);
  return a.truncated(d).terms == b.truncated(d).terms;
}

// ---------------------------------------------------------------------------
// Chain sums S_1 <= ... <= S_N read straight from their definitions. A letter
// occupies a contiguous run of positions; adjacent positions sharing it must
// be allowed to share a letter of that kind.

namespace {

constexpr unsigned char kShareUnprimed = 1;
constexpr unsigned char kSharePrimed = 2;

struct ChainRules {
  int n = 0;
  bool enriched = false;
  std::vector<unsigned char> share;  // boundary i (between positions i and i+1) at index i-1
  std::vector<bool> unprimed_only;   // position i at index i-1
};

struct ChainStep {
  int next;
  int part;
  int beta_pow;
  long long count;
};

// Runs of positions [a, b] that may receive one letter from state j.
template <class F>
void chain_letter(const ChainRules& r, int j, bool primed, F&& f) {
  unsigned char need = primed ? kSharePrimed : kShareUnprimed;
  for (int a : {j, j + 1}) {
    if (a < 1 || a > r.n) continue;
    for (int b = a; b <= r.n; ++b) {
      if (primed && r.unprimed_only[b - 1]) break;
      f(b, b - a + 1, a == j ? 1 : 0);
      if (b < r.n && !(r.share[b - 1] & need)) break;
    }
  }
}

std::vector<ChainStep> chain_steps(const ChainRules& r, int j) {
  std::map<std::tuple<int, int, int>, long long> agg;
  if (!r.enriched) {
    chain_letter(r, j, false, [&](int b, int len, int bp) { agg[{b, len, bp}]++; });
  } else {
    auto after = [&](int j1, int len1, int bp1) {
      if (len1 > 0) agg[{j1, len1, bp1}]++;
      chain_letter(r, j1, false, [&](int b, int len, int bp) { agg[{b, len1 + len, bp1 + bp}]++; });
    };
    after(j, 0, 0);
    chain_letter(r, j, true, after);
  }
  std::vector<ChainStep> out;
  for (auto& [k, c] : agg) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  return out;
}

MCoeffs chain_m_coeffs(const ChainRules& r, int max_deg) {
  MCoeffs result;
  if (r.n == 0) {
    result[Composition{}] = 1;
    return result;
  }
  std::vector<std::vector<ChainStep>> steps;
  for (int j = 0; j <= r.n; ++j) steps.push_back(chain_steps(r, j));
  std::map<int, std::map<std::vector<int>, BetaPoly>> cur;
  cur[0][{}] = 1;
  for (int round = 0; round < max_deg && !cur.empty(); ++round) {
    std::map<int, std::map<std::vector<int>, BetaPoly>> next;
    for (const auto& [j, polys] : cur)
      for (const ChainStep& st : steps[j])
        for (const auto& [alpha, c] : polys) {
          if (std::accumulate(alpha.begin(), alpha.end(), 0) + st.part > max_deg) continue;
          std::vector<int> grown = alpha;
          grown.push_back(st.part);
          BetaPoly add = c.shifted(st.beta_pow);
          add *= Integer(st.count);
          next[st.next][grown] += add;
        }
    cur = std::move(next);
    if (auto it = cur.find(r.n); it != cur.end())
      for (const auto& [alpha, c] : it->second) result[Composition(alpha)] += c;
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

ChainRules rules_for(const Composition& a, Basis b) {
  ChainRules r;
  r.n = a.size();
  r.enriched = b != Basis::L;
  std::set<int> d = descent_set(a);
  r.share.assign(static_cast<std::size_t>(std::max(r.n - 1, 0)), 0);
  r.unprimed_only.assign(static_cast<std::size_t>(r.n), false);
  for (int i = 1; i < r.n; ++i) {
    bool in = d.count(i) > 0;
    if (b == Basis::L) r.share[i - 1] = in ? 0 : kShareUnprimed;
    if (b == Basis::K) r.share[i - 1] = in ? kSharePrimed : kShareUnprimed;
    if (b == Basis::Kbar) r.share[i - 1] = in ? 0 : kShareUnprimed;
  }
  if (b == Basis::Kbar && r.n > 0) {
    r.unprimed_only[0] = true;
    for (int i : d) r.unprimed_only[i] = true;
  }
  return r;
}

void require_peak(const Composition& a) {
  if (!a.is_peak()) throw Error("not a peak composition: " + a.str());
}

}  // namespace

MCoeffs m_coeffs_L(const Composition& a, int max_deg) { return chain_m_coeffs(rules_for(a, Basis::L), max_deg); }

MCoeffs m_coeffs_K(const Composition& a, int max_deg) {
  require_peak(a);
  return chain_m_coeffs(rules_for(a, Basis::K), max_deg);
}

MCoeffs m_coeffs_Kbar(const Composition& a, int max_deg) {
  require_peak(a);
  return chain_m_coeffs(rules_for(a, Basis::Kbar), max_deg);
}

TruncPoly monomial_M(const Composition& a, int n_vars, int max_deg) {
  return from_m_coeffs({{a, BetaPoly(1)}}, n_vars, max_deg);
}

TruncPoly multifundamental_L(const Composition& a, int n_vars, int max_deg) {
  return from_m_coeffs(m_coeffs_L(a, max_deg), n_vars, max_deg);
}

TruncPoly multipeak_K(const Composition& a, int n_vars, int max_deg) {
  return from_m_coeffs(m_coeffs_K(a, max_deg), n_vars, max_deg);
}

TruncPoly multipeak_Kbar(const Composition& a, int n_vars, int max_deg) {
  return from_m_coeffs(m_coeffs_Kbar(a, max_deg), n_vars, max_deg);
}

MCoeffs read_m_coeffs(const TruncPoly& p) {
  MCoeffs r;
  for (const auto& [e, c] : p.terms()) {
    if (std::find(e.begin(), e.end(), 0) != e.end()) continue;
    r.emplace(Composition(std::vector<int>(e.begin(), e.end())), c);
  }
  return r;
}

BasisExpansion expand_in_M(const TruncPoly& p) {
  if (!is_quasisymmetric(p)) throw Error("expand_in_M: input is not quasisymmetric");
  BasisExpansion r{Basis::M, {}, p.max_deg()};
  for (const auto& [a, c] : read_m_coeffs(p)) r.add(a.parts(), c);
  return r;
}

namespace {

MCoeffs basis_m_coeffs(Basis b, const Index& i, int max_deg) {
  switch (b) {
    case Basis::M: return {{Composition(i), BetaPoly(1)}};
    case Basis::L: return m_coeffs_L(Composition(i), max_deg);
    case Basis::K: return m_coeffs_K(Composition(i), max_deg);
    case Basis::Kbar: return m_coeffs_Kbar(Composition(i), max_deg);
    case Basis::GP: return gp_m_coeffs({i, {}}, max_deg);
    case Basis::GQ: return gq_m_coeffs({i, {}}, max_deg);
    case Basis::GS: return gs_m_coeffs({i, {}}, max_deg);
  }
  throw Error("unknown basis");
}

std::string monomial_text(const Composition& a) {
  std::ostringstream os;
  if (a.empty()) return "1";
  for (int i = 0; i < a.length(); ++i) {
    os << (i ? "*" : "") << "x" << (i + 1);
    if (a[i] > 1) os << "^" << a[i];
  }
  return os.str();
}

}  // namespace

BasisExpansion expand_m_coeffs(const MCoeffs& c, int max_deg, Basis b) {
  BasisExpansion out{b, {}, max_deg};
  if (b == Basis::M) {
    for (const auto& [a, v] : c)
      if (a.size() <= max_deg) out.add(a.parts(), v);
    return out;
  }
  if (b == Basis::GS) throw Error("expansion in GS is not supported");

  std::map<Composition, Dyadic> residual;
  for (const auto& [a, v] : c)
    if (a.size() <= max_deg && !v.is_zero()) residual.emplace(a, v);

  std::vector<Index> order;
  if (is_symmetric_basis(b)) {
    for (int n = 0; n <= max_deg; ++n)
      for (auto& p : partitions_of(n)) order.push_back(p);
  } else {
    for (auto& a : compositions_up_to(max_deg)) order.push_back(a.parts());
  }

  for (const Index& idx : order) {
    Composition a(idx);
    auto it = residual.find(a);
    if (it == residual.end()) continue;
    Dyadic lead = it->second;
    bool admissible = true;
    if (b == Basis::K || b == Basis::Kbar) admissible = a.is_peak();
    if (is_symmetric_basis(b)) admissible = is_strict(idx);
    if (!admissible)
      throw Error("not in span of " + basis_name(b) + ": residual " + lead.str() + " at " + monomial_text(a));
    int lead_pow = (b == Basis::K || b == Basis::GQ) ? a.length() : 0;
    Dyadic coef = lead * Dyadic(BetaPoly(1), lead_pow);
    out.add(idx, coef);
    for (const auto& [t, v] : basis_m_coeffs(b, idx, max_deg)) {
      auto [rt, fresh] = residual.try_emplace(t, Dyadic{});
      rt->second -= coef * Dyadic(v);
      if (rt->second.is_zero()) residual.erase(rt);
    }
  }
  if (!residual.empty()) {
    const auto& [a, v] = *residual.begin();
    throw Error("not in span of " + basis_name(b) + ": residual " + v.str() + " at " + monomial_text(a));
  }
  return out;
}

BasisExpansion expand_in_basis(const TruncPoly& p, Basis b) {
  if (b == Basis::M) return expand_in_M(p);
  if (p.n_vars() < p.max_deg())
    throw Error("basis expansion needs at least as many variables as the truncation degree");
  if (is_symmetric_basis(b)) {
    if (!is_symmetric(p)) throw Error("expansion in " + basis_name(b) + " needs a symmetric input");
  } else if (!is_quasisymmetric(p)) {
    throw Error("expansion in " + basis_name(b) + " needs a quasisymmetric input");
  }
  return expand_m_coeffs(read_m_coeffs(p), p.max_deg(), b);
}

MCoeffs synthesize_m_coeffs(const BasisExpansion& e, int max_deg) {
  MCoeffs r;
  for (const auto& [i, c] : e.terms) {
    if (index_size(i) > max_deg) continue;
    const BetaPoly& k = c.integral();
    for (const auto& [a, v] : basis_m_coeffs(e.basis, i, max_deg)) r[a] += k * v;
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

TruncPoly synthesize(const BasisExpansion& e, int n_vars, int max_deg) {
  return from_m_coeffs(synthesize_m_coeffs(e, max_deg), n_vars, max_deg);
}

BasisExpansion k_to_kbar(const Composition& a, int max_size) {
  require_peak(a);
  BasisExpansion r{Basis::Kbar, {}, max_size};
  const int n = a.length();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) delta[i] = (mask >> i) & 1;
    int k = std::popcount(mask);
    if (a.size() + k > max_size) continue;
    r.add(componentwise_add(a, delta).parts(), BetaPoly::beta(k, Integer(1) << (n - k)));
  }
  return r;
}

BasisExpansion kbar_to_k(const Composition& a, int max_size) {
  require_peak(a);
  BasisExpansion r{Basis::K, {}, max_size};
  const int n = a.length();
  const int room = max_size - a.size();
  if (room < 0) return r;
  // every delta in N^n with |delta| <= room
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      int k = room - left;
      BetaPoly num = BetaPoly::beta(k, k % 2 ? -1 : 1);
      r.add(componentwise_add(a, delta).parts(), Dyadic(num, n + k));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      delta[i] = d;
      rec(i + 1, left - d);
    }
    delta[i] = 0;
  };
  rec(0, room);
  return r;
}

BasisExpansion k_to_kbar(const BasisExpansion& k_exp, int max_size) {
  if (k_exp.basis != Basis::K) throw Error("k_to_kbar needs a K-expansion");
  BasisExpansion r{Basis::Kbar, {}, std::min(max_size, k_exp.valid_deg)};
  for (const auto& [i, c] : k_exp.terms)
    for (const auto& [j, d] : k_to_kbar(Composition(i), max_size).terms) r.add(j, c * d);
  return r;
}

BasisExpansion kbar_to_k(const BasisExpansion& kbar_exp, int max_size) {
  if (kbar_exp.basis != Basis::Kbar) throw Error("kbar_to_k needs a Kbar-expansion");
  BasisExpansion r{Basis::K, {}, std::min(max_size, kbar_exp.valid_deg)};
  for (const auto& [i, c] : kbar_exp.terms)
    for (const auto& [j, d] : kbar_to_k(Composition(i), max_size).terms) r.add(j, c * d);
  return r;
}

BasisExpansion theta(const BasisExpansion& l_exp) {
  if (l_exp.basis != Basis::L) throw Error("theta needs an L-expansion");
  BasisExpansion r{Basis::K, {}, l_exp.valid_deg};
  for (const auto& [i, c] : l_exp.terms) r.add(lambda_map(Composition(i)).parts(), c);
  return r;
}

Coproduct coproduct_M(const BasisExpansion& m_exp) {
  if (m_exp.basis != Basis::M) throw Error("coproduct_M needs an M-expansion");
  Coproduct r;
  for (const auto& [i, c] : m_exp.terms) {
    for (std::size_t k = 0; k <= i.size(); ++k) {
      Composition left(std::vector<int>(i.begin(), i.begin() + static_cast<long>(k)));
      Composition right(std::vector<int>(i.begin() + static_cast<long>(k), i.end()));
      auto [it, fresh] = r.try_emplace({left, right}, c);
      if (!fresh) it->second += c;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

namespace {

// sum_alpha c_alpha * sign(alpha) * L_{f(alpha)}, optionally at -b, as monomial coefficients
template <class F>
MCoeffs transformed_l_sum(const BasisExpansion& l_exp, int max_deg, F&& f, bool negate_b, bool sign_by_size) {
  if (l_exp.basis != Basis::L) throw Error("involutions act on L-expansions");
  MCoeffs r;
  for (const auto& [i, c] : l_exp.terms) {
    Composition a(i);
    if (a.size() > max_deg) continue;
    BetaPoly k = c.integral();
    if (sign_by_size && a.size() % 2) k = -k;
    for (const auto& [t, v] : m_coeffs_L(f(a), max_deg)) r[t] += k * (negate_b ? v.negated_beta() : v);
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

}  // namespace

TruncPoly omega(const BasisExpansion& l_exp, int n_vars, int max_deg) {
  auto m = transformed_l_sum(l_exp, max_deg, [](const Composition& a) { return transpose(a); }, false, false);
  return substitute_mobius(from_m_coeffs(m, n_vars, max_deg), 1, BetaPoly::beta());
}

TruncPoly psi(const BasisExpansion& l_exp, int n_vars, int max_deg) {
  auto m = transformed_l_sum(l_exp, max_deg, [](const Composition& a) { return complement(a); }, false, false);
  return substitute_mobius(from_m_coeffs(m, n_vars, max_deg), 1, BetaPoly::beta());
}

TruncPoly rho(const BasisExpansion& l_exp, int n_vars, int max_deg) {
  auto m = transformed_l_sum(l_exp, max_deg, [](const Composition& a) { return reverse(a); }, false, false);
  return from_m_coeffs(m, n_vars, max_deg);
}

TruncPoly antipode(const BasisExpansion& l_exp, int n_vars, int max_deg) {
  auto m = transformed_l_sum(l_exp, max_deg, [](const Composition& a) { return transpose(a); }, true, true);
  return substitute_mobius(from_m_coeffs(m, n_vars, max_deg), 1, -BetaPoly::beta());
}

TruncPoly antipode(const TruncPoly& p) {
  if (!is_graded_homogeneous(p)) throw Error("antipode needs a graded-homogeneous input");
  int degree = 0;
  if (!p.is_zero()) {
    const auto& [e, c] = *p.terms().begin();
    degree = total_degree(e) - c.low_degree();
  }
  // S(f) = (-1)^n omega(f at -b)
  TruncPoly flipped = negate_beta(p);
  TruncPoly r = omega(expand_in_basis(flipped, Basis::L), p.n_vars(), p.max_deg());
  return degree % 2 ? -r : r;
}

}  // namespace grothkit
