#include "oracles.hpp"

#include <bit>

namespace oracle {

namespace {

int low(Letters s) { return std::countr_zero(s); }
int high(Letters s) { return 31 - std::countl_zero(s); }

constexpr Letters kPrimedBits = 0x55555555u;

void tuples_rec(int i, int m, int alphabet, int left, std::vector<Letters>& cur,
                const std::function<void(const std::vector<Letters>&)>& visit) {
  if (i == m) {
    visit(cur);
    return;
  }
  for (Letters s = 1; s < (Letters{1} << alphabet); ++s) {
    int k = std::popcount(s);
    if (k > left) continue;
    cur[i] = s;
    tuples_rec(i + 1, m, alphabet, left - k, cur, visit);
  }
}

struct GridCell {
  int row;
  int col;
};

std::vector<GridCell> grid(const SkewShape& s, bool shifted) {
  std::vector<GridCell> out;
  for (std::size_t i = 0; i < s.outer.size(); ++i) {
    int row = static_cast<int>(i) + 1;
    int from = i < s.inner.size() ? s.inner[i] : 0;
    for (int j = from + 1; j <= s.outer[i]; ++j) out.push_back({row, shifted ? row + j - 1 : j});
  }
  return out;
}

int find_cell(const std::vector<GridCell>& g, int row, int col) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].row == row && g[i].col == col) return static_cast<int>(i);
  return -1;
}

TruncPoly tableau_sum(const SkewShape& s, bool shifted, bool unprimed_diagonal, int n_vars, int max_deg) {
  auto g = grid(s, shifted);
  TruncPoly out(n_vars, max_deg);
  const int m = static_cast<int>(g.size());
  const int alphabet = shifted ? 2 * n_vars : n_vars;
  for_each_tuple(m, alphabet, max_deg, [&](const std::vector<Letters>& t) {
    for (int i = 0; i < m; ++i) {
      if (unprimed_diagonal && g[i].row == g[i].col && !only_unprimed(t[i])) return;
      int right = find_cell(g, g[i].row, g[i].col + 1);
      int down = find_cell(g, g[i].row + 1, g[i].col);
      if (right >= 0) {
        if (!weakly_below(t[i], t[right])) return;
        if (shifted && !only_unprimed(t[i] & t[right])) return;
      }
      if (down >= 0) {
        if (!weakly_below(t[i], t[down], !shifted)) return;
        if (shifted && !only_primed(t[i] & t[down])) return;
      }
    }
    out += tuple_weight(t, shifted, n_vars, max_deg);
  });
  return out;
}

// Chains S_1 <= ... <= S_N over a plain or marked alphabet, with a per-step rule.
TruncPoly chain_sum(int len, bool marked, int n_vars, int max_deg,
                    const std::function<bool(int, Letters, Letters)>& step_ok,
                    const std::function<bool(int, Letters)>& set_ok) {
  TruncPoly out(n_vars, max_deg);
  for_each_tuple(len, marked ? 2 * n_vars : n_vars, max_deg, [&](const std::vector<Letters>& t) {
    for (int i = 0; i < len; ++i)
      if (!set_ok(i + 1, t[i])) return;
    for (int i = 0; i + 1 < len; ++i)
      if (!step_ok(i + 1, t[i], t[i + 1])) return;
    out += tuple_weight(t, marked, n_vars, max_deg);
  });
  return out;
}

}  // namespace

void for_each_tuple(int m, int alphabet, int max_total, const std::function<void(const std::vector<Letters>&)>& visit) {
  std::vector<Letters> cur(static_cast<std::size_t>(m));
  tuples_rec(0, m, alphabet, max_total, cur, visit);
}

bool weakly_below(Letters s, Letters t, bool strict) { return strict ? high(s) < low(t) : high(s) <= low(t); }
bool only_unprimed(Letters s) { return (s & kPrimedBits) == 0; }
bool only_primed(Letters s) { return (s & ~kPrimedBits) == 0; }

TruncPoly tuple_weight(const std::vector<Letters>& sets, bool marked, int n_vars, int max_deg) {
  grothkit::Exponents e(static_cast<std::size_t>(n_vars), 0);
  int total = 0;
  for (Letters s : sets) {
    for (int b = 0; b < 32; ++b) {
      if (!(s >> b & 1u)) continue;
      ++e[static_cast<std::size_t>(marked ? b / 2 : b)];
      ++total;
    }
  }
  return TruncPoly::monomial(n_vars, max_deg, e, BetaPoly::beta(total - static_cast<int>(sets.size())));
}

TruncPoly gamma(const LabeledPoset& p, int n_vars, int max_deg) {
  TruncPoly out(n_vars, max_deg);
  const int m = p.size();
  for_each_tuple(m, n_vars, max_deg, [&](const std::vector<Letters>& t) {
    for (int s = 0; s < m; ++s)
      for (int u = 0; u < m; ++u)
        if ((p.upper_covers(s) >> u & 1) && !weakly_below(t[s], t[u], p.label(s) > p.label(u))) return;
    out += tuple_weight(t, false, n_vars, max_deg);
  });
  return out;
}

TruncPoly omega(const LabeledPoset& p, grothkit::Mask unprimed, int n_vars, int max_deg) {
  TruncPoly out(n_vars, max_deg);
  const int m = p.size();
  for_each_tuple(m, 2 * n_vars, max_deg, [&](const std::vector<Letters>& t) {
    for (int s = 0; s < m; ++s) {
      if ((unprimed >> s & 1) && !only_unprimed(t[s])) return;
      for (int u = 0; u < m; ++u) {
        if (!(p.upper_covers(s) >> u & 1)) continue;
        if (!weakly_below(t[s], t[u])) return;
        Letters shared = t[s] & t[u];
        if (p.label(s) < p.label(u) ? !only_unprimed(shared) : !only_primed(shared)) return;
      }
    }
    out += tuple_weight(t, true, n_vars, max_deg);
  });
  return out;
}

TruncPoly monomial(const Composition& a, int n_vars, int max_deg) {
  TruncPoly out(n_vars, max_deg);
  const int len = a.length();
  // increasing index tuples as bitmasks of the variables
  for (unsigned vars = 0; vars < (1u << n_vars); ++vars) {
    if (std::popcount(vars) != len) continue;
    grothkit::Exponents e(static_cast<std::size_t>(n_vars), 0);
    int k = 0;
    for (int i = 0; i < n_vars; ++i)
      if (vars >> i & 1) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a[k++]);
    out.add_term(e, BetaPoly(1));
  }
  return out;
}

TruncPoly fundamental(const Composition& a, int n_vars, int max_deg) {
  auto des = grothkit::descent_set(a);
  return chain_sum(
      a.size(), false, n_vars, max_deg,
      [&](int i, Letters s, Letters t) { return weakly_below(s, t, des.contains(i)); },
      [](int, Letters) { return true; });
}

TruncPoly peak(const Composition& a, int n_vars, int max_deg) {
  auto des = grothkit::descent_set(a);
  return chain_sum(
      a.size(), true, n_vars, max_deg,
      [&](int i, Letters s, Letters t) {
        if (!weakly_below(s, t)) return false;
        return des.contains(i) ? only_primed(s & t) : only_unprimed(s & t);
      },
      [](int, Letters) { return true; });
}

TruncPoly peak_bar(const Composition& a, int n_vars, int max_deg) {
  auto des = grothkit::descent_set(a);
  return chain_sum(
      a.size(), true, n_vars, max_deg,
      [&](int i, Letters s, Letters t) {
        if (!weakly_below(s, t)) return false;
        return des.contains(i) ? only_primed(s & t) : only_unprimed(s & t);
      },
      // S_(i+1) unprimed for i in {0} u I(a)
      [&](int i, Letters s) { return (i == 1 || des.contains(i - 1)) ? only_unprimed(s) : true; });
}

TruncPoly stable_G(const SkewShape& s, int n_vars, int max_deg) { return tableau_sum(s, false, false, n_vars, max_deg); }
TruncPoly shifted_GQ(const SkewShape& s, int n_vars, int max_deg) { return tableau_sum(s, true, false, n_vars, max_deg); }
TruncPoly shifted_GP(const SkewShape& s, int n_vars, int max_deg) { return tableau_sum(s, true, true, n_vars, max_deg); }

std::vector<std::vector<int>> multiextensions(const LabeledPoset& p, int max_len) {
  std::vector<std::vector<int>> out;
  const int m = p.size();
  std::vector<int> w;
  std::function<void()> rec = [&] {
    const int len = static_cast<int>(w.size());
    if (len >= m) {
      bool ok = true;
      // every element occurs, no letter repeated consecutively, all a's before all b's when a < b
      for (int a = 0; a < m && ok; ++a) {
        int last_a = -1, first_a = len;
        for (int i = 0; i < len; ++i)
          if (w[i] == a) last_a = i, first_a = std::min(first_a, i);
        if (last_a < 0) ok = false;
        for (int b = 0; b < m && ok; ++b) {
          if (!p.less(a, b)) continue;
          for (int i = 0; i < len; ++i)
            if (w[i] == b && i < last_a) ok = false;
        }
      }
      for (int i = 0; i + 1 < len && ok; ++i)
        if (w[i] == w[i + 1]) ok = false;
      if (ok) out.push_back(w);
    }
    if (len == max_len) return;
    for (int a = 0; a < m; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

BetaPoly ominus_power_coeff(int m, int n) {
  if (n < m) return {};
  if (m == 0) return n == 0 ? BetaPoly(1) : BetaPoly();
  // (-1)^n binom(n-1, m-1) b^(n-m)
  grothkit::Integer c = 1;
  for (int i = 1; i <= m - 1; ++i) c = c * (n - 1 - (m - 1) + i) / i;
  if (n % 2) c = -c;
  return BetaPoly::beta(n - m, c);
}

}  // namespace oracle
