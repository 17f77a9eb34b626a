#include "grothkit/posets.hpp"

#include "grothkit/ring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace grothkit {

int popcount(Mask m) { return std::popcount(m); }

LabeledPoset::LabeledPoset(int m, const std::vector<std::pair<int, int>>& relations, std::vector<long long> labels)
    : labels_(std::move(labels)) {
  if (m < 0 || m > kMaxSize) throw Error("poset size out of range");
  if (static_cast<int>(labels_.size()) != m) throw Error("label count does not match poset size");
  std::set<long long> distinct(labels_.begin(), labels_.end());
  if (static_cast<int>(distinct.size()) != m) throw Error("labels must be injective");
  above_.assign(m, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= m || b >= m) throw Error("relation element out of range");
    above_[a] |= bit(b);
  }
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (above_[i] & bit(k)) above_[i] |= above_[k];
  for (int i = 0; i < m; ++i)
    if (above_[i] & bit(i)) throw Error("relation is not a strict partial order");
  below_.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (above_[i] & bit(j)) below_[j] |= bit(i);
  build_covers();
}

void LabeledPoset::build_covers() {
  int m = size();
  up_covers_.assign(m, 0);
  low_covers_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    Mask up = above_[a];
    Mask cov = up;
    for (int b = 0; b < m; ++b)
      if (up & bit(b)) cov &= ~above_[b];
    up_covers_[a] = cov;
    for (int b = 0; b < m; ++b)
      if (cov & bit(b)) low_covers_[b] |= bit(a);
  }
}

LabeledPoset LabeledPoset::chain(std::vector<long long> labels) {
  int m = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < m; ++i) rel.emplace_back(i, i + 1);
  return LabeledPoset(m, rel, std::move(labels));
}

LabeledPoset LabeledPoset::antichain(int m) {
  std::vector<long long> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  return LabeledPoset(m, {}, std::move(labels));
}

std::vector<std::pair<int, int>> LabeledPoset::relations() const {
  std::vector<std::pair<int, int>> r;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (less(a, b)) r.emplace_back(a, b);
  return r;
}

LabeledPoset LabeledPoset::restrict(Mask s) const {
  std::vector<int> idx(static_cast<std::size_t>(size()), -1);
  std::vector<long long> labels;
  for (int a = 0; a < size(); ++a)
    if (s & bit(a)) {
      idx[a] = static_cast<int>(labels.size());
      labels.push_back(labels_[a]);
    }
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (idx[a] >= 0 && idx[b] >= 0 && less(a, b)) rel.emplace_back(idx[a], idx[b]);
  const int m = static_cast<int>(labels.size());
  return LabeledPoset(m, rel, std::move(labels));
}

LabeledPoset LabeledPoset::with_labels(std::vector<long long> labels) const {
  return LabeledPoset(size(), relations(), std::move(labels));
}

std::vector<std::pair<int, int>> covers(const LabeledPoset& p) {
  std::vector<std::pair<int, int>> r;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.upper_covers(a) & bit(b)) r.emplace_back(a, b);
  return r;
}

namespace {

using Invariant = std::tuple<int, int, int, int, int, int, int>;

Invariant element_invariant(const LabeledPoset& p, int a, Mask marked) {
  int up_asc = 0, up_desc = 0, low_asc = 0, low_desc = 0;
  for (int b = 0; b < p.size(); ++b) {
    if (p.upper_covers(a) & bit(b)) (p.label(a) < p.label(b) ? up_asc : up_desc)++;
    if (p.lower_covers(a) & bit(b)) (p.label(b) < p.label(a) ? low_asc : low_desc)++;
  }
  return {static_cast<int>((marked >> a) & 1), popcount(p.below(a)), popcount(p.above(a)),
          low_asc, low_desc, up_asc, up_desc};
}

std::string encode(const LabeledPoset& p, const std::vector<int>& order, Mask marked) {
  std::string s;
  int m = p.size();
  s.reserve(static_cast<std::size_t>(m * m + m));
  for (int i = 0; i < m; ++i) s += ((marked >> order[i]) & 1) ? 'v' : '.';
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int a = order[i], b = order[j];
      if (p.upper_covers(a) & bit(b)) s += p.label(a) < p.label(b) ? 'a' : 'd';
      else s += '0';
    }
  return s;
}

}  // namespace

std::string canonical_key(const LabeledPoset& p, Mask marked) {
  int m = p.size();
  std::vector<std::pair<Invariant, int>> inv;
  for (int a = 0; a < m; ++a) inv.emplace_back(element_invariant(p, a, marked), a);
  std::sort(inv.begin(), inv.end());
  // blocks of equal invariants may be permuted freely
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && inv[j].first == inv[i].first) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[i] = inv[i].second;
  for (auto [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);

  std::string best;
  bool have = false;
  // odometer over per-block permutations
  while (true) {
    std::string key = encode(p, order, marked);
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (b == blocks.size()) break;
  }
  std::ostringstream os;
  os << m << ":";
  for (auto& [iv, a] : inv) {
    auto [mk, lo, hi, la, ld, ua, ud] = iv;
    os << mk << lo << hi << la << ld << ua << ud << ";";
  }
  os << best;
  return os.str();
}

LabeledPoset disjoint_union(const LabeledPoset& p, const LabeledPoset& q) {
  int mp = p.size(), mq = q.size();
  std::vector<long long> labels;
  long long pmax = mp ? *std::max_element(p.labels().begin(), p.labels().end()) : 0;
  long long qmin = mq ? *std::min_element(q.labels().begin(), q.labels().end()) : 0;
  for (long long g : p.labels()) labels.push_back(g - pmax);
  for (long long g : q.labels()) labels.push_back(g - qmin + 1);
  std::vector<std::pair<int, int>> rel = p.relations();
  for (auto [a, b] : q.relations()) rel.emplace_back(a + mp, b + mp);
  return LabeledPoset(mp + mq, rel, std::move(labels));
}

bool is_lower_set(const LabeledPoset& p, Mask s) {
  for (int a = 0; a < p.size(); ++a)
    if ((s & bit(a)) && (p.below(a) & ~s)) return false;
  return true;
}

bool is_upper_set(const LabeledPoset& p, Mask s) {
  for (int a = 0; a < p.size(); ++a)
    if ((s & bit(a)) && (p.above(a) & ~s)) return false;
  return true;
}

bool is_antichain(const LabeledPoset& p, Mask s) {
  for (int a = 0; a < p.size(); ++a)
    if ((s & bit(a)) && (p.above(a) & s)) return false;
  return true;
}

std::vector<Split> coproduct_splits(const LabeledPoset& p) {
  std::vector<Split> out;
  Mask all = p.ground();
  // S ranges over lower sets, S n T over antichains inside S
  for (Mask s = 0;; s = (s - all) & all) {
    if (is_lower_set(p, s)) {
      for (Mask a = s;; a = (a - 1) & s) {
        Mask t = (all & ~s) | a;
        if (is_antichain(p, a) && is_upper_set(p, t)) out.push_back({s, t});
        if (a == 0) break;
      }
    }
    if (s == all) break;
  }
  std::sort(out.begin(), out.end(), [](const Split& x, const Split& y) {
    return std::tie(x.lower, x.upper) < std::tie(y.lower, y.upper);
  });
  return out;
}

Mask valleys(const LabeledPoset& p) {
  Mask v = 0;
  for (int a = 0; a < p.size(); ++a) {
    bool sink = true;
    for (int b = 0; b < p.size() && sink; ++b) {
      if ((p.lower_covers(a) & bit(b)) && p.label(b) < p.label(a)) sink = false;
      if ((p.upper_covers(a) & bit(b)) && p.label(b) < p.label(a)) sink = false;
    }
    if (sink) v |= bit(a);
  }
  return v;
}

Mask peaks(const LabeledPoset& p) {
  Mask r = 0;
  for (int y = 0; y < p.size(); ++y) {
    bool rise = false, fall = false;
    for (int b = 0; b < p.size(); ++b) {
      if ((p.lower_covers(y) & bit(b)) && p.label(b) < p.label(y)) rise = true;
      if ((p.upper_covers(y) & bit(b)) && p.label(b) < p.label(y)) fall = true;
    }
    if (rise && fall) r |= bit(y);
  }
  return r;
}

void for_each_multiextension(const LabeledPoset& p, int max_len, const std::function<void(const Word&)>& visit) {
  const int m = p.size();
  const Mask all = p.ground();
  Word w;
  // seen: elements placed; closed: elements with an upper cover already placed
  std::function<void(Mask, Mask)> rec = [&](Mask seen, Mask closed) {
    int len = static_cast<int>(w.size());
    if (seen == all && len >= m) visit(w);
    int unseen = popcount(all & ~seen);
    if (len + std::max(unseen, 1) > max_len) return;
    for (int e = 0; e < m; ++e) {
      if (!w.empty() && w.back() == e) continue;
      if (closed & bit(e)) continue;
      if ((p.lower_covers(e) & ~seen) != 0) continue;
      if (!(seen & bit(e)) && len + unseen > max_len) continue;
      if ((seen & bit(e)) && len + unseen + 1 > max_len) continue;
      w.push_back(e);
      rec(seen | bit(e), closed | p.lower_covers(e));
      w.pop_back();
    }
  };
  if (m == 0) {
    visit(w);
    return;
  }
  rec(0, 0);
}

std::vector<Word> linear_multiextensions(const LabeledPoset& p, int max_len) {
  std::vector<Word> out;
  for_each_multiextension(p, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<int> word_descents(const LabeledPoset& p, const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (p.label(w[i]) > p.label(w[i + 1])) d.push_back(static_cast<int>(i) + 1);
  return d;
}

std::vector<int> word_peaks(const LabeledPoset& p, const Word& w) {
  std::vector<int> d = word_descents(p, w), r;
  std::set<int> ds(d.begin(), d.end());
  for (int i : d)
    if (i > 1 && !ds.count(i - 1)) r.push_back(i);
  return r;
}

LabeledPoset word_chain(const LabeledPoset& p, const Word& w) {
  std::vector<std::pair<long long, int>> keyed;
  for (std::size_t i = 0; i < w.size(); ++i) keyed.emplace_back(p.label(w[i]), static_cast<int>(i));
  std::sort(keyed.begin(), keyed.end());
  std::vector<long long> labels(w.size());
  for (std::size_t r = 0; r < keyed.size(); ++r) labels[keyed[r].second] = static_cast<long long>(r) + 1;
  return LabeledPoset::chain(std::move(labels));
}

LabeledPoset double_vertex(const LabeledPoset& p, int v) {
  int m = p.size();
  if (v < 0 || v >= m) throw Error("double_vertex: element not in poset");
  if (m + 1 > LabeledPoset::kMaxSize) throw Error("poset too large to double");
  std::vector<std::pair<int, int>> rel = p.relations();
  rel.emplace_back(v, m);
  for (int x = 0; x < m; ++x) {
    if (p.less(x, v)) rel.emplace_back(x, m);
    if (p.less(v, x)) rel.emplace_back(m, x);
  }
  long long g = p.label(v);
  std::vector<long long> labels;
  for (long long h : p.labels()) labels.push_back(h > g ? h + 1 : h);
  labels.push_back(g + 1);
  return LabeledPoset(m + 1, rel, std::move(labels));
}

LabeledPoset standardize_labels(const LabeledPoset& p) {
  std::vector<int> idx(static_cast<std::size_t>(p.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return p.label(a) < p.label(b); });
  std::vector<long long> labels(static_cast<std::size_t>(p.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) labels[idx[r]] = static_cast<long long>(r) + 1;
  return p.with_labels(std::move(labels));
}

LabeledPoset mirror(const LabeledPoset& p, Mask i_set, Mask j_set) {
  if ((i_set | j_set) != p.ground() || ((i_set | j_set) & ~p.ground()))
    throw Error("mirror: I and J must cover the poset");
  LabeledPoset q = standardize_labels(p);
  std::vector<int> origin;
  std::vector<long long> labels;
  for (int a = 0; a < p.size(); ++a)
    if (i_set & bit(a)) {
      origin.push_back(a);
      labels.push_back(q.label(a));
    }
  for (int a = 0; a < p.size(); ++a)
    if (j_set & bit(a)) {
      origin.push_back(a);
      labels.push_back(-q.label(a));
    }
  std::vector<std::pair<int, int>> rel;
  int n = static_cast<int>(origin.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (q.less(origin[s], origin[t])) rel.emplace_back(s, t);
  return LabeledPoset(n, rel, std::move(labels));
}

LabeledPoset dual(const LabeledPoset& p) {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : p.relations()) rel.emplace_back(b, a);
  return LabeledPoset(p.size(), rel, p.labels());
}

LabeledPoset negate_labels(const LabeledPoset& p) {
  std::vector<long long> labels;
  for (long long g : p.labels()) labels.push_back(-g);
  return p.with_labels(std::move(labels));
}

std::vector<LabeledPoset> labeled_poset_classes(int m) {
  if (m < 0 || m > 6) throw Error("labeled_poset_classes supports at most 6 elements");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  std::map<std::string, LabeledPoset> classes;
  std::vector<long long> perm(static_cast<std::size_t>(m));
  for (unsigned sel = 0; sel < (1u << pairs.size()); ++sel) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (sel & (1u << k)) rel.push_back(pairs[k]);
    // keep only relation sets that are already transitively closed
    std::set<std::pair<int, int>> relset(rel.begin(), rel.end());
    bool closed = true;
    for (auto [a, b] : rel)
      for (auto [c, d] : rel)
        if (b == c && !relset.count({a, d})) closed = false;
    if (!closed) continue;
    std::iota(perm.begin(), perm.end(), 1);
    do {
      LabeledPoset p(m, rel, perm);
      classes.try_emplace(canonical_key(p), p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<LabeledPoset> out;
  for (auto& [k, p] : classes) out.push_back(p);
  return out;
}

std::string to_dot(const LabeledPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (int a = 0; a < p.size(); ++a) os << "  n" << a << " [label=\"" << p.label(a) << "\"];\n";
  for (auto [a, b] : covers(p)) {
    if (p.label(a) > p.label(b)) os << "  n" << a << " -> n" << b << ";\n";
    else os << "  n" << b << " -> n" << a << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace grothkit
