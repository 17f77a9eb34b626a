#include "grothkit/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace grothkit {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_strict(const Partition& p) {
  if (!is_partition(p)) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition r;
  if (p.empty()) return r;
  for (int j = 1; j <= p.front(); ++j)
    r.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
  return r;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition staircase(int n) {
  Partition r;
  for (int k = n; k >= 1; --k) r.push_back(k);
  return r;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

namespace {

void partitions_rec(int left, int max_part, bool strict, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(left, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(left - k, strict ? k - 1 : k, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, false, cur, out);
  return out;
}

std::vector<Partition> strict_partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, true, cur, out);
  return out;
}

std::vector<Partition> strict_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto s = strict_partitions_of(n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

namespace {

void sub_rec(const Partition& outer, std::size_t i, int cap, bool strict, Partition& cur, std::vector<Partition>& out) {
  out.push_back(cur);
  if (i >= outer.size()) return;
  for (int k = std::min(outer[i], cap); k >= 1; --k) {
    cur.push_back(k);
    sub_rec(outer, i + 1, strict ? k - 1 : k, strict, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> subs(const Partition& outer, bool strict) {
  std::vector<Partition> out;
  Partition cur;
  sub_rec(outer, 0, outer.empty() ? 0 : outer.front(), strict, cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    int sa = partition_size(a), sb = partition_size(b);
    return sa != sb ? sa < sb : b < a;
  });
  return out;
}

}  // namespace

std::vector<Partition> strict_subpartitions(const Partition& outer) { return subs(outer, true); }
std::vector<Partition> subpartitions(const Partition& outer) { return subs(outer, false); }

std::string SkewShape::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < outer.size(); ++i) os << (i ? "," : "") << outer[i];
  if (outer.empty()) os << "0";
  if (!inner.empty()) {
    os << "/";
    for (std::size_t i = 0; i < inner.size(); ++i) os << (i ? "," : "") << inner[i];
  }
  return os.str();
}

namespace {

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  Partition p;
  if (t.empty() || t == "0") return p;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw Error("malformed partition: " + text);
    int v = std::stoi(item);
    if (v > 0) p.push_back(v);
  }
  if (!is_partition(p)) throw Error("not a partition: " + text);
  return p;
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
  auto slash = text.find('/');
  SkewShape s;
  s.outer = parse_partition(text.substr(0, slash));
  if (slash != std::string::npos) s.inner = parse_partition(text.substr(slash + 1));
  if (!contains(s.outer, s.inner)) throw Error("inner partition not contained in outer: " + text);
  return s;
}

void validate_shape(const SkewShape& s, bool shifted) {
  if (!is_partition(s.outer) || !is_partition(s.inner)) throw Error("malformed shape " + s.str());
  if (!contains(s.outer, s.inner)) throw Error("inner partition not contained in outer: " + s.str());
  if (shifted && (!is_strict(s.outer) || !is_strict(s.inner)))
    throw Error("shifted shapes need strict partitions: " + s.str());
}

SkewShape conjugate(const SkewShape& s) { return {conjugate(s.outer), conjugate(s.inner)}; }

Diagram make_diagram(const SkewShape& s, bool shifted) {
  validate_shape(s, shifted);
  Diagram d;
  for (std::size_t i = 0; i < s.outer.size(); ++i) {
    int row = static_cast<int>(i) + 1;
    int lo = i < s.inner.size() ? s.inner[i] : 0;
    for (int j = lo + 1; j <= s.outer[i]; ++j) d.cells.push_back({row, shifted ? row + j - 1 : j});
  }
  const int m = static_cast<int>(d.cells.size());
  if (m > LabeledPoset::kMaxSize) throw Error("diagram too large");
  // labels increase along rows and decrease down columns
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Cell &x = d.cells[a], &y = d.cells[b];
    return x.col != y.col ? x.col < y.col : x.row > y.row;
  });
  std::vector<long long> labels(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) labels[idx[r]] = r + 1;
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && d.cells[a].row <= d.cells[b].row && d.cells[a].col <= d.cells[b].col) rel.emplace_back(a, b);
  d.poset = LabeledPoset(m, rel, std::move(labels));
  for (int a = 0; a < m; ++a)
    if (d.cells[a].row == d.cells[a].col) d.diagonal |= bit(a);
  return d;
}

LabeledPoset diagram_poset(const SkewShape& s, bool shifted) { return make_diagram(s, shifted).poset; }

SkewShape staircase_lift(const SkewShape& s) {
  validate_shape(s, false);
  const int k = static_cast<int>(s.outer.size());
  SkewShape r;
  for (int i = 0; i < k; ++i) {
    r.outer.push_back(s.outer[i] + k - i);
    int mu = i < static_cast<int>(s.inner.size()) ? s.inner[i] : 0;
    r.inner.push_back(mu + k - i);
  }
  return r;
}

namespace {

enum class Family { G, GQ, GP };

MCoeffs cached_m_coeffs(Family f, const SkewShape& s, int max_deg) {
  static std::mutex mu;
  static std::map<std::tuple<int, Partition, Partition, int>, MCoeffs> cache;
  auto key = std::make_tuple(static_cast<int>(f), s.outer, s.inner, max_deg);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  MCoeffs r;
  if (f == Family::G) {
    r = gamma_m_coeffs(make_diagram(s, false).poset, max_deg);
  } else {
    Diagram d = make_diagram(s, true);
    r = omega_m_coeffs(d.poset, f == Family::GP ? d.diagonal : 0, max_deg);
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace

MCoeffs g_m_coeffs(const SkewShape& s, int max_deg) { return cached_m_coeffs(Family::G, s, max_deg); }
MCoeffs gq_m_coeffs(const SkewShape& s, int max_deg) { return cached_m_coeffs(Family::GQ, s, max_deg); }
MCoeffs gp_m_coeffs(const SkewShape& s, int max_deg) { return cached_m_coeffs(Family::GP, s, max_deg); }
MCoeffs gs_m_coeffs(const SkewShape& s, int max_deg) { return gp_m_coeffs(staircase_lift(s), max_deg); }

TruncPoly grothendieck_G(const SkewShape& s, int n_vars, int max_deg) {
  return from_m_coeffs(g_m_coeffs(s, max_deg), n_vars, max_deg);
}

TruncPoly grothendieck_GQ(const SkewShape& s, int n_vars, int max_deg) {
  return from_m_coeffs(gq_m_coeffs(s, max_deg), n_vars, max_deg);
}

TruncPoly grothendieck_GP(const SkewShape& s, int n_vars, int max_deg) {
  return from_m_coeffs(gp_m_coeffs(s, max_deg), n_vars, max_deg);
}

TruncPoly grothendieck_GS(const SkewShape& s, int n_vars, int max_deg) {
  return from_m_coeffs(gs_m_coeffs(s, max_deg), n_vars, max_deg);
}

std::vector<Word> standard_set_tableaux(const SkewShape& s, bool shifted, int max_entries) {
  return linear_multiextensions(make_diagram(s, shifted).poset, max_entries);
}

std::vector<std::vector<int>> tableau_entries(const Diagram& d, const Word& w) {
  std::vector<std::vector<int>> r(d.cells.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i]].push_back(static_cast<int>(i) + 1);
  return r;
}

namespace {

BasisExpansion expand_by_words(const SkewShape& s, bool shifted, int max_size, bool peaks_only) {
  Diagram d = make_diagram(s, shifted);
  BasisExpansion r{peaks_only ? Basis::K : Basis::L, {}, max_size};
  const int n = d.poset.size();
  for_each_multiextension(d.poset, max_size, [&](const Word& w) {
    auto pos = peaks_only ? word_peaks(d.poset, w) : word_descents(d.poset, w);
    int len = static_cast<int>(w.size());
    r.add(from_subset(len, std::set<int>(pos.begin(), pos.end())).parts(), BetaPoly::beta(len - n));
  });
  return r;
}

}  // namespace

BasisExpansion expand_G_in_L(const SkewShape& s, int max_size) { return expand_by_words(s, false, max_size, false); }

BasisExpansion expand_GQ_in_K(const SkewShape& s, int max_size) { return expand_by_words(s, true, max_size, true); }

}  // namespace grothkit
