#include "grothkit/comps.hpp"

#include "grothkit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grothkit {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error("composition parts must be positive");
}

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_peak() const noexcept {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < 2) return false;
  return true;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::set<int> descent_set(const Composition& a) {
  std::set<int> s;
  int acc = 0;
  for (int i = 0; i + 1 < a.length(); ++i) s.insert(acc += a[i]);
  return s;
}

Composition from_subset(int n, const std::set<int>& s) {
  if (n < 0) throw Error("negative composition size");
  if (n == 0) {
    if (!s.empty()) throw Error("descent set element out of range");
    return {};
  }
  std::vector<int> parts;
  int prev = 0;
  for (int i : s) {
    if (i < 1 || i > n - 1) throw Error("descent set element out of range");
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition complement(const Composition& a) {
  int n = a.size();
  std::set<int> d = descent_set(a), c;
  for (int i = 1; i < n; ++i)
    if (!d.count(i)) c.insert(i);
  return from_subset(n, c);
}

Composition reverse(const Composition& a) {
  std::vector<int> p = a.parts();
  std::reverse(p.begin(), p.end());
  return Composition(std::move(p));
}

Composition transpose(const Composition& a) { return reverse(complement(a)); }

Composition flat(const Composition& a) {
  if (a.empty()) throw Error("flat of the empty composition");
  if (!a.is_peak()) throw Error("flat needs a peak composition");
  if (a.length() == 1) return a;
  std::vector<int> p = a.parts();
  std::reverse(p.begin(), p.end());
  p.front() += 1;
  p.back() -= 1;
  return Composition(std::move(p));
}

Composition lambda_map(const Composition& a) {
  std::set<int> d = descent_set(a), kept;
  for (int i : d)
    if (i > 1 && !d.count(i - 1)) kept.insert(i);
  return from_subset(a.size(), kept);
}

bool refines(const Composition& coarse, const Composition& fine) {
  if (coarse.size() != fine.size()) return false;
  std::set<int> a = descent_set(coarse), b = descent_set(fine);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Composition componentwise_add(const Composition& a, std::span<const int> delta) {
  if (static_cast<int>(delta.size()) != a.length()) throw Error("componentwise_add length mismatch");
  std::vector<int> p = a.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (delta[i] < 0) throw Error("componentwise_add needs nonnegative entries");
    p[i] += delta[i];
  }
  return Composition(std::move(p));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

bool basis_order_less(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return b.parts() < a.parts();
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // descent subsets in lexicographically decreasing composition order
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> s;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) s.insert(i);
    out.push_back(from_subset(n, s));
  }
  std::sort(out.begin(), out.end(), basis_order_less);
  return out;
}

std::vector<Composition> compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto c = compositions_of(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Composition> peak_compositions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n))
    if (c.is_peak()) out.push_back(std::move(c));
  return out;
}

std::vector<Composition> peak_compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto c = peak_compositions_of(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Composition parse_composition(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::vector<int> parts;
  if (t.empty()) return {};
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw Error("malformed composition: " + text);
    parts.push_back(std::stoi(item));
  }
  return Composition(std::move(parts));
}

}  // namespace grothkit
