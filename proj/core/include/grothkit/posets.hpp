#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace grothkit {

// Subset of a poset's ground set; bit i is element i.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
int popcount(Mask m);

// Finite poset on {0..m-1} with an injective integer labeling.
class LabeledPoset {
 public:
  static constexpr int kMaxSize = 63;

  LabeledPoset() = default;
  // relations are pairs (a, b) meaning a < b; the transitive closure is taken.
  LabeledPoset(int m, const std::vector<std::pair<int, int>>& relations, std::vector<long long> labels);

  // Chain 0 < 1 < ... with the given labels.
  static LabeledPoset chain(std::vector<long long> labels);
  // Antichain labeled 1..m.
  static LabeledPoset antichain(int m);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Mask ground() const noexcept { return size() == 0 ? 0 : (~Mask{0} >> (64 - size())); }
  bool less(int a, int b) const { return (above_[a] >> b) & 1; }
  Mask above(int a) const { return above_[a]; }
  Mask below(int a) const { return below_[a]; }
  Mask upper_covers(int a) const { return up_covers_[a]; }
  Mask lower_covers(int a) const { return low_covers_[a]; }
  long long label(int a) const { return labels_[a]; }
  const std::vector<long long>& labels() const noexcept { return labels_; }

  std::vector<std::pair<int, int>> relations() const;
  // Induced subposet on s; elements keep their relative order.
  LabeledPoset restrict(Mask s) const;
  LabeledPoset with_labels(std::vector<long long> labels) const;

  friend bool operator==(const LabeledPoset&, const LabeledPoset&) = default;

 private:
  void build_covers();

  std::vector<long long> labels_;
  std::vector<Mask> above_, below_, up_covers_, low_covers_;
};

std::vector<std::pair<int, int>> covers(const LabeledPoset& p);

// Key of the isomorphism class (oriented Hasse diagram). The optional mask marks
// distinguished elements that must be carried onto each other.
std::string canonical_key(const LabeledPoset& p, Mask marked = 0);

LabeledPoset disjoint_union(const LabeledPoset& p, const LabeledPoset& q);

struct Split {
  Mask lower;
  Mask upper;
  friend bool operator==(const Split&, const Split&) = default;
};
// (S, T): S lower set, T upper set, S u T = P, S n T an antichain.
std::vector<Split> coproduct_splits(const LabeledPoset& p);

bool is_lower_set(const LabeledPoset& p, Mask s);
bool is_upper_set(const LabeledPoset& p, Mask s);
bool is_antichain(const LabeledPoset& p, Mask s);

Mask valleys(const LabeledPoset& p);
Mask peaks(const LabeledPoset& p);

using Word = std::vector<int>;

// Streams every linear multiextension of length |P|..max_len.
void for_each_multiextension(const LabeledPoset& p, int max_len, const std::function<void(const Word&)>& visit);
std::vector<Word> linear_multiextensions(const LabeledPoset& p, int max_len);

// 1-based positions i with label(w_i) > label(w_{i+1}).
std::vector<int> word_descents(const LabeledPoset& p, const Word& w);
// Descents i > 1 whose predecessor i - 1 is not a descent.
std::vector<int> word_peaks(const LabeledPoset& p, const Word& w);
// The chain on positions 1..N of w, labeled by the standardization of the labels along w.
LabeledPoset word_chain(const LabeledPoset& p, const Word& w);

// The doubled poset: adds v' = index m covering v, with v' related to the rest as v is.
LabeledPoset double_vertex(const LabeledPoset& p, int v);

// Signed duplication on I u (-J); elements of I come first (increasing), then J.
LabeledPoset mirror(const LabeledPoset& p, Mask i_set, Mask j_set);

LabeledPoset dual(const LabeledPoset& p);
LabeledPoset negate_labels(const LabeledPoset& p);
// Same poset, labels replaced by their ranks 1..m.
LabeledPoset standardize_labels(const LabeledPoset& p);

// One representative per isomorphism class of labeled posets with exactly m elements.
std::vector<LabeledPoset> labeled_poset_classes(int m);

// Graphviz rendering; arrows point from the larger to the smaller label along each cover.
std::string to_dot(const LabeledPoset& p);

}  // namespace grothkit
