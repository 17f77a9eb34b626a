#pragma once

#include "grothkit/posets.hpp"
#include "grothkit/ppart.hpp"
#include "grothkit/qsym.hpp"
#include "grothkit/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace grothkit {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
// (n, n-1, ..., 1)
Partition staircase(int n);
std::string partition_str(const Partition& p);

// Partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);
std::vector<Partition> strict_partitions_up_to(int max_size);
// Strict partitions contained in outer (including the empty one and outer itself).
std::vector<Partition> strict_subpartitions(const Partition& outer);
std::vector<Partition> subpartitions(const Partition& outer);

struct SkewShape {
  Partition outer;
  Partition inner;

  int size() const { return partition_size(outer) - partition_size(inner); }
  std::string str() const;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Parses "5,4,2/2,1" or "3,1".
SkewShape parse_shape(const std::string& text);
// Throws unless inner is contained in outer (and both strict when shifted).
void validate_shape(const SkewShape& s, bool shifted);
SkewShape conjugate(const SkewShape& s);

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Cells ordered componentwise with the canonical row/column labeling.
struct Diagram {
  std::vector<Cell> cells;
  LabeledPoset poset;
  Mask diagonal = 0;  // cells with row == col
};

Diagram make_diagram(const SkewShape& s, bool shifted);
LabeledPoset diagram_poset(const SkewShape& s, bool shifted);

// (lambda + delta_k) / (mu + delta_k) with k = l(lambda).
SkewShape staircase_lift(const SkewShape& s);

MCoeffs g_m_coeffs(const SkewShape& s, int max_deg);
MCoeffs gq_m_coeffs(const SkewShape& s, int max_deg);
MCoeffs gp_m_coeffs(const SkewShape& s, int max_deg);
MCoeffs gs_m_coeffs(const SkewShape& s, int max_deg);

TruncPoly grothendieck_G(const SkewShape& s, int n_vars, int max_deg);
TruncPoly grothendieck_GQ(const SkewShape& s, int n_vars, int max_deg);
TruncPoly grothendieck_GP(const SkewShape& s, int n_vars, int max_deg);
TruncPoly grothendieck_GS(const SkewShape& s, int n_vars, int max_deg);

// Standard set-valued tableaux as multiextension words of the diagram poset.
std::vector<Word> standard_set_tableaux(const SkewShape& s, bool shifted, int max_entries);
// Entry sets per cell of the tableau encoded by w.
std::vector<std::vector<int>> tableau_entries(const Diagram& d, const Word& w);

BasisExpansion expand_G_in_L(const SkewShape& s, int max_size);
BasisExpansion expand_GQ_in_K(const SkewShape& s, int max_size);

}  // namespace grothkit
