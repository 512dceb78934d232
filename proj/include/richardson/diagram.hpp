#pragma once

#include "richardson/algebra.hpp"

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace richardson {

// TopDown: every column labeled top to bottom, columns left to right.
// MirroredHalves: as TopDown, except the last half of the columns is labeled
// bottom to top (used by type (a) diagrams of sp/so).
enum class Labeling { TopDown, MirroredHalves };

struct Cell {
  int column;
  int row;
  auto operator<=>(const Cell&) const = default;
};

class LineDiagram {
 public:
  using Edge = std::pair<int, int>;  // 1-based labels, first < second

  // Throws ColumnMismatch for edges outside the vertex range, loops, or
  // edges inside one column.
  LineDiagram(std::vector<int> columns, Labeling labeling, std::set<Edge> edges = {});

  const std::vector<int>& columns() const { return columns_; }
  Labeling labeling() const { return labeling_; }
  const std::set<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(cells_.size()); }
  bool branched() const { return branched_; }

  Cell cell_of(int label) const { return cells_.at(label - 1); }
  int label_of(Cell cell) const { return labels_.at(cell); }
  int column_of(int label) const { return cell_of(label).column; }
  // Mirror vertex under the antidiagonal symmetry: label k -> N+1-k.
  Cell mirror(Cell cell) const;

  friend bool operator==(const LineDiagram& a, const LineDiagram& b) {
    return a.columns_ == b.columns_ && a.labeling_ == b.labeling_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> columns_;
  Labeling labeling_;
  std::set<Edge> edges_;
  std::vector<Cell> cells_;
  std::map<Cell, int> labels_;
  bool branched_ = false;
};

bool is_simple_diagram(const LineDiagram& d);

LineDiagram horizontal_diagram(const std::vector<int>& d);

// Type (a) and type (b) constructions for sp/so. Both check classify_simple
// and throw NotSimpleSpec otherwise. The diagram is built on the sorted
// block order and its chains are moved back onto the given block order.
LineDiagram even_diagram(const ParabolicSpec& spec);
LineDiagram odd_diagram(const ParabolicSpec& spec);

// The construction matching the spec's shape with no simplicity check:
// horizontal for sl, type (a) or (b) otherwise. Branch search starts here.
LineDiagram simple_construction(const ParabolicSpec& spec);

long long count_k_subchains(const LineDiagram& d, int k);
// Edge counts of the maximal chains, sorted non-increasing.
std::vector<int> chain_lengths(const LineDiagram& d);
// Maximal chains as vertex label lists in increasing order.
std::vector<std::vector<int>> chains(const LineDiagram& d);

// sigma is one-line notation, 1-based. With |sigma| = |d| it permutes d
// directly; with |sigma| = floor(|d|/2) it permutes the first half and the
// mirrored second half together.
std::vector<int> permute_blocks(const std::vector<int>& d, const std::vector<int>& sigma);

// Stable sort of the first half (all of d for sl), as one-line notation.
std::vector<int> canonical_permutation(const ParabolicSpec& spec);

}  // namespace richardson
