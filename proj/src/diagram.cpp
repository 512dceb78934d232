#include "richardson/diagram.hpp"

#include "richardson/classify.hpp"
#include "richardson/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace richardson {

LineDiagram::LineDiagram(std::vector<int> columns, Labeling labeling, std::set<Edge> edges)
    : columns_(std::move(columns)), labeling_(labeling), edges_(std::move(edges)) {
  int m = static_cast<int>(columns_.size());
  for (int c = 0; c < m; ++c) {
    if (columns_[c] <= 0) throw Error(ErrorCode::NonPositiveBlock, "empty diagram column");
    bool bottom_up = labeling_ == Labeling::MirroredHalves && c >= m - m / 2;
    for (int k = 0; k < columns_[c]; ++k) {
      Cell cell{c, bottom_up ? columns_[c] - 1 - k : k};
      labels_[cell] = static_cast<int>(cells_.size()) + 1;
      cells_.push_back(cell);
    }
  }
  std::map<int, int> left, right;
  for (const auto& [i, j] : edges_) {
    if (i < 1 || j > vertex_count() || i >= j)
      throw Error(ErrorCode::ColumnMismatch,
                  "edge " + std::to_string(i) + "-" + std::to_string(j) + " is not a vertex pair");
    if (column_of(i) == column_of(j))
      throw Error(ErrorCode::ColumnMismatch,
                  "edge " + std::to_string(i) + "-" + std::to_string(j) + " stays in one column");
    if (++right[i] > 1 || ++left[j] > 1) branched_ = true;
  }
}

Cell LineDiagram::mirror(Cell cell) const {
  int m = static_cast<int>(columns_.size());
  if (labeling_ == Labeling::MirroredHalves) return {m - 1 - cell.column, cell.row};
  return {m - 1 - cell.column, columns_[cell.column] - 1 - cell.row};
}

bool is_simple_diagram(const LineDiagram& d) { return !d.branched(); }

LineDiagram horizontal_diagram(const std::vector<int>& d) {
  if (d.empty()) throw Error(ErrorCode::SumMismatch, "empty block vector");
  LineDiagram shape(d, Labeling::TopDown);
  std::set<LineDiagram::Edge> edges;
  int height = *std::max_element(d.begin(), d.end());
  for (int row = 0; row < height; ++row) {
    int prev = -1;
    for (int c = 0; c < static_cast<int>(d.size()); ++c) {
      if (d[c] <= row) continue;
      if (prev >= 0) edges.insert({shape.label_of({prev, row}), shape.label_of({c, row})});
      prev = c;
    }
  }
  return LineDiagram(d, Labeling::TopDown, std::move(edges));
}

namespace {

class Builder {
 public:
  Builder(const std::vector<int>& columns, Labeling labeling) : shape_(columns, labeling) {}

  void chain(const std::vector<Cell>& cells) {
    for (std::size_t k = 1; k < cells.size(); ++k) {
      int a = shape_.label_of(cells[k - 1]), b = shape_.label_of(cells[k]);
      if (a >= b) throw Error(ErrorCode::InternalDisagreement, "chain runs against the labels");
      edges_.insert({a, b});
    }
  }
  void chain_with_mirror(const std::vector<Cell>& cells) {
    chain(cells);
    std::vector<Cell> mirrored;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) mirrored.push_back(shape_.mirror(*it));
    chain(mirrored);
  }
  const LineDiagram& shape() const { return shape_; }
  LineDiagram finish() const {
    return LineDiagram(shape_.columns(), shape_.labeling(), edges_);
  }

 private:
  LineDiagram shape_;
  std::set<LineDiagram::Edge> edges_;
};

// d must have a sorted first half.
LineDiagram even_sorted(const AlgebraKind& kind, const std::vector<int>& d) {
  int r = static_cast<int>(d.size()) / 2;
  Builder b(d, Labeling::MirroredHalves);
  int height = d[r - 1];
  for (int row = 0; row < height; ++row) {
    std::vector<Cell> line;
    for (int c = 0; c < r; ++c)
      if (d[c] > row) line.push_back({c, row});
    b.chain_with_mirror(line);
  }
  if (kind.is_symplectic()) {
    for (int row = 0; row < height; ++row) b.chain({{r - 1, row}, {r, row}});
  } else {
    // Pairs from the top; with odd height the bottom vertex stays free.
    for (int row = 0; row + 1 < height; row += 2) {
      b.chain({{r - 1, row}, {r, row + 1}});
      b.chain({{r - 1, row + 1}, {r, row}});
    }
  }
  return b.finish();
}

// d must have a sorted first half. Peels chains off the remaining vertices
// until every vertex is used.
LineDiagram odd_sorted(const AlgebraKind& kind, const std::vector<int>& d) {
  int m = static_cast<int>(d.size());
  int r = m / 2;
  Builder b(d, Labeling::TopDown);
  std::vector<std::vector<int>> rest(m);
  for (int c = 0; c < m; ++c) {
    rest[c].resize(d[c]);
    std::iota(rest[c].begin(), rest[c].end(), 0);
  }
  auto remaining = [&](int c) { return static_cast<int>(rest[c].size()); };
  auto top = [&](int c) { return Cell{c, rest[c].front()}; };
  auto center = [&](int c) { return Cell{c, rest[c][rest[c].size() / 2]}; };
  auto take = [&](const std::vector<Cell>& cells) {
    for (const Cell& cell : cells) {
      auto& col = rest[cell.column];
      auto it = std::find(col.begin(), col.end(), cell.row);
      if (it == col.end()) throw Error(ErrorCode::InternalDisagreement, "vertex used twice");
      col.erase(it);
    }
  };
  auto mirrored = [&](const std::vector<Cell>& cells) {
    std::vector<Cell> out;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) out.push_back(b.shape().mirror(*it));
    return out;
  };
  auto peel_pair = [&](const std::vector<Cell>& line) {
    b.chain_with_mirror(line);
    take(line);
    take(mirrored(line));
  };

  bool central_done = false;
  for (int guard = 0;; ++guard) {
    if (guard > b.shape().vertex_count())
      throw Error(ErrorCode::InternalDisagreement, "peeling does not terminate");
    std::vector<int> live;
    for (int c = 0; c < m; ++c)
      if (remaining(c) > 0) live.push_back(c);
    if (live.empty()) break;
    bool singles = std::any_of(live.begin(), live.end(), [&](int c) { return remaining(c) == 1; });
    std::vector<Cell> left;
    int mid = remaining(r);

    if (kind.is_orthogonal() && !central_done && mid % 2 == 1 &&
        (remaining(live.front()) % 2 == 1 || mid == 1)) {
      // One self-mirror chain through the middle vertex of the center column.
      for (int c : live)
        if (c < r) left.push_back(remaining(c) % 2 ? center(c) : top(c));
      std::vector<Cell> line = left;
      line.push_back(center(r));
      for (const Cell& cell : mirrored(left)) line.push_back(cell);
      b.chain(line);
      take(line);
      central_done = true;
      continue;
    }
    if (!singles) {
      std::vector<Cell> line;
      for (int c : live) line.push_back(top(c));
      peel_pair(line);
      continue;
    }
    for (int c : live)
      if (c < r) left.push_back(top(c));
    if (mid >= 2) {
      std::vector<Cell> line = left;
      line.push_back(top(r));
      for (int c : live)
        if (c > r && remaining(c) >= 2) line.push_back(top(c));
      peel_pair(line);
      continue;
    }
    if (left.empty()) throw Error(ErrorCode::InternalDisagreement, "asymmetric remainder");
    if (kind.is_symplectic()) {
      // Crosses the middle through a self-paired line.
      std::vector<Cell> line = left;
      for (const Cell& cell : mirrored(left)) line.push_back(cell);
      b.chain(line);
      take(line);
    } else {
      std::vector<Cell> line = left;
      for (int c : live)
        if (c > r && remaining(c) >= 2) line.push_back(top(c));
      peel_pair(line);
    }
  }
  return b.finish();
}

// Column of the given spec occupied by canonical column p.
std::vector<int> column_map(const std::vector<int>& sigma, int m) {
  std::vector<int> map(m);
  std::iota(map.begin(), map.end(), 0);
  int r = static_cast<int>(sigma.size());
  for (int p = 0; p < r; ++p) {
    map[p] = sigma[p] - 1;
    map[m - 1 - p] = m - sigma[p];
  }
  return map;
}

// Moves every chain of a simple diagram onto new column positions, keeping
// rows, then reconnects each chain in column order.
LineDiagram transport(const LineDiagram& canon, const std::vector<int>& map,
                      const std::vector<int>& target) {
  LineDiagram shape(target, canon.labeling());
  std::set<LineDiagram::Edge> edges;
  for (const auto& chain : chains(canon)) {
    std::vector<Cell> cells;
    for (int label : chain) {
      Cell cell = canon.cell_of(label);
      cells.push_back({map[cell.column], cell.row});
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t k = 1; k < cells.size(); ++k) {
      int a = shape.label_of(cells[k - 1]), b = shape.label_of(cells[k]);
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return LineDiagram(target, canon.labeling(), std::move(edges));
}

LineDiagram build(const ParabolicSpec& spec) {
  if (spec.kind().is_special_linear()) return horizontal_diagram(spec.blocks());
  std::vector<int> sigma = canonical_permutation(spec);
  std::vector<int> sorted = permute_blocks(spec.blocks(), sigma);
  LineDiagram canon = spec.is_type_a() ? even_sorted(spec.kind(), sorted)
                                       : odd_sorted(spec.kind(), sorted);
  if (sorted == spec.blocks()) return canon;
  return transport(canon, column_map(sigma, spec.block_count()), spec.blocks());
}

void require_simple(const ParabolicSpec& spec) {
  Classification cls = classify_simple(spec);
  if (!cls.simple()) throw Error(ErrorCode::NotSimpleSpec, spec.key() + ": " + cls.reason);
}

}  // namespace

LineDiagram even_diagram(const ParabolicSpec& spec) {
  if (!spec.is_type_a())
    throw Error(ErrorCode::NotTypeA, spec.key() + " is not sp/so with an even number of blocks");
  require_simple(spec);
  return build(spec);
}

LineDiagram odd_diagram(const ParabolicSpec& spec) {
  if (!spec.is_type_b())
    throw Error(ErrorCode::NotTypeB, spec.key() + " is not sp/so with an odd number of blocks");
  require_simple(spec);
  return build(spec);
}

LineDiagram simple_construction(const ParabolicSpec& spec) { return build(spec); }

long long count_k_subchains(const LineDiagram& d, int k) {
  if (k < 0) return 0;
  int n = d.vertex_count();
  std::vector<std::vector<int>> succ(n + 1);
  for (const auto& [i, j] : d.edges()) succ[i].push_back(j);
  // paths[v] = number of increasing paths of the current length starting at v
  std::vector<long long> paths(n + 1, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<long long> next(n + 1, 0);
    for (int v = 1; v <= n; ++v)
      for (int w : succ[v]) next[v] += paths[w];
    paths = std::move(next);
  }
  return std::accumulate(paths.begin() + 1, paths.end(), 0LL);
}

std::vector<std::vector<int>> chains(const LineDiagram& d) {
  if (d.branched()) throw Error(ErrorCode::BranchedUnsupported, "chains of a branched diagram");
  int n = d.vertex_count();
  std::vector<int> next(n + 1, 0);
  std::vector<bool> has_prev(n + 1, false);
  for (const auto& [i, j] : d.edges()) {
    next[i] = j;
    has_prev[j] = true;
  }
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= n; ++v) {
    if (has_prev[v]) continue;
    std::vector<int> chain;
    for (int w = v; w != 0; w = next[w]) chain.push_back(w);
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<int> chain_lengths(const LineDiagram& d) {
  std::vector<int> out;
  for (const auto& chain : chains(d)) out.push_back(static_cast<int>(chain.size()) - 1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> permute_blocks(const std::vector<int>& d, const std::vector<int>& sigma) {
  int m = static_cast<int>(d.size());
  int r = static_cast<int>(sigma.size());
  std::vector<int> check = sigma;
  std::sort(check.begin(), check.end());
  for (int k = 0; k < r; ++k)
    if (check[k] != k + 1) throw std::invalid_argument("sigma is not a permutation");
  std::vector<int> out = d;
  if (r == m) {
    for (int p = 0; p < m; ++p) out[p] = d[sigma[p] - 1];
    return out;
  }
  if (r != m / 2) throw std::invalid_argument("sigma must act on all blocks or on one half");
  for (int p = 0; p < r; ++p) {
    out[p] = d[sigma[p] - 1];
    out[m - 1 - p] = d[m - sigma[p]];
  }
  return out;
}

std::vector<int> canonical_permutation(const ParabolicSpec& spec) {
  int r = spec.kind().is_special_linear() ? spec.block_count() : spec.half();
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 1);
  if (spec.kind().is_special_linear()) return sigma;
  const auto& d = spec.blocks();
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return d[a - 1] < d[b - 1]; });
  return sigma;
}

}  // namespace richardson
