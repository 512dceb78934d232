#include "richardson/linalg.hpp"

#include "richardson/error.hpp"

#include <string>

namespace richardson {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorCode::ShapeMismatch, "negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::unit(int n, int i, int j) {
  ExactMatrix m(n, n);
  m.set(i, j, 1);
  return m;
}

void ExactMatrix::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
    throw Error(ErrorCode::ShapeMismatch, "index (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") out of range");
}

Integer ExactMatrix::at(int i, int j) const {
  check_index(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

void ExactMatrix::set(int i, int j, const Integer& value) {
  check_index(i, j);
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

void ExactMatrix::add(int i, int j, const Integer& value) {
  if (value == 0) return;
  check_index(i, j);
  auto [it, inserted] = entries_.try_emplace({i, j}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::ShapeMismatch, "sum of differently shaped matrices");
  ExactMatrix out = *this;
  for (const auto& [pos, v] : other.entries_) out.add(pos.first, pos.second, v);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
  return *this + other.scaled(-1);
}

ExactMatrix ExactMatrix::scaled(const Integer& factor) const {
  ExactMatrix out(rows_, cols_);
  if (factor == 0) return out;
  for (const auto& [pos, v] : entries_) out.entries_[pos] = v * factor;
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  std::vector<std::vector<std::pair<int, const Integer*>>> b_rows(b.rows());
  for (const auto& [pos, v] : b.entries()) b_rows[pos.first].push_back({pos.second, &v});
  ExactMatrix out(a.rows(), b.cols());
  for (const auto& [pos, v] : a.entries())
    for (const auto& [col, w] : b_rows[pos.second]) out.add(pos.first, col, v * *w);
  return out;
}

ExactMatrix power(const ExactMatrix& a, int k) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of non-square matrix");
  ExactMatrix out = ExactMatrix::identity(a.rows());
  for (int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return multiply(a, b) - multiply(b, a);
}

namespace {

void normalize(SparseRow& row) {
  Integer g = 0;
  for (const auto& entry : row) {
    g = gcd(g, abs(entry.second));
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& entry : row) entry.second /= g;
}

// a*row - b*pivot where a, b cancel the shared leading column.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  Integer g = gcd(row.front().second, pivot.front().second);
  Integer a = pivot.front().second / g;
  Integer b = row.front().second / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int rank_of_rows(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize(row);
        int lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = eliminate(row, it->second);
      if (!row.empty()) normalize(row);
    }
  }
  return static_cast<int>(pivots.size());
}

int rank_exact(const ExactMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (const auto& [pos, v] : m.entries()) rows[pos.first].emplace_back(pos.second, v);
  return rank_of_rows(std::move(rows));
}

SparseRow flatten(const ExactMatrix& m) {
  SparseRow out;
  out.reserve(m.entries().size());
  for (const auto& [pos, v] : m.entries()) out.emplace_back(pos.first * m.cols() + pos.second, v);
  return out;
}

}  // namespace richardson
