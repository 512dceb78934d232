#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <utility>
#include <vector>

namespace richardson {

using Integer = boost::multiprecision::cpp_int;

// Sparse integer matrix. Indices are 0-based; zero entries are never stored.
class ExactMatrix {
 public:
  using Position = std::pair<int, int>;

  ExactMatrix(int rows, int cols);
  static ExactMatrix square(int n) { return ExactMatrix(n, n); }
  static ExactMatrix identity(int n);
  static ExactMatrix unit(int n, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Position, Integer>& entries() const { return entries_; }

  Integer at(int i, int j) const;
  void set(int i, int j, const Integer& value);
  void add(int i, int j, const Integer& value);

  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator-(const ExactMatrix& other) const;
  ExactMatrix scaled(const Integer& factor) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_index(int i, int j) const;

  int rows_;
  int cols_;
  std::map<Position, Integer> entries_;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix power(const ExactMatrix& a, int k);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

// Rank over Q by fraction-free elimination. Rows are consumed.
int rank_of_rows(std::vector<SparseRow> rows);

int rank_exact(const ExactMatrix& m);

// Row-major flattening of a square matrix into coordinates i*n + j.
SparseRow flatten(const ExactMatrix& m);

}  // namespace richardson
