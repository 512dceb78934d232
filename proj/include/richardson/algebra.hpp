#pragma once

#include "richardson/linalg.hpp"

#include <string>
#include <vector>

// Matrix indices throughout the library are 0-based. Diagram vertex labels
// are 1-based, so label k corresponds to row/column k-1.

namespace richardson {

enum class Family { SpecialLinear, Symplectic, OrthogonalEven, OrthogonalOdd };

class AlgebraKind {
 public:
  // Throws InvalidSize when the parity of size does not fit the family.
  AlgebraKind(Family family, int size);

  // "sl9", "sp6", "so8": family token followed by N.
  static AlgebraKind parse(const std::string& text);
  // Token sl|sp|so plus N; picks OrthogonalEven/Odd from the parity of N.
  static AlgebraKind from_token(const std::string& token, int size);

  Family family() const { return family_; }
  int size() const { return size_; }
  bool is_special_linear() const { return family_ == Family::SpecialLinear; }
  bool is_symplectic() const { return family_ == Family::Symplectic; }
  bool is_orthogonal() const {
    return family_ == Family::OrthogonalEven || family_ == Family::OrthogonalOdd;
  }
  // Index of the mirror row/column with respect to the antidiagonal.
  int mirror(int i) const { return size_ - 1 - i; }

  std::string token() const;  // "sl", "sp" or "so"
  std::string name() const;   // token followed by size

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;

 private:
  Family family_;
  int size_;
};

class ParabolicSpec {
 public:
  const AlgebraKind& kind() const { return kind_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int size() const { return kind_.size(); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  // Half length r for sp/so specs.
  int half() const { return block_count() / 2; }
  bool is_type_a() const { return !kind_.is_special_linear() && block_count() % 2 == 0; }
  bool is_type_b() const { return !kind_.is_special_linear() && block_count() % 2 == 1; }
  // Middle block length of a type (b) spec.
  int center() const { return blocks_[half()]; }
  // Block column (0-based) holding matrix index i.
  int block_of(int i) const { return block_index_.at(i); }

  std::string key() const;  // e.g. "sp6:1,2,2,1"

  friend bool operator==(const ParabolicSpec& a, const ParabolicSpec& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  friend ParabolicSpec validate_spec(const AlgebraKind& kind, const std::vector<int>& blocks);
  ParabolicSpec(AlgebraKind kind, std::vector<int> blocks);

  AlgebraKind kind_;
  std::vector<int> blocks_;
  std::vector<int> block_index_;
};

ParabolicSpec validate_spec(const AlgebraKind& kind, const std::vector<int>& blocks);

long long algebra_dimension(const AlgebraKind& kind);
long long levi_dimension(const ParabolicSpec& spec);
long long nilradical_dimension(const ParabolicSpec& spec);

bool is_member(const AlgebraKind& kind, const ExactMatrix& m);
bool in_nilradical(const ParabolicSpec& spec, const ExactMatrix& m);
int grade_of_entry(const ParabolicSpec& spec, int i, int j);

// Each element is supported on one mirror orbit of positions (or is
// E_ii - E_{i+1,i+1} for sl), so every element is homogeneous in grade.
std::vector<ExactMatrix> algebra_basis(const AlgebraKind& kind);

// Basis elements of the parabolic (grade >= 0) or the nilradical (grade > 0).
std::vector<ExactMatrix> parabolic_basis(const ParabolicSpec& spec);
std::vector<ExactMatrix> nilradical_basis(const ParabolicSpec& spec);

}  // namespace richardson
