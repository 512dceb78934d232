#include "richardson/algebra.hpp"

#include "richardson/error.hpp"

#include <cctype>
#include <numeric>

namespace richardson {

AlgebraKind::AlgebraKind(Family family, int size) : family_(family), size_(size) {
  if (size < 1) throw Error(ErrorCode::InvalidSize, "matrix size must be positive");
  bool even = size % 2 == 0;
  if ((family == Family::Symplectic || family == Family::OrthogonalEven) && !even)
    throw Error(ErrorCode::InvalidSize, token() + " needs an even size, got " + std::to_string(size));
  if (family == Family::OrthogonalOdd && even)
    throw Error(ErrorCode::InvalidSize, "odd orthogonal family needs an odd size");
}

AlgebraKind AlgebraKind::from_token(const std::string& token, int size) {
  if (token == "sl") return AlgebraKind(Family::SpecialLinear, size);
  if (token == "sp") return AlgebraKind(Family::Symplectic, size);
  if (token == "so")
    return AlgebraKind(size % 2 == 0 ? Family::OrthogonalEven : Family::OrthogonalOdd, size);
  throw Error(ErrorCode::ParseError, "unknown algebra family '" + token + "'");
}

AlgebraKind AlgebraKind::parse(const std::string& text) {
  if (text.size() < 3) throw Error(ErrorCode::ParseError, "bad algebra string '" + text + "'");
  std::string digits = text.substr(2);
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::ParseError, "bad algebra string '" + text + "'");
  if (digits.size() > 6) throw Error(ErrorCode::ParseError, "algebra size too large");
  return from_token(text.substr(0, 2), std::stoi(digits));
}

std::string AlgebraKind::token() const {
  switch (family_) {
    case Family::SpecialLinear: return "sl";
    case Family::Symplectic: return "sp";
    default: return "so";
  }
}

std::string AlgebraKind::name() const { return token() + std::to_string(size_); }

ParabolicSpec::ParabolicSpec(AlgebraKind kind, std::vector<int> blocks)
    : kind_(kind), blocks_(std::move(blocks)) {
  for (int c = 0; c < block_count(); ++c)
    for (int k = 0; k < blocks_[c]; ++k) block_index_.push_back(c);
}

std::string ParabolicSpec::key() const {
  std::string out = kind_.name() + ":";
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    if (c) out += ',';
    out += std::to_string(blocks_[c]);
  }
  return out;
}

ParabolicSpec validate_spec(const AlgebraKind& kind, const std::vector<int>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::SumMismatch, "empty block vector");
  long long sum = 0;
  for (int d : blocks) {
    if (d <= 0) throw Error(ErrorCode::NonPositiveBlock, "block " + std::to_string(d));
    sum += d;
  }
  if (sum != kind.size())
    throw Error(ErrorCode::SumMismatch, "blocks sum to " + std::to_string(sum) + ", expected " +
                                            std::to_string(kind.size()));
  if (!kind.is_special_linear())
    for (std::size_t c = 0; c < blocks.size(); ++c)
      if (blocks[c] != blocks[blocks.size() - 1 - c])
        throw Error(ErrorCode::NotPalindromic, "blocks must read the same in both directions");
  return ParabolicSpec(kind, blocks);
}

long long algebra_dimension(const AlgebraKind& kind) {
  long long n = kind.size();
  switch (kind.family()) {
    case Family::SpecialLinear: return n * n - 1;
    case Family::Symplectic: return n * (n + 1) / 2;
    default: return n * (n - 1) / 2;
  }
}

long long levi_dimension(const ParabolicSpec& spec) {
  const auto& d = spec.blocks();
  if (spec.kind().is_special_linear()) {
    long long s = 0;
    for (long long x : d) s += x * x;
    return s - 1;
  }
  long long s = 0;
  for (int c = 0; c < spec.half(); ++c) s += 1LL * d[c] * d[c];
  if (spec.is_type_b()) {
    long long c = spec.center();
    s += spec.kind().is_symplectic() ? c * (c + 1) / 2 : c * (c - 1) / 2;
  }
  return s;
}

long long nilradical_dimension(const ParabolicSpec& spec) {
  long long diff = algebra_dimension(spec.kind()) - levi_dimension(spec);
  if (diff % 2 != 0) throw Error(ErrorCode::InternalParity, spec.key());
  return diff / 2;
}

namespace {

// M_ij = factor(i,j) * M_{mirror j, mirror i} for members of sp/so.
int mirror_factor(const AlgebraKind& kind, int i, int j) {
  if (kind.is_orthogonal()) return -1;
  int half = kind.size() / 2;
  bool same_side = (i < half) == (j < half);
  return same_side ? -1 : 1;
}

void check_shape(const AlgebraKind& kind, const ExactMatrix& m) {
  if (m.rows() != kind.size() || m.cols() != kind.size())
    throw Error(ErrorCode::ShapeMismatch, "expected a " + std::to_string(kind.size()) +
                                              "x" + std::to_string(kind.size()) + " matrix");
}

}  // namespace

bool is_member(const AlgebraKind& kind, const ExactMatrix& m) {
  check_shape(kind, m);
  if (kind.is_special_linear()) {
    Integer trace = 0;
    for (const auto& [pos, v] : m.entries())
      if (pos.first == pos.second) trace += v;
    return trace == 0;
  }
  for (const auto& [pos, v] : m.entries()) {
    auto [i, j] = pos;
    if (m.at(kind.mirror(j), kind.mirror(i)) * mirror_factor(kind, i, j) != v) return false;
  }
  return true;
}

int grade_of_entry(const ParabolicSpec& spec, int i, int j) {
  return spec.block_of(j) - spec.block_of(i);
}

bool in_nilradical(const ParabolicSpec& spec, const ExactMatrix& m) {
  if (!is_member(spec.kind(), m)) return false;
  for (const auto& entry : m.entries())
    if (grade_of_entry(spec, entry.first.first, entry.first.second) <= 0) return false;
  return true;
}

std::vector<ExactMatrix> algebra_basis(const AlgebraKind& kind) {
  int n = kind.size();
  std::vector<ExactMatrix> basis;
  if (kind.is_special_linear()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) basis.push_back(ExactMatrix::unit(n, i, j));
    for (int i = 0; i + 1 < n; ++i) {
      ExactMatrix h(n, n);
      h.set(i, i, 1);
      h.set(i + 1, i + 1, -1);
      basis.push_back(std::move(h));
    }
    return basis;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int mi = kind.mirror(j), mj = kind.mirror(i);
      if (std::pair(mi, mj) < std::pair(i, j)) continue;
      ExactMatrix b(n, n);
      if (mi == i && mj == j) {
        if (kind.is_orthogonal()) continue;
        b.set(i, j, 1);
      } else {
        b.set(i, j, 1);
        b.set(mi, mj, mirror_factor(kind, mi, mj));
      }
      basis.push_back(std::move(b));
    }
  return basis;
}

namespace {

std::vector<ExactMatrix> graded_part(const ParabolicSpec& spec, int min_grade) {
  std::vector<ExactMatrix> out;
  for (auto& b : algebra_basis(spec.kind())) {
    const auto& [i, j] = b.entries().begin()->first;
    if (grade_of_entry(spec, i, j) >= min_grade) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<ExactMatrix> parabolic_basis(const ParabolicSpec& spec) { return graded_part(spec, 0); }

std::vector<ExactMatrix> nilradical_basis(const ParabolicSpec& spec) { return graded_part(spec, 1); }

}  // namespace richardson
