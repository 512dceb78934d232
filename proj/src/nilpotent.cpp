#include "richardson/nilpotent.hpp"

#include "richardson/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace richardson {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error(ErrorCode::NonPositiveBlock, "partition part " + std::to_string(p));
  std::sort(parts_.rbegin(), parts_.rend());
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition dual_partition(const Partition& p) {
  std::vector<int> out;
  int largest = p.parts().empty() ? 0 : p.parts().front();
  for (int j = 1; j <= largest; ++j)
    out.push_back(static_cast<int>(
        std::count_if(p.parts().begin(), p.parts().end(), [j](int x) { return x >= j; })));
  return Partition(std::move(out));
}

ExactMatrix realize(const LineDiagram& d, const ParabolicSpec& spec) {
  if (d.columns() != spec.blocks())
    throw Error(ErrorCode::ColumnMismatch, "diagram columns differ from " + spec.key());
  int n = spec.size();
  ExactMatrix m(n, n);
  for (const auto& [i, j] : d.edges()) {
    int sign = 1;
    if (spec.kind().is_symplectic()) {
      sign = i <= n / 2 ? 1 : -1;
    } else if (spec.kind().is_orthogonal()) {
      if (i + j == n + 1)
        throw Error(ErrorCode::NotInAlgebra,
                    "self-paired line " + std::to_string(i) + "-" + std::to_string(j));
      sign = i + j <= n ? 1 : -1;
    }
    m.set(i - 1, j - 1, sign);
  }
  if (!is_member(spec.kind(), m))
    throw Error(ErrorCode::NotInAlgebra, "edge set of " + spec.key() + " is not mirror-closed");
  return m;
}

Partition jordan_partition(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "jordan partition of non-square matrix");
  int n = m.rows();
  // kernel[j] = dim ker M^j
  std::vector<int> kernel{0};
  ExactMatrix pw = m;
  while (kernel.back() < n) {
    if (static_cast<int>(kernel.size()) > n)
      throw Error(ErrorCode::NotNilpotent, "power " + std::to_string(n) + " is nonzero");
    kernel.push_back(n - rank_exact(pw));
    pw = multiply(pw, m);
  }
  int top = static_cast<int>(kernel.size()) - 1;
  std::vector<int> parts;
  for (int s = 1; s <= top; ++s) {
    int after = s < top ? kernel[s + 1] : kernel[s];
    int blocks = 2 * kernel[s] - kernel[s - 1] - after;
    parts.insert(parts.end(), blocks, s);
  }
  return Partition(std::move(parts));
}

long long centralizer_dimension_formula(const Partition& p, const AlgebraKind& kind,
                                        CentralizerConvention convention) {
  if (p.total() != kind.size())
    throw Error(ErrorCode::NonIntegerResult, "partition of " + std::to_string(p.total()) +
                                                 " paired with " + kind.name());
  if (kind.family() != Family::SpecialLinear) {
    // sp needs odd parts paired, so needs even parts paired.
    int unpaired = kind.family() == Family::Symplectic ? 1 : 0;
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    for (auto [x, k] : mult)
      if (x % 2 == unpaired && k % 2)
        throw Error(ErrorCode::NonIntegerResult, "partition not admissible for " + kind.name());
  }
  Partition dual = dual_partition(p);
  long long squares = 0;
  for (long long m : dual.parts()) squares += m * m;
  long long odd = std::count_if(p.parts().begin(), p.parts().end(), [](int x) { return x % 2; });
  switch (kind.family()) {
    case Family::SpecialLinear:
      return convention == CentralizerConvention::GeneralLinear ? squares : squares - 1;
    case Family::Symplectic:
      if ((squares + odd) % 2) throw Error(ErrorCode::NonIntegerResult, "sp centralizer");
      return (squares + odd) / 2;
    default:
      if ((squares - odd) % 2) throw Error(ErrorCode::NonIntegerResult, "so centralizer");
      return (squares - odd) / 2;
  }
}

long long centralizer_dimension_direct(const ExactMatrix& m, const AlgebraKind& kind) {
  if (!is_member(kind, m)) throw Error(ErrorCode::NotInAlgebra, "matrix is not in " + kind.name());
  auto basis = algebra_basis(kind);
  std::vector<SparseRow> rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) rows.push_back(flatten(commutator(m, b)));
  return static_cast<long long>(basis.size()) - rank_of_rows(std::move(rows));
}

}  // namespace richardson
