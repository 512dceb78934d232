#include "oracles.hpp"

#include "richardson/algebra.hpp"
#include "richardson/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

using namespace richardson;

namespace {

ParabolicSpec spec(const std::string& algebra, std::vector<int> blocks) {
  return validate_spec(AlgebraKind::parse(algebra), blocks);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("algebra strings") {
  CHECK(AlgebraKind::parse("sl9").family() == Family::SpecialLinear);
  CHECK(AlgebraKind::parse("so8").family() == Family::OrthogonalEven);
  CHECK(AlgebraKind::parse("so9").family() == Family::OrthogonalOdd);
  CHECK(AlgebraKind::parse("sp6").size() == 6);
  CHECK(code_of([] { AlgebraKind::parse("sp5"); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { AlgebraKind::parse("gl4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { AlgebraKind::parse("sl"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { AlgebraKind::parse("sl4x"); }) == ErrorCode::ParseError);
}

TEST_CASE("validate_spec") {
  CHECK(spec("sl9", {3, 1, 2, 3}).block_count() == 4);
  CHECK(spec("sp6", {1, 2, 2, 1}).is_type_a());
  CHECK(code_of([] { spec("sp6", {1, 2, 3}); }) == ErrorCode::NotPalindromic);
  CHECK(code_of([] { spec("sl5", {6}); }) == ErrorCode::SumMismatch);
  CHECK(code_of([] { spec("sl3", {4, -1}); }) == ErrorCode::NonPositiveBlock);
  CHECK(spec("so9", {2, 2, 1, 2, 2}).center() == 1);
}

TEST_CASE("dimensions") {
  CHECK(algebra_dimension(AlgebraKind::parse("sl9")) == 80);
  CHECK(algebra_dimension(AlgebraKind::parse("sp6")) == 21);
  CHECK(algebra_dimension(AlgebraKind::parse("so8")) == 28);
  CHECK(levi_dimension(spec("sl9", {3, 1, 2, 3})) == 22);
  CHECK(levi_dimension(spec("sp6", {1, 1, 2, 1, 1})) == 5);
  CHECK(levi_dimension(spec("so6", {3, 3})) == 9);
  CHECK(nilradical_dimension(spec("sl9", {3, 1, 2, 3})) == 29);
  CHECK(nilradical_dimension(spec("sp6", {1, 2, 2, 1})) == 8);
  CHECK(nilradical_dimension(spec("sl9", {9})) == 0);
}

TEST_CASE("levi and algebra dimensions agree with the equation oracle") {
  for (const std::string family : {"sl", "sp", "so"})
    for (int n = 2; n <= 7; ++n) {
      if (family == "sp" && n % 2) continue;
      if (family == "so" && n < 3) continue;
      for (const auto& s : enumerate_specs(family, n)) {
        if (s.size() != n) continue;
        CAPTURE(s.key());
        CHECK(levi_dimension(s) == oracle::levi_dim(s));
        CHECK(2 * nilradical_dimension(s) + levi_dimension(s) == algebra_dimension(s.kind()));
      }
    }
}

TEST_CASE("membership") {
  AlgebraKind so6 = AlgebraKind::parse("so6");
  CHECK(is_member(so6, ExactMatrix::square(6)));
  CHECK(is_member(so6, oracle::matrix(6, {{1, 2, 1}, {5, 6, -1}})));
  CHECK_FALSE(is_member(so6, oracle::matrix(6, {{1, 2, 1}})));
  CHECK(code_of([&] { is_member(so6, ExactMatrix::square(5)); }) == ErrorCode::ShapeMismatch);
  AlgebraKind sp6 = AlgebraKind::parse("sp6");
  CHECK(is_member(sp6, oracle::matrix(6, {{1, 2, 1}, {2, 5, 1}, {3, 4, 1}, {5, 6, -1}})));
  CHECK(is_member(AlgebraKind::parse("sl3"), oracle::matrix(3, {{1, 1, 1}, {3, 3, -1}})));
  CHECK_FALSE(is_member(AlgebraKind::parse("sl3"), oracle::matrix(3, {{1, 1, 1}})));
}

TEST_CASE("membership matches the bilinear form on unit matrices and pairs") {
  for (const std::string name : {"sp4", "sp6", "so5", "so6", "so7"}) {
    AlgebraKind kind = AlgebraKind::parse(name);
    int n = kind.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int s : {-1, 1}) {
          ExactMatrix m = ExactMatrix::unit(n, i, j);
          m.add(kind.mirror(j), kind.mirror(i), s);
          CAPTURE(name);
          CHECK(is_member(kind, m) == oracle::member_by_form(kind, m));
          ExactMatrix single = ExactMatrix::unit(n, i, j);
          CHECK(is_member(kind, single) == oracle::member_by_form(kind, single));
        }
  }
}

TEST_CASE("nilradical membership") {
  auto s = spec("sl9", {3, 1, 2, 3});
  ExactMatrix x = oracle::matrix(9, {{1, 4, 1}, {4, 5, 1}, {5, 7, 1}, {2, 6, 1}, {6, 8, 1}, {3, 9, 1}});
  CHECK(in_nilradical(s, x));
  CHECK_FALSE(in_nilradical(s, oracle::matrix(9, {{1, 1, 1}, {2, 2, -1}})));
  auto t = spec("sp6", {1, 2, 2, 1});
  CHECK(in_nilradical(t, oracle::matrix(6, {{1, 2, 1}, {2, 5, 1}, {3, 4, 1}, {5, 6, -1}})));
}

TEST_CASE("grades") {
  auto s = spec("sl9", {3, 1, 2, 3});
  CHECK(grade_of_entry(s, 2, 8) == 3);
  CHECK(grade_of_entry(s, 0, 3) == 1);
  CHECK(grade_of_entry(s, 1, 5) == 2);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) CHECK(grade_of_entry(s, i, j) == -grade_of_entry(s, j, i));
}

TEST_CASE("bases") {
  CHECK(algebra_basis(AlgebraKind::parse("sl2")).size() == 3);
  CHECK(algebra_basis(AlgebraKind::parse("sp2")).size() == 3);
  CHECK(algebra_basis(AlgebraKind::parse("so6")).size() == 15);
  for (const std::string name : {"sl2", "sl4", "sp2", "sp4", "sp6", "so3", "so4", "so5", "so6", "so7", "so8"}) {
    AlgebraKind kind = AlgebraKind::parse(name);
    auto basis = algebra_basis(kind);
    CAPTURE(name);
    CHECK(static_cast<long long>(basis.size()) == algebra_dimension(kind));
    oracle::DenseRows rows;
    for (const auto& b : basis) {
      CHECK(is_member(kind, b));
      CHECK(oracle::member_by_form(kind, b));
      std::vector<oracle::Rational> row(kind.size() * kind.size());
      for (const auto& [pos, v] : b.entries()) row[pos.first * kind.size() + pos.second] = oracle::Rational(v);
      rows.push_back(row);
    }
    CHECK(oracle::dense_rank(rows) == static_cast<int>(basis.size()));
  }
}

TEST_CASE("levi dimension does not depend on the order of the half") {
  for (const std::string family : {"sp", "so"})
    for (const auto& s : enumerate_specs(family, 12)) {
      std::vector<int> sigma(s.half());
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        auto t = validate_spec(s.kind(), permute_blocks(s.blocks(), sigma));
        CHECK(levi_dimension(t) == levi_dimension(s));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}
