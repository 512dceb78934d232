// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the tolerance below is pinned at zero.

#include "oracles.hpp"

#include "richardson/error.hpp"
#include "richardson/richardson.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

using namespace richardson;

namespace {

constexpr long long kTolerance = 0;
constexpr int kMinimalitySamples = 100;
constexpr std::uint64_t kSeed = 0;
constexpr int kRandomElements = 200;

bool same(long long a, long long b) { return (a > b ? a - b : b - a) <= kTolerance; }

ParabolicSpec spec(const std::string& algebra, std::vector<int> blocks) {
  return validate_spec(AlgebraKind::parse(algebra), blocks);
}

std::string show(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      pass = false;
      note << what;
    }
  }
};

// Runs f(k) for k in [0, n) on a few threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        f(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Witness matrices collected for the minimality probe.
std::vector<std::pair<ParabolicSpec, ExactMatrix>> witnesses;
std::vector<Report> sweep_reports;

Outcome criterion1() {
  Outcome o;
  auto s = spec("sl9", {3, 1, 2, 3});
  Report r = richardson_element(s);
  ExactMatrix expected =
      oracle::matrix(9, {{1, 4, 1}, {4, 5, 1}, {5, 7, 1}, {2, 6, 1}, {6, 8, 1}, {3, 9, 1}});
  o.require(r.matrix == expected, "X differs from E14+E45+E57+E26+E68+E39");
  o.require(r.partition.parts() == std::vector<int>{4, 3, 2}, "partition " + show(r.partition.parts()));
  o.require(r.dual.parts() == std::vector<int>{3, 3, 2, 1}, "dual " + show(r.dual.parts()));
  o.require(same(r.dim_centralizer_direct, 22) && same(r.dim_centralizer_formula, 22) &&
                same(r.dim_levi, 22),
            "dims " + std::to_string(r.dim_centralizer_direct) + "/" + std::to_string(r.dim_levi));
  o.require(same(oracle::centralizer_dim(s.kind(), r.matrix), 22), "equation oracle disagrees");
  o.require(r.is_richardson, "not Richardson");
  o.note << "X = sum of 6 lines, partition (4,3,2), dual (3,3,2,1), dims 22/22";
  witnesses.push_back({s, r.matrix});
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto s = spec("sp6", {1, 2, 2, 1});
  ExactMatrix x2 = oracle::matrix(6, {{1, 2, 1}, {2, 5, 1}, {3, 4, 1}, {5, 6, -1}});
  ExactMatrix x1 = oracle::matrix(6, {{1, 2, 1}, {2, 4, 1}, {3, 5, 1}, {5, 6, -1}});
  long long d2 = centralizer_dimension_direct(x2, s.kind());
  long long d1 = centralizer_dimension_direct(x1, s.kind());
  o.require(is_richardson(x2, s) && same(d2, 5) && same(levi_dimension(s), 5), "X2 dims " + std::to_string(d2));
  o.require(!is_richardson(x1, s) && same(d1, 7), "X1 dims " + std::to_string(d1));
  o.require(realize(even_diagram(s), s) == x2, "even diagram does not give X2");
  o.note << "X2 dims " << d2 << "/5 Richardson, X1 dims " << d1 << "/5 not";
  witnesses.push_back({s, x2});
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto s = spec("sp6", {1, 1, 2, 1, 1});
  long long start = centralizer_dimension_direct(realize(simple_construction(s), s), s.kind());
  o.require(same(start, 7), "simple-style diagram has centralizer " + std::to_string(start));
  BranchResult found = branch_search(s, 1);
  ExactMatrix x = realize(found.diagram, s);
  long long dim = centralizer_dimension_direct(x, s.kind());
  o.require(same(dim, 5) && same(levi_dimension(s), 5) && is_richardson(x, s),
            "witness centralizer " + std::to_string(dim));
  o.note << "simple-style 7 != 5; branched witness with " << found.extra_pairs
         << " extra orbit, dims " << dim << "/5";
  witnesses.push_back({s, x});
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto s = spec("sp22", {1, 1, 1, 3, 3, 4, 3, 3, 1, 1, 1});
  BranchResult found = branch_search(s, 3);
  ExactMatrix x = realize(found.diagram, s);
  long long dim = centralizer_dimension_direct(x, s.kind());
  o.require(same(dim, 31) && same(levi_dimension(s), 31) && is_richardson(x, s),
            "witness centralizer " + std::to_string(dim) + ", levi " + std::to_string(levi_dimension(s)));
  o.note << "branched witness with " << found.extra_pairs
         << (found.extra_pairs == 1 ? " extra orbit after " : " extra orbits after ") << found.tried
         << " candidates, dims " << dim << "/31";
  witnesses.push_back({s, x});
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto s = spec("so6", {3, 3});
  Report r = richardson_element(s);
  o.require(r.partition.parts() == std::vector<int>{2, 2, 1, 1}, "partition " + show(r.partition.parts()));
  o.require(r.dual.parts() == std::vector<int>{4, 2}, "dual " + show(r.dual.parts()));
  o.require(same(r.dim_centralizer_direct, 9) && same(r.dim_levi, 9) && r.is_richardson,
            "so6 dims " + std::to_string(r.dim_centralizer_direct));
  witnesses.push_back({s, r.matrix});
  auto t = spec("so12", {3, 3, 3, 3});
  ExactMatrix x = realize(simple_construction(t), t);
  long long dim = centralizer_dimension_direct(x, t.kind());
  Partition p = jordan_partition(x);
  o.require(same(dim, 2 * 3 * 3 + 2) && same(levi_dimension(t), 18), "so12 simple-style centralizer " + std::to_string(dim));
  o.require(!classify_simple(t).simple(), "so12 (3,3,3,3) classified simple");
  Report b = richardson_element(t);
  o.require(b.status == Status::Branched && b.is_richardson, "so12 not resolved by branch search");
  o.note << "so6 (2,2,1,1)/(4,2) dims 9/9; so12 simple-style partition " << show(p.parts()) << " dims "
         << dim << " != 18, NotSimple, branched witness with " << b.extra_line_pairs
           << (b.extra_line_pairs == 1 ? " extra orbit" : " extra orbits");
  witnesses.push_back({t, b.matrix});
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (auto [s, want] : {std::pair(spec("so8", {1, 1, 2, 2, 1, 1}), 6LL), std::pair(spec("so9", {2, 2, 1, 2, 2}), 8LL)}) {
    BranchResult found = branch_search(s, 2);
    ExactMatrix x = realize(found.diagram, s);
    long long dim = centralizer_dimension_direct(x, s.kind());
    o.require(same(dim, want) && same(levi_dimension(s), want) && is_richardson(x, s),
              s.key() + " centralizer " + std::to_string(dim));
    o.note << s.key() << " dims " << dim << "/" << want << " (" << found.extra_pairs << " extra) ";
    witnesses.push_back({s, x});
  }
  return o;
}

bool simple_route(const Report& r) { return r.simple_case.simple(); }

Outcome criterion7() {
  Outcome o;
  for (auto [family, n_max] : {std::pair("sl", 8), std::pair("sp", 10), std::pair("so", 10)}) {
    auto reports = sweep(family, n_max, 3);
    sweep_reports.insert(sweep_reports.end(), reports.begin(), reports.end());
  }
  int simple = 0;
  for (const auto& r : sweep_reports) {
    if (!simple_route(r)) continue;
    ++simple;
    o.require(r.is_richardson && r.status == Status::Richardson, r.spec.key() + " not Richardson");
    o.require(r.predicted_dual && r.dual == *r.predicted_dual, r.spec.key() + " dual differs");
    witnesses.push_back({r.spec, r.matrix});
  }
  o.note << simple << " simple specs of " << sweep_reports.size() << " all Richardson with predicted duals";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int checked = 0;
  for (const auto& r : sweep_reports) {
    if (!simple_route(r)) continue;
    ++checked;
    o.require(same(r.dim_centralizer_formula, r.dim_centralizer_direct), r.spec.key());
  }
  std::mt19937_64 rng(kSeed);
  std::vector<ParabolicSpec> pool;
  for (const auto& r : sweep_reports)
    if (r.dim_nilradical > 0) pool.push_back(r.spec);
  std::vector<std::pair<std::size_t, ExactMatrix>> samples;
  for (int k = 0; k < kRandomElements; ++k) {
    std::size_t which = rng() % pool.size();
    samples.push_back({which, random_nilradical_element(pool[which], rng)});
  }
  std::vector<char> ok(samples.size(), 0);
  parallel_for(samples.size(), [&](std::size_t k) {
    const auto& [which, y] = samples[k];
    const AlgebraKind& kind = pool[which].kind();
    ok[k] = centralizer_dimension_formula(jordan_partition(y), kind) ==
            centralizer_dimension_direct(y, kind);
  });
  for (std::size_t k = 0; k < samples.size(); ++k)
    o.require(ok[k], "random element on " + pool[samples[k].first].key());
  o.note << checked << " constructed and " << samples.size() << " random elements agree";
  return o;
}

Outcome criterion9() {
  Outcome o;
  long long checks = 0;
  for (const auto& r : sweep_reports) {
    if (!simple_route(r)) continue;
    ExactMatrix pw = r.matrix;
    for (int k = 1; k <= r.spec.size(); ++k, ++checks) {
      o.require(rank_exact(pw) == count_k_subchains(r.diagram, k), r.spec.key() + " k=" + std::to_string(k));
      pw = multiply(pw, r.matrix);
    }
  }
  o.note << checks << " (diagram, k) pairs";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int checked = 0;
  for (const auto& r : sweep_reports) {
    if (!simple_route(r)) continue;
    ++checked;
    o.require(r.support.max_grade <= r.s_bound,
              r.spec.key() + " grade " + std::to_string(r.support.max_grade) + " > " + std::to_string(r.s_bound));
  }
  auto s = spec("sl9", {3, 1, 2, 3});
  Report r = richardson_element(s);
  o.require(r.support.max_grade == 3 && r.s_bound == 3, "(3,1,2,3) grade/bound");
  o.note << checked << " simple witnesses within s(d); (3,1,2,3) max grade 3 = s(d)";
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto s = spec("sl9", {3, 1, 2, 3});
  std::string a = richardson_element(s).bala_carter;
  auto t = spec("so5", {1, 1, 1, 1, 1});
  std::string b = richardson_element(t).bala_carter;
  o.require(a == "A3+A2+A1", "sl9 label " + a);
  o.require(b == "B2", "so5 label " + b);
  int compared = 0;
  for (const auto& r : sweep_reports) {
    if (!simple_route(r) || !(r.spec.kind().is_special_linear() || r.spec.is_type_b())) continue;
    ++compared;
    o.require(r.chain_label && *r.chain_label == r.bala_carter,
              r.spec.key() + " " + r.bala_carter + " vs " + r.chain_label.value_or("none"));
  }
  o.note << "A3+A2+A1, B2; " << compared << " chain labels equal classifier labels";
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::vector<long long> own(witnesses.size()), best(witnesses.size());
  parallel_for(witnesses.size(), [&](std::size_t k) {
    const auto& [s, x] = witnesses[k];
    own[k] = centralizer_dimension_direct(x, s.kind());
    best[k] = random_centralizer_minimum(s, kMinimalitySamples, kSeed + k);
  });
  for (std::size_t k = 0; k < witnesses.size(); ++k)
    o.require(own[k] <= best[k], witnesses[k].first.key() + " " + std::to_string(own[k]) + " > " +
                                     std::to_string(best[k]));
  o.note << witnesses.size() << " witnesses x " << kMinimalitySamples << " random elements";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"sl9 (3,1,2,3) horizontal diagram", criterion1},
      {"sp6 (1,2,2,1) X2 Richardson, X1 not", criterion2},
      {"sp6 (1,1,2,1,1) branch search", criterion3},
      {"sp22 (1,1,1,3,3,4,3,3,1,1,1) branch search", criterion4},
      {"so6 (3,3) and so12 (3,3,3,3)", criterion5},
      {"so8 (1,1,2,2,1,1) and so9 (2,2,1,2,2) branch search", criterion6},
      {"exhaustive sweep sl<=8, sp<=10, so<=10", criterion7},
      {"centralizer formula vs direct kernel", criterion8},
      {"rank of powers vs subchain counts", criterion9},
      {"grading bound s(d)", criterion10},
      {"Bala-Carter labels", criterion11},
      {"minimality probe", criterion12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.note.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
