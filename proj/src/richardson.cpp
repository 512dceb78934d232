#include "richardson/richardson.hpp"

#include "richardson/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

namespace richardson {

bool is_richardson(const ExactMatrix& m, const ParabolicSpec& spec) {
  if (m.rows() != spec.size() || m.cols() != spec.size() || !in_nilradical(spec, m))
    throw Error(ErrorCode::NotInNilradical, "element is not in the nilradical of " + spec.key());
  bool by_centralizer =
      centralizer_dimension_direct(m, spec.kind()) == levi_dimension(spec);
  std::vector<SparseRow> image;
  for (const auto& b : parabolic_basis(spec)) image.push_back(flatten(commutator(m, b)));
  bool by_image = rank_of_rows(std::move(image)) == nilradical_dimension(spec);
  if (by_centralizer != by_image)
    throw Error(ErrorCode::InternalDisagreement, "centralizer and ad-image tests differ for " +
                                                     spec.key());
  return by_centralizer;
}

Partition predicted_dual_partition(const ParabolicSpec& spec) {
  const auto& d = spec.blocks();
  if (spec.kind().is_special_linear()) return Partition(d);
  Classification cls = classify_simple(spec);
  if (!cls.simple()) throw Error(ErrorCode::NotSimpleSpec, spec.key() + ": " + cls.reason);
  bool sp = spec.kind().is_symplectic();
  int c = spec.is_type_b() ? spec.center() : 0;
  std::vector<int> parts;
  for (int k = 0; k < spec.half(); ++k) {
    int x = d[k];
    bool odd = x % 2 == 1;
    bool split;
    if (spec.is_type_a())
      split = !sp && odd;
    else if (sp)
      split = odd && x < c;
    else if (c % 2 == 1)
      split = !odd && x > c;
    else
      split = odd && x > c;
    if (split) {
      if (x > 1) parts.push_back(x - 1);
      parts.push_back(x + 1);
    } else {
      parts.push_back(x);
      parts.push_back(x);
    }
  }
  if (c > 0) parts.push_back(c);
  return Partition(std::move(parts));
}

int s_bound(const std::vector<int>& d) {
  int m = static_cast<int>(d.size());
  int best = 0;
  for (int a = 1; a + 1 < m; ++a) {
    int peak = 0;
    for (int b = a; b + 1 < m; ++b) {
      peak = std::max(peak, d[b]);
      if (peak >= d[a - 1]) break;
      if (peak < d[b + 1]) best = std::max(best, b - a + 1);
    }
  }
  return 1 + best;
}

std::vector<int> root_of_position(const AlgebraKind& kind, int i, int j) {
  int n = kind.size();
  if (kind.is_special_linear()) {
    std::vector<int> v(n, 0);
    v[i] += 1;
    v[j] -= 1;
    return v;
  }
  int half = n / 2;
  std::vector<int> v(half, 0);
  auto weight = [&](int k, int sign) {
    if (k < half)
      v[k] += sign;
    else if (k >= n - half)
      v[n - 1 - k] -= sign;
  };
  weight(i, 1);
  weight(j, -1);
  return v;
}

bool is_root(const AlgebraKind& kind, const std::vector<int>& v) {
  std::vector<int> nz;
  for (int x : v)
    if (x != 0) nz.push_back(x);
  if (kind.is_special_linear()) return nz.size() == 2 && nz[0] + nz[1] == 0 && std::abs(nz[0]) == 1;
  if (nz.size() == 2) return std::abs(nz[0]) == 1 && std::abs(nz[1]) == 1;
  if (nz.size() != 1) return false;
  if (std::abs(nz[0]) == 2) return kind.is_symplectic();
  return std::abs(nz[0]) == 1 && kind.family() == Family::OrthogonalOdd;
}

SupportData support(const ExactMatrix& m, const ParabolicSpec& spec) {
  if (m.rows() != spec.size() || m.cols() != spec.size() || !in_nilradical(spec, m))
    throw Error(ErrorCode::NotInNilradical, "support outside the nilradical of " + spec.key());
  const AlgebraKind& kind = spec.kind();
  SupportData out;
  std::map<std::pair<int, int>, RootVector> orbits;
  for (const auto& [pos, v] : m.entries()) {
    auto [i, j] = pos;
    out.positions.push_back({i, j, v > 0 ? 1 : -1});
    std::pair<int, int> key = pos;
    if (!kind.is_special_linear()) key = std::min(pos, std::pair(kind.mirror(j), kind.mirror(i)));
    auto [it, fresh] = orbits.try_emplace(key);
    if (fresh) {
      it->second.root = root_of_position(kind, i, j);
      it->second.grade = grade_of_entry(spec, i, j);
    }
    it->second.positions.push_back(pos);
  }
  for (auto& entry : orbits) {
    out.max_grade = std::max(out.max_grade, entry.second.grade);
    out.root_vectors.push_back(std::move(entry.second));
  }
  const auto& roots = out.root_vectors;
  for (std::size_t a = 0; a < roots.size() && out.is_simple_system; ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      std::vector<int> diff(roots[a].root.size());
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = roots[a].root[k] - roots[b].root[k];
      if (is_root(kind, diff)) {
        out.is_simple_system = false;
        break;
      }
    }
  return out;
}

namespace {

struct Component {
  char type;
  int rank;
};

std::string join_components(std::vector<Component> parts) {
  std::erase_if(parts, [](const Component& c) { return c.rank == 0; });
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end(), [](const Component& a, const Component& b) {
    return a.rank != b.rank ? a.rank > b.rank : a.type < b.type;
  });
  std::string out;
  for (const auto& c : parts) {
    if (!out.empty()) out += '+';
    out += c.type;
    out += std::to_string(c.rank);
  }
  return out;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += 1LL * a[k] * b[k];
  return s;
}

Component classify_component(const AlgebraKind& kind, const std::vector<std::vector<int>>& roots) {
  int k = static_cast<int>(roots.size());
  if (k == 1) return {'A', 1};
  std::vector<std::vector<long long>> cartan(k, std::vector<long long>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) cartan[a][b] = 2 * dot(roots[a], roots[b]) / dot(roots[b], roots[b]);
  bool double_bond = false, triple_bond = false, fork = false;
  for (int a = 0; a < k; ++a) {
    int degree = 0;
    for (int b = 0; b < k; ++b) {
      if (a == b || cartan[a][b] == 0) continue;
      ++degree;
      long long bond = cartan[a][b] * cartan[b][a];
      double_bond |= bond == 2;
      triple_bond |= bond == 3;
    }
    fork |= degree >= 3;
  }
  if (triple_bond) return {'G', k};
  if (double_bond) {
    if (k == 2) return {kind.is_symplectic() ? 'C' : 'B', 2};
    long long longest = 0;
    for (const auto& r : roots) longest = std::max(longest, dot(r, r));
    int long_roots = static_cast<int>(std::count_if(
        roots.begin(), roots.end(), [&](const auto& r) { return dot(r, r) == longest; }));
    return {long_roots == 1 ? 'C' : 'B', k};
  }
  return {fork ? 'D' : 'A', k};
}

}  // namespace

std::string bala_carter_label(const ExactMatrix& m, const ParabolicSpec& spec) {
  SupportData data = support(m, spec);
  if (!data.is_simple_system)
    throw Error(ErrorCode::NotSimpleSystem, "support of the element is not a simple system");
  int k = static_cast<int>(data.root_vectors.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (dot(data.root_vectors[a].root, data.root_vectors[b].root) != 0) parent[find(a)] = find(b);
  std::map<int, std::vector<std::vector<int>>> groups;
  for (int a = 0; a < k; ++a) groups[find(a)].push_back(data.root_vectors[a].root);
  std::vector<Component> parts;
  for (const auto& [root, members] : groups) parts.push_back(classify_component(spec.kind(), members));
  return join_components(std::move(parts));
}

std::string chain_label(const LineDiagram& d, const ParabolicSpec& spec) {
  int n = spec.size();
  std::vector<Component> parts;
  for (const auto& chain : chains(d)) {
    int v = static_cast<int>(chain.size());
    if (spec.kind().is_special_linear()) {
      parts.push_back({'A', v - 1});
      continue;
    }
    int mirror_first = n + 1 - chain.back();
    if (chain.front() == mirror_first) {
      int j = spec.kind().is_symplectic() ? v / 2 : (v - 1) / 2;
      parts.push_back({j == 1 ? 'A' : (spec.kind().is_symplectic() ? 'C' : 'B'), j});
    } else if (chain.front() < mirror_first) {
      parts.push_back({'A', v - 1});
    }
  }
  return join_components(std::move(parts));
}

namespace {

using Orbit = std::vector<LineDiagram::Edge>;

std::vector<Orbit> candidate_orbits(const ParabolicSpec& spec, const LineDiagram& base) {
  int n = spec.size();
  bool sl = spec.kind().is_special_linear();
  std::set<LineDiagram::Edge> seen = base.edges();
  std::vector<Orbit> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (spec.block_of(i - 1) >= spec.block_of(j - 1) || seen.count({i, j})) continue;
      LineDiagram::Edge e{i, j}, partner{n + 1 - j, n + 1 - i};
      seen.insert(e);
      if (sl) {
        out.push_back({e});
      } else if (partner == e) {
        if (spec.kind().is_symplectic()) out.push_back({e});
      } else {
        seen.insert(partner);
        out.push_back({e, partner});
      }
    }
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order until visit returns true.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) return false;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

BranchResult branch_search(const ParabolicSpec& spec, int budget) {
  LineDiagram base = simple_construction(spec);
  std::vector<Orbit> candidates = candidate_orbits(spec, base);
  long long target = levi_dimension(spec);
  long long tried = 0;
  std::optional<BranchResult> found;
  for (int k = 0; k <= budget && !found; ++k) {
    for_each_combination(static_cast<int>(candidates.size()), k, [&](const std::vector<int>& pick) {
      ++tried;
      std::set<LineDiagram::Edge> edges = base.edges();
      for (int c : pick) edges.insert(candidates[c].begin(), candidates[c].end());
      LineDiagram d(spec.blocks(), base.labeling(), std::move(edges));
      ExactMatrix m = realize(d, spec);
      if (!in_nilradical(spec, m)) return false;
      if (centralizer_dimension_formula(jordan_partition(m), spec.kind()) != target) return false;
      if (!is_richardson(m, spec)) return false;
      found = BranchResult{std::move(d), k, tried};
      return true;
    });
  }
  if (!found)
    throw Error(ErrorCode::Exhausted, spec.key() + ": no witness with at most " +
                                          std::to_string(budget) + " extra line pairs");
  return *found;
}

ExactMatrix random_nilradical_element(const ParabolicSpec& spec, std::mt19937_64& rng) {
  ExactMatrix out = ExactMatrix::square(spec.size());
  for (const auto& b : nilradical_basis(spec)) {
    int coefficient = static_cast<int>(rng() % 7) - 3;
    if (coefficient != 0) out = out + b.scaled(coefficient);
  }
  return out;
}

long long random_centralizer_minimum(const ParabolicSpec& spec, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  long long best = algebra_dimension(spec.kind());
  for (int s = 0; s < samples; ++s)
    best = std::min(best, centralizer_dimension_direct(random_nilradical_element(spec, rng), spec.kind()));
  return best;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Richardson: return "richardson";
    case Status::Branched: return "branched";
    case Status::Exhausted: return "exhausted";
    case Status::Failed: return "failed";
  }
  return "failed";
}

Report make_report(const ParabolicSpec& spec, const LineDiagram& d, Status status, int extra_pairs) {
  ExactMatrix m = realize(d, spec);
  Partition partition = jordan_partition(m);
  Classification cls = classify_simple(spec);
  SupportData data = support(m, spec);
  bool richardson = is_richardson(m, spec);
  std::string label = data.is_simple_system ? bala_carter_label(m, spec) : "n/a";
  std::optional<std::string> by_chains;
  if (!d.branched() && (spec.kind().is_special_linear() || spec.is_type_b()))
    by_chains = chain_label(d, spec);
  if (!richardson && status != Status::Exhausted) status = Status::Failed;
  return Report{
      spec,
      d,
      m,
      partition,
      dual_partition(partition),
      cls.simple() ? std::optional(predicted_dual_partition(spec)) : std::nullopt,
      centralizer_dimension_formula(partition, spec.kind()),
      centralizer_dimension_direct(m, spec.kind()),
      levi_dimension(spec),
      nilradical_dimension(spec),
      richardson,
      cls,
      s_bound(spec.blocks()),
      std::move(data),
      label,
      by_chains,
      canonical_permutation(spec),
      extra_pairs,
      status,
  };
}

Report richardson_element(const ParabolicSpec& spec, const ElementOptions& options) {
  Classification cls = classify_simple(spec);
  if (cls.simple()) {
    LineDiagram d = spec.kind().is_special_linear() ? horizontal_diagram(spec.blocks())
                    : spec.is_type_a()              ? even_diagram(spec)
                                                    : odd_diagram(spec);
    return make_report(spec, d, Status::Richardson);
  }
  BranchResult found = branch_search(spec, options.budget);
  return make_report(spec, found.diagram, Status::Branched, found.extra_pairs);
}

namespace {

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions(total, prefix, out);
  return out;
}

}  // namespace

std::vector<ParabolicSpec> enumerate_specs(const std::string& family, int n_max) {
  std::vector<ParabolicSpec> out;
  int start = family == "sl" || family == "sp" ? 2 : 3;
  for (int n = start; n <= n_max; ++n) {
    if (family == "sp" && n % 2) continue;
    AlgebraKind kind = AlgebraKind::from_token(family, n);
    std::vector<std::vector<int>> vectors;
    if (family == "sl") {
      vectors = compositions(n);
    } else {
      for (int c = 0; c <= n; ++c) {
        if ((n - c) % 2 || (family == "sp" && c % 2)) continue;
        for (auto half : compositions((n - c) / 2)) {
          std::vector<int> d = half;
          if (c > 0) d.push_back(c);
          d.insert(d.end(), half.rbegin(), half.rend());
          vectors.push_back(std::move(d));
        }
      }
    }
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    for (const auto& d : vectors) out.push_back(validate_spec(kind, d));
  }
  return out;
}

std::vector<Report> sweep(const std::string& family, int n_max, int budget) {
  std::vector<ParabolicSpec> specs = enumerate_specs(family, n_max);
  std::vector<std::optional<Report>> slots(specs.size());
  std::vector<std::exception_ptr> failures(specs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) {
      try {
        try {
          slots[k] = richardson_element(specs[k], {budget});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Exhausted) throw;
          slots[k] = make_report(specs[k], simple_construction(specs[k]), Status::Exhausted);
        }
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  std::vector<Report> out;
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace richardson
