#pragma once

#include "richardson/algebra.hpp"
#include "richardson/classify.hpp"
#include "richardson/diagram.hpp"
#include "richardson/nilpotent.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace richardson {

// Exact Richardson test: dim g^M = dim m, cross-checked against
// rank ad(M)|p = dim n. Throws NotInNilradical, InternalDisagreement.
bool is_richardson(const ExactMatrix& m, const ParabolicSpec& spec);

// Throws NotSimpleSpec when classify_simple rejects the spec.
Partition predicted_dual_partition(const ParabolicSpec& spec);

// 1 + longest run of entries strictly smaller than both neighbours of the run.
int s_bound(const std::vector<int>& d);

struct SupportEntry {
  int row;  // 0-based
  int col;
  int sign;
};

struct RootVector {
  std::vector<std::pair<int, int>> positions;  // mirror orbit, 0-based
  std::vector<int> root;                       // epsilon coordinates
  int grade;
};

struct SupportData {
  std::vector<SupportEntry> positions;
  std::vector<RootVector> root_vectors;
  int max_grade = 0;
  bool is_simple_system = true;
};

// epsilon coordinates: sl uses e_1..e_N, sp/so use e_1..e_n with index i
// (0-based) mapped to e_{i+1} below the middle and -e_{N-i} above it.
std::vector<int> root_of_position(const AlgebraKind& kind, int i, int j);
bool is_root(const AlgebraKind& kind, const std::vector<int>& v);

SupportData support(const ExactMatrix& m, const ParabolicSpec& spec);

// Dynkin label of the subsystem spanned by the support, e.g. "A3+A2+A1";
// "0" for the zero element. Throws NotSimpleSystem.
std::string bala_carter_label(const ExactMatrix& m, const ParabolicSpec& spec);

// Label read off the chains of a simple diagram: mirror pairs of chains on
// v vertices give A_{v-1}; a self-mirror chain gives B_j (so, 2j+1
// vertices) or C_j (sp, 2j vertices).
std::string chain_label(const LineDiagram& d, const ParabolicSpec& spec);

struct BranchResult {
  LineDiagram diagram;
  int extra_pairs;  // mirror orbits added to the starting diagram
  long long tried;
};

// Adds up to budget mirror orbits of lines to simple_construction(spec), in
// lexicographic order of orbit combinations. Throws Exhausted.
BranchResult branch_search(const ParabolicSpec& spec, int budget);

ExactMatrix random_nilradical_element(const ParabolicSpec& spec, std::mt19937_64& rng);

// Smallest direct centralizer dimension over seeded random elements of the
// nilradical.
long long random_centralizer_minimum(const ParabolicSpec& spec, int samples, std::uint64_t seed);

enum class Status { Richardson, Branched, Exhausted, Failed };
std::string status_name(Status s);

struct Report {
  ParabolicSpec spec;
  LineDiagram diagram;
  ExactMatrix matrix;
  Partition partition;
  Partition dual;
  std::optional<Partition> predicted_dual;
  long long dim_centralizer_formula;
  long long dim_centralizer_direct;
  long long dim_levi;
  long long dim_nilradical;
  bool is_richardson;
  Classification simple_case;
  int s_bound;
  SupportData support;
  std::string bala_carter;                // "n/a" when the support is not a simple system
  std::optional<std::string> chain_label;  // simple diagrams of sl and type (b)
  std::vector<int> canonical_permutation;
  int extra_line_pairs;
  Status status;
};

struct ElementOptions {
  int budget = 3;
};

// Report for a given diagram; status is Failed when it is not Richardson.
Report make_report(const ParabolicSpec& spec, const LineDiagram& d, Status status, int extra_pairs = 0);

// Simple specs use the matching construction; others go to branch search.
// Throws Exhausted when branch search gives up.
Report richardson_element(const ParabolicSpec& spec, const ElementOptions& options = {});

// All valid specs of the family ("sl", "sp", "so") with N <= n_max, ordered
// by N and then by block vector. Exhausted specs are reported, not thrown.
std::vector<ParabolicSpec> enumerate_specs(const std::string& family, int n_max);
std::vector<Report> sweep(const std::string& family, int n_max, int budget);

}  // namespace richardson
