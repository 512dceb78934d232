#include "richardson/io.hpp"

#include "richardson/error.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace richardson::io {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::ParseError, "matrix entry is not an integer");
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

int read_positive(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 100000)
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a positive integer");
  return j.get<int>();
}

}  // namespace

Json to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& [pos, v] : m.entries())
    entries.push_back({pos.first + 1, pos.second + 1, integer_json(v)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const LineDiagram& d) {
  Json edges = Json::array();
  for (const auto& [i, j] : d.edges()) edges.push_back({i, j});
  return {{"columns", d.columns()},
          {"labels", d.labeling() == Labeling::TopDown ? "paper" : "paper-mirrored"},
          {"edges", edges},
          {"branched", d.branched()}};
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const SupportData& s) {
  Json positions = Json::array();
  for (const auto& e : s.positions) positions.push_back({e.row + 1, e.col + 1, e.sign});
  Json roots = Json::array();
  for (const auto& rv : s.root_vectors) {
    Json where = Json::array();
    for (const auto& [i, j] : rv.positions) where.push_back({i + 1, j + 1});
    roots.push_back({{"positions", where}, {"root", rv.root}, {"grade", rv.grade}});
  }
  return {{"positions", positions},
          {"root_vectors", roots},
          {"max_grade", s.max_grade},
          {"is_simple_system", s.is_simple_system}};
}

Json to_json(const Report& r) {
  return {
      {"spec", {{"algebra", r.spec.kind().name()}, {"blocks", r.spec.blocks()}}},
      {"diagram", to_json(r.diagram)},
      {"matrix", to_json(r.matrix)},
      {"partition", to_json(r.partition)},
      {"dual", to_json(r.dual)},
      {"predicted_dual", r.predicted_dual ? to_json(*r.predicted_dual) : Json(nullptr)},
      {"dim_centralizer",
       {{"formula", r.dim_centralizer_formula}, {"direct", r.dim_centralizer_direct}}},
      {"dim_levi", r.dim_levi},
      {"dim_nilradical", r.dim_nilradical},
      {"is_richardson", r.is_richardson},
      {"simple_case", r.simple_case.label()},
      {"simple_case_reason", r.simple_case.reason},
      {"s_bound", r.s_bound},
      {"grading_bound_holds", r.support.max_grade <= r.s_bound},
      {"support", to_json(r.support)},
      {"bala_carter", r.bala_carter},
      {"chain_label", r.chain_label ? Json(*r.chain_label) : Json(nullptr)},
      {"canonical_permutation", r.canonical_permutation},
      {"extra_line_pairs", r.extra_line_pairs},
      {"status", status_name(r.status)},
  };
}

Json to_json(const std::vector<Report>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
      !j["entries"].is_array())
    throw Error(ErrorCode::ParseError, "matrix needs rows, cols and an entries array");
  int rows = read_positive(j["rows"], "rows");
  int cols = read_positive(j["cols"], "cols");
  ExactMatrix m(rows, cols);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3)
      throw Error(ErrorCode::ParseError, "matrix entry must be [i, j, value]");
    int i = read_positive(e[0], "row index"), c = read_positive(e[1], "column index");
    if (i > rows || c > cols) throw Error(ErrorCode::ParseError, "matrix entry out of range");
    if (!seen.insert({i, c}).second) throw Error(ErrorCode::ParseError, "repeated matrix entry");
    m.set(i - 1, c - 1, integer_from_json(e[2]));
  }
  return m;
}

LineDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array() ||
      !j.contains("edges") || !j["edges"].is_array())
    throw Error(ErrorCode::ParseError, "diagram needs columns and edges arrays");
  std::vector<int> columns;
  for (const auto& c : j["columns"]) columns.push_back(read_positive(c, "column size"));
  if (columns.empty()) throw Error(ErrorCode::ParseError, "diagram has no columns");
  Labeling labeling = Labeling::TopDown;
  if (j.contains("labels")) {
    if (j["labels"] == "paper-mirrored")
      labeling = Labeling::MirroredHalves;
    else if (j["labels"] != "paper")
      throw Error(ErrorCode::ParseError, "labels must be \"paper\" or \"paper-mirrored\"");
  }
  std::set<LineDiagram::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [i, j]");
    int a = read_positive(e[0], "edge label"), b = read_positive(e[1], "edge label");
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  try {
    LineDiagram d(columns, labeling, std::move(edges));
    if (j.contains("branched") && (!j["branched"].is_boolean() || j["branched"] != d.branched()))
      throw Error(ErrorCode::ParseError, "branched flag does not match the edges");
    return d;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad list item '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::ParseError, "bad list item '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_header() {
  return "algebra,blocks,simple_case,status,partition,dual,dim_centralizer,dim_levi,"
         "is_richardson,bala_carter,s_bound,max_grade\n";
}

std::string csv_row(const Report& r) {
  std::ostringstream out;
  out << r.spec.kind().name() << ',' << join(r.spec.blocks(), '-') << ',' << r.simple_case.label()
      << ',' << status_name(r.status) << ',' << join(r.partition.parts(), '-') << ','
      << join(r.dual.parts(), '-') << ',' << r.dim_centralizer_direct << ',' << r.dim_levi << ','
      << (r.is_richardson ? "true" : "false") << ',' << r.bala_carter << ',' << r.s_bound << ','
      << r.support.max_grade << '\n';
  return out.str();
}

std::string to_csv(const std::vector<Report>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) out += csv_row(r);
  return out;
}

namespace {

bool is_counterpart(const LineDiagram& d, bool mirror, int i, int j) {
  return mirror && i + j > d.vertex_count() + 1;
}

}  // namespace

std::string to_dot(const LineDiagram& d, bool mirror) {
  std::ostringstream out;
  out << "graph line_diagram {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t c = 0; c < d.columns().size(); ++c) {
    out << "  { rank=same;";
    for (int row = 0; row < d.columns()[c]; ++row)
      out << ' ' << d.label_of({static_cast<int>(c), row}) << ';';
    out << " }\n";
  }
  for (const auto& [i, j] : d.edges()) {
    out << "  " << i << " -- " << j;
    if (is_counterpart(d, mirror, i, j)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_ascii(const LineDiagram& d, bool mirror) {
  const auto& cols = d.columns();
  int m = static_cast<int>(cols.size());
  int width = static_cast<int>(std::to_string(d.vertex_count()).size());
  const int gap = 3;
  int height = *std::max_element(cols.begin(), cols.end());
  std::vector<std::string> grid(height, std::string(m * width + (m - 1) * gap, ' '));
  auto start = [&](int c) { return c * (width + gap); };
  for (int c = 0; c < m; ++c)
    for (int row = 0; row < cols[c]; ++row) {
      std::string text = std::to_string(d.label_of({c, row}));
      grid[row].replace(start(c) + width - static_cast<int>(text.size()), text.size(), text);
    }
  // Lines that change row or pass over a vertex are listed below the grid.
  std::vector<std::string> other;
  for (const auto& [i, j] : d.edges()) {
    Cell a = d.cell_of(i), b = d.cell_of(j);
    char stroke = is_counterpart(d, mirror, i, j) ? '.' : '-';
    int from = std::min(a.column, b.column), to = std::max(a.column, b.column);
    bool blocked = false;
    for (int c = from + 1; c < to; ++c) blocked = blocked || cols[c] > a.row;
    if (a.row != b.row || blocked) {
      other.push_back(std::to_string(i) + (stroke == '.' ? ".." : "-") + std::to_string(j));
      continue;
    }
    for (int x = start(from) + width; x < start(to); ++x)
      if (grid[a.row][x] == ' ') grid[a.row][x] = stroke;
  }
  std::string out;
  for (auto& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  if (!other.empty()) {
    out += "lines between rows:";
    for (const auto& e : other) out += " " + e;
    out += "\n";
  }
  return out;
}

std::string matrix_terms(const ExactMatrix& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& [pos, v] : m.entries()) {
    bool negative = v < 0;
    Integer mag = negative ? Integer(-v) : v;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += mag.str() + "*";
    out += "E(" + std::to_string(pos.first + 1) + "," + std::to_string(pos.second + 1) + ")";
  }
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  bool mirror = !r.spec.kind().is_special_linear();
  out << r.spec.kind().name() << " blocks " << join(r.spec.blocks(), ',') << " ("
      << r.simple_case.label();
  if (!r.simple_case.reason.empty()) out << ": " << r.simple_case.reason;
  out << ")\n\n" << to_ascii(r.diagram, mirror) << "\n";
  out << "X = " << matrix_terms(r.matrix) << "\n";
  out << "partition (" << join(r.partition.parts(), ',') << "), dual ("
      << join(r.dual.parts(), ',') << ")\n";
  out << "dim g^X = " << r.dim_centralizer_direct << " (formula " << r.dim_centralizer_formula
      << "), dim m = " << r.dim_levi << ", dim n = " << r.dim_nilradical << "\n";
  out << "support max grade " << r.support.max_grade << ", s(d) = " << r.s_bound
      << ", Bala-Carter " << r.bala_carter << "\n";
  if (r.extra_line_pairs > 0) out << "extra line pairs: " << r.extra_line_pairs << "\n";
  out << "status: " << status_name(r.status) << "\n";
  out << "Richardson: " << (r.is_richardson ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace richardson::io
