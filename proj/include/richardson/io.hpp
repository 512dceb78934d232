#pragma once

#include "richardson/richardson.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace richardson::io {

using Json = nlohmann::json;

// Matrix: {"rows","cols","entries":[[i,j,v],...]}, 1-based, sorted.
Json to_json(const ExactMatrix& m);
// Diagram: {"columns","labels","edges","branched"}; labels is "paper" for
// top-down labeling and "paper-mirrored" when the last half of the columns
// is labeled bottom-up.
Json to_json(const LineDiagram& d);
Json to_json(const Partition& p);
Json to_json(const SupportData& s);
Json to_json(const Report& r);
Json to_json(const std::vector<Report>& reports);

// Throw Error(ParseError) on malformed input.
ExactMatrix matrix_from_json(const Json& j);
LineDiagram diagram_from_json(const Json& j);
std::vector<int> parse_int_list(const std::string& text);  // "3,1,2,3"

std::string dump(const Json& j);  // two-space indent, trailing newline

std::string csv_header();
std::string csv_row(const Report& r);
std::string to_csv(const std::vector<Report>& reports);

// Counterpart lines (i + j > N + 1) are drawn dashed when mirror is set.
std::string to_dot(const LineDiagram& d, bool mirror);
// Grid of vertex labels; lines within one row are drawn in place ('-' or
// '.' for counterparts), the rest are listed under the grid.
std::string to_ascii(const LineDiagram& d, bool mirror);

std::string matrix_terms(const ExactMatrix& m);  // "E(1,2) + E(2,5) - E(5,6)"
std::string to_text(const Report& r);

}  // namespace richardson::io
