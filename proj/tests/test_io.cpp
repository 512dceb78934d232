#include "oracles.hpp"

#include "richardson/error.hpp"
#include "richardson/io.hpp"

#include <doctest.h>

using namespace richardson;

namespace {

ParabolicSpec spec(const std::string& algebra, std::vector<int> blocks) {
  return validate_spec(AlgebraKind::parse(algebra), blocks);
}

}  // namespace

TEST_CASE("matrix json") {
  ExactMatrix x = oracle::matrix(6, {{5, 6, -1}, {1, 2, 1}, {3, 4, 1}, {2, 5, 1}});
  io::Json j = io::to_json(x);
  CHECK(j.dump() == R"({"cols":6,"entries":[[1,2,1],[2,5,1],[3,4,1],[5,6,-1]],"rows":6})");
  CHECK(io::matrix_from_json(j) == x);
  ExactMatrix big(1, 1);
  big.set(0, 0, Integer(1) << 100);
  CHECK(io::matrix_from_json(io::to_json(big)) == big);
  CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"rows":2,"cols":2,"entries":[[3,1,1]]})")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"rows":2,"entries":[]})")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"rows":2,"cols":2,"entries":[[1,2,"x"]]})")),
                  Error);
}

TEST_CASE("diagram json") {
  LineDiagram d = horizontal_diagram({3, 1, 2, 3});
  io::Json j = io::to_json(d);
  CHECK(j.dump() ==
        R"({"branched":false,"columns":[3,1,2,3],"edges":[[1,4],[2,6],[3,9],[4,5],[5,7],[6,8]],"labels":"paper"})");
  CHECK(io::diagram_from_json(j) == d);
  LineDiagram e = even_diagram(spec("sp6", {1, 2, 2, 1}));
  CHECK(io::to_json(e)["labels"] == "paper-mirrored");
  CHECK(io::diagram_from_json(io::to_json(e)) == e);
  CHECK_THROWS_AS(io::diagram_from_json(io::Json::parse(R"({"columns":[2],"edges":[[1,2]]})")), Error);
  CHECK_THROWS_AS(
      io::diagram_from_json(io::Json::parse(R"({"columns":[1,1],"edges":[[1,2]],"branched":true})")),
      Error);
}

TEST_CASE("report json is byte-stable") {
  auto s = spec("sp6", {1, 1, 2, 1, 1});
  std::string a = io::dump(io::to_json(richardson_element(s)));
  std::string b = io::dump(io::to_json(richardson_element(s)));
  CHECK(a == b);
  io::Json j = io::Json::parse(a);
  CHECK(j["status"] == "branched");
  CHECK(j["dim_centralizer"]["direct"] == 5);
  CHECK(j["is_richardson"] == true);
}

TEST_CASE("csv") {
  auto reports = sweep("sl", 3, 3);
  std::string csv = io::to_csv(reports);
  CHECK(csv.rfind(io::csv_header(), 0) == 0);
  CHECK(csv.find("sl3,1-2,SL,richardson,2-1,2-1,4,4,true,A1,1,1\n") != std::string::npos);
}

TEST_CASE("ascii grid") {
  CHECK(io::to_ascii(horizontal_diagram({3, 1, 2, 3}), false) ==
        "1---4---5---7\n"
        "2-------6---8\n"
        "3-----------9\n");
  std::string edgeless = io::to_ascii(LineDiagram({2, 3}, Labeling::TopDown), false);
  CHECK(edgeless.find('-') == std::string::npos);
  CHECK(edgeless.find('.') == std::string::npos);
  std::string sp = io::to_ascii(even_diagram(spec("sp6", {1, 2, 2, 1})), true);
  CHECK(sp == "1---2---5...6\n"
              "    3---4\n");
}

TEST_CASE("dot export") {
  auto s = spec("sp6", {1, 1, 2, 1, 1});
  LineDiagram d = branch_search(s, 1).diagram;
  std::string dot = io::to_dot(d, true);
  CHECK(dot.rfind("graph line_diagram {", 0) == 0);
  CHECK(dot.find("[style=dashed]") != std::string::npos);
  CHECK(io::to_dot(horizontal_diagram({2, 2}), false).find("dashed") == std::string::npos);
}

TEST_CASE("int lists") {
  CHECK(io::parse_int_list("3,1,2,3") == std::vector<int>{3, 1, 2, 3});
  CHECK_THROWS_AS(io::parse_int_list("3,,1"), Error);
  CHECK_THROWS_AS(io::parse_int_list("3,a"), Error);
  CHECK_THROWS_AS(io::parse_int_list(""), Error);
}
