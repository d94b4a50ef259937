#include <doctest.h>

#include <cmath>
#include <random>

#include "germdeform/error.hpp"
#include "germdeform/io.hpp"
#include "helpers.hpp"

using namespace germdeform;

TEST_CASE("number formatting") {
  CHECK(dump_json(json(0.1)) == "0.1\n");
  CHECK(dump_json(json(-0.0)) == "0\n");
  CHECK(dump_json(json(1.0 / 3.0)) == "0.333333333333333\n");
  CHECK(dump_json(json(std::nan(""))) == "null\n");
  CHECK(dump_json(json::array({1, 2.5})) == "[1, 2.5]\n");
}

TEST_CASE("keys come out sorted") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  CHECK(dump_json(j) == "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
}

TEST_CASE("complex numbers") {
  CHECK(complex_from_json(json::parse("[1.5, -2]")) == cplx(1.5, -2));
  CHECK(complex_from_json(json(3)) == cplx(3, 0));
  CHECK_THROWS_AS(complex_from_json(json::parse("[1, 2, 3]")), Error);
}

TEST_CASE("germ parsing") {
  auto g = germ_from_json(json::parse(R"({"terms": [[0, 3, 1, 0], [2, 0, -1]]})"));
  CHECK(g.r == 4);
  auto h = germ_from_json(json::parse(R"({"terms": [[0, 3, 1, 0], [2, 0, -1]]})"), 40);
  CHECK(h.order == 40);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"terms": []})")), Error);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"terms": [[0.5, 3, 1]]})")), Error);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"nope": 1})")), Error);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"terms": [[0, 3, 1, 0], [2, 0, -1]]})"), 200), Error);
}

TEST_CASE("F terms") {
  auto F = tripoly_from_json(json::parse("[[0, 3, 0, 1], [2, 0, 0, -1], [0, 0, 1, 0.5, 0.25]]"));
  CHECK(std::abs(F.eval(0.0, 1.0, 2.0) - cplx(2.0, 0.5)) < 1e-15);
}

TEST_CASE("fiber report round trip is byte identical") {
  auto fam = build_family(normalize_germ(th::pure(3, 2)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    auto rep = fiber_classification(fam, random_parameter(rng, 4, fam.param_box));
    const std::string a = dump_json(fiber_report_to_json(rep));
    const std::string b = dump_json(fiber_report_to_json(fiber_report_from_json(json::parse(a))));
    CHECK(a == b);
  }
}

TEST_CASE("analyze output") {
  auto g = normalize_germ(th::pure(3, 2));
  auto j = analyze_to_json(g, analyze_quotient(g));
  CHECK(j["r"] == 4);
  CHECK(j["basis"] == json::array({"1", "x", "y", "x*y"}));
}
