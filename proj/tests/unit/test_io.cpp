#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "nilrig/families.hpp"
#include "nilrig/io.hpp"
#include "nilrig/random.hpp"

using namespace nilrig;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nilrig_test_" + name)).string();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse a bracket file") {
    const AlgebraFile f = parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": {"3": "1"}}]})");
    CHECK(f.algebra == heisenberg(1));
    CHECK(f.basis.empty());
    const AlgebraFile named =
        parse_algebra_text(R"({"dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 2, "v": {"1": "4/6", "2": 3}}]})");
    CHECK(named.basis == std::vector<std::string>{"a", "b"});
    CHECK(named.algebra.constant(0, 1, 0) == Rational(2, 3));
    CHECK(named.algebra.constant(0, 1, 1) == 3);
  }

  TEST_CASE("errors carry context") {
    CHECK_THROWS_WITH_AS(parse_algebra_text("{\"dim\": 3,\n  \"brackets\": [}", "bad.json"),
                         doctest::Contains("bad.json:2:"), FormatError);
    CHECK_THROWS_WITH_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 2, "j": 2, "v": {"1": "1"}}]})", "x"),
                         doctest::Contains("brackets[0]"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 2, "j": 1, "v": {"1": "1"}}]})"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "v": {"1": "1"}}]})"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": {"0": "1"}}]})"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": {"1": "1/0"}}]})"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": {}},
                                                                 {"i": 1, "j": 2, "v": {}}]})"),
                    FormatError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"brackets": []})"), FormatError);
    CHECK_THROWS_AS(parse_algebra_text("[]"), FormatError);
    CHECK_THROWS_AS(read_algebra_file(temp_path("does_not_exist.json")), FormatError);
  }

  TEST_CASE("round trips") {
    const std::string path = temp_path("rigid7.json");
    write_algebra(rigid_3step_7(), path);
    CHECK(parse_algebra(path) == rigid_3step_7());
    std::remove(path.c_str());

    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
      LieAlgebra g = random_nilpotent(rng, 2 + rng.index(6), 3);
      // Non-integer constants too.
      if (g.dim() >= 3) g.add_to_bracket(0, 1, 2, Rational(rng.uniform(-5, 5)) / Rational(rng.uniform(1, 7)));
      const std::string text = algebra_to_text(g);
      const LieAlgebra back = parse_algebra_text(text).algebra;
      CHECK(back == g);
      CHECK(algebra_to_text(back) == text);
    }
  }

  TEST_CASE("canonical ordering") {
    const std::string messy =
        R"({"dim": 4, "brackets": [{"i": 2, "j": 3, "v": {"4": "2/4"}}, {"i": 1, "j": 2, "v": {"4": "1", "3": "-6/3"}}]})";
    const std::string text = algebra_to_text(parse_algebra_text(messy).algebra);
    CHECK(text.find("\"1/2\"") != std::string::npos);
    CHECK(text.find("\"-2\"") != std::string::npos);
    CHECK(text.find("\"i\": 1") < text.find("\"i\": 2"));
    CHECK(text.find("\"3\"") < text.find("\"4\""));
    CHECK(text.back() == '\n');
  }

  TEST_CASE("cochains share the format") {
    Rng rng(72);
    for (int t = 0; t < 10; ++t) {
      const Cochain phi = random_cochain(rng, 5, 2, 4);
      CHECK(parse_cochain_text(cochain_to_text(phi)) == phi);
    }
    const std::string path = temp_path("phi.json");
    const Cochain phi = random_cochain(rng, 4, 2, 3);
    write_cochain(phi, path);
    CHECK(parse_cochain(path) == phi);
    std::remove(path.c_str());
  }
}
