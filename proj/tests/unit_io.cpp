// File codecs: loaded fixtures equal their in-code builders, canonical
// writers reproduce canonical files byte for byte, and malformed or
// invalid documents are rejected with the right error category.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/fixtures.hpp"

#include "hly/errors.hpp"
#include "hly/io.hpp"

#include <cstdio>
#include <string>

using namespace hly;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(HLY_SOURCE_DIR) + "/fixtures/" + name;
}

std::string fixture_text(const std::string& name) {
  return read_text_file(fixture_path(name));
}

}  // namespace

TEST_CASE("algebra fixtures load to their in-code builders") {
  CHECK(load_algebra(fixture_path("a0.json")) == fx::a0());
  CHECK(load_algebra(fixture_path("a1.json")) == fx::a1());
  CHECK(load_algebra(fixture_path("a2.json")) == fx::a2());
  CHECK(load_algebra(fixture_path("a3.json")) == fx::a3());
  CHECK(load_algebra(fixture_path("a4.json")) == fx::a4());
  CHECK(load_algebra(fixture_path("a5.json")) == fx::a5());
  CHECK(load_algebra(fixture_path("a1_skew_mutant.json")) == fx::m3());
}

TEST_CASE("representation fixtures load to their in-code builders") {
  HomLYSA a1 = fx::a1();
  CHECK(load_rep(a1, fixture_path("rep_a1_valid.json")) == fx::rep_a1_valid());
  CHECK(load_rep(a1, fixture_path("rep_a1_mutant.json")) ==
        fx::rep_a1_mutant());
  CHECK(load_rep(fx::a0(), fixture_path("rep_a0_zero.json")) ==
        RepTriple::zero(fx::sp11(), SuperSpace{1, 0}));
}

TEST_CASE("deformation and isomorphism fixtures load correctly") {
  CHECK(load_deformation(fx::a0(), fixture_path("deform_a0_obstructed.json")) ==
        fx::deform_a0_obstructed());

  Mat e01(2, 2);
  e01.at(0, 1) = Scalar(1);
  FormalIso expected = FormalIso::make(
      fx::a5().alpha(), 1, {GradedMap::endo(fx::sp20(), Parity::even, e01)});
  CHECK(load_iso(fx::a5(), fixture_path("iso_a5.json")) == expected);
}

TEST_CASE("canonical files survive a load/save round trip byte for byte") {
  for (const char* name : {"a0.json", "a1.json", "a2.json", "a3.json",
                           "a4.json", "a5.json", "a1_skew_mutant.json"}) {
    INFO("file ", name);
    std::string text = fixture_text(name);
    CHECK(algebra_to_json(algebra_from_json(text)) == text);
  }
  for (const char* name :
       {"rep_a1_valid.json", "rep_a1_mutant.json"}) {
    INFO("file ", name);
    std::string text = fixture_text(name);
    CHECK(rep_to_json(rep_from_json(fx::a1(), text)) == text);
  }
  {
    std::string text = fixture_text("rep_a0_zero.json");
    CHECK(rep_to_json(rep_from_json(fx::a0(), text)) == text);
  }
  {
    std::string text = fixture_text("deform_a0_obstructed.json");
    CHECK(deformation_to_json(deformation_from_json(fx::a0(), text)) == text);
  }
  {
    std::string text = fixture_text("deform_a5_coboundary.json");
    CHECK(deformation_to_json(deformation_from_json(fx::a5(), text)) == text);
  }
  {
    std::string text = fixture_text("iso_a5.json");
    CHECK(iso_to_json(iso_from_json(fx::a5(), text)) == text);
  }
}

TEST_CASE("optional metadata round-trips when passed to the writer") {
  std::string text = algebra_to_json(fx::a1(), "binary fixture",
                                     "rank-one bracket on (1|1)");
  HomLYSA a = algebra_from_json(text);
  CHECK(a == fx::a1());
  CHECK(algebra_to_json(a, "binary fixture", "rank-one bracket on (1|1)") ==
        text);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(algebra_from_json("not json"), ParseError);
  CHECK_THROWS_AS(algebra_from_json("[1, 2]"), ParseError);
  // missing key
  CHECK_THROWS_AS(algebra_from_json(R"({"even_dim": 1})"), ParseError);
  // unknown key
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 0, "odd_dim": 0, "alpha": [],
                          "bracket2": [], "bracket3": [], "extra": 1})"),
                  ParseError);
  // wrong entry arity
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 0, "alpha": [["1"]],
                          "bracket2": [[0, 0, "1"]], "bracket3": []})"),
                  ParseError);
  // scalars must be strings
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 0, "alpha": [[1]],
                          "bracket2": [], "bracket3": []})"),
                  ParseError);
  // zero denominator
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 0, "alpha": [["1/0"]],
                          "bracket2": [], "bracket3": []})"),
                  ParseError);
  // decimals are rejected
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 0, "alpha": [["0.5"]],
                          "bracket2": [], "bracket3": []})"),
                  ParseError);
}

TEST_CASE("well-formed documents violating invariants raise validation errors") {
  // index out of range
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 0, "alpha": [["1"]],
                          "bracket2": [[0, 1, 0, "1"]], "bracket3": []})"),
                  ValidationError);
  // duplicate entry
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 1,
                          "alpha": [["1", "0"], ["0", "1"]],
                          "bracket2": [[0, 1, 1, "1"], [0, 1, 1, "2"]],
                          "bracket3": []})"),
                  ValidationError);
  // parity-pattern violation: even pair with odd output
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 1,
                          "alpha": [["1", "0"], ["0", "1"]],
                          "bracket2": [[0, 0, 1, "1"]], "bracket3": []})"),
                  ValidationError);
  // dense matrix with the wrong shape
  CHECK_THROWS_AS(algebra_from_json(
                      R"({"even_dim": 1, "odd_dim": 1, "alpha": [["1"]],
                          "bracket2": [], "bracket3": []})"),
                  ValidationError);
  // deformation coefficient order outside 1..order
  CHECK_THROWS_AS(deformation_from_json(fx::a0(),
                      R"({"order": 1, "f": [[0, 0, 1, 1, "1"]], "g": []})"),
                  ValidationError);
  CHECK_THROWS_AS(deformation_from_json(fx::a0(),
                      R"({"order": 1, "f": [[2, 0, 1, 1, "1"]], "g": []})"),
                  ValidationError);
  // isomorphism coefficient at order 0 (the identity slot is implicit)
  CHECK_THROWS_AS(iso_from_json(fx::a5(),
                                R"({"order": 1, "phi": [[0, 0, 1, "1"]]})"),
                  ValidationError);
}

TEST_CASE("file wrappers map filesystem failures to io errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/path/file.json"), IoError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/path/file.json"), IoError);

  std::string path = "/tmp/hly_io_test_roundtrip.json";
  std::string text = algebra_to_json(fx::a1());
  write_text_file(path, text);
  CHECK(read_text_file(path) == text);
  CHECK(load_algebra(path) == fx::a1());
  std::remove(path.c_str());
}
