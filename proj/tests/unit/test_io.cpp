#include "ainfty/corpus.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/io.hpp"

#include <doctest.h>

using namespace ainfty;

namespace {

std::string dga_text(const std::string& extra) {
  return R"({"degrees": {"0": ["1"], "1": ["x"]},
             "product": [{"left": "1", "right": "1", "result": [{"basis": "1", "coeff": "1"}]},
                         {"left": "1", "right": "x", "result": [{"basis": "x", "coeff": "1"}]},
                         {"left": "x", "right": "1", "result": [{"basis": "x", "coeff": "1"}]}],
             "unit": "1")" +
         extra + "}";
}

}  // namespace

TEST_CASE("corpus files round-trip through their own formats") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const std::string text = corpus_file(e.name);
    CHECK(detect_kind(text) == e.kind);
    const DGA a = load_dga(text);
    switch (e.kind) {
      case FileKind::dga:
        CHECK(dga_to_json(parse_dga(text)) == text);
        break;
      case FileKind::simplicial_complex:
        CHECK(complex_to_json(parse_complex(text)) == text);
        break;
      case FileKind::lie_structure:
        CHECK(lie_to_json(parse_lie(text)) == text);
        break;
    }
    // Any DGA re-serializes to an equivalent DGA file.
    const DGA b = parse_dga(dga_to_json(a));
    CHECK(b.space == a.space);
    CHECK(b.diff == a.diff);
    CHECK(dga_to_json(b) == dga_to_json(a));
  }
}

TEST_CASE("the torus file lists 18 triangles and closes to 9/27/18") {
  const SimplicialComplex k = parse_complex(corpus_file("torus"));
  CHECK(k.vertices.size() == 9);
  CHECK(k.count(0) == 9);
  CHECK(k.count(1) == 27);
  CHECK(k.count(2) == 18);
}

TEST_CASE("malformed input raises ParseError with a position") {
  try {
    parse_dga("{\"degrees\": {\"0\": [\"1\"]},\n  oops}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(load_dga("[1, 2]"), ParseError);
  CHECK_THROWS_AS(detect_kind("{\"foo\": 1}"), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("semantic errors in DGA files") {
  CHECK_NOTHROW(parse_dga(dga_text("")));
  CHECK_THROWS_AS(parse_dga(dga_text(R"(, "differential": [{"from": "q", "to": []}])")), ParseError);
  CHECK_THROWS_AS(parse_dga(dga_text(R"(, "differential": [{"from": "1", "to": [{"basis": "1", "coeff": "1"}]}])")),
                  ParseError);
  CHECK_THROWS_AS(parse_dga(dga_text(R"(, "differential": [{"from": "1", "to": [{"basis": "x", "coeff": "1/0"}]}])")),
                  ParseError);
  CHECK_THROWS_AS(parse_dga(R"({"degrees": {"0": ["a", "a"]}})"), ParseError);
  CHECK_THROWS_AS(parse_dga(R"({"degrees": {"-1": ["a"]}})"), ParseError);
  // d(1) = x breaks the unit: d(1 . 1) = x but d1 . 1 + 1 . d1 = 2x
  CHECK_THROWS_AS(parse_dga(dga_text(R"(, "differential": [{"from": "1", "to": [{"basis": "x", "coeff": "1"}]}])")),
                  ValidationError);
  // A Gram matrix that is not positive definite.
  CHECK_THROWS_AS(parse_dga(dga_text(R"(, "gram": {"1": [["-1"]]})")), ValidationError);
}

TEST_CASE("Gram matrices survive a round trip") {
  const DGA a = parse_dga(dga_text(R"(, "gram": {"1": [["3/2"]]})"));
  CHECK(a.form.gram(1)(0, 0) == Rational(3, 2));
  CHECK_FALSE(a.form.is_identity());
  const DGA b = parse_dga(dga_to_json(a));
  CHECK(b.form.gram(1)(0, 0) == Rational(3, 2));
}

TEST_CASE("Lie and complex files") {
  const LieStructure g = parse_lie(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]})");
  CHECK(g.dim == 3);
  CHECK(g.c(0, 1, 2) == 1);
  CHECK(g.bracket(1, 0) == Vector{0, 0, -1});
  CHECK_THROWS(load_dga(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1"}, {"i": 2, "j": 3, "k": 2, "c": "1"}]})"));
  const SimplicialComplex k = parse_complex(R"({"vertices": ["a", "b", "c"], "simplices": [["a", "b", "c"]]})");
  CHECK(k.count(1) == 3);
  CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a"], "simplices": [["a", "b"]]})"), ParseError);
}
