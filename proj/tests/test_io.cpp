#include "doctest.h"
#include "fixtures.hpp"
#include "iet/errors.hpp"
#include "iet/io.hpp"

using namespace iet;
using nlohmann::json;

TEST_CASE("FNV-1a reference values") {
  CHECK(io::hex64(io::fnv1a64("")) == "cbf29ce484222325");
  CHECK(io::hex64(io::fnv1a64("a")) == "af63dc4c8601ec8c");
  CHECK(io::hex64(io::fnv1a64("foobar")) == "85944171f73967e8");
}

TEST_CASE("Iet documents round trip exactly") {
  for (const Iet& t : {fixtures::golden(), fixtures::three_iet(), power(fixtures::golden(), 3)}) {
    const json doc = io::iet_to_json(t);
    const Iet back = io::iet_from_json(doc);
    CHECK(io::iet_to_json(back) == doc);
    for (const auto& z : fixtures::sample_points(50)) CHECK(back.apply(z) == t.apply(z));
  }
}

TEST_CASE("Iet document from text") {
  const Iet t = io::iet_from_json(json::parse(io::read_file(IET_DATA_DIR "/golden.json")));
  CHECK(t == fixtures::golden());
  const Iet t3 = io::iet_from_json(json::parse(io::read_file(IET_DATA_DIR "/three_132.json")));
  CHECK(t3 == fixtures::three_iet());
}

TEST_CASE("multi-character names become labels") {
  const json doc = json::parse(R"j({"field_d": 5, "order1": ["aa", "ab", "ba"], "order2": ["ab", "ba", "aa"],
    "lengths": {"aa": "-2+1*sqrt(5)", "ab": "3/2-1/2*sqrt(5)", "ba": "3/2-1/2*sqrt(5)"}})j");
  const Iet t = io::iet_from_json(doc);
  CHECK(t.size() == 3);
  CHECK(t.label(t.letter_of_label("ab")) == "ab");
  CHECK(io::iet_to_json(t) == doc);
}

TEST_CASE("malformed Iet documents") {
  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"j({"order1": ["a"]})j")), ParseError);
  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"j({"order1": ["a","b"], "order2": ["b","a"],
    "lengths": {"a": "1/2", "b": "1/3"}})j")), LengthSumError);
  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"j({"order1": ["a","b"], "order2": ["b","c"],
    "lengths": {"a": "1/2", "b": "1/2"}})j")), AlphabetMismatch);
  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"j({"field_d": 2, "order1": ["a","b"], "order2": ["b","a"],
    "lengths": {"a": "-1/2+1/2*sqrt(5)", "b": "3/2-1/2*sqrt(5)"}})j")), MixedFieldError);
  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"j({"order1": ["a","b"], "order2": ["b","a"],
    "lengths": {"a": 0.5, "b": "1/2"}})j")), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), IoError);
}

TEST_CASE("code documents") {
  const CodingMorphism f = io::code_from_json(json::parse(io::read_file(IET_DATA_DIR "/code_uvw.json")));
  CHECK(f.images() == fixtures::code_uvw("aa", "ab", "ba").images());
  CHECK(io::code_from_json(io::code_to_json(f)).images() == f.images());
  CHECK(io::parse_inline_code("u:aa;v:ab;w:ba").images() == f.images());
  CHECK(io::parse_inline_code("ba,aa,ab").images() == f.images());
  CHECK_THROWS_AS(io::parse_inline_code("uv:aa"), ParseError);
  CHECK_THROWS_AS(io::parse_inline_code(""), ParseError);
  CHECK_THROWS_AS(io::code_from_json(json::parse(R"j({"source_alphabet": ["u"], "images": {}})j")), AlphabetMismatch);
}
