#include "doctest.h"
#include "edim/spec_io.hpp"

using namespace edim;
using namespace edim::spec_io;
using catalog::SimpleFactor;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::SyntaxError;
}

std::size_t position_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.position().value_or(9999);
  }
  return 9999;
}

}  // namespace

TEST_CASE("parse examples") {
  auto s = parse("Spin(15)");
  CHECK(s.factors == std::vector<SimpleFactor>{SimpleFactor::spin(15)});
  CHECK(s.mu_generators.empty());

  auto t = parse("Spin(10)^2 / [(1,3)]");
  CHECK(t.factors.size() == 2);
  CHECK(t.mu_generators == std::vector<abelian::GroupElement>{{{1, 3}}});

  auto u = parse("SL(2)^5 / [(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]");
  CHECK(u.factors.size() == 5);
  CHECK(u.mu_generators.size() == 4);
  CHECK(catalog::build(u).char_group.order() == 2);

  auto v = parse("Sp(8)^3");
  CHECK(v.factors[0] == SimpleFactor::sp(4));

  auto w = parse("Spin(16)*Spin(7)/[((1,1),1)]");
  CHECK(w.mu_generators[0] == abelian::GroupElement{{1, 1, 1}});

  auto e = parse(" E6 ^ 2 / [ ( 1 , 2 ) ] ");
  CHECK(e.factors == std::vector<SimpleFactor>(2, SimpleFactor::e6()));
}

TEST_CASE("parse errors") {
  CHECK(kind_of("Spin(15") == ErrorKind::SyntaxError);
  CHECK(kind_of("Foo(3)") == ErrorKind::SyntaxError);
  CHECK(kind_of("Spin(15) junk") == ErrorKind::SyntaxError);
  CHECK(kind_of("Spin(10)^2/[(1)]") == ErrorKind::ArityMismatch);
  CHECK(kind_of("Spin(16)/[(1)]") == ErrorKind::ArityMismatch);
  CHECK(kind_of("Spin(10)/[((1,1))]") == ErrorKind::ArityMismatch);
  CHECK(kind_of("Spin(10)/[(4)]") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("Spin(10)/[(-1)]") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("Spin(4)") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("Sp(7)") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("SL(6)") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("Spin(3)^0") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("Spin(99999999999999999999)") == ErrorKind::ValueOutOfRange);
  CHECK(kind_of("") == ErrorKind::SyntaxError);
  CHECK(position_of("Spin(15) junk") == 9);
  CHECK(position_of("Spin(10)/[(4)]") == 11);
}

TEST_CASE("render is a right inverse of parse") {
  for (const char* text : {"Spin(15)", "Spin(10)^2/[(1,3)]", "Spin(10)*Spin(3)^2/[(2,1,0),(2,0,1)]",
                           "Sp(8)^3/[(1,1,0),(0,1,1)]", "SL(9)*SL(3)", "E6^2/[(1,2)]", "Spin(16)*Spin(7)/[((1,1),1)]"}) {
    const auto s = parse(text);
    CHECK(render(s) == text);
    CHECK(parse(render(s)) == s);
  }
}

TEST_CASE("json emission") {
  const auto r = engine::compute_ed(parse("Spin(15)"));
  const auto doc = emit(r, Format::Json);
  CHECK(doc.find("\"ed\": \"23\"") != std::string::npos);
  CHECK(doc.find("\"ed_red\": \"22\"") != std::string::npos);
  CHECK(doc.find("\"exact\": true") != std::string::npos);
  CHECK(doc.find("\"schema_version\": 1") != std::string::npos);
  CHECK(emit(r, Format::Json) == doc);
  CHECK(parse_report(doc) == r);

  const auto b = engine::compute_ed(parse("Spin(16)"));
  const auto bdoc = emit(b, Format::Json);
  CHECK(bdoc.find("\"exact\": false") != std::string::npos);
  CHECK(bdoc.find("\"hypothesis_failures\": [") != std::string::npos);
  CHECK(parse_report(bdoc) == b);

  const auto h = parse("Spin(10)^2/[(2,2)]");
  const auto x = engine::extend_ed(h, parse_element("(1,3)", h.factors));
  CHECK(parse_report(emit(x, Format::Json)) == x);
}

TEST_CASE("text emission clamps negative lower bounds") {
  auto r = engine::compute_ed(parse("Spin(7)"));
  REQUIRE(r.lower.has_value());
  CHECK(*r.lower < 0);
  const auto text = emit(r, Format::Text);
  CHECK(text.find("ed(G)") != std::string::npos);
  CHECK(text.find("-13") != std::string::npos);
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(parse_report("not json"), Error);
  CHECK_THROWS_AS(parse_report("{}"), Error);
  auto doc = emit(engine::compute_ed(parse("Spin(15)")), Format::Json);
  auto broken = doc;
  broken.replace(broken.find("\"105\""), 5, "105");
  CHECK_THROWS_AS(parse_report(broken), Error);
}
