#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "checks.hpp"
#include "dsl.hpp"
#include "models.hpp"

using namespace qgeo;

namespace {

Err thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Ok;
}

// Line/column of the ParseError raised by f; {0,0} when nothing throws.
std::pair<size_t, size_t> thrown_at(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line, e.column};
  }
  return {0, 0};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation tiny_qplane() {
  ParamSetPtr ps = make_params({"q"});
  Presentation p("qp", ps, {"x", "y"});
  p.add_rule({1, 0}, p.word({0, 1}, Scalar::param(ps, "q")));
  return p;
}

}  // namespace

TEST_CASE("element expressions: words, scalars, precedence") {
  Presentation p = tiny_qplane();
  ParamSetPtr ps = p.params();
  Scalar q = Scalar::param(ps, "q");

  CHECK(parse_element(p, "y.x") == p.word({1, 0}));  // raw word, not reduced
  CHECK(parse_element(p, "q*x.y") == p.word({0, 1}, q));
  CHECK(parse_element(p, "q * x . y") == p.word({0, 1}, q));
  CHECK(parse_element(p, "-x") == p.word({0}, -Scalar::one(ps)));
  CHECK(parse_element(p, "x - x").is_zero());
  CHECK(parse_element(p, "0").is_zero());
  CHECK(parse_element(p, "1") == p.unit());
  CHECK(parse_element(p, "q^2*x") == p.word({0}, q.pow(2)));
  CHECK(parse_element(p, "q^-1*x") == p.word({0}, q.inverse()));
  CHECK(parse_element(p, "(q^2 - 1)*y.x") ==
        p.word({1, 0}, q.pow(2) - Scalar::one(ps)));
  CHECK(parse_element(p, "i*x") == p.word({0}, Scalar::imag_unit(ps)));
  CHECK(parse_element(p, "2/3*x") == p.word({0}, Scalar::rational(ps, Rat(2, 3))));
  CHECK(parse_element(p, "x/2") == p.word({0}, Scalar::rational(ps, Rat(1, 2))));
  CHECK(parse_element(p, "1/2*i*x") ==
        p.word({0}, Scalar::imag_unit(ps) * Scalar::rational(ps, Rat(1, 2))));
  CHECK(parse_element(p, "x*y + y*x") == p.word({0, 1}) + p.word({1, 0}));
  CHECK(parse_element(p, "2*x + 3*x") == p.word({0}, Scalar::integer(ps, 5)));
  CHECK(parse_element(p, "-(x - y)") == p.word({1}) - p.word({0}));
  CHECK(parse_element(p, "q*(x + y)") == p.word({0}, q) + p.word({1}, q));

  // The whole input must be one plain-element expression.
  CHECK(thrown_code([&] { parse_element(p, "x|y"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x )"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, ""); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x +"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "z"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "q.x"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x..y"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x^2"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x/y"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "x/0"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "2^"); }) == Err::Parse);
  CHECK(thrown_code([&] { parse_element(p, "q^x"); }) == Err::Parse);

  // Errors carry 1-based line and column.
  CHECK(thrown_at([&] { parse_element(p, "x +\n  z"); }) ==
        std::make_pair<size_t, size_t>(2, 3));
  CHECK(thrown_at([&] { parse_element(p, "zebra"); }) ==
        std::make_pair<size_t, size_t>(1, 1));
}

TEST_CASE("document parsing: algebra, coalgebra, braiding, checks") {
  const std::string text = R"(# a quantum plane with its braiding
params q;

algebra qp {
  gens x, y;
  order x < y;
  rule y.x -> q*x.y;
}

coproduct qp {
  x -> x|1 + 1|x;
  y -> y|1 + 1|y;
}

counit qp {
  x -> 0;
  y -> 0;
}

braiding qp {
  x|x -> q^2*x|x;
  x|y -> q*y|x;
  y|x -> q*x|y + (q^2 - 1)*y|x;
  y|y -> q^2*y|y;
}

check braided-hopf degree 2;
check confluence;
)";
  DslDocument doc = parse_dsl(text);
  REQUIRE(doc.models.size() == 1);
  const DslModel& m = doc.models[0];
  CHECK(m.pres.name() == "qp");
  CHECK(m.pres.ngens() == 2);
  REQUIRE(m.pres.rules().size() == 1);
  CHECK(m.pres.rules()[0].lhs == Word{1, 0});
  CHECK(m.pres.rules()[0].rhs ==
        m.pres.word({0, 1}, Scalar::param(doc.params, "q")));
  REQUIRE(m.coproduct.size() == 2);
  CHECK(m.coproduct[0].size() == 2);
  CHECK(m.counit.size() == 2);
  CHECK(m.counit[0].is_zero());
  CHECK(m.antipode.empty());
  REQUIRE(m.braiding.has_value());
  CHECK(m.braiding->entry[1][0].size() == 2);
  REQUIRE(doc.checks.size() == 2);
  CHECK(doc.checks[0].name == "braided-hopf");
  CHECK(doc.checks[0].degree == 2);
  CHECK(doc.checks[1].name == "confluence");
  CHECK(doc.checks[1].degree == -1);

  // The parsed model matches the built-in registry model structurally.
  Model reg = build_model("qplane");
  DslModel reg_dsl(reg.presented->pres);
  reg_dsl.coproduct = reg.presented->coproduct;
  reg_dsl.counit = reg.presented->counit;
  reg_dsl.antipode = reg.presented->antipode;
  reg_dsl.braiding = reg.presented->braiding;
  CHECK(models_equal(m, reg_dsl));

  // Same model with the flip braiding is a different structure.
  DslDocument flip_doc = parse_dsl(text);
  flip_doc.models[0].braiding = BraidingTable::flip(2, flip_doc.params);
  CHECK(!models_equal(flip_doc.models[0], reg_dsl));
}

TEST_CASE("document parse errors carry a location and a reason") {
  auto code = [](const std::string& text) {
    return thrown_code([&] { parse_dsl(text); });
  };
  const std::string head = "params q;\nalgebra a { gens x, y;\n";

  // An empty rule right-hand side is a parse error, not an empty element.
  CHECK(code(head + "rule y.x -> ;\n}") == Err::Parse);
  // A rule that does not decrease in the word order is rejected with
  // the rule's location attached.
  CHECK(code(head + "rule y.x -> y.x;\n}") == Err::Parse);
  CHECK(code(head + "rule x -> x.x;\n}") == Err::Parse);
  // Unknown names.
  CHECK(code(head + "rule y.z -> x;\n}") == Err::Parse);
  CHECK(code(head + "}\ncoproduct b { x -> x|1; }") == Err::Parse);
  CHECK(code(head + "}\ncounit a { x -> 0; }") == Err::Parse);  // y missing
  CHECK(code(head + "}\ncounit a { x -> 0; y -> 0; z -> 0; }") == Err::Parse);
  CHECK(code(head + "}\ncounit a { x -> x; y -> 0; }") == Err::Parse);
  CHECK(code(head + "}\ncoproduct a { x -> x; y -> y|1; }") == Err::Parse);
  // Duplicates.
  CHECK(code("params q;\nparams p;") == Err::Parse);
  CHECK(code(head + "}\nalgebra a { gens z; }") == Err::Parse);
  CHECK(code(head + "gens z;\n}") == Err::Parse);
  CHECK(code(head + "}\ncounit a { x -> 0; x -> 1; y -> 0; }") == Err::Parse);
  // Braiding blocks must cover every generator pair with gen|gen terms.
  CHECK(code(head + "}\nbraiding a { x|x -> x|x; }") == Err::Parse);
  CHECK(code(head + "}\nbraiding a { x|x -> x.y|x; x|y -> y|x; y|x -> x|y; "
                    "y|y -> y|y; }") == Err::Parse);
  // Statement and item keywords.
  CHECK(code("banana q;") == Err::Parse);
  CHECK(code("params q;\nalgebra a { fruit x; }") == Err::Parse);
  CHECK(code("check nonsense extra;") == Err::Parse);
  // 'params' after an algebra block is rejected.
  CHECK(code("algebra a { gens x; }\nparams q;") == Err::Parse);
  // 'order' must be a permutation of the declared generators.
  CHECK(code(head + "order x;\n}") == Err::Parse);
  CHECK(code(head + "order x < x < y;\n}") == Err::Parse);

  auto at = [](const std::string& text) {
    return thrown_at([&] { parse_dsl(text); });
  };
  CHECK(at(head + "rule y.x -> ;\n}") == std::make_pair<size_t, size_t>(3, 13));
}

TEST_CASE("order statement controls generator precedence") {
  const std::string text =
      "params q;\nalgebra a { gens p, x; order x < p; rule p.x -> q*x.p; }";
  DslDocument doc = parse_dsl(text);
  const Presentation& p = doc.models[0].pres;
  REQUIRE(p.gen_names() == std::vector<std::string>{"x", "p"});
  CHECK(p.gen_id("x") == GenId{0});
  CHECK(p.normal_form(p.word({1, 0})) ==
        p.word({0, 1}, Scalar::param(doc.params, "q")));
}

TEST_CASE("weights survive parsing and printing") {
  const std::string text =
      "algebra w {\n  gens a, b:3;\n  order a < b;\n  rule b.a -> a.b;\n}\n";
  DslDocument doc = parse_dsl(text);
  CHECK(doc.models[0].pres.gen_weights() == std::vector<uint32_t>{1, 3});
  CHECK(print_dsl(doc) == text);
}

TEST_CASE("canonical print/parse round-trip for every built-in presented model") {
  for (const std::string& name :
       {"planck1d", "bicso3", "qplane", "frt_sl2", "braided_matrices_sl2"}) {
    CAPTURE(name);
    Model reg = build_model(name);
    REQUIRE(reg.presented.has_value());
    DslDocument doc = model_document(reg);
    std::string text = print_dsl(doc);
    DslDocument back = parse_dsl(text);
    REQUIRE(back.models.size() == 1);
    CHECK(back.models[0].pres.name() == name);
    CHECK(models_equal(back.models[0], doc.models[0]));
    // Printing the reparsed document reproduces the text byte for byte.
    CHECK(print_dsl(back) == text);
  }
}

TEST_CASE("shipped model files parse to the registry models and re-print exactly") {
  const std::string dir = QGEO_MODELS_DIR;
  for (const std::string& name :
       {"planck1d", "bicso3", "qplane", "frt_sl2", "braided_matrices_sl2"}) {
    CAPTURE(name);
    std::string text = slurp(dir + "/" + name + ".dsl");
    DslDocument doc = parse_dsl(text);
    REQUIRE(doc.models.size() == 1);
    CHECK(print_dsl(doc) == text);

    Model reg = build_model(name);
    DslModel reg_dsl(reg.presented->pres);
    reg_dsl.coproduct = reg.presented->coproduct;
    reg_dsl.counit = reg.presented->counit;
    reg_dsl.antipode = reg.presented->antipode;
    reg_dsl.braiding = reg.presented->braiding;
    CHECK(models_equal(doc.models[0], reg_dsl));
    CHECK(!doc.checks.empty());
  }
}

TEST_CASE("element JSON form lists words and coefficients in display order") {
  Model planck = build_model("planck1d");
  const Presentation& p = planck.presented->pres;
  Element c = p.commutator(p.gen(0), p.gen(3));  // i*hbar*(1 - lam)
  nlohmann::ordered_json j = element_json(p, c);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["word"] == nlohmann::ordered_json::array({"lam"}));
  CHECK(j[0]["coeff"] == "-i*hbar");
  CHECK(j[1]["word"] == nlohmann::ordered_json::array());
  CHECK(j[1]["coeff"] == "i*hbar");
  CHECK(element_json(p, Element()).dump() == "[]");
}
