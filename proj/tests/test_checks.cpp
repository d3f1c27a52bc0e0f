#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "checks.hpp"
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

std::string zeroed_times(std::string s) {
  return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9]+"),
                            "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("check names and applicability") {
  CHECK(known_checks().size() == 9);

  Model planck = build_model("planck1d");
  CHECK(applicable_checks(planck) ==
        std::vector<std::string>{"hopf-axioms", "confluence", "flow", "regime"});
  CHECK(applicable_checks(build_model("qplane")) ==
        std::vector<std::string>{"braided-hopf", "confluence", "ybe"});
  CHECK(applicable_checks(build_model("frt_sl2")) ==
        std::vector<std::string>{"hopf-axioms", "confluence", "ybe", "dqua"});
  CHECK(applicable_checks(build_model("braided_matrices_sl2")) ==
        std::vector<std::string>{"braided-hopf", "confluence", "ybe"});
  CHECK(applicable_checks(build_model("functions_S3")) ==
        std::vector<std::string>{"hopf-axioms", "duality", "fourier"});
  CHECK(applicable_checks(build_model("bicso3")) ==
        std::vector<std::string>{"hopf-axioms", "confluence", "flow"});

  CHECK(default_degree(planck, "hopf-axioms") == 4);
  CHECK(default_degree(planck, "dqua") == 2);
  CHECK(default_degree(build_model("bicso3"), "hopf-axioms") == 3);
  CHECK(default_degree(build_model("qplane"), "braided-hopf") == 3);
  CHECK(default_degree(build_model("braided_matrices_sl2"), "braided-hopf") == 2);
  CHECK(default_degree(build_model("braided_matrices_sl2"), "confluence") == 3);
  CHECK(default_degree(planck, "ybe") == 0);
}

TEST_CASE("planck model passes its full suite") {
  Model planck = build_model("planck1d");

  std::vector<CheckReport> reports = run_suite(planck, {{"hopf-axioms"}});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].model == "planck1d");
  CHECK(reports[0].check == "hopf-axioms");
  CHECK(reports[0].degree == 4);
  CHECK(reports[0].pass);
  CHECK(reports[0].violations.empty());

  for (const CheckReport& r : run_suite(planck)) {
    CAPTURE(r.check);
    CHECK(r.pass);
    CHECK(r.pass == r.violations.empty());
  }
}

TEST_CASE("braided models pass; the flip braiding on the quantum plane fails") {
  Model qp = build_model("qplane");
  std::vector<CheckReport> reports = run_suite(qp);
  REQUIRE(reports.size() == 3);
  for (const CheckReport& r : reports) {
    CAPTURE(r.check);
    CHECK(r.pass);
  }

  // Swapping in the flip braiding breaks compatibility of the coproduct
  // with the y.x relation, and the report names that relation.
  Model flipped = qp;
  flipped.presented->braiding =
      BraidingTable::flip(2, flipped.presented->pres.params());
  CheckReport rep = run_check(flipped, "braided-hopf", 2);
  CHECK(!rep.pass);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].kind == "relation");
  bool mentions_rule = false;
  for (const ReportViolation& v : rep.violations)
    if (v.item.find("y.x") != std::string::npos) mentions_rule = true;
  CHECK(mentions_rule);
}

TEST_CASE("matrix bialgebra and braided matrices pass their suites") {
  for (const CheckReport& r : run_suite(build_model("frt_sl2"))) {
    CAPTURE(r.check);
    CHECK(r.pass);
  }
  for (const CheckReport& r : run_suite(build_model("braided_matrices_sl2"))) {
    CAPTURE(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("finite-dimensional models pass axioms, duality, and fourier") {
  for (const std::string& name :
       {"functions_S3", "groupalg_C4", "functions_C2xC2", "bicross_S3"}) {
    CAPTURE(name);
    Model m = build_model(name);
    for (const CheckReport& r : run_suite(m)) {
      CAPTURE(r.check);
      CHECK(r.pass);
      CHECK(r.degree == 0);
    }
  }
}

TEST_CASE("a parsed document runs through the same checks") {
  Model qp = build_model("qplane");
  DslDocument doc = parse_dsl(print_dsl(model_document(qp)));
  REQUIRE(doc.models.size() == 1);
  Model m = to_model(doc.models[0]);
  std::vector<CheckReport> reports = run_suite(m, doc.checks);
  REQUIRE(reports.size() == 2);  // braided-hopf, confluence: no R-matrix in text
  CHECK(reports[0].check == "braided-hopf");
  CHECK(reports[0].degree == 3);
  for (const CheckReport& r : reports) CHECK(r.pass);
}

TEST_CASE("degree requests: overrides and directives") {
  Model planck = build_model("planck1d");
  CHECK(run_check(planck, "hopf-axioms", 2).degree == 2);
  CHECK(run_suite(planck, {{"hopf-axioms"}}, 2)[0].degree == 2);
  std::vector<CheckDirective> ds{{"confluence", 3}};
  CHECK(run_suite(planck, ds)[0].degree == 3);
  CHECK(run_suite(planck, ds, 4)[0].degree == 4);  // override wins
}

TEST_CASE("unknown and inapplicable checks are rejected") {
  Model planck = build_model("planck1d");
  CHECK(thrown_code([&] { run_check(planck, "nonsense"); }) == Err::UnknownCheck);
  CHECK(thrown_code([&] { run_check(planck, "ybe"); }) == Err::InvalidArgument);
  CHECK(thrown_code([&] { run_check(planck, "duality"); }) == Err::InvalidArgument);
  CHECK(thrown_code([&] { run_check(build_model("qplane"), "hopf-axioms"); }) ==
        Err::InvalidArgument);
  CHECK(thrown_code([&] { run_check(build_model("qplane"), "flow"); }) ==
        Err::InvalidArgument);
  CHECK(thrown_code([&] { run_check(build_model("functions_C2"), "confluence"); }) ==
        Err::InvalidArgument);
  CHECK(thrown_code([&] { run_check(build_model("frt_sl2"), "braided-hopf"); }) ==
        Err::InvalidArgument);
  CHECK(thrown_code([&] {
          export_report({}, "yaml");
        }) == Err::InvalidArgument);
}

TEST_CASE("report serialization: json and text") {
  CHECK(export_report({}, "json") == "[]");
  CHECK(export_report({}, "text") == "");

  Model planck = build_model("planck1d");
  std::vector<CheckReport> reports = run_suite(planck, {{"hopf-axioms"}, {"regime"}});
  std::string json = export_report(reports, "json");
  auto j = nlohmann::ordered_json::parse(json);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["model"] == "planck1d");
  CHECK(j[0]["check"] == "hopf-axioms");
  CHECK(j[0]["degree_bound"] == 4);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["violations"].empty());
  CHECK(j[0].contains("elapsed_ms"));
  // Field order is part of the format.
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"model", "check", "degree_bound", "status",
                                         "violations", "elapsed_ms"});

  // Byte-identical across runs once elapsed times are masked.
  std::string again =
      export_report(run_suite(planck, {{"hopf-axioms"}, {"regime"}}), "json");
  CHECK(zeroed_times(json) == zeroed_times(again));

  std::string text = export_report(reports, "text");
  CHECK(text.find("planck1d hopf-axioms degree 4: pass") != std::string::npos);
  CHECK(text.find("planck1d regime: pass") != std::string::npos);

  // A failing report carries the violation with its residual.
  Model flipped = build_model("qplane");
  flipped.presented->braiding =
      BraidingTable::flip(2, flipped.presented->pres.params());
  std::vector<CheckReport> bad = run_suite(flipped, {{"braided-hopf"}}, 2);
  auto jb = nlohmann::ordered_json::parse(export_report(bad, "json"));
  CHECK(jb[0]["status"] == "fail");
  REQUIRE(!jb[0]["violations"].empty());
  CHECK(jb[0]["violations"][0].contains("relation"));
  CHECK(jb[0]["violations"][0].contains("residual"));
  std::string bad_text = export_report(bad, "text");
  CHECK(bad_text.find("FAIL") != std::string::npos);
  CHECK(bad_text.find("residual") != std::string::npos);
}

TEST_CASE("flow and regime checks verify their reference behaviour") {
  Model planck = build_model("planck1d");
  CheckReport flow = run_check(planck, "flow");
  CHECK(flow.pass);
  CHECK(flow.degree == 20);  // sample count
  CheckReport regime = run_check(planck, "regime");
  CHECK(regime.pass);
  CHECK(regime.degree == 0);

  CheckReport flow5 = run_check(build_model("bicso3"), "flow", 5);
  CHECK(flow5.pass);
  CHECK(flow5.degree == 5);
}

TEST_CASE("bicso3 passes hopf axioms at its default degree") {
  Model m = build_model("bicso3");
  CheckReport rep = run_check(m, "hopf-axioms");
  CHECK(rep.degree == 3);
  CHECK(rep.pass);
  CheckReport conf = run_check(m, "confluence");
  CHECK(conf.degree == 3);
  CHECK(conf.pass);
}
