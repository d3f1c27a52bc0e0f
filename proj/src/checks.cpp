#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include <json.hpp>

#include "braided.hpp"
#include "groups.hpp"

namespace qgeo {

namespace {

using Clock = std::chrono::steady_clock;

void add_violations(CheckReport& rep, const std::string& kind,
                    const std::vector<CheckViolation>& vs) {
  for (const CheckViolation& v : vs)
    rep.violations.push_back(ReportViolation{kind, v.item, v.residual});
}

const PresentedModel& presented_or_fail(const Model& m, const std::string& check) {
  if (!m.presented)
    fail(Err::InvalidArgument,
         "check '" + check + "' needs a presented model, but '" + m.name +
             "' is finite-dimensional");
  return *m.presented;
}

const FinModel& findim_or_fail(const Model& m, const std::string& check) {
  if (!m.findim)
    fail(Err::InvalidArgument,
         "check '" + check + "' needs a finite-dimensional model, but '" + m.name +
             "' is presented by generators and relations");
  return *m.findim;
}

// Pseudorandom elements for the flow check: one to three terms, words of
// length at most two, small nonzero integer coefficients.
Element random_element(const Presentation& p, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), len(0, 2),
      gen(0, static_cast<int>(p.ngens()) - 1), coeff(-2, 2);
  Element e;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(static_cast<GenId>(gen(rng)));
    int c = coeff(rng);
    if (c == 0) c = 1;
    e = e + p.word(w, Scalar::integer(p.params(), c));
  }
  return p.normal_form(e);
}

void run_hopf_axioms(const Model& m, CheckReport& rep, int d, bool braided) {
  if (m.findim) {
    if (braided)
      fail(Err::InvalidArgument,
           "check 'braided-hopf' does not apply to the finite-dimensional model '" +
               m.name + "'");
    rep.degree = 0;
    for (const auto& [axiom, vs] : m.findim->hopf.check_axioms())
      for (const CheckViolation& v : vs)
        rep.violations.push_back(ReportViolation{"word", axiom + ": " + v.item,
                                                 v.residual});
    return;
  }
  const PresentedModel& pm = presented_or_fail(m, braided ? "braided-hopf"
                                                          : "hopf-axioms");
  if (pm.coproduct.empty() || pm.counit.empty())
    fail(Err::InvalidArgument,
         "model '" + m.name + "' has no coproduct/counit to check");
  if (braided && !pm.braiding)
    fail(Err::InvalidArgument, "model '" + m.name + "' has no braiding");
  if (!braided && pm.braiding)
    fail(Err::InvalidArgument,
         "model '" + m.name + "' is braided; run 'braided-hopf' instead");
  const BraidingTable* psi = pm.braiding ? &*pm.braiding : nullptr;
  HopfChecker hc(pm.pres, pm.coproduct, pm.counit, pm.antipode, psi);
  add_violations(rep, "relation", hc.coproduct_respects_relations());
  add_violations(rep, "relation", hc.counit_respects_relations());
  if (!pm.antipode.empty())
    add_violations(rep, "relation", hc.antipode_respects_relations());
  size_t dd = static_cast<size_t>(d);
  add_violations(rep, "word", hc.coassociativity(dd));
  add_violations(rep, "word", hc.counit_axiom(dd));
  if (!pm.antipode.empty()) add_violations(rep, "word", hc.antipode_axiom(dd));
}

void run_confluence(const Model& m, CheckReport& rep, int d) {
  const PresentedModel& pm = presented_or_fail(m, "confluence");
  const Presentation& p = pm.pres;
  for (const ConfluenceIssue& issue :
       overlap_confluence(p, static_cast<size_t>(d))) {
    const Word& la = p.rules()[issue.rule_a].lhs;
    const Word& lb = p.rules()[issue.rule_b].lhs;
    rep.violations.push_back(ReportViolation{
        "relation",
        word_str(la, p.gen_names()) + " and " + word_str(lb, p.gen_names()) +
            " overlap at " + word_str(issue.overlap, p.gen_names()),
        p.element_str(issue.residual)});
  }
}

void run_ybe(const Model& m, CheckReport& rep) {
  const PresentedModel& pm = presented_or_fail(m, "ybe");
  if (!pm.rmatrix)
    fail(Err::InvalidArgument, "model '" + m.name + "' has no R-matrix");
  add_violations(rep, "word", ybe_violations(*pm.rmatrix));
}

void run_dqua(const Model& m, CheckReport& rep, int d) {
  const PresentedModel& pm = presented_or_fail(m, "dqua");
  if (!pm.rmatrix)
    fail(Err::InvalidArgument, "model '" + m.name + "' has no R-matrix");
  if (pm.braiding)
    fail(Err::InvalidArgument,
         "check 'dqua' applies to the matrix bialgebra, not to braided models");
  if (pm.coproduct.empty() || pm.counit.empty())
    fail(Err::InvalidArgument,
         "model '" + m.name + "' has no coproduct/counit to check");
  FrtBialgebra frt{pm.pres, pm.coproduct, pm.counit, *pm.rmatrix};
  add_violations(rep, "word", dqua_check(frt, static_cast<size_t>(d)));
}

void run_duality(const Model& m, CheckReport& rep) {
  const FinModel& fm = findim_or_fail(m, "duality");
  FinHopf dual = fm.hopf.dual();
  for (const auto& [axiom, vs] : dual.check_axioms())
    for (const CheckViolation& v : vs)
      rep.violations.push_back(
          ReportViolation{"word", "dual " + axiom + ": " + v.item, v.residual});
  if (!dual.dual().structure_equal(fm.hopf))
    rep.violations.push_back(ReportViolation{
        "word", "double dual", "structure constants differ from the original"});
}

std::string vec_str(const FinGroup& g, const SparseVec& v) {
  std::string s;
  for (const auto& [k, c] : v) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + g.label(k);
  }
  return s.empty() ? "0" : s;
}

SparseVec strip_zeros(SparseVec v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

void run_fourier(const Model& m, CheckReport& rep) {
  const FinModel& fm = findim_or_fail(m, "fourier");
  if (!fm.group)
    fail(Err::InvalidArgument,
         "model '" + m.name + "' is not built from a single group");
  const FinGroup& g = *fm.group;
  const ParamSetPtr ps = fm.hopf.params();
  FinHopf kg = group_hopf(g);
  for (size_t a = 0; a < g.order(); ++a)
    for (size_t b = 0; b < g.order(); ++b) {
      SparseVec da{{a, Scalar::one(ps)}}, db{{b, Scalar::one(ps)}};
      SparseVec lhs = strip_zeros(fourier(g, convolve(g, da, db)));
      SparseVec rhs = strip_zeros(kg.mul(fourier(g, da), fourier(g, db)));
      if (lhs != rhs) {
        SparseVec diff = lhs;
        for (const auto& [k, c] : rhs) {
          auto it = diff.find(k);
          if (it == diff.end())
            diff.emplace(k, -c);
          else
            it->second = it->second - c;
        }
        rep.violations.push_back(
            ReportViolation{"word", "delta_" + g.label(a) + " * delta_" + g.label(b),
                            vec_str(g, strip_zeros(diff))});
      }
    }
}

void run_flow(const Model& m, CheckReport& rep, int samples) {
  const PresentedModel& pm = presented_or_fail(m, "flow");
  const Presentation& p = pm.pres;
  const auto& names = p.params()->names();
  if (std::find(names.begin(), names.end(), "hbar") == names.end())
    fail(Err::InvalidArgument,
         "model '" + m.name + "' has no parameter 'hbar'; the flow is undefined");
  std::mt19937 rng(519);
  for (int k = 0; k < samples; ++k) {
    Element h = random_element(p, rng);
    Element a = random_element(p, rng);
    Element b = random_element(p, rng);
    Element lhs = heisenberg_flow(pm, h, p.normal_form(a * b)).quantum;
    Element rhs = p.normal_form(heisenberg_flow(pm, h, a).quantum * b +
                                a * heisenberg_flow(pm, h, b).quantum);
    if (lhs != rhs)
      rep.violations.push_back(ReportViolation{
          "word",
          "h = " + p.element_str(h) + ", a = " + p.element_str(a) +
              ", b = " + p.element_str(b),
          p.element_str(p.normal_form(lhs - rhs))});
  }
}

void run_regime(CheckReport& rep) {
  struct Sample {
    long m, big_m, hbar, g;
    const char* expect;
  };
  const Sample samples[] = {
      {4, 4, 1, 1, "gravitational"},
      {1, 1, 1, 1, "boundary"},
      {1, 1, 100, 1, "quantum"},
  };
  for (const Sample& s : samples) {
    RegimeReport r = regime_report(Rat(s.m), Rat(s.big_m), Rat(s.hbar), Rat(s.g));
    if (r.regime != s.expect)
      rep.violations.push_back(ReportViolation{
          "word",
          "m=" + std::to_string(s.m) + " M=" + std::to_string(s.big_m) +
              " hbar=" + std::to_string(s.hbar) + " G=" + std::to_string(s.g),
          "classified '" + r.regime + "', reference says '" + s.expect + "'"});
  }
}

}  // namespace

std::vector<std::string> known_checks() {
  return {"hopf-axioms", "braided-hopf", "confluence", "ybe", "dqua",
          "duality",     "fourier",      "flow",       "regime"};
}

std::vector<std::string> applicable_checks(const Model& m) {
  std::vector<std::string> out;
  if (m.findim) {
    out.push_back("hopf-axioms");
    out.push_back("duality");
    if (m.findim->group) out.push_back("fourier");
    return out;
  }
  const PresentedModel& pm = *m.presented;
  bool coalgebra = !pm.coproduct.empty() && !pm.counit.empty();
  if (coalgebra) out.push_back(pm.braiding ? "braided-hopf" : "hopf-axioms");
  out.push_back("confluence");
  if (pm.rmatrix) out.push_back("ybe");
  if (pm.rmatrix && !pm.braiding && coalgebra) out.push_back("dqua");
  const auto& names = pm.pres.params()->names();
  if (std::find(names.begin(), names.end(), "hbar") != names.end())
    out.push_back("flow");
  if (m.name == "planck1d") out.push_back("regime");
  return out;
}

int default_degree(const Model& m, const std::string& check) {
  if (check == "ybe" || check == "duality" || check == "fourier" ||
      check == "regime")
    return 0;  // no degree bound
  if (check == "flow") return 20;  // sample count rather than a degree
  int base = 4;
  if (check == "dqua") base = 2;
  if (m.name == "braided_matrices_sl2") base = 2;
  else if (m.name == "bicso3") base = 3;
  else if (m.presented && m.presented->braiding) base = 3;
  if (check == "confluence" && base < 3) base = 3;
  return base;
}

CheckReport run_check(const Model& m, const std::string& check, int degree) {
  const auto known = known_checks();
  if (std::find(known.begin(), known.end(), check) == known.end())
    fail(Err::UnknownCheck, "unknown check '" + check + "'");
  CheckReport rep;
  rep.model = m.name;
  rep.check = check;
  int d = degree >= 0 ? degree : default_degree(m, check);
  rep.degree = d;
  auto t0 = Clock::now();
  if (check == "hopf-axioms") {
    run_hopf_axioms(m, rep, d, false);
    if (m.findim) rep.degree = 0;
  } else if (check == "braided-hopf") {
    run_hopf_axioms(m, rep, d, true);
  } else if (check == "confluence") {
    run_confluence(m, rep, d);
  } else if (check == "ybe") {
    run_ybe(m, rep);
  } else if (check == "dqua") {
    run_dqua(m, rep, d);
  } else if (check == "duality") {
    run_duality(m, rep);
  } else if (check == "fourier") {
    run_fourier(m, rep);
  } else if (check == "flow") {
    run_flow(m, rep, d);
  } else {
    run_regime(rep);
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
          .count();
  return rep;
}

std::vector<CheckReport> run_suite(const Model& m,
                                   const std::vector<CheckDirective>& checks,
                                   int degree_override) {
  std::vector<CheckDirective> ds = checks;
  if (ds.empty())
    for (const std::string& c : applicable_checks(m))
      ds.push_back(CheckDirective{c, -1});
  std::vector<CheckReport> out;
  for (const CheckDirective& d : ds) {
    int degree = degree_override >= 0 ? degree_override : d.degree;
    out.push_back(run_check(m, d.name, degree));
  }
  return out;
}

Model to_model(const DslModel& dm) {
  Model m;
  m.name = dm.pres.name();
  m.presented = PresentedModel{dm.pres,    dm.coproduct, dm.counit,
                               dm.antipode, dm.braiding,  std::nullopt};
  return m;
}

DslDocument model_document(const Model& m) {
  if (!m.presented)
    fail(Err::InvalidArgument,
         "model '" + m.name + "' has no generator presentation to print");
  const PresentedModel& pm = *m.presented;
  DslDocument doc;
  doc.params = pm.pres.params();
  if (pm.pres.name() == m.name) {
    doc.models.emplace_back(pm.pres);
  } else {
    // Constructors may name the presentation differently from the model;
    // the document uses the model's public name.
    Presentation p(m.name, pm.pres.params(), pm.pres.gen_names(),
                   pm.pres.gen_weights(), pm.pres.step_budget());
    for (const RewriteRule& r : pm.pres.rules()) p.add_rule(r.lhs, r.rhs);
    doc.models.emplace_back(std::move(p));
  }
  DslModel& dm = doc.models.back();
  dm.coproduct = pm.coproduct;
  dm.counit = pm.counit;
  dm.antipode = pm.antipode;
  dm.braiding = pm.braiding;
  for (const std::string& c : applicable_checks(m))
    if (c != "ybe" && c != "dqua") doc.checks.push_back(CheckDirective{c, -1});
  return doc;
}

std::string export_report(const std::vector<CheckReport>& reports,
                          const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
      nlohmann::ordered_json vs = nlohmann::ordered_json::array();
      for (const ReportViolation& v : r.violations)
        vs.push_back({{v.kind, v.item}, {"residual", v.residual}});
      arr.push_back({{"model", r.model},
                     {"check", r.check},
                     {"degree_bound", r.degree},
                     {"status", r.pass ? "pass" : "fail"},
                     {"violations", vs},
                     {"elapsed_ms", r.elapsed_ms}});
    }
    return arr.dump(2);
  }
  if (format == "text") {
    std::string out;
    for (const CheckReport& r : reports) {
      out += r.model + " " + r.check;
      if (r.degree > 0) out += " degree " + std::to_string(r.degree);
      out += r.pass ? ": pass" : ": FAIL";
      out += " (" + std::to_string(r.violations.size()) + " violation" +
             (r.violations.size() == 1 ? "" : "s") + ", " +
             std::to_string(r.elapsed_ms) + " ms)\n";
      for (const ReportViolation& v : r.violations)
        out += "  " + v.kind + " " + v.item + ": residual " + v.residual + "\n";
    }
    return out;
  }
  fail(Err::InvalidArgument, "unknown report format '" + format + "'");
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

}  // namespace qgeo
