// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// End-to-end verification suite.  Ten integrated scenarios cover the whole
// engine: finite Hopf algebras, bicrossproducts and their self-duality,
// Fourier duality, the deformed phase space, Yang-Baxter machinery, the
// FRT pairing, braided planes and matrices, the three-dimensional deformed
// space, and randomized algebraic laws plus text-format round-trips.  Each
// scenario prints one PASS/FAIL line with its wall time and limit; the
// exit status is the number of failing scenarios.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "braided.hpp"
#include "checks.hpp"
#include "dsl.hpp"
#include "groups.hpp"
#include "models.hpp"

using namespace qgeo;

namespace {

using Clock = std::chrono::steady_clock;
using Fails = std::vector<std::string>;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void expect(Fails& fails, bool ok, const std::string& msg) {
  if (!ok) fails.push_back(msg);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------ criterion 1

void criterion1(Fails& fails) {
  for (const char* name : {"C2", "C3", "C2xC2", "S3", "D4"}) {
    Clock::time_point t0 = Clock::now();
    FinGroup g = builtin_group(name);
    for (const FinHopf& h : {function_hopf(g), group_hopf(g)}) {
      for (const auto& [axiom, violations] : h.check_axioms())
        expect(fails, violations.empty(),
               h.name() + ": axiom '" + axiom + "' fails on " +
                   (violations.empty() ? "" : violations.front().item));
    }
    double dt = seconds_since(t0);
    expect(fails, dt < 5.0,
           std::string(name) + " took " + std::to_string(dt) + "s, limit 5s");
  }
}

// ------------------------------------------------------------ criterion 2

void verify_bicross(const Factorisation& f, Fails& fails) {
  std::string tag = f.x->name() + " |G|=" + std::to_string(f.g.size()) +
                    " |M|=" + std::to_string(f.m.size());
  MatchedPair mp(f);
  Bicross e = bicrossproduct(mp, tag);
  expect(fails, e.hopf.passes_axioms(), tag + ": bicrossproduct fails a Hopf axiom");
  expect(fails,
         hopf_morphism_violations(function_hopf(e.group_m), e.hopf, e.inclusion)
             .empty(),
         tag + ": inclusion of functions-on-M is not a Hopf morphism");
  expect(fails,
         hopf_morphism_violations(e.hopf, group_hopf(e.group_g), e.projection)
             .empty(),
         tag + ": projection onto the group algebra of G is not a Hopf morphism");
  Bicross swapped = bicrossproduct(MatchedPair(Factorisation{f.x, f.m, f.g}));
  expect(fails, find_hopf_iso(e.hopf.dual(), swapped.hopf).has_value(),
         tag + ": dual is not isomorphic to the swapped bicrossproduct");
}

void criterion2(Fails& fails) {
  FinGroup s3 = builtin_group("S3");
  std::vector<Factorisation> facs = find_factorisations(s3);
  expect(fails, facs.size() == 8,
         "expected 8 ordered factorisations of S3, found " +
             std::to_string(facs.size()));
  for (const Factorisation& f : facs) verify_bicross(f, fails);

  // An order-24 example with both factors nontrivial: |G| = 8, |M| = 3.
  FinGroup s4 = builtin_group("S4");
  std::vector<Factorisation> facs4 = find_factorisations(s4);
  const Factorisation* big = nullptr;
  for (const Factorisation& f : facs4)
    if (f.g.size() == 8 && f.m.size() == 3) {
      big = &f;
      break;
    }
  expect(fails, big != nullptr, "no |G|=8, |M|=3 factorisation of S4 found");
  if (big != nullptr) verify_bicross(*big, fails);
}

// ------------------------------------------------------------ criterion 3

SparseVec scrubbed(SparseVec v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

void criterion3(Fails& fails) {
  FinGroup s3 = builtin_group("S3");
  FinHopf kg = group_hopf(s3);
  const ParamSetPtr& ps = kg.params();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      SparseVec di{{i, Scalar::one(ps)}};
      SparseVec dj{{j, Scalar::one(ps)}};
      SparseVec lhs = scrubbed(fourier(s3, convolve(s3, di, dj)));
      SparseVec rhs = scrubbed(kg.mul(fourier(s3, di), fourier(s3, dj)));
      expect(fails, lhs == rhs,
             "F(delta_" + s3.label(i) + " * delta_" + s3.label(j) +
                 ") differs from F(delta_" + s3.label(i) + ")F(delta_" +
                 s3.label(j) + ")");
    }
}

// ------------------------------------------------------------ criterion 4

void criterion4(Fails& fails) {
  Model m = build_model("planck1d");
  const PresentedModel& pm = *m.presented;
  const Presentation& p = pm.pres;
  const ParamSetPtr& ps = p.params();

  expect(fails, overlap_confluence(p, 4).empty(),
         "rewrite system is not confluent on overlaps up to degree 4");

  Element x = p.gen(*p.gen_id("x"));
  Element mom = p.gen(*p.gen_id("p"));
  Element expected_comm = p.normal_form(parse_element(p, "i*hbar*(1 - lam)"));
  expect(fails, p.commutator(x, mom) == expected_comm,
         "[x, p] differs from i*hbar*(1 - lam)");

  CheckReport hopf = run_check(m, "hopf-axioms", 4);
  expect(fails, hopf.pass,
         "a Hopf check fails at degree 4" +
             (hopf.violations.empty()
                  ? std::string()
                  : " (" + hopf.violations.front().item + ")"));

  Element h = parse_element(p, "(1/(2*m))*p.p");
  FlowResult flow = heisenberg_flow(pm, h, x);
  Element one_minus_lam = parse_element(p, "1 - lam");
  Scalar half_m = Scalar::one(ps) / (Scalar::integer(ps, 2) * Scalar::param(ps, "m"));
  Element expected_quantum =
      p.normal_form((mom * one_minus_lam + one_minus_lam * mom).scaled(half_m));
  expect(fails, flow.quantum == expected_quantum,
         "quantum flow of x under p^2/2m is not (1/2m)(p(1-lam) + (1-lam)p)");

  Scalar inv_m = Scalar::param(ps, "m").inverse();
  Element expected_classical = abelianized(mom * one_minus_lam).scaled(inv_m);
  expect(fails, flow.classical == expected_classical,
         "classical flow of x under p^2/2m is not (p/m)(1-lam)");
}

// ------------------------------------------------------------ criterion 5

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size();
  RatMat c(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Dense 8x8 embeddings of a rational 4x4 two-particle operator acting on
// the chosen pair of tensor factors.
RatMat embed_pair(const RatMat& r4, int first, int second) {
  auto idx = [](size_t a, size_t b, size_t c) { return 4 * a + 2 * b + c; };
  RatMat m(8, std::vector<Rat>(8, Rat(0)));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      for (size_t k = 0; k < 2; ++k)
        for (size_t l = 0; l < 2; ++l)
          for (size_t s = 0; s < 2; ++s) {
            size_t out[3], in[3];
            out[first] = i, out[second] = j;
            in[first] = k, in[second] = l;
            int spectator = 3 - first - second;
            out[spectator] = s, in[spectator] = s;
            m[idx(out[0], out[1], out[2])][idx(in[0], in[1], in[2])] =
                r4[i * 2 + j][k * 2 + l];
          }
  return m;
}

void criterion5(Fails& fails) {
  ParamSetPtr ps = make_params({"q"});
  expect(fails, ybe_check(RMatrix::identity(ps, 2)), "identity R fails the YBE");
  expect(fails, ybe_check(RMatrix::flip(ps, 2)), "flip R fails the YBE");

  RMatrix r = RMatrix::standard_sl2(ps);
  expect(fails, ybe_violations(r).empty(), "standard R fails the YBE");

  // Independent oracle: specialize q, embed densely, multiply both sides.
  const std::vector<Rat> samples{Rat(3) / Rat(2), Rat(5)};
  for (const Rat& q : samples) {
    RatMat r4(4, std::vector<Rat>(4, Rat(0)));
    for (size_t row = 0; row < 4; ++row)
      for (size_t col = 0; col < 4; ++col)
        r4[row][col] = r.m[row][col].limit_at("q", q).rational_value();
    RatMat m12 = embed_pair(r4, 0, 1);
    RatMat m13 = embed_pair(r4, 0, 2);
    RatMat m23 = embed_pair(r4, 1, 2);
    bool same = rat_mul(rat_mul(m12, m13), m23) == rat_mul(rat_mul(m23, m13), m12);
    expect(fails, same,
           "dense oracle disagrees at q = " + q.get_str());
  }

  std::mt19937 rng(2718);
  for (int t = 0; t < 20; ++t) {
    RMatrix bad = r;
    size_t row = rng() % 4, col = rng() % 4;
    long delta = 1 + static_cast<long>(rng() % 3);
    bad.m[row][col] = bad.m[row][col] + Scalar::integer(ps, delta);
    expect(fails, !ybe_violations(bad).empty(),
           "perturbation #" + std::to_string(t) + " (entry " +
               std::to_string(row) + "," + std::to_string(col) + " + " +
               std::to_string(delta) + ") still satisfies the YBE");
  }
}

// ------------------------------------------------------------ criterion 6

void criterion6(Fails& fails) {
  ParamSetPtr ps = make_params({"q"});
  FrtBialgebra frt = frt_bialgebra(RMatrix::standard_sl2(ps));
  expect(fails, frt.pres.ngens() == 4, "FRT bialgebra should have 4 generators");
  std::vector<CheckViolation> bad = dqua_check(frt, 2);
  expect(fails, bad.empty(),
         "pairing fails on " +
             (bad.empty() ? std::string() : bad.front().item));

  RMatrix broken_r = RMatrix::standard_sl2(ps);
  broken_r.m[0][3] = broken_r.m[0][3] + Scalar::one(ps);
  FrtBialgebra broken = frt_bialgebra(broken_r, false);
  expect(fails, !dqua_check(broken, 2).empty(),
         "a YBE-violating R produced no pairing violation");
}

// ------------------------------------------------------------ criterion 7

using BraidMap = std::map<std::pair<int, int>, Scalar>;

BraidMap braid_map(const std::vector<std::tuple<GenId, GenId, Scalar>>& entry) {
  BraidMap m;
  for (const auto& [g2, h2, c] : entry) {
    auto key = std::make_pair(static_cast<int>(g2), static_cast<int>(h2));
    auto it = m.find(key);
    if (it == m.end())
      m.emplace(key, c);
    else
      it->second = it->second + c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}

void criterion7(Fails& fails) {
  Model m = build_model("qplane");
  const PresentedModel& pm = *m.presented;
  const Presentation& p = pm.pres;
  const ParamSetPtr& ps = p.params();
  const int x = static_cast<int>(*p.gen_id("x"));
  const int y = static_cast<int>(*p.gen_id("y"));
  Scalar q = Scalar::param(ps, "q");
  Scalar q2 = q * q;
  Scalar one = Scalar::one(ps);

  const BraidingTable& b = *pm.braiding;
  std::map<std::pair<int, int>, BraidMap> want;
  want[{x, x}] = BraidMap{{{x, x}, q2}};
  want[{x, y}] = BraidMap{{{y, x}, q}};
  want[{y, x}] = BraidMap{{{x, y}, q}, {{y, x}, q2 - one}};
  want[{y, y}] = BraidMap{{{y, y}, q2}};
  for (const auto& [pair, table] : want)
    expect(fails, braid_map(b.entry[pair.first][pair.second]) == table,
           "braiding of (" + p.gen_name(pair.first) + ", " +
               p.gen_name(pair.second) + ") differs from the q-plane exchange");

  expect(fails, run_check(m, "braided-hopf", 2).pass,
         "the additive coproduct does not respect y.x - q*x.y braided at degree 2");

  Model flipped = m;
  flipped.presented->braiding = BraidingTable::flip(p.ngens(), ps);
  CheckReport flip_report = run_check(flipped, "braided-hopf", 2);
  expect(fails, !flip_report.pass,
         "replacing the braiding by the flip should break the coproduct check");

  // Classical limit: the braiding degenerates to the flip and the relation
  // to commutativity.
  BraidingTable at_one;
  at_one.entry.resize(p.ngens(), std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>(p.ngens()));
  for (size_t g = 0; g < p.ngens(); ++g)
    for (size_t h = 0; h < p.ngens(); ++h)
      for (const auto& [g2, h2, c] : b.entry[g][h]) {
        Scalar lim = c.limit_at("q", Rat(1));
        if (!lim.is_zero()) at_one.entry[g][h].emplace_back(g2, h2, lim);
      }
  expect(fails, at_one.is_flip(), "the braiding at q = 1 is not the flip");
  expect(fails, p.rules().size() == 1, "the q-plane should have one relation");
  expect(fails,
         p.rules().front().rhs.limited("q", Rat(1)) ==
             p.word({p.rules().front().lhs[1], p.rules().front().lhs[0]}),
         "the relation at q = 1 is not commutativity");
}

// ------------------------------------------------------------ criterion 8

void criterion8(Fails& fails) {
  ParamSetPtr ps = make_params({"q"});
  RMatrix r = RMatrix::standard_sl2(ps);
  expect(fails, rmatrix_biinvertible(r), "standard R is not biinvertible");
  BraidedMatrices bm = braided_matrices(r);
  expect(fails, bm.pres.rules().size() == 6,
         "braided matrices of the 2x2 R should carry 6 relations");

  Model m = build_model("braided_matrices_sl2");
  expect(fails, run_check(m, "braided-hopf", 2).pass,
         "Delta u = u (x) u does not respect the relations braided at degree 2");

  const Presentation& p = m.presented->pres;
  for (const RewriteRule& rule : p.rules()) {
    expect(fails, rule.lhs.size() == 2,
           "relation head " + word_str(rule.lhs, p.gen_names()) +
               " is not a two-letter word");
    if (rule.lhs.size() != 2) continue;
    Element classical = rule.rhs.limited("q", Rat(1));
    expect(fails, classical == p.word({rule.lhs[1], rule.lhs[0]}),
           "relation " + word_str(rule.lhs, p.gen_names()) +
               " is not a commutator at q = 1");
  }
}

// ------------------------------------------------------------ criterion 9

void criterion9(Fails& fails) {
  Model m = build_model("bicso3");
  const Presentation& p = m.presented->pres;
  expect(fails, overlap_confluence(p, 3).empty(),
         "rewrite system is not confluent on overlaps up to degree 3");

  Element e1 = p.gen(*p.gen_id("e1"));
  Element e2 = p.gen(*p.gen_id("e2"));
  Element expected = parse_element(p, "i*hbar*e3");
  expect(fails, p.commutator(e1, e2) == expected,
         "[e1, e2] differs from i*hbar*e3");

  CheckReport hopf = run_check(m, "hopf-axioms", 3);
  expect(fails, hopf.pass,
         "a Hopf check fails at degree 3" +
             (hopf.violations.empty()
                  ? std::string()
                  : " (" + hopf.violations.front().item + ")"));
}

// ----------------------------------------------------------- criterion 10

Element random_element(const Presentation& p, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), wlen(0, 3), coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(p.ngens()) - 1);
  const ParamSetPtr& ps = p.params();
  Element e;
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = wlen(rng);
    for (int k = 0; k < len; ++k) w.push_back(pick(rng));
    int c = coeff(rng);
    if (c == 0) c = 1;
    Scalar s = Scalar::integer(ps, c);
    if (rng() % 4 == 0) s = s * Scalar::imag_unit(ps);
    e.add(w, s);
  }
  return e;
}

void criterion10(Fails& fails, Clock::time_point suite_start) {
  std::mt19937 rng(41);
  for (const char* name :
       {"planck1d", "bicso3", "qplane", "frt_sl2", "braided_matrices_sl2"}) {
    Model m = build_model(name);
    const Presentation& p = m.presented->pres;
    const ParamSetPtr& ps = p.params();
    long bad_idem = 0, bad_add = 0, bad_scale = 0;
    for (int t = 0; t < 1000; ++t) {
      Element a = random_element(p, rng);
      Element b = random_element(p, rng);
      Element na = p.normal_form(a);
      if (p.normal_form(na) != na) ++bad_idem;
      if (p.normal_form(a + b) != na + p.normal_form(b)) ++bad_add;
      Scalar c = Scalar::integer(ps, 2) + Scalar::imag_unit(ps);
      if (p.normal_form(a.scaled(c)) != na.scaled(c)) ++bad_scale;
    }
    std::string tag(name);
    expect(fails, bad_idem == 0,
           tag + ": normal form is not idempotent on " +
               std::to_string(bad_idem) + " of 1000 random elements");
    expect(fails, bad_add == 0,
           tag + ": normal form is not additive on " + std::to_string(bad_add) +
               " of 1000 random pairs");
    expect(fails, bad_scale == 0,
           tag + ": normal form does not commute with scaling on " +
               std::to_string(bad_scale) + " of 1000 random elements");
  }

  Model planck = build_model("planck1d");
  const PresentedModel& pm = *planck.presented;
  const Presentation& p = pm.pres;
  Element h = parse_element(p, "(1/(2*m))*p.p");
  long bad_flow = 0;
  for (int t = 0; t < 100; ++t) {
    Element a = random_element(p, rng);
    Element b = random_element(p, rng);
    Element lhs = heisenberg_flow(pm, h, p.normal_form(a * b)).quantum;
    Element rhs = p.normal_form(heisenberg_flow(pm, h, a).quantum * b +
                                a * heisenberg_flow(pm, h, b).quantum);
    if (lhs != rhs) ++bad_flow;
  }
  expect(fails, bad_flow == 0,
         "flow fails the derivation law on " + std::to_string(bad_flow) +
             " of 100 random pairs");

  for (const char* name :
       {"planck1d", "bicso3", "qplane", "frt_sl2", "braided_matrices_sl2"}) {
    std::string path = std::string(QGEO_MODELS_DIR) + "/" + name + ".dsl";
    std::string text = slurp(path);
    expect(fails, !text.empty(), path + " is missing or empty");
    if (text.empty()) continue;
    std::string printed = print_dsl(parse_dsl(text));
    expect(fails, printed == text,
           path + " does not round-trip through parse and print");
  }

  double total = seconds_since(suite_start);
  expect(fails, total < 300.0,
         "whole suite took " + std::to_string(total) + "s, limit 300s");
}

}  // namespace

int main() {
  struct Scenario {
    int number;
    const char* title;
    double limit_s;
    void (*body)(Fails&);
  };

  Clock::time_point suite_start = Clock::now();
  const std::vector<Scenario> scenarios = {
      {1, "function and group Hopf algebras satisfy every axiom", 25.0,
       criterion1},
      {2, "bicrossproducts: axioms, morphisms, dual = swapped factors", 60.0,
       criterion2},
      {3, "Fourier on S3 turns convolution into the group product", 1.0,
       criterion3},
      {4, "deformed phase space: confluence, commutator, Hopf checks, flow",
       10.0, criterion4},
      {5, "Yang-Baxter: identity, flip, standard R, oracle, perturbations",
       5.0, criterion5},
      {6, "FRT pairing on generators and degree-2 words; broken R detected",
       30.0, criterion6},
      {7, "braided plane: exchange table, braided coproduct, classical limit",
       5.0, criterion7},
      {8, "braided matrices: construction, braided coproduct, classical limit",
       60.0, criterion8},
      {9, "deformed 3d space: confluence, commutator, Hopf checks", 120.0,
       criterion9},
  };

  int failed = 0;
  auto report = [&](int number, const char* title, double limit_s, Fails fails,
                    double dt) {
    if (dt > limit_s)
      fails.push_back("took " + std::to_string(dt) + "s, limit " +
                      std::to_string(limit_s) + "s");
    std::printf("[%s] criterion %2d (%6.2fs, limit %gs): %s\n",
                fails.empty() ? "PASS" : "FAIL", number, dt, limit_s, title);
    for (const std::string& f : fails) std::printf("         - %s\n", f.c_str());
    if (!fails.empty()) ++failed;
  };

  for (const Scenario& s : scenarios) {
    Fails fails;
    Clock::time_point t0 = Clock::now();
    try {
      s.body(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    report(s.number, s.title, s.limit_s, std::move(fails), seconds_since(t0));
  }

  {
    Fails fails;
    Clock::time_point t0 = Clock::now();
    try {
      criterion10(fails, suite_start);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    report(10, "random-element laws, flow derivation, document round-trips",
           300.0, std::move(fails), seconds_since(t0));
  }

  std::printf("%d of 10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
