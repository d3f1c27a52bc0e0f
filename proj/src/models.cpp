// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
#include "models.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace qgeo {

namespace {

// One solution of the rectangular exact linear system a[.][0..ncols-1] * c =
// a[.][ncols] (the matrix is passed augmented).  Free variables are set to
// zero; nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_augmented(const ParamSetPtr& ps,
                                                   std::vector<std::vector<Scalar>> a,
                                                   size_t ncols) {
  size_t nrows = a.size();
  std::vector<long> pivot_row(ncols, -1);
  size_t prow = 0;
  for (size_t col = 0; col < ncols && prow < nrows; ++col) {
    size_t sel = nrows;
    for (size_t r = prow; r < nrows; ++r) {
      if (!a[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == nrows) continue;
    std::swap(a[prow], a[sel]);
    Scalar inv = a[prow][col].inverse();
    for (size_t c = col; c <= ncols; ++c) a[prow][c] = a[prow][c] * inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == prow || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (size_t c = col; c <= ncols; ++c) a[r][c] = a[r][c] - f * a[prow][c];
    }
    pivot_row[col] = static_cast<long>(prow);
    ++prow;
  }
  for (size_t r = prow; r < nrows; ++r)
    if (!a[r][ncols].is_zero()) return std::nullopt;
  std::vector<Scalar> sol(ncols, Scalar::zero(ps));
  for (size_t col = 0; col < ncols; ++col)
    if (pivot_row[col] >= 0) sol[col] = a[static_cast<size_t>(pivot_row[col])][ncols];
  return sol;
}

// Antipode of a word over already-solved generators, extended
// anti-multiplicatively: S(g1 g2 ... gk) = S(gk) ... S(g1).
std::optional<Element> antipode_of_word(const Presentation& p,
                                        const std::vector<std::optional<Element>>& sol,
                                        const Word& w) {
  Element acc = p.unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!sol[static_cast<size_t>(*it)]) return std::nullopt;
    acc = p.normal_form(acc * *sol[static_cast<size_t>(*it)]);
  }
  return acc;
}

}  // namespace

std::optional<Element> invert_element(const Presentation& p, const Element& x,
                                      size_t max_len) {
  const ParamSetPtr& ps = p.params();
  Element nx = p.normal_form(x);
  if (nx.is_zero()) return std::nullopt;
  Element unit = p.unit();
  for (size_t d = 0; d <= max_len; ++d) {
    std::vector<Word> basis = p.normal_words_up_to(d);
    std::map<Word, size_t> row_of;
    row_of.emplace(Word{}, 0);  // the unit row carries the right-hand side
    std::vector<std::map<size_t, Scalar>> cols(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      Element prod = p.normal_form(nx * p.word(basis[j]));
      for (const auto& [w, c] : prod.terms()) {
        auto it = row_of.emplace(w, row_of.size()).first;
        cols[j][it->second] = c;
      }
    }
    std::vector<std::vector<Scalar>> a(
        row_of.size(), std::vector<Scalar>(basis.size() + 1, Scalar::zero(ps)));
    for (size_t j = 0; j < basis.size(); ++j)
      for (const auto& [r, c] : cols[j]) a[r][j] = c;
    a[0][basis.size()] = Scalar::one(ps);
    std::optional<std::vector<Scalar>> sol = solve_augmented(ps, std::move(a), basis.size());
    if (!sol) continue;
    Element z;
    for (size_t j = 0; j < basis.size(); ++j)
      if (!(*sol)[j].is_zero()) z.add(basis[j], (*sol)[j]);
    if (p.normal_form(nx * z) == unit && p.normal_form(z * nx) == unit) return z;
  }
  return std::nullopt;
}

std::vector<Element> solve_antipodes(
    const Presentation& p, const std::vector<std::vector<TensorTerm>>& coproduct,
    const std::vector<Scalar>& counit) {
  size_t n = p.ngens();
  if (coproduct.size() != n || counit.size() != n)
    fail(Err::Dimension, "solve_antipodes: coproduct and counit must cover every generator");
  std::vector<std::optional<Element>> sol(n);
  std::string blocker;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t g = 0; g < n; ++g) {
      if (sol[g]) continue;
      // Split m(S (x) id)Delta(g) = S(g) * x_mult + known at the word level
      // of every left tensor leg.
      Element x_mult;
      Element known;
      bool isolatable = true;
      for (const TensorTerm& t : coproduct[g]) {
        for (const auto& [w, c] : t.left.terms()) {
          bool has_unsolved = false;
          for (GenId h : w)
            if (!sol[static_cast<size_t>(h)]) {
              has_unsolved = true;
              break;
            }
          Scalar coeff = c * t.coeff;
          if (!has_unsolved) {
            known = known + (*antipode_of_word(p, sol, w) * t.right).scaled(coeff);
          } else if (w.size() == 1 && w[0] == static_cast<GenId>(g)) {
            x_mult = x_mult + t.right.scaled(coeff);
          } else {
            isolatable = false;
            break;
          }
        }
        if (!isolatable) break;
      }
      if (!isolatable) {
        blocker = "S(" + p.gen_name(g) + ") appears inside a composite coproduct leg";
        continue;
      }
      Element x_nf = p.normal_form(x_mult);
      Element target = p.normal_form(p.unit().scaled(counit[g]) - known);
      if (x_nf.is_zero()) {
        blocker = "the coproduct of " + p.gen_name(g) + " has no term with bare left leg " +
                  p.gen_name(g);
        continue;
      }
      if (x_nf == p.unit()) {
        sol[g] = target;
      } else {
        std::optional<Element> inv = invert_element(p, x_nf, 3);
        if (!inv) {
          blocker = "the coproduct cofactor " + p.element_str(x_nf) + " of " + p.gen_name(g) +
                    " is not invertible";
          continue;
        }
        sol[g] = p.normal_form(target * *inv);
      }
      progress = true;
    }
  }
  for (size_t g = 0; g < n; ++g)
    if (!sol[g])
      fail(Err::Construction, "antipode construction failed: cannot isolate S(" +
                                  p.gen_name(g) + ")" +
                                  (blocker.empty() ? "" : " (" + blocker + ")"));
  // The solving used the left-handed axiom; verify both sides on generators.
  for (size_t g = 0; g < n; ++g) {
    Element lhs;
    Element rhs;
    for (const TensorTerm& t : coproduct[g]) {
      for (const auto& [w, c] : t.left.terms())
        lhs = lhs + (*antipode_of_word(p, sol, w) * t.right).scaled(c * t.coeff);
      for (const auto& [w, c] : t.right.terms())
        rhs = rhs + (t.left * *antipode_of_word(p, sol, w)).scaled(c * t.coeff);
    }
    Element want = p.unit().scaled(counit[g]);
    if (p.normal_form(lhs) != want || p.normal_form(rhs) != want)
      fail(Err::Construction,
           "antipode construction failed: solved values violate the axiom on " + p.gen_name(g));
  }
  std::vector<Element> out;
  out.reserve(n);
  for (size_t g = 0; g < n; ++g) out.push_back(*sol[g]);
  return out;
}

// ------------------------------------------------------------------------

Model planck_model() {
  ParamSetPtr ps = make_params({"hbar", "mu", "m"});
  Presentation p("planck1d", ps, {"x", "lam", "lam_inv", "p"});
  Scalar one = Scalar::one(ps);
  Scalar ih = Scalar::imag_unit(ps) * Scalar::param(ps, "hbar");
  Scalar mu = Scalar::param(ps, "mu");
  const GenId x = 0, lam = 1, lam_inv = 2, mom = 3;
  // The function generators commute; lam and lam_inv are mutually inverse.
  p.add_rule({lam, x}, p.word({x, lam}));
  p.add_rule({lam_inv, x}, p.word({x, lam_inv}));
  p.add_rule({lam, lam_inv}, p.unit());
  p.add_rule({lam_inv, lam}, p.unit());
  // [x, p] = i hbar (1 - lam), and the induced rules on lam, lam_inv.
  p.add_rule({mom, x}, p.word({x, mom}) - p.unit().scaled(ih) + p.word({lam}, ih));
  p.add_rule({mom, lam},
             p.word({lam, mom}) + p.word({lam}, ih * mu) - p.word({lam, lam}, ih * mu));
  p.add_rule({mom, lam_inv}, p.word({lam_inv, mom}) - p.word({lam_inv}, ih * mu) +
                                 p.unit().scaled(ih * mu));

  std::vector<std::vector<TensorTerm>> cop(4);
  cop[x] = {{p.gen(x), p.unit(), one}, {p.unit(), p.gen(x), one}};
  cop[lam] = {{p.gen(lam), p.gen(lam), one}};
  cop[lam_inv] = {{p.gen(lam_inv), p.gen(lam_inv), one}};
  cop[mom] = {{p.gen(mom), p.gen(lam), one}, {p.unit(), p.gen(mom), one}};
  std::vector<Scalar> cu = {Scalar::zero(ps), one, one, Scalar::zero(ps)};
  std::vector<Element> s = solve_antipodes(p, cop, cu);

  Model m;
  m.name = "planck1d";
  m.presented = PresentedModel{std::move(p), std::move(cop), std::move(cu), std::move(s),
                               std::nullopt, std::nullopt};
  return m;
}

Model bicso3_model() {
  ParamSetPtr ps = make_params({"hbar", "mu"});
  // The rotation generators carry weight 3 so that the cubic function terms
  // in their cross relations stay below the rule's leading word.
  Presentation p("bicso3", ps, {"x1", "x2", "x3", "muhat", "e1", "e2", "e3"},
                 {1, 1, 1, 1, 3, 3, 3});
  Scalar one = Scalar::one(ps);
  Scalar ih = Scalar::imag_unit(ps) * Scalar::param(ps, "hbar");
  Scalar mu = Scalar::param(ps, "mu");
  Scalar imu = mu.inverse();
  const GenId x1 = 0, x2 = 1, x3 = 2, muh = 3, e1 = 4, e2 = 5, e3 = 6;
  // Functions commute among themselves; muhat (1 + mu x3) = 1 both ways.
  p.add_rule({x2, x1}, p.word({x1, x2}));
  p.add_rule({x3, x1}, p.word({x1, x3}));
  p.add_rule({x3, x2}, p.word({x2, x3}));
  p.add_rule({muh, x1}, p.word({x1, muh}));
  p.add_rule({muh, x2}, p.word({x2, muh}));
  Element inv_rel = p.unit().scaled(imu) - p.word({muh}, imu);
  p.add_rule({x3, muh}, inv_rel);
  p.add_rule({muh, x3}, inv_rel);
  // Rotation algebra: [e_i, e_j] = i hbar eps_{ijk} e_k.
  p.add_rule({e2, e1}, p.word({e1, e2}) - p.word({e3}, ih));
  p.add_rule({e3, e1}, p.word({e1, e3}) + p.word({e2}, ih));
  p.add_rule({e3, e2}, p.word({e2, e3}) - p.word({e1}, ih));
  // Cross relations: [e_i, x_j] = i hbar eps_{ijk} x_k
  //                              - (i hbar mu / 2) eps_{ij3} (x.x) muhat.
  Element xx_muh = p.word({x1, x1, muh}) + p.word({x2, x2, muh}) + p.word({x3, x3, muh});
  Scalar half_ihmu = ih * mu * Scalar::rational(ps, Rat(1, 2));
  p.add_rule({e1, x1}, p.word({x1, e1}));
  p.add_rule({e1, x2}, p.word({x2, e1}) + p.word({x3}, ih) - xx_muh.scaled(half_ihmu));
  p.add_rule({e1, x3}, p.word({x3, e1}) - p.word({x2}, ih));
  p.add_rule({e2, x1}, p.word({x1, e2}) - p.word({x3}, ih) + xx_muh.scaled(half_ihmu));
  p.add_rule({e2, x2}, p.word({x2, e2}));
  p.add_rule({e2, x3}, p.word({x3, e2}) + p.word({x1}, ih));
  p.add_rule({e3, x1}, p.word({x1, e3}) + p.word({x2}, ih));
  p.add_rule({e3, x2}, p.word({x2, e3}) - p.word({x1}, ih));
  p.add_rule({e3, x3}, p.word({x3, e3}));
  // Closure of the cross relations on muhat itself:
  // [e1, muhat] = i hbar mu x2 muhat^2, [e2, muhat] = -i hbar mu x1 muhat^2.
  p.add_rule({e1, muh}, p.word({muh, e1}) + p.word({x2, muh, muh}, ih * mu));
  p.add_rule({e2, muh}, p.word({muh, e2}) - p.word({x1, muh, muh}, ih * mu));
  p.add_rule({e3, muh}, p.word({muh, e3}));

  std::vector<std::vector<TensorTerm>> cop(7);
  for (GenId xi : {x1, x2, x3})
    cop[xi] = {{p.gen(xi), p.unit(), one},
               {p.unit(), p.gen(xi), one},
               {p.gen(x3), p.gen(xi), mu}};
  cop[muh] = {{p.gen(muh), p.gen(muh), one}};
  for (int i = 0; i < 3; ++i) {
    GenId ei = static_cast<GenId>(e1 + i);
    GenId xi = static_cast<GenId>(x1 + i);
    cop[ei] = {{p.gen(ei), p.gen(muh), one},
               {p.gen(e3), p.word({xi, muh}), mu},
               {p.unit(), p.gen(ei), one}};
  }
  std::vector<Scalar> cu(7, Scalar::zero(ps));
  cu[muh] = one;
  std::vector<Element> s = solve_antipodes(p, cop, cu);

  Model m;
  m.name = "bicso3";
  m.presented = PresentedModel{std::move(p), std::move(cop), std::move(cu), std::move(s),
                               std::nullopt, std::nullopt};
  return m;
}

Model qplane_model() {
  ParamSetPtr ps = make_params({"q"});
  Scalar one = Scalar::one(ps);
  Scalar q = Scalar::param(ps, "q");
  Presentation p("qplane", ps, {"x", "y"});
  p.add_rule({1, 0}, p.word({0, 1}, q));
  RMatrix r = RMatrix::standard_sl2(ps);
  BraidingTable psi = braiding_from_rmatrix(r, q);
  std::vector<std::vector<TensorTerm>> cop(2);
  for (GenId g : {0, 1})
    cop[g] = {{p.gen(g), p.unit(), one}, {p.unit(), p.gen(g), one}};
  std::vector<Scalar> cu(2, Scalar::zero(ps));
  Model m;
  m.name = "qplane";
  m.presented = PresentedModel{std::move(p), std::move(cop), std::move(cu),
                               {},          std::move(psi),  std::move(r)};
  return m;
}

Model frt_sl2_model() {
  ParamSetPtr ps = make_params({"q"});
  RMatrix r = RMatrix::standard_sl2(ps);
  FrtBialgebra frt = frt_bialgebra(r);
  Model m;
  m.name = "frt_sl2";
  m.presented = PresentedModel{std::move(frt.pres),   std::move(frt.coproduct),
                               std::move(frt.counit), {},
                               std::nullopt,          std::move(frt.r)};
  return m;
}

Model braided_matrices_sl2_model() {
  ParamSetPtr ps = make_params({"q"});
  RMatrix r = RMatrix::standard_sl2(ps);
  BraidedMatrices bm = braided_matrices(r);
  Model m;
  m.name = "braided_matrices_sl2";
  m.presented = PresentedModel{std::move(bm.pres),   std::move(bm.coproduct),
                               std::move(bm.counit), {},
                               std::move(bm.braiding), std::move(r)};
  return m;
}

// ------------------------------------------------------------------------

std::vector<std::string> model_names() {
  std::vector<std::string> names = {"planck1d", "bicso3", "qplane", "frt_sl2",
                                    "braided_matrices_sl2", "bicross_S3"};
  for (const std::string& g : builtin_group_names()) {
    names.push_back("functions_" + g);
    names.push_back("groupalg_" + g);
  }
  std::sort(names.begin(), names.end());
  return names;
}

Model build_model(const std::string& name) {
  if (name == "planck1d") return planck_model();
  if (name == "bicso3") return bicso3_model();
  if (name == "qplane") return qplane_model();
  if (name == "frt_sl2") return frt_sl2_model();
  if (name == "braided_matrices_sl2") return braided_matrices_sl2_model();
  if (name == "bicross_S3") {
    FinGroup s3 = builtin_group("S3");
    std::vector<size_t> g = s3.closure({s3.index_of("c").value()});
    std::vector<size_t> mm = s3.closure({s3.index_of("t").value()});
    std::sort(g.begin(), g.end());
    std::sort(mm.begin(), mm.end());
    Factorisation f{&s3, std::move(g), std::move(mm)};
    MatchedPair mp(f);
    Bicross b = bicrossproduct(mp, "bicross_S3");
    Model m;
    m.name = name;
    FinModel fm{b.hopf, s3, std::nullopt};
    fm.bicross = std::move(b);
    m.findim = std::move(fm);
    return m;
  }
  auto group_suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string g = name.substr(prefix.size());
    std::vector<std::string> known = builtin_group_names();
    if (std::find(known.begin(), known.end(), g) == known.end()) return std::nullopt;
    return g;
  };
  if (std::optional<std::string> g = group_suffix("functions_")) {
    FinGroup grp = builtin_group(*g);
    Model m;
    m.name = name;
    m.findim = FinModel{function_hopf(grp), std::move(grp), std::nullopt};
    return m;
  }
  if (std::optional<std::string> g = group_suffix("groupalg_")) {
    FinGroup grp = builtin_group(*g);
    Model m;
    m.name = name;
    m.findim = FinModel{group_hopf(grp), std::move(grp), std::nullopt};
    return m;
  }
  fail(Err::UnknownModel, "unknown model '" + name + "'");
}

// ------------------------------------------------------------------------

Element abelianized(const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word s = w;
    std::sort(s.begin(), s.end());
    out.add(s, c);
  }
  return out;
}

FlowResult heisenberg_flow(const PresentedModel& m, const Element& h, const Element& a) {
  const ParamSetPtr& ps = m.pres.params();
  Scalar factor = Scalar::imag_unit(ps) * Scalar::param(ps, "hbar").inverse();
  Element quantum = m.pres.normal_form((h * a - a * h).scaled(factor));
  Element classical = abelianized(quantum).limited("hbar", Rat(0));
  return {std::move(quantum), std::move(classical)};
}

RegimeReport regime_report(const Rat& m, const Rat& big_m, const Rat& hbar, const Rat& g) {
  if (m <= 0 || big_m <= 0 || hbar <= 0 || g <= 0)
    fail(Err::InvalidArgument, "regime_report requires positive m, M, hbar, G");
  RegimeReport rep;
  rep.mass_product = m * big_m;
  rep.planck_mass_sq = hbar / g;
  rep.regime = rep.mass_product > rep.planck_mass_sq
                   ? "gravitational"
                   : (rep.mass_product < rep.planck_mass_sq ? "quantum" : "boundary");
  rep.note =
      "free fall: xdot = -v (1 - exp(-mu x)); "
      "horizon infall comparison: xdot = -(1 - 1/(1 + mu x / 2))";
  return rep;
}

}  // namespace qgeo
