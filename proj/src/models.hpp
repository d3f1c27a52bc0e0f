// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
#pragma once

// Built-in algebra models: a one-dimensional position/momentum algebra with
// a group-like deformation generator ("planck1d"), a three-dimensional
// rotation-invariant analogue ("bicso3"), the standard quantum plane, the
// matrix quantum group and braided matrices built from the standard 2x2
// R-matrix, and the finite-dimensional function/group/bicrossproduct Hopf
// algebras of the built-in groups.  Also: Heisenberg-style flow of an
// observable under a Hamiltonian, and an exact mass-scale regime report.

#include <optional>
#include <string>
#include <vector>

#include "braided.hpp"
#include "freealg.hpp"
#include "groups.hpp"
#include "hopf.hpp"
#include "scalars.hpp"

namespace qgeo {

// A model presented by generators and rewrite rules, with its coalgebra
// data.  `antipode` is empty when the model ships without one (bialgebras
// and braided models).  `braiding` is set for braided models, in which case
// coalgebra maps into the braided tensor square.  `rmatrix` records the
// originating R-matrix when there is one.
struct PresentedModel {
  Presentation pres;
  std::vector<std::vector<TensorTerm>> coproduct;  // one list per generator
  std::vector<Scalar> counit;                      // one value per generator
  std::vector<Element> antipode;                   // empty: none
  std::optional<BraidingTable> braiding;
  std::optional<RMatrix> rmatrix;
};

// A finite-dimensional model: a Hopf algebra on an explicit basis, plus the
// group it was built from (function/group algebras) or the bicrossproduct
// data (inclusion/projection and the two factor groups).
struct FinModel {
  FinHopf hopf;
  std::optional<FinGroup> group;
  std::optional<Bicross> bicross;
};

// A registry entry: exactly one of `presented` / `findim` is set.
struct Model {
  std::string name;
  std::optional<PresentedModel> presented;
  std::optional<FinModel> findim;
};

// ------------------------------------------------------------------------
// Exact two-sided inverse of `x`, searched as a linear combination of normal
// words of length <= max_len.  Returns nullopt when no inverse exists in
// that span.
std::optional<Element> invert_element(const Presentation& p, const Element& x,
                                      size_t max_len);

// Solve the antipode axiom  m(S (x) id)Delta(g) = counit(g) 1  for S on every
// generator, extending anti-multiplicatively over already-solved generators
// and inverting group-like factors with invert_element.  The solved values
// are checked against the right-handed axiom m(id (x) S)Delta(g) as well.
// Throws Err::Construction with a diagnostic naming the first generator whose
// antipode cannot be isolated or verified.
std::vector<Element> solve_antipodes(
    const Presentation& p, const std::vector<std::vector<TensorTerm>>& coproduct,
    const std::vector<Scalar>& counit);

// ------------------------------------------------------------------------
// Model constructors.  Parameters: planck1d uses {hbar, mu, m} where mu is
// the inverse gravitational length scale and m the test mass; bicso3 uses
// {hbar, mu}; the R-matrix models use {q}.
Model planck_model();
Model bicso3_model();
Model qplane_model();
Model frt_sl2_model();
Model braided_matrices_sl2_model();

// Registry: sorted names of every built-in model, and lookup by name.
// Unknown names raise Err::UnknownModel.
std::vector<std::string> model_names();
Model build_model(const std::string& name);

// ------------------------------------------------------------------------
// The image of a normal-formed element under letter-sorting each word, i.e.
// the linear map onto commutative monomials.
Element abelianized(const Element& e);

// Flow of observable `a` under Hamiltonian `h`:
//   quantum   = NF( (i/hbar) (h a - a h) )
//   classical = abelianized(quantum) with hbar -> 0 afterward.
// The model's parameter set must declare "hbar".
struct FlowResult {
  Element quantum;
  Element classical;
};
FlowResult heisenberg_flow(const PresentedModel& m, const Element& h,
                           const Element& a);

// ------------------------------------------------------------------------
// Exact comparison of the mass product m*M against the squared Planck mass
// hbar/G.  regime is "gravitational" (m*M > hbar/G), "quantum" (<), or
// "boundary" (=).  All four inputs must be positive rationals.  `note`
// carries the fixed free-fall versus black-hole-infall comparison text.
struct RegimeReport {
  Rat mass_product;     // m * M
  Rat planck_mass_sq;   // hbar / G
  std::string regime;   // "gravitational" | "quantum" | "boundary"
  std::string note;
};
RegimeReport regime_report(const Rat& m, const Rat& big_m, const Rat& hbar,
                           const Rat& g);

}  // namespace qgeo
