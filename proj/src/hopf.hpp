// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Hopf-algebra structure on presented algebras: multiplicative extension of
// generator-level maps, coproduct/counit/antipode axiom checks over tensor
// squares and cubes, and exact finite-dimensional Hopf algebras given by
// structure constants, with duality, pairing, and isomorphism search.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freealg.hpp"

namespace qgeo {

// One failed identity: the item it was checked on and the nonzero residual,
// both printed canonically.
struct CheckViolation {
  std::string item;
  std::string residual;
};

// ------------------------------------------------------------------------
// AlgebraMap: the unique unital multiplicative (or anti-multiplicative)
// extension of a generator assignment src -> dst.  Evaluation normalizes in
// the target presentation.
class AlgebraMap {
 public:
  AlgebraMap(const Presentation& src, const Presentation& dst,
             std::vector<Element> gen_images, bool anti = false);

  const Presentation& src() const { return *src_; }
  const Presentation& dst() const { return *dst_; }
  bool anti() const { return anti_; }
  const Element& gen_image(GenId g) const { return images_.at(g); }

  Element apply_word(const Word& w) const;
  Element apply(const Element& e) const;

  // For each rewrite rule lhs -> rhs of the source, the residual
  // NF(map(lhs) - map(rhs)) must vanish in the target.
  std::vector<CheckViolation> relation_violations() const;
  bool respects_relations() const { return relation_violations().empty(); }

 private:
  const Presentation* src_;
  const Presentation* dst_;
  std::vector<Element> images_;
  bool anti_;
};

// ------------------------------------------------------------------------
// HopfChecker: a presented algebra together with generator-level coproduct,
// counit, and (optionally) antipode, plus the machinery to verify the Hopf
// axioms exactly on all normal words up to a degree bound.  With a braiding
// the tensor square/cube use braided cross relations, otherwise the flip.
//
// Coproduct input: Delta(g) = sum coeff * (left (x) right) with left/right
// elements of the base algebra.
struct TensorTerm {
  Element left;
  Element right;
  Scalar coeff;
};

class HopfChecker {
 public:
  HopfChecker(const Presentation& alg,
              std::vector<std::vector<TensorTerm>> coproduct,
              std::vector<Scalar> counit,
              std::vector<Element> antipode,  // empty vector: no antipode given
              const BraidingTable* braiding = nullptr);

  const Presentation& alg() const { return *alg_; }
  const TensorSpace& t2() const { return t2_; }
  const TensorSpace& t3() const { return t3_; }
  bool braided() const { return t2_.braided(); }
  bool has_antipode() const { return antipode_.has_value(); }

  Element delta(const Element& e) const;     // element of t2().pres()
  Scalar eps(const Element& e) const;
  Element antipode(const Element& e) const;  // anti-multiplicative extension

  // Structure maps must send every defining relation to zero.
  std::vector<CheckViolation> coproduct_respects_relations() const;
  std::vector<CheckViolation> counit_respects_relations() const;
  std::vector<CheckViolation> antipode_respects_relations() const;

  // (Delta (x) id)Delta = (id (x) Delta)Delta on generators and all normal
  // words of length <= max_degree.
  std::vector<CheckViolation> coassociativity(size_t max_degree) const;
  // (eps (x) id)Delta = id = (id (x) eps)Delta.
  std::vector<CheckViolation> counit_axiom(size_t max_degree) const;
  // m(S (x) id)Delta = unit . eps = m(id (x) S)Delta.
  std::vector<CheckViolation> antipode_axiom(size_t max_degree) const;

 private:
  Scalar eps_word(const Word& w) const;
  std::vector<Word> check_words(size_t max_degree) const;

  const Presentation* alg_;
  TensorSpace t2_;
  TensorSpace t3_;
  std::optional<AlgebraMap> delta_;            // alg -> t2
  std::vector<Scalar> counit_;
  std::optional<AlgebraMap> antipode_;         // alg -> alg, anti
  std::optional<AlgebraMap> delta_left_;       // t2 -> t3: (Delta (x) id)
  std::optional<AlgebraMap> delta_right_;      // t2 -> t3: (id (x) Delta)
};

// ------------------------------------------------------------------------
// FinHopf: a finite-dimensional Hopf algebra by exact structure constants.
using SparseVec = std::map<size_t, Scalar>;                      // H
using SparseMat = std::map<std::pair<size_t, size_t>, Scalar>;   // H (x) H

void vec_add(SparseVec& target, size_t idx, const Scalar& c);
void mat_add(SparseMat& target, size_t i, size_t j, const Scalar& c);

class FinHopf {
 public:
  FinHopf(std::string name, ParamSetPtr ps, std::vector<std::string> basis,
          std::vector<std::vector<SparseVec>> product, SparseVec unit,
          std::vector<SparseMat> coproduct, std::vector<Scalar> counit,
          std::vector<SparseVec> antipode);

  const std::string& name() const { return name_; }
  const ParamSetPtr& params() const { return ps_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }

  const SparseVec& unit_vec() const { return unit_; }
  const SparseVec& product_const(size_t i, size_t j) const { return product_[i][j]; }
  const SparseMat& coproduct_const(size_t i) const { return coproduct_[i]; }
  const Scalar& counit_const(size_t i) const { return counit_[i]; }
  const SparseVec& antipode_const(size_t i) const { return antipode_[i]; }

  SparseVec basis_vec(size_t i) const;
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparseMat mul2(const SparseMat& a, const SparseMat& b) const;
  SparseMat delta(const SparseVec& a) const;
  Scalar eps(const SparseVec& a) const;
  SparseVec antipode(const SparseVec& a) const;

  // The five Hopf axiom families, each verified by full enumeration:
  // associativity-unit, coassociativity-counit, coproduct-multiplicative,
  // counit-multiplicative, antipode.
  std::vector<std::pair<std::string, std::vector<CheckViolation>>> check_axioms() const;
  bool passes_axioms() const;

  // Dual Hopf algebra on the dual basis: product and coproduct constants
  // transposed, unit and counit swapped, antipode transposed.
  FinHopf dual() const;

  // Structure-constant equality (basis labels and name ignored).
  bool structure_equal(const FinHopf& o) const;

  std::string vec_str(const SparseVec& v) const;
  std::string mat_str(const SparseMat& m) const;

 private:
  std::string name_;
  ParamSetPtr ps_;
  std::vector<std::string> basis_;
  std::vector<std::vector<SparseVec>> product_;
  SparseVec unit_;
  std::vector<SparseMat> coproduct_;
  std::vector<Scalar> counit_;
  std::vector<SparseVec> antipode_;
};

// <f, a> = sum_i f_i a_i in the canonical pairing of H* with H.
Scalar pairing_eval(const FinHopf& h, const SparseVec& a, const SparseVec& f);

// Searches for a basis bijection perm (A index -> B index) transporting all
// five structure maps of A onto those of B.  Color refinement prunes the
// backtracking; any returned permutation has been fully verified.
std::optional<std::vector<size_t>> find_hopf_iso(const FinHopf& a, const FinHopf& b);

// A linear map A -> B given by basis images, checked to be a morphism of
// Hopf algebras by enumeration: multiplicative, unital, comultiplicative,
// counital, and commuting with the antipodes.
std::vector<CheckViolation> hopf_morphism_violations(const FinHopf& a, const FinHopf& b,
                                                     const std::vector<SparseVec>& images);

// Multiplicative extension of a generator assignment from a presented
// algebra into a FinHopf, with the same relation check as AlgebraMap.
class FinAlgebraMap {
 public:
  FinAlgebraMap(const Presentation& src, const FinHopf& dst,
                std::vector<SparseVec> gen_images);
  SparseVec apply_word(const Word& w) const;
  SparseVec apply(const Element& e) const;
  std::vector<CheckViolation> relation_violations() const;

 private:
  const Presentation* src_;
  const FinHopf* dst_;
  std::vector<SparseVec> images_;
};

}  // namespace qgeo
