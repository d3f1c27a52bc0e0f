// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Free associative algebras presented by generators and oriented rewrite
// rules.  Elements are exact linear combinations of words; a presentation
// carries a monomial order (weighted degree-lexicographic) under which every
// rule strictly decreases, so rewriting terminates and normal forms are well
// defined whenever the system is confluent.  Tensor powers of a presented
// algebra are themselves presentations on disjoint generator copies, with
// cross-commutation rules given either by the plain flip or by a braiding
// table on generators.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "scalars.hpp"

namespace qgeo {

using GenId = int;
using Word = std::vector<GenId>;  // empty word = algebra unit

std::string word_str(const Word& w, const std::vector<std::string>& names);

// Formats a linear combination as a +/- chain: parts are (item, coefficient)
// in final display order, the item "1" standing for the unit.
std::string format_linear(const std::vector<std::pair<std::string, Scalar>>& parts);

// ------------------------------------------------------------------------
// Element: finite linear combination of words with Scalar coefficients.
// Stored sparsely; words with zero coefficient are never kept.
class Element {
 public:
  Element() = default;
  Element(const Scalar& c, Word w);
  static Element from_word(Word w, const Scalar& c) { return Element(c, std::move(w)); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  // Adds c * w, merging with an existing term and dropping exact zeros.
  void add(const Word& w, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;  // concatenation product
  Element scaled(const Scalar& c) const;
  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // Coefficient of w (zero scalar over ps if absent).
  Scalar coeff(const Word& w, const ParamSetPtr& ps) const;

  // Applies Scalar::substitute to every coefficient (may throw Pole).
  Element substituted(const std::map<std::string, Scalar>& bindings) const;
  // Applies Scalar::limit_at to every coefficient.
  Element limited(const std::string& name, const Rat& value) const;

 private:
  std::map<Word, Scalar> terms_;
};

// ------------------------------------------------------------------------
// RewriteRule: oriented relation  lhs -> rhs.  The presentation validates
// that every word of rhs is strictly smaller than lhs in its word order.
struct RewriteRule {
  Word lhs;
  Element rhs;
};

// ------------------------------------------------------------------------
// Presentation: ordered generators (optionally weighted), rewrite rules,
// and a step budget bounding the total number of rule applications in a
// single normal-form computation.
class Presentation {
 public:
  static constexpr uint64_t kDefaultBudget = 1000000;

  Presentation(std::string name, ParamSetPtr params,
               std::vector<std::string> gen_names,
               std::vector<uint32_t> weights = {},
               uint64_t step_budget = kDefaultBudget);

  const std::string& name() const { return name_; }
  const ParamSetPtr& params() const { return params_; }
  size_t ngens() const { return gen_names_.size(); }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const std::string& gen_name(GenId g) const { return gen_names_.at(g); }
  const std::vector<uint32_t>& gen_weights() const { return weights_; }
  std::optional<GenId> gen_id(const std::string& name) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }

  uint64_t step_budget() const { return budget_; }
  void set_step_budget(uint64_t b) { budget_ = b; }

  // Word order: weighted degree first, then length, then lexicographic on
  // generator indices.  Compatible with concatenation and well founded.
  uint64_t word_weight(const Word& w) const;
  bool word_less(const Word& a, const Word& b) const;

  // Validates the descent invariant (every rhs word < lhs) and registers
  // the rule.  Rules are matched in insertion order.
  void add_rule(Word lhs, Element rhs);

  // Convenience element factories over this presentation's parameters.
  Element unit() const { return Element(Scalar::one(params_), {}); }
  Element gen(GenId g) const { return Element(Scalar::one(params_), {g}); }
  Element word(Word w) const { return Element(Scalar::one(params_), std::move(w)); }
  Element word(Word w, const Scalar& c) const { return Element(c, std::move(w)); }

  // Rewrites until no rule applies; throws BudgetExceeded if the number of
  // rule applications passes the step budget.  Deterministic strategy:
  // smallest pending word, leftmost match, first matching rule.
  Element normal_form(const Element& e) const;
  // Same result set of reachable normal forms explored with randomly chosen
  // match positions/rules; used to test strategy independence.
  Element normal_form_random(const Element& e, std::mt19937_64& rng) const;

  bool is_normal_word(const Word& w) const;
  bool is_normal(const Element& e) const;

  Element mul_nf(const Element& a, const Element& b) const;
  Element commutator(const Element& a, const Element& b) const;  // NF(ab - ba)

  // All rewrite-irreducible words of length <= max_len, shortest first,
  // lexicographically within a length.
  std::vector<Word> normal_words_up_to(size_t max_len) const;

  // Canonical printing of an element, terms in decreasing word order.
  std::string element_str(const Element& e) const;

 private:
  std::optional<std::pair<size_t, size_t>> first_match(const Word& w) const;  // (pos, rule)
  std::vector<std::pair<size_t, size_t>> all_matches(const Word& w) const;
  Element rewrite_with(const Word& w, size_t pos, size_t rule_idx) const;

  std::string name_;
  ParamSetPtr params_;
  std::vector<std::string> gen_names_;
  std::vector<uint32_t> weights_;
  uint64_t budget_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<size_t>> rules_by_first_;  // rule indices by lhs front gen
  size_t max_lhs_len_ = 0;
};

// ------------------------------------------------------------------------
// Local-confluence analysis.  Every overlap (shared prefix/suffix or
// containment) of two rule left-hand sides up to max_degree (word length of
// the overlap word) is resolved both ways; a nonzero residual after
// normalization is reported.
struct ConfluenceIssue {
  Word overlap;
  size_t rule_a = 0;
  size_t rule_b = 0;
  Element residual;  // NF(way a) - NF(way b), nonzero
};

std::vector<ConfluenceIssue> overlap_confluence(const Presentation& p, size_t max_degree);

// ------------------------------------------------------------------------
// Generator-level braiding table: psi(g (x) h) = sum c * (g2 (x) h2).
struct BraidingTable {
  // entry[g][h] = list of (g2, h2, c)
  std::vector<std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>> entry;

  size_t ngens() const { return entry.size(); }
  static BraidingTable flip(size_t ngens, const ParamSetPtr& ps);
  bool is_flip() const;
};

// ------------------------------------------------------------------------
// TensorSpace: the k-fold tensor power of a presented algebra realized as a
// presentation on k disjoint generator copies.  A normal word is sorted by
// copy, so it splits uniquely into one factor word per copy.  Products of
// embedded elements are computed with cross rules moving higher copies left
// past lower ones, either by the flip (ordinary tensor product of algebras)
// or by a braiding table (braided tensor product).
class TensorSpace {
 public:
  TensorSpace(const Presentation& base, int factors,
              const BraidingTable* braiding = nullptr);

  const Presentation& pres() const { return pres_; }
  const Presentation& base() const { return *base_; }
  int factors() const { return factors_; }
  bool braided() const { return braided_; }

  GenId lift(GenId base_gen, int copy) const;
  int copy_of(GenId g) const { return static_cast<int>(g) / static_cast<int>(base_->ngens()); }
  GenId base_gen(GenId g) const { return g % static_cast<GenId>(base_->ngens()); }

  // Image of a base-algebra element in tensor factor `copy` (1 elsewhere).
  Element embed(const Element& e, int copy) const;
  // Pure tensor  t1 (x) t2 (x) ...  of base elements (size <= factors; the
  // remaining factors are 1).  Computed as the product of embeddings, so the
  // result is in normal form.
  Element tensor(const std::vector<Element>& parts) const;
  // Re-embeds an element of another tensor space of the same base algebra,
  // sending its copy j to copy j + offset.  The source element must be in
  // normal form; cross rules are re-applied afterwards if needed.
  Element embed_from(const TensorSpace& src, const Element& e, int offset) const;

  // Splits a copy-sorted word into one base word per factor.
  std::vector<Word> split(const Word& w) const;
  // Pretty printer: terms like  "p|lam + 1|p"  (tensor factors joined by |).
  std::string str(const Element& e) const;

 private:
  const Presentation* base_;
  int factors_;
  bool braided_;
  Presentation pres_;
};

}  // namespace qgeo
