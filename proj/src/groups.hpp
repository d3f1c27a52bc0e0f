// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Finite groups with verified Cayley tables, subgroup and factorisation
// enumeration, matched pairs of actions from unique refactorisation, the
// bicrossproduct Hopf algebra of a matched pair, function/group Hopf
// algebras, and the finite Fourier transform.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf.hpp"

namespace qgeo {

class FinGroup {
 public:
  // Verifies closure/associativity, a two-sided identity, and inverses;
  // throws NotAGroup with the failing instance otherwise.
  FinGroup(std::string name, std::vector<std::string> labels,
           std::vector<std::vector<size_t>> table);

  const std::string& name() const { return name_; }
  size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_.at(i); }
  std::optional<size_t> index_of(const std::string& label) const;

  size_t mul(size_t a, size_t b) const { return table_.at(a).at(b); }
  size_t identity() const { return identity_; }
  size_t inverse(size_t a) const { return inverse_.at(a); }

  // Smallest subgroup containing the given elements.
  std::vector<size_t> closure(std::vector<size_t> elems) const;
  // Every subgroup, as sorted element-index sets ({e} and the whole group
  // included), found by closure growth.
  std::vector<std::vector<size_t>> subgroups() const;
  // The subgroup on the given (closed) element set as a standalone group.
  FinGroup subgroup_group(const std::vector<size_t>& elems, std::string name) const;

  // Generates the group from named permutations of {0..degree-1} by
  // breadth-first closure; element labels are the shortest generator words
  // ("e" for the identity).  Products compose right-to-left: (st)(i)=s(t(i)).
  static FinGroup from_permutations(
      std::string name, size_t degree,
      const std::vector<std::pair<std::string, std::vector<size_t>>>& gens);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<size_t>> table_;
  size_t identity_ = 0;
  std::vector<size_t> inverse_;
};

// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)", into a
// one-line permutation of {0..degree-1}.  Fixed points may be omitted.
std::vector<size_t> parse_cycles(const std::string& text, size_t degree);

// Built-in groups: C2, C3, C4, C2xC2, S3, D4, S4.
FinGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// Group input as JSON: {"name": ..., "labels": [...], "table": [[...]]} or
// {"name": ..., "degree": n, "perm_gens": {"a": "(1 2)", ...}}.
FinGroup group_from_json(const std::string& json_text);

// ------------------------------------------------------------------------
// An ordered factorisation X = G.M: subgroups with trivial intersection
// whose product map G x M -> X is a bijection.
struct Factorisation {
  const FinGroup* x;
  std::vector<size_t> g;  // element indices of G, sorted
  std::vector<size_t> m;  // element indices of M, sorted
};

// All ordered factorisations of X, trivial ones included.  The result is
// closed under swapping (G, M) -> (M, G).
std::vector<Factorisation> find_factorisations(const FinGroup& x, size_t order_bound = 64);

// ------------------------------------------------------------------------
// Matched pair of actions from m.g = (m |> g)(m <| g): |> is an action of M
// on the set G, <| an action of G on the set M; the compatibility identities
// are verified by enumeration at construction.
class MatchedPair {
 public:
  explicit MatchedPair(const Factorisation& f);

  const FinGroup& x() const { return *x_; }
  const std::vector<size_t>& g_elems() const { return g_; }
  const std::vector<size_t>& m_elems() const { return m_; }
  size_t ng() const { return g_.size(); }
  size_t nm() const { return m_.size(); }

  // Actions in local indices: j over M, i over G.
  size_t act_left(size_t j, size_t i) const { return left_.at(j).at(i); }   // m |> g in G
  size_t act_right(size_t j, size_t i) const { return right_.at(j).at(i); }  // m <| g in M

  size_t g_identity() const { return g_id_; }
  size_t m_identity() const { return m_id_; }
  size_t g_mul(size_t a, size_t b) const;      // local product in G
  size_t m_mul(size_t a, size_t b) const;      // local product in M
  size_t g_inv(size_t a) const;
  size_t m_inv(size_t a) const;
  const std::string& g_label(size_t i) const { return x_->label(g_.at(i)); }
  const std::string& m_label(size_t j) const { return x_->label(m_.at(j)); }

 private:
  const FinGroup* x_;
  std::vector<size_t> g_, m_;            // X indices
  std::vector<size_t> g_local_, m_local_;  // X index -> local index (or npos)
  std::vector<std::vector<size_t>> left_, right_;
  size_t g_id_ = 0, m_id_ = 0;
};

// ------------------------------------------------------------------------
// The bicrossproduct Hopf algebra E of a matched pair: functions on M
// tensored with the group algebra of G, basis (m, g) = delta_m (x) g, with
//   (m,g)(m',g')   = [m <| g = m'] (m, gg')
//   Delta(m,g)     = sum over m1 m2 = m of (m1, m2 |> g) (x) (m2, g)
//   1              = sum over m of (m, e),   eps(m,g) = [m = e]
//   S(m,g)         = ((m <| g)^-1, (m |> g)^-1)
// Ships with the canonical inclusion k(M) -> E and projection E -> kG.
struct Bicross {
  FinHopf hopf;
  FinGroup group_g;                    // G as a standalone group
  FinGroup group_m;                    // M as a standalone group
  std::vector<SparseVec> inclusion;    // images of the k(M) basis in E
  std::vector<SparseVec> projection;   // images of the E basis in kG
};

Bicross bicrossproduct(const MatchedPair& mp, std::string name = "");

// ------------------------------------------------------------------------
// Function Hopf algebra k(G) on the delta basis and group Hopf algebra kG.
FinHopf function_hopf(const FinGroup& g);
FinHopf group_hopf(const FinGroup& g);

// Fourier transform k(G) -> kG, f -> sum_g f(g) g (coordinates preserved on
// the delta/group bases), its inverse, and group convolution on k(G).
SparseVec fourier(const FinGroup& g, const SparseVec& f);
SparseVec fourier_inverse(const FinGroup& g, const SparseVec& v);
SparseVec convolve(const FinGroup& g, const SparseVec& f1, const SparseVec& f2);

}  // namespace qgeo
