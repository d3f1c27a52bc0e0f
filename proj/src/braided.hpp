// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Yang-Baxter operators on vector modules, braidings extended from
// generators to words by the hexagon recursion, braided tensor-product
// algebras, FRT bialgebras with their dual-quasitriangular bicharacter, and
// braided matrices with the braiding solved from the defining relations.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf.hpp"

namespace qgeo {

// ------------------------------------------------------------------------
// Exact dense linear algebra over the scalar field.
using ScalarMat = std::vector<std::vector<Scalar>>;

ScalarMat mat_identity(const ParamSetPtr& ps, size_t n);
ScalarMat mat_product(const ScalarMat& a, const ScalarMat& b);
// Gauss-Jordan with exact pivoting; nullopt when singular.
std::optional<ScalarMat> mat_inverse(const ScalarMat& a);
// Solves a x = b for x (b may have any column count); nullopt when singular.
std::optional<ScalarMat> mat_solve(const ScalarMat& a, const ScalarMat& b);

// ------------------------------------------------------------------------
// RMatrix: an endomorphism of V (x) V for an n-dimensional module V,
// R(e_k (x) e_l) = sum_{ij} R^{ij}_{kl} e_i (x) e_j, stored as the n^2 x n^2
// matrix with row (i,j) and column (k,l), both row-major.
struct RMatrix {
  ParamSetPtr ps;
  size_t n = 0;
  ScalarMat m;

  const Scalar& entry(size_t i, size_t j, size_t k, size_t l) const {
    return m.at(i * n + j).at(k * n + l);
  }
  Scalar& entry(size_t i, size_t j, size_t k, size_t l) {
    return m.at(i * n + j).at(k * n + l);
  }

  static RMatrix identity(const ParamSetPtr& ps, size_t n);
  static RMatrix flip(const ParamSetPtr& ps, size_t n);
  // The standard 4x4 two-dimensional R: diagonal (q,1,1,q) with the single
  // off-diagonal entry R^{12}_{21} = q - 1/q.  Requires a parameter "q".
  static RMatrix standard_sl2(const ParamSetPtr& ps);
};

// JSON input: {"n": 2, "entries": [[...]]} with n^2 x n^2 scalar strings
// parsed by parse_scalar, rows indexed (i,j) and columns (k,l) row-major.
RMatrix rmatrix_from_json(const ParamSetPtr& ps, const std::string& json_text);

// Exact Yang-Baxter test R12 R13 R23 = R23 R13 R12 on V (x) V (x) V;
// violations carry the mismatching matrix entry.
std::vector<CheckViolation> ybe_violations(const RMatrix& r);
bool ybe_check(const RMatrix& r);

// R is invertible and both partial transposes are invertible.
bool rmatrix_biinvertible(const RMatrix& r);

// Psi = normalization * (flip after R) on an n-generator space: the table
// Psi(g_k (x) g_l) = nu * sum R^{ij}_{kl} g_j (x) g_i.
BraidingTable braiding_from_rmatrix(const RMatrix& r, const Scalar& normalization);

// The braiding as an n^2 x n^2 matrix on generator pairs is invertible.
bool braiding_invertible(const BraidingTable& psi, const ParamSetPtr& ps);

// ------------------------------------------------------------------------
// Hexagon extension of a generator braiding to words.  The result maps
// (right word, left word) pairs to coefficients: Psi(u (x) v) =
// sum c * (v' (x) u').  Two recursion orders are provided; they agree for
// any braiding satisfying the hexagon identities (tested, not assumed).
using WordPairs = std::map<std::pair<Word, Word>, Scalar>;

WordPairs braid_words(const BraidingTable& psi, const ParamSetPtr& ps, const Word& u,
                      const Word& v);
WordPairs braid_words_mirror(const BraidingTable& psi, const ParamSetPtr& ps,
                             const Word& u, const Word& v);

// ------------------------------------------------------------------------
// Braided tensor product A (x) B of two presentations: disjoint generators
// (A first; B generator names get an "@2" suffix when they collide with
// A's), both rule sets, and cross rules  (1 (x) b)(a (x) 1) = Psi(b (x) a).
// The cross table is indexed cross[b][a] = list of (a2, b2, coeff) meaning
// Psi(b (x) a) = sum coeff * a2 (x) b2.
using CrossTable =
    std::vector<std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>>;

CrossTable cross_flip(const Presentation& a, const Presentation& b);
CrossTable cross_from_braiding(const BraidingTable& psi);

Presentation braided_tensor_algebra(const Presentation& a, const Presentation& b,
                                    const CrossTable& cross, std::string name);

// ------------------------------------------------------------------------
// FRT bialgebra of an R-matrix: generators t^i_j (id = i*n + j) with the
// relations R t1 t2 = t2 t1 R inter-reduced to an oriented rewrite system,
// matrix coproduct Delta t^i_j = sum_a t^i_a (x) t^a_j and counit delta^i_j.
struct FrtBialgebra {
  Presentation pres;
  std::vector<std::vector<TensorTerm>> coproduct;
  std::vector<Scalar> counit;
  RMatrix r;
};

// Throws YbeFailure when R fails the Yang-Baxter test; the check can be
// suppressed to study how downstream certificates detect a bad R.
FrtBialgebra frt_bialgebra(const RMatrix& r, bool verify_ybe = true);

// ------------------------------------------------------------------------
// Bicharacter R: A (x) A -> k on an FRT bialgebra, R(t^i_j, t^k_l) =
// R^{ik}_{jl}, extended to words by R(ab,c) = R(a,c1)R(b,c2) and
// R(a,bc) = R(a1,c)R(a2,b), with R(1,a) = R(a,1) = eps(a).
class Bicharacter {
 public:
  explicit Bicharacter(RMatrix r);

  size_t n() const { return r_.n; }
  Scalar eval_words(const Word& a, const Word& b) const;
  Scalar eval(const Element& a, const Element& b) const;  // bilinear

 private:
  Scalar eps_word(const Word& w) const;  // product of delta^i_j
  RMatrix r_;
};

// Quasi-commutativity a1 b1 R(b2, a2) = R(b1, a1) b2 a2 for all pairs of
// normal words up to max_degree, plus well-definedness of the bicharacter
// against every rewrite rule.  Nonempty result = certificate failure.
std::vector<CheckViolation> dqua_check(const FrtBialgebra& frt, size_t max_degree);

// ------------------------------------------------------------------------
// Braided matrices of a biinvertible Yang-Baxter R: generators u^i_j with
// relations R21 u1 R u2 = u2 R21 u1 R, matrix coproduct Delta u = u (x) u,
// and the generator braiding solved entrywise from
// Psi(u1 (x) R u2) = R u2 R^{-1} (x) u1 R.
struct BraidedMatrices {
  Presentation pres;
  BraidingTable braiding;
  std::vector<std::vector<TensorTerm>> coproduct;
  std::vector<Scalar> counit;
};

BraidedMatrices braided_matrices(const RMatrix& r);

}  // namespace qgeo
