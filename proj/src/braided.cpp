// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors

#include "braided.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace qgeo {

// ------------------------------------------------------------------------
// Dense exact linear algebra

ScalarMat mat_identity(const ParamSetPtr& ps, size_t n) {
  ScalarMat m(n, std::vector<Scalar>(n, Scalar::zero(ps)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(ps);
  return m;
}

ScalarMat mat_product(const ScalarMat& a, const ScalarMat& b) {
  const size_t nr = a.size(), inner = b.size(), nc = b.empty() ? 0 : b[0].size();
  for (const auto& row : a)
    if (row.size() != inner) fail(Err::Dimension, "matrix product shape mismatch");
  ScalarMat out(nr);
  for (size_t i = 0; i < nr; ++i) {
    out[i].reserve(nc);
    for (size_t j = 0; j < nc; ++j) {
      Scalar s = a[i][0] * b[0][j];
      for (size_t k = 1; k < inner; ++k) s = s + a[i][k] * b[k][j];
      out[i].push_back(std::move(s));
    }
  }
  return out;
}

std::optional<ScalarMat> mat_solve(const ScalarMat& a, const ScalarMat& b) {
  const size_t n = a.size();
  if (b.size() != n) fail(Err::Dimension, "solve: row counts differ");
  const size_t nc = n == 0 ? 0 : b[0].size();
  ScalarMat left = a, right = b;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && left[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(left[pivot], left[col]);
    std::swap(right[pivot], right[col]);
    Scalar inv = left[col][col].inverse();
    for (size_t j = 0; j < n; ++j) left[col][j] = left[col][j] * inv;
    for (size_t j = 0; j < nc; ++j) right[col][j] = right[col][j] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || left[r][col].is_zero()) continue;
      Scalar f = left[r][col];
      for (size_t j = 0; j < n; ++j) left[r][j] = left[r][j] - f * left[col][j];
      for (size_t j = 0; j < nc; ++j) right[r][j] = right[r][j] - f * right[col][j];
    }
  }
  return right;
}

std::optional<ScalarMat> mat_inverse(const ScalarMat& a) {
  if (a.empty()) return ScalarMat{};
  ParamSetPtr ps = a[0].empty() ? ParamSetPtr() : a[0][0].params();
  return mat_solve(a, mat_identity(ps, a.size()));
}

// ------------------------------------------------------------------------
// RMatrix

RMatrix RMatrix::identity(const ParamSetPtr& ps, size_t n) {
  return RMatrix{ps, n, mat_identity(ps, n * n)};
}

RMatrix RMatrix::flip(const ParamSetPtr& ps, size_t n) {
  RMatrix r{ps, n, ScalarMat(n * n, std::vector<Scalar>(n * n, Scalar::zero(ps)))};
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) r.entry(l, k, k, l) = Scalar::one(ps);
  return r;
}

RMatrix RMatrix::standard_sl2(const ParamSetPtr& ps) {
  if (!ps->index("q")) fail(Err::InvalidArgument, "the standard R-matrix needs a parameter q");
  Scalar q = Scalar::param(ps, "q");
  RMatrix r{ps, 2, ScalarMat(4, std::vector<Scalar>(4, Scalar::zero(ps)))};
  r.entry(0, 0, 0, 0) = q;
  r.entry(0, 1, 0, 1) = Scalar::one(ps);
  r.entry(1, 0, 1, 0) = Scalar::one(ps);
  r.entry(1, 1, 1, 1) = q;
  r.entry(0, 1, 1, 0) = q - q.inverse();
  return r;
}

RMatrix rmatrix_from_json(const ParamSetPtr& ps, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    fail(Err::Parse, "R-matrix JSON needs fields n and entries");
  size_t n = 0;
  std::vector<std::vector<std::string>> rows;
  try {
    n = j.at("n").get<size_t>();
    rows = j.at("entries").get<std::vector<std::vector<std::string>>>();
  } catch (const std::exception& e) {
    fail(Err::Parse, std::string("malformed R-matrix JSON: ") + e.what());
  }
  if (n == 0 || n > 8) fail(Err::Parse, "R-matrix dimension must be between 1 and 8");
  if (rows.size() != n * n)
    fail(Err::Parse, "R-matrix needs " + std::to_string(n * n) + " rows");
  RMatrix r{ps, n, ScalarMat()};
  for (const auto& row : rows) {
    if (row.size() != n * n)
      fail(Err::Parse, "R-matrix rows need " + std::to_string(n * n) + " entries");
    std::vector<Scalar> out;
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(parse_scalar(ps, cell));
    r.m.push_back(std::move(out));
  }
  return r;
}

// ------------------------------------------------------------------------
// Yang-Baxter

namespace {

// R acting on the chosen pair of factors of V^(x)3, as an n^3 x n^3 matrix
// with index (a,b,c) = (a*n + b)*n + c.
ScalarMat lift_to_triple(const RMatrix& r, int first, int second) {
  const size_t n = r.n;
  ScalarMat m(n * n * n, std::vector<Scalar>(n * n * n, Scalar::zero(r.ps)));
  size_t idx[3];
  size_t jdx[3];
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        for (jdx[0] = 0; jdx[0] < n; ++jdx[0])
          for (jdx[1] = 0; jdx[1] < n; ++jdx[1])
            for (jdx[2] = 0; jdx[2] < n; ++jdx[2]) {
              int bystander = 3 - first - second;
              if (idx[bystander] != jdx[bystander]) continue;
              const Scalar& v =
                  r.entry(idx[first], idx[second], jdx[first], jdx[second]);
              if (v.is_zero()) continue;
              size_t row = (idx[0] * n + idx[1]) * n + idx[2];
              size_t col = (jdx[0] * n + jdx[1]) * n + jdx[2];
              m[row][col] = v;
            }
  return m;
}

std::string triple_index_str(size_t flat, size_t n) {
  size_t c = flat % n;
  size_t b = (flat / n) % n;
  size_t a = flat / (n * n);
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
         std::to_string(c + 1) + ")";
}

}  // namespace

std::vector<CheckViolation> ybe_violations(const RMatrix& r) {
  ScalarMat r12 = lift_to_triple(r, 0, 1);
  ScalarMat r13 = lift_to_triple(r, 0, 2);
  ScalarMat r23 = lift_to_triple(r, 1, 2);
  ScalarMat lhs = mat_product(mat_product(r12, r13), r23);
  ScalarMat rhs = mat_product(mat_product(r23, r13), r12);
  std::vector<CheckViolation> out;
  for (size_t i = 0; i < lhs.size(); ++i)
    for (size_t j = 0; j < lhs.size(); ++j) {
      Scalar d = lhs[i][j] - rhs[i][j];
      if (!d.is_zero())
        out.push_back({"entry " + triple_index_str(i, r.n) + triple_index_str(j, r.n),
                       d.str()});
    }
  return out;
}

bool ybe_check(const RMatrix& r) { return ybe_violations(r).empty(); }

namespace {

// Partial transpose in the first factor: rows (k,j), columns (m,p) holding
// R^{mk}_{jp}.  Its invertibility is equivalent to the existence of the
// "second inverse" used by the braided-matrix braiding system.
ScalarMat partial_transpose_first(const RMatrix& r) {
  const size_t n = r.n;
  ScalarMat m(n * n, std::vector<Scalar>(n * n, Scalar::zero(r.ps)));
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j)
      for (size_t mm = 0; mm < n; ++mm)
        for (size_t p = 0; p < n; ++p) m[k * n + j][mm * n + p] = r.entry(mm, k, j, p);
  return m;
}

ScalarMat partial_transpose_second(const RMatrix& r) {
  const size_t n = r.n;
  ScalarMat m(n * n, std::vector<Scalar>(n * n, Scalar::zero(r.ps)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) m[i * n + l][k * n + j] = r.entry(i, j, k, l);
  return m;
}

}  // namespace

bool rmatrix_biinvertible(const RMatrix& r) {
  return mat_inverse(r.m).has_value() &&
         mat_inverse(partial_transpose_first(r)).has_value() &&
         mat_inverse(partial_transpose_second(r)).has_value();
}

// ------------------------------------------------------------------------
// Braiding from R

BraidingTable braiding_from_rmatrix(const RMatrix& r, const Scalar& normalization) {
  const size_t n = r.n;
  BraidingTable t;
  t.entry.assign(n, std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          Scalar c = normalization * r.entry(i, j, k, l);
          if (!c.is_zero())
            t.entry[k][l].emplace_back(static_cast<GenId>(j), static_cast<GenId>(i),
                                       std::move(c));
        }
  return t;
}

bool braiding_invertible(const BraidingTable& psi, const ParamSetPtr& ps) {
  const size_t n = psi.ngens();
  ScalarMat m(n * n, std::vector<Scalar>(n * n, Scalar::zero(ps)));
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      for (const auto& [g2, h2, c] : psi.entry[g][h]) {
        size_t row = static_cast<size_t>(g2) * n + static_cast<size_t>(h2);
        m[row][g * n + h] = m[row][g * n + h] + c;
      }
  return mat_inverse(m).has_value();
}

// ------------------------------------------------------------------------
// Hexagon extension to words

namespace {

void pairs_add(WordPairs& target, const Word& w1, const Word& w2, const Scalar& c) {
  auto key = std::make_pair(w1, w2);
  auto it = target.find(key);
  if (it == target.end()) {
    target.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) target.erase(it);
}

// Psi(g (x) v) for a single generator: peel v's first letter.
WordPairs braid_gen_past(const BraidingTable& psi, const ParamSetPtr& ps, GenId g,
                         const Word& v, size_t from) {
  WordPairs out;
  if (from == v.size()) {
    out[{Word{}, Word{g}}] = Scalar::one(ps);
    return out;
  }
  GenId h = v[from];
  for (const auto& [g2, h2, c] : psi.entry.at(g).at(h)) {
    WordPairs rest = braid_gen_past(psi, ps, h2, v, from + 1);
    for (const auto& [pr, c2] : rest) {
      Word w1{g2};
      w1.insert(w1.end(), pr.first.begin(), pr.first.end());
      pairs_add(out, w1, pr.second, c * c2);
    }
  }
  return out;
}

// Psi(u (x) h) for a single right generator: peel u's first letter.
WordPairs braid_past_gen(const BraidingTable& psi, const ParamSetPtr& ps, const Word& u,
                         size_t from, GenId h) {
  WordPairs out;
  if (from == u.size()) {
    out[{Word{h}, Word{}}] = Scalar::one(ps);
    return out;
  }
  GenId g = u[from];
  WordPairs inner = braid_past_gen(psi, ps, u, from + 1, h);
  for (const auto& [pr, c] : inner) {
    // pr.first is a single-letter word (the descendant of h).
    for (const auto& [h2, g2, c2] : psi.entry.at(g).at(pr.first.at(0))) {
      Word w2{g2};
      w2.insert(w2.end(), pr.second.begin(), pr.second.end());
      pairs_add(out, Word{h2}, w2, c * c2);
    }
  }
  return out;
}

}  // namespace

WordPairs braid_words(const BraidingTable& psi, const ParamSetPtr& ps, const Word& u,
                      const Word& v) {
  WordPairs out;
  if (u.empty()) {
    out[{v, Word{}}] = Scalar::one(ps);
    return out;
  }
  if (u.size() == 1) return braid_gen_past(psi, ps, u[0], v, 0);
  Word rest(u.begin() + 1, u.end());
  WordPairs inner = braid_words(psi, ps, rest, v);
  for (const auto& [pr, c] : inner) {
    WordPairs front = braid_gen_past(psi, ps, u[0], pr.first, 0);
    for (const auto& [pr2, c2] : front) {
      Word w2 = pr2.second;  // single letter
      w2.insert(w2.end(), pr.second.begin(), pr.second.end());
      pairs_add(out, pr2.first, w2, c * c2);
    }
  }
  return out;
}

WordPairs braid_words_mirror(const BraidingTable& psi, const ParamSetPtr& ps,
                             const Word& u, const Word& v) {
  WordPairs out;
  if (v.empty()) {
    out[{Word{}, u}] = Scalar::one(ps);
    return out;
  }
  if (v.size() == 1) return braid_past_gen(psi, ps, u, 0, v[0]);
  Word front(v.begin(), v.end() - 1);
  WordPairs inner = braid_words_mirror(psi, ps, u, front);
  for (const auto& [pr, c] : inner) {
    WordPairs back = braid_past_gen(psi, ps, pr.second, 0, v.back());
    for (const auto& [pr2, c2] : back) {
      Word w1 = pr.first;
      w1.insert(w1.end(), pr2.first.begin(), pr2.first.end());
      pairs_add(out, w1, pr2.second, c * c2);
    }
  }
  return out;
}

// ------------------------------------------------------------------------
// Braided tensor product of two presentations

CrossTable cross_flip(const Presentation& a, const Presentation& b) {
  Scalar one = Scalar::one(a.params());
  CrossTable t(b.ngens());
  for (size_t bg = 0; bg < b.ngens(); ++bg) {
    t[bg].resize(a.ngens());
    for (size_t ag = 0; ag < a.ngens(); ++ag)
      t[bg][ag].emplace_back(static_cast<GenId>(ag), static_cast<GenId>(bg), one);
  }
  return t;
}

CrossTable cross_from_braiding(const BraidingTable& psi) {
  CrossTable t(psi.ngens());
  for (size_t bg = 0; bg < psi.ngens(); ++bg) {
    t[bg].resize(psi.ngens());
    for (size_t ag = 0; ag < psi.ngens(); ++ag) t[bg][ag] = psi.entry[bg][ag];
  }
  return t;
}

Presentation braided_tensor_algebra(const Presentation& a, const Presentation& b,
                                    const CrossTable& cross, std::string name) {
  if (a.params() != b.params() && !(*a.params() == *b.params()))
    fail(Err::InvalidArgument, "factors must share a parameter set");
  if (cross.size() != b.ngens())
    fail(Err::Dimension, "cross table needs one row per second-factor generator");
  for (const auto& row : cross)
    if (row.size() != a.ngens())
      fail(Err::Dimension, "cross table rows need one entry per first-factor generator");

  const size_t na = a.ngens();
  std::vector<std::string> names = a.gen_names();
  bool collide = false;
  for (const auto& bn : b.gen_names())
    collide = collide || a.gen_id(bn).has_value();
  for (const auto& bn : b.gen_names()) names.push_back(collide ? bn + "@2" : bn);

  std::vector<uint32_t> weights = a.gen_weights();
  weights.insert(weights.end(), b.gen_weights().begin(), b.gen_weights().end());

  Presentation p(std::move(name), a.params(), std::move(names), std::move(weights),
                 std::max(a.step_budget(), b.step_budget()));

  auto shift_word = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (GenId g : w) out.push_back(g + static_cast<GenId>(na));
    return out;
  };
  for (const RewriteRule& r : a.rules()) p.add_rule(r.lhs, r.rhs);
  for (const RewriteRule& r : b.rules()) {
    Element rhs;
    for (const auto& [w, c] : r.rhs.terms()) rhs.add(shift_word(w), c);
    p.add_rule(shift_word(r.lhs), rhs);
  }
  for (size_t bg = 0; bg < b.ngens(); ++bg)
    for (size_t ag = 0; ag < na; ++ag) {
      Element rhs;
      for (const auto& [a2, b2, c] : cross[bg][ag])
        rhs.add({a2, static_cast<GenId>(na) + b2}, c);
      p.add_rule({static_cast<GenId>(na + bg), static_cast<GenId>(ag)}, rhs);
    }
  return p;
}

// ------------------------------------------------------------------------
// Inter-reduction of homogeneous relations to an oriented rewrite system

namespace {

struct LeadTerm {
  Word word;
  Scalar coeff;
};

LeadTerm leading_term(const Presentation& p, const Element& e) {
  const auto& terms = e.terms();
  auto it = terms.begin();
  const Word* best = &it->first;
  const Scalar* bc = &it->second;
  for (++it; it != terms.end(); ++it)
    if (p.word_less(*best, it->first)) {
      best = &it->first;
      bc = &it->second;
    }
  return {*best, *bc};
}

Presentation interreduce(const std::string& name, const ParamSetPtr& ps,
                         const std::vector<std::string>& gen_names,
                         std::vector<Element> eqs) {
  std::string prev_sig;
  for (int round = 0; round < 100; ++round) {
    Presentation p(name, ps, gen_names);
    // Smaller leading words first, so larger equations reduce against the
    // rules already oriented this round.
    std::stable_sort(eqs.begin(), eqs.end(), [&](const Element& x, const Element& y) {
      if (x.is_zero() || y.is_zero()) return y.is_zero() < x.is_zero();
      return p.word_less(leading_term(p, x).word, leading_term(p, y).word);
    });
    std::string sig;
    for (const Element& eq : eqs) {
      if (eq.is_zero()) continue;
      Element r = p.normal_form(eq);
      if (r.is_zero()) continue;
      LeadTerm lead = leading_term(p, r);
      Element rest = r;
      rest.add(lead.word, -lead.coeff);
      Element rhs = (-rest).scaled(lead.coeff.inverse());
      p.add_rule(lead.word, rhs);
      sig += word_str(lead.word, gen_names) + " -> " + p.element_str(rhs) + "\n";
    }
    if (sig == prev_sig) return p;
    prev_sig = sig;
    eqs.clear();
    for (const RewriteRule& r : p.rules()) eqs.push_back(p.word(r.lhs) - r.rhs);
  }
  fail(Err::Internal, "relation inter-reduction did not stabilize");
}

std::vector<std::string> matrix_gen_names(size_t n, const std::string& letter) {
  if (n == 2) return {"a", "b", "c", "d"};
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      names.push_back(letter + std::to_string(i + 1) + std::to_string(j + 1));
  return names;
}

std::vector<std::vector<TensorTerm>> matrix_coproduct(const Presentation& p, size_t n) {
  Scalar one = Scalar::one(p.params());
  std::vector<std::vector<TensorTerm>> cop(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t a = 0; a < n; ++a)
        cop[i * n + j].push_back({p.gen(static_cast<GenId>(i * n + a)),
                                  p.gen(static_cast<GenId>(a * n + j)), one});
  return cop;
}

std::vector<Scalar> matrix_counit(const ParamSetPtr& ps, size_t n) {
  std::vector<Scalar> eps(n * n, Scalar::zero(ps));
  for (size_t i = 0; i < n; ++i) eps[i * n + i] = Scalar::one(ps);
  return eps;
}

}  // namespace

// ------------------------------------------------------------------------
// FRT bialgebra

FrtBialgebra frt_bialgebra(const RMatrix& r, bool verify_ybe) {
  if (verify_ybe) {
    auto v = ybe_violations(r);
    if (!v.empty())
      fail(Err::YbeFailure,
           "R fails the Yang-Baxter identity at " + v.front().item + " (residual " +
               v.front().residual + ")");
  }
  const size_t n = r.n;
  auto gid = [&](size_t i, size_t j) { return static_cast<GenId>(i * n + j); };

  // R t1 t2 = t2 t1 R, entrywise in (i,j),(k,l):
  //   sum_{a,b} R^{ij}_{ab} t^a_k t^b_l  -  sum_{a,b} t^j_b t^i_a R^{ab}_{kl}
  std::vector<Element> eqs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          Element e;
          for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
              const Scalar& c1 = r.entry(i, j, a, b);
              if (!c1.is_zero()) e.add({gid(a, k), gid(b, l)}, c1);
              const Scalar& c2 = r.entry(a, b, k, l);
              if (!c2.is_zero()) e.add({gid(j, b), gid(i, a)}, -c2);
            }
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }

  Presentation pres =
      interreduce("frt", r.ps, matrix_gen_names(n, "t"), std::move(eqs));
  auto cop = matrix_coproduct(pres, n);
  auto eps = matrix_counit(r.ps, n);
  return FrtBialgebra{std::move(pres), std::move(cop), std::move(eps), r};
}

// ------------------------------------------------------------------------
// Bicharacter

Bicharacter::Bicharacter(RMatrix r) : r_(std::move(r)) {}

Scalar Bicharacter::eps_word(const Word& w) const {
  const size_t n = r_.n;
  for (GenId g : w)
    if (static_cast<size_t>(g) / n != static_cast<size_t>(g) % n)
      return Scalar::zero(r_.ps);
  return Scalar::one(r_.ps);
}

Scalar Bicharacter::eval_words(const Word& a, const Word& b) const {
  const size_t n = r_.n;
  if (a.empty()) return eps_word(b);
  if (b.empty()) return eps_word(a);
  if (a.size() == 1 && b.size() == 1) {
    size_t i = static_cast<size_t>(a[0]) / n, j = static_cast<size_t>(a[0]) % n;
    size_t k = static_cast<size_t>(b[0]) / n, l = static_cast<size_t>(b[0]) % n;
    return r_.entry(i, k, j, l);
  }
  Scalar total = Scalar::zero(r_.ps);
  if (a.size() > 1) {
    // R(g.rest, b) = sum over Delta(b) of R(g, b1) R(rest, b2).
    Word g{a[0]};
    Word rest(a.begin() + 1, a.end());
    size_t paths = 1;
    for (size_t t = 0; t < b.size(); ++t) paths *= n;
    for (size_t path = 0; path < paths; ++path) {
      Word b1, b2;
      size_t code = path;
      for (GenId letter : b) {
        size_t mid = code % n;
        code /= n;
        size_t i = static_cast<size_t>(letter) / n, j = static_cast<size_t>(letter) % n;
        b1.push_back(static_cast<GenId>(i * n + mid));
        b2.push_back(static_cast<GenId>(mid * n + j));
      }
      total = total + eval_words(g, b1) * eval_words(rest, b2);
    }
    return total;
  }
  // R(a, h.rest) = sum over Delta(a) of R(a1, rest) R(a2, h).
  size_t i = static_cast<size_t>(a[0]) / n, j = static_cast<size_t>(a[0]) % n;
  Word h{b[0]};
  Word rest(b.begin() + 1, b.end());
  for (size_t mid = 0; mid < n; ++mid) {
    Word a1{static_cast<GenId>(i * n + mid)};
    Word a2{static_cast<GenId>(mid * n + j)};
    total = total + eval_words(a1, rest) * eval_words(a2, h);
  }
  return total;
}

Scalar Bicharacter::eval(const Element& a, const Element& b) const {
  Scalar total = Scalar::zero(r_.ps);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) total = total + ca * cb * eval_words(wa, wb);
  return total;
}

// ------------------------------------------------------------------------
// Dual-quasitriangularity check

namespace {

// All coproduct splittings of a word under Delta t^i_j = sum_a t^i_a (x) t^a_j,
// as (left word, right word) pairs, one per internal index path.
std::vector<std::pair<Word, Word>> coproduct_paths(const Word& w, size_t n) {
  std::vector<std::pair<Word, Word>> out;
  size_t paths = 1;
  for (size_t t = 0; t < w.size(); ++t) paths *= n;
  for (size_t path = 0; path < paths; ++path) {
    Word w1, w2;
    size_t code = path;
    for (GenId letter : w) {
      size_t mid = code % n;
      code /= n;
      size_t i = static_cast<size_t>(letter) / n, j = static_cast<size_t>(letter) % n;
      w1.push_back(static_cast<GenId>(i * n + mid));
      w2.push_back(static_cast<GenId>(mid * n + j));
    }
    out.emplace_back(std::move(w1), std::move(w2));
  }
  return out;
}

}  // namespace

std::vector<CheckViolation> dqua_check(const FrtBialgebra& frt, size_t max_degree) {
  const Presentation& p = frt.pres;
  const size_t n = frt.r.n;
  Bicharacter bic(frt.r);
  std::vector<CheckViolation> out;

  // The pairing must vanish on every defining relation, on both sides,
  // against every normal word up to the degree bound.
  std::vector<Word> words = p.normal_words_up_to(max_degree);
  for (size_t ri = 0; ri < p.rules().size(); ++ri) {
    Element rel = p.word(p.rules()[ri].lhs) - p.rules()[ri].rhs;
    std::string rel_str = word_str(p.rules()[ri].lhs, p.gen_names());
    for (const Word& w : words) {
      Element we = p.word(w);
      Scalar left = bic.eval(rel, we);
      if (!left.is_zero())
        out.push_back({"pairing of relation " + rel_str + " with " +
                           word_str(w, p.gen_names()),
                       left.str()});
      Scalar right = bic.eval(we, rel);
      if (!right.is_zero())
        out.push_back({"pairing of " + word_str(w, p.gen_names()) + " with relation " +
                           rel_str,
                       right.str()});
    }
  }

  // Quasi-commutativity g1 h1 R(h2, g2) = R(h1, g1) h2 g2 for all pairs of
  // normal words up to the degree bound.
  for (const Word& g : words)
    for (const Word& h : words) {
      auto gp = coproduct_paths(g, n);
      auto hp = coproduct_paths(h, n);
      Element lhs, rhs;
      for (const auto& [g1, g2] : gp)
        for (const auto& [h1, h2] : hp) {
          Scalar cl = bic.eval_words(h2, g2);
          if (!cl.is_zero()) {
            Word prod = g1;
            prod.insert(prod.end(), h1.begin(), h1.end());
            lhs.add(prod, cl);
          }
          Scalar cr = bic.eval_words(h1, g1);
          if (!cr.is_zero()) {
            Word prod = h2;
            prod.insert(prod.end(), g2.begin(), g2.end());
            rhs.add(prod, cr);
          }
        }
      Element residual = p.normal_form(lhs - rhs);
      if (!residual.is_zero())
        out.push_back({"quasi-commutativity at (" + word_str(g, p.gen_names()) + ", " +
                           word_str(h, p.gen_names()) + ")",
                       p.element_str(residual)});
    }
  return out;
}

// ------------------------------------------------------------------------
// Braided matrices

BraidedMatrices braided_matrices(const RMatrix& r) {
  {
    auto v = ybe_violations(r);
    if (!v.empty())
      fail(Err::YbeFailure,
           "R fails the Yang-Baxter identity at " + v.front().item + " (residual " +
               v.front().residual + ")");
  }
  const size_t n = r.n;
  auto rinv_opt = mat_inverse(r.m);
  if (!rinv_opt) fail(Err::NotBiinvertible, "R is not invertible");
  const ScalarMat& rinv = *rinv_opt;
  auto rinv_entry = [&](size_t i, size_t j, size_t k, size_t l) -> const Scalar& {
    return rinv[i * n + j][k * n + l];
  };
  auto gid = [&](size_t i, size_t j) { return static_cast<GenId>(i * n + j); };

  // Relations R21 u1 R u2 = u2 R21 u1 R, entrywise in (i,k),(j,l):
  //   sum_{a,b,c,f} R^{ki}_{ba} R^{cb}_{jf} u^a_c u^f_l
  // - sum_{b,c,d,e} R^{bi}_{dc} R^{ed}_{jl} u^k_b u^c_e
  std::vector<Element> eqs;
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) {
          Element e;
          for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
              for (size_t c = 0; c < n; ++c)
                for (size_t f = 0; f < n; ++f) {
                  Scalar co = r.entry(k, i, b, a) * r.entry(c, b, j, f);
                  if (!co.is_zero()) e.add({gid(a, c), gid(f, l)}, co);
                }
          for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
              for (size_t d = 0; d < n; ++d)
                for (size_t ee = 0; ee < n; ++ee) {
                  Scalar co = r.entry(b, i, d, c) * r.entry(ee, d, j, l);
                  if (!co.is_zero()) e.add({gid(k, b), gid(c, ee)}, -co);
                }
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }

  Presentation pres =
      interreduce("bmat", r.ps, matrix_gen_names(n, "u"), std::move(eqs));

  // Braiding from Psi(u1 (x) R u2) = R u2 R^{-1} (x) u1 R: for each (i,l),
  //   sum_{m,p} R^{mk}_{jp} Psi(u^i_m (x) u^p_l)
  //     = sum_{b,d,m,e} [ sum_{a,p} R^{ik}_{ab} (R^-1)^{ad}_{mp} R^{ep}_{jl} ]
  //       u^b_d (x) u^m_e
  // i.e. M X = B with M the first-factor partial transpose of R.
  ScalarMat m = partial_transpose_first(r);
  BraidingTable psi;
  psi.entry.assign(n * n,
                   std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>(n * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l) {
      ScalarMat rhs(n * n, std::vector<Scalar>(n * n * n * n, Scalar::zero(r.ps)));
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
          for (size_t b = 0; b < n; ++b)
            for (size_t d = 0; d < n; ++d)
              for (size_t mm = 0; mm < n; ++mm)
                for (size_t e = 0; e < n; ++e) {
                  Scalar co = Scalar::zero(r.ps);
                  for (size_t a = 0; a < n; ++a)
                    for (size_t pp = 0; pp < n; ++pp)
                      co = co + r.entry(i, k, a, b) * rinv_entry(a, d, mm, pp) *
                                    r.entry(e, pp, j, l);
                  rhs[k * n + j][((b * n + d) * n + mm) * n + e] = std::move(co);
                }
      auto sol = mat_solve(m, rhs);
      if (!sol)
        fail(Err::NotBiinvertible,
             "the braiding system for the generators is singular (missing second inverse)");
      for (size_t mm = 0; mm < n; ++mm)
        for (size_t pp = 0; pp < n; ++pp) {
          auto& cell = psi.entry[i * n + mm][pp * n + l];
          for (size_t b = 0; b < n; ++b)
            for (size_t d = 0; d < n; ++d)
              for (size_t m2 = 0; m2 < n; ++m2)
                for (size_t e = 0; e < n; ++e) {
                  const Scalar& co = (*sol)[mm * n + pp][((b * n + d) * n + m2) * n + e];
                  if (!co.is_zero()) cell.emplace_back(gid(b, d), gid(m2, e), co);
                }
        }
    }

  if (!braiding_invertible(psi, r.ps))
    fail(Err::Construction, "the solved braiding is singular on the generator space");

  auto cop = matrix_coproduct(pres, n);
  auto eps = matrix_counit(r.ps, n);
  return BraidedMatrices{std::move(pres), std::move(psi), std::move(cop),
                         std::move(eps)};
}

}  // namespace qgeo
