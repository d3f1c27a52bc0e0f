// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors

#include "hopf.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace qgeo {

// --------------------------------------------------------------- AlgebraMap ---

AlgebraMap::AlgebraMap(const Presentation& src, const Presentation& dst,
                       std::vector<Element> gen_images, bool anti)
    : src_(&src), dst_(&dst), images_(std::move(gen_images)), anti_(anti) {
  if (images_.size() != src.ngens())
    fail(Err::InvalidArgument, "algebra map needs an image for every generator");
}

Element AlgebraMap::apply_word(const Word& w) const {
  Element acc = dst_->unit();
  if (anti_) {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      acc = dst_->normal_form(acc * images_.at(*it));
  } else {
    for (GenId g : w) acc = dst_->normal_form(acc * images_.at(g));
  }
  return acc;
}

Element AlgebraMap::apply(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element img = apply_word(w).scaled(c);
    out = out + img;
  }
  return dst_->normal_form(out);
}

std::vector<CheckViolation> AlgebraMap::relation_violations() const {
  std::vector<CheckViolation> out;
  for (const RewriteRule& r : src_->rules()) {
    Element residual = apply(src_->word(r.lhs) - r.rhs);
    if (!residual.is_zero()) {
      out.push_back({word_str(r.lhs, src_->gen_names()) + " -> " + src_->element_str(r.rhs),
                     dst_->element_str(residual)});
    }
  }
  return out;
}

// -------------------------------------------------------------- HopfChecker ---

HopfChecker::HopfChecker(const Presentation& alg,
                         std::vector<std::vector<TensorTerm>> coproduct,
                         std::vector<Scalar> counit, std::vector<Element> antipode,
                         const BraidingTable* braiding)
    : alg_(&alg), t2_(alg, 2, braiding), t3_(alg, 3, braiding), counit_(std::move(counit)) {
  if (coproduct.size() != alg.ngens())
    fail(Err::InvalidArgument, "coproduct must be given on every generator");
  if (counit_.size() != alg.ngens())
    fail(Err::InvalidArgument, "counit must be given on every generator");
  std::vector<Element> dimg;
  dimg.reserve(alg.ngens());
  for (const auto& terms : coproduct) {
    Element e;
    for (const TensorTerm& t : terms)
      e = e + t2_.tensor({t.left, t.right}).scaled(t.coeff);
    dimg.push_back(t2_.pres().normal_form(e));
  }
  delta_.emplace(alg, t2_.pres(), dimg);
  if (!antipode.empty()) {
    if (antipode.size() != alg.ngens())
      fail(Err::InvalidArgument, "antipode must be given on every generator or none");
    antipode_.emplace(alg, alg, std::move(antipode), /*anti=*/true);
  }
  // (Delta (x) id) and (id (x) Delta) as algebra maps tensor2 -> tensor3.
  std::vector<Element> left_img, right_img;
  size_t n = alg.ngens();
  left_img.reserve(2 * n);
  right_img.reserve(2 * n);
  for (size_t g = 0; g < 2 * n; ++g) {
    int copy = t2_.copy_of(static_cast<GenId>(g));
    GenId base = t2_.base_gen(static_cast<GenId>(g));
    if (copy == 0) {
      left_img.push_back(t3_.embed_from(t2_, dimg[base], 0));
      right_img.push_back(t3_.embed(alg.gen(base), 0));
    } else {
      left_img.push_back(t3_.embed(alg.gen(base), 2));
      right_img.push_back(t3_.embed_from(t2_, dimg[base], 1));
    }
  }
  delta_left_.emplace(t2_.pres(), t3_.pres(), std::move(left_img));
  delta_right_.emplace(t2_.pres(), t3_.pres(), std::move(right_img));
}

Element HopfChecker::delta(const Element& e) const { return delta_->apply(e); }

Scalar HopfChecker::eps_word(const Word& w) const {
  Scalar s = Scalar::one(alg_->params());
  for (GenId g : w) s = s * counit_.at(g);
  return s;
}

Scalar HopfChecker::eps(const Element& e) const {
  Scalar s = Scalar::zero(alg_->params());
  for (const auto& [w, c] : e.terms()) s = s + c * eps_word(w);
  return s;
}

Element HopfChecker::antipode(const Element& e) const {
  if (!antipode_) fail(Err::InvalidArgument, "no antipode defined for " + alg_->name());
  return antipode_->apply(e);
}

std::vector<CheckViolation> HopfChecker::coproduct_respects_relations() const {
  std::vector<CheckViolation> out;
  for (const RewriteRule& r : alg_->rules()) {
    Element residual = delta_->apply(alg_->word(r.lhs) - r.rhs);
    if (!residual.is_zero())
      out.push_back({word_str(r.lhs, alg_->gen_names()) + " -> " + alg_->element_str(r.rhs),
                     t2_.str(residual)});
  }
  return out;
}

std::vector<CheckViolation> HopfChecker::counit_respects_relations() const {
  std::vector<CheckViolation> out;
  for (const RewriteRule& r : alg_->rules()) {
    Scalar residual = eps(alg_->word(r.lhs) - r.rhs);
    if (!residual.is_zero())
      out.push_back({word_str(r.lhs, alg_->gen_names()) + " -> " + alg_->element_str(r.rhs),
                     residual.str()});
  }
  return out;
}

std::vector<CheckViolation> HopfChecker::antipode_respects_relations() const {
  std::vector<CheckViolation> out;
  if (!antipode_) return out;
  for (const RewriteRule& r : alg_->rules()) {
    Element residual = antipode_->apply(alg_->word(r.lhs) - r.rhs);
    if (!residual.is_zero())
      out.push_back({word_str(r.lhs, alg_->gen_names()) + " -> " + alg_->element_str(r.rhs),
                     alg_->element_str(residual)});
  }
  return out;
}

std::vector<Word> HopfChecker::check_words(size_t max_degree) const {
  return alg_->normal_words_up_to(max_degree);
}

std::vector<CheckViolation> HopfChecker::coassociativity(size_t max_degree) const {
  std::vector<CheckViolation> out;
  for (const Word& w : check_words(max_degree)) {
    Element d = delta_->apply_word(w);
    Element residual = delta_left_->apply(d) - delta_right_->apply(d);
    if (!residual.is_zero())
      out.push_back({word_str(w, alg_->gen_names()), t3_.str(residual)});
  }
  return out;
}

std::vector<CheckViolation> HopfChecker::counit_axiom(size_t max_degree) const {
  std::vector<CheckViolation> out;
  for (const Word& w : check_words(max_degree)) {
    Element d = delta_->apply_word(w);
    Element left, right;  // (eps (x) id) Delta w and (id (x) eps) Delta w
    for (const auto& [tw, c] : d.terms()) {
      auto parts = t2_.split(tw);
      left.add(parts[1], c * eps_word(parts[0]));
      right.add(parts[0], c * eps_word(parts[1]));
    }
    Element id_w = alg_->word(w);
    Element rl = alg_->normal_form(left - id_w);
    Element rr = alg_->normal_form(right - id_w);
    if (!rl.is_zero())
      out.push_back({word_str(w, alg_->gen_names()) + " [counit left]",
                     alg_->element_str(rl)});
    if (!rr.is_zero())
      out.push_back({word_str(w, alg_->gen_names()) + " [counit right]",
                     alg_->element_str(rr)});
  }
  return out;
}

std::vector<CheckViolation> HopfChecker::antipode_axiom(size_t max_degree) const {
  std::vector<CheckViolation> out;
  if (!antipode_) return out;
  for (const Word& w : check_words(max_degree)) {
    Element d = delta_->apply_word(w);
    Element left, right;  // m(S (x) id) Delta w and m(id (x) S) Delta w
    for (const auto& [tw, c] : d.terms()) {
      auto parts = t2_.split(tw);
      left = left + (antipode_->apply_word(parts[0]) * alg_->word(parts[1])).scaled(c);
      right = right + (alg_->word(parts[0]) * antipode_->apply_word(parts[1])).scaled(c);
    }
    Element target = Element(eps_word(w), {});
    Element rl = alg_->normal_form(left - target);
    Element rr = alg_->normal_form(right - target);
    if (!rl.is_zero())
      out.push_back({word_str(w, alg_->gen_names()) + " [antipode left]",
                     alg_->element_str(rl)});
    if (!rr.is_zero())
      out.push_back({word_str(w, alg_->gen_names()) + " [antipode right]",
                     alg_->element_str(rr)});
  }
  return out;
}

// ------------------------------------------------------------------ FinHopf ---

void vec_add(SparseVec& target, size_t idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = target.find(idx);
  if (it == target.end()) {
    target.emplace(idx, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) target.erase(it);
  }
}

void mat_add(SparseMat& target, size_t i, size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = target.find(key);
  if (it == target.end()) {
    target.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) target.erase(it);
  }
}

FinHopf::FinHopf(std::string name, ParamSetPtr ps, std::vector<std::string> basis,
                 std::vector<std::vector<SparseVec>> product, SparseVec unit,
                 std::vector<SparseMat> coproduct, std::vector<Scalar> counit,
                 std::vector<SparseVec> antipode)
    : name_(std::move(name)),
      ps_(std::move(ps)),
      basis_(std::move(basis)),
      product_(std::move(product)),
      unit_(std::move(unit)),
      coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  size_t n = basis_.size();
  if (n == 0) fail(Err::Dimension, "finite Hopf algebra needs a nonempty basis");
  auto check_vec = [&](const SparseVec& v) {
    for (const auto& [i, c] : v) {
      (void)c;
      if (i >= n) fail(Err::Dimension, "structure constant index out of range");
    }
  };
  if (product_.size() != n) fail(Err::Dimension, "product table has wrong size");
  for (const auto& row : product_) {
    if (row.size() != n) fail(Err::Dimension, "product table has wrong size");
    for (const auto& v : row) check_vec(v);
  }
  check_vec(unit_);
  if (coproduct_.size() != n) fail(Err::Dimension, "coproduct table has wrong size");
  for (const auto& m : coproduct_)
    for (const auto& [jk, c] : m) {
      (void)c;
      if (jk.first >= n || jk.second >= n)
        fail(Err::Dimension, "coproduct index out of range");
    }
  if (counit_.size() != n) fail(Err::Dimension, "counit table has wrong size");
  if (antipode_.size() != n) fail(Err::Dimension, "antipode table has wrong size");
  for (const auto& v : antipode_) check_vec(v);
}

SparseVec FinHopf::basis_vec(size_t i) const {
  if (i >= dim()) fail(Err::Dimension, "basis index out of range");
  return {{i, Scalar::one(ps_)}};
}

SparseVec FinHopf::mul(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) {
      Scalar c = ca * cb;
      for (const auto& [k, ck] : product_[i][j]) vec_add(out, k, c * ck);
    }
  return out;
}

SparseMat FinHopf::mul2(const SparseMat& a, const SparseMat& b) const {
  SparseMat out;
  for (const auto& [ij, ca] : a)
    for (const auto& [kl, cb] : b) {
      Scalar c = ca * cb;
      for (const auto& [p, cp] : product_[ij.first][kl.first])
        for (const auto& [q, cq] : product_[ij.second][kl.second])
          mat_add(out, p, q, c * cp * cq);
    }
  return out;
}

SparseMat FinHopf::delta(const SparseVec& a) const {
  SparseMat out;
  for (const auto& [i, c] : a)
    for (const auto& [jk, d] : coproduct_[i]) mat_add(out, jk.first, jk.second, c * d);
  return out;
}

Scalar FinHopf::eps(const SparseVec& a) const {
  Scalar s = Scalar::zero(ps_);
  for (const auto& [i, c] : a) s = s + c * counit_[i];
  return s;
}

SparseVec FinHopf::antipode(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a)
    for (const auto& [j, d] : antipode_[i]) vec_add(out, j, c * d);
  return out;
}

namespace {

SparseVec vec_sub(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  for (const auto& [i, c] : b) vec_add(out, i, -c);
  return out;
}

SparseMat mat_sub(const SparseMat& a, const SparseMat& b) {
  SparseMat out = a;
  for (const auto& [ij, c] : b) mat_add(out, ij.first, ij.second, -c);
  return out;
}

using Sparse3 = std::map<std::tuple<size_t, size_t, size_t>, Scalar>;

void t3_add(Sparse3& t, size_t i, size_t j, size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(i, j, k);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

std::vector<std::pair<std::string, std::vector<CheckViolation>>> FinHopf::check_axioms() const {
  std::vector<std::pair<std::string, std::vector<CheckViolation>>> report;
  size_t n = dim();

  // 1. associativity and unit laws
  {
    std::vector<CheckViolation> v;
    for (size_t i = 0; i < n; ++i) {
      SparseVec bi = basis_vec(i);
      SparseVec d1 = vec_sub(mul(unit_, bi), bi);
      if (!d1.empty()) v.push_back({"1*" + basis_[i], vec_str(d1)});
      SparseVec d2 = vec_sub(mul(bi, unit_), bi);
      if (!d2.empty()) v.push_back({basis_[i] + "*1", vec_str(d2)});
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          SparseVec lhs = mul(product_[i][j], basis_vec(k));
          SparseVec rhs = mul(basis_vec(i), product_[j][k]);
          SparseVec d = vec_sub(lhs, rhs);
          if (!d.empty())
            v.push_back({"(" + basis_[i] + "*" + basis_[j] + ")*" + basis_[k],
                         vec_str(d)});
        }
    }
    report.emplace_back("associativity-unit", std::move(v));
  }

  // 2. coassociativity and counit laws
  {
    std::vector<CheckViolation> v;
    for (size_t i = 0; i < n; ++i) {
      Sparse3 lhs, rhs;
      for (const auto& [jk, c] : coproduct_[i]) {
        for (const auto& [ab, d] : coproduct_[jk.first])
          t3_add(lhs, ab.first, ab.second, jk.second, c * d);
        for (const auto& [ab, d] : coproduct_[jk.second])
          t3_add(rhs, jk.first, ab.first, ab.second, c * d);
      }
      if (lhs != rhs)
        v.push_back({"coassoc " + basis_[i], "triple coproducts differ"});

      SparseVec le, re;
      for (const auto& [jk, c] : coproduct_[i]) {
        vec_add(le, jk.second, c * counit_[jk.first]);
        vec_add(re, jk.first, c * counit_[jk.second]);
      }
      SparseVec dl = vec_sub(le, basis_vec(i));
      SparseVec dr = vec_sub(re, basis_vec(i));
      if (!dl.empty()) v.push_back({"counit left " + basis_[i], vec_str(dl)});
      if (!dr.empty()) v.push_back({"counit right " + basis_[i], vec_str(dr)});
    }
    report.emplace_back("coassociativity-counit", std::move(v));
  }

  // 3. coproduct is an algebra map
  {
    std::vector<CheckViolation> v;
    SparseMat unit2;
    for (const auto& [i, ci] : unit_)
      for (const auto& [j, cj] : unit_) mat_add(unit2, i, j, ci * cj);
    SparseMat d0 = mat_sub(delta(unit_), unit2);
    if (!d0.empty()) v.push_back({"Delta(1)", mat_str(d0)});
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        SparseMat lhs = delta(product_[i][j]);
        SparseMat rhs = mul2(coproduct_[i], coproduct_[j]);
        SparseMat d = mat_sub(lhs, rhs);
        if (!d.empty())
          v.push_back({"Delta(" + basis_[i] + "*" + basis_[j] + ")", mat_str(d)});
      }
    report.emplace_back("coproduct-multiplicative", std::move(v));
  }

  // 4. counit is an algebra map
  {
    std::vector<CheckViolation> v;
    Scalar e1 = eps(unit_) - Scalar::one(ps_);
    if (!e1.is_zero()) v.push_back({"eps(1)", e1.str()});
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Scalar d = eps(product_[i][j]) - counit_[i] * counit_[j];
        if (!d.is_zero())
          v.push_back({"eps(" + basis_[i] + "*" + basis_[j] + ")", d.str()});
      }
    report.emplace_back("counit-multiplicative", std::move(v));
  }

  // 5. antipode axiom
  {
    std::vector<CheckViolation> v;
    for (size_t i = 0; i < n; ++i) {
      SparseVec left, right;
      for (const auto& [jk, c] : coproduct_[i]) {
        for (const auto& [p, cp] : mul(antipode_[jk.first], basis_vec(jk.second)))
          vec_add(left, p, c * cp);
        for (const auto& [p, cp] : mul(basis_vec(jk.first), antipode_[jk.second]))
          vec_add(right, p, c * cp);
      }
      SparseVec target;
      for (const auto& [k, ck] : unit_) vec_add(target, k, counit_[i] * ck);
      SparseVec dl = vec_sub(left, target);
      SparseVec dr = vec_sub(right, target);
      if (!dl.empty()) v.push_back({"antipode left " + basis_[i], vec_str(dl)});
      if (!dr.empty()) v.push_back({"antipode right " + basis_[i], vec_str(dr)});
    }
    report.emplace_back("antipode", std::move(v));
  }

  return report;
}

bool FinHopf::passes_axioms() const {
  for (const auto& [name, violations] : check_axioms()) {
    (void)name;
    if (!violations.empty()) return false;
  }
  return true;
}

FinHopf FinHopf::dual() const {
  size_t n = dim();
  std::vector<std::string> basis;
  basis.reserve(n);
  for (const auto& b : basis_) basis.push_back(b + "*");

  std::vector<std::vector<SparseVec>> product(n, std::vector<SparseVec>(n));
  for (size_t k = 0; k < n; ++k)
    for (const auto& [ij, c] : coproduct_[k]) product[ij.first][ij.second][k] = c;

  std::vector<SparseMat> coproduct(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product_[i][j]) coproduct[k][{i, j}] = c;

  SparseVec unit;
  for (size_t i = 0; i < n; ++i) vec_add(unit, i, counit_[i]);

  std::vector<Scalar> counit;
  counit.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    auto it = unit_.find(i);
    counit.push_back(it == unit_.end() ? Scalar::zero(ps_) : it->second);
  }

  std::vector<SparseVec> antipode(n);
  for (size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : antipode_[j]) antipode[i][j] = c;

  return FinHopf(name_ + "*", ps_, std::move(basis), std::move(product), std::move(unit),
                 std::move(coproduct), std::move(counit), std::move(antipode));
}

bool FinHopf::structure_equal(const FinHopf& o) const {
  return dim() == o.dim() && product_ == o.product_ && unit_ == o.unit_ &&
         coproduct_ == o.coproduct_ && counit_ == o.counit_ && antipode_ == o.antipode_;
}

std::string FinHopf::vec_str(const SparseVec& v) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  parts.reserve(v.size());
  for (const auto& [i, c] : v) parts.emplace_back(basis_.at(i), c);
  return format_linear(parts);
}

std::string FinHopf::mat_str(const SparseMat& m) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  parts.reserve(m.size());
  for (const auto& [ij, c] : m)
    parts.emplace_back(basis_.at(ij.first) + "|" + basis_.at(ij.second), c);
  return format_linear(parts);
}

// ------------------------------------------------------------------ pairing ---

Scalar pairing_eval(const FinHopf& h, const SparseVec& a, const SparseVec& f) {
  Scalar s = Scalar::zero(h.params());
  for (const auto& [i, c] : f) {
    if (i >= h.dim()) fail(Err::Dimension, "pairing index out of range");
    auto it = a.find(i);
    if (it != a.end()) s = s + c * it->second;
  }
  for (const auto& [i, c] : a) {
    (void)c;
    if (i >= h.dim()) fail(Err::Dimension, "pairing index out of range");
  }
  return s;
}

// ---------------------------------------------------------------- iso search ---

namespace {

std::string vec_sig(const SparseVec& v, const std::vector<size_t>& color, size_t off) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : v)
    parts.push_back(std::to_string(color[off + k]) + ":" + c.str());
  std::sort(parts.begin(), parts.end());
  std::string s = "{";
  for (const auto& p : parts) s += p + ",";
  return s + "}";
}

std::string mat_sig(const SparseMat& m, const std::vector<size_t>& color, size_t off) {
  std::vector<std::string> parts;
  for (const auto& [jk, c] : m)
    parts.push_back(std::to_string(color[off + jk.first]) + "." +
                    std::to_string(color[off + jk.second]) + ":" + c.str());
  std::sort(parts.begin(), parts.end());
  std::string s = "{";
  for (const auto& p : parts) s += p + ",";
  return s + "}";
}

std::string elem_sig(const FinHopf& h, size_t i, const std::vector<size_t>& color,
                     size_t off) {
  std::string s = "e=" + h.counit_const(i).str();
  auto it = h.unit_vec().find(i);
  s += ";u=" + (it == h.unit_vec().end() ? std::string("0") : it->second.str());
  s += ";S=" + vec_sig(h.antipode_const(i), color, off);
  s += ";D=" + mat_sig(h.coproduct_const(i), color, off);
  std::vector<std::string> prows;
  for (size_t j = 0; j < h.dim(); ++j)
    prows.push_back("c" + std::to_string(color[off + j]) + ">" +
                    vec_sig(h.product_const(i, j), color, off) + "<" +
                    vec_sig(h.product_const(j, i), color, off));
  std::sort(prows.begin(), prows.end());
  s += ";P=";
  for (const auto& p : prows) s += p + "|";
  return s;
}

// Support-size equality plus agreement on already-mapped indices.
bool partial_vec_match(const SparseVec& va, const SparseVec& vb,
                       const std::vector<long>& to_b) {
  if (va.size() != vb.size()) return false;
  for (const auto& [k, c] : va) {
    if (to_b[k] < 0) continue;
    auto it = vb.find(static_cast<size_t>(to_b[k]));
    if (it == vb.end() || !(it->second == c)) return false;
  }
  return true;
}

bool partial_mat_match(const SparseMat& ma, const SparseMat& mb,
                       const std::vector<long>& to_b) {
  if (ma.size() != mb.size()) return false;
  for (const auto& [jk, c] : ma) {
    if (to_b[jk.first] < 0 || to_b[jk.second] < 0) continue;
    auto it = mb.find({static_cast<size_t>(to_b[jk.first]),
                       static_cast<size_t>(to_b[jk.second])});
    if (it == mb.end() || !(it->second == c)) return false;
  }
  return true;
}

bool verify_iso(const FinHopf& a, const FinHopf& b, const std::vector<size_t>& perm) {
  size_t n = a.dim();
  auto tv = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) vec_add(out, perm[i], c);
    return out;
  };
  auto tm = [&](const SparseMat& m) {
    SparseMat out;
    for (const auto& [ij, c] : m) mat_add(out, perm[ij.first], perm[ij.second], c);
    return out;
  };
  if (tv(a.unit_vec()) != b.unit_vec()) return false;
  for (size_t i = 0; i < n; ++i) {
    if (!(a.counit_const(i) == b.counit_const(perm[i]))) return false;
    if (tv(a.antipode_const(i)) != b.antipode_const(perm[i])) return false;
    if (tm(a.coproduct_const(i)) != b.coproduct_const(perm[i])) return false;
    for (size_t j = 0; j < n; ++j)
      if (tv(a.product_const(i, j)) != b.product_const(perm[i], perm[j])) return false;
  }
  return true;
}

struct IsoSearch {
  const FinHopf& a;
  const FinHopf& b;
  std::vector<size_t> color;  // joint colors, a at offset 0, b at offset n
  std::vector<long> to_b;     // partial map a index -> b index (-1 unset)
  std::vector<char> used_b;
  std::vector<size_t> order;  // a indices in assignment order
  std::vector<size_t> result;
  bool found = false;

  bool consistent(size_t i, size_t j) const {
    if (!(a.counit_const(i) == b.counit_const(j))) return false;
    auto ua = a.unit_vec().find(i);
    auto ub = b.unit_vec().find(j);
    bool ha = ua != a.unit_vec().end(), hb = ub != b.unit_vec().end();
    if (ha != hb || (ha && !(ua->second == ub->second))) return false;
    if (!partial_vec_match(a.antipode_const(i), b.antipode_const(j), to_b)) return false;
    if (!partial_mat_match(a.coproduct_const(i), b.coproduct_const(j), to_b)) return false;
    for (size_t k = 0; k < a.dim(); ++k) {
      if (to_b[k] < 0 && k != i) continue;
      size_t kb = (k == i) ? j : static_cast<size_t>(to_b[k]);
      if (!partial_vec_match(a.product_const(i, k), b.product_const(j, kb), to_b))
        return false;
      if (!partial_vec_match(a.product_const(k, i), b.product_const(kb, j), to_b))
        return false;
    }
    return true;
  }

  bool extend(size_t depth) {
    if (depth == order.size()) {
      std::vector<size_t> perm(a.dim());
      for (size_t i = 0; i < a.dim(); ++i) perm[i] = static_cast<size_t>(to_b[i]);
      if (verify_iso(a, b, perm)) {
        result = perm;
        return true;
      }
      return false;
    }
    size_t i = order[depth];
    size_t n = a.dim();
    for (size_t j = 0; j < n; ++j) {
      if (used_b[j] || color[i] != color[n + j]) continue;
      if (!consistent(i, j)) continue;
      to_b[i] = static_cast<long>(j);
      used_b[j] = 1;
      if (extend(depth + 1)) return true;
      to_b[i] = -1;
      used_b[j] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<size_t>> find_hopf_iso(const FinHopf& a, const FinHopf& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  size_t n = a.dim();
  std::vector<size_t> color(2 * n, 0);
  for (size_t round = 0; round < 2 * n; ++round) {
    std::vector<std::string> sigs(2 * n);
    for (size_t i = 0; i < n; ++i) sigs[i] = elem_sig(a, i, color, 0);
    for (size_t j = 0; j < n; ++j) sigs[n + j] = elem_sig(b, j, color, n);
    std::vector<std::string> uniq(sigs);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<size_t> next(2 * n);
    for (size_t k = 0; k < 2 * n; ++k)
      next[k] = static_cast<size_t>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[k]) - uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  // Each color class must have equal size on both sides.
  std::map<size_t, long> balance;
  for (size_t i = 0; i < n; ++i) ++balance[color[i]];
  for (size_t j = 0; j < n; ++j) --balance[color[n + j]];
  for (const auto& [c, d] : balance) {
    (void)c;
    if (d != 0) return std::nullopt;
  }

  IsoSearch s{a, b, color, std::vector<long>(n, -1), std::vector<char>(n, 0), {}, {}, false};
  // Assign elements in rarest-color-first order to fail fast.
  std::map<size_t, size_t> class_size;
  for (size_t i = 0; i < n; ++i) ++class_size[color[i]];
  s.order.resize(n);
  for (size_t i = 0; i < n; ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(), [&](size_t x, size_t y) {
    return class_size[color[x]] < class_size[color[y]];
  });
  if (s.extend(0)) return s.result;
  return std::nullopt;
}

// ------------------------------------------------------------ Hopf morphism ---

std::vector<CheckViolation> hopf_morphism_violations(const FinHopf& a, const FinHopf& b,
                                                     const std::vector<SparseVec>& images) {
  if (images.size() != a.dim())
    fail(Err::Dimension, "morphism needs an image for every basis element");
  std::vector<CheckViolation> out;
  auto fv = [&](const SparseVec& v) {
    SparseVec r;
    for (const auto& [i, c] : v)
      for (const auto& [j, d] : images[i]) vec_add(r, j, c * d);
    return r;
  };
  auto fm = [&](const SparseMat& m) {
    SparseMat r;
    for (const auto& [ij, c] : m)
      for (const auto& [p, cp] : images[ij.first])
        for (const auto& [q, cq] : images[ij.second]) mat_add(r, p, q, c * cp * cq);
    return r;
  };
  SparseVec du = vec_sub(fv(a.unit_vec()), b.unit_vec());
  if (!du.empty()) out.push_back({"f(1)", b.vec_str(du)});
  for (size_t i = 0; i < a.dim(); ++i) {
    SparseMat dd = mat_sub(b.delta(images[i]), fm(a.coproduct_const(i)));
    if (!dd.empty()) out.push_back({"Delta f(" + a.basis()[i] + ")", b.mat_str(dd)});
    Scalar de = b.eps(images[i]) - a.counit_const(i);
    if (!de.is_zero()) out.push_back({"eps f(" + a.basis()[i] + ")", de.str()});
    SparseVec ds = vec_sub(b.antipode(images[i]), fv(a.antipode_const(i)));
    if (!ds.empty()) out.push_back({"S f(" + a.basis()[i] + ")", b.vec_str(ds)});
    for (size_t j = 0; j < a.dim(); ++j) {
      SparseVec dm = vec_sub(fv(a.product_const(i, j)), b.mul(images[i], images[j]));
      if (!dm.empty())
        out.push_back({"f(" + a.basis()[i] + "*" + a.basis()[j] + ")", b.vec_str(dm)});
    }
  }
  return out;
}

// ------------------------------------------------------------ FinAlgebraMap ---

FinAlgebraMap::FinAlgebraMap(const Presentation& src, const FinHopf& dst,
                             std::vector<SparseVec> gen_images)
    : src_(&src), dst_(&dst), images_(std::move(gen_images)) {
  if (images_.size() != src.ngens())
    fail(Err::InvalidArgument, "algebra map needs an image for every generator");
}

SparseVec FinAlgebraMap::apply_word(const Word& w) const {
  SparseVec acc = dst_->unit_vec();
  for (GenId g : w) acc = dst_->mul(acc, images_.at(g));
  return acc;
}

SparseVec FinAlgebraMap::apply(const Element& e) const {
  SparseVec out;
  for (const auto& [w, c] : e.terms())
    for (const auto& [i, d] : apply_word(w)) vec_add(out, i, c * d);
  return out;
}

std::vector<CheckViolation> FinAlgebraMap::relation_violations() const {
  std::vector<CheckViolation> out;
  for (const RewriteRule& r : src_->rules()) {
    SparseVec residual = apply(src_->word(r.lhs) - r.rhs);
    if (!residual.empty())
      out.push_back({word_str(r.lhs, src_->gen_names()) + " -> " + src_->element_str(r.rhs),
                     dst_->vec_str(residual)});
  }
  return out;
}

}  // namespace qgeo
