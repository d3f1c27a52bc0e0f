// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
#include "scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qgeo {

// ------------------------------------------------------------- rationals ---

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) fail(Err::Parse, "empty rational literal");
  std::string body = (t[0] == '-' || t[0] == '+') ? t.substr(1) : t;
  bool slash_seen = false;
  if (body.empty()) fail(Err::Parse, "bad rational literal '" + text + "'");
  for (size_t k = 0; k < body.size(); ++k) {
    char c = body[k];
    if (c == '/') {
      if (slash_seen || k == 0 || k + 1 == body.size())
        fail(Err::Parse, "bad rational literal '" + text + "'");
      slash_seen = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(Err::Parse, "bad rational literal '" + text + "'");
    }
  }
  Rat r(t, 10);
  if (r.get_den() == 0) fail(Err::Parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

GaussRat GaussRat::inverse() const {
  Rat n = re * re + im * im;
  if (n == 0) fail(Err::DivisionByZero, "inverse of zero in Q(i)");
  return GaussRat(re / n, -im / n);
}

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  if (im == 0) return rat_str(re);
  Rat ai = abs(im);
  std::string ip = (ai == 1) ? "i" : rat_str(ai) + "*i";
  if (re == 0) return (im < 0) ? "-" + ip : ip;
  return rat_str(re) + (im < 0 ? " - " : " + ") + ip;
}

// ------------------------------------------------------------- monomials ---

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] > o.e[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(e.size());
  for (size_t k = 0; k < e.size(); ++k) r.e[k] = e[k] + o.e[k];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(e.size());
  for (size_t k = 0; k < e.size(); ++k) {
    if (o.e[k] > e[k]) fail(Err::Internal, "monomial division underflow");
    r.e[k] = e[k] - o.e[k];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = std::min(a.e[k], b.e[k]);
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  uint64_t da = degree(), db = o.degree();
  if (da != db) return da < db;
  return e < o.e;  // lexicographic tie-break
}

// ----------------------------------------------------------------- polys ---

Poly Poly::constant(size_t arity, GaussRat c) {
  Poly p(arity);
  if (!c.is_zero()) p.terms_.emplace(Monomial(arity), std::move(c));
  return p;
}

Poly Poly::variable(size_t arity, size_t index, uint32_t power) {
  if (index >= arity) fail(Err::Internal, "variable index out of range");
  Poly p(arity);
  if (power == 0) return constant(arity, GaussRat(Rat(1)));
  Monomial m(arity);
  m.e[index] = power;
  p.terms_.emplace(std::move(m), GaussRat(Rat(1)));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Poly::is_one() const { return is_constant() && constant_value().is_one(); }

GaussRat Poly::constant_value() const {
  if (terms_.empty()) return GaussRat();
  if (!is_constant()) fail(Err::Internal, "constant_value of non-constant poly");
  return terms_.begin()->second;
}

uint64_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

uint32_t Poly::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
  return d;
}

void Poly::set_term(const Monomial& m, GaussRat c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = std::move(c);
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(Err::Internal, "leading term of zero poly");
  return terms_.rbegin()->first;
}

const GaussRat& Poly::leading_coeff() const {
  if (terms_.empty()) fail(Err::Internal, "leading term of zero poly");
  return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(arity_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const GaussRat& c) const {
  Poly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
  return r;
}

Poly Poly::mul_coeff(const GaussRat& c) const {
  Poly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm, cc * c);
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (arity_ != o.arity_) return arity_ < o.arity_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first < b.first) return true;
        if (b.first < a.first) return false;
        return a.second < b.second;
      });
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) fail(Err::DivisionByZero, "exact division by zero poly");
  Poly q(arity_);
  Poly r = *this;
  const Monomial& lb = divisor.leading_monomial();
  const GaussRat& cb = divisor.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) fail(Err::Internal, "inexact poly division");
    Monomial tm = lr / lb;
    GaussRat tc = r.leading_coeff() / cb;
    q.add_term(tm, tc);
    r = r - divisor.mul_term(tm, tc);
  }
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return mul_coeff(leading_coeff().inverse());
}

namespace {

// Componentwise-minimal exponent vector (the monomial content).
Monomial monomial_content(const Poly& p) {
  Monomial m = p.terms().begin()->first;
  for (const auto& [mm, c] : p.terms()) m = Monomial::gcd(m, mm);
  return m;
}

Poly shift_down(const Poly& p, const Monomial& m) {
  if (m.degree() == 0) return p;
  Poly r(p.arity());
  for (const auto& [mm, c] : p.terms()) r.set_term(mm / m, c);
  return r;
}

// Variables mentioned by either polynomial.
std::vector<size_t> mentioned_vars(const Poly& a, const Poly& b) {
  std::vector<size_t> vs;
  for (size_t v = 0; v < a.arity(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) vs.push_back(v);
  return vs;
}

// Monic Euclid over Q(i) for polys mentioning the single variable v.
Poly gcd_univariate(const Poly& a, const Poly& b, size_t v) {
  auto dense = [&](const Poly& p) {
    std::vector<GaussRat> c(p.degree_in(v) + 1);
    for (const auto& [m, q] : p.terms()) c[m.e[v]] = c[m.e[v]] + q;
    return c;
  };
  auto trim = [](std::vector<GaussRat>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  };
  std::vector<GaussRat> f = dense(a), g = dense(b);
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f mod g, with g made monic on the fly
    GaussRat lg_inv = g.back().inverse();
    while (f.size() >= g.size()) {
      GaussRat q = f.back() * lg_inv;
      size_t off = f.size() - g.size();
      for (size_t k = 0; k < g.size(); ++k) f[off + k] = f[off + k] - q * g[k];
      trim(f);
      if (f.empty()) break;
    }
    std::swap(f, g);
  }
  Poly r(a.arity());
  GaussRat lead_inv = f.back().inverse();
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    Monomial m(a.arity());
    m.e[v] = static_cast<uint32_t>(k);
    r.set_term(m, f[k] * lead_inv);
  }
  return r;
}

// Coefficient of v^k in p, as a poly with the v-exponent cleared.
Poly coeff_of(const Poly& p, size_t v, uint32_t k) {
  Poly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[v] != k) continue;
    Monomial mm = m;
    mm.e[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

Poly content_in_var(const Poly& p, size_t v) {
  Poly g(p.arity());
  uint32_t d = p.degree_in(v);
  for (uint32_t k = 0; k <= d; ++k) {
    Poly ck = coeff_of(p, v, k);
    if (!ck.is_zero()) g = Poly::gcd(g, ck);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of f by g with respect to variable v.
Poly pseudo_rem(const Poly& f, const Poly& g, size_t v) {
  uint32_t dg = g.degree_in(v);
  Poly lead_g = coeff_of(g, v, dg);
  Poly r = f;
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    uint32_t dr = r.degree_in(v);
    Poly lead_r = coeff_of(r, v, dr);
    Poly shift = Poly::variable(f.arity(), v, dr - dg);
    r = lead_g * r - lead_r * shift * g;
  }
  return r;
}

}  // namespace

Poly Poly::gcd(const Poly& a_in, const Poly& b_in) {
  if (a_in.is_zero()) return b_in.monic();
  if (b_in.is_zero()) return a_in.monic();
  size_t arity = a_in.arity();
  if (a_in.is_constant() || b_in.is_constant())
    return constant(arity, GaussRat(Rat(1)));
  // Pull out the monomial content first: cheap, and it strips variables that
  // only occur as common factors.
  Monomial mc = Monomial::gcd(monomial_content(a_in), monomial_content(b_in));
  Poly a = shift_down(a_in, monomial_content(a_in));
  Poly b = shift_down(b_in, monomial_content(b_in));
  Poly rest(arity);
  if (a.is_constant() || b.is_constant()) {
    rest = constant(arity, GaussRat(Rat(1)));
  } else {
    std::vector<size_t> vars = mentioned_vars(a, b);
    if (vars.size() == 1) {
      rest = gcd_univariate(a, b, vars[0]);
    } else {
      rest = gcd_multivar(a, b);
    }
  }
  return rest.mul_term(mc, GaussRat(Rat(1)));
}

Poly Poly::gcd_multivar(const Poly& a, const Poly& b) {
  size_t arity = a.arity();
  size_t v = 0;
  while (v < arity && a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;
  if (a.degree_in(v) == 0) return gcd(a, content_in_var(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in_var(a, v), b);
  Poly ca = content_in_var(a, v);
  Poly cb = content_in_var(b, v);
  Poly c = gcd(ca, cb);
  Poly f = a.divide_exact(ca);
  Poly g = b.divide_exact(cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (true) {
    Poly r = pseudo_rem(f, g, v);
    if (r.is_zero()) return (c * g).monic();
    if (r.degree_in(v) == 0) return c;  // primitive parts coprime
    f = g;
    g = r.divide_exact(content_in_var(r, v)).monic();
  }
}

namespace {

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (size_t k = 0; k < m.e.size(); ++k) {
    if (m.e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
  }
  return s;
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const GaussRat& c = it->second;
    std::string mono = monomial_str(it->first, names);
    bool neg = false;
    std::string body;
    if (c.im == 0) {
      neg = c.re < 0;
      Rat a = abs(c.re);
      if (mono.empty())
        body = rat_str(a);
      else if (a == 1)
        body = mono;
      else
        body = rat_str(a) + "*" + mono;
    } else if (c.re == 0) {
      neg = c.im < 0;
      Rat a = abs(c.im);
      std::string ip = (a == 1) ? "i" : rat_str(a) + "*i";
      body = mono.empty() ? ip : ip + "*" + mono;
    } else {
      body = "(" + c.str() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

// ------------------------------------------------------------ parameters ---

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t a = 0; a < names_.size(); ++a)
    for (size_t b = a + 1; b < names_.size(); ++b)
      if (names_[a] == names_[b])
        fail(Err::InvalidArgument, "duplicate parameter '" + names_[a] + "'");
}

std::optional<size_t> ParamSet::index(const std::string& name) const {
  for (size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

ParamSetPtr make_params(std::vector<std::string> names) {
  return std::make_shared<const ParamSet>(std::move(names));
}

// ---------------------------------------------------------------- Scalar ---

const ParamSetPtr& Scalar::default_params() {
  static const ParamSetPtr ps = make_params({});
  return ps;
}

Scalar::Scalar(ParamSetPtr ps, Poly num, Poly den)
    : ps_(std::move(ps)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) fail(Err::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(ps_->size(), GaussRat(Rat(1)));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  const GaussRat& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussRat inv = lc.inverse();
    num_ = num_.mul_coeff(inv);
    den_ = den_.mul_coeff(inv);
  }
}

Scalar Scalar::zero(const ParamSetPtr& ps) {
  return Scalar(ps, Poly(ps->size()), Poly::constant(ps->size(), GaussRat(Rat(1))));
}

Scalar Scalar::one(const ParamSetPtr& ps) { return gauss(ps, GaussRat(Rat(1))); }

Scalar Scalar::integer(const ParamSetPtr& ps, long n) { return gauss(ps, GaussRat(Rat(n))); }

Scalar Scalar::rational(const ParamSetPtr& ps, const Rat& r) { return gauss(ps, GaussRat(r)); }

Scalar Scalar::gauss(const ParamSetPtr& ps, const GaussRat& g) {
  return Scalar(ps, Poly::constant(ps->size(), g), Poly::constant(ps->size(), GaussRat(Rat(1))));
}

Scalar Scalar::imag_unit(const ParamSetPtr& ps) { return gauss(ps, GaussRat::i()); }

Scalar Scalar::param(const ParamSetPtr& ps, size_t index) {
  if (index >= ps->size()) fail(Err::InvalidArgument, "parameter index out of range");
  return Scalar(ps, Poly::variable(ps->size(), index),
                Poly::constant(ps->size(), GaussRat(Rat(1))));
}

Scalar Scalar::param(const ParamSetPtr& ps, const std::string& name) {
  auto idx = ps->index(name);
  if (!idx) fail(Err::InvalidArgument, "unknown parameter '" + name + "'");
  return param(ps, *idx);
}

Scalar Scalar::from_fraction(const ParamSetPtr& ps, Poly num, Poly den) {
  return Scalar(ps, std::move(num), std::move(den));
}

GaussRat Scalar::constant_value() const {
  if (!is_constant()) fail(Err::InvalidArgument, "scalar is not constant: " + str());
  if (num_.is_zero()) return GaussRat();
  return num_.constant_value() / den_.constant_value();
}

Rat Scalar::rational_value() const {
  GaussRat g = constant_value();
  if (!g.is_real()) fail(Err::InvalidArgument, "scalar is not real: " + str());
  return g.re;
}

namespace {

void check_compat(const ParamSetPtr& a, const ParamSetPtr& b) {
  if (a == b || *a == *b) return;
  fail(Err::InvalidArgument, "scalars over different parameter sets");
}

}  // namespace

Scalar Scalar::operator-() const { return Scalar(ps_, -num_, den_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  return Scalar(ps_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  return Scalar(ps_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  return Scalar(ps_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  if (o.num_.is_zero()) fail(Err::DivisionByZero, "division by zero scalar");
  return Scalar(ps_, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  if (num_.is_zero()) fail(Err::DivisionByZero, "inverse of zero scalar");
  return Scalar(ps_, den_, num_);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r = one(ps_);
  Scalar base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  return num_ == o.num_ && den_ == o.den_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_compat(ps_, o.ps_);
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

bool Scalar::mentions(const std::string& name) const {
  auto idx = ps_->index(name);
  if (!idx) return false;
  return num_.mentions(*idx) || den_.mentions(*idx);
}

namespace {

Scalar eval_poly(const Poly& p, const ParamSetPtr& ps,
                 const std::vector<std::optional<Scalar>>& bind) {
  Scalar acc = Scalar::zero(ps);
  for (const auto& [m, c] : p.terms()) {
    Scalar t = Scalar::gauss(ps, c);
    for (size_t v = 0; v < m.e.size(); ++v) {
      if (m.e[v] == 0) continue;
      Scalar base = bind[v] ? *bind[v] : Scalar::param(ps, v);
      t = t * base.pow(static_cast<long>(m.e[v]));
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  std::vector<std::optional<Scalar>> bind(ps_->size());
  for (const auto& [name, value] : bindings) {
    auto idx = ps_->index(name);
    if (!idx) fail(Err::InvalidArgument, "substitution of unknown parameter '" + name + "'");
    check_compat(ps_, value.params());
    if (value.mentions(name))
      fail(Err::InvalidArgument, "binding for '" + name + "' mentions itself");
    bind[*idx] = value;
  }
  Scalar n = eval_poly(num_, ps_, bind);
  Scalar d = eval_poly(den_, ps_, bind);
  if (d.is_zero())
    fail(Err::Pole, "pole: denominator (" + den_.str(ps_->names()) + ") vanishes");
  return n / d;
}

Scalar Scalar::limit_at(const std::string& name, const Rat& value) const {
  std::map<std::string, Scalar> b;
  b.emplace(name, Scalar::rational(ps_, value));
  return substitute(b);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str(ps_->names());
  return "(" + num_.str(ps_->names()) + ")/(" + den_.str(ps_->names()) + ")";
}

std::optional<std::pair<bool, std::string>> Scalar::signed_atom() const {
  if (is_zero()) return std::make_pair(false, std::string("0"));
  if (!den_.is_one() || num_.terms().size() != 1) return std::nullopt;
  const auto& [mono, c] = *num_.terms().begin();
  std::string ms = monomial_str(mono, ps_->names());
  bool neg;
  std::string body;
  if (c.im == 0) {
    neg = c.re < 0;
    Rat a = abs(c.re);
    if (ms.empty())
      body = rat_str(a);
    else if (a == 1)
      body = ms;
    else
      body = rat_str(a) + "*" + ms;
  } else if (c.re == 0) {
    neg = c.im < 0;
    Rat a = abs(c.im);
    std::string ip = (a == 1) ? "i" : rat_str(a) + "*i";
    body = ms.empty() ? ip : ip + "*" + ms;
  } else {
    return std::nullopt;
  }
  return std::make_pair(neg, body);
}



// -------------------------------------------------------- expression parse ---

namespace {

struct ScalarParser {
  const ParamSetPtr& ps;
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void die(const std::string& msg) const {
    fail(Err::Parse,
         msg + " at position " + std::to_string(pos) + " in scalar '" + s + "'");
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar v = atom();
    if (eat('^')) return v.pow(exponent());
    return v;
  }

  long exponent() {
    bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      die("expected an integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) die("exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  Scalar atom() {
    skip();
    if (pos >= s.size()) die("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar v = expr();
      if (!eat(')')) die("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar::rational(ps, Rat(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "i") return Scalar::imag_unit(ps);
      if (!ps->index(name))
        die("unknown parameter '" + name + "'");
      return Scalar::param(ps, name);
    }
    die(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Scalar parse_scalar(const ParamSetPtr& ps, const std::string& text) {
  ScalarParser p{ps, text};
  Scalar v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.die("unexpected trailing input");
  return v;
}

}  // namespace qgeo
