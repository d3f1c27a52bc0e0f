// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Exact scalar arithmetic: the fraction field of sparse multivariate
// polynomials over the Gaussian rationals Q(i), in a declared set of formal
// parameters. Every Scalar is kept in a canonical reduced form (numerator and
// denominator coprime, denominator monic under the canonical monomial order,
// zero represented as 0/1), so equality of values is structural equality of
// representations.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace qgeo {

using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_from_string(const std::string& text);  // "p" or "p/q", throws Err::Parse

// ------------------------------------------------------------------ Q(i) ---

struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat inverse() const;  // throws Err::DivisionByZero on 0
  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  bool operator<(const GaussRat& o) const {  // arbitrary total order (canonical storage)
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  std::string str() const;  // standalone: "1/2", "-i", "3*i", "1 - 2*i"
};

// ------------------------------------------------------------- monomials ---

// Exponent vector over a fixed parameter list. Ordered by degree, then
// lexicographically by exponents (deglex); the map order below is ascending,
// so the leading monomial is the last entry of a Poly's term map.
struct Monomial {
  std::vector<uint32_t> e;

  explicit Monomial(size_t arity = 0) : e(arity, 0) {}

  uint64_t degree() const;
  bool is_unit() const { return degree() == 0; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const;  // deglex
};

// ----------------------------------------------------------------- polys ---

class Poly {
 public:
  explicit Poly(size_t arity = 0) : arity_(arity) {}

  static Poly constant(size_t arity, GaussRat c);
  static Poly variable(size_t arity, size_t index, uint32_t power = 1);

  size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  GaussRat constant_value() const;  // 0 if zero; requires is_constant()
  uint64_t total_degree() const;    // 0 for the zero poly
  uint32_t degree_in(size_t var) const;
  bool mentions(size_t var) const { return degree_in(var) > 0; }

  const std::map<Monomial, GaussRat>& terms() const { return terms_; }
  void set_term(const Monomial& m, GaussRat c);  // c == 0 erases
  void add_term(const Monomial& m, const GaussRat& c);

  const Monomial& leading_monomial() const;  // requires !is_zero()
  const GaussRat& leading_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Monomial& m, const GaussRat& c) const;
  Poly mul_coeff(const GaussRat& c) const;

  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // arbitrary total order for canonical storage

  // Exact division: requires divisor | *this (else Err::Internal).
  Poly divide_exact(const Poly& divisor) const;

  // Monic gcd under deglex; gcd(0,0) = 0. Monomial content is stripped first,
  // single-variable inputs use dense monic Euclid, and the general case runs a
  // primitive PRS in the lowest mentioned variable with contents handled
  // recursively.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;  // leading coefficient scaled to 1

  std::string str(const std::vector<std::string>& names) const;

 private:
  static Poly gcd_multivar(const Poly& a, const Poly& b);

  size_t arity_;
  std::map<Monomial, GaussRat> terms_;
};

// ------------------------------------------------------------ parameters ---

class ParamSet {
 public:
  explicit ParamSet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> index(const std::string& name) const;

  bool operator==(const ParamSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

ParamSetPtr make_params(std::vector<std::string> names);

// ---------------------------------------------------------------- Scalar ---

class Scalar {
 public:
  Scalar() : ps_(default_params()), num_(0), den_(Poly::constant(0, GaussRat(Rat(1)))) {}

  static Scalar zero(const ParamSetPtr& ps);
  static Scalar one(const ParamSetPtr& ps);
  static Scalar integer(const ParamSetPtr& ps, long n);
  static Scalar rational(const ParamSetPtr& ps, const Rat& r);
  static Scalar gauss(const ParamSetPtr& ps, const GaussRat& g);
  static Scalar imag_unit(const ParamSetPtr& ps);
  static Scalar param(const ParamSetPtr& ps, size_t index);
  static Scalar param(const ParamSetPtr& ps, const std::string& name);
  static Scalar from_fraction(const ParamSetPtr& ps, Poly num, Poly den);

  const ParamSetPtr& params() const { return ps_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  GaussRat constant_value() const;  // requires is_constant()
  // Exact rational value; Err::InvalidArgument unless constant and real.
  Rat rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // Err::DivisionByZero
  Scalar inverse() const;
  Scalar pow(long n) const;  // negative n inverts (Err::DivisionByZero on 0)

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // canonical storage order

  bool mentions(const std::string& name) const;

  // Simultaneous substitution of parameters by Scalars over the same ParamSet.
  // A binding must not mention the parameter it replaces (Err::InvalidArgument);
  // a vanishing denominator image raises Err::Pole.
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;
  // Substitute a single parameter by an exact rational; because the stored
  // form is fully reduced, a vanishing denominator is a genuine pole.
  Scalar limit_at(const std::string& name, const Rat& value) const;

  std::string str() const;  // canonical, re-parseable

  // If the scalar is a single polynomial term whose coefficient is purely real
  // or purely imaginary, returns (is_negative, printed absolute value); used
  // by element printers to fold signs into +/- chains. Zero yields (false,"0").
  std::optional<std::pair<bool, std::string>> signed_atom() const;

 private:
  Scalar(ParamSetPtr ps, Poly num, Poly den);
  void normalize();
  static const ParamSetPtr& default_params();

  ParamSetPtr ps_;
  Poly num_, den_;
};

// Parses a scalar expression over the given parameters: integer literals,
// the imaginary unit i, parameter names, parentheses, binary + - * /, unary
// minus, and ^ with (possibly negative) integer exponents.  The whole string
// must parse; Err::Parse carries the offending position.
Scalar parse_scalar(const ParamSetPtr& ps, const std::string& text);

}  // namespace qgeo
