#pragma once

// Text format for presented algebras and their coalgebra data.
//
// A document is a sequence of statements:
//
//   params q, hbar;
//   algebra NAME { gens x, y:3; order x < y; rule y.x -> q*x.y; }
//   coproduct NAME { x -> x|1 + 1|x; }
//   counit NAME { x -> 0; }
//   antipode NAME { x -> -x; }
//   braiding NAME { x|y -> q*y|x; }
//   check hopf-axioms;
//   check confluence degree 3;
//
// Element expressions use `.` for word concatenation, `|` to separate
// tensor factors, and the scalar syntax (integers, i, parameters,
// + - * / ^, parentheses).  `|` binds tighter than + and - but looser
// than * and /, so `a|b + q*c|d` is (a|b) + ((q*c)|d).
//
// parse_dsl and print_dsl are mutually inverse on canonical documents:
// print_dsl(parse_dsl(text)) == text whenever text was itself produced
// by print_dsl.  All syntax and symbol errors are reported as ParseError
// with a 1-based line and column.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "freealg.hpp"
#include "hopf.hpp"

namespace qgeo {

struct ParseError final : Error {
  size_t line;
  size_t column;
  ParseError(size_t line, size_t column, const std::string& msg)
      : Error(Err::Parse, "line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

// A named check to run against the document's algebra, with an optional
// degree bound (-1 means "use the check's default").
struct CheckDirective {
  std::string name;
  int degree = -1;
};

// One algebra block plus whatever coalgebra data later blocks attached
// to it.  Vectors are indexed by generator id and are empty when the
// corresponding block is absent.
struct DslModel {
  Presentation pres;
  std::vector<std::vector<TensorTerm>> coproduct;
  std::vector<Scalar> counit;
  std::vector<Element> antipode;
  std::optional<BraidingTable> braiding;

  explicit DslModel(Presentation p) : pres(std::move(p)) {}
};

struct DslDocument {
  ParamSetPtr params;
  std::vector<DslModel> models;
  std::vector<CheckDirective> checks;

  const DslModel* find(const std::string& name) const;
};

DslDocument parse_dsl(const std::string& text);
std::string print_dsl(const DslDocument& doc);

// Parses a single element expression (no tensors) against an existing
// presentation; used by the command-line normal-form and commutator
// surfaces.  The whole string must be consumed.
Element parse_element(const Presentation& p, const std::string& text);

// Canonical JSON form of an element: a list of {"word": [names...],
// "coeff": scalar-string} objects, in the presentation's word order
// (highest first, matching element_str).
nlohmann::ordered_json element_json(const Presentation& p, const Element& e);

// Structural equality of two parsed/built models: generator names,
// weights, rules, coproduct (compared term-by-term after expanding
// tensor products), counit, antipode, and braiding table.
bool models_equal(const DslModel& a, const DslModel& b);

}  // namespace qgeo
