#pragma once

// Named verification suites over models, with serializable reports.
//
// Check names:
//   hopf-axioms   coalgebra maps respect the relations; coassociativity,
//                 counit, and (when an antipode is present) antipode axioms
//                 up to a degree bound.  On finite-dimensional models the
//                 axioms are enumerated over the whole basis instead.
//   braided-hopf  the same compatibility checks computed with the model's
//                 braiding in place of the flip.
//   confluence    all rewrite-rule overlaps up to the bound resolve.
//   ybe           the model's R-matrix satisfies the Yang-Baxter equation.
//   dqua          the R-matrix bicharacter is a dual quasitriangular
//                 structure on the matrix bialgebra, up to the bound.
//   duality       the dual of a finite-dimensional model passes the axioms
//                 and the double dual has the original structure constants.
//   fourier       the Fourier transform takes convolution to the group-
//                 algebra product on every delta-function pair.
//   flow          the observable flow a -> (i/hbar)[h, a] is a derivation
//                 on pseudorandom triples.
//   regime        the scale classifier reproduces its reference samples.
//
// Degree bounds: a request of -1 uses the default, which is 2 for dqua and
// for the braided-matrix model, 3 for bicso3 and for braided models, and 4
// otherwise; confluence never defaults below 3 (shorter bounds see no
// overlaps at all).

#include <string>
#include <vector>

#include "dsl.hpp"
#include "models.hpp"

namespace qgeo {

struct ReportViolation {
  std::string kind;  // "relation" or "word": what the item names
  std::string item;
  std::string residual;
};

struct CheckReport {
  std::string model;
  std::string check;
  int degree = 0;  // 0 when the check takes no degree bound
  bool pass = true;
  std::vector<ReportViolation> violations;
  long long elapsed_ms = 0;
};

// All valid check names, in canonical order.
std::vector<std::string> known_checks();

// The checks that make sense for this model, in canonical order; this is
// what an unqualified run_suite executes.
std::vector<std::string> applicable_checks(const Model& m);

int default_degree(const Model& m, const std::string& check);

// Runs one named check.  Err::UnknownCheck for a name outside
// known_checks(); Err::InvalidArgument when the model lacks the needed
// structure (for example ybe on a model without an R-matrix).
CheckReport run_check(const Model& m, const std::string& check, int degree = -1);

// Runs a list of checks (empty: all applicable ones).  A directive written
// as a bare name, {"confluence"}, uses the default degree; degree_override,
// when nonnegative, wins over both per-directive degrees and defaults.
std::vector<CheckReport> run_suite(const Model& m,
                                   const std::vector<CheckDirective>& checks = {},
                                   int degree_override = -1);

// Wraps one parsed algebra (plus its coalgebra data) as a model so the
// same checks run on documents and on built-in models alike.
Model to_model(const DslModel& dm);

// The inverse direction: a printable document for a presented model,
// carrying the checks that a document round-trip can still run (R-matrix
// checks need the matrix itself, which the text format does not carry).
DslDocument model_document(const Model& m);

// Renders reports as "json" (stable field order, byte-identical runs up
// to elapsed_ms) or "text" (one line per report plus violation lines).
std::string export_report(const std::vector<CheckReport>& reports,
                          const std::string& format);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace qgeo
