// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// C binding over the core library: opaque handles, status codes mirroring
// the internal error enum, malloc'd string results, thread-local error
// messages.  Everything the CLI does goes through this surface.

#include "qgeo/qgeo.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "checks.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "models.hpp"

struct qgeo_model {
  // Set when the handle came from text; keeps the document's own layout
  // and check directives for printing and default suites.
  std::optional<qgeo::DslDocument> doc;
  // One entry per algebra (a single registry model, or each document
  // algebra wrapped as a model).
  std::vector<qgeo::Model> models;
};

namespace {

using qgeo::Element;
using qgeo::Err;
using qgeo::FinGroup;
using qgeo::Model;
using qgeo::Presentation;
using qgeo::Rat;
using qgeo::Scalar;

static_assert(static_cast<int>(Err::Ok) == QGEO_OK);
static_assert(static_cast<int>(Err::DivisionByZero) == QGEO_DIVISION_BY_ZERO);
static_assert(static_cast<int>(Err::Pole) == QGEO_POLE);
static_assert(static_cast<int>(Err::BudgetExceeded) == QGEO_BUDGET_EXCEEDED);
static_assert(static_cast<int>(Err::Parse) == QGEO_PARSE);
static_assert(static_cast<int>(Err::InvalidArgument) == QGEO_INVALID_ARGUMENT);
static_assert(static_cast<int>(Err::NotAGroup) == QGEO_NOT_A_GROUP);
static_assert(static_cast<int>(Err::NotAFactorisation) == QGEO_NOT_A_FACTORISATION);
static_assert(static_cast<int>(Err::Dimension) == QGEO_DIMENSION);
static_assert(static_cast<int>(Err::Construction) == QGEO_CONSTRUCTION);
static_assert(static_cast<int>(Err::NotBiinvertible) == QGEO_NOT_BIINVERTIBLE);
static_assert(static_cast<int>(Err::YbeFailure) == QGEO_YBE_FAILURE);
static_assert(static_cast<int>(Err::UnknownModel) == QGEO_UNKNOWN_MODEL);
static_assert(static_cast<int>(Err::UnknownCheck) == QGEO_UNKNOWN_CHECK);
static_assert(static_cast<int>(Err::Io) == QGEO_IO);
static_assert(static_cast<int>(Err::Internal) == QGEO_INTERNAL);
static_assert(static_cast<int>(Err::BoundExceeded) == QGEO_BOUND_EXCEEDED);

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
qgeo_status guarded(F&& body) {
  try {
    body();
    t_last_error.clear();
    return QGEO_OK;
  } catch (const qgeo::Error& e) {
    t_last_error = e.what();
    return static_cast<qgeo_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return QGEO_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr)
    qgeo::fail(Err::InvalidArgument, std::string(what) + " must not be null");
}

// The unique presentation in the handle; element operations are only
// defined when exactly one algebra is in scope.
const Presentation& sole_presentation(const qgeo_model* m) {
  const Presentation* found = nullptr;
  for (const Model& mod : m->models) {
    if (!mod.presented) continue;
    if (found != nullptr)
      qgeo::fail(Err::InvalidArgument,
                 "handle holds several algebras; element operations need "
                 "exactly one");
    found = &mod.presented->pres;
  }
  if (found == nullptr)
    qgeo::fail(Err::InvalidArgument,
               "model has no generator presentation; element operations "
               "apply to presented algebras only");
  return *found;
}

std::vector<qgeo::CheckDirective> split_checks(const std::string& csv) {
  std::vector<qgeo::CheckDirective> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    size_t end = comma == std::string::npos ? csv.size() : comma;
    std::string name = csv.substr(pos, end - pos);
    // Trim surrounding spaces so "a, b" works.
    size_t a = name.find_first_not_of(" \t");
    size_t b = name.find_last_not_of(" \t");
    name = a == std::string::npos ? "" : name.substr(a, b - a + 1);
    if (!name.empty()) out.push_back(qgeo::CheckDirective{name, -1});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty())
    qgeo::fail(Err::InvalidArgument, "empty check list");
  return out;
}

Rat parse_positive_rational(const char* text, const char* what) {
  require(text, what);
  Rat r;
  try {
    r = Rat(text);
  } catch (const std::invalid_argument&) {
    qgeo::fail(Err::Parse,
               std::string(what) + ": '" + text + "' is not a rational number");
  }
  // Canonicalize only after ruling out a zero denominator ("1/0" parses).
  if (mpz_sgn(r.get_den().get_mpz_t()) == 0)
    qgeo::fail(Err::DivisionByZero,
               std::string(what) + ": '" + text + "' has denominator zero");
  r.canonicalize();
  return r;
}

}  // namespace

extern "C" {

const char* qgeo_version(void) { return QGEO_VERSION_STRING; }

const char* qgeo_last_error(void) { return t_last_error.c_str(); }

void qgeo_string_free(char* s) { std::free(s); }

qgeo_status qgeo_model_list(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string joined;
    for (const std::string& n : qgeo::model_names()) joined += n + "\n";
    *out = dup_string(joined);
  });
}

qgeo_status qgeo_model_open(const char* name, qgeo_model** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto handle = std::make_unique<qgeo_model>();
    handle->models.push_back(qgeo::build_model(name));
    *out = handle.release();
  });
}

qgeo_status qgeo_model_from_text(const char* text, qgeo_model** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto handle = std::make_unique<qgeo_model>();
    handle->doc = qgeo::parse_dsl(text);
    for (const qgeo::DslModel& dm : handle->doc->models)
      handle->models.push_back(qgeo::to_model(dm));
    *out = handle.release();
  });
}

void qgeo_model_close(qgeo_model* m) { delete m; }

qgeo_status qgeo_model_print(const qgeo_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    if (m->doc) {
      *out = dup_string(qgeo::print_dsl(*m->doc));
      return;
    }
    // A registry model round-trips through its generated document.
    *out = dup_string(qgeo::print_dsl(qgeo::model_document(m->models.at(0))));
  });
}

qgeo_status qgeo_model_set_budget(qgeo_model* m, uint64_t steps) {
  return guarded([&] {
    require(m, "model");
    for (Model& mod : m->models)
      if (mod.presented) mod.presented->pres.set_step_budget(steps);
  });
}

qgeo_status qgeo_normal_form(const qgeo_model* m, const char* expr, char** out) {
  return guarded([&] {
    require(m, "model");
    require(expr, "expr");
    require(out, "out");
    const Presentation& p = sole_presentation(m);
    Element nf = p.normal_form(qgeo::parse_element(p, expr));
    *out = dup_string(p.element_str(nf));
  });
}

qgeo_status qgeo_normal_form_json(const qgeo_model* m, const char* expr,
                                  char** out) {
  return guarded([&] {
    require(m, "model");
    require(expr, "expr");
    require(out, "out");
    const Presentation& p = sole_presentation(m);
    Element nf = p.normal_form(qgeo::parse_element(p, expr));
    *out = dup_string(qgeo::element_json(p, nf).dump(2));
  });
}

qgeo_status qgeo_commutator(const qgeo_model* m, const char* a, const char* b,
                            char** out) {
  return guarded([&] {
    require(m, "model");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const Presentation& p = sole_presentation(m);
    Element c = p.commutator(qgeo::parse_element(p, a), qgeo::parse_element(p, b));
    *out = dup_string(p.element_str(c));
  });
}

qgeo_status qgeo_run_checks(const qgeo_model* m, const char* checks, int degree,
                            const char* format, char** report, int* all_pass) {
  return guarded([&] {
    require(m, "model");
    require(report, "report");
    std::string fmt = format == nullptr ? "json" : format;
    if (fmt != "json" && fmt != "text")
      qgeo::fail(Err::InvalidArgument,
                 "format must be 'json' or 'text', not '" + fmt + "'");

    std::vector<qgeo::CheckDirective> dirs;
    bool run_everything = checks != nullptr && std::string(checks) == "all";
    if (checks != nullptr && !run_everything)
      dirs = split_checks(checks);
    else if (!run_everything && m->doc && !m->doc->checks.empty())
      dirs = m->doc->checks;

    std::vector<qgeo::CheckReport> reports;
    if (dirs.empty()) {
      for (const Model& mod : m->models) {
        std::vector<qgeo::CheckReport> part = qgeo::run_suite(mod, {}, degree);
        reports.insert(reports.end(), part.begin(), part.end());
      }
    } else {
      const std::vector<std::string> known = qgeo::known_checks();
      for (const qgeo::CheckDirective& d : dirs)
        if (std::find(known.begin(), known.end(), d.name) == known.end())
          qgeo::fail(Err::UnknownCheck, "unknown check '" + d.name + "'");
      std::vector<bool> used(dirs.size(), false);
      for (const Model& mod : m->models) {
        std::vector<qgeo::CheckDirective> mine;
        const std::vector<std::string> app = qgeo::applicable_checks(mod);
        for (size_t i = 0; i < dirs.size(); ++i) {
          if (std::find(app.begin(), app.end(), dirs[i].name) == app.end())
            continue;
          mine.push_back(dirs[i]);
          used[i] = true;
        }
        if (mine.empty()) continue;
        std::vector<qgeo::CheckReport> part = qgeo::run_suite(mod, mine, degree);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      for (size_t i = 0; i < dirs.size(); ++i)
        if (!used[i])
          qgeo::fail(Err::InvalidArgument,
                     "check '" + dirs[i].name +
                         "' does not apply to any algebra in this model");
    }

    *report = dup_string(qgeo::export_report(reports, fmt));
    if (all_pass != nullptr) *all_pass = qgeo::all_pass(reports) ? 1 : 0;
  });
}

qgeo_status qgeo_fourier(const char* group, const char* function, char** out) {
  return guarded([&] {
    require(group, "group");
    require(function, "function");
    require(out, "out");
    FinGroup g = qgeo::builtin_group(group);
    // Element labels double as generator names, so the expression parser
    // reads functions on the group directly.
    Presentation p(g.name(), qgeo::make_params({}), g.labels());
    Element f = qgeo::parse_element(p, function);
    qgeo::SparseVec coords;
    for (const auto& [word, coeff] : f.terms()) {
      if (word.size() != 1)
        qgeo::fail(Err::InvalidArgument,
                   "the function must be a linear combination of single "
                   "element labels, got '" + qgeo::word_str(word, g.labels()) +
                       "'");
      qgeo::vec_add(coords, word[0], coeff);
    }
    qgeo::SparseVec image = qgeo::fourier(g, coords);
    Element result;
    for (const auto& [idx, coeff] : image)
      result.add(qgeo::Word{static_cast<qgeo::GenId>(idx)}, coeff);
    *out = dup_string(p.element_str(result));
  });
}

qgeo_status qgeo_factorise(const char* group, char** out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    FinGroup g = qgeo::builtin_group(group);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const qgeo::Factorisation& f : qgeo::find_factorisations(g)) {
      nlohmann::ordered_json left = nlohmann::ordered_json::array();
      nlohmann::ordered_json right = nlohmann::ordered_json::array();
      for (size_t i : f.g) left.push_back(g.label(i));
      for (size_t j : f.m) right.push_back(g.label(j));
      arr.push_back({{"g", left}, {"m", right}});
    }
    *out = dup_string(arr.dump(2));
  });
}

qgeo_status qgeo_regime(const char* m, const char* big_m, const char* hbar,
                        const char* g, char** out) {
  return guarded([&] {
    require(out, "out");
    qgeo::RegimeReport rep = qgeo::regime_report(
        parse_positive_rational(m, "m"), parse_positive_rational(big_m, "M"),
        parse_positive_rational(hbar, "hbar"), parse_positive_rational(g, "G"));
    nlohmann::ordered_json obj = {{"mass_product", rep.mass_product.get_str()},
                                  {"planck_mass_sq", rep.planck_mass_sq.get_str()},
                                  {"regime", rep.regime},
                                  {"note", rep.note}};
    *out = dup_string(obj.dump(2));
  });
}

}  // extern "C"
