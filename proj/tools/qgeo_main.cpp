// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
//
// Command-line front end.  Talks to the engine exclusively through the
// public C API; exit codes are 0 (all checks pass / command succeeded),
// 1 (some check failed), 2 (parse or usage error).

#include <qgeo/qgeo.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace {

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { qgeo_string_free(p); }
};

struct OwnedModel {
  qgeo_model* m = nullptr;
  ~OwnedModel() { qgeo_model_close(m); }
};

int fail_with_last_error() {
  std::cerr << "qgeo: error: " << qgeo_last_error() << "\n";
  return 2;
}

// A target naming a path (contains '/' or ends in ".dsl") is read as a
// document; anything else is a built-in model name.
bool looks_like_file(const std::string& target) {
  if (target.find('/') != std::string::npos) return true;
  return target.size() >= 4 && target.compare(target.size() - 4, 4, ".dsl") == 0;
}

int apply_step_budget(qgeo_model* m) {
  const char* env = std::getenv("QGEO_STEP_BUDGET");
  if (env == nullptr || *env == '\0') return 0;
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    std::cerr << "qgeo: error: QGEO_STEP_BUDGET must be a nonnegative "
                 "integer, got '"
              << env << "'\n";
    return 2;
  }
  if (qgeo_model_set_budget(m, v) != QGEO_OK) return fail_with_last_error();
  return 0;
}

// Opens `target` into `om` and applies the environment step budget.
// Returns 0 on success, the process exit code otherwise.
int open_target(const std::string& target, OwnedModel& om) {
  qgeo_status st;
  if (looks_like_file(target)) {
    std::ifstream in(target, std::ios::binary);
    if (!in) {
      std::cerr << "qgeo: error: cannot read '" << target << "'\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    st = qgeo_model_from_text(text.str().c_str(), &om.m);
  } else {
    st = qgeo_model_open(target.c_str(), &om.m);
  }
  if (st != QGEO_OK) return fail_with_last_error();
  return apply_step_budget(om.m);
}

int cmd_check(const std::string& target, const std::string& suite, int degree,
              const std::string& format) {
  OwnedModel om;
  if (int rc = open_target(target, om); rc != 0) return rc;
  OwnedString report;
  int all_pass = 0;
  const char* checks = suite.empty() ? nullptr : suite.c_str();
  if (qgeo_run_checks(om.m, checks, degree, format.c_str(), &report.p,
                      &all_pass) != QGEO_OK)
    return fail_with_last_error();
  std::fputs(report.p, stdout);
  if (format == "json") std::fputc('\n', stdout);
  return all_pass != 0 ? 0 : 1;
}

int cmd_nf(const std::string& target, const std::string& expr,
           const std::string& format) {
  OwnedModel om;
  if (int rc = open_target(target, om); rc != 0) return rc;
  OwnedString s;
  qgeo_status st = format == "json"
                       ? qgeo_normal_form_json(om.m, expr.c_str(), &s.p)
                       : qgeo_normal_form(om.m, expr.c_str(), &s.p);
  if (st != QGEO_OK) return fail_with_last_error();
  std::puts(s.p);
  return 0;
}

int cmd_commutator(const std::string& target, const std::string& a,
                   const std::string& b) {
  OwnedModel om;
  if (int rc = open_target(target, om); rc != 0) return rc;
  OwnedString s;
  if (qgeo_commutator(om.m, a.c_str(), b.c_str(), &s.p) != QGEO_OK)
    return fail_with_last_error();
  std::puts(s.p);
  return 0;
}

int cmd_print(const std::string& target) {
  OwnedModel om;
  if (int rc = open_target(target, om); rc != 0) return rc;
  OwnedString s;
  if (qgeo_model_print(om.m, &s.p) != QGEO_OK) return fail_with_last_error();
  std::fputs(s.p, stdout);
  return 0;
}

int cmd_fourier(const std::string& group, const std::string& function) {
  OwnedString s;
  if (qgeo_fourier(group.c_str(), function.c_str(), &s.p) != QGEO_OK)
    return fail_with_last_error();
  std::puts(s.p);
  return 0;
}

int cmd_factorise(const std::string& group) {
  OwnedString s;
  if (qgeo_factorise(group.c_str(), &s.p) != QGEO_OK)
    return fail_with_last_error();
  std::puts(s.p);
  return 0;
}

int cmd_regime(const std::string& m, const std::string& big_m,
               const std::string& hbar, const std::string& g) {
  OwnedString s;
  if (qgeo_regime(m.c_str(), big_m.c_str(), hbar.c_str(), g.c_str(), &s.p) !=
      QGEO_OK)
    return fail_with_last_error();
  std::puts(s.p);
  return 0;
}

int cmd_models() {
  OwnedString s;
  if (qgeo_model_list(&s.p) != QGEO_OK) return fail_with_last_error();
  std::fputs(s.p, stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of quantum-group and "
               "braided-geometry models"};
  app.set_version_flag("--version", qgeo_version());
  app.require_subcommand(1);
  int rc = 0;

  auto* check = app.add_subcommand(
      "check", "Run verification checks and print a report");
  std::string check_target, suite, check_format = "json";
  int degree = -1;
  check->add_option("target", check_target,
                    "Built-in model name or path to a document")
      ->required();
  check->add_option("--suite", suite,
                    "Comma-separated check names, or 'all' (default: the "
                    "document's own directives, else every supported check)");
  check->add_option("--degree", degree, "Degree bound override");
  check->add_option("--format", check_format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  check->callback(
      [&] { rc = cmd_check(check_target, suite, degree, check_format); });

  auto* nf = app.add_subcommand("nf", "Normal form of an element expression");
  std::string nf_target, nf_expr, nf_format = "text";
  nf->add_option("model", nf_target, "Built-in model name or document path")
      ->required();
  nf->add_option("expr", nf_expr, "Element expression")->required();
  nf->add_option("--format", nf_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  nf->callback([&] { rc = cmd_nf(nf_target, nf_expr, nf_format); });

  auto* comm = app.add_subcommand(
      "commutator", "Normal form of a*b - b*a");
  std::string comm_target, comm_a, comm_b;
  comm->add_option("model", comm_target, "Built-in model name or document path")
      ->required();
  comm->add_option("a", comm_a, "Left element")->required();
  comm->add_option("b", comm_b, "Right element")->required();
  comm->callback([&] { rc = cmd_commutator(comm_target, comm_a, comm_b); });

  auto* print = app.add_subcommand(
      "print", "Canonical text form of a model or document");
  std::string print_target;
  print->add_option("target", print_target,
                    "Built-in model name or document path")
      ->required();
  print->callback([&] { rc = cmd_print(print_target); });

  auto* four = app.add_subcommand(
      "fourier", "Fourier transform of a function on a built-in group");
  std::string four_group, four_function;
  four->add_option("group", four_group, "Built-in group name")->required();
  four->add_option("function", four_function,
                   "Linear combination of element labels")
      ->required();
  four->callback([&] { rc = cmd_fourier(four_group, four_function); });

  auto* fact = app.add_subcommand(
      "factorise", "Exact factorisations X = G.M of a built-in group");
  std::string fact_group;
  fact->add_option("group", fact_group, "Built-in group name")->required();
  fact->callback([&] { rc = cmd_factorise(fact_group); });

  auto* regime = app.add_subcommand(
      "regime", "Compare a mass product against the squared Planck mass");
  std::string reg_m, reg_big_m, reg_hbar, reg_g;
  regime->add_option("--m", reg_m, "First mass (rational)")->required();
  regime->add_option("--M", reg_big_m, "Second mass (rational)")->required();
  regime->add_option("--hbar", reg_hbar, "Planck's constant (rational)")
      ->required();
  regime->add_option("--G", reg_g, "Newton's coupling (rational)")->required();
  regime->callback([&] { rc = cmd_regime(reg_m, reg_big_m, reg_hbar, reg_g); });

  auto* models = app.add_subcommand("models", "List built-in models");
  models->callback([&] { rc = cmd_models(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
