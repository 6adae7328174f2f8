// Copyright 2026 The surfrig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the surfrig C interface.
//
// Exit codes: 0 certified / true, 1 not certified / false, 2 input error,
// 3 numeric degeneracy (degenerate points, exhausted sampling budget),
// 4 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "surfrig/surfrig.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInternal = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(surfrig_status status) {
  switch (status) {
    case SURFRIG_OK: return kExitTrue;
    case SURFRIG_INVALID_ARGUMENT:
    case SURFRIG_PARSE_ERROR:
    case SURFRIG_UNSUPPORTED: return kExitInput;
    case SURFRIG_DEGENERATE:
    case SURFRIG_BUDGET_EXHAUSTED: return kExitDegenerate;
    case SURFRIG_INTERNAL_ERROR: break;
  }
  return kExitInternal;
}

int report_error(surfrig_status status) {
  std::cerr << "error: " << surfrig_status_string(status) << ": " << surfrig_last_error() << "\n";
  return exit_code(status);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { surfrig_string_free(p_); }
  char** out() { return &p_; }
  const char* get() const { return p_ != nullptr ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { surfrig_framework_free(p_); }
  surfrig_framework** out() { return &p_; }
  const surfrig_framework* get() const { return p_; }

 private:
  surfrig_framework* p_ = nullptr;
};

struct Common {
  bool exact = false;
  bool floating = false;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  unsigned attempts = 20;
  unsigned budget = 8;
  bool assume_generic = false;
  std::string route = "auto";
  std::string surface = "cylinder";
  std::string file;
  std::string base;
  std::string steps;
  int k = 2;
  std::string emit;
};

surfrig_surface parse_surface(const std::string& name) {
  if (name == "cylinder" || name == "Y") return SURFRIG_CYLINDER;
  if (name == "cone" || name == "C") return SURFRIG_CONE;
  if (name == "ellipsoid" || name == "E") return SURFRIG_ELLIPSOID;
  throw InputError("unknown surface \"" + name + "\"");
}

surfrig_route parse_route(const std::string& name) {
  if (name == "auto") return SURFRIG_ROUTE_AUTO;
  if (name == "max-rank") return SURFRIG_ROUTE_MAX_RANK;
  if (name == "psd") return SURFRIG_ROUTE_PSD;
  throw InputError("unknown route \"" + name + "\"");
}

surfrig_options options(const Common& c, bool randomized) {
  surfrig_options o;
  surfrig_options_init(&o);
  o.tol = c.tol;
  o.attempts = c.attempts;
  o.budget = c.budget;
  o.assume_generic = c.assume_generic ? 1 : 0;
  o.route = parse_route(c.route);
  o.surface = parse_surface(c.surface);
  if (c.seed) {
    o.seed = *c.seed;
  } else if (randomized) {
    o.seed = std::random_device{}();
    std::cerr << "seed: " << o.seed << "\n";
  }
  return o;
}

surfrig_backend backend(const Common& c) { return c.floating ? SURFRIG_FLOAT : SURFRIG_EXACT; }

surfrig_status load(const Common& c, Handle& h) {
  const std::string text = read_file(c.file);
  return surfrig_framework_parse(text.c_str(), backend(c), c.tol, h.out());
}

int run_analyze(const Common& c) {
  Handle h;
  if (auto s = load(c, h); s != SURFRIG_OK) return report_error(s);
  const surfrig_options o = options(c, false);
  Text report;
  if (auto s = surfrig_analyze(h.get(), &o, report.out()); s != SURFRIG_OK) return report_error(s);
  std::cout << report.get();
  return kExitTrue;
}

int run_certify(const Common& c) {
  const surfrig_options o = options(c, true);
  Text report;
  int certified = 0;
  surfrig_status s;
  if (!c.base.empty()) {
    if (!c.file.empty()) throw InputError("give either a framework file or --base, not both");
    std::string steps;
    if (!c.steps.empty()) steps = read_file(c.steps);
    s = surfrig_certify_construction(c.base.c_str(), c.steps.empty() ? nullptr : steps.c_str(), &o,
                                     report.out(), &certified);
  } else {
    if (c.file.empty()) throw InputError("certify needs a framework file or --base");
    if (!c.steps.empty()) throw InputError("--steps requires --base");
    Handle h;
    if (auto ls = load(c, h); ls != SURFRIG_OK) return report_error(ls);
    s = surfrig_certify(h.get(), &o, report.out(), &certified);
  }
  if (s != SURFRIG_OK) return report_error(s);
  std::cout << report.get();
  return certified ? kExitTrue : kExitFalse;
}

int run_sparsity(const Common& c) {
  const std::string text = read_file(c.file);
  Text report;
  int sparse = 0;
  if (auto s = surfrig_sparsity(text.c_str(), c.k, report.out(), &sparse); s != SURFRIG_OK) {
    return report_error(s);
  }
  std::cout << report.get();
  return sparse ? kExitTrue : kExitFalse;
}

int run_hendrickson(const Common& c) {
  const std::string text = read_file(c.file);
  const surfrig_options o = options(c, true);
  Text report;
  int passed = 0;
  if (auto s = surfrig_hendrickson(text.c_str(), &o, report.out(), &passed); s != SURFRIG_OK) {
    return report_error(s);
  }
  std::cout << report.get();
  return passed ? kExitTrue : kExitFalse;
}

int run_fixture(const Common& c) {
  Handle h;
  if (auto s = surfrig_framework_fixture(c.base.c_str(), h.out()); s != SURFRIG_OK) {
    return report_error(s);
  }
  Text doc;
  if (auto s = surfrig_framework_to_json(h.get(), doc.out()); s != SURFRIG_OK) return report_error(s);
  if (c.emit.empty() || c.emit == "-") {
    std::cout << doc.get();
  } else {
    std::ofstream out(c.emit, std::ios::binary);
    if (!out) throw InputError("cannot write " + c.emit);
    out << doc.get();
  }
  return kExitTrue;
}

void add_backend(CLI::App* cmd, Common& c) {
  auto* exact = cmd->add_flag("--exact", c.exact, "Rational arithmetic (default)");
  auto* fl = cmd->add_flag("--float", c.floating, "Double precision with tolerance --tol");
  exact->excludes(fl);
  cmd->add_option("--tol", c.tol, "Relative tolerance for the float backend")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity and global rigidity of frameworks on concentric surfaces"};
  app.require_subcommand(1);
  Common c;

  auto* analyze = app.add_subcommand("analyze", "Rank and stress report for a framework");
  analyze->add_option("file", c.file, "Framework JSON ('-' for stdin)")->required();
  add_backend(analyze, c);

  auto* certify = app.add_subcommand("certify", "Global rigidity certificate");
  certify->add_option("file", c.file, "Framework JSON ('-' for stdin)");
  certify->add_option("--base", c.base, "Base graph K5_E, H1 or H2 for a construction run");
  certify->add_option("--steps", c.steps, "Construction steps JSON (with --base)");
  certify->add_option("--surface", c.surface, "Family for a construction run")
      ->capture_default_str();
  add_backend(certify, c);
  certify->add_option("--seed", c.seed, "Random seed (generated and printed when absent)");
  certify->add_option("--attempts", c.attempts, "Random stress combinations")->capture_default_str();
  certify->add_option("--budget", c.budget, "Resampling budget for generic realizations")
      ->capture_default_str();
  certify->add_flag("--assume-generic", c.assume_generic, "Assert the placement is generic");
  certify->add_option("--route", c.route, "auto, max-rank or psd")->capture_default_str();

  auto* sparsity = app.add_subcommand("sparsity", "(2,k)-sparsity by the pebble game");
  sparsity->add_option("file", c.file, "Graph or framework JSON ('-' for stdin)")->required();
  sparsity->add_option("--k", c.k, "k in 1..3")->capture_default_str()->check(CLI::Range(1, 3));

  auto* hendrickson = app.add_subcommand("hendrickson", "Connectivity and redundant rigidity screen");
  hendrickson->add_option("file", c.file, "Graph or framework JSON ('-' for stdin)")->required();
  hendrickson->add_option("--surface", c.surface, "cylinder, cone or ellipsoid")
      ->capture_default_str();
  hendrickson->add_option("--seed", c.seed, "Random seed (generated and printed when absent)");
  hendrickson->add_option("--budget", c.budget, "Resampling budget per rigidity test")
      ->capture_default_str();

  auto* fixture = app.add_subcommand("fixture", "Export a base framework with its stress");
  fixture->add_option("name", c.base, "K5_E, H1 or H2")->required();
  fixture->add_option("--emit", c.emit, "Output path ('-' or absent for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(c);
    if (*certify) return run_certify(c);
    if (*sparsity) return run_sparsity(c);
    if (*hendrickson) return run_hendrickson(c);
    if (*fixture) return run_fixture(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
