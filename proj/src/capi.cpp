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

#define SURFRIG_BUILDING 1
#include "surfrig/surfrig.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "surfrig/document.hpp"
#include "surfrig/error.hpp"
#include "surfrig/extension.hpp"
#include "surfrig/fixtures.hpp"

struct surfrig_framework {
  surfrig::AnyFrameworkDocument doc;
  surfrig::Tolerance tol;
  bool fixture = false;  // exact fixture placements are asserted generic
};

namespace {

using surfrig::Rational;
using nlohmann::json;

thread_local std::string g_last_error;

surfrig_status set_error(surfrig_status status, std::string what) {
  g_last_error = std::move(what);
  return status;
}

template <class F>
surfrig_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const surfrig::ParseError& e) {
    return set_error(SURFRIG_PARSE_ERROR, e.what());
  } catch (const json::exception& e) {
    return set_error(SURFRIG_PARSE_ERROR, e.what());
  } catch (const surfrig::DegenerateConfiguration& e) {
    return set_error(SURFRIG_DEGENERATE, e.what());
  } catch (const surfrig::Unsupported& e) {
    return set_error(SURFRIG_UNSUPPORTED, e.what());
  } catch (const surfrig::BudgetExhausted& e) {
    return set_error(SURFRIG_BUDGET_EXHAUSTED, e.what());
  } catch (const surfrig::InvalidArgument& e) {
    return set_error(SURFRIG_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(SURFRIG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return set_error(SURFRIG_INTERNAL_ERROR, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const json& j) { return copy_string(j.dump(2) + "\n"); }

surfrig::Tolerance tolerance(double tol) {
  surfrig::Tolerance t;
  if (tol > 0) t.eps = tol;
  return t;
}

surfrig_options resolve(const surfrig_options* opts) {
  surfrig_options o;
  surfrig_options_init(&o);
  if (opts != nullptr) o = *opts;
  return o;
}

surfrig::SurfaceKind surface_kind(surfrig_surface s) {
  switch (s) {
    case SURFRIG_CYLINDER: return surfrig::SurfaceKind::Cylinder;
    case SURFRIG_CONE: return surfrig::SurfaceKind::Cone;
    case SURFRIG_ELLIPSOID: return surfrig::SurfaceKind::Ellipsoid;
  }
  throw surfrig::InvalidArgument("unknown surface kind");
}

surfrig::RouteRequest route(surfrig_route r) {
  switch (r) {
    case SURFRIG_ROUTE_AUTO: return surfrig::RouteRequest::Auto;
    case SURFRIG_ROUTE_MAX_RANK: return surfrig::RouteRequest::MaxRankGeneric;
    case SURFRIG_ROUTE_PSD: return surfrig::RouteRequest::PsdMaxRank;
  }
  throw surfrig::InvalidArgument("unknown certificate route");
}

surfrig::SamplingOptions sampling(const surfrig_options& o) {
  surfrig::SamplingOptions s;
  if (o.budget > 0) s.budget = o.budget;
  s.tol = tolerance(o.tol);
  return s;
}

json parse_json(const char* text) {
  if (text == nullptr) throw surfrig::InvalidArgument("null JSON text");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw surfrig::ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class Out>
void require_out(Out* p, const char* name) {
  if (p == nullptr) throw surfrig::InvalidArgument(std::string("null output pointer ") + name);
}

}  // namespace

extern "C" {

void surfrig_options_init(surfrig_options* opts) {
  if (opts == nullptr) return;
  opts->tol = 1e-9;
  opts->seed = 0;
  opts->attempts = 20;
  opts->budget = 8;
  opts->assume_generic = 0;
  opts->route = SURFRIG_ROUTE_AUTO;
  opts->surface = SURFRIG_CYLINDER;
}

const char* surfrig_last_error(void) { return g_last_error.c_str(); }

const char* surfrig_status_string(surfrig_status status) {
  switch (status) {
    case SURFRIG_OK: return "ok";
    case SURFRIG_INVALID_ARGUMENT: return "invalid argument";
    case SURFRIG_PARSE_ERROR: return "parse error";
    case SURFRIG_DEGENERATE: return "degenerate configuration";
    case SURFRIG_UNSUPPORTED: return "unsupported";
    case SURFRIG_BUDGET_EXHAUSTED: return "budget exhausted";
    case SURFRIG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* surfrig_version(void) { return "0.1.0"; }

void surfrig_string_free(char* s) { std::free(s); }

surfrig_status surfrig_framework_parse(const char* text, surfrig_backend backend, double tol,
                                       surfrig_framework** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = nullptr;
    const json doc = parse_json(text);
    const auto t = tolerance(tol);
    auto parsed = surfrig::parse_framework_document(
        doc, backend == SURFRIG_EXACT ? surfrig::Backend::Exact : surfrig::Backend::Float, t);
    *out = new surfrig_framework{std::move(parsed), t, false};
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_framework_fixture(const char* name, surfrig_framework** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = nullptr;
    if (name == nullptr) throw surfrig::InvalidArgument("null fixture name");
    const auto fx = surfrig::fixture(std::string_view(name));
    surfrig::FrameworkDocument<Rational> doc{fx.framework(), fx.stress};
    *out = new surfrig_framework{std::move(doc), surfrig::Tolerance{}, true};
    return SURFRIG_OK;
  });
}

void surfrig_framework_free(surfrig_framework* fw) { delete fw; }

surfrig_status surfrig_framework_to_json(const surfrig_framework* fw, char** out) {
  return guarded([&] {
    require_out(fw, "framework");
    require_out(out, "out");
    *out = nullptr;
    const json j = std::visit(
        [](const auto& d) {
          return surfrig::framework_to_json(d.framework, d.stress ? &*d.stress : nullptr);
        },
        fw->doc);
    *out = dump(j);
    return SURFRIG_OK;
  });
}

size_t surfrig_framework_vertex_count(const surfrig_framework* fw) {
  if (fw == nullptr) return 0;
  return std::visit([](const auto& d) { return d.framework.n(); }, fw->doc);
}

size_t surfrig_framework_edge_count(const surfrig_framework* fw) {
  if (fw == nullptr) return 0;
  return std::visit([](const auto& d) { return d.framework.m(); }, fw->doc);
}

surfrig_backend surfrig_framework_backend(const surfrig_framework* fw) {
  if (fw != nullptr && std::holds_alternative<surfrig::FrameworkDocument<double>>(fw->doc)) {
    return SURFRIG_FLOAT;
  }
  return SURFRIG_EXACT;
}

surfrig_status surfrig_framework_rigidity_rank(const surfrig_framework* fw, double tol,
                                               size_t* out) {
  return guarded([&] {
    require_out(fw, "framework");
    require_out(out, "out");
    *out = std::visit(
        [&](const auto& d) {
          return surfrig::rank(surfrig::surface_rigidity_matrix(d.framework), tolerance(tol));
        },
        fw->doc);
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_analyze(const surfrig_framework* fw, const surfrig_options* opts,
                               char** report) {
  return guarded([&] {
    require_out(fw, "framework");
    require_out(report, "report");
    *report = nullptr;
    const auto o = resolve(opts);
    const json j = std::visit(
        [&](const auto& d) { return surfrig::analyze_report(d.framework, d.stress, tolerance(o.tol)); },
        fw->doc);
    *report = dump(j);
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_certify(const surfrig_framework* fw, const surfrig_options* opts,
                               char** report, int* certified) {
  return guarded([&] {
    require_out(fw, "framework");
    require_out(report, "report");
    *report = nullptr;
    const auto o = resolve(opts);
    surfrig::CertifyOptions c;
    c.route = route(o.route);
    c.genericity = (o.assume_generic != 0 || fw->fixture) ? surfrig::Genericity::CallerAsserted
                                                          : surfrig::Genericity::Unverified;
    c.seed = o.seed;
    if (o.attempts > 0) c.attempts = o.attempts;
    c.tol = tolerance(o.tol);
    bool ok = false;
    const json j = std::visit(
        [&](const auto& d) {
          const auto cert = surfrig::certify_global_rigidity(d.framework, c);
          ok = cert.certified();
          return surfrig::certificate_report(cert);
        },
        fw->doc);
    if (certified != nullptr) *certified = ok ? 1 : 0;
    *report = dump(j);
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_certify_construction(const char* base, const char* steps_json,
                                            const surfrig_options* opts, char** report,
                                            int* certified) {
  return guarded([&] {
    require_out(report, "report");
    *report = nullptr;
    if (base == nullptr) throw surfrig::InvalidArgument("null base graph name");
    const auto b = surfrig::parse_base_graph(base);
    if (!b) throw surfrig::InvalidArgument(std::string("unknown base graph \"") + base + "\"");
    std::vector<surfrig::ConstructionStep> steps;
    if (steps_json != nullptr) steps = surfrig::parse_construction_steps(parse_json(steps_json));
    const auto o = resolve(opts);
    surfrig::PipelineOptions p;
    p.kind = surface_kind(o.surface);
    p.seed = o.seed;
    if (o.attempts > 0) p.attempts = o.attempts;
    p.sampling = sampling(o);
    const auto cert = surfrig::certify_construction(*b, steps, p);
    if (certified != nullptr) *certified = cert.passed ? 1 : 0;
    *report = dump(surfrig::pipeline_report(cert));
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_sparsity(const char* graph_json, int k, char** report, int* sparse) {
  return guarded([&] {
    require_out(report, "report");
    *report = nullptr;
    const surfrig::Graph g = surfrig::parse_graph_document(parse_json(graph_json));
    const json j = surfrig::sparsity_report(g, k);
    if (sparse != nullptr) *sparse = j["sparse"].get<bool>() ? 1 : 0;
    *report = dump(j);
    return SURFRIG_OK;
  });
}

surfrig_status surfrig_hendrickson(const char* graph_json, const surfrig_options* opts,
                                   char** report, int* passed) {
  return guarded([&] {
    require_out(report, "report");
    *report = nullptr;
    const auto o = resolve(opts);
    const surfrig::Graph g = surfrig::parse_graph_document(parse_json(graph_json));
    const json j = surfrig::hendrickson_report(g, surface_kind(o.surface), o.seed, sampling(o));
    if (passed != nullptr) *passed = j["passed"].get<bool>() ? 1 : 0;
    *report = dump(j);
    return SURFRIG_OK;
  });
}

}  // extern "C"
