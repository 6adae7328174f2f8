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

#include "surfrig/document.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace surfrig {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

Rational exact_number(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
    return Rational(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::trunc(d)) return Rational(d);
    fail(where + ": fractional JSON number in exact mode, use a \"p/q\" string");
  }
  fail(where + ": expected a number or a \"p/q\" string");
}

double float_number(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  fail(where + ": expected a number");
}

template <Scalar T>
T number(const json& v, const std::string& where) {
  if constexpr (kIsExact<T>) {
    return exact_number(v, where);
  } else {
    return float_number(v, where);
  }
}

template <Scalar T>
std::vector<T> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number<T>(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;  // document order
};

std::map<std::string, Vertex> label_index(const json& doc, std::size_t n) {
  std::map<std::string, Vertex> index;
  if (!doc.contains("labels")) return index;
  const json& labels = doc.at("labels");
  if (!labels.is_array() || labels.size() != n) fail("\"labels\" must list one name per vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i].is_string()) fail("\"labels\" entries must be strings");
    if (!index.emplace(labels[i].get<std::string>(), i).second) {
      fail("duplicate label \"" + labels[i].get<std::string>() + "\"");
    }
  }
  return index;
}

Vertex endpoint(const json& v, const std::map<std::string, Vertex>& labels,
                const std::string& where) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    return v.get<std::size_t>();
  }
  if (v.is_string()) {
    const auto it = labels.find(v.get<std::string>());
    if (it == labels.end()) fail(where + ": unknown vertex label \"" + v.get<std::string>() + "\"");
    return it->second;
  }
  fail(where + ": expected a vertex index or label");
}

EdgeList read_edges(const json& doc, std::size_t n) {
  const auto labels = label_index(doc, n);
  const json& edges = require(doc, "edges", "document");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  EdgeList out{n, {}};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 2) fail(where + ": expected [i, j]");
    const Vertex u = endpoint(e[0], labels, where);
    const Vertex v = endpoint(e[1], labels, where);
    if (u >= n || v >= n) fail(where + ": vertex index out of range");
    if (u == v) fail(where + ": self-loop");
    out.edges.emplace_back(u, v);
  }
  return out;
}

template <Scalar T>
FrameworkDocument<T> parse_typed(const json& doc, Tolerance tol) {
  if (!doc.is_object()) fail("framework document must be a JSON object");
  const json& surface = require(doc, "surface", "document");
  const json& kind_name = require(surface, "kind", "surface");
  if (!kind_name.is_string()) fail("surface.kind must be a string");
  const auto kind = parse_surface_kind(kind_name.get<std::string>());
  if (!kind) fail("unknown surface kind \"" + kind_name.get<std::string>() + "\"");
  T alpha(2), beta(3);
  if (surface.contains("alpha")) alpha = number<T>(surface["alpha"], "surface.alpha");
  if (surface.contains("beta")) beta = number<T>(surface["beta"], "surface.beta");

  const json& vertices = require(doc, "vertices", "document");
  if (!vertices.is_array()) fail("\"vertices\" must be an array");
  std::vector<Point3<T>> points;
  points.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!vertices[i].is_array() || vertices[i].size() != 3) fail(where + ": expected [x, y, z]");
    points.push_back({number<T>(vertices[i][0], where), number<T>(vertices[i][1], where),
                      number<T>(vertices[i][2], where)});
  }
  const std::size_t n = points.size();
  EdgeList edges = read_edges(doc, n);
  Graph graph(n, edges.edges);

  const bool induced = !surface.contains("radii") ||
                       (surface["radii"].is_string() && surface["radii"] == "induced");
  std::optional<Framework<T>> fw;
  if (induced) {
    fw.emplace(Framework<T>::induced(graph, std::move(points), *kind, alpha, beta));
  } else {
    std::vector<T> radii = number_array<T>(surface["radii"], "surface.radii");
    if (radii.size() != n) fail("surface.radii must have one entry per vertex");
    fw.emplace(graph, std::move(points), SurfaceFamily<T>::make(*kind, std::move(radii), alpha, beta),
               tol);
  }

  FrameworkDocument<T> out{std::move(*fw), std::nullopt};
  if (doc.contains("stress")) {
    const json& s = doc["stress"];
    std::vector<T> omega = number_array<T>(require(s, "omega", "stress"), "stress.omega");
    std::vector<T> lambda = number_array<T>(require(s, "lambda", "stress"), "stress.lambda");
    if (omega.size() != edges.edges.size()) fail("stress.omega must have one entry per edge");
    if (lambda.size() != n) fail("stress.lambda must have one entry per vertex");
    Stress<T> stress = Stress<T>::zero(graph.m(), n);
    for (std::size_t k = 0; k < omega.size(); ++k) {
      const Edge& e = edges.edges[k];
      stress.omega[*graph.edge_index(e.u, e.v)] = std::move(omega[k]);
    }
    stress.lambda = std::move(lambda);
    out.stress = std::move(stress);
  }
  return out;
}

template <Scalar T>
json numbers_to_json(const std::vector<T>& xs) {
  json out = json::array();
  for (const T& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

template <Scalar T>
json stress_to_json(const Stress<T>& s) {
  return json{{"omega", numbers_to_json(s.omega)}, {"lambda", numbers_to_json(s.lambda)}};
}

json edges_to_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

const char* backend_name(bool exact) { return exact ? "exact" : "float"; }

}  // namespace

template <Scalar T>
json scalar_to_json(const T& x) {
  if constexpr (kIsExact<T>) {
    return format_rational(x);
  } else {
    return x;
  }
}

AnyFrameworkDocument parse_framework_document(const json& doc, Backend backend, Tolerance tol) {
  if (backend == Backend::Exact) return parse_typed<Rational>(doc, tol);
  return parse_typed<double>(doc, tol);
}

template <Scalar T>
json framework_to_json(const Framework<T>& fw, const Stress<T>* stress) {
  json surface{{"kind", to_string(fw.kind())}};
  if (fw.kind() == SurfaceKind::Ellipsoid) {
    surface["alpha"] = scalar_to_json(fw.family().alpha());
    surface["beta"] = scalar_to_json(fw.family().beta());
  }
  surface["radii"] = numbers_to_json(fw.family().radii());
  json vertices = json::array();
  for (const auto& p : fw.points()) {
    vertices.push_back({scalar_to_json(p[0]), scalar_to_json(p[1]), scalar_to_json(p[2])});
  }
  json out{{"schema", kSchemaVersion},
           {"surface", std::move(surface)},
           {"vertices", std::move(vertices)},
           {"edges", edges_to_json(fw.graph())}};
  if (stress != nullptr) out["stress"] = stress_to_json(*stress);
  return out;
}

Graph parse_graph_document(const json& doc) {
  if (!doc.is_object()) fail("graph document must be a JSON object");
  std::size_t n = 0;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) fail("\"vertices\" must be an array");
    n = doc["vertices"].size();
  } else {
    const json& count = require(doc, "n", "graph document");
    if (!count.is_number_integer() || count.get<std::int64_t>() < 0) {
      fail("\"n\" must be a non-negative integer");
    }
    n = count.get<std::size_t>();
  }
  EdgeList edges = read_edges(doc, n);
  return Graph(n, std::move(edges.edges));
}

std::vector<ConstructionStep> parse_construction_steps(const json& doc) {
  const json& list = doc.is_object() ? require(doc, "steps", "steps document") : doc;
  if (!list.is_array()) fail("construction steps must be an array");
  std::vector<ConstructionStep> steps;
  const std::map<std::string, Vertex> no_labels;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "steps[" + std::to_string(k) + "]";
    const json& s = list[k];
    const json& op = require(s, "op", where);
    const json& edge = require(s, "edge", where);
    if (!edge.is_array() || edge.size() != 2) fail(where + ".edge: expected [u, v]");
    const Vertex u = endpoint(edge[0], no_labels, where);
    const Vertex v = endpoint(edge[1], no_labels, where);
    if (u == v) fail(where + ".edge: self-loop");
    if (op == "one_extension") {
      steps.push_back(
          ConstructionStep::one_extension(Edge(u, v), endpoint(require(s, "v3", where), no_labels, where)));
    } else if (op == "edge_addition" || op == "add_edge") {
      steps.push_back(ConstructionStep::edge_addition(u, v));
    } else {
      fail(where + ".op: expected \"one_extension\" or \"edge_addition\"");
    }
  }
  return steps;
}

template <Scalar T>
json analyze_report(const Framework<T>& fw, const std::optional<Stress<T>>& stress, Tolerance tol) {
  const std::size_t n = fw.n();
  const auto R = surface_rigidity_matrix(fw);
  const std::size_t rank_r = rank(R, tol);
  const auto basis = equilibrium_stress_basis(fw, tol);
  const std::size_t rank_c = rank(configuration_matrix(fw), tol);

  json report{{"schema", kSchemaVersion},
              {"command", "analyze"},
              {"backend", backend_name(kIsExact<T>)},
              {"kind", to_string(fw.kind())},
              {"n", n},
              {"m", fw.m()},
              {"ell", fw.family().ell()},
              {"mu", fw.family().mu()},
              {"rigidity_rank", rank_r},
              {"rigidity_target", 3 * n - std::min(3 * n, fw.family().ell())},
              {"infinitesimally_rigid", rank_r + fw.family().ell() == 3 * n},
              {"stress_dimension", basis.size()},
              {"configuration_rank", rank_c},
              {"fully_realised", rank_c == fw.family().mu()},
              {"omega_rank_bound", 3 * n - rank_c}};
  if constexpr (!kIsExact<T>) report["tolerance"] = tol.eps;
  json ranks = json::array();
  for (const auto& s : basis) ranks.push_back(rank(stress_matrix(fw, s), tol));
  report["omega_ranks"] = std::move(ranks);
  if (stress) {
    const bool eq = verify_equilibrium(fw, *stress, tol);
    const auto omega = stress_matrix(fw, *stress);
    report["stress"] = json{{"equilibrium", eq},
                            {"omega_rank", rank(omega, tol)},
                            {"psd", is_psd(omega, tol)}};
  }
  return report;
}

template <Scalar T>
json certificate_report(const Certificate<T>& c) {
  json report{{"schema", kSchemaVersion},
              {"command", "certify"},
              {"backend", backend_name(kIsExact<T>)},
              {"kind", to_string(c.kind)},
              {"n", c.n},
              {"m", c.m},
              {"certified", c.certified()},
              {"route", to_string(c.route)},
              {"genericity", to_string(c.genericity)},
              {"seed", c.seed},
              {"rigidity_rank", c.rigidity_rank},
              {"infinitesimally_rigid", c.infinitesimally_rigid},
              {"configuration_rank", c.configuration_rank},
              {"fully_realised", c.fully_realised},
              {"stress_dimension", c.stress_dimension},
              {"omega_rank", c.omega_rank},
              {"target_omega_rank", c.target_rank},
              {"max_rank_found", c.max_rank_found},
              {"psd", c.psd},
              {"witness", stress_to_json(c.witness)},
              {"notes", c.notes}};
  return report;
}

json pipeline_report(const PipelineCertificate& c) {
  json steps = json::array();
  for (const StepRecord& r : c.steps) {
    json s{{"index", r.index},
           {"operation", r.operation},
           {"n", r.n},
           {"m", r.m},
           {"seed", r.seed},
           {"backend", backend_name(r.exact)},
           {"rigidity_rank", r.rigidity_rank},
           {"target_rigidity_rank", r.target_rigidity_rank},
           {"omega_rank", r.omega_rank},
           {"target_omega_rank", r.target_omega_rank},
           {"passed", r.passed}};
    if (r.step) {
      s["edge"] = {r.step->edge.u, r.step->edge.v};
      if (r.step->kind == ConstructionStep::Kind::OneExtension) s["v3"] = r.step->v3;
    }
    if (r.extension_rigidity_before) {
      s["extension"] = json{{"rigidity_rank_before", *r.extension_rigidity_before},
                            {"rigidity_rank_after", *r.extension_rigidity_after},
                            {"omega_rank_before", *r.extension_omega_before},
                            {"omega_rank_after", *r.extension_omega_after},
                            {"generic_retry", r.generic_retry}};
    }
    if (!r.message.empty()) s["message"] = r.message;
    steps.push_back(std::move(s));
  }
  json report{{"schema", kSchemaVersion},
              {"command", "certify_construction"},
              {"base", to_string(c.base)},
              {"kind", to_string(c.kind)},
              {"seed", c.seed},
              {"certified", c.passed},
              {"claim", c.passed ? "globally rigid on a generic induced family (high confidence)"
                                 : "not certified"},
              {"steps", std::move(steps)}};
  report["failed_step"] = c.failed_step ? json(*c.failed_step) : json(nullptr);
  return report;
}

json sparsity_report(const Graph& g, int k) {
  const bool sparse = is_k_sparse(g, k);
  const bool tight = sparse && is_k_tight(g, k);
  return json{{"schema", kSchemaVersion},
              {"command", "sparsity"},
              {"n", g.n()},
              {"m", g.m()},
              {"k", k},
              {"sparse", sparse},
              {"tight", tight}};
}

json hendrickson_report(const Graph& g, SurfaceKind kind, std::uint64_t seed,
                        const SamplingOptions& opts) {
  const int k = kind == SurfaceKind::Ellipsoid ? 1 : 2;
  const std::size_t connectivity = vertex_connectivity(g);
  Rng rng(seed);
  const bool redundant = is_redundantly_rigid(g, kind, rng, opts);
  const bool connected = connectivity >= static_cast<std::size_t>(k);
  return json{{"schema", kSchemaVersion},
              {"command", "hendrickson"},
              {"kind", to_string(kind)},
              {"seed", seed},
              {"n", g.n()},
              {"m", g.m()},
              {"required_connectivity", k},
              {"vertex_connectivity", connectivity},
              {"connected", connected},
              {"redundantly_rigid", redundant},
              {"passed", connected && redundant}};
}

template json scalar_to_json(const Rational&);
template json scalar_to_json(const double&);
template json framework_to_json(const Framework<Rational>&, const Stress<Rational>*);
template json framework_to_json(const Framework<double>&, const Stress<double>*);
template json analyze_report(const Framework<Rational>&, const std::optional<Stress<Rational>>&,
                             Tolerance);
template json analyze_report(const Framework<double>&, const std::optional<Stress<double>>&,
                             Tolerance);
template json certificate_report(const Certificate<Rational>&);
template json certificate_report(const Certificate<double>&);

}  // namespace surfrig
