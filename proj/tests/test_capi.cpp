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

#include <doctest.h>

#include <string>

#include "surfrig/surfrig.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { surfrig_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Framework {
  surfrig_framework* p = nullptr;
  ~Framework() { surfrig_framework_free(p); }
};

extern "C" int surfrig_c_smoke(void);

}  // namespace

TEST_CASE("header compiles as C") { CHECK(surfrig_c_smoke() == 0); }

TEST_CASE("options defaults") {
  surfrig_options o;
  surfrig_options_init(&o);
  CHECK(o.tol == 1e-9);
  CHECK(o.attempts == 20);
  CHECK(o.route == SURFRIG_ROUTE_AUTO);
  CHECK(o.surface == SURFRIG_CYLINDER);
  surfrig_options_init(nullptr);
}

TEST_CASE("fixture round trip through JSON") {
  Framework fx;
  REQUIRE(surfrig_framework_fixture("H1", &fx.p) == SURFRIG_OK);
  CHECK(surfrig_framework_vertex_count(fx.p) == 6);
  CHECK(surfrig_framework_edge_count(fx.p) == 11);
  CHECK(surfrig_framework_backend(fx.p) == SURFRIG_EXACT);
  Owned doc;
  REQUIRE(surfrig_framework_to_json(fx.p, &doc.p) == SURFRIG_OK);
  Framework back;
  REQUIRE(surfrig_framework_parse(doc.p, SURFRIG_EXACT, 0, &back.p) == SURFRIG_OK);
  size_t r1 = 0, r2 = 0;
  REQUIRE(surfrig_framework_rigidity_rank(fx.p, 0, &r1) == SURFRIG_OK);
  REQUIRE(surfrig_framework_rigidity_rank(back.p, 0, &r2) == SURFRIG_OK);
  CHECK(r1 == 16);
  CHECK(r2 == 16);
  Owned a, b;
  REQUIRE(surfrig_analyze(fx.p, nullptr, &a.p) == SURFRIG_OK);
  REQUIRE(surfrig_analyze(back.p, nullptr, &b.p) == SURFRIG_OK);
  CHECK(a.str() == b.str());
  Owned again;
  REQUIRE(surfrig_framework_to_json(back.p, &again.p) == SURFRIG_OK);
  CHECK(again.str() == doc.str());
}

TEST_CASE("status codes and last error") {
  Framework fw;
  CHECK(surfrig_framework_parse("{", SURFRIG_EXACT, 0, &fw.p) == SURFRIG_PARSE_ERROR);
  CHECK(fw.p == nullptr);
  CHECK(std::string(surfrig_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(surfrig_framework_fixture("K7", &fw.p) == SURFRIG_INVALID_ARGUMENT);
  const char* axis = R"({"surface": {"kind": "cylinder"},
                         "vertices": [[1, 0, 0], [0, 0, 2]], "edges": [[0, 1]]})";
  CHECK(surfrig_framework_parse(axis, SURFRIG_EXACT, 0, &fw.p) == SURFRIG_DEGENERATE);
  CHECK(std::string(surfrig_last_error()).find("vertex 1") != std::string::npos);
  CHECK(surfrig_framework_parse(nullptr, SURFRIG_EXACT, 0, &fw.p) == SURFRIG_INVALID_ARGUMENT);
  CHECK(surfrig_framework_fixture("H2", nullptr) == SURFRIG_INVALID_ARGUMENT);
  REQUIRE(surfrig_framework_fixture("H2", &fw.p) == SURFRIG_OK);
  CHECK(std::string(surfrig_last_error()).empty());
  CHECK(std::string(surfrig_status_string(SURFRIG_UNSUPPORTED)) == "unsupported");
}

TEST_CASE("certify through the C interface") {
  Framework fx;
  REQUIRE(surfrig_framework_fixture("K5_E", &fx.p) == SURFRIG_OK);
  surfrig_options o;
  surfrig_options_init(&o);
  o.seed = 9;
  Owned report;
  int certified = -1;
  REQUIRE(surfrig_certify(fx.p, &o, &report.p, &certified) == SURFRIG_OK);
  CHECK(certified == 1);
  CHECK(report.str().find("MAX_RANK_GENERIC") != std::string::npos);

  const char* cone = R"({"surface": {"kind": "cone"},
    "vertices": [[1, 2, 1], [2, -1, 3], [-1, 1, 2], [3, 1, -1], [1, -3, -2]],
    "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";
  Framework c;
  REQUIRE(surfrig_framework_parse(cone, SURFRIG_EXACT, 0, &c.p) == SURFRIG_OK);
  o.route = SURFRIG_ROUTE_MAX_RANK;
  Owned refused;
  CHECK(surfrig_certify(c.p, &o, &refused.p, &certified) == SURFRIG_UNSUPPORTED);
  CHECK(refused.p == nullptr);
  CHECK(std::string(surfrig_last_error()).find("cylinder and ellipsoid") != std::string::npos);
}

TEST_CASE("construction, sparsity and screening") {
  surfrig_options o;
  surfrig_options_init(&o);
  o.seed = 2;
  Owned report;
  int ok = -1;
  REQUIRE(surfrig_certify_construction(
              "K5_E", R"([{"op": "one_extension", "edge": [0, 1], "v3": 2}])", &o, &report.p,
              &ok) == SURFRIG_OK);
  CHECK(ok == 1);
  Owned bad;
  CHECK(surfrig_certify_construction("K9", nullptr, &o, &bad.p, &ok) == SURFRIG_INVALID_ARGUMENT);
  o.surface = SURFRIG_CONE;
  CHECK(surfrig_certify_construction("H1", nullptr, &o, &bad.p, &ok) == SURFRIG_UNSUPPORTED);

  const char* k4 = R"({"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})";
  Owned sp;
  int sparse = -1;
  REQUIRE(surfrig_sparsity(k4, 2, &sp.p, &sparse) == SURFRIG_OK);
  CHECK(sparse == 1);
  Owned sp3;
  REQUIRE(surfrig_sparsity(k4, 3, &sp3.p, &sparse) == SURFRIG_OK);
  CHECK(sparse == 0);
  Owned h;
  int passed = -1;
  o.surface = SURFRIG_CYLINDER;
  REQUIRE(surfrig_hendrickson(k4, &o, &h.p, &passed) == SURFRIG_OK);
  CHECK(passed == 0);
}
