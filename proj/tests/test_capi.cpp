#include <doctest.h>

#include <string>

#include "hilbgap/hilbgap.h"

TEST_CASE("C API lifecycle") {
  hm_monoid* q = nullptr;
  REQUIRE(hm_monoid_from_family("rm", 1, &q) == HM_OK);
  CHECK(hm_monoid_dim(q) == 2);
  CHECK(hm_monoid_ambient_dim(q) == 2);
  REQUIRE(hm_monoid_generator_count(q) == 4);
  int64_t g[8];
  CHECK(hm_monoid_generators(q, g, 8) == HM_OK);
  CHECK(g[0] == 0);
  CHECK(g[1] == 5);
  CHECK(hm_monoid_generators(q, g, 7) == HM_DIMENSION_MISMATCH);

  int in = -1;
  const int64_t hole[] = {1, 4};
  CHECK(hm_monoid_contains(q, hole, 2, &in) == HM_OK);
  CHECK(in == 0);
  CHECK(hm_monoid_contains(q, hole, 3, &in) == HM_DIMENSION_MISMATCH);

  hm_options o;
  hm_options_init(&o);
  char* out = nullptr;
  REQUIRE(hm_report(q, HM_REPORT_COMPARE, &o, &out) == HM_OK);
  CHECK(std::string(out).find("\"gap\": -1") != std::string::npos);
  hm_string_free(out);

  hm_monoid* j = nullptr;
  REQUIRE(hm_monoid_join(q, q, &j) == HM_OK);
  CHECK(hm_monoid_dim(j) == 4);
  hm_monoid_free(j);
  hm_monoid_free(q);
}

TEST_CASE("C API errors") {
  hm_monoid* q = nullptr;
  CHECK(hm_monoid_from_json("{", &q) == HM_INVALID_INPUT);
  CHECK(q == nullptr);
  CHECK(std::string(hm_last_error()).find("malformed") != std::string::npos);
  CHECK(hm_monoid_from_json(R"({"generators": [[1,0],[1,2],[2,1]]})", &q) == HM_NOT_HOMOGENEOUS);
  CHECK(hm_monoid_from_json(R"({"generators": [[1,1],[-1,-1]]})", &q) == HM_NOT_POSITIVE);
  CHECK(hm_monoid_from_family("gk", 0, &q) == HM_INVALID_INPUT);
  const int64_t data[] = {1, 0, 0, 1};
  CHECK(hm_monoid_from_generators(data, 2, 2, &q) == HM_OK);
  hm_options o;
  hm_options_init(&o);
  o.degree_bound = 3;
  o.window = 4;
  char* out = nullptr;
  CHECK(hm_report(q, HM_REPORT_COMPARE, &o, &out) == HM_NOT_STABILIZED);
  CHECK(out == nullptr);
  o.degree_bound = -1;
  o.point_cap = 3;
  CHECK(hm_report(q, HM_REPORT_HILB, &o, &out) == HM_CAP_EXCEEDED);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("\"partial\": true") != std::string::npos);
  hm_string_free(out);
  hm_monoid_free(q);
  CHECK(std::string(hm_status_name(HM_CAP_EXCEEDED)) == "cap exceeded");
}

TEST_CASE("C API edge ring and monoid block") {
  hm_options o;
  hm_options_init(&o);
  char* out = nullptr;
  REQUIRE(hm_edge_ring_report(R"({"vertices": 4, "edges": [[0,1],[1,2],[2,3],[0,3]]})", &o, &out) == HM_OK);
  CHECK(std::string(out).find("\"bipartite\": true") != std::string::npos);
  hm_string_free(out);
  CHECK(hm_edge_ring_report(R"({"vertices": 2})", &o, &out) == HM_INVALID_INPUT);

  hm_monoid* q = nullptr;
  REQUIRE(hm_monoid_from_family("veronese", 2, &q) == HM_OK);
  REQUIRE(hm_monoid_to_json(q, 0, &out) == HM_OK);
  hm_monoid* back = nullptr;
  CHECK(hm_monoid_from_json(out, &back) == HM_OK);
  CHECK(hm_monoid_generator_count(back) == 3);
  hm_string_free(out);
  hm_monoid_free(back);
  hm_monoid_free(q);
}
