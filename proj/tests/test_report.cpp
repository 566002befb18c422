#include <doctest.h>

#include "hilbgap/report.hpp"

using namespace hilbgap;
using nlohmann::json;

TEST_CASE("input schemas") {
  CHECK(parse_monoid_input(R"({"generators": [[0,5],[2,3],[3,2],[5,0]]})").monoid.dim() == 2);
  const MonoidInput g = parse_monoid_input(R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
  CHECK(g.graph);
  CHECK(g.monoid.dim() == 3);
  const MonoidInput f = parse_monoid_input(R"({"family": "gk", "param": 1})");
  CHECK(f.graph);
  CHECK(f.monoid.dim() == 8);
  const MonoidInput p = parse_monoid_input(R"({"polytope": [[0,0],[1,0],[0,1]]})");
  CHECK(p.polytope);
  CHECK(p.monoid.ambient_dim() == 3);
  CHECK(parse_monoid_input(R"({"monoid": {"generators": [[1,0],[0,1]]}, "dim": 2})").monoid.dim() == 2);
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(parse_monoid_input("not json"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input("[1,2]"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"generators": [[1,0],[0]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"generators": [[1.5,0]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"generators": []})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"generators": [[1,0]], "family": "rm", "param": 1})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"family": "rm"})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"vertices": 2, "edges": [[0,2]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_monoid_input(R"({"generators": [[1,0],[1,2],[2,1]]})"), NotHomogeneous);
}

TEST_CASE("compare report for R_1") {
  const Report r = monoid_report(parse_monoid_input(R"({"family": "rm", "param": 1})"), ReportKind::compare, {});
  CHECK_FALSE(r.partial);
  const json j = json::parse(r.body);
  CHECK(j["dim"] == 2);
  CHECK(j["h"] == json::array({1, 2, 2}));
  CHECK(j["h_normalization"] == json::array({1, 4}));
  CHECK(j["gap"] == -1);
  CHECK(j["h_at_one"] == 5);
  CHECK(j["h_normalization_at_one"] == 5);
  CHECK(j["s2"] == "S2-consistent");
  CHECK(j["depth_estimate"] == "not applicable");
}

TEST_CASE("reports round trip through their monoid block") {
  const MonoidInput in = parse_monoid_input(R"({"generators": [[0,4],[1,3],[3,1],[4,0]]})");
  for (ReportKind k : {ReportKind::hilb, ReportKind::normalize, ReportKind::holes, ReportKind::compare}) {
    const Report r = monoid_report(in, k, {});
    const MonoidInput back = parse_monoid_input(r.body);
    CHECK(back.monoid.generators() == in.monoid.generators());
  }
  const Report again = monoid_report(in, ReportKind::holes, {});
  CHECK(again.body == monoid_report(in, ReportKind::holes, {}).body);
}

TEST_CASE("holes and normalize reports") {
  const MonoidInput in = parse_monoid_input(R"({"generators": [[0,4],[1,3],[3,1],[4,0]]})");
  const json h = json::parse(monoid_report(in, ReportKind::holes, {}).body);
  CHECK(h["holes"][1] == json::array({json::array({2, 2})}));
  CHECK(h["families"].size() == 1);
  CHECK(h["families"][0]["face_dim"] == 0);
  CHECK(h["s2"] == "S2-violated");
  CHECK(h["depth_estimate"] == 1);
  const json n = json::parse(monoid_report(in, ReportKind::normalize, {}).body);
  CHECK(n["hilbert_basis"].size() == 5);
  CHECK(n["normal"] == false);
  CHECK(n["spanning"] == true);
  const json t = json::parse(monoid_report(parse_monoid_input(R"({"polytope": [[0,0,0],[1,1,0],[0,1,1],[1,0,1]]})"),
                                           ReportKind::normalize, {})
                                 .body);
  CHECK(t["spanning"] == false);
  CHECK(t["normal"] == true);
}

TEST_CASE("capped reports are partial") {
  ReportOptions o;
  o.analysis.slices.point_cap = 10;
  const Report r = monoid_report(parse_monoid_input(R"({"family": "veronese", "param": 3})"), ReportKind::hilb, o);
  CHECK(r.partial);
  CHECK_FALSE(r.message.empty());
  const json j = json::parse(r.body);
  CHECK(j["partial"] == true);
  CHECK(j["counts"].size() >= 2);
}

TEST_CASE("edge ring report") {
  const json j = json::parse(edge_ring_report(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), {}).body);
  CHECK(j["dim"] == 3);
  CHECK(j["normal"] == true);
  CHECK(j["exceptional_pairs"].empty());
  CHECK(j["hilbert_basis_agrees"] == true);
}

TEST_CASE("text rendering") {
  CHECK(polynomial_text({1, 4, 9, 12, 8}) == "1 + 4t + 9t^2 + 12t^3 + 8t^4");
  CHECK(polynomial_text({1, 0, 1}) == "1 + t^2");
  CHECK(polynomial_text({0, -1, 2}) == "-t + 2t^2");
  CHECK(polynomial_text({}) == "0");
  ReportOptions o;
  o.text = true;
  const Report r = monoid_report(parse_monoid_input(R"({"family": "rm", "param": 1})"), ReportKind::compare, o);
  CHECK(r.body.find("(1 + 2t + 2t^2) / (1-t)^2") != std::string::npos);
  CHECK(big_to_json(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(big_to_json(BigInt(42)) == 42);
}
