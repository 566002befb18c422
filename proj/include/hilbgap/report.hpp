#pragma once

// JSON input parsing and report rendering shared by the C API and the CLI.

#include <optional>
#include <string>

#include <json.hpp>

#include "hilbgap/graphs.hpp"
#include "hilbgap/series.hpp"

namespace hilbgap {

struct ReportOptions {
  AnalysisOptions analysis;
  std::int64_t certificate_bound = -1;
  std::size_t cycle_cap = 100000;
  bool text = false;
};

struct MonoidInput {
  AffineMonoid monoid;
  std::optional<SimpleGraph> graph;
  std::optional<IntMatrix> polytope;  // explicit lattice points of a polytope
};

// Accepts {"generators": ...}, {"vertices": n, "edges": ...},
// {"family": name, "param": p}, {"polytope": ...}, or a report carrying a
// "monoid" block. Throws InvalidInput.
MonoidInput parse_monoid_input(const std::string& text);
SimpleGraph parse_graph(const nlohmann::json& j);

nlohmann::json big_to_json(const BigInt& v);
nlohmann::json monoid_block(const AffineMonoid& q);

// A rendered report. When a cap stopped the computation `partial` is set,
// `message` explains it and `body` holds what was completed.
struct Report {
  std::string body;
  bool partial = false;
  std::string message;
};

enum class ReportKind { hilb, normalize, holes, compare };
Report monoid_report(const MonoidInput& in, ReportKind kind, const ReportOptions& options);
Report edge_ring_report(const SimpleGraph& g, const ReportOptions& options);
Report family_report(const AffineMonoid& q, const ReportOptions& options);  // the monoid block only

std::string polynomial_text(const std::vector<BigInt>& h);

}  // namespace hilbgap
