#include "hilbgap/report.hpp"

#include <algorithm>
#include <sstream>

namespace hilbgap {

using nlohmann::json;

namespace {

IntMatrix parse_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InvalidInput(std::string(what) + " must be a nonempty array of integer arrays");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(std::string(what) + " rows must be arrays");
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " entries must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    if (!rows.empty() && v.size() != rows[0].size()) throw InvalidInput(std::string(what) + " rows differ in length");
    rows.push_back(std::move(v));
  }
  if (rows[0].empty()) throw InvalidInput(std::string(what) + " rows must be nonempty");
  return IntMatrix::from_rows(rows, rows[0].size());
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

json counts_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big_to_json(x));
  return out;
}

json optional_poly(const std::optional<HPolynomial>& h) {
  if (!h) return nullptr;
  return counts_json(h->coefficients);
}

std::string join_counts(const std::vector<BigInt>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string vector_text(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string series_line(const char* name, const std::optional<HPolynomial>& h, std::size_t d) {
  std::ostringstream os;
  os << name;
  if (h) {
    os << "(" << polynomial_text(h->coefficients) << ") / (1-t)^" << d;
  } else {
    os << "not stabilized";
  }
  return os.str();
}

json depth_json(const std::optional<std::int64_t>& depth) {
  if (depth) return *depth;
  return "not applicable";
}

json family_json(const HoleFamily& f) {
  return json{{"base", f.base},
              {"base_degree", f.base_degree},
              {"face_dim", f.face.dim},
              {"face_generators", f.face.generators},
              {"coverage", f.coverage}};
}

AnalysisOptions analysis_for(const ReportOptions& o, bool families) {
  AnalysisOptions a = o.analysis;
  a.families = families;
  return a;
}

Report partial_report(const Analysis& a, const AffineMonoid& q, const CapExceeded& e, bool text) {
  Report r;
  r.partial = true;
  r.message = e.what();
  if (text) {
    std::ostringstream os;
    os << "partial result: " << e.what() << "\n";
    os << "dim " << a.dim << ", completed through degree " << a.data.verified_degree << "\n";
    os << "counts Q    " << join_counts(a.data.monoid.counts) << "\n";
    os << "counts Qbar " << join_counts(a.data.normalization.counts) << "\n";
    r.body = os.str();
  } else {
    json j{{"partial", true},
           {"error", e.what()},
           {"dim", a.dim},
           {"verified_degree", a.data.verified_degree},
           {"counts", counts_json(a.data.monoid.counts)},
           {"normalization_counts", counts_json(a.data.normalization.counts)},
           {"hole_counts", counts_json(a.data.holes.counts)},
           {"monoid", monoid_block(q)}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Report hilb(const MonoidInput& in, const ReportOptions& o) {
  const AffineMonoid& q = in.monoid;
  Analysis partial;
  Analysis a;
  try {
    a = analyze(q, analysis_for(o, false), &partial);
  } catch (const CapExceeded& e) {
    return partial_report(partial, q, e, o.text);
  }
  Report r;
  if (o.text) {
    std::ostringstream os;
    os << "dim " << a.dim << ", verified through degree " << a.data.verified_degree << ", window " << a.window << "\n";
    os << "counts " << join_counts(a.data.monoid.counts) << "\n";
    os << series_line("Hilb(Q,t) = ", a.h, a.dim) << "\n";
    os << series_line("Hilb(Qbar,t) = ", a.h_normalization, a.dim) << "\n";
    r.body = os.str();
  } else {
    json j{{"dim", a.dim},
           {"verified_degree", a.data.verified_degree},
           {"window", a.window},
           {"counts", counts_json(a.data.monoid.counts)},
           {"h", optional_poly(a.h)},
           {"normalization_counts", counts_json(a.data.normalization.counts)},
           {"h_normalization", optional_poly(a.h_normalization)},
           {"monoid", monoid_block(q)}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Report compare(const MonoidInput& in, const ReportOptions& o) {
  const AffineMonoid& q = in.monoid;
  Analysis partial;
  Analysis a;
  try {
    a = analyze(q, analysis_for(o, true), &partial);
  } catch (const CapExceeded& e) {
    return partial_report(partial, q, e, o.text);
  }
  DegreeComparison c = compare_degrees(a);
  Report r;
  if (o.text) {
    std::ostringstream os;
    os << "dim " << a.dim << ", verified through degree " << a.data.verified_degree << ", window " << a.window << "\n";
    os << series_line("Hilb(Q,t) = ", a.h, a.dim) << "\n";
    os << series_line("Hilb(Qbar,t) = ", a.h_normalization, a.dim) << "\n";
    os << "deg h(Qbar) - deg h(Q) = " << c.gap << "   (deg h(Q) - deg h(Qbar) = " << -c.gap << ")\n";
    os << "h(1): " << c.h_at_one << " and " << c.h_normalization_at_one << "\n";
    os << "S2: " << to_string(c.s2.status);
    if (c.s2.witness)
      os << " (family at " << vector_text(c.s2.witness->base) << " of dim " << c.s2.witness->face.dim << " < "
         << a.dim - 1 << ")";
    os << "\n";
    os << "depth estimate: " << (c.depth ? std::to_string(*c.depth) : "not applicable") << "\n";
    r.body = os.str();
  } else {
    json j{{"dim", a.dim},
           {"counts", counts_json(a.data.monoid.counts)},
           {"normalization_counts", counts_json(a.data.normalization.counts)},
           {"h", counts_json(c.h.coefficients)},
           {"h_normalization", counts_json(c.h_normalization.coefficients)},
           {"gap", c.gap},
           {"gap_monoid_minus_normalization", -c.gap},
           {"h_at_one", big_to_json(c.h_at_one)},
           {"h_normalization_at_one", big_to_json(c.h_normalization_at_one)},
           {"s2", to_string(c.s2.status)},
           {"depth_estimate", depth_json(c.depth)},
           {"verified_degree", a.data.verified_degree},
           {"window", a.window},
           {"monoid", monoid_block(q)}};
    if (c.s2.witness) j["s2_witness"] = family_json(*c.s2.witness);
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Report holes(const MonoidInput& in, const ReportOptions& o) {
  const AffineMonoid& q = in.monoid;
  Analysis partial;
  Analysis a;
  try {
    a = analyze(q, analysis_for(o, true), &partial);
  } catch (const CapExceeded& e) {
    return partial_report(partial, q, e, o.text);
  }
  const FamilyReport& fr = *a.families;
  std::vector<std::vector<IntVector>> shown;
  for (std::int64_t n = 0; n <= fr.coverage_degree && static_cast<std::size_t>(n) < a.data.hole_z.size(); ++n) {
    std::vector<IntVector> pts;
    for (const auto& z : a.data.hole_z[static_cast<std::size_t>(n)]) pts.push_back(q.graded_cone().to_ambient(z));
    std::sort(pts.begin(), pts.end());
    shown.push_back(std::move(pts));
  }
  Report r;
  if (o.text) {
    std::ostringstream os;
    os << "dim " << a.dim << ", verified through degree " << a.data.verified_degree << "\n";
    os << "hole counts " << join_counts(a.data.holes.counts) << "\n";
    for (std::size_t n = 0; n < shown.size(); ++n)
      for (const auto& x : shown[n]) os << "  degree " << n << " " << vector_text(x) << "\n";
    os << fr.families.size() << " families, examined holes through degree " << fr.coverage_degree << "\n";
    for (const auto& f : fr.families)
      os << "  base " << vector_text(f.base) << " degree " << f.base_degree << ", face dim " << f.face.dim << "\n";
    os << "uncovered " << fr.uncovered.size() << "\n";
    os << "S2: " << to_string(a.s2->status) << "\n";
    os << "depth estimate: " << (a.depth ? std::to_string(*a.depth) : "not applicable") << "\n";
    r.body = os.str();
  } else {
    json fams = json::array();
    for (const auto& f : fr.families) fams.push_back(family_json(f));
    json j{{"dim", a.dim},
           {"verified_degree", a.data.verified_degree},
           {"hole_counts", counts_json(a.data.holes.counts)},
           {"holes", shown},
           {"coverage_degree", fr.coverage_degree},
           {"families", fams},
           {"uncovered", fr.uncovered},
           {"s2", to_string(a.s2->status)},
           {"depth_estimate", depth_json(a.depth)},
           {"monoid", monoid_block(q)}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Report normalize(const MonoidInput& in, const ReportOptions& o) {
  const AffineMonoid& q = in.monoid;
  HilbertBasis hb;
  try {
    hb = hilbert_basis(q, o.certificate_bound, o.analysis.slices);
  } catch (const CapExceeded& e) {
    Report r;
    r.partial = true;
    r.message = e.what();
    r.body = o.text ? std::string("partial result: ") + e.what() + "\n"
                    : json{{"partial", true}, {"error", e.what()}, {"monoid", monoid_block(q)}}.dump(2) + "\n";
    return r;
  }
  const bool normal = hb.elements == q.generators();
  // Cross-section polytope: the generators themselves, or the explicit points.
  const IntMatrix points = in.polytope ? *in.polytope : q.generators();
  const bool spanning = is_spanning(LatticePolytope::ehrhart(points));
  Report r;
  if (o.text) {
    std::ostringstream os;
    os << "dim " << q.dim() << ", Hilbert basis of " << hb.elements.rows() << " elements (certified through degree "
       << hb.certified_degree << ")\n";
    for (std::size_t i = 0; i < hb.elements.rows(); ++i)
      os << "  " << vector_text(hb.elements.row(i)) << " degree " << hb.degrees[i] << "\n";
    os << "normal: " << (normal ? "yes" : "no") << "\n";
    os << "spanning: " << (spanning ? "yes" : "no") << "\n";
    r.body = os.str();
  } else {
    json j{{"dim", q.dim()},
           {"hilbert_basis", matrix_json(hb.elements)},
           {"degrees", hb.degrees},
           {"certified_degree", hb.certified_degree},
           {"normal", normal},
           {"spanning", spanning},
           {"monoid", monoid_block(q)}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

}  // namespace

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json monoid_block(const AffineMonoid& q) { return json{{"generators", matrix_json(q.generators())}}; }

SimpleGraph parse_graph(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_number_integer() || j["vertices"].get<std::int64_t>() < 0)
    throw InvalidInput("graph needs a nonnegative integer \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array()) throw InvalidInput("graph needs an \"edges\" array");
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0)
      throw InvalidInput("edges must be pairs of vertex indices");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return SimpleGraph(j["vertices"].get<std::size_t>(), edges);
}

MonoidInput parse_monoid_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("input must be a JSON object");
  if (j.contains("monoid") && j["monoid"].is_object()) j = j["monoid"];

  const int sources = static_cast<int>(j.contains("generators")) + static_cast<int>(j.contains("edges")) +
                      static_cast<int>(j.contains("family")) + static_cast<int>(j.contains("polytope"));
  if (sources != 1) throw InvalidInput("input needs exactly one of generators, a graph, a family or a polytope");

  if (j.contains("generators")) return {AffineMonoid::from_generators(parse_matrix(j["generators"], "generators")), std::nullopt, std::nullopt};
  if (j.contains("edges")) {
    SimpleGraph g = parse_graph(j);
    return {edge_monoid(g), g, std::nullopt};
  }
  if (j.contains("family")) {
    if (!j["family"].is_string()) throw InvalidInput("\"family\" must be a string");
    if (!j.contains("param") || !j["param"].is_number_integer()) throw InvalidInput("family needs an integer \"param\"");
    const std::string name = j["family"].get<std::string>();
    const std::int64_t p = j["param"].get<std::int64_t>();
    MonoidInput in{make_family(name, p), std::nullopt, std::nullopt};
    if (name == "gk") in.graph = gk_graph(p);
    return in;
  }
  IntMatrix pts = parse_matrix(j["polytope"], "polytope");
  return {AffineMonoid::from_generators(lift(pts)), std::nullopt, pts};
}

std::string polynomial_text(const std::vector<BigInt>& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    BigInt c = abs(h[i]);
    if (first) {
      if (h[i] < 0) os << "-";
    } else {
      os << (h[i] < 0 ? " - " : " + ");
    }
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Report monoid_report(const MonoidInput& in, ReportKind kind, const ReportOptions& options) {
  switch (kind) {
    case ReportKind::hilb:
      return hilb(in, options);
    case ReportKind::normalize:
      return normalize(in, options);
    case ReportKind::holes:
      return holes(in, options);
    case ReportKind::compare:
      return compare(in, options);
  }
  throw InvalidInput("unknown report kind");
}

Report edge_ring_report(const SimpleGraph& g, const ReportOptions& o) {
  const AffineMonoid q = edge_monoid(g);
  PairList pairs = exceptional_pairs(g, o.cycle_cap);
  NormalizationGenerators oh = oh_normalization_generators(g, o.cycle_cap);
  std::optional<bool> agrees;
  bool normal = false;
  std::string hb_error;
  try {
    HilbertBasis hb = hilbert_basis(q, o.certificate_bound, o.analysis.slices);
    agrees = hb.elements == oh.generators;
    normal = hb.elements == q.generators();
  } catch (const CapExceeded& e) {
    hb_error = e.what();
  }
  const bool bipartite = g.is_bipartite();
  Report r;
  if (!hb_error.empty()) {
    r.partial = true;
    r.message = hb_error;
  }
  if (o.text) {
    std::ostringstream os;
    os << g.vertex_count() << " vertices, " << g.edges().size() << " edges, dim " << q.dim()
       << (bipartite ? ", bipartite" : "") << "\n";
    os << "exceptional pairs: " << pairs.pairs.size() << (pairs.complete ? "" : " (cycle cap hit, partial)") << "\n";
    for (const auto& p : pairs.pairs) {
      os << "  {";
      for (std::size_t i = 0; i < p.first.size(); ++i) os << (i ? "," : "") << p.first[i];
      os << "} {";
      for (std::size_t i = 0; i < p.second.size(); ++i) os << (i ? "," : "") << p.second[i];
      os << "}\n";
    }
    if (agrees) {
      os << "normal: " << (normal ? "yes" : "no") << "\n";
      os << "odd-cycle description agrees with the Hilbert basis: " << (*agrees ? "yes" : "no") << "\n";
    } else {
      os << "Hilbert basis not computed: " << hb_error << "\n";
    }
    r.body = os.str();
  } else {
    json jp = json::array();
    for (const auto& p : pairs.pairs) jp.push_back(json{{"cycles", {p.first, p.second}}, {"support", p.support}});
    json j{{"vertices", g.vertex_count()},
           {"edges", g.edges().size()},
           {"dim", q.dim()},
           {"bipartite", bipartite},
           {"exceptional_pairs", jp},
           {"pairs_complete", pairs.complete},
           {"normalization_generators", matrix_json(oh.generators)},
           {"monoid", monoid_block(q)}};
    if (agrees) {
      j["normal"] = normal;
      j["hilbert_basis_agrees"] = *agrees;
    } else {
      j["partial"] = true;
      j["error"] = hb_error;
    }
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Report family_report(const AffineMonoid& q, const ReportOptions& o) {
  Report r;
  if (o.text) {
    std::ostringstream os;
    os << "dim " << q.dim() << ", " << q.generators().rows() << " generators in Z^" << q.ambient_dim() << "\n";
    for (std::size_t i = 0; i < q.generators().rows(); ++i) os << "  " << vector_text(q.generators().row(i)) << "\n";
    r.body = os.str();
  } else {
    r.body = monoid_block(q).dump() + "\n";
  }
  return r;
}

}  // namespace hilbgap
