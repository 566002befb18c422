#include "hilbgap/normalize.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace hilbgap {

namespace {

std::string format_vector(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void fill_counts(GradedData& data, const SliceSweep& sweep) {
  data.verified_degree = sweep.degree();
  data.monoid = {sweep.monoid_counts(), sweep.degree()};
  data.normalization = {sweep.normalization_counts(), sweep.degree()};
  data.holes = {sweep.hole_counts(), sweep.degree()};
}

}  // namespace

GradedData sweep_monoid(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options,
                        const std::function<bool(const GradedData&)>& done, GradedData* partial) {
  if (max_degree < 0) throw InvalidInput("degree bound must be nonnegative");
  SliceSweep sweep(q.graded_cone(), max_degree, options);
  GradedData data;
  try {
    while (sweep.degree() < max_degree) {
      sweep.advance();
      fill_counts(data, sweep);
      if (done && done(data)) break;
    }
  } catch (const CapExceeded&) {
    if (partial) {
      fill_counts(*partial, sweep);
      partial->hole_z = sweep.holes();
      partial->hole_z.resize(static_cast<std::size_t>(sweep.degree() + 1));
      partial->holes_complete = sweep.holes_complete();
    }
    throw;
  }
  data.hole_z = sweep.holes();
  data.holes_complete = sweep.holes_complete();
  return data;
}

DegreeSlices normalization_slices(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options) {
  if (max_degree < 0) throw InvalidInput("degree bound must be nonnegative");
  DegreeSlices out;
  const GradedCone& cone = q.graded_cone();
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    const BigInt c = cone.count(n, false);
    if (c > BigInt(static_cast<long>(options.point_cap)))
      throw CapExceeded("normalization slice of degree " + std::to_string(n) + " exceeds the point cap", n - 1);
    std::vector<IntVector> pts;
    for (const auto& z : normalization_slice_z(cone, n)) pts.push_back(cone.to_ambient(z));
    std::sort(pts.begin(), pts.end());
    out.count.counts.push_back(c);
    out.points.push_back(std::move(pts));
  }
  out.count.verified_degree = max_degree;
  return out;
}

HilbertBasis hilbert_basis(const AffineMonoid& q, std::int64_t certificate_bound, const SliceOptions& options) {
  const auto d = static_cast<std::int64_t>(q.dim());
  if (certificate_bound < 0) certificate_bound = d + 1;
  const GradedCone& cone = q.graded_cone();
  HilbertBasisZ hb = hilbert_basis_z(cone, std::max<std::int64_t>(1, d - 1), certificate_bound, options);
  if (hb.witness)
    throw Error(Error::Kind::Certificate, "Hilbert basis fails to generate " +
                                              format_vector(cone.to_ambient(*hb.witness)) + " of degree " +
                                              std::to_string((*hb.witness)[0]));
  std::vector<std::pair<std::int64_t, IntVector>> elems;
  for (const auto& z : hb.elements) elems.emplace_back(z[0], cone.to_ambient(z));
  std::sort(elems.begin(), elems.end());
  HilbertBasis out;
  out.elements = IntMatrix(0, q.ambient_dim());
  for (auto& [deg, x] : elems) {
    out.degrees.push_back(deg);
    out.elements.append_row(x);
  }
  out.certified_degree = hb.certified_degree;
  return out;
}

bool is_normal(const AffineMonoid& q, const SliceOptions& options) {
  HilbertBasis hb = hilbert_basis(q, -1, options);
  return hb.elements == q.generators();
}

bool is_spanning(const LatticePolytope& p) {
  LatticePolytope full = LatticePolytope::ehrhart(p.vertices());
  IntMatrix pts(0, full.ambient_dim() + 1);
  for (auto x : dilation_lattice_points(full, 1, false)) {
    x.push_back(1);
    pts.append_row(x);
  }
  for (const auto& f : smith_diagonal(pts))
    if (f != 1) return false;
  return true;
}

HoleSlices holes_up_to(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options) {
  SliceOptions opts = options;
  opts.keep_holes = true;
  GradedData data = sweep_monoid(q, max_degree, opts);
  if (!data.holes_complete) throw CapExceeded("hole list truncated by the hole cap", data.verified_degree);
  HoleSlices out;
  for (const auto& slice : data.hole_z) {
    std::vector<IntVector> pts;
    for (const auto& z : slice) pts.push_back(q.graded_cone().to_ambient(z));
    std::sort(pts.begin(), pts.end());
    out.points.push_back(std::move(pts));
  }
  out.count = data.holes;
  return out;
}

namespace {

struct ZFamily {
  IntVector base;
  Face face;  // in the z-coordinate cone
};

class FamilySearch {
 public:
  FamilySearch(const AffineMonoid& q, const GradedData& data, std::int64_t cover)
      : q_(q), cone_(q.graded_cone()), data_(data), cover_(cover),
        zcone_(RationalCone::from_generators(cone_.generators_z())) {
    std::int64_t total = 0;
    for (std::int64_t n = 0; n <= cover_; ++n) {
      qbar_.push_back(normalization_slice_z(cone_, n));
      total += static_cast<std::int64_t>(qbar_.back().size());
      if (total > 5'000'000) throw CapExceeded("too many normalization points below the coverage degree", n - 1);
    }
  }

  bool is_hole(std::span<const std::int64_t> z) const {
    const std::int64_t n = z[0];
    if (n < 0 || n > data_.verified_degree) return false;
    const auto& slice = data_.hole_z[static_cast<std::size_t>(n)];
    IntVector key(z.begin(), z.end());
    return std::binary_search(slice.begin(), slice.end(), key);
  }

  ZFamily family_for(const IntVector& h) {
    std::vector<bool> in_gh(cone_.generators_z().rows(), false);
    IntMatrix gh(0, cone_.rank());
    for (std::size_t i = 0; i < cone_.generators_z().rows(); ++i) {
      IntVector z = h;
      for (std::size_t j = 0; j < z.size(); ++j) z[j] += cone_.generators_z()(i, j);
      if (is_hole(z)) {
        in_gh[i] = true;
        gh.append_row(cone_.generators_z().row(i));
      }
    }
    auto cmp = [](const Face& a, const Face& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      return a.defining_facets > b.defining_facets;
    };
    std::priority_queue<Face, std::vector<Face>, decltype(cmp)> queue(cmp);
    std::set<std::vector<std::size_t>> seen;
    Face start = zcone_.face_of(gh);
    seen.insert(start.defining_facets);
    queue.push(std::move(start));
    std::size_t popped = 0;
    while (!queue.empty() && popped < 10000) {
      Face f = queue.top();
      queue.pop();
      ++popped;
      bool inside = std::all_of(f.generators.begin(), f.generators.end(), [&](std::size_t i) { return in_gh[i]; });
      if (inside && verify(h, f)) return {h, std::move(f)};
      for (std::size_t s = 0; s < zcone_.facets().rows(); ++s) {
        if (std::binary_search(f.defining_facets.begin(), f.defining_facets.end(), s)) continue;
        auto ids = f.defining_facets;
        ids.push_back(s);
        Face child = zcone_.face_cut_by(ids);
        if (seen.insert(child.defining_facets).second) queue.push(std::move(child));
      }
    }
    std::vector<std::size_t> all(zcone_.facets().rows());
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
    return {h, zcone_.face_cut_by(all)};
  }

  bool member(const ZFamily& fam, std::span<const std::int64_t> z) const {
    IntVector diff(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) diff[j] = z[j] - fam.base[j];
    return fam.face.lattice.contains(diff);
  }

  HoleFamily to_ambient(const ZFamily& fam) const {
    IntMatrix gens(0, q_.ambient_dim());
    for (auto i : fam.face.generators) gens.append_row(q_.generators().row(i));
    HoleFamily out;
    out.base = cone_.to_ambient(fam.base);
    out.base_degree = fam.base[0];
    out.face = q_.cone().face_of(gens);
    out.coverage = cover_;
    return out;
  }

 private:
  bool verify(const IntVector& h, const Face& f) const {
    const ZFamily fam{h, f};
    std::vector<std::int64_t> levels;
    for (auto s : f.defining_facets) levels.push_back(dot(zcone_.facets().row(s), h));
    for (const auto& slice : qbar_)
      for (const auto& z : slice) {
        bool same = true;
        for (std::size_t t = 0; t < levels.size() && same; ++t)
          same = dot(zcone_.facets().row(f.defining_facets[t]), z) == levels[t];
        if (!same || !member(fam, z)) continue;
        if (!is_hole(z)) return false;
      }
    return true;
  }

  const AffineMonoid& q_;
  const GradedCone& cone_;
  const GradedData& data_;
  std::int64_t cover_;
  RationalCone zcone_;
  std::vector<std::vector<IntVector>> qbar_;
};

}  // namespace

FamilyReport infer_hole_families(const AffineMonoid& q, const GradedData& data, std::int64_t margin) {
  if (margin < 0) margin = static_cast<std::int64_t>(q.dim());
  if (!data.holes_complete) throw CapExceeded("hole list truncated by the hole cap", data.verified_degree);
  FamilyReport report;
  const std::int64_t cover = std::min(data.verified_degree - margin, data.verified_degree - 1);
  report.coverage_degree = cover;
  for (std::int64_t n = std::max<std::int64_t>(cover + 1, 0); n <= data.verified_degree; ++n)
    if (!data.hole_z[static_cast<std::size_t>(n)].empty()) report.holes_beyond_coverage = true;
  if (cover < 0) return report;

  FamilySearch search(q, data, cover);
  std::vector<ZFamily> found;
  for (std::int64_t n = 0; n <= cover; ++n)
    for (const auto& h : data.hole_z[static_cast<std::size_t>(n)]) {
      ++report.holes_examined;
      bool covered = std::any_of(found.begin(), found.end(), [&](const ZFamily& f) { return search.member(f, h); });
      if (covered) continue;
      ZFamily fam = search.family_for(h);
      if (!search.member(fam, h)) report.uncovered.push_back(q.graded_cone().to_ambient(h));
      found.push_back(std::move(fam));
    }
  for (const auto& f : found) report.families.push_back(search.to_ambient(f));
  return report;
}

FamilyReport infer_hole_families(const AffineMonoid& q, std::int64_t max_degree, std::int64_t margin,
                                 const SliceOptions& options) {
  SliceOptions opts = options;
  opts.keep_holes = true;
  return infer_hole_families(q, sweep_monoid(q, max_degree, opts), margin);
}

std::string to_string(S2Status s) {
  switch (s) {
    case S2Status::consistent:
      return "S2-consistent";
    case S2Status::violated:
      return "S2-violated";
    case S2Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

S2Verdict s2_verdict(const AffineMonoid& q, const FamilyReport& report) {
  S2Verdict v;
  const std::size_t d = q.dim();
  for (const auto& f : report.families)
    if (f.face.dim + 1 < d) {
      v.status = S2Status::violated;
      v.witness = f;
      return v;
    }
  if (!report.uncovered.empty() || (report.families.empty() && report.holes_beyond_coverage)) {
    v.status = S2Status::inconclusive;
    return v;
  }
  v.status = S2Status::consistent;
  return v;
}

S2Verdict s2_verdict(const AffineMonoid& q, std::int64_t max_degree, std::int64_t margin, const SliceOptions& options) {
  return s2_verdict(q, infer_hole_families(q, max_degree, margin, options));
}

std::optional<std::int64_t> depth_estimate(const FamilyReport& report) {
  if (report.families.size() != 1 || !report.uncovered.empty()) return std::nullopt;
  return static_cast<std::int64_t>(report.families.front().face.dim) + 1;
}

}  // namespace hilbgap
