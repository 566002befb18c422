#include <doctest.h>

#include "hilbgap/normalize.hpp"
#include "oracle.hpp"

using namespace hilbgap;

TEST_CASE("normalization of R_1") {
  const AffineMonoid q = make_family("rm", 1);
  const DegreeSlices nb = normalization_slices(q, 4);
  for (std::int64_t n = 0; n <= 4; ++n) CHECK(nb.count.counts[static_cast<std::size_t>(n)] == 5 * n + 1);

  const HoleSlices h = holes_up_to(q, 4);
  CHECK(h.points[1] == std::vector<IntVector>{{1, 4}, {4, 1}});
  CHECK(h.points[2] == std::vector<IntVector>{{1, 9}, {9, 1}});
  for (std::int64_t n = 1; n <= 4; ++n) CHECK(h.count.counts[static_cast<std::size_t>(n)] == 2);
}

TEST_CASE("Hilbert basis of R_1 is the full degree-one slice") {
  const AffineMonoid q = make_family("rm", 1);
  const HilbertBasis hb = hilbert_basis(q);
  CHECK(hb.elements == IntMatrix{{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 0}});
  CHECK(hb.degrees == std::vector<std::int64_t>(6, 1));
  CHECK(hb.certified_degree >= 3);
  CHECK_FALSE(is_normal(q));
  CHECK(is_normal(make_family("veronese", 4)));
}

TEST_CASE("Hilbert basis with an element of degree three") {
  // Two triangles joined by a path of length two.
  IntMatrix e(0, 7);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}) {
    IntVector r(7, 0);
    r[static_cast<std::size_t>(u)] = r[static_cast<std::size_t>(v)] = 1;
    e.append_row(r);
  }
  const AffineMonoid q = new_monoid(e);
  const HilbertBasis hb = hilbert_basis(q);
  REQUIRE(hb.elements.rows() == 9);
  CHECK(hb.degrees.back() == 3);
  CHECK(hb.elements.row_vector(8) == IntVector{1, 1, 1, 0, 1, 1, 1});
  CHECK_FALSE(q.contains(IntVector{1, 1, 1, 0, 1, 1, 1}));
}

TEST_CASE("spanning polytopes") {
  CHECK(is_spanning(LatticePolytope::ehrhart(IntMatrix{{0, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(is_spanning(LatticePolytope::ehrhart(IntMatrix{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
}

TEST_CASE("hole families of R_1 are two rays") {
  const AffineMonoid q = make_family("rm", 1);
  const FamilyReport fr = infer_hole_families(q, 8);
  CHECK(fr.uncovered.empty());
  REQUIRE(fr.families.size() == 2);
  for (const auto& f : fr.families) {
    CHECK(f.face.dim == 1);
    CHECK(f.base_degree == 1);
  }
  const S2Verdict v = s2_verdict(q, fr);
  CHECK(v.status == S2Status::consistent);
  CHECK(depth_estimate(fr) == std::nullopt);
  CHECK(to_string(S2Status::violated) == "S2-violated");
}

TEST_CASE("normal monoids have no holes and are S2") {
  const AffineMonoid q = make_family("veronese", 3);
  const FamilyReport fr = infer_hole_families(q, 6);
  CHECK(fr.families.empty());
  CHECK(fr.uncovered.empty());
  CHECK(s2_verdict(q, fr).status == S2Status::consistent);
}

TEST_CASE("an isolated hole violates S2") {
  const AffineMonoid q = new_monoid(IntMatrix{{0, 4}, {1, 3}, {3, 1}, {4, 0}});
  const HoleSlices h = holes_up_to(q, 6);
  CHECK(h.points[1] == std::vector<IntVector>{{2, 2}});
  for (std::size_t n = 2; n <= 6; ++n) CHECK(h.points[n].empty());
  const FamilyReport fr = infer_hole_families(q, 8);
  REQUIRE(fr.families.size() == 1);
  CHECK(fr.families[0].face.dim == 0);
  CHECK(fr.families[0].base == IntVector{2, 2});
  const S2Verdict v = s2_verdict(q, fr);
  CHECK(v.status == S2Status::violated);
  REQUIRE(v.witness);
  CHECK(depth_estimate(fr) == 1);
}

TEST_CASE("sweeps stop at the point cap") {
  const AffineMonoid q = make_family("veronese", 2);
  SliceOptions o;
  o.point_cap = 5;
  GradedData partial;
  CHECK_THROWS_AS(sweep_monoid(q, 10, o, {}, &partial), CapExceeded);
  CHECK(partial.verified_degree >= 0);
  CHECK(partial.verified_degree < 10);
}
