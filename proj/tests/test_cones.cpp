#include <doctest.h>

#include <map>

#include "hilbgap/cones.hpp"

using namespace hilbgap;

TEST_CASE("facets of a planar cone") {
  const IntMatrix f = full_dim_facets(IntMatrix{{1, 0}, {1, 1}, {1, 2}});
  REQUIRE(f.rows() == 2);
  // Inner normals of cone((1,0),(1,2)): y >= 0 and 2x - y >= 0.
  CHECK(f.row_vector(0) == IntVector{0, 1});
  CHECK(f.row_vector(1) == IntVector{2, -1});
  CHECK(extreme_generators(IntMatrix{{1, 0}, {1, 1}, {1, 2}}, f) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("cone over a triangle has three facets") {
  const RationalCone c = RationalCone::from_generators(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(c.dim() == 3);
  CHECK(c.facets().rows() == 3);
  CHECK(c.contains(IntVector{2, 2, 2}));
  CHECK(c.in_relative_interior(IntVector{2, 2, 2}));
  CHECK(c.contains(IntVector{1, 1, 0}));
  CHECK_FALSE(c.in_relative_interior(IntVector{1, 1, 0}));
  CHECK_FALSE(c.contains(IntVector{2, 0, 0}));
}

TEST_CASE("lower-dimensional cone keeps its equations") {
  const RationalCone c = RationalCone::from_generators(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(c.dim() == 2);
  CHECK(c.equations().rows() == 1);
  CHECK(c.contains(IntVector{2, 3, 5}));
  CHECK_FALSE(c.contains(IntVector{2, 3, 4}));
}

TEST_CASE("non-pointed input is rejected with a witness") {
  try {
    RationalCone::from_generators(IntMatrix{{1, 0}, {-1, 0}, {0, 1}});
    FAIL("expected NotPositive");
  } catch (const NotPositive& e) {
    CHECK(e.witness().size() == 2);
    CHECK(e.witness()[1] == 0);
  }
}

TEST_CASE("face lattice of the cone over a square") {
  const RationalCone c = RationalCone::from_generators(IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto fl = c.face_lattice();
  CHECK(fl.complete);
  std::map<std::size_t, int> by_dim;
  for (const auto& f : fl.faces) ++by_dim[f.dim];
  CHECK(by_dim[3] == 1);
  CHECK(by_dim[2] == 4);
  CHECK(by_dim[1] == 4);
  const Face edge = c.face_of(IntMatrix{{2, 1, 2}});
  CHECK(edge.dim == 2);
  CHECK(edge.generators == std::vector<std::size_t>{1, 3});
}

TEST_CASE("graded enumeration matches a direct count") {
  // Cone over the unit square: degree-n slice is the (n+1)x(n+1) grid.
  const LatticePolytope sq = LatticePolytope::ehrhart(IntMatrix{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(sq.dim() == 2);
  for (std::int64_t n = 0; n <= 6; ++n) {
    CHECK(sq.cone().count(n, false) == (n + 1) * (n + 1));
    CHECK(sq.cone().count(n, true) == (n >= 2 ? (n - 1) * (n - 1) : 0));
    CHECK(dilation_lattice_points(sq, n, false).size() == static_cast<std::size_t>((n + 1) * (n + 1)));
  }
  std::size_t visited = 0;
  sq.cone().for_each_point(3, false, [&](std::span<const std::int64_t> z) {
    CHECK(sq.cone().contains_z(z));
    ++visited;
  });
  CHECK(visited == 16);
}

TEST_CASE("codegrees of small polytopes") {
  CHECK(codegree(LatticePolytope::ehrhart(IntMatrix{{0}, {1}}), 10) == 2);
  CHECK(codegree(LatticePolytope::ehrhart(IntMatrix{{0, 0}, {1, 0}, {0, 1}}), 10) == 3);
  CHECK(codegree(LatticePolytope::ehrhart(IntMatrix{{0, 0}, {1, 0}, {0, 1}}), 2) == std::nullopt);
  CHECK(codegree(LatticePolytope::ehrhart(IntMatrix{{-1, -1}, {1, -1}, {0, 2}}), 10) == 1);
}

TEST_CASE("key layout grows with the degree") {
  const LatticePolytope sq = LatticePolytope::ehrhart(IntMatrix{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const KeyLayout a = sq.cone().key_layout(10);
  const KeyLayout b = sq.cone().key_layout(1000);
  CHECK(a.total_bits <= b.total_bits);
  CHECK(a.max_degree == 10);
}

TEST_CASE("lifting appends a coordinate") {
  CHECK(lift(IntMatrix{{2, 3}}) == IntMatrix{{2, 3, 1}});
}
