#include <doctest.h>

#include "hilbgap/monoid.hpp"
#include "oracle.hpp"

using namespace hilbgap;

namespace {

oracle::Gens rows_of(const IntMatrix& m) {
  oracle::Gens g;
  for (std::size_t i = 0; i < m.rows(); ++i) g.push_back(m.row_vector(i));
  return g;
}

}  // namespace

TEST_CASE("R_1 slices agree with sumsets") {
  const AffineMonoid q = make_family("rm", 1);
  CHECK(q.dim() == 2);
  CHECK(q.generators() == IntMatrix{{0, 5}, {2, 3}, {3, 2}, {5, 0}});
  const auto brute = oracle::monoid_slices(rows_of(q.generators()), 6);
  const DegreeSlices s = degree_slices(q, 6);
  for (int n = 0; n <= 6; ++n) {
    const auto& pts = s.points[static_cast<std::size_t>(n)];
    CHECK(std::set<IntVector>(pts.begin(), pts.end()) == brute[static_cast<std::size_t>(n)]);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
  }
  CHECK(s.count.counts[0] == 1);
  CHECK(s.count.counts[1] == 4);
  CHECK(s.count.counts[2] == 9);
}

TEST_CASE("membership") {
  const AffineMonoid q = make_family("rm", 1);
  CHECK(q.contains(IntVector{0, 0}));
  CHECK(q.contains(IntVector{5, 5}));
  CHECK(q.contains(IntVector{2, 8}));
  CHECK_FALSE(q.contains(IntVector{1, 4}));
  CHECK_FALSE(q.contains(IntVector{4, 1}));
  CHECK_FALSE(q.contains(IntVector{1, 1}));
  CHECK(q.degree(IntVector{5, 5}) == 2);
  CHECK_THROWS_AS(q.degree(IntVector{1, 1}), InvalidInput);
}

TEST_CASE("generators are reduced to the minimal system") {
  CHECK(new_monoid(IntMatrix{{0, 5}, {2, 3}, {3, 2}, {5, 0}, {5, 5}}).generators().rows() == 4);
  const AffineMonoid q = new_monoid(IntMatrix{{2, 0}, {1, 1}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(q.generators().rows() == 3);
  CHECK(minimal_generators(IntMatrix{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(new_monoid(IntMatrix{{1, 0}, {1, 2}, {2, 1}}), NotHomogeneous);
  CHECK_THROWS_AS(new_monoid(IntMatrix{{1, 1}, {-1, -1}}), NotPositive);
  CHECK_THROWS_AS(new_monoid(IntMatrix{{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(new_monoid(IntMatrix(0, 2)), InvalidInput);
  CHECK_THROWS_AS(make_family("rm", -1), InvalidInput);
  CHECK_THROWS_AS(make_family("nope", 1), InvalidInput);
}

TEST_CASE("grading need not be the coordinate sum") {
  const AffineMonoid r = new_monoid(IntMatrix{{1, 0}, {0, 2}});
  CHECK(r.degree(IntVector{1, 2}) == 2);
  CHECK(degree_slices(r, 3).count.counts == std::vector<BigInt>{1, 2, 3, 4});
  CHECK(new_monoid(IntMatrix{{1}}).dim() == 1);
  CHECK(degree_slices(new_monoid(IntMatrix{{1}}), 5).count.counts == std::vector<BigInt>(6, 1));
  const AffineMonoid q = new_monoid(IntMatrix{{1, 2}, {2, 1}});
  CHECK(q.dim() == 2);
  CHECK(q.degree(IntVector{3, 3}) == 2);
}

TEST_CASE("join adds dimensions and multiplies counts") {
  const AffineMonoid n1 = new_monoid(IntMatrix{{1}});
  const AffineMonoid j = join(n1, n1);
  CHECK(j.dim() == 2);
  CHECK(j.generators().rows() == 2);
  const DegreeSlices s = degree_slices(j, 5);
  for (int n = 0; n <= 5; ++n) CHECK(s.count.counts[static_cast<std::size_t>(n)] == n + 1);

  const AffineMonoid r = make_family("rm", 1);
  const AffineMonoid jr = join(r, r);
  CHECK(jr.dim() == 4);
  const auto a = degree_slices(r, 4).count.counts;
  const auto b = degree_slices(jr, 4).count.counts;
  for (std::size_t n = 0; n <= 4; ++n) {
    BigInt want = 0;
    for (std::size_t i = 0; i <= n; ++i) want += a[i] * a[n - i];
    CHECK(b[n] == want);
  }
}

TEST_CASE("veronese family") {
  const AffineMonoid v = make_family("veronese", 3);
  CHECK(v.generators().rows() == 4);
  const auto c = degree_slices(v, 4).count.counts;
  for (std::int64_t n = 0; n <= 4; ++n) CHECK(c[static_cast<std::size_t>(n)] == 3 * n + 1);
}
