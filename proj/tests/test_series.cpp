#include <doctest.h>

#include "hilbgap/series.hpp"

using namespace hilbgap;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("numerators and counts invert each other") {
  const auto h = big({1, 4, 9, 12, 8});
  const auto counts = counts_from_numerator(h, 10, 12);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 14);
  CHECK(counts[2] == 104);
  const auto diff = finite_differences(counts, 10);
  for (std::size_t i = 0; i < diff.size(); ++i) CHECK(diff[i] == (i < h.size() ? h[i] : BigInt(0)));
}

TEST_CASE("stabilization window") {
  const auto counts = counts_from_numerator(big({1, 2, 2}), 2, 8);
  const auto h = try_h_polynomial({counts, 8}, 2, 4);
  REQUIRE(h);
  CHECK(h->coefficients == big({1, 2, 2}));
  CHECK(h->degree() == 2);
  CHECK(h->at_one() == 5);
  CHECK_FALSE(try_h_polynomial({std::vector<BigInt>(counts.begin(), counts.begin() + 6), 5}, 2, 4));
  CHECK_THROWS_AS(h_polynomial({std::vector<BigInt>(counts.begin(), counts.begin() + 6), 5}, 2, 4), NotStabilized);
  CHECK(default_window(2) == 4);
  CHECK(default_window(10) == 10);
}

TEST_CASE("R_m numerators") {
  for (std::int64_t m = 0; m <= 2; ++m) {
    const Analysis a = analyze(make_family("rm", m));
    REQUIRE(a.h);
    REQUIRE(a.h_normalization);
    CHECK(a.h->degree() == m + 1);
    CHECK(a.h_normalization->coefficients == big({1, 2 * m + 2}));
    CHECK(a.h->at_one() == a.h_normalization->at_one());
    const DegreeComparison c = compare_degrees(a);
    CHECK(c.gap == -m);
  }
}

TEST_CASE("analysis with a fixed degree bound") {
  AnalysisOptions o;
  o.degree_bound = 3;
  const Analysis a = analyze(make_family("rm", 2), o);
  CHECK(a.data.verified_degree == 3);
  CHECK_FALSE(a.h);
  CHECK_THROWS_AS(compare_degrees(a), NotStabilized);
}

TEST_CASE("analysis keeps partial counts on the cap") {
  AnalysisOptions o;
  o.slices.point_cap = 5;
  Analysis partial;
  CHECK_THROWS_AS(analyze(make_family("veronese", 3), o, &partial), CapExceeded);
  CHECK(partial.data.verified_degree >= 1);
  CHECK(partial.data.monoid.counts.size() == static_cast<std::size_t>(partial.data.verified_degree + 1));
}

TEST_CASE("sum identity and joins") {
  const AffineMonoid q = make_family("rm", 1);
  const SumIdentity s = check_sum_identity(q, 8);
  CHECK(s.holds);
  CHECK(s.residuals.size() == 9);

  CHECK(convolve(big({1, 1}), big({1, 1}), 3) == big({1, 2, 1, 0}));
  const JoinCheck j = series_of_join(q, make_family("veronese", 2), 5);
  CHECK(j.monoid_holds);
  CHECK(j.normalization_holds);
  CHECK(j.first_failure == -1);
}

TEST_CASE("codegree in the analysis") {
  const Analysis a = analyze(make_family("veronese", 3));
  // Interior of the cone over a segment starts in degree 1 when the segment has interior points.
  CHECK(a.codegree == 1);
  const Analysis b = analyze(make_family("veronese", 1));
  CHECK(b.codegree == 2);
}
