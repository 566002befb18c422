#pragma once

// Hilbert series numerators from exact counts, degree comparisons between a
// monoid and its normalization, and the count-level identities they satisfy.

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbgap/normalize.hpp"

namespace hilbgap {

struct HPolynomial {
  std::vector<BigInt> coefficients;  // h_0..h_s with h_s != 0
  std::size_t dim = 0;
  std::int64_t verified_degree = -1;
  std::int64_t window = 0;

  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
  BigInt at_one() const;
};

std::int64_t default_window(std::size_t dim);

// d-th finite difference of the counts, one value per verified degree.
std::vector<BigInt> finite_differences(const std::vector<BigInt>& counts, std::size_t d);
// Counts regenerated from a numerator over (1-t)^d through degree `upto`.
std::vector<BigInt> counts_from_numerator(const std::vector<BigInt>& h, std::size_t d, std::int64_t upto);

// Requires the last `window` differences to vanish (window < 0: default).
std::optional<HPolynomial> try_h_polynomial(const GradedCount& counts, std::size_t d, std::int64_t window = -1);
HPolynomial h_polynomial(const GradedCount& counts, std::size_t d, std::int64_t window = -1);  // throws NotStabilized

struct AnalysisOptions {
  std::optional<std::int64_t> degree_bound;  // fixed D; otherwise D grows until both numerators stabilize
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> margin;
  std::optional<std::int64_t> degree_limit;  // ceiling for the adaptive D
  bool families = true;
  SliceOptions slices;
};

struct Analysis {
  std::size_t dim = 0;
  std::int64_t window = 0;
  GradedData data;
  std::optional<HPolynomial> h, h_normalization;
  // Smallest n with a point of Q̄_n interior to the cone, if n <= D.
  std::optional<std::int64_t> codegree;
  std::optional<FamilyReport> families;
  std::optional<S2Verdict> s2;
  std::optional<std::int64_t> depth;
};

// On CapExceeded the thrown exception stands; callers wanting the partial
// counts pass `partial`.
Analysis analyze(const AffineMonoid& q, const AnalysisOptions& options = {}, Analysis* partial = nullptr);

struct DegreeComparison {
  HPolynomial h, h_normalization;
  std::int64_t gap = 0;  // deg h_normalization - deg h
  BigInt h_at_one, h_normalization_at_one;
  S2Verdict s2;
  std::optional<std::int64_t> depth;
};
DegreeComparison compare_degrees(const Analysis& a);  // throws NotStabilized
DegreeComparison compare_degrees(const AffineMonoid& q, const AnalysisOptions& options = {});

struct SumIdentity {
  bool holds = true;
  std::vector<BigInt> residuals;  // count_Q̄ - count_Q - count_holes per degree
};
SumIdentity check_sum_identity(const GradedData& data);
SumIdentity check_sum_identity(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options = {});

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::int64_t upto);

struct JoinCheck {
  bool monoid_holds = true;
  bool normalization_holds = true;
  std::int64_t first_failure = -1;
  std::vector<BigInt> join_counts, predicted_counts;
  std::vector<BigInt> join_normalization_counts, predicted_normalization_counts;
};
JoinCheck series_of_join(const AffineMonoid& q, const AffineMonoid& q2, std::int64_t max_degree,
                         const SliceOptions& options = {});

}  // namespace hilbgap
