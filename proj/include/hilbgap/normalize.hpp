#pragma once

// The normalization Q̄ = ZQ ∩ cone(Q): its slices and Hilbert basis, holes
// Q̄ \ Q, families of holes, the Serre (S2) verdict and a depth estimate.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbgap/monoid.hpp"

namespace hilbgap {

// Counts of Q, Q̄ and the holes through verified_degree, plus the holes
// themselves in z coordinates of the monoid's graded cone.
struct GradedData {
  std::int64_t verified_degree = -1;
  GradedCount monoid, normalization, holes;
  std::vector<std::vector<IntVector>> hole_z;
  bool holes_complete = false;
};

// Sweeps degrees 0..max_degree, stopping early once `done` returns true.
// On CapExceeded the exception propagates; `partial` (if given) receives the
// data through the last completed degree.
GradedData sweep_monoid(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options = {},
                        const std::function<bool(const GradedData&)>& done = {}, GradedData* partial = nullptr);

DegreeSlices normalization_slices(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options = {});

struct HilbertBasis {
  IntMatrix elements;                // ambient coordinates, ordered by degree then lexicographically
  std::vector<std::int64_t> degrees;
  std::int64_t certified_degree = 0;  // Q̄ regenerated from the basis through this degree
};
// certificate_bound < 0 selects dim + 1. Throws Error(Certificate) naming the
// first element of Q̄ that the basis fails to generate.
HilbertBasis hilbert_basis(const AffineMonoid& q, std::int64_t certificate_bound = -1, const SliceOptions& options = {});

bool is_normal(const AffineMonoid& q, const SliceOptions& options = {});
// Lattice points of P at height one generate the full lattice of its affine
// hull (all Smith invariant factors equal one).
bool is_spanning(const LatticePolytope& p);

struct HoleSlices {
  std::vector<std::vector<IntVector>> points;  // ambient coordinates, sorted
  GradedCount count;
};
HoleSlices holes_up_to(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options = {});

struct HoleFamily {
  IntVector base;  // ambient coordinates
  std::int64_t base_degree = 0;
  Face face;       // face of q.cone()
  std::int64_t coverage = 0;  // members verified through this degree
};

struct FamilyReport {
  std::vector<HoleFamily> families;
  std::int64_t coverage_degree = -1;  // holes through this degree were examined
  std::size_t holes_examined = 0;
  std::vector<IntVector> uncovered;   // ambient coordinates
  bool holes_beyond_coverage = false;  // holes exist in (coverage_degree, verified_degree]
};

// margin < 0 selects dim(q).
FamilyReport infer_hole_families(const AffineMonoid& q, const GradedData& data, std::int64_t margin = -1);
FamilyReport infer_hole_families(const AffineMonoid& q, std::int64_t max_degree, std::int64_t margin = -1,
                                 const SliceOptions& options = {});

enum class S2Status { consistent, violated, inconclusive };
std::string to_string(S2Status s);

struct S2Verdict {
  S2Status status = S2Status::inconclusive;
  std::optional<HoleFamily> witness;  // a family of dimension below dim - 1
};
S2Verdict s2_verdict(const AffineMonoid& q, const FamilyReport& report);
S2Verdict s2_verdict(const AffineMonoid& q, std::int64_t max_degree, std::int64_t margin = -1,
                     const SliceOptions& options = {});

// dim F + 1 when a single family covers every examined hole.
std::optional<std::int64_t> depth_estimate(const FamilyReport& report);

}  // namespace hilbgap
