#pragma once

// Homogeneous positive affine monoids: construction from generators, the
// degree grading, graded enumeration, membership, joins and named families.

#include <cstdint>
#include <string_view>
#include <vector>

#include "hilbgap/cones.hpp"
#include "hilbgap/slices.hpp"

namespace hilbgap {

struct GradedCount {
  std::vector<BigInt> counts;  // index = degree
  std::int64_t verified_degree = -1;
};

class AffineMonoid {
 public:
  // Validates the generators and reduces them to the minimal system. Throws
  // InvalidInput, NotPositive or NotHomogeneous.
  static AffineMonoid from_generators(const IntMatrix& generators);

  std::size_t ambient_dim() const { return generators_.cols(); }
  std::size_t dim() const { return lattice_.rank(); }
  const IntMatrix& generators() const { return generators_; }  // minimal, sorted
  const Lattice& group_lattice() const { return lattice_; }
  const RationalCone& cone() const { return cone_; }
  const GradedCone& graded_cone() const { return graded_; }

  // deg(x) = grading() . x / grading_denominator(); every generator has degree 1.
  const IntVector& grading() const { return grading_; }
  std::int64_t grading_denominator() const { return grading_den_; }
  // Degree of an element of ZQ; throws InvalidInput outside ZQ.
  std::int64_t degree(std::span<const std::int64_t> x) const;

  bool contains(std::span<const std::int64_t> v) const;

 private:
  IntMatrix generators_;
  Lattice lattice_;
  RationalCone cone_;
  GradedCone graded_;
  IntVector grading_;
  std::int64_t grading_den_ = 1;
};

AffineMonoid new_monoid(const IntMatrix& generators);

// Minimal generating system of the monoid generated by the rows (which need
// not have a common degree). The cone must be pointed.
IntMatrix minimal_generators(const IntMatrix& generators);

struct DegreeSlices {
  std::vector<std::vector<IntVector>> points;  // ambient coordinates, sorted
  GradedCount count;
};
DegreeSlices degree_slices(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options = {});

// Monoid generated by (a, 0, 0) and (0, b, 1) over the generators a of q and
// b of q2.
AffineMonoid join(const AffineMonoid& q, const AffineMonoid& q2);

// "gk" (k >= 1), "rm" (m >= 0) or "veronese" (n >= 1).
AffineMonoid make_family(std::string_view name, std::int64_t param);

}  // namespace hilbgap
