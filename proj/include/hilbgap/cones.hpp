#pragma once

// Rational polyhedral cones: facets by double description, faces, and exact
// lattice-point enumeration in the degree slices of a graded cone.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hilbgap/exactlin.hpp"

namespace hilbgap {

class NotPositive : public Error {
 public:
  NotPositive(const std::string& what, IntVector witness)
      : Error(Kind::NotPositive, what), witness_(std::move(witness)) {}
  // Nonzero v with v and -v both in the cone.
  const IntVector& witness() const { return witness_; }

 private:
  IntVector witness_;
};

// Inner facet normals (primitive, sorted) of the cone generated by the rows of
// `generators`, which must span Z^cols rationally. The facets are exact for
// any full-dimensional input; pointedness is not required here.
IntMatrix full_dim_facets(const IntMatrix& generators);

// Generators that span extreme rays (one representative per ray).
std::vector<std::size_t> extreme_generators(const IntMatrix& generators, const IntMatrix& facets);

struct Face {
  std::vector<std::size_t> defining_facets;  // indices into RationalCone::facets()
  std::vector<std::size_t> generators;       // indices of cone generators lying on the face
  std::size_t dim = 0;
  Lattice lattice;  // ZF, generated by the generators on the face
};

class RationalCone {
 public:
  // Throws NotPositive (with a lineality witness) when the cone is not pointed.
  static RationalCone from_generators(const IntMatrix& generators);

  std::size_t ambient_dim() const { return generators_.cols(); }
  std::size_t dim() const { return span_.rank(); }
  const IntMatrix& generators() const { return generators_; }
  // Inner normals in ambient coordinates, primitive in Z^ambient_dim; their
  // values on the linear span of the cone are what matter.
  const IntMatrix& facets() const { return ambient_facets_; }
  // Linear equations cutting out the span of the cone.
  const IntMatrix& equations() const { return equations_; }

  bool contains(std::span<const std::int64_t> x) const;
  bool in_relative_interior(std::span<const std::int64_t> x) const;

  // Smallest face containing every row of `points` (which must be in the cone).
  Face face_of(const IntMatrix& points) const;
  Face face_cut_by(const std::vector<std::size_t>& facet_ids) const;
  struct FaceList {
    std::vector<Face> faces;
    bool complete = true;  // false when the cap stopped the enumeration
  };
  // The face spanned by `points` followed by all of its subfaces, sorted by
  // descending dimension, at most `cap` of them.
  FaceList faces_containing(const IntMatrix& points, std::size_t cap = 10000) const;
  FaceList face_lattice(std::size_t cap = 10000) const;

 private:
  std::vector<std::size_t> tight_facets(std::span<const std::int64_t> x) const;
  Face face_with_facets(std::vector<std::size_t> facet_ids) const;

  IntMatrix generators_;
  Lattice span_;  // saturated lattice of the linear span
  IntMatrix equations_;
  IntMatrix coord_facets_;  // facets in span_ coordinates
  IntMatrix ambient_facets_;
};

// Key layout for a degree-bounded slice store: points of degree n are packed
// as sum_i (z_i - n*lo_i) << shift_i with z_1 most significant, so that the
// order of keys is the lexicographic order of (z_1, ..., z_{r-1}) and adding a
// degree-1 element adds a fixed constant.
struct KeyLayout {
  std::vector<std::int64_t> lo;  // per coordinate 1..r-1 (index 0 unused)
  std::vector<unsigned> shift;
  std::vector<unsigned> width;
  unsigned total_bits = 0;
  std::int64_t max_degree = 0;
};

// A full-rank lattice cone with a grading in which every generator has degree
// one. Internally points live in coordinates z in Z^r with z_0 = degree,
// obtained from lattice coordinates by a unimodular change of basis.
class GradedCone {
 public:
  GradedCone() = default;
  // generators: rows in coordinates of `lattice`; grading: integer functional
  // on those coordinates with value 1 on every generator.
  GradedCone(Lattice lattice, const IntMatrix& generators, IntVector grading);

  std::size_t rank() const { return rank_; }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& generators_z() const { return gens_z_; }
  const IntMatrix& facets_z() const { return facets_z_; }

  IntVector to_ambient(std::span<const std::int64_t> z) const;
  std::optional<IntVector> from_ambient(std::span<const std::int64_t> x) const;
  bool contains_z(std::span<const std::int64_t> z) const;

  // Visits the lattice points of degree n (strictly inside every facet when
  // interior) in lexicographic order of z.
  void enumerate(std::int64_t degree, bool interior,
                 const std::function<void(std::span<const std::int64_t>)>& visit) const;
  BigInt count(std::int64_t degree, bool interior) const;

  // Calls run(z, lo, hi) once per maximal run of lattice points sharing the
  // prefix z_0..z_{r-2}; the run covers z_{r-1} in [lo, hi].
  template <class Run>
  void for_each_run(std::int64_t degree, bool interior, Run&& run) const;
  template <class Visit>
  void for_each_point(std::int64_t degree, bool interior, Visit&& visit) const {
    for_each_run(degree, interior, [&](std::span<std::int64_t> z, std::int64_t lo, std::int64_t hi) {
      for (std::int64_t v = lo; v <= hi; ++v) {
        z[rank_ - 1] = v;
        visit(std::span<const std::int64_t>(z));
      }
    });
  }

  // Smallest layout covering every degree up to max_degree.
  KeyLayout key_layout(std::int64_t max_degree) const;

 private:
  struct Level {
    // Facets of the projection onto z_0..z_j having a nonzero z_j coefficient,
    // stored as rows of length j+1.
    IntMatrix facets;
  };
  template <class Run>
  void descend(std::size_t j, std::vector<std::int64_t>& z, std::vector<std::int64_t>& acc, std::int64_t strict,
               Run& run) const;
  void check_range(std::int64_t degree) const;

  Lattice lattice_;
  std::size_t rank_ = 0;
  IntMatrix u_;      // z = u_ * c
  IntMatrix to_ambient_;  // x = to_ambient_ * z
  IntMatrix gens_z_;
  IntMatrix facets_z_;
  std::vector<Level> levels_;  // index j = 1..rank-1
  std::vector<std::int64_t> lo_, hi_;
  // Flattened level facets: coef_[t][idx] is the z_t coefficient of facet idx,
  // level j owning indices [level_offset_[j], level_offset_[j+1]).
  std::vector<std::size_t> level_offset_;
  std::size_t total_facets_ = 0;
  std::vector<std::vector<std::int64_t>> coef_;
  std::int64_t max_coef_sum_ = 0;
  std::int64_t max_coord_ = 0;
};

template <class Run>
void GradedCone::for_each_run(std::int64_t degree, bool interior, Run&& run) const {
  if (degree < 0) return;
  check_range(degree);
  const std::int64_t strict = interior ? 1 : 0;
  std::vector<std::int64_t> z(rank_, 0);
  z[0] = degree;
  if (rank_ == 1) {
    if (degree >= strict) run(std::span<std::int64_t>(z), degree, degree);
    return;
  }
  std::vector<std::int64_t> acc(rank_ * total_facets_);
  for (std::size_t idx = 0; idx < total_facets_; ++idx) acc[idx] = coef_[0][idx] * degree;
  descend(1, z, acc, strict, run);
}

template <class Run>
void GradedCone::descend(std::size_t j, std::vector<std::int64_t>& z, std::vector<std::int64_t>& acc,
                         std::int64_t strict, Run& run) const {
  const std::int64_t* prev = acc.data() + (j - 1) * total_facets_;
  const auto& cj = coef_[j];
  std::int64_t lo = INT64_MIN / 4, hi = INT64_MAX / 4;
  for (std::size_t idx = level_offset_[j]; idx < level_offset_[j + 1]; ++idx) {
    const std::int64_t a = cj[idx];
    if (a > 0) {
      lo = std::max(lo, ceil_div(strict - prev[idx], a));
    } else {
      hi = std::min(hi, floor_div(prev[idx] - strict, -a));
    }
  }
  if (lo > hi) return;
  if (j + 1 == rank_) {
    run(std::span<std::int64_t>(z), lo, hi);
    return;
  }
  std::int64_t* cur = acc.data() + j * total_facets_;
  const std::size_t from = level_offset_[j + 1];
  for (std::size_t idx = from; idx < total_facets_; ++idx) cur[idx] = prev[idx] + cj[idx] * lo;
  for (std::int64_t v = lo; v <= hi; ++v) {
    z[j] = v;
    descend(j + 1, z, acc, strict, run);
    for (std::size_t idx = from; idx < total_facets_; ++idx) cur[idx] += cj[idx];
  }
}

// Lattice polytope with the lattice in which its dilations are counted, given
// in homogenized coordinates (x, t) in Z^{N+1}.
class LatticePolytope {
 public:
  // Full Ehrhart convention: the saturated lattice of the affine hull.
  static LatticePolytope ehrhart(const IntMatrix& points);
  // Counting lattice supplied explicitly; it must contain every lifted vertex.
  static LatticePolytope with_lattice(const IntMatrix& points, Lattice homogenized);

  std::size_t ambient_dim() const { return vertices_.cols(); }
  std::size_t dim() const { return cone_.rank() - 1; }
  const IntMatrix& vertices() const { return vertices_; }
  const Lattice& lattice() const { return cone_.lattice(); }
  const GradedCone& cone() const { return cone_; }

 private:
  IntMatrix vertices_;
  GradedCone cone_;
};

IntMatrix lift(const IntMatrix& points);  // appends a coordinate 1

std::vector<IntVector> dilation_lattice_points(const LatticePolytope& p, std::int64_t ell, bool interior_only);
// Smallest ell <= cap with an interior lattice point in ell*P; nullopt beyond.
std::optional<std::int64_t> codegree(const LatticePolytope& p, std::int64_t cap);

}  // namespace hilbgap
