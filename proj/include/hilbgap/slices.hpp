#pragma once

// Degree-by-degree enumeration of a monoid and of its normalization inside a
// graded cone. Points of one degree are stored as sorted integer keys (see
// KeyLayout), so the monoid slice of degree n is the deduplicated merge of the
// previous slice translated by every generator.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hilbgap/cones.hpp"

namespace hilbgap {

struct SliceOptions {
  std::int64_t point_cap = 50'000'000;  // largest single slice held in memory
  bool keep_holes = true;
  std::int64_t hole_cap = 5'000'000;    // holes kept across all degrees
};

// Sweeps n = 0, 1, 2, ... computing |Q_n|, |Q̄_n| and Q̄_n \ Q_n for the
// monoid generated by the cone's generators. Every step checks Q_n ⊆ Q̄_n.
class SliceSweep {
 public:
  SliceSweep(const GradedCone& cone, std::int64_t max_degree, SliceOptions options = {});
  ~SliceSweep();
  SliceSweep(SliceSweep&&) noexcept;
  SliceSweep& operator=(SliceSweep&&) noexcept;

  std::int64_t degree() const;  // last completed degree, -1 before the first step
  std::int64_t max_degree() const;
  void advance();  // throws CapExceeded with completed() == degree()
  void advance_to(std::int64_t degree);

  const std::vector<BigInt>& monoid_counts() const;
  const std::vector<BigInt>& normalization_counts() const;
  const std::vector<BigInt>& hole_counts() const;
  // Holes of each degree in z coordinates, lexicographically sorted. Empty
  // when holes are not kept.
  const std::vector<std::vector<IntVector>>& holes() const;
  bool holes_complete() const;
  // The monoid slice of the current degree, in z coordinates, sorted.
  std::vector<IntVector> monoid_slice() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Q̄_n in z coordinates, sorted.
std::vector<IntVector> normalization_slice_z(const GradedCone& cone, std::int64_t degree);

struct HilbertBasisZ {
  std::vector<IntVector> elements;  // z coordinates; z_0 is the degree
  std::int64_t certified_degree = 0;
  std::optional<IntVector> witness;  // element of Q̄ not generated by `elements`
};

// Irreducible elements of Q̄ of degree <= max_element_degree, then a check that
// they generate Q̄ through certificate_bound.
HilbertBasisZ hilbert_basis_z(const GradedCone& cone, std::int64_t max_element_degree,
                              std::int64_t certificate_bound, const SliceOptions& options = {});

}  // namespace hilbgap
