#include "hilbgap/monoid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hilbgap/graphs.hpp"

namespace hilbgap {

namespace {

IntVector difference(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (Checked(a[i]) - Checked(b[i])).value();
  return out;
}

bool is_zero_vector(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Depth-first search for a decomposition of x over `gens`, whose positive
// weights strictly decrease along every step. Failed points are memoized.
class Decomposer {
 public:
  Decomposer(const RationalCone& cone, const IntMatrix& gens) : cone_(cone), gens_(gens) {}

  bool reachable(const IntVector& x) {
    if (is_zero_vector(x)) return true;
    if (failed_.count(x)) return false;
    for (std::size_t i = 0; i < gens_.rows(); ++i) {
      IntVector rest = difference(x, gens_.row(i));
      if (!cone_.contains(rest)) continue;
      if (reachable(rest)) return true;
    }
    failed_.insert(x);
    return false;
  }

 private:
  const RationalCone& cone_;
  const IntMatrix& gens_;
  std::set<IntVector> failed_;
};

IntMatrix dedupe_rows(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return IntMatrix::from_rows(rows, m.cols());
}

void validate(const IntMatrix& gens) {
  if (gens.empty()) throw InvalidInput("generator list is empty");
  if (gens.cols() == 0) throw InvalidInput("generators have length zero");
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (is_zero_vector(gens.row(i))) throw InvalidInput("zero generator");
}

}  // namespace

IntMatrix minimal_generators(const IntMatrix& generators) {
  validate(generators);
  const IntMatrix gens = dedupe_rows(generators);
  const RationalCone cone = RationalCone::from_generators(gens);
  IntVector weight(gens.cols(), 0);
  for (std::size_t f = 0; f < cone.facets().rows(); ++f)
    for (std::size_t j = 0; j < gens.cols(); ++j) weight[j] += cone.facets()(f, j);
  std::vector<std::pair<std::int64_t, std::size_t>> order;
  for (std::size_t i = 0; i < gens.rows(); ++i) order.emplace_back(dot(weight, gens.row(i)), i);
  std::sort(order.begin(), order.end());

  IntMatrix kept(0, gens.cols());
  for (const auto& [w, i] : order) {
    Decomposer search(cone, kept);
    if (!search.reachable(gens.row_vector(i))) kept.append_row(gens.row(i));
  }
  return dedupe_rows(kept);
}

AffineMonoid AffineMonoid::from_generators(const IntMatrix& generators) {
  AffineMonoid q;
  q.generators_ = minimal_generators(generators);
  const IntMatrix& g = q.generators_;
  q.cone_ = RationalCone::from_generators(g);
  q.lattice_ = Lattice::generated_by(g);

  BigMatrix a = to_big(g);
  auto lambda = solve_rational(a, std::vector<BigInt>(g.rows(), BigInt(1)));
  if (!lambda) throw NotHomogeneous("generators do not lie on a common hyperplane off the origin");
  BigInt den = 1;
  for (const auto& x : *lambda) den = lcm(den, BigInt(x.get_den()));
  q.grading_.resize(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) q.grading_[j] = to_int64(BigInt((*lambda)[j] * den));
  q.grading_den_ = to_int64(den);

  const std::size_t d = q.lattice_.rank();
  IntMatrix coords(0, d);
  for (std::size_t i = 0; i < g.rows(); ++i) coords.append_row(*q.lattice_.coordinates(g.row(i)));
  IntVector ell(d);
  for (std::size_t i = 0; i < d; ++i) ell[i] = q.degree(q.lattice_.basis().row(i));
  q.graded_ = GradedCone(q.lattice_, coords, ell);
  return q;
}

AffineMonoid new_monoid(const IntMatrix& generators) { return AffineMonoid::from_generators(generators); }

std::int64_t AffineMonoid::degree(std::span<const std::int64_t> x) const {
  if (x.size() != ambient_dim()) throw DimensionMismatch("vector length does not match monoid ambient dimension");
  if (!lattice_.contains(x)) throw InvalidInput("vector is not in the group of the monoid");
  const std::int64_t v = dot(grading_, x);
  if (v % grading_den_ != 0) throw InvalidInput("vector has fractional degree");
  return v / grading_den_;
}

bool AffineMonoid::contains(std::span<const std::int64_t> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length does not match monoid ambient dimension");
  if (!lattice_.contains(v) || !cone_.contains(v)) return false;
  Decomposer search(cone_, generators_);
  return search.reachable(IntVector(v.begin(), v.end()));
}

DegreeSlices degree_slices(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options) {
  if (max_degree < 0) throw InvalidInput("degree bound must be nonnegative");
  SliceOptions opts = options;
  opts.keep_holes = false;
  SliceSweep sweep(q.graded_cone(), max_degree, opts);
  DegreeSlices out;
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    sweep.advance();
    std::vector<IntVector> pts;
    for (const auto& z : sweep.monoid_slice()) pts.push_back(q.graded_cone().to_ambient(z));
    std::sort(pts.begin(), pts.end());
    out.points.push_back(std::move(pts));
  }
  out.count.counts = sweep.monoid_counts();
  out.count.verified_degree = max_degree;
  return out;
}

AffineMonoid join(const AffineMonoid& q, const AffineMonoid& q2) {
  const std::size_t d = q.ambient_dim(), d2 = q2.ambient_dim();
  IntMatrix g(0, d + d2 + 1);
  for (std::size_t i = 0; i < q.generators().rows(); ++i) {
    IntVector row(d + d2 + 1, 0);
    std::copy(q.generators().row(i).begin(), q.generators().row(i).end(), row.begin());
    g.append_row(row);
  }
  for (std::size_t i = 0; i < q2.generators().rows(); ++i) {
    IntVector row(d + d2 + 1, 0);
    std::copy(q2.generators().row(i).begin(), q2.generators().row(i).end(), row.begin() + static_cast<std::ptrdiff_t>(d));
    row.back() = 1;
    g.append_row(row);
  }
  return new_monoid(g);
}

AffineMonoid make_family(std::string_view name, std::int64_t param) {
  if (name == "gk") {
    if (param < 1) throw InvalidInput("gk needs k >= 1");
    return edge_monoid(gk_graph(param));
  }
  if (name == "rm") {
    if (param < 0) throw InvalidInput("rm needs m >= 0");
    const std::int64_t m = param;
    return new_monoid(IntMatrix{{0, 2 * m + 3}, {m + 1, m + 2}, {m + 2, m + 1}, {2 * m + 3, 0}});
  }
  if (name == "veronese") {
    if (param < 1) throw InvalidInput("veronese needs n >= 1");
    IntMatrix g(0, 2);
    for (std::int64_t i = 0; i <= param; ++i) g.append_row(IntVector{i, param - i});
    return new_monoid(g);
  }
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected gk, rm or veronese)");
}

}  // namespace hilbgap
