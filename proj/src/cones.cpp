#include "hilbgap/cones.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace hilbgap {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <class T>
struct Ray {
  std::vector<T> normal;
  Bits tight;
};

template <class T>
T eval(const std::vector<T>& a, std::span<const std::int64_t> g) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * T(g[i]);
  return s;
}

template <class T>
void normalize(std::vector<T>& a) {
  T g = 0;
  for (const auto& x : a) g = gcd_of(g, x);
  if (!is_zero(g) && g != T(1))
    for (auto& x : a) x /= g;
}

std::vector<std::size_t> independent_rows(const IntMatrix& m) {
  std::vector<std::size_t> picked;
  IntMatrix acc(0, m.cols());
  for (std::size_t i = 0; i < m.rows() && picked.size() < m.cols(); ++i) {
    acc.append_row(m.row(i));
    if (rank(acc) == acc.rows()) {
      picked.push_back(i);
    } else {
      acc.resize_rows(acc.rows() - 1);
    }
  }
  return picked;
}

// Double description: extreme rays of the dual cone {a : a.g >= 0}, inserting
// generators one at a time on top of a simplicial start.
template <class T>
IntMatrix double_description(const IntMatrix& gens) {
  const std::size_t r = gens.cols();
  const std::size_t s = gens.rows();
  std::vector<std::size_t> start = independent_rows(gens);
  if (start.size() != r) throw InvalidInput("generators do not span the ambient space");

  std::vector<Ray<T>> rays;
  {
    BigMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b(i, j) = BigInt(static_cast<long>(gens(start[i], j)));
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<BigInt> e(r, 0);
      e[i] = 1;
      auto x = solve_rational(b, e);
      BigInt den = 1;
      for (const auto& q : *x) den = lcm(den, BigInt(q.get_den()));
      Ray<T> ray{std::vector<T>(r), Bits(s)};
      for (std::size_t j = 0; j < r; ++j) {
        BigInt v = BigInt((*x)[j] * den);
        if constexpr (std::is_same_v<T, BigInt>) {
          ray.normal[j] = v;
        } else {
          ray.normal[j] = T(to_int64(v));
        }
      }
      normalize(ray.normal);
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) ray.tight.set(start[j]);
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> used(s, false);
  for (auto i : start) used[i] = true;
  for (std::size_t gi = 0; gi < s; ++gi) {
    if (used[gi]) continue;
    used[gi] = true;
    const auto g = gens.row(gi);
    std::vector<T> vals(rays.size());
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      vals[k] = eval(rays[k].normal, g);
      int sg = sign_of(vals[k]);
      (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(k);
    }
    for (auto k : zero) rays[k].tight.set(gi);
    if (neg.empty()) continue;

    std::vector<Ray<T>> next;
    next.reserve(pos.size() + zero.size());
    for (auto k : pos) next.push_back(rays[k]);
    for (auto k : zero) next.push_back(rays[k]);
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].tight & rays[n].tight;
        if (r >= 2 && common.count() < r - 2) continue;
        bool adjacent = true;
        for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
          if (c == p || c == n) continue;
          if (common.subset_of(rays[c].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray<T> fresh{std::vector<T>(r), common};
        const T vp = vals[p];
        const T vn = -vals[n];
        for (std::size_t j = 0; j < r; ++j) fresh.normal[j] = vp * rays[n].normal[j] + vn * rays[p].normal[j];
        normalize(fresh.normal);
        fresh.tight.set(gi);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> rows;
  rows.reserve(rays.size());
  for (const auto& ray : rays) {
    IntVector v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = to_int64(ray.normal[j]);
    rows.push_back(std::move(v));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return IntMatrix::from_rows(rows, r);
}

IntVector column_prefix(std::span<const std::int64_t> row, std::size_t len) {
  return IntVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(len));
}

}  // namespace

IntMatrix full_dim_facets(const IntMatrix& generators) {
  try {
    return double_description<Checked>(generators);
  } catch (const OverflowError&) {
    return double_description<BigInt>(generators);
  }
}

std::vector<std::size_t> extreme_generators(const IntMatrix& generators, const IntMatrix& facets) {
  const std::size_t r = generators.cols();
  std::vector<std::size_t> out;
  std::vector<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    IntMatrix tight(0, r);
    std::vector<std::size_t> ids;
    bool nonzero = false;
    for (auto x : generators.row(i)) nonzero |= (x != 0);
    if (!nonzero) continue;
    for (std::size_t f = 0; f < facets.rows(); ++f)
      if (dot(facets.row(f), generators.row(i)) == 0) {
        tight.append_row(facets.row(f));
        ids.push_back(f);
      }
    if (r == 0 || rank(tight) != r - 1) continue;
    if (std::find(seen.begin(), seen.end(), ids) != seen.end()) continue;
    seen.push_back(ids);
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------- RationalCone

RationalCone RationalCone::from_generators(const IntMatrix& generators) {
  if (generators.empty()) throw InvalidInput("cone needs at least one generator");
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    bool nonzero = false;
    for (auto x : generators.row(i)) nonzero |= (x != 0);
    if (!nonzero) throw InvalidInput("zero generator");
  }
  RationalCone c;
  const std::size_t n = generators.cols();
  c.generators_ = generators;
  c.equations_ = integer_kernel(generators);
  c.span_ = c.equations_.empty() ? Lattice::full(n) : Lattice::generated_by(integer_kernel(c.equations_));
  const std::size_t d = c.span_.rank();

  IntMatrix coords(0, d);
  for (std::size_t i = 0; i < generators.rows(); ++i) coords.append_row(*c.span_.coordinates(generators.row(i)));
  c.coord_facets_ = full_dim_facets(coords);
  if (rank(c.coord_facets_) != d) {
    IntMatrix ker = integer_kernel(c.coord_facets_);
    throw NotPositive("cone is not pointed", c.span_.point(ker.row(0)));
  }

  // Ambient representative of each facet inside the span: w = B^T y with
  // (B B^T) y = sigma, scaled to a primitive integer vector.
  const IntMatrix& b = c.span_.basis();
  BigMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = BigInt(static_cast<long>(dot(b.row(i), b.row(j))));
  c.ambient_facets_ = IntMatrix(0, n);
  for (std::size_t f = 0; f < c.coord_facets_.rows(); ++f) {
    std::vector<BigInt> rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = BigInt(static_cast<long>(c.coord_facets_(f, i)));
    auto y = solve_rational(gram, rhs);
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < n; ++k) w[k] += (*y)[i] * b(i, k);
    BigInt den = 1;
    for (const auto& q : w) den = lcm(den, BigInt(q.get_den()));
    IntVector row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = to_int64(BigInt(w[k] * den));
    c.ambient_facets_.append_row(make_primitive(std::move(row)));
  }
  return c;
}

bool RationalCone::contains(std::span<const std::int64_t> x) const {
  if (x.size() != ambient_dim()) throw DimensionMismatch("point length does not match cone ambient dimension");
  for (std::size_t i = 0; i < equations_.rows(); ++i)
    if (dot(equations_.row(i), x) != 0) return false;
  for (std::size_t f = 0; f < ambient_facets_.rows(); ++f)
    if (dot(ambient_facets_.row(f), x) < 0) return false;
  return true;
}

bool RationalCone::in_relative_interior(std::span<const std::int64_t> x) const {
  if (!contains(x)) return false;
  for (std::size_t f = 0; f < ambient_facets_.rows(); ++f)
    if (dot(ambient_facets_.row(f), x) == 0) return false;
  return true;
}

std::vector<std::size_t> RationalCone::tight_facets(std::span<const std::int64_t> x) const {
  std::vector<std::size_t> ids;
  for (std::size_t f = 0; f < ambient_facets_.rows(); ++f)
    if (dot(ambient_facets_.row(f), x) == 0) ids.push_back(f);
  return ids;
}

Face RationalCone::face_with_facets(std::vector<std::size_t> facet_ids) const {
  Face face;
  IntMatrix on(0, ambient_dim());
  for (std::size_t i = 0; i < generators_.rows(); ++i) {
    bool tight = true;
    for (auto f : facet_ids)
      if (dot(ambient_facets_.row(f), generators_.row(i)) != 0) {
        tight = false;
        break;
      }
    if (tight) {
      face.generators.push_back(i);
      on.append_row(generators_.row(i));
    }
  }
  // Canonical description: every facet containing all generators of the face.
  for (std::size_t f = 0; f < ambient_facets_.rows(); ++f) {
    bool all = true;
    for (auto i : face.generators)
      if (dot(ambient_facets_.row(f), generators_.row(i)) != 0) {
        all = false;
        break;
      }
    if (all) face.defining_facets.push_back(f);
  }
  face.lattice = Lattice::generated_by(on);
  face.dim = face.lattice.rank();
  return face;
}

Face RationalCone::face_of(const IntMatrix& points) const {
  std::vector<std::size_t> ids;
  for (std::size_t f = 0; f < ambient_facets_.rows(); ++f) ids.push_back(f);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (!contains(points.row(i))) throw InvalidInput("face query point lies outside the cone");
    auto t = tight_facets(points.row(i));
    std::vector<std::size_t> keep;
    std::set_intersection(ids.begin(), ids.end(), t.begin(), t.end(), std::back_inserter(keep));
    ids = std::move(keep);
  }
  return face_with_facets(std::move(ids));
}

Face RationalCone::face_cut_by(const std::vector<std::size_t>& facet_ids) const {
  for (auto f : facet_ids)
    if (f >= ambient_facets_.rows()) throw InvalidInput("facet index out of range");
  std::vector<std::size_t> ids = facet_ids;
  std::sort(ids.begin(), ids.end());
  return face_with_facets(std::move(ids));
}

RationalCone::FaceList RationalCone::faces_containing(const IntMatrix& points, std::size_t cap) const {
  FaceList out;
  std::set<std::vector<std::size_t>> seen;
  std::deque<Face> queue;
  Face top = face_of(points);
  seen.insert(top.defining_facets);
  queue.push_back(std::move(top));
  while (!queue.empty()) {
    if (out.faces.size() >= cap) {
      out.complete = false;
      break;
    }
    Face f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t s = 0; s < ambient_facets_.rows(); ++s) {
      if (std::binary_search(f.defining_facets.begin(), f.defining_facets.end(), s)) continue;
      auto ids = f.defining_facets;
      ids.insert(std::lower_bound(ids.begin(), ids.end(), s), s);
      Face child = face_with_facets(std::move(ids));
      if (seen.insert(child.defining_facets).second) queue.push_back(std::move(child));
    }
    out.faces.push_back(std::move(f));
  }
  std::stable_sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) { return a.dim > b.dim; });
  return out;
}

RationalCone::FaceList RationalCone::face_lattice(std::size_t cap) const { return faces_containing(generators_, cap); }

// ----------------------------------------------------------------- GradedCone

GradedCone::GradedCone(Lattice lattice, const IntMatrix& generators, IntVector grading)
    : lattice_(std::move(lattice)), rank_(lattice_.rank()) {
  if (rank_ == 0) throw InvalidInput("graded cone of rank zero");
  if (generators.cols() != rank_ || grading.size() != rank_)
    throw DimensionMismatch("generator coordinates do not match lattice rank");
  for (std::size_t i = 0; i < generators.rows(); ++i)
    if (dot(grading, generators.row(i)) != 1) throw InvalidInput("generator is not of degree one");

  u_ = unimodular_completion(grading);
  IntMatrix u_inv = inverse_unimodular(u_);
  to_ambient_ = multiply(lattice_.basis().transposed(), u_inv);
  gens_z_ = IntMatrix(0, rank_);
  for (std::size_t i = 0; i < generators.rows(); ++i) gens_z_.append_row(multiply(u_, generators.row(i)));
  facets_z_ = full_dim_facets(gens_z_);

  levels_.assign(rank_, Level{});
  lo_.assign(rank_, 0);
  hi_.assign(rank_, 0);
  for (std::size_t j = 1; j < rank_; ++j) {
    IntMatrix projected_facets;
    if (j + 1 == rank_) {
      projected_facets = facets_z_;
    } else {
      std::vector<IntVector> rows;
      for (std::size_t i = 0; i < gens_z_.rows(); ++i) rows.push_back(column_prefix(gens_z_.row(i), j + 1));
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      projected_facets = full_dim_facets(IntMatrix::from_rows(rows, j + 1));
    }
    levels_[j].facets = IntMatrix(0, j + 1);
    for (std::size_t f = 0; f < projected_facets.rows(); ++f)
      if (projected_facets(f, j) != 0) levels_[j].facets.append_row(projected_facets.row(f));
    lo_[j] = hi_[j] = gens_z_(0, j);
    for (std::size_t i = 1; i < gens_z_.rows(); ++i) {
      lo_[j] = std::min(lo_[j], gens_z_(i, j));
      hi_[j] = std::max(hi_[j], gens_z_(i, j));
    }
  }

  level_offset_.assign(rank_ + 1, 0);
  for (std::size_t j = 1; j < rank_; ++j) level_offset_[j + 1] = level_offset_[j] + levels_[j].facets.rows();
  total_facets_ = level_offset_[rank_];
  coef_.assign(rank_, std::vector<std::int64_t>(total_facets_, 0));
  for (std::size_t j = 1; j < rank_; ++j)
    for (std::size_t f = 0; f < levels_[j].facets.rows(); ++f)
      for (std::size_t t = 0; t <= j; ++t) coef_[t][level_offset_[j] + f] = levels_[j].facets(f, t);
  for (std::size_t idx = 0; idx < total_facets_; ++idx) {
    std::int64_t s = 0;
    for (std::size_t t = 0; t < rank_; ++t) s += std::abs(coef_[t][idx]);
    max_coef_sum_ = std::max(max_coef_sum_, s);
  }
  for (std::size_t j = 1; j < rank_; ++j)
    max_coord_ = std::max({max_coord_, std::abs(lo_[j]), std::abs(hi_[j])});
}

IntVector GradedCone::to_ambient(std::span<const std::int64_t> z) const { return multiply(to_ambient_, z); }

std::optional<IntVector> GradedCone::from_ambient(std::span<const std::int64_t> x) const {
  auto c = lattice_.coordinates(x);
  if (!c) return std::nullopt;
  return multiply(u_, *c);
}

bool GradedCone::contains_z(std::span<const std::int64_t> z) const {
  for (std::size_t f = 0; f < facets_z_.rows(); ++f)
    if (dot(facets_z_.row(f), z) < 0) return false;
  return true;
}

void GradedCone::check_range(std::int64_t degree) const {
  // Every partial facet sum is bounded by max_coef_sum * degree * max(1, max_coord).
  const long double bound = static_cast<long double>(max_coef_sum_) * static_cast<long double>(degree) *
                            static_cast<long double>(std::max<std::int64_t>(1, max_coord_));
  if (bound > 4.0e18L) throw OverflowError("degree too large for 64-bit slice enumeration");
}

void GradedCone::enumerate(std::int64_t degree, bool interior,
                           const std::function<void(std::span<const std::int64_t>)>& visit) const {
  for_each_point(degree, interior, [&](std::span<const std::int64_t> z) { visit(z); });
}

BigInt GradedCone::count(std::int64_t degree, bool interior) const {
  std::uint64_t total = 0;
  for_each_run(degree, interior, [&](std::span<std::int64_t>, std::int64_t lo, std::int64_t hi) {
    total += static_cast<std::uint64_t>(hi - lo + 1);
  });
  return BigInt(static_cast<unsigned long>(total));
}

KeyLayout GradedCone::key_layout(std::int64_t max_degree) const {
  KeyLayout k;
  k.max_degree = max_degree;
  k.lo = lo_;
  k.shift.assign(rank_, 0);
  k.width.assign(rank_, 0);
  unsigned shift = 0;
  for (std::size_t j = rank_; j-- > 1;) {
    const auto span = static_cast<std::uint64_t>(hi_[j] - lo_[j]) * static_cast<std::uint64_t>(max_degree);
    k.width[j] = static_cast<unsigned>(std::bit_width(span));
    k.shift[j] = shift;
    shift += k.width[j];
  }
  k.total_bits = shift;
  return k;
}

// ------------------------------------------------------------ LatticePolytope

IntMatrix lift(const IntMatrix& points) {
  IntMatrix out(points.rows(), points.cols() + 1);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    for (std::size_t j = 0; j < points.cols(); ++j) out(i, j) = points(i, j);
    out(i, points.cols()) = 1;
  }
  return out;
}

namespace {

Lattice saturated_span(const IntMatrix& rows) {
  IntMatrix eq = integer_kernel(rows);
  if (eq.empty()) return Lattice::full(rows.cols());
  return Lattice::generated_by(integer_kernel(eq));
}

}  // namespace

LatticePolytope LatticePolytope::ehrhart(const IntMatrix& points) {
  return with_lattice(points, saturated_span(lift(points)));
}

LatticePolytope LatticePolytope::with_lattice(const IntMatrix& points, Lattice homogenized) {
  if (points.empty()) throw InvalidInput("polytope needs at least one point");
  const IntMatrix lifted = lift(points);
  if (homogenized.ambient_dim() != lifted.cols()) throw DimensionMismatch("lattice must live in Z^{N+1}");
  if (homogenized.rank() != rank(lifted)) throw InvalidInput("counting lattice rank differs from polytope dimension + 1");
  IntMatrix coords(0, homogenized.rank());
  for (std::size_t i = 0; i < lifted.rows(); ++i) {
    auto c = homogenized.coordinates(lifted.row(i));
    if (!c) throw InvalidInput("polytope vertex is not in the counting lattice");
    coords.append_row(*c);
  }
  IntVector grading(homogenized.rank());
  for (std::size_t i = 0; i < grading.size(); ++i) grading[i] = homogenized.basis()(i, points.cols());
  LatticePolytope p;
  p.cone_ = GradedCone(std::move(homogenized), coords, make_primitive(grading));
  auto ext = extreme_generators(p.cone_.generators_z(), p.cone_.facets_z());
  std::vector<IntVector> verts;
  for (auto i : ext) verts.push_back(points.row_vector(i));
  std::sort(verts.begin(), verts.end());
  p.vertices_ = IntMatrix::from_rows(verts, points.cols());
  return p;
}

std::vector<IntVector> dilation_lattice_points(const LatticePolytope& p, std::int64_t ell, bool interior_only) {
  if (ell < 0) throw InvalidInput("dilation factor must be nonnegative");
  std::vector<IntVector> out;
  p.cone().for_each_point(ell, interior_only, [&](std::span<const std::int64_t> z) {
    IntVector x = p.cone().to_ambient(z);
    x.pop_back();
    out.push_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::int64_t> codegree(const LatticePolytope& p, std::int64_t cap) {
  if (cap < 1) throw InvalidInput("codegree cap must be at least 1");
  for (std::int64_t ell = 1; ell <= cap; ++ell)
    if (sgn(p.cone().count(ell, true)) > 0) return ell;
  return std::nullopt;
}

}  // namespace hilbgap
