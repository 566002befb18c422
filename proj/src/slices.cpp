#include "hilbgap/slices.hpp"

#include <algorithm>
#include <string>

namespace hilbgap {

namespace {

using u128 = unsigned __int128;

BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

template <class Key>
struct Codec {
  KeyLayout layout;
  std::size_t r = 0;
  std::vector<Key> mask;

  Codec(KeyLayout l, std::size_t rank) : layout(std::move(l)), r(rank), mask(rank, 0) {
    for (std::size_t j = 1; j < r; ++j) {
      const unsigned w = layout.width[j];
      mask[j] = w >= sizeof(Key) * 8 ? ~Key(0) : (Key(1) << w) - 1;
    }
  }

  Key encode(std::span<const std::int64_t> z) const {
    const std::int64_t n = z[0];
    Key k = 0;
    for (std::size_t j = 1; j < r; ++j) k |= Key(static_cast<std::uint64_t>(z[j] - n * layout.lo[j])) << layout.shift[j];
    return k;
  }

  // Key increment caused by adding h (of degree h[0]) to any point.
  Key offset(std::span<const std::int64_t> h) const { return encode(h); }

  IntVector decode(Key k, std::int64_t n) const {
    IntVector z(r);
    z[0] = n;
    for (std::size_t j = 1; j < r; ++j)
      z[j] = static_cast<std::int64_t>(static_cast<std::uint64_t>((k >> layout.shift[j]) & mask[j])) + n * layout.lo[j];
    return z;
  }
};

template <class Key>
struct Stream {
  const std::vector<Key>* src;
  Key delta;
};

// Emits the union of the translated streams in increasing order, once each.
template <class Key, class Emit>
void merge_unique(const std::vector<Stream<Key>>& streams, Emit&& emit) {
  struct Head {
    Key v;
    std::size_t s;
    std::size_t i;
  };
  std::vector<Head> heap;
  heap.reserve(streams.size());
  for (std::size_t s = 0; s < streams.size(); ++s)
    if (!streams[s].src->empty()) heap.push_back({(*streams[s].src)[0] + streams[s].delta, s, 0});
  auto less = [](const Head& a, const Head& b) { return a.v > b.v; };
  std::make_heap(heap.begin(), heap.end(), less);
  bool any = false;
  Key last = 0;
  while (!heap.empty()) {
    Head& top = heap.front();
    if (!any || top.v != last) {
      emit(top.v);
      last = top.v;
      any = true;
    }
    const auto& src = *streams[top.s].src;
    if (++top.i < src.size()) {
      top.v = src[top.i] + streams[top.s].delta;
      // sift the root down
      std::size_t pos = 0;
      const std::size_t size = heap.size();
      Head moving = heap[0];
      while (true) {
        std::size_t child = 2 * pos + 1;
        if (child >= size) break;
        if (child + 1 < size && heap[child + 1].v < heap[child].v) ++child;
        if (!(heap[child].v < moving.v)) break;
        heap[pos] = heap[child];
        pos = child;
      }
      heap[pos] = moving;
    } else {
      std::pop_heap(heap.begin(), heap.end(), less);
      heap.pop_back();
    }
  }
}

void check_slice_cap(const GradedCone& cone, std::int64_t degree, std::int64_t cap, std::int64_t completed) {
  BigInt c = cone.count(degree, false);
  if (c > BigInt(static_cast<long>(cap)))
    throw CapExceeded("degree " + std::to_string(degree) + " slice holds " + c.get_str() +
                          " points, above the cap of " + std::to_string(cap),
                      completed);
}

template <class Key>
std::vector<Key> normalization_keys(const GradedCone& cone, const Codec<Key>& codec, std::int64_t n) {
  std::vector<Key> out;
  const std::size_t r = cone.rank();
  cone.for_each_run(n, false, [&](std::span<std::int64_t> z, std::int64_t lo, std::int64_t hi) {
    z[r - 1] = lo;
    const Key base = codec.encode(z);
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(base + Key(static_cast<std::uint64_t>(v - lo)));
  });
  return out;
}

}  // namespace

struct SliceSweep::Impl {
  GradedCone cone;
  std::int64_t max_degree = 0;
  SliceOptions options;
  std::int64_t degree = -1;
  std::vector<BigInt> monoid, normalization, holes;
  std::vector<std::vector<IntVector>> hole_points;
  std::size_t kept = 0;
  bool complete = true;

  virtual ~Impl() = default;
  virtual void step() = 0;
  virtual std::vector<IntVector> slice() const = 0;

  void keep_hole(IntVector z) {
    if (!options.keep_holes) return;
    if (static_cast<std::int64_t>(kept) >= options.hole_cap) {
      complete = false;
      return;
    }
    hole_points.back().push_back(std::move(z));
    ++kept;
  }
};

namespace {

template <class Key>
struct KeyedSweep final : SliceSweep::Impl {
  Codec<Key> codec;
  std::vector<Key> deltas;
  std::vector<Key> current;

  KeyedSweep(const GradedCone& c, std::int64_t max_deg, const SliceOptions& opts, KeyLayout layout)
      : codec(std::move(layout), c.rank()) {
    cone = c;
    max_degree = max_deg;
    options = opts;
    for (std::size_t i = 0; i < cone.generators_z().rows(); ++i) deltas.push_back(codec.offset(cone.generators_z().row(i)));
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  }

  void step() override {
    const std::int64_t n = degree + 1;
    if (n > max_degree) throw InvalidInput("sweep advanced past its key layout degree " + std::to_string(max_degree));
    check_slice_cap(cone, n, options.point_cap, degree);
    std::vector<Key> next;
    if (n == 0) {
      next.push_back(0);
    } else {
      std::vector<Stream<Key>> streams;
      for (Key d : deltas) streams.push_back({&current, d});
      merge_unique(streams, [&](Key k) { next.push_back(k); });
    }
    hole_points.emplace_back();
    const std::size_t r = cone.rank();
    std::size_t at = 0;
    std::uint64_t total = 0, missing = 0;
    cone.for_each_run(n, false, [&](std::span<std::int64_t> z, std::int64_t lo, std::int64_t hi) {
      z[r - 1] = lo;
      const Key base = codec.encode(z);
      total += static_cast<std::uint64_t>(hi - lo + 1);
      for (std::int64_t v = lo; v <= hi; ++v) {
        const Key k = base + Key(static_cast<std::uint64_t>(v - lo));
        if (at < next.size() && next[at] == k) {
          ++at;
          continue;
        }
        if (at < next.size() && next[at] < k)
          throw Error(Error::Kind::Certificate, "monoid element of degree " + std::to_string(n) + " lies outside the normalization");
        ++missing;
        z[r - 1] = v;
        keep_hole(IntVector(z.begin(), z.end()));
      }
    });
    if (at != next.size())
      throw Error(Error::Kind::Certificate, "monoid element of degree " + std::to_string(n) + " lies outside the normalization");
    monoid.push_back(to_big(next.size()));
    normalization.push_back(to_big(total));
    holes.push_back(to_big(missing));
    current = std::move(next);
    degree = n;
  }

  std::vector<IntVector> slice() const override {
    std::vector<IntVector> out;
    out.reserve(current.size());
    for (Key k : current) out.push_back(codec.decode(k, degree));
    return out;
  }
};

template <template <class> class Body, class... Args>
auto dispatch(const KeyLayout& layout, Args&&... args) {
  if (layout.total_bits <= 64) return Body<std::uint64_t>::run(layout, std::forward<Args>(args)...);
  if (layout.total_bits <= 128) return Body<u128>::run(layout, std::forward<Args>(args)...);
  throw OverflowError("slice keys need " + std::to_string(layout.total_bits) + " bits, more than 128");
}

template <class Key>
struct MakeSweep {
  static std::unique_ptr<SliceSweep::Impl> run(const KeyLayout& layout, const GradedCone& cone, std::int64_t max_degree,
                                               const SliceOptions& options) {
    return std::make_unique<KeyedSweep<Key>>(cone, max_degree, options, layout);
  }
};

}  // namespace

SliceSweep::SliceSweep(const GradedCone& cone, std::int64_t max_degree, SliceOptions options) {
  if (max_degree < 0) throw InvalidInput("maximal degree must be nonnegative");
  impl_ = dispatch<MakeSweep>(cone.key_layout(std::max<std::int64_t>(max_degree, 1)), cone, max_degree, options);
}

SliceSweep::~SliceSweep() = default;
SliceSweep::SliceSweep(SliceSweep&&) noexcept = default;
SliceSweep& SliceSweep::operator=(SliceSweep&&) noexcept = default;

std::int64_t SliceSweep::degree() const { return impl_->degree; }
std::int64_t SliceSweep::max_degree() const { return impl_->max_degree; }
void SliceSweep::advance() { impl_->step(); }
void SliceSweep::advance_to(std::int64_t degree) {
  while (impl_->degree < degree) impl_->step();
}
const std::vector<BigInt>& SliceSweep::monoid_counts() const { return impl_->monoid; }
const std::vector<BigInt>& SliceSweep::normalization_counts() const { return impl_->normalization; }
const std::vector<BigInt>& SliceSweep::hole_counts() const { return impl_->holes; }
const std::vector<std::vector<IntVector>>& SliceSweep::holes() const { return impl_->hole_points; }
bool SliceSweep::holes_complete() const { return impl_->options.keep_holes && impl_->complete; }
std::vector<IntVector> SliceSweep::monoid_slice() const { return impl_->slice(); }

std::vector<IntVector> normalization_slice_z(const GradedCone& cone, std::int64_t degree) {
  std::vector<IntVector> out;
  cone.for_each_point(degree, false, [&](std::span<const std::int64_t> z) { out.emplace_back(z.begin(), z.end()); });
  return out;
}

namespace {

template <class Key>
struct HilbertBasisBody {
  static HilbertBasisZ run(const KeyLayout& layout, const GradedCone& cone, std::int64_t max_elem, std::int64_t cert,
                           const SliceOptions& options) {
    const Codec<Key> codec(layout, cone.rank());
    const std::int64_t top = std::max(max_elem, cert);
    std::vector<std::vector<Key>> qbar;
    for (std::int64_t n = 0; n <= top; ++n) {
      check_slice_cap(cone, n, options.point_cap, n - 1);
      qbar.push_back(normalization_keys(cone, codec, n));
    }

    HilbertBasisZ out;
    struct Element {
      std::int64_t degree;
      Key offset;
    };
    std::vector<Element> basis;
    for (std::int64_t n = 1; n <= max_elem; ++n) {
      std::vector<Stream<Key>> streams;
      for (const auto& h : basis)
        if (h.degree < n) streams.push_back({&qbar[static_cast<std::size_t>(n - h.degree)], h.offset});
      const auto& target = qbar[static_cast<std::size_t>(n)];
      std::vector<Key> fresh;
      std::size_t at = 0;
      merge_unique(streams, [&](Key k) {
        while (at < target.size() && target[at] < k) fresh.push_back(target[at++]);
        if (at < target.size() && target[at] == k) ++at;
      });
      while (at < target.size()) fresh.push_back(target[at++]);
      for (Key k : fresh) {
        IntVector z = codec.decode(k, n);
        basis.push_back({n, codec.offset(z)});
        out.elements.push_back(std::move(z));
      }
    }

    // Regenerate Q̄ from the basis and compare slice by slice.
    std::vector<std::vector<Key>> generated{{Key(0)}};
    out.certified_degree = 0;
    for (std::int64_t n = 1; n <= cert; ++n) {
      std::vector<Stream<Key>> streams;
      for (const auto& h : basis)
        if (h.degree <= n) streams.push_back({&generated[static_cast<std::size_t>(n - h.degree)], h.offset});
      std::vector<Key> slice;
      merge_unique(streams, [&](Key k) { slice.push_back(k); });
      const auto& target = qbar[static_cast<std::size_t>(n)];
      if (slice != target) {
        std::size_t i = 0;
        while (i < slice.size() && slice[i] == target[i]) ++i;
        out.witness = codec.decode(target[i], n);
        return out;
      }
      generated.push_back(std::move(slice));
      out.certified_degree = n;
    }
    return out;
  }
};

}  // namespace

HilbertBasisZ hilbert_basis_z(const GradedCone& cone, std::int64_t max_element_degree, std::int64_t certificate_bound,
                              const SliceOptions& options) {
  if (max_element_degree < 1) max_element_degree = 1;
  if (certificate_bound < 0) certificate_bound = 0;
  const std::int64_t top = std::max(max_element_degree, certificate_bound);
  return dispatch<HilbertBasisBody>(cone.key_layout(top), cone, max_element_degree, certificate_bound, options);
}

}  // namespace hilbgap
