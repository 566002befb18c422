#include "hilbgap/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hilbgap {

BigInt HPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

std::int64_t default_window(std::size_t dim) { return std::max<std::int64_t>(4, static_cast<std::int64_t>(dim)); }

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k || n < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<BigInt> finite_differences(const std::vector<BigInt>& counts, std::size_t d) {
  std::vector<BigInt> h(counts.size());
  const auto dd = static_cast<std::int64_t>(d);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    BigInt s = 0;
    for (std::int64_t j = 0; j <= dd && j <= static_cast<std::int64_t>(i); ++j) {
      BigInt term = binomial(dd, j) * counts[i - static_cast<std::size_t>(j)];
      if (j % 2) s -= term;
      else s += term;
    }
    h[i] = s;
  }
  return h;
}

std::vector<BigInt> counts_from_numerator(const std::vector<BigInt>& h, std::size_t d, std::int64_t upto) {
  std::vector<BigInt> out;
  const auto dd = static_cast<std::int64_t>(d);
  for (std::int64_t n = 0; n <= upto; ++n) {
    BigInt s = 0;
    for (std::size_t i = 0; i < h.size() && static_cast<std::int64_t>(i) <= n; ++i) {
      const std::int64_t m = n - static_cast<std::int64_t>(i);
      s += h[i] * (dd == 0 ? BigInt(m == 0 ? 1 : 0) : binomial(m + dd - 1, dd - 1));
    }
    out.push_back(s);
  }
  return out;
}

namespace {

struct Differences {
  std::vector<BigInt> raw;
  std::int64_t last_nonzero = -1;
};

Differences differences(const GradedCount& counts, std::size_t d) {
  Differences out{finite_differences(counts.counts, d), -1};
  for (std::size_t i = 0; i < out.raw.size(); ++i)
    if (out.raw[i] != 0) out.last_nonzero = static_cast<std::int64_t>(i);
  return out;
}

}  // namespace

std::optional<HPolynomial> try_h_polynomial(const GradedCount& counts, std::size_t d, std::int64_t window) {
  if (window < 0) window = default_window(d);
  Differences diff = differences(counts, d);
  const std::int64_t top = static_cast<std::int64_t>(counts.counts.size()) - 1;
  if (diff.last_nonzero < 0 || top - diff.last_nonzero < window) return std::nullopt;
  HPolynomial h;
  h.coefficients.assign(diff.raw.begin(), diff.raw.begin() + diff.last_nonzero + 1);
  h.dim = d;
  h.verified_degree = top;
  h.window = window;
  return h;
}

HPolynomial h_polynomial(const GradedCount& counts, std::size_t d, std::int64_t window) {
  if (auto h = try_h_polynomial(counts, d, window)) return *h;
  if (window < 0) window = default_window(d);
  Differences diff = differences(counts, d);
  std::ostringstream os;
  os << "h-polynomial not stabilized: need " << window << " trailing zero differences through degree "
     << static_cast<std::int64_t>(counts.counts.size()) - 1 << ", differences are [";
  for (std::size_t i = 0; i < diff.raw.size(); ++i) os << (i ? "," : "") << diff.raw[i];
  os << ']';
  throw NotStabilized(os.str());
}

namespace {

void finish(const AffineMonoid& q, Analysis& a) {
  a.h = try_h_polynomial(a.data.monoid, a.dim, a.window);
  a.h_normalization = try_h_polynomial(a.data.normalization, a.dim, a.window);
  for (std::int64_t n = 1; n <= a.data.verified_degree; ++n)
    if (sgn(q.graded_cone().count(n, true)) > 0) {
      a.codegree = n;
      break;
    }
}

}  // namespace

Analysis analyze(const AffineMonoid& q, const AnalysisOptions& options, Analysis* partial) {
  Analysis a;
  a.dim = q.dim();
  a.window = options.window.value_or(default_window(a.dim));
  if (a.window < 0) throw InvalidInput("stabilization window must be nonnegative");
  const std::int64_t margin = options.margin.value_or(static_cast<std::int64_t>(a.dim));
  SliceOptions slices = options.slices;
  slices.keep_holes = options.families;

  std::int64_t top;
  std::function<bool(const GradedData&)> done;
  if (options.degree_bound) {
    top = *options.degree_bound;
    if (top < 0) throw InvalidInput("degree bound must be nonnegative");
  } else {
    top = options.degree_limit.value_or(static_cast<std::int64_t>(a.dim) + 2 * a.window + 8);
    done = [&](const GradedData& data) {
      return try_h_polynomial(data.monoid, a.dim, a.window) && try_h_polynomial(data.normalization, a.dim, a.window);
    };
  }
  GradedData scratch;
  try {
    a.data = sweep_monoid(q, top, slices, done, &scratch);
  } catch (const CapExceeded&) {
    if (partial) {
      *partial = a;
      partial->data = std::move(scratch);
      finish(q, *partial);
    }
    throw;
  }
  finish(q, a);
  if (options.families) {
    a.families = infer_hole_families(q, a.data, margin);
    a.s2 = s2_verdict(q, *a.families);
    a.depth = depth_estimate(*a.families);
  }
  return a;
}

DegreeComparison compare_degrees(const Analysis& a) {
  if (!a.h || !a.h_normalization)
    throw NotStabilized("h-polynomials did not stabilize through degree " + std::to_string(a.data.verified_degree) +
                        " with window " + std::to_string(a.window));
  DegreeComparison c;
  c.h = *a.h;
  c.h_normalization = *a.h_normalization;
  c.gap = c.h_normalization.degree() - c.h.degree();
  c.h_at_one = c.h.at_one();
  c.h_normalization_at_one = c.h_normalization.at_one();
  if (a.s2) c.s2 = *a.s2;
  c.depth = a.depth;
  return c;
}

DegreeComparison compare_degrees(const AffineMonoid& q, const AnalysisOptions& options) {
  return compare_degrees(analyze(q, options));
}

SumIdentity check_sum_identity(const GradedData& data) {
  SumIdentity out;
  for (std::size_t n = 0; n < data.normalization.counts.size(); ++n) {
    BigInt r = data.normalization.counts[n] - data.monoid.counts[n] - data.holes.counts[n];
    if (r != 0) out.holds = false;
    out.residuals.push_back(r);
  }
  return out;
}

SumIdentity check_sum_identity(const AffineMonoid& q, std::int64_t max_degree, const SliceOptions& options) {
  SliceOptions opts = options;
  opts.keep_holes = false;
  return check_sum_identity(sweep_monoid(q, max_degree, opts));
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::int64_t upto) {
  std::vector<BigInt> out(static_cast<std::size_t>(upto + 1), 0);
  for (std::size_t i = 0; i < a.size() && static_cast<std::int64_t>(i) <= upto; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<std::int64_t>(i + j) <= upto; ++j) out[i + j] += a[i] * b[j];
  return out;
}

JoinCheck series_of_join(const AffineMonoid& q, const AffineMonoid& q2, std::int64_t max_degree,
                         const SliceOptions& options) {
  SliceOptions opts = options;
  opts.keep_holes = false;
  const GradedData a = sweep_monoid(q, max_degree, opts);
  const GradedData b = sweep_monoid(q2, max_degree, opts);
  const GradedData j = sweep_monoid(join(q, q2), max_degree, opts);
  JoinCheck out;
  out.join_counts = j.monoid.counts;
  out.join_normalization_counts = j.normalization.counts;
  out.predicted_counts = convolve(a.monoid.counts, b.monoid.counts, max_degree);
  out.predicted_normalization_counts = convolve(a.normalization.counts, b.normalization.counts, max_degree);
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const bool m_ok = out.join_counts[i] == out.predicted_counts[i];
    const bool n_ok = out.join_normalization_counts[i] == out.predicted_normalization_counts[i];
    if (!m_ok) out.monoid_holds = false;
    if (!n_ok) out.normalization_holds = false;
    if ((!m_ok || !n_ok) && out.first_failure < 0) out.first_failure = n;
  }
  return out;
}

}  // namespace hilbgap
