#include "hilbgap/exactlin.hpp"

#include <limits>
#include <utility>

namespace hilbgap {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw OverflowError("value does not fit in 64 bits");
  return v.get_si();
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigInt(static_cast<long>(m(r, c)));
  return out;
}

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_int64(m(r, c));
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Checked s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += Checked(a(i, k)) * Checked(b(k, j));
      out(i, j) = s.value();
    }
  return out;
}

IntVector multiply(const IntMatrix& a, std::span<const std::int64_t> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), v);
  return out;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  Checked s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Checked(a[i]) * Checked(b[i]);
  return s.value();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", (" : "(");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ')';
  }
  return os << ']';
}

namespace {

void row_axpy(BigMatrix& m, std::size_t dst, const BigInt& q, std::size_t src) {
  // row[dst] -= q * row[src]
  if (is_zero(q)) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void negate_row(BigMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HnfTransform upper_hnf_with_transform(const BigMatrix& input) {
  HnfTransform out{input, BigMatrix::identity(input.rows()), 0};
  BigMatrix& a = out.h;
  BigMatrix& t = out.transform;
  const std::size_t rows = a.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < rows; ++col) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (is_zero(a(i, col))) continue;
        if (best == rows || abs(a(i, col)) < abs(a(best, col))) best = i;
      }
      if (best == rows) break;
      a.swap_rows(r, best);
      t.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (is_zero(a(i, col))) continue;
        BigInt q = floor_div(a(i, col), a(r, col));
        row_axpy(a, i, q, r);
        row_axpy(t, i, q, r);
        if (!is_zero(a(i, col))) done = false;
      }
      if (done) break;
    }
    if (r >= rows || is_zero(a(r, col))) continue;
    if (sgn(a(r, col)) < 0) {
      negate_row(a, r);
      negate_row(t, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(a(i, col), a(r, col));
      row_axpy(a, i, q, r);
      row_axpy(t, i, q, r);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

HnfResult hnf(const IntMatrix& m) {
  const std::size_t n = m.cols();
  BigMatrix rev(m.rows(), n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) rev(r, n - 1 - c) = BigInt(static_cast<long>(m(r, c)));
  HnfTransform up = upper_hnf_with_transform(rev);
  HnfResult out{IntMatrix(m.rows(), n), up.rank};
  for (std::size_t i = 0; i < up.rank; ++i) {
    std::size_t src = up.rank - 1 - i;
    for (std::size_t c = 0; c < n; ++c) out.h(i, c) = to_int64(up.h(src, n - 1 - c));
  }
  return out;
}

std::vector<BigInt> smith_diagonal(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!is_zero(a(i, j)) && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return diag;
      a.swap_rows(t, bi);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = floor_div(a(i, t), a(t, t));
        row_axpy(a, i, q, t);
        if (!is_zero(a(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = floor_div(a(t, j), a(t, t));
        if (!is_zero(q))
          for (std::size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (!is_zero(a(t, j))) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) a(t, j) += a(bad, j);
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = to_big(m);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfTransform up = upper_hnf_with_transform(to_big(m.transposed()));
  IntMatrix basis(0, n);
  for (std::size_t i = up.rank; i < n; ++i) {
    IntVector row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = to_int64(up.transform(i, c));
    basis.append_row(row);
  }
  if (basis.empty()) return basis;
  HnfResult h = hnf(basis);
  h.h.resize_rows(h.rank);
  return h.h;
}

std::optional<std::vector<Rational>> solve_rational(const BigMatrix& a, const std::vector<BigInt>& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a(r, c);
    aug[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t p = pr;
    while (p < rows && sgn(aug[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[pr]);
    Rational inv = 1 / aug[pr][c];
    for (auto& v : aug[pr]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || sgn(aug[r][c]) == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = c; k <= cols; ++k) aug[r][k] -= f * aug[pr][k];
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  for (std::size_t r = pr; r < rows; ++r)
    if (sgn(aug[r][cols]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  HnfTransform up = upper_hnf_with_transform(to_big(u));
  if (up.h != BigMatrix::identity(u.rows())) throw InvalidInput("matrix is not unimodular");
  return to_int(up.transform);
}

IntMatrix unimodular_completion(std::span<const std::int64_t> v) {
  const std::size_t d = v.size();
  for (std::size_t p = d; p-- > 0;) {
    if (v[p] != 1 && v[p] != -1) continue;
    IntMatrix u(0, d);
    u.append_row(IntVector(v.begin(), v.end()));
    for (std::size_t i = 0; i < d; ++i) {
      if (i == p) continue;
      IntVector e(d, 0);
      e[i] = 1;
      u.append_row(e);
    }
    return u;
  }
  BigMatrix col(d, 1);
  for (std::size_t i = 0; i < d; ++i) col(i, 0) = BigInt(static_cast<long>(v[i]));
  HnfTransform up = upper_hnf_with_transform(col);
  if (up.rank != 1 || up.h(0, 0) != 1) throw InvalidInput("vector is not primitive");
  // transform * v^T = e_1, so the first row of (transform^{-1})^T is v.
  IntMatrix t = to_int(up.transform);
  return inverse_unimodular(t).transposed();
}

IntVector make_primitive(IntVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd_of(Checked(g), Checked(x)).value();
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Lattice Lattice::generated_by(const IntMatrix& generators) {
  Lattice l;
  l.ambient_dim_ = generators.cols();
  HnfResult h = hnf(generators);
  h.h.resize_rows(h.rank);
  l.basis_ = std::move(h.h);
  for (std::size_t i = 0; i < l.basis_.rows(); ++i) {
    std::size_t p = l.ambient_dim_;
    for (std::size_t c = l.ambient_dim_; c-- > 0;)
      if (l.basis_(i, c) != 0) {
        p = c;
        break;
      }
    l.pivots_.push_back(p);
  }
  return l;
}

Lattice Lattice::full(std::size_t ambient_dim) { return generated_by(IntMatrix::identity(ambient_dim)); }

std::optional<IntVector> Lattice::coordinates(std::span<const std::int64_t> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length does not match lattice ambient dimension");
  std::vector<BigInt> rest(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rest[i] = BigInt(static_cast<long>(v[i]));
  IntVector coords(rank(), 0);
  for (std::size_t i = rank(); i-- > 0;) {
    const std::size_t p = pivots_[i];
    const BigInt piv(static_cast<long>(basis_(i, p)));
    if (rest[p] % piv != 0) return std::nullopt;
    BigInt c = rest[p] / piv;
    coords[i] = to_int64(c);
    for (std::size_t k = 0; k <= p; ++k) rest[k] -= c * basis_(i, k);
  }
  for (const auto& r : rest)
    if (sgn(r) != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(std::span<const std::int64_t> v) const { return coordinates(v).has_value(); }

IntVector Lattice::point(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank()) throw DimensionMismatch("coordinate count does not match lattice rank");
  IntVector x(ambient_dim_, 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      x[c] = (Checked(x[c]) + Checked(coords[i]) * Checked(basis_(i, c))).value();
  return x;
}

}  // namespace hilbgap
