#pragma once

// Exact integer linear algebra: small dense matrices, Hermite and Smith
// normal forms, integer kernels and lattices given by an HNF basis.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hilbgap/errors.hpp"

namespace hilbgap {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<std::int64_t>;

// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
// Algorithms templated on the number type run first on Checked and are
// retried on BigInt when an OverflowError escapes.
class Checked {
 public:
  constexpr Checked() = default;
  constexpr Checked(std::int64_t v) : v_(v) {}  // NOLINT(implicit)
  constexpr std::int64_t value() const { return v_; }

  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 addition overflow");
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 subtraction overflow");
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 multiplication overflow");
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowError("int64 division overflow");
    return a.v_ / b.v_;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked operator-() const { return Checked(0) - *this; }
  Checked& operator+=(Checked o) { return *this = *this + o; }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  Checked& operator*=(Checked o) { return *this = *this * o; }
  Checked& operator/=(Checked o) { return *this = *this / o; }
  friend auto operator<=>(Checked a, Checked b) = default;
  friend bool operator==(Checked a, Checked b) = default;

 private:
  std::int64_t v_ = 0;
};

// Number-type helpers shared by the templated algorithms.
inline int sign_of(Checked a) { return (a.value() > 0) - (a.value() < 0); }
inline int sign_of(const BigInt& a) { return sgn(a); }
inline Checked abs_of(Checked a) { return a.value() < 0 ? -a : a; }
inline BigInt abs_of(const BigInt& a) { return abs(a); }
inline Checked gcd_of(Checked a, Checked b) {
  std::int64_t x = abs_of(a).value(), y = abs_of(b).value();
  while (y != 0) {
    std::int64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
inline bool is_zero(Checked a) { return a.value() == 0; }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
BigInt floor_div(const BigInt& a, const BigInt& b);

std::int64_t to_int64(const BigInt& v);  // throws OverflowError
inline std::int64_t to_int64(Checked v) { return v.value(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  void append_row(std::span<const T> values) {
    if (values.size() != cols_) throw DimensionMismatch("row length does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }
  void append_row(const std::vector<T>& values) { append_row(std::span<const T>(values)); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }

  void resize_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows * cols_);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

BigMatrix to_big(const IntMatrix& m);
IntMatrix to_int(const BigMatrix& m);  // throws OverflowError
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const std::int64_t> v);  // a * v
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HnfResult {
  IntMatrix h;
  std::size_t rank = 0;
};

// Row-style Hermite normal form, lower-left echelon: the pivot of nonzero row
// i is its last nonzero entry, pivot columns increase with i, pivots are
// positive and every entry below a pivot lies in [0, pivot). Zero rows are
// moved to the bottom, so h has the shape of m.
HnfResult hnf(const IntMatrix& m);

// Upper echelon HNF (pivot = first nonzero, entries above pivots reduced)
// together with a unimodular `transform` such that transform * m == h.
struct HnfTransform {
  BigMatrix h;
  BigMatrix transform;
  std::size_t rank = 0;
};
HnfTransform upper_hnf_with_transform(const BigMatrix& m);

// Nonzero diagonal of the Smith normal form, each factor dividing the next.
std::vector<BigInt> smith_diagonal(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// Rows form a basis of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Solves a x = b over the rationals; nullopt when inconsistent. Free
// variables are set to zero.
std::optional<std::vector<Rational>> solve_rational(const BigMatrix& a, const std::vector<BigInt>& b);

// Unimodular U whose first row is the given primitive vector.
IntMatrix unimodular_completion(std::span<const std::int64_t> primitive);
IntMatrix inverse_unimodular(const IntMatrix& u);

// Divides out the content; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

// Sublattice of Z^ambient_dim with a canonical (lower-left HNF) basis.
class Lattice {
 public:
  Lattice() = default;
  static Lattice generated_by(const IntMatrix& generators);
  static Lattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(std::span<const std::int64_t> v) const;
  // Integer coordinates with respect to basis(); nullopt if v is not a member.
  std::optional<IntVector> coordinates(std::span<const std::int64_t> v) const;
  IntVector point(std::span<const std::int64_t> coords) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hilbgap
