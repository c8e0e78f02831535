#pragma once

// Exact rational scalars, vectors and matrices on top of GMP.
//
// Every quantity that takes part in a decision (membership, pairing signs,
// ranks, thresholds) is computed here without rounding. mpq_class keeps its
// values canonical (lowest terms, positive denominator) after each operation.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace critarrow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws BadParameters on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", e.g. "0/1", "-3/2", "5/1".
std::string to_string(const Rational& q);

/// Accepts "n" or "n/d" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t dim) : entries_(dim) {}
  ExactVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit ExactVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static ExactVector from_ints(std::span<const std::int64_t> values);
  static ExactVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  ExactVector& operator+=(const ExactVector& other);
  ExactVector& operator-=(const ExactVector& other);
  ExactVector& operator*=(const Rational& factor);

  friend ExactVector operator+(ExactVector a, const ExactVector& b) { return a += b; }
  friend ExactVector operator-(ExactVector a, const ExactVector& b) { return a -= b; }
  friend ExactVector operator*(const Rational& k, ExactVector v) { return v *= k; }
  friend ExactVector operator-(ExactVector v) { return v *= Rational(-1); }

  friend bool operator==(const ExactVector& a, const ExactVector& b);
  // Lexicographic by entries; shorter vectors order first.
  friend bool operator<(const ExactVector& a, const ExactVector& b);

 private:
  std::vector<Rational> entries_;
};

/// Standard pairing sum a_k b_k. Throws DimensionMismatch.
Rational dot(const ExactVector& a, const ExactVector& b);

/// Squared Euclidean norm.
Rational norm_squared(const ExactVector& v);

/// Integer entries as int64. Throws BadParameters when a value is not an
/// integer and ResourceLimit when it does not fit.
std::vector<std::int64_t> to_int64(const ExactVector& v);

std::string to_string(const ExactVector& v);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_columns(std::span<const ExactVector> columns);
  static ExactMatrix from_rows(std::span<const ExactVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactVector column(std::size_t c) const;
  ExactMatrix transpose() const;

  ExactVector operator*(const ExactVector& v) const;
  ExactMatrix operator*(const ExactMatrix& other) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const ExactMatrix& a);

/// Throws SingularMatrix or DimensionMismatch (non-square).
ExactMatrix inverse(const ExactMatrix& a);

/// Unique x with A x = b for square nonsingular A.
ExactVector solve(const ExactMatrix& a, const ExactVector& b);

/// Dimension of the linear span. All vectors must share one dimension.
std::size_t rank(std::span<const ExactVector> vectors);

struct SpanDims {
  std::size_t dim_u = 0;
  std::size_t dim_w = 0;
  std::size_t dim_intersection = 0;
};

/// Ranks of span(U), span(W) and of their intersection.
SpanDims span_dims(std::span<const ExactVector> u, std::span<const ExactVector> w);

/// Incrementally maintained row-echelon basis of a subspace of Q^d.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Returns true when v enlarged the span.
  bool add(const ExactVector& v);
  std::size_t dim() const noexcept { return pivots_.size(); }
  std::size_t ambient_dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
  std::vector<ExactVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// v / gcd(|v_k|) for an integral nonzero v. Throws ZeroVector or
/// NotALatticePoint (non-integral input).
ExactVector primitive(const ExactVector& v);

/// The primitive integral vector on the ray through a nonzero rational v.
ExactVector primitive_on_ray(const ExactVector& v);

/// Basis of Z^d + sum_g Z g for rational generators g, returned as the
/// columns of a lower-triangular matrix with positive diagonal whose
/// below-diagonal entries are reduced into [0, diagonal) of their row.
/// Its |determinant| is 1 / [N : Z^d].
ExactMatrix lattice_basis_from_generators(std::span<const ExactVector> generators, std::size_t dim);

}  // namespace critarrow
