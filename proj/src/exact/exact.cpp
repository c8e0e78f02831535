#include "critarrow/exact.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "critarrow/error.hpp"

namespace critarrow {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(Errc::DimensionMismatch, std::string(where) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotInCone: return "NotInCone";
    case Errc::NotALatticePoint: return "NotALatticePoint";
    case Errc::InvalidCone: return "InvalidCone";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::UnboundedRegion: return "UnboundedRegion";
    case Errc::IndexNotInMinimalFace: return "IndexNotInMinimalFace";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NotACritVector: return "NotACritVector";
    case Errc::NonInteriorW: return "NonInteriorW";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::BadParameters, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// ExactVector

ExactVector ExactVector::from_ints(std::span<const std::int64_t> values) {
  ExactVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Rational(static_cast<long>(values[i]));
  return v;
}

ExactVector ExactVector::unit(std::size_t dim, std::size_t index) {
  ExactVector v(dim);
  v[index] = 1;
  return v;
}

bool ExactVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool ExactVector::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return is_integer(q); });
}

ExactVector& ExactVector::operator+=(const ExactVector& other) {
  require_same_dim(dim(), other.dim(), "vector add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExactVector& ExactVector::operator-=(const ExactVector& other) {
  require_same_dim(dim(), other.dim(), "vector subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ExactVector& ExactVector::operator*=(const Rational& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

bool operator==(const ExactVector& a, const ExactVector& b) { return a.entries_ == b.entries_; }

bool operator<(const ExactVector& a, const ExactVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

Rational dot(const ExactVector& a, const ExactVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm_squared(const ExactVector& v) { return dot(v, v); }

std::vector<std::int64_t> to_int64(const ExactVector& v) {
  std::vector<std::int64_t> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!is_integer(v[i])) throw Error(Errc::BadParameters, "non-integral entry " + to_string(v[i]));
    const Integer& n = v[i].get_num();
    if (!mpz_fits_slong_p(n.get_mpz_t())) throw Error(Errc::ResourceLimit, "entry exceeds 64-bit range");
    out[i] = n.get_si();
  }
  return out;
}

std::string to_string(const ExactVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += is_integer(v[i]) ? v[i].get_num().get_str() : to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const ExactVector> columns) {
  if (columns.empty()) return {};
  ExactMatrix m(columns[0].dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_dim(columns[c].dim(), m.rows(), "from_columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows[0].dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_dim(rows[r].dim(), m.cols(), "from_rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  ExactVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactVector ExactMatrix::operator*(const ExactVector& v) const {
  require_same_dim(cols_, v.dim(), "matrix-vector product");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  require_same_dim(cols_, other.rows_, "matrix product");
  ExactMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < cols_; ++k) s += (*this)(r, k) * other(k, c);
      out(r, c) = s;
    }
  return out;
}

Rational determinant(const ExactMatrix& a) {
  require_same_dim(a.rows(), a.cols(), "determinant");
  ExactMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& a) {
  require_same_dim(a.rows(), a.cols(), "inverse");
  const std::size_t n = a.rows();
  ExactMatrix m = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw Error(Errc::SingularMatrix, "matrix is singular");
    if (p != k)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(p, c), m(k, c));
        std::swap(inv(p, c), inv(k, c));
      }
    const Rational pivot = m(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) /= pivot;
      inv(k, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m(r, k) == 0) continue;
      const Rational f = m(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

ExactVector solve(const ExactMatrix& a, const ExactVector& b) {
  require_same_dim(a.rows(), a.cols(), "solve");
  require_same_dim(a.rows(), b.dim(), "solve");
  const std::size_t n = a.rows();
  ExactMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw Error(Errc::SingularMatrix, "matrix is singular");
    if (p != k)
      for (std::size_t c = 0; c <= n; ++c) std::swap(m(p, c), m(k, c));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c <= n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  ExactVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = m(i, n);
    for (std::size_t c = i + 1; c < n; ++c) s -= m(i, c) * x[c];
    x[i] = s / m(i, i);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Spans

bool SpanBuilder::add(const ExactVector& v) {
  require_same_dim(v.dim(), dim_, "span");
  ExactVector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p] == 0) continue;
    const Rational f = r[p];
    for (std::size_t c = 0; c < dim_; ++c) r[c] -= f * rows_[k][c];
  }
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  r *= Rational(1) / r[p];
  // Keep the basis fully reduced so later reductions stay single-pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * r[c];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(std::span<const ExactVector> vectors) {
  if (vectors.empty()) return 0;
  SpanBuilder span(vectors[0].dim());
  for (const auto& v : vectors) {
    span.add(v);
    if (span.dim() == span.ambient_dim()) break;
  }
  return span.dim();
}

SpanDims span_dims(std::span<const ExactVector> u, std::span<const ExactVector> w) {
  std::size_t d = 0;
  if (!u.empty()) d = u[0].dim();
  else if (!w.empty()) d = w[0].dim();
  for (const auto& v : u) require_same_dim(v.dim(), d, "span_dims");
  for (const auto& v : w) require_same_dim(v.dim(), d, "span_dims");

  SpanDims out;
  out.dim_u = rank(u);
  out.dim_w = rank(w);
  SpanBuilder both(d);
  for (const auto& v : u) both.add(v);
  for (const auto& v : w) both.add(v);
  out.dim_intersection = out.dim_u + out.dim_w - both.dim();
  return out;
}

// ---------------------------------------------------------------------------
// Lattice utilities

ExactVector primitive(const ExactVector& v) {
  if (!v.is_integral()) throw Error(Errc::NotALatticePoint, "primitive() needs integral entries: " + to_string(v));
  Integer g = 0;
  for (const auto& q : v) g = gcd(g, q.get_num());
  if (g == 0) throw Error(Errc::ZeroVector, "primitive() of the zero vector");
  ExactVector out = v;
  out *= Rational(1, 1) / Rational(g);
  return out;
}

ExactVector primitive_on_ray(const ExactVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  ExactVector scaled = v;
  scaled *= Rational(l);
  return primitive(scaled);
}

ExactMatrix lattice_basis_from_generators(std::span<const ExactVector> generators, std::size_t dim) {
  for (const auto& g : generators) require_same_dim(g.dim(), dim, "lattice_basis_from_generators");

  Integer scale = 1;
  for (const auto& g : generators)
    for (const auto& q : g) scale = lcm(scale, q.get_den());

  // Columns: scale*e_i followed by scale*g, all integral.
  const std::size_t ncols = dim + generators.size();
  std::vector<std::vector<Integer>> col(ncols, std::vector<Integer>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) col[i][i] = scale;
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) col[dim + j][r] = Rational(generators[j][r] * scale).get_num();

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < ncols; ++j) {
      if (col[j][i] == 0) continue;
      if (col[i][i] == 0) {
        std::swap(col[i], col[j]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), col[i][i].get_mpz_t(), col[j][i].get_mpz_t());
      const Integer a = col[i][i] / g;
      const Integer b = col[j][i] / g;
      for (std::size_t r = i; r < dim; ++r) {
        const Integer ci = col[i][r];
        const Integer cj = col[j][r];
        col[i][r] = s * ci + t * cj;
        col[j][r] = a * cj - b * ci;
      }
    }
    if (col[i][i] < 0)
      for (std::size_t r = i; r < dim; ++r) col[i][r] = -col[i][r];
    for (std::size_t k = 0; k < i; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), col[k][i].get_mpz_t(), col[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = i; r < dim; ++r) col[k][r] -= q * col[i][r];
    }
  }

  ExactMatrix basis(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) basis(r, c) = make_rational(col[c][r], scale);
  return basis;
}

}  // namespace critarrow
