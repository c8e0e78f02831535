#include "critarrow/quotient.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "critarrow/error.hpp"

namespace critarrow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  return v;
}

std::int64_t mod(std::int64_t x, std::int64_t r) { return ((x % r) + r) % r; }

}  // namespace

std::vector<CyclicGenerator> parse_group_spec(std::string_view text) {
  std::vector<CyclicGenerator> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = trim(text.substr(start, end - start));
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::ParseError, "group generator '" + std::string(item) + "' must look like r:a1,...,ad");
    CyclicGenerator g;
    g.r = parse_int(item.substr(0, colon));
    std::string_view rest = item.substr(colon + 1);
    std::size_t p = 0;
    while (p <= rest.size()) {
      const std::size_t q = std::min(rest.find(',', p), rest.size());
      g.weights.push_back(parse_int(rest.substr(p, q - p)));
      p = q + 1;
    }
    out.push_back(std::move(g));
    start = end + 1;
  }
  return out;
}

QuotientDatum build_quotient(const std::vector<CyclicGenerator>& generators, std::size_t dim) {
  if (dim == 0) throw Error(Errc::BadParameters, "dimension must be positive");
  std::vector<ExactVector> gens;
  for (const auto& g : generators) {
    if (g.r < 1) throw Error(Errc::BadParameters, "group order r must be positive");
    if (g.weights.size() != dim)
      throw Error(Errc::BadParameters, "generator has " + std::to_string(g.weights.size()) + " weights, expected " +
                                           std::to_string(dim));
    ExactVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = make_rational(Integer(static_cast<long>(mod(g.weights[k], g.r))),
                                                               Integer(static_cast<long>(g.r)));
    gens.push_back(std::move(v));
  }
  ExactMatrix basis = lattice_basis_from_generators(gens, dim);
  ExactMatrix inv = inverse(basis);
  const Rational det = determinant(basis);
  const Rational order = 1 / abs(det);
  if (!is_integer(order)) throw Error(Errc::InternalInconsistency, "lattice index is not an integer");

  std::vector<ExactVector> rays;
  for (std::size_t i = 0; i < dim; ++i) rays.push_back(inv.column(i));
  SimplicialCone cone = SimplicialCone::from_rays(rays);
  return QuotientDatum{dim, generators, order.get_num(), std::move(basis), std::move(inv), std::move(cone)};
}

ExactVector to_lattice_coords(const QuotientDatum& q, const ExactVector& x) {
  if (x.dim() != q.dim) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
  ExactVector n = q.basis_inverse * x;
  if (!n.is_integral()) throw Error(Errc::NotALatticePoint, to_string(x) + " is not a lattice point");
  return n;
}

ExactVector from_lattice_coords(const QuotientDatum& q, const ExactVector& n) {
  if (n.dim() != q.dim) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
  return q.basis_change * n;
}

std::string_view canonical_case_name(CanonicalCase c) noexcept {
  switch (c) {
    case CanonicalCase::Case1: return "case1";
    case CanonicalCase::Case2: return "case2";
    case CanonicalCase::Case3: return "case3";
    case CanonicalCase::Case4: return "case4";
    case CanonicalCase::Case5: return "case5";
    case CanonicalCase::NotCanonical: return "not-canonical";
  }
  return "unknown";
}

CyclicClassification classify_cyclic_3d(std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (r < 1) throw Error(Errc::BadParameters, "r must be positive");
  a = mod(a, r);
  b = mod(b, r);
  c = mod(c, r);
  const std::int64_t g = std::gcd(std::gcd(r, a), std::gcd(b, c));
  r /= g;
  a /= g;
  b /= g;
  c /= g;

  CyclicClassification out;
  out.r = r;
  out.weights = {a, b, c};

  const auto matches = [r](CanonicalCase cs, std::int64_t x, std::int64_t y, std::int64_t z) {
    switch (cs) {
      case CanonicalCase::Case1: return (x + y + z) % r == 0;
      case CanonicalCase::Case2: return x == 1 && y < r && std::gcd(y, r) == 1 && z == mod(r - y, r);
      case CanonicalCase::Case3: return x == 1 && y == r - 1 && z < r && std::gcd(z, r) > 1;
      case CanonicalCase::Case4: {
        if (r % 4 != 0 || r / 4 < 2) return false;
        const std::int64_t k = r / 4;
        return x == 1 && y == 2 * k + 1 && z == 4 * k - 2;
      }
      case CanonicalCase::Case5:
        return (r == 9 && x == 1 && y == 4 && z == 7) || (r == 14 && x == 1 && y == 9 && z == 11);
      case CanonicalCase::NotCanonical: return false;
    }
    return false;
  };

  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (auto cs : {CanonicalCase::Case1, CanonicalCase::Case2, CanonicalCase::Case3, CanonicalCase::Case4,
                  CanonicalCase::Case5}) {
    for (std::int64_t k = 1; k <= std::max<std::int64_t>(r - 1, 1); ++k) {
      if (std::gcd(k, r) != 1) continue;
      const std::array<std::int64_t, 3> w{mod(k * a, r), mod(k * b, r), mod(k * c, r)};
      for (const auto& p : perms) {
        if (matches(cs, w[p[0]], w[p[1]], w[p[2]])) {
          out.label = cs;
          out.power = k;
          out.permutation = p;
          out.via_symmetry = k != 1 || p != perms[0];
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<ExactVector> terminal_hilbert_basis(std::int64_t p, std::int64_t q) {
  if (p < 1 || p >= q || std::gcd(p, q) != 1)
    throw Error(Errc::BadParameters, "need 1 <= p < q with gcd(p, q) = 1");
  std::vector<ExactVector> out{ExactVector{1, 0, 0}, ExactVector{0, 1, 0},
                               ExactVector{1, Rational(static_cast<long>(p)), Rational(static_cast<long>(q))}};
  for (std::int64_t k = 1; k < q; ++k) {
    const std::int64_t m = k * p / q + 1;
    out.push_back(ExactVector{1, Rational(static_cast<long>(m)), Rational(static_cast<long>(k))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace critarrow
