#include "critarrow/cone.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "critarrow/error.hpp"

namespace critarrow {

SimplicialCone::SimplicialCone(std::vector<ExactVector> generators) : generators_(std::move(generators)) {
  const std::size_t d = generators_.size();
  if (d == 0) throw Error(Errc::InvalidCone, "a cone needs at least one generator");
  for (const auto& g : generators_) {
    if (g.dim() != d) throw Error(Errc::DimensionMismatch, "need d generators in dimension d");
    if (!g.is_integral()) throw Error(Errc::InvalidCone, "generator " + to_string(g) + " is not integral");
    if (g.is_zero()) throw Error(Errc::InvalidCone, "zero generator");
    if (!(primitive(g) == g)) throw Error(Errc::InvalidCone, "generator " + to_string(g) + " is not primitive");
  }
  matrix_ = ExactMatrix::from_columns(generators_);
  det_ = determinant(matrix_);
  if (det_ == 0) throw Error(Errc::InvalidCone, "generators are linearly dependent");
  const ExactMatrix inv = inverse(matrix_);
  dual_basis_.reserve(d);
  dual_generators_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    dual_basis_.push_back(inv.row(i));
    dual_generators_.push_back(primitive_on_ray(dual_basis_.back()));
  }
}

SimplicialCone SimplicialCone::from_rays(const std::vector<ExactVector>& rays) {
  std::vector<ExactVector> gens;
  gens.reserve(rays.size());
  for (const auto& r : rays) {
    if (r.is_zero()) throw Error(Errc::InvalidCone, "zero generator");
    gens.push_back(primitive_on_ray(r));
  }
  return SimplicialCone(std::move(gens));
}

std::vector<Rational> SimplicialCone::coordinates(const ExactVector& x) const {
  if (x.dim() != dim()) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
  std::vector<Rational> out;
  out.reserve(dim());
  for (const auto& row : dual_basis_) out.push_back(dot(row, x));
  return out;
}

bool SimplicialCone::contains(const ExactVector& x) const {
  for (const auto& l : coordinates(x))
    if (l < 0) return false;
  return true;
}

bool SimplicialCone::dual_contains(const ExactVector& u) const {
  if (u.dim() != dim()) throw Error(Errc::DimensionMismatch, "dual point has wrong dimension");
  for (const auto& g : generators_)
    if (dot(u, g) < 0) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> SimplicialCone::generators_int() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(dim());
  for (const auto& g : generators_) out.push_back(to_int64(g));
  return out;
}

std::vector<ExactVector> dual_basis(const SimplicialCone& cone) { return cone.dual_basis(); }
std::vector<ExactVector> dual_generators(const SimplicialCone& cone) { return cone.dual_generators(); }

bool FaceSelector::contains(std::size_t i) const { return std::find(indices.begin(), indices.end(), i) != indices.end(); }

FaceSelector minimal_face(const SimplicialCone& cone, const ExactVector& w) {
  if (w.dim() != cone.dim()) throw Error(Errc::DimensionMismatch, "w has wrong dimension");
  if (w.is_zero()) throw Error(Errc::ZeroVector, "w must be nonzero");
  FaceSelector face;
  face.coords = cone.coordinates(w);
  for (std::size_t i = 0; i < face.coords.size(); ++i) {
    if (face.coords[i] < 0) throw Error(Errc::NotInCone, to_string(w) + " is not in the cone");
    if (face.coords[i] > 0) face.indices.push_back(i);
  }
  return face;
}

Rational discrepancy(const SimplicialCone& cone, const ExactVector& w) {
  const FaceSelector face = minimal_face(cone, w);
  Rational sum = 0;
  for (const auto& l : face.coords) sum += l;
  return sum - 1;
}

std::string_view singularity_name(SingularityClass c) noexcept {
  switch (c) {
    case SingularityClass::Smooth: return "smooth";
    case SingularityClass::Terminal: return "terminal";
    case SingularityClass::Canonical: return "canonical";
    case SingularityClass::LogTerminalOnly: return "log-terminal-only";
  }
  return "unknown";
}

LevelOneResult level_one_lattice_points(const SimplicialCone& cone, const ExactVector& w,
                                        std::optional<std::int64_t> box_bound, const Limits& limits) {
  const FaceSelector face = minimal_face(cone, w);
  if (!w.is_integral()) throw Error(Errc::NotALatticePoint, "w must be integral");
  const std::size_t d = cone.dim();

  kernels::BoxScan scan;
  if (face.interior()) {
    std::vector<ExactVector> vertices;
    for (std::size_t j = 0; j < d; ++j) vertices.push_back((1 / face.coords[j]) * cone.dual_basis()[j]);
    detail::simplex_box(vertices, false, scan.lo, scan.hi);
  } else {
    if (!box_bound) throw Error(Errc::UnboundedRegion, "w is not interior; a box bound is required");
    scan.lo.assign(d, -*box_bound);
    scan.hi.assign(d, *box_bound);
  }
  for (const auto& g : cone.generators_int()) scan.bounds.push_back({g, 0, kernels::kUnbounded});
  scan.bounds.push_back({to_int64(w), 1, 1});

  LevelOneResult result;
  result.points = detail::to_exact(kernels::scan_box(scan, limits.scan_options()));
  result.complete = face.interior();
  return result;
}

namespace detail {

std::int64_t to_i64(const Rational& q) {
  if (!is_integer(q)) throw Error(Errc::BadParameters, "expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw Error(Errc::ResourceLimit, "integer " + to_string(q) + " exceeds 64 bits");
  return q.get_num().get_si();
}

void simplex_box(const std::vector<ExactVector>& vertices, bool with_origin, std::vector<std::int64_t>& lo,
                 std::vector<std::int64_t>& hi) {
  const std::size_t d = vertices.front().dim();
  lo.assign(d, 0);
  hi.assign(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    Rational mn = with_origin ? Rational(0) : vertices.front()[r];
    Rational mx = mn;
    for (const auto& v : vertices) {
      if (v[r] < mn) mn = v[r];
      if (v[r] > mx) mx = v[r];
    }
    lo[r] = to_i64(Rational(floor_of(mn)));
    hi[r] = to_i64(Rational(ceil_of(mx)));
  }
}

std::vector<ExactVector> to_exact(const std::vector<std::vector<std::int64_t>>& points) {
  std::vector<ExactVector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(ExactVector::from_ints(p));
  return out;
}

}  // namespace detail

}  // namespace critarrow
