#include "critarrow/crit.hpp"
#include "critarrow/error.hpp"

namespace critarrow {

std::string_view search_status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "yes";
    case SearchStatus::None: return "no";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

bool validate_arrow(const SimplicialCone& cone, const ExactVector& w, const ArrowRecord& arrow, const Limits& limits) {
  const FaceSelector face = minimal_face(cone, w);
  if (!face.interior()) throw Error(Errc::NonInteriorW, to_string(w) + " is not in the interior of the cone");
  const std::size_t d = cone.dim();
  if (arrow.head.dim() != d || arrow.tail.dim() != d || arrow.vector.dim() != d)
    throw Error(Errc::DimensionMismatch, "arrow has wrong dimension");

  if (arrow.head == arrow.tail) return false;
  if (arrow.head - arrow.tail != arrow.vector || !arrow.vector.is_integral()) return false;
  if (arrow.level <= 0 || dot(arrow.head, w) != arrow.level || dot(arrow.tail, w) != arrow.level) return false;
  if (!cone.dual_contains(arrow.head) || !cone.dual_contains(arrow.tail)) return false;

  // Look for m in M with tail + m in the dual cone and (tail + m, w) < level.
  // Such points lie in the simplex conv(0, level v_j* / lambda_j).
  std::vector<ExactVector> vertices{-arrow.tail};
  for (std::size_t j = 0; j < d; ++j)
    vertices.push_back((arrow.level / face.coords[j]) * cone.dual_basis()[j] - arrow.tail);
  kernels::BoxScan scan;
  detail::simplex_box(vertices, false, scan.lo, scan.hi);
  for (const auto& g : cone.generators()) {
    const Integer lower = ceil_of(-dot(arrow.tail, g));
    scan.bounds.push_back({to_int64(g), detail::to_i64(Rational(lower)), kernels::kUnbounded});
  }
  scan.bounds.push_back({to_int64(w), -kernels::kUnbounded, -1});
  return kernels::scan_box(scan, limits.scan_options()).empty();
}

PolytopeResult polytope_condition(const SimplicialCone& cone, const ExactVector& w, std::size_t i,
                                  std::optional<std::int64_t> box_bound, const Limits& limits) {
  const FaceSelector face = minimal_face(cone, w);
  if (!face.contains(i))
    throw Error(Errc::IndexNotInMinimalFace, "ray " + std::to_string(i + 1) + " is not in the minimal face of w");
  const LevelOneResult level = level_one_lattice_points(cone, w, box_bound, limits);
  PolytopeResult result;
  for (const auto& u : level.points) {
    if (dot(u, cone.generator(i)) >= 1) {
      result.status = SearchStatus::Found;
      result.witness = u;
      return result;
    }
  }
  result.status = level.complete ? SearchStatus::None : SearchStatus::Unknown;
  return result;
}

std::string h_constant(unsigned d, const Integer& group_order, unsigned places) {
  if (d == 0 || group_order <= 0) throw Error(Errc::BadParameters, "H needs d >= 1 and |G| >= 1");
  // Largest n with n^d |G| (d-1)! <= d^d 10^(places d).
  Integer scale, fact = 1, rhs, dd;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  for (unsigned k = 2; k < d; ++k) fact *= k;
  mpz_ui_pow_ui(dd.get_mpz_t(), d, d);
  Integer scale_d;
  mpz_pow_ui(scale_d.get_mpz_t(), scale.get_mpz_t(), d);
  rhs = dd * scale_d;
  const Integer lhs_factor = group_order * fact;

  Integer lo = 0, hi = Integer(d) * scale + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2, p;
    mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), d);
    if (p * lhs_factor <= rhs)
      lo = mid;
    else
      hi = mid;
  }
  const Integer whole = lo / scale;
  std::string frac = Integer(lo % scale).get_str();
  if (places == 0) return whole.get_str();
  frac.insert(0, places - frac.size(), '0');
  return whole.get_str() + "." + frac;
}

VolumeResult volume_criterion(const Integer& l, const std::vector<Integer>& a, const Integer& group_order) {
  if (l <= 0 || a.empty() || group_order <= 0) throw Error(Errc::BadParameters, "volume needs l, a_i, |G| positive");
  const unsigned d = static_cast<unsigned>(a.size());
  Integer num, den = group_order;
  mpz_pow_ui(num.get_mpz_t(), l.get_mpz_t(), d);
  for (unsigned k = 2; k < d; ++k) den *= k;
  for (const auto& x : a) {
    if (x <= 0) throw Error(Errc::BadParameters, "volume needs positive a_i");
    den *= x;
  }
  VolumeResult out;
  out.vol = make_rational(num, den);
  out.h = h_constant(d, group_order);
  out.guarantee = out.vol > 1;
  return out;
}

}  // namespace critarrow
