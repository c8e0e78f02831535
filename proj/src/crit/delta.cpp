#include <algorithm>

#include "critarrow/crit.hpp"
#include "critarrow/error.hpp"

namespace critarrow {

namespace {

std::vector<ExactVector> sorted_rays(std::vector<ExactVector> v) {
  for (auto& x : v) x = primitive_on_ray(x);
  std::sort(v.begin(), v.end());
  return v;
}

// u_j = v_j* / lambda_j for j in the minimal face, v_j* otherwise.
std::vector<ExactVector> rescaled_duals(const SimplicialCone& cone, const FaceSelector& face) {
  std::vector<ExactVector> u = cone.dual_basis();
  for (std::size_t j : face.indices) u[j] *= 1 / face.coords[j];
  return u;
}

}  // namespace

DeltaCone delta_cone(const SimplicialCone& cone, const ExactVector& w, std::size_t i) {
  const FaceSelector face = minimal_face(cone, w);
  if (!face.contains(i))
    throw Error(Errc::IndexNotInMinimalFace, "ray " + std::to_string(i + 1) + " is not in the minimal face of w");
  std::vector<ExactVector> gens = cone.generators();
  gens[i] = -w;
  SimplicialCone delta = SimplicialCone::from_rays(gens);
  return DeltaCone{cone, i, w, std::move(gens), std::move(delta)};
}

std::vector<ExactVector> delta_dual_closed_form(const DeltaCone& dc) {
  const FaceSelector face = minimal_face(dc.base, dc.w);
  const auto u = rescaled_duals(dc.base, face);
  std::vector<ExactVector> out;
  out.push_back(-u[dc.index]);
  for (std::size_t j = 0; j < dc.base.dim(); ++j) {
    if (j == dc.index) continue;
    out.push_back(face.contains(j) ? u[j] - u[dc.index] : u[j]);
  }
  return sorted_rays(std::move(out));
}

std::vector<ExactVector> delta_dual_generic(const DeltaCone& dc) { return sorted_rays(dc.cone.dual_generators()); }

std::vector<ExactVector> delta_dual_generators(const DeltaCone& dc) {
  auto closed = delta_dual_closed_form(dc);
  if (closed != delta_dual_generic(dc))
    throw Error(Errc::InternalInconsistency, "closed-form and generic dual of the delta-cone disagree");
  return closed;
}

Integer ceil_sqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::BadParameters, "ceil_sqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

std::int64_t diameter_bound(const SimplicialCone& cone) {
  // Differences of subset sums are the sums sum eps_j m_j, eps in {-1,0,1}.
  const auto& m = cone.dual_generators();
  const std::size_t d = cone.dim();
  std::vector<int> eps(d, -1);
  Rational best = 0;
  while (true) {
    ExactVector s(d);
    for (std::size_t j = 0; j < d; ++j)
      if (eps[j] != 0) s += Rational(eps[j]) * m[j];
    best = std::max(best, norm_squared(s));
    std::size_t k = 0;
    while (k < d && eps[k] == 1) eps[k++] = -1;
    if (k == d) break;
    ++eps[k];
  }
  return detail::to_i64(Rational(ceil_sqrt(best.get_num())));
}

Rational c_min(const DeltaCone& dc, const Limits& limits) {
  const SimplicialCone dual(delta_dual_generators(dc));
  const ExactVector minus_vi = -dc.base.generator(dc.index);
  std::optional<Rational> best;
  for (const auto& u : hilbert_basis(dual, limits)) {
    if (dot(u, dc.w) == 0) continue;
    const Rational val = dot(u, minus_vi);
    if (!best || val < *best) best = val;
  }
  if (!best || *best <= 0) throw Error(Errc::InternalInconsistency, "c_min must be positive");
  return *best;
}

CritProfile crit_vectors(const DeltaCone& dc, std::int64_t d_prime, const Limits& limits) {
  if (d_prime <= 0) throw Error(Errc::BadParameters, "D' must be positive");
  CritProfile profile;
  profile.index = dc.index;
  profile.c_min = c_min(dc, limits);
  profile.d_prime = d_prime;

  const std::size_t d = dc.base.dim();
  kernels::BoxScan scan;
  scan.lo.assign(d, -d_prime);
  scan.hi.assign(d, d_prime);
  for (const auto& g : dc.generators) scan.bounds.push_back({to_int64(g), 0, kernels::kUnbounded});
  // (u, -v_i) < c_min, both sides integral
  scan.bounds.push_back({to_int64(-dc.base.generator(dc.index)), -kernels::kUnbounded,
                         detail::to_i64(profile.c_min) - 1});
  scan.norm_squared_max = d_prime * d_prime;
  scan.exclude_origin = true;
  profile.vectors = detail::to_exact(kernels::scan_box(scan, limits.scan_options()));
  return profile;
}

ArrowRecord reconstruct_arrow(const DeltaCone& dc, const ExactVector& u) {
  const auto fail = [&](const std::string& why) {
    return Error(Errc::NotACritVector, to_string(u) + ": " + why);
  };
  if (u.dim() != dc.base.dim()) throw Error(Errc::DimensionMismatch, "vector has wrong dimension");
  if (!u.is_integral() || u.is_zero()) throw fail("not a nonzero lattice vector");
  if (dot(u, dc.w) != 0) throw fail("not orthogonal to w");
  for (const auto& g : dc.generators)
    if (dot(u, g) < 0) throw fail("not in the dual delta-cone");

  const FaceSelector face = minimal_face(dc.base, dc.w);
  const Rational lambda = face.coords[dc.index];
  const ExactVector u_i = (1 / lambda) * dc.base.dual_basis()[dc.index];
  const Rational c = lambda * dot(u, -dc.base.generator(dc.index));
  if (c <= 0) throw fail("level is not positive");

  ArrowRecord arrow{u + c * u_i, c * u_i, u, c, dc.index};
  if (!dc.base.dual_contains(arrow.head) || !dc.base.dual_contains(arrow.tail))
    throw fail("head or tail outside the dual cone");
  if (dot(arrow.head, dc.w) != c || dot(arrow.tail, dc.w) != c) throw fail("head and tail not on one level");
  return arrow;
}

}  // namespace critarrow
