// Hilbert bases of simplicial cones via the half-open parallelepiped.
//
// A lattice point x lies in the parallelepiped iff every barycentric
// coordinate is in [0,1). With D = |det| and s = sign(det) this is the
// integer test 0 <= s * (adj(G) x)_k <= D - 1.

#include <algorithm>
#include <numeric>
#include <string>

#include "critarrow/cone.hpp"
#include "critarrow/error.hpp"

namespace critarrow {

namespace {

struct Parallelepiped {
  std::int64_t det_abs = 0;
  std::vector<std::vector<std::int64_t>> forms;   // s * adj rows
  std::vector<std::vector<std::int64_t>> points;  // lexicographic
};

Parallelepiped enumerate(const SimplicialCone& cone, const Limits& limits) {
  const std::size_t d = cone.dim();
  const Rational det_abs = abs(cone.det());
  if (det_abs > Rational(static_cast<long>(limits.max_parallelepiped_points)))
    throw Error(Errc::ResourceLimit, "|det| = " + to_string(det_abs) + " exceeds the parallelepiped cap " +
                                         std::to_string(limits.max_parallelepiped_points));
  Parallelepiped p;
  p.det_abs = detail::to_i64(det_abs);

  // s * adj = |det| * inverse
  kernels::BoxScan scan;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::int64_t> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = detail::to_i64(det_abs * cone.dual_basis()[k][c]);
    p.forms.push_back(row);
    scan.bounds.push_back({row, 0, p.det_abs - 1});
  }
  const auto gens = cone.generators_int();
  scan.lo.assign(d, 0);
  scan.hi.assign(d, 0);
  for (const auto& g : gens)
    for (std::size_t r = 0; r < d; ++r) (g[r] < 0 ? scan.lo[r] : scan.hi[r]) += g[r];
  scan.exclude_origin = true;
  p.points = kernels::scan_box(scan, limits.scan_options());
  return p;
}

std::vector<std::int64_t> scaled_coords(const Parallelepiped& p, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> out(p.forms.size(), 0);
  for (std::size_t k = 0; k < p.forms.size(); ++k)
    for (std::size_t c = 0; c < x.size(); ++c) out[k] += p.forms[k][c] * x[c];
  return out;
}

}  // namespace

std::vector<ExactVector> parallelepiped_points(const SimplicialCone& cone, const Limits& limits) {
  return detail::to_exact(enumerate(cone, limits).points);
}

std::vector<ExactVector> hilbert_basis(const SimplicialCone& cone, const Limits& limits) {
  const Parallelepiped p = enumerate(cone, limits);

  // Generators have coordinates e_k and cannot sit below a parallelepiped
  // point, so they are always kept; among parallelepiped points u is
  // reducible iff some other point is coordinatewise below it.
  struct Item {
    std::vector<std::int64_t> lam;
    std::int64_t sum;
    std::size_t index;
  };
  std::vector<Item> items;
  items.reserve(p.points.size());
  for (std::size_t n = 0; n < p.points.size(); ++n) {
    auto lam = scaled_coords(p, p.points[n]);
    const std::int64_t sum = std::accumulate(lam.begin(), lam.end(), std::int64_t{0});
    items.push_back({std::move(lam), sum, n});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.sum < b.sum; });

  std::vector<ExactVector> out = cone.generators();
  std::vector<const Item*> kept;
  for (const auto& it : items) {
    bool reducible = false;
    for (const Item* k : kept) {
      if (k->sum >= it.sum) break;
      bool below = true;
      for (std::size_t c = 0; c < it.lam.size() && below; ++c) below = k->lam[c] <= it.lam[c];
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(&it);
  }
  for (const Item* k : kept) out.push_back(ExactVector::from_ints(p.points[k->index]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExactVector> essential_candidates(const SimplicialCone& cone, const Limits& limits) {
  std::vector<ExactVector> out;
  for (auto& h : hilbert_basis(cone, limits))
    if (std::find(cone.generators().begin(), cone.generators().end(), h) == cone.generators().end())
      out.push_back(std::move(h));
  return out;
}

SingularityClass classify_singularity(const SimplicialCone& cone, const Limits& limits) {
  const Parallelepiped p = enumerate(cone, limits);
  if (p.points.empty()) return SingularityClass::Smooth;
  bool terminal = true;
  bool canonical = true;
  for (const auto& x : p.points) {
    const auto lam = scaled_coords(p, x);
    const std::int64_t sum = std::accumulate(lam.begin(), lam.end(), std::int64_t{0});
    if (sum <= p.det_abs) terminal = false;
    if (sum < p.det_abs) canonical = false;
  }
  if (terminal) return SingularityClass::Terminal;
  if (canonical) return SingularityClass::Canonical;
  return SingularityClass::LogTerminalOnly;
}

}  // namespace critarrow
