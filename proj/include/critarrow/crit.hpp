#pragma once

// delta-cones, critical vectors and the dimension of the minimal cone tau
// containing w, plus the sufficient criteria for a critical arrow to exist.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critarrow/cone.hpp"

namespace critarrow {

/// sigma with its i-th generator replaced by -w.
struct DeltaCone {
  SimplicialCone base;
  std::size_t index = 0;
  ExactVector w;
  std::vector<ExactVector> generators;  // v_1..-w..v_d, -w taken literally
  SimplicialCone cone;                  // same rays, primitive generators
};

/// Throws IndexNotInMinimalFace.
DeltaCone delta_cone(const SimplicialCone& cone, const ExactVector& w, std::size_t i);

/// Dual generators from the closed form in terms of u_j, sorted.
std::vector<ExactVector> delta_dual_closed_form(const DeltaCone& dc);
/// Dual generators from inverting the generator matrix, sorted.
std::vector<ExactVector> delta_dual_generic(const DeltaCone& dc);
/// Both of the above; throws InternalInconsistency when they differ.
std::vector<ExactVector> delta_dual_generators(const DeltaCone& dc);

/// ceil of the largest distance between vertices of the parallelotope
/// spanned by the primitive dual generators.
std::int64_t diameter_bound(const SimplicialCone& cone);

/// Integer ceil(sqrt(n)) for n >= 0.
Integer ceil_sqrt(const Integer& n);

/// min (u, -v_i) over Hilbert basis elements u of the dual delta-cone off w^perp.
Rational c_min(const DeltaCone& dc, const Limits& limits = {});

struct CritProfile {
  std::size_t index = 0;
  Rational c_min;
  std::vector<ExactVector> vectors;  // sorted
  std::int64_t d_prime = 0;
};

/// Every nonzero lattice u in the dual delta-cone with |u| <= d_prime and
/// (u, -v_i) < c_min.
CritProfile crit_vectors(const DeltaCone& dc, std::int64_t d_prime, const Limits& limits = {});

struct ArrowRecord {
  ExactVector head;
  ExactVector tail;
  ExactVector vector;
  Rational level;
  std::size_t tail_ray_index = 0;
};

/// (u + c u_i, c u_i) with (u_i, w) = 1 and c = (u, -v_i) / (u_i, v_i).
/// Throws NotACritVector when u cannot come from a critical arrow.
ArrowRecord reconstruct_arrow(const DeltaCone& dc, const ExactVector& u);

/// Checks that head and tail are distinct points of the dual cone on one
/// w-level and that no tail-translate by a lattice vector lies lower.
/// Throws NonInteriorW when w is on the boundary.
bool validate_arrow(const SimplicialCone& cone, const ExactVector& w, const ArrowRecord& arrow,
                    const Limits& limits = {});

enum class SearchStatus { Found, None, Unknown };
std::string_view search_status_name(SearchStatus s) noexcept;

struct PolytopeResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<ExactVector> witness;  // lexicographically smallest
};

/// Lattice u with (u, w) = 1, (u, v_i) >= 1 and (u, v_j) >= 0. Exact for
/// interior w, truncated to the box bound otherwise.
PolytopeResult polytope_condition(const SimplicialCone& cone, const ExactVector& w, std::size_t i,
                                  std::optional<std::int64_t> box_bound = std::nullopt,
                                  const Limits& limits = {});

struct VolumeResult {
  Rational vol;
  std::string h;  // display only
  bool guarantee = false;
};

/// vol = l^d / ((d-1)! a_1...a_d |G|); guarantee iff vol > 1.
VolumeResult volume_criterion(const Integer& l, const std::vector<Integer>& a, const Integer& group_order);

/// d / (|G| (d-1)!)^(1/d), truncated to `places` decimals.
std::string h_constant(unsigned d, const Integer& group_order, unsigned places = 6);

struct AnalysisOptions {
  Limits limits;
  std::optional<std::int64_t> d_prime;       // override, must be >= diameter_bound
  std::optional<std::int64_t> search_bound;  // non-interior sufficiency searches; default D'
  bool sufficiency = true;                   // level-1 and polytope searches
  bool essential = true;                     // Hilbert basis membership
};

struct AnalysisReport {
  SimplicialCone cone;
  ExactVector w;
  std::vector<std::size_t> mu_indices;
  std::size_t dim_mu = 0;
  std::int64_t d_prime = 0;
  std::vector<CritProfile> profiles;
  std::size_t dim_vw = 0;
  std::size_t dim_mu_perp_cap_vw = 0;
  std::size_t dim_tau = 0;
  std::size_t center_dim = 0;
  Rational discrepancy;
  std::optional<bool> is_essential_candidate;
  std::optional<SearchStatus> level_one_found;
  std::map<std::size_t, PolytopeResult> polytope;
  std::optional<VolumeResult> volume;

  bool any_crit() const;
};

AnalysisReport dim_tau(const SimplicialCone& cone, const ExactVector& w, const AnalysisOptions& options = {});

}  // namespace critarrow
