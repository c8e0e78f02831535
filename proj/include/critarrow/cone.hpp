#pragma once

// Simplicial cones in N = Z^d and their duals in M = Z^d.
// Ray indices are 0-based in this API.

#include <cstdint>
#include <optional>
#include <vector>

#include "critarrow/exact.hpp"
#include "critarrow/kernels.hpp"

namespace critarrow {

/// Caps and parallelism shared by every enumeration.
struct Limits {
  std::uint64_t max_box_points = 100'000'000;
  std::uint64_t max_parallelepiped_points = 1'000'000;  // bound on |det|
  unsigned jobs = 1;
  std::optional<kernels::KernelKind> kernel;

  kernels::ScanOptions scan_options() const { return {jobs, max_box_points, kernel}; }
};

class SimplicialCone {
 public:
  /// Generators must be integral, primitive, d of them in dimension d, and
  /// linearly independent. Throws InvalidCone / DimensionMismatch.
  explicit SimplicialCone(std::vector<ExactVector> generators);

  /// Same, but each generator is first replaced by the primitive vector on its ray.
  static SimplicialCone from_rays(const std::vector<ExactVector>& rays);

  std::size_t dim() const noexcept { return generators_.size(); }
  const std::vector<ExactVector>& generators() const noexcept { return generators_; }
  const ExactVector& generator(std::size_t i) const { return generators_[i]; }
  const ExactMatrix& matrix() const noexcept { return matrix_; }
  const Rational& det() const noexcept { return det_; }

  /// Rows of the inverse generator matrix: (dual_basis[i], v_j) = delta_ij.
  const std::vector<ExactVector>& dual_basis() const noexcept { return dual_basis_; }
  /// Primitive integral generators of the rays of the dual cone.
  const std::vector<ExactVector>& dual_generators() const noexcept { return dual_generators_; }

  /// Barycentric coordinates: x = sum lambda_i v_i.
  std::vector<Rational> coordinates(const ExactVector& x) const;
  bool contains(const ExactVector& x) const;
  bool dual_contains(const ExactVector& u) const;

  /// Generators as int64 rows. Throws ResourceLimit when entries are too large.
  std::vector<std::vector<std::int64_t>> generators_int() const;

  friend bool operator==(const SimplicialCone& a, const SimplicialCone& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<ExactVector> generators_;
  ExactMatrix matrix_;
  Rational det_;
  std::vector<ExactVector> dual_basis_;
  std::vector<ExactVector> dual_generators_;
};

std::vector<ExactVector> dual_basis(const SimplicialCone& cone);
std::vector<ExactVector> dual_generators(const SimplicialCone& cone);

struct FaceSelector {
  std::vector<std::size_t> indices;  // positions with lambda_i > 0
  std::vector<Rational> coords;      // all lambda_i

  bool contains(std::size_t i) const;
  bool interior() const { return indices.size() == coords.size(); }
};

/// Throws ZeroVector, NotInCone.
FaceSelector minimal_face(const SimplicialCone& cone, const ExactVector& w);

/// Nonzero lattice points of the half-open parallelepiped, sorted.
std::vector<ExactVector> parallelepiped_points(const SimplicialCone& cone, const Limits& limits = {});

/// Sorted Hilbert basis of the cone's lattice points (generators included).
std::vector<ExactVector> hilbert_basis(const SimplicialCone& cone, const Limits& limits = {});

/// sum(lambda) - 1 for lattice w in the cone.
Rational discrepancy(const SimplicialCone& cone, const ExactVector& w);

enum class SingularityClass { Smooth, Terminal, Canonical, LogTerminalOnly };
std::string_view singularity_name(SingularityClass c) noexcept;

SingularityClass classify_singularity(const SimplicialCone& cone, const Limits& limits = {});

/// Hilbert basis minus the generators.
std::vector<ExactVector> essential_candidates(const SimplicialCone& cone, const Limits& limits = {});

struct LevelOneResult {
  std::vector<ExactVector> points;  // sorted
  bool complete = false;            // false when the search was truncated
};

/// Lattice u in the dual cone with (u, w) = 1. For interior w the search is
/// exact; otherwise box_bound is required and the answer covers
/// [-box_bound, box_bound]^d only. Throws UnboundedRegion without a bound.
LevelOneResult level_one_lattice_points(const SimplicialCone& cone, const ExactVector& w,
                                        std::optional<std::int64_t> box_bound = std::nullopt,
                                        const Limits& limits = {});

namespace detail {

/// Bounding box of the simplex conv(0 or not, vertices), rounded outward.
void simplex_box(const std::vector<ExactVector>& vertices, bool with_origin, std::vector<std::int64_t>& lo,
                 std::vector<std::int64_t>& hi);

std::vector<ExactVector> to_exact(const std::vector<std::vector<std::int64_t>>& points);

std::int64_t to_i64(const Rational& q);

}  // namespace detail

}  // namespace critarrow
