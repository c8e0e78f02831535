#pragma once

// Integer lattice sweeps.
//
// Every enumeration in the library (parallelepiped candidates, critical
// vectors, level-1 points, arrow validation) reduces to: list the integer
// points x of a box that satisfy lower_k <= <c_k, x> <= upper_k for a few
// integer forms c_k, optionally with |x|^2 <= R^2. The box is walked row by
// row; each row (last coordinate varying) goes through a row-filter kernel.
// Kernels exist as a scalar reference and as an AVX2 variant; the variant is
// picked at runtime and both must produce identical output.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace critarrow::kernels {

enum class KernelKind { Scalar, Avx2 };

std::string_view kernel_name(KernelKind kind) noexcept;

/// True when the running CPU can execute the given kernel.
bool kernel_available(KernelKind kind) noexcept;

/// Best available kernel, unless CRITARROW_KERNEL=scalar|avx2 pins one.
KernelKind default_kernel() noexcept;

/// One row of a sweep. For t = t_begin + j, j in [0, count):
///   value_k(t) = base[k] + slope[k] * j
///   keep t iff lower[k] <= value_k(t) <= upper[k] for all k
///   and, when norm_bound >= 0, norm_base + t^2 <= norm_bound.
/// The caller guarantees that no intermediate value overflows int64.
struct RowFilter {
  std::size_t forms = 0;
  const std::int64_t* base = nullptr;
  const std::int64_t* slope = nullptr;
  const std::int64_t* lower = nullptr;
  const std::int64_t* upper = nullptr;
  std::int64_t norm_base = 0;
  std::int64_t norm_bound = -1;
};

/// Writes every kept t into out (capacity >= count) and returns how many.
std::size_t filter_row_scalar(const RowFilter& row, std::int64_t t_begin, std::int64_t count, std::int64_t* out);
std::size_t filter_row_avx2(const RowFilter& row, std::int64_t t_begin, std::int64_t count, std::int64_t* out);

std::size_t filter_row(KernelKind kind, const RowFilter& row, std::int64_t t_begin, std::int64_t count,
                       std::int64_t* out);

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

/// lower <= <coeffs, x> <= upper. Use +/-kUnbounded for a missing side.
struct LinearBound {
  std::vector<std::int64_t> coeffs;
  std::int64_t lower = -kUnbounded;
  std::int64_t upper = kUnbounded;
};

struct BoxScan {
  std::vector<std::int64_t> lo;  // inclusive, per coordinate
  std::vector<std::int64_t> hi;  // inclusive, per coordinate
  std::vector<LinearBound> bounds;
  std::optional<std::int64_t> norm_squared_max;
  bool exclude_origin = false;
};

struct ScanOptions {
  unsigned jobs = 1;
  std::uint64_t max_box_points = 100'000'000;
  std::optional<KernelKind> kernel;  // default_kernel() when empty
};

/// Number of integer points in the box (saturates at UINT64_MAX).
std::uint64_t box_volume(const BoxScan& scan);

/// All integer points of the box passing every filter, in lexicographic
/// order. Output does not depend on jobs or on the kernel.
/// Throws ResourceLimit when the box holds more than max_box_points points
/// or when the forms could overflow 64-bit arithmetic.
std::vector<std::vector<std::int64_t>> scan_box(const BoxScan& scan, const ScanOptions& options = {});

}  // namespace critarrow::kernels
