#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "critarrow/error.hpp"
#include "critarrow/kernels.hpp"

namespace critarrow::kernels {

namespace {

using i128 = __int128;
constexpr i128 kSafeMagnitude = i128(1) << 61;

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && i128(r) * r > n) --r;
  while (i128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_ranges(const BoxScan& scan) {
  const std::size_t d = scan.lo.size();
  i128 norm_cap = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const i128 m = std::max(i128(scan.lo[j]) * scan.lo[j], i128(scan.hi[j]) * scan.hi[j]);
    norm_cap += m;
    if (std::max<i128>(scan.lo[j] < 0 ? -i128(scan.lo[j]) : scan.lo[j], scan.hi[j] < 0 ? -i128(scan.hi[j]) : scan.hi[j]) >= kSafeMagnitude)
      throw Error(Errc::ResourceLimit, "box coordinates exceed 64-bit sweep range");
  }
  if (scan.norm_squared_max && norm_cap >= kSafeMagnitude)
    throw Error(Errc::ResourceLimit, "squared norms exceed 64-bit sweep range");
  for (const auto& b : scan.bounds) {
    if (b.coeffs.size() != d) throw Error(Errc::DimensionMismatch, "bound has wrong dimension");
    i128 worst = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const i128 c = b.coeffs[j] < 0 ? -i128(b.coeffs[j]) : i128(b.coeffs[j]);
      const i128 m = std::max<i128>(scan.lo[j] < 0 ? -i128(scan.lo[j]) : scan.lo[j], scan.hi[j] < 0 ? -i128(scan.hi[j]) : scan.hi[j]);
      worst += c * (m + 4);
      if (worst >= kSafeMagnitude) throw Error(Errc::ResourceLimit, "linear forms exceed 64-bit sweep range");
    }
  }
}

struct Sweep {
  const BoxScan& scan;
  KernelKind kernel;
  std::size_t d;
  std::size_t forms;
  std::vector<std::int64_t> lower, upper, slope;

  Sweep(const BoxScan& s, KernelKind k) : scan(s), kernel(k), d(s.lo.size()), forms(s.bounds.size()) {
    for (const auto& b : s.bounds) {
      lower.push_back(std::max(b.lower, -kUnbounded));
      upper.push_back(std::min(b.upper, kUnbounded));
      slope.push_back(b.coeffs[d - 1]);
    }
  }

  // Clamp coordinate `level` to the box and to the remaining norm budget.
  bool level_range(std::size_t level, std::int64_t prefix_sq, std::int64_t& first, std::int64_t& last) const {
    first = scan.lo[level];
    last = scan.hi[level];
    if (scan.norm_squared_max) {
      const std::int64_t room = *scan.norm_squared_max - prefix_sq;
      if (room < 0) return false;
      const std::int64_t r = isqrt(room);
      first = std::max(first, -r);
      last = std::min(last, r);
    }
    return first <= last;
  }

  void run_row(std::vector<std::int64_t>& prefix, const std::vector<std::int64_t>& partial, std::int64_t prefix_sq,
               bool prefix_zero, std::vector<std::int64_t>& buffer, std::vector<std::vector<std::int64_t>>& out) const {
    std::int64_t first, last;
    if (!level_range(d - 1, prefix_sq, first, last)) return;
    const std::int64_t count = last - first + 1;
    std::vector<std::int64_t> base(forms);
    for (std::size_t k = 0; k < forms; ++k) base[k] = partial[k] + slope[k] * first;
    RowFilter row{forms, base.data(), slope.data(), lower.data(), upper.data(), prefix_sq,
                  scan.norm_squared_max ? *scan.norm_squared_max : -1};
    if (buffer.size() < static_cast<std::size_t>(count)) buffer.resize(static_cast<std::size_t>(count));
    const std::size_t kept = filter_row(kernel, row, first, count, buffer.data());
    for (std::size_t n = 0; n < kept; ++n) {
      const std::int64_t t = buffer[n];
      if (scan.exclude_origin && prefix_zero && t == 0) continue;
      prefix[d - 1] = t;
      out.push_back(prefix);
    }
  }

  void descend(std::size_t level, std::vector<std::int64_t>& prefix, std::vector<std::int64_t>& partial,
               std::int64_t prefix_sq, bool prefix_zero, std::vector<std::int64_t>& buffer,
               std::vector<std::vector<std::int64_t>>& out) const {
    if (level == d - 1) {
      run_row(prefix, partial, prefix_sq, prefix_zero, buffer, out);
      return;
    }
    std::int64_t first, last;
    if (!level_range(level, prefix_sq, first, last)) return;
    walk_level(level, first, last, prefix, partial, prefix_sq, prefix_zero, buffer, out);
  }

  void walk_level(std::size_t level, std::int64_t first, std::int64_t last, std::vector<std::int64_t>& prefix,
                  std::vector<std::int64_t>& partial, std::int64_t prefix_sq, bool prefix_zero,
                  std::vector<std::int64_t>& buffer, std::vector<std::vector<std::int64_t>>& out) const {
    for (std::int64_t x = first; x <= last; ++x) {
      prefix[level] = x;
      for (std::size_t k = 0; k < forms; ++k) partial[k] += scan.bounds[k].coeffs[level] * x;
      descend(level + 1, prefix, partial, prefix_sq + x * x, prefix_zero && x == 0, buffer, out);
      for (std::size_t k = 0; k < forms; ++k) partial[k] -= scan.bounds[k].coeffs[level] * x;
    }
  }
};

}  // namespace

std::uint64_t box_volume(const BoxScan& scan) {
  unsigned __int128 v = 1;
  for (std::size_t j = 0; j < scan.lo.size(); ++j) {
    if (scan.hi[j] < scan.lo[j]) return 0;
    v *= static_cast<unsigned __int128>(i128(scan.hi[j]) - scan.lo[j] + 1);
    if (v > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::vector<std::int64_t>> scan_box(const BoxScan& scan, const ScanOptions& options) {
  const std::size_t d = scan.lo.size();
  if (d == 0 || scan.hi.size() != d) throw Error(Errc::DimensionMismatch, "box needs matching lo/hi of positive dimension");
  const std::uint64_t volume = box_volume(scan);
  if (volume == 0) return {};
  if (volume > options.max_box_points)
    throw Error(Errc::ResourceLimit, "box holds " + std::to_string(volume) + " points, cap is " +
                                         std::to_string(options.max_box_points));
  check_ranges(scan);

  const Sweep sweep(scan, options.kernel.value_or(default_kernel()));
  std::int64_t first = 0, last = 0;
  if (d == 1 || !sweep.level_range(0, 0, first, last) || options.jobs <= 1 || last - first < 1) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix(d), partial(sweep.forms, 0), buffer;
    sweep.descend(0, prefix, partial, 0, true, buffer, out);
    return out;
  }

  // Static split of the first coordinate; chunks are concatenated in order,
  // so the result is the same lexicographic list for any job count.
  const std::int64_t span = last - first + 1;
  const std::int64_t jobs = std::min<std::int64_t>(options.jobs, span);
  std::vector<std::vector<std::vector<std::int64_t>>> parts(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (std::int64_t j = 0; j < jobs; ++j) {
      const std::int64_t a = first + span * j / jobs;
      const std::int64_t b = first + span * (j + 1) / jobs - 1;
      workers.emplace_back([&sweep, &parts, j, a, b, d] {
        std::vector<std::int64_t> prefix(d), partial(sweep.forms, 0), buffer;
        sweep.walk_level(0, a, b, prefix, partial, 0, true, buffer, parts[static_cast<std::size_t>(j)]);
      });
    }
  }
  std::vector<std::vector<std::int64_t>> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace critarrow::kernels
