#include "critarrow/kernels.hpp"

namespace critarrow::kernels {

std::size_t filter_row_scalar(const RowFilter& row, std::int64_t t_begin, std::int64_t count, std::int64_t* out) {
  std::size_t kept = 0;
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t t = t_begin + j;
    if (row.norm_bound >= 0 && row.norm_base + t * t > row.norm_bound) continue;
    bool ok = true;
    for (std::size_t k = 0; k < row.forms && ok; ++k) {
      const std::int64_t v = row.base[k] + row.slope[k] * j;
      ok = v >= row.lower[k] && v <= row.upper[k];
    }
    if (ok) out[kept++] = t;
  }
  return kept;
}

}  // namespace critarrow::kernels
