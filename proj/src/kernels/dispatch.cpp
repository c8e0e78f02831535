#include <cstdlib>
#include <cstring>

#include "critarrow/kernels.hpp"

namespace critarrow::kernels {

std::string_view kernel_name(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::Scalar: return "scalar";
    case KernelKind::Avx2: return "avx2";
  }
  return "unknown";
}

bool kernel_available(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::Scalar: return true;
    case KernelKind::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

KernelKind default_kernel() noexcept {
  static const KernelKind chosen = [] {
    if (const char* env = std::getenv("CRITARROW_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) return KernelKind::Scalar;
      if (std::strcmp(env, "avx2") == 0 && kernel_available(KernelKind::Avx2)) return KernelKind::Avx2;
    }
    return kernel_available(KernelKind::Avx2) ? KernelKind::Avx2 : KernelKind::Scalar;
  }();
  return chosen;
}

std::size_t filter_row(KernelKind kind, const RowFilter& row, std::int64_t t_begin, std::int64_t count,
                       std::int64_t* out) {
  if (kind == KernelKind::Avx2 && kernel_available(KernelKind::Avx2)) return filter_row_avx2(row, t_begin, count, out);
  return filter_row_scalar(row, t_begin, count, out);
}

}  // namespace critarrow::kernels
