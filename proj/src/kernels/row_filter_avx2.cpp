// AVX2 row filter: four int64 lanes of t per step. Forms are advanced by
// adding 4*slope, and t^2 by the running difference 8t+16, so the inner
// loop is adds and compares only (AVX2 has no 64-bit multiply).

#include "critarrow/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define CRITARROW_HAVE_AVX2_TU 1
#else
#define CRITARROW_HAVE_AVX2_TU 0
#endif

namespace critarrow::kernels {

#if CRITARROW_HAVE_AVX2_TU

namespace {
constexpr std::size_t kMaxForms = 16;
}

__attribute__((target("avx2"))) std::size_t filter_row_avx2(const RowFilter& row, std::int64_t t_begin,
                                                              std::int64_t count, std::int64_t* out) {
  if (row.forms > kMaxForms) return filter_row_scalar(row, t_begin, count, out);

  __m256i value[kMaxForms];
  __m256i step[kMaxForms];
  __m256i lower[kMaxForms];
  __m256i upper[kMaxForms];
  const __m256i lane = _mm256_setr_epi64x(0, 1, 2, 3);
  for (std::size_t k = 0; k < row.forms; ++k) {
    const std::int64_t b = row.base[k];
    const std::int64_t s = row.slope[k];
    value[k] = _mm256_setr_epi64x(b, b + s, b + 2 * s, b + 3 * s);
    step[k] = _mm256_set1_epi64x(4 * s);
    lower[k] = _mm256_set1_epi64x(row.lower[k]);
    upper[k] = _mm256_set1_epi64x(row.upper[k]);
  }

  const bool use_norm = row.norm_bound >= 0;
  const __m256i bound = _mm256_set1_epi64x(row.norm_bound);
  const __m256i t0 = _mm256_add_epi64(_mm256_set1_epi64x(t_begin), lane);
  // sq = norm_base + t^2 per lane, computed once in scalar.
  __m256i sq = _mm256_setr_epi64x(row.norm_base + t_begin * t_begin, row.norm_base + (t_begin + 1) * (t_begin + 1),
                                  row.norm_base + (t_begin + 2) * (t_begin + 2),
                                  row.norm_base + (t_begin + 3) * (t_begin + 3));
  // (t+4)^2 - t^2 = 8t + 16
  __m256i dsq = _mm256_add_epi64(_mm256_slli_epi64(t0, 3), _mm256_set1_epi64x(16));
  const __m256i ddsq = _mm256_set1_epi64x(32);

  std::size_t kept = 0;
  std::int64_t j = 0;
  for (; j + 4 <= count; j += 4) {
    __m256i bad = use_norm ? _mm256_cmpgt_epi64(sq, bound) : _mm256_setzero_si256();
    for (std::size_t k = 0; k < row.forms; ++k) {
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(lower[k], value[k]));
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(value[k], upper[k]));
      value[k] = _mm256_add_epi64(value[k], step[k]);
    }
    sq = _mm256_add_epi64(sq, dsq);
    dsq = _mm256_add_epi64(dsq, ddsq);

    unsigned keep = ~static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(bad))) & 0xFu;
    while (keep) {
      const int l = __builtin_ctz(keep);
      out[kept++] = t_begin + j + l;
      keep &= keep - 1;
    }
  }

  for (; j < count; ++j) {
    const std::int64_t t = t_begin + j;
    if (use_norm && row.norm_base + t * t > row.norm_bound) continue;
    bool ok = true;
    for (std::size_t k = 0; k < row.forms && ok; ++k) {
      const std::int64_t v = row.base[k] + row.slope[k] * j;
      ok = v >= row.lower[k] && v <= row.upper[k];
    }
    if (ok) out[kept++] = t;
  }
  return kept;
}

#else

std::size_t filter_row_avx2(const RowFilter& row, std::int64_t t_begin, std::int64_t count, std::int64_t* out) {
  return filter_row_scalar(row, t_begin, count, out);
}

#endif

}  // namespace critarrow::kernels
