#include <doctest.h>

#include <algorithm>
#include <random>

#include "critarrow/error.hpp"
#include "critarrow/kernels.hpp"
#include "oracles.hpp"

using namespace critarrow;
using namespace critarrow::kernels;

namespace {

std::vector<KernelKind> kinds() {
  std::vector<KernelKind> out{KernelKind::Scalar};
  if (kernel_available(KernelKind::Avx2)) out.push_back(KernelKind::Avx2);
  return out;
}

BoxScan random_scan(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<std::int64_t> c(-4, 4), b(-6, 6), r(1, 6);
  BoxScan s;
  for (std::size_t k = 0; k < d; ++k) {
    const std::int64_t lo = -r(rng);
    s.lo.push_back(lo);
    s.hi.push_back(lo + r(rng) + static_cast<std::int64_t>(rng() % 5));
  }
  const std::size_t forms = rng() % 5;
  for (std::size_t f = 0; f < forms; ++f) {
    LinearBound lb;
    for (std::size_t k = 0; k < d; ++k) lb.coeffs.push_back(c(rng));
    const auto x = b(rng), y = b(rng);
    lb.lower = rng() % 3 == 0 ? -kUnbounded : std::min(x, y);
    lb.upper = rng() % 3 == 0 ? kUnbounded : std::max(x, y);
    s.bounds.push_back(lb);
  }
  if (rng() % 2) s.norm_squared_max = static_cast<std::int64_t>(rng() % 40);
  s.exclude_origin = rng() % 2;
  return s;
}

std::vector<std::vector<std::int64_t>> brute(const BoxScan& s) {
  std::vector<std::vector<std::int64_t>> out;
  const oracle::Vec lo(s.lo.begin(), s.lo.end()), hi(s.hi.begin(), s.hi.end());
  oracle::for_box(lo, hi, [&](const oracle::Vec& x) {
    if (s.exclude_origin && std::all_of(x.begin(), x.end(), [](auto t) { return t == 0; })) return;
    if (s.norm_squared_max && oracle::dot(x, x) > *s.norm_squared_max) return;
    for (const auto& b : s.bounds) {
      const auto v = oracle::dot(oracle::Vec(b.coeffs.begin(), b.coeffs.end()), x);
      if (v < b.lower || v > b.upper) return;
    }
    out.emplace_back(x.begin(), x.end());
  });
  return out;
}

}  // namespace

TEST_CASE("kernel names and availability") {
  CHECK(kernel_name(KernelKind::Scalar) == "scalar");
  CHECK(kernel_name(KernelKind::Avx2) == "avx2");
  CHECK(kernel_available(KernelKind::Scalar));
  CHECK(kernel_available(default_kernel()));
}

TEST_CASE("row filters agree with the scalar reference") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-50, 50), len(0, 37);
  for (int n = 0; n < 3000; ++n) {
    const std::size_t forms = rng() % 20;  // crosses the AVX2 form limit too
    std::vector<std::int64_t> base(forms), slope(forms), lower(forms), upper(forms);
    for (std::size_t k = 0; k < forms; ++k) {
      base[k] = small(rng);
      slope[k] = small(rng) / 10;
      const auto a = small(rng), b = small(rng);
      lower[k] = std::min(a, b) - 20;
      upper[k] = std::max(a, b) + 20;
    }
    RowFilter row{forms, base.data(), slope.data(), lower.data(), upper.data(), 0, -1};
    if (rng() % 2) {
      row.norm_base = static_cast<std::int64_t>(rng() % 30);
      row.norm_bound = static_cast<std::int64_t>(rng() % 400);
    }
    const std::int64_t t0 = small(rng) / 2, count = len(rng);
    std::vector<std::int64_t> a(count + 1), b(count + 1);
    const std::size_t ka = filter_row_scalar(row, t0, count, a.data());
    const std::size_t kb = filter_row_avx2(row, t0, count, b.data());
    REQUIRE(ka == kb);
    for (std::size_t k = 0; k < ka; ++k) CHECK(a[k] == b[k]);
  }
}

TEST_CASE("box scans match brute force for every kernel and job count") {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 400; ++n) {
    const BoxScan s = random_scan(rng, 1 + n % 4);
    const auto expect = brute(s);
    for (KernelKind k : kinds()) {
      for (unsigned jobs : {1u, 3u}) {
        ScanOptions o;
        o.kernel = k;
        o.jobs = jobs;
        CHECK(scan_box(s, o) == expect);
      }
    }
  }
}

TEST_CASE("box scan limits") {
  BoxScan s;
  s.lo = {-100, -100, -100};
  s.hi = {100, 100, 100};
  CHECK(box_volume(s) == 201ull * 201 * 201);
  ScanOptions o;
  o.max_box_points = 1000;
  CHECK_THROWS_AS(scan_box(s, o), Error);
  try {
    scan_box(s, o);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResourceLimit);
  }

  BoxScan empty;
  empty.lo = {1};
  empty.hi = {0};
  CHECK(scan_box(empty).empty());

  BoxScan huge;
  huge.lo = {0, 0};
  huge.hi = {1, 1};
  huge.bounds.push_back({{std::int64_t{1} << 62, 1}, -kUnbounded, kUnbounded});
  CHECK_THROWS_AS(scan_box(huge), Error);
}

TEST_CASE("origin exclusion") {
  BoxScan s;
  s.lo = {-1, -1};
  s.hi = {1, 1};
  s.exclude_origin = true;
  CHECK(scan_box(s).size() == 8);
  s.exclude_origin = false;
  CHECK(scan_box(s).size() == 9);
}
