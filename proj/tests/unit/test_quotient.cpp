#include <doctest.h>

#include <numeric>
#include <random>

#include "bridge.hpp"
#include "critarrow/crit.hpp"
#include "critarrow/error.hpp"
#include "critarrow/quotient.hpp"

using namespace critarrow;
using bridge::q;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InternalInconsistency;
}

QuotientDatum cyclic(std::int64_t r, std::vector<std::int64_t> a) {
  const std::size_t d = a.size();
  return build_quotient({CyclicGenerator{r, std::move(a)}}, d);
}

// Ages of the nontrivial elements: min and whether any is below / equal to 1,
// counted in units of 1/r. Assumes no element fixes a hyperplane.
SingularityClass age_class(long r, const std::vector<long>& a) {
  bool smooth = true, terminal = true, canonical = true;
  for (long k = 1; k < r; ++k) {
    long age = 0;
    bool trivial = true;
    for (long x : a) {
      const long y = ((k * x) % r + r) % r;
      age += y;
      trivial = trivial && y == 0;
    }
    if (trivial) continue;
    smooth = false;
    if (age <= r) terminal = false;
    if (age < r) canonical = false;
  }
  if (smooth) return SingularityClass::Smooth;
  if (terminal) return SingularityClass::Terminal;
  return canonical ? SingularityClass::Canonical : SingularityClass::LogTerminalOnly;
}

bool has_reflection(long r, const std::vector<long>& a) {
  for (long k = 1; k < r; ++k) {
    std::size_t moved = 0;
    for (long x : a) moved += (k * x) % r != 0;
    if (moved == 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group spec parsing") {
  const auto g = parse_group_spec("14:1,9,11");
  REQUIRE(g.size() == 1);
  CHECK(g[0].r == 14);
  CHECK(g[0].weights == std::vector<std::int64_t>{1, 9, 11});
  CHECK(parse_group_spec("2:1,1,0;2:0,1,1").size() == 2);
  CHECK(code_of([] { parse_group_spec("14"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_group_spec("x:1,2"); }) == Errc::ParseError);
  CHECK(code_of([] { cyclic(0, {1, 1}); }) == Errc::BadParameters);
  CHECK(code_of([] { build_quotient({CyclicGenerator{3, {1, 2}}}, 3); }) == Errc::BadParameters);
}

TEST_CASE("quotient lattices") {
  SUBCASE("trivial group") {
    const QuotientDatum d = build_quotient({}, 3);
    CHECK(d.group_order == 1);
    CHECK(classify_singularity(d.normalized_cone) == SingularityClass::Smooth);
  }
  SUBCASE("one half of (1,1)") {
    const QuotientDatum d = cyclic(2, {1, 1});
    CHECK(d.group_order == 2);
    CHECK(abs(d.normalized_cone.det()) == 2);
    CHECK(classify_singularity(d.normalized_cone) == SingularityClass::Canonical);
  }
  SUBCASE("order fourteen") {
    const QuotientDatum d = cyclic(14, {1, 9, 11});
    CHECK(d.group_order == 14);
    CHECK(abs(determinant(d.basis_change)) == q(1, 14));
    const ExactVector g{q(1, 14), q(9, 14), q(11, 14)};
    CHECK(to_lattice_coords(d, g).is_integral());
    CHECK(from_lattice_coords(d, to_lattice_coords(d, g)) == g);
    const ExactVector w = to_lattice_coords(d, ExactVector{q(1, 2), q(1, 2), q(1, 2)});
    CHECK(w.is_integral());
    CHECK(d.normalized_cone.contains(w));
    CHECK(code_of([&] { to_lattice_coords(d, ExactVector{q(1, 3), q(0), q(0)}); }) == Errc::NotALatticePoint);
  }
  SUBCASE("order is the product for independent generators") {
    const QuotientDatum d = build_quotient(parse_group_spec("2:1,1,0;3:0,1,2"), 3);
    CHECK(d.group_order == 6);
  }
}

TEST_CASE("singularity class of quotients matches the age of group elements") {
  std::mt19937_64 rng(89);
  int tried = 0;
  while (tried < 150) {
    const long r = 2 + static_cast<long>(rng() % 19);
    const std::size_t d = 3 + rng() % 2;
    std::vector<long> a(d);
    for (auto& x : a) x = static_cast<long>(rng() % r);
    if (has_reflection(r, a)) continue;
    ++tried;
    const QuotientDatum qd = cyclic(r, std::vector<std::int64_t>(a.begin(), a.end()));
    CHECK(classify_singularity(qd.normalized_cone) == age_class(r, a));
  }
}

TEST_CASE("cyclic classification examples") {
  const auto c14 = classify_cyclic_3d(14, 1, 9, 11);
  CHECK(c14.label == CanonicalCase::Case5);
  CHECK_FALSE(c14.via_symmetry);
  CHECK(classify_cyclic_3d(9, 1, 4, 7).label == CanonicalCase::Case5);
  CHECK(classify_cyclic_3d(8, 1, 5, 6).label == CanonicalCase::Case4);
  CHECK(classify_cyclic_3d(7, 1, 2, 3).label == CanonicalCase::NotCanonical);
  CHECK(classify_cyclic_3d(3, 1, 1, 1).label == CanonicalCase::Case1);
  CHECK(classify_cyclic_3d(5, 1, 2, 3).label == CanonicalCase::Case2);
  CHECK(classify_cyclic_3d(6, 1, 5, 2).label == CanonicalCase::Case3);
  CHECK(canonical_case_name(CanonicalCase::Case3) == "case3");
  CHECK(canonical_case_name(CanonicalCase::NotCanonical) == "not-canonical");

  const auto reduced = classify_cyclic_3d(28, 2, 18, 22);
  CHECK(reduced.r == 14);
  CHECK(reduced.label == CanonicalCase::Case5);

  const auto moved = classify_cyclic_3d(14, 11, 1, 9);
  CHECK(moved.label == CanonicalCase::Case5);
  CHECK(moved.via_symmetry);
  const auto power = classify_cyclic_3d(14, 3, 13, 5);  // 3 * (1,9,11)
  CHECK(power.label == CanonicalCase::Case5);
  CHECK(power.power != 1);
}

TEST_CASE("classification is insensitive to order and generator choice") {
  for (long r = 2; r <= 16; ++r)
    for (long a = 0; a < r; ++a)
      for (long b = a; b < r; ++b)
        for (long c = b; c < r; ++c) {
          const auto base = classify_cyclic_3d(r, a, b, c).label;
          CHECK(classify_cyclic_3d(r, c, a, b).label == base);
          CHECK(classify_cyclic_3d(r, b, c, a).label == base);
          for (long k = 2; k < r; ++k)
            if (std::gcd(k, r) == 1) CHECK(classify_cyclic_3d(r, k * a, k * b, k * c).label == base);
        }
}

TEST_CASE("normal forms are canonical exactly when listed") {
  for (long r = 2; r <= 20; ++r)
    for (long a = 0; a < r; ++a)
      for (long b = 0; b < r; ++b)
        for (long c = 0; c < r; ++c) {
          const std::vector<long> w{a, b, c};
          if (std::gcd(std::gcd(r, a), std::gcd(b, c)) != 1 || has_reflection(r, w)) continue;
          const CanonicalCase label = classify_cyclic_3d(r, a, b, c).label;
          const SingularityClass cls = age_class(r, w);
          const bool canonical = cls != SingularityClass::LogTerminalOnly;
          CAPTURE(r);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK((label != CanonicalCase::NotCanonical) == canonical);
          if (label == CanonicalCase::Case2) CHECK(cls == SingularityClass::Terminal);
        }
}

TEST_CASE("terminal hilbert basis") {
  CHECK(bridge::ivs(terminal_hilbert_basis(1, 2)) == oracle::Gens{{0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {1, 1, 2}});
  CHECK(code_of([] { terminal_hilbert_basis(2, 4); }) == Errc::BadParameters);
  CHECK(code_of([] { terminal_hilbert_basis(3, 3); }) == Errc::BadParameters);
  for (long qq = 2; qq <= 30; ++qq)
    for (long p = 1; p < qq; ++p) {
      if (std::gcd(p, qq) != 1) continue;
      const auto hb = bridge::ivs(terminal_hilbert_basis(p, qq));
      CHECK(hb == oracle::terminal_hilbert(p, qq));
      CHECK(hb == bridge::ivs(hilbert_basis(bridge::cone({{1, 0, 0}, {0, 1, 0}, {1, p, qq}}))));
    }
}
