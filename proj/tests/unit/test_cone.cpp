#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "critarrow/cone.hpp"
#include "critarrow/error.hpp"

using namespace critarrow;
using bridge::q;

namespace {

const oracle::Gens kTerminal{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
const oracle::Gens kStandard3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const oracle::Gens kA1{{1, 0}, {1, 2}};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InternalInconsistency;
}

}  // namespace

TEST_CASE("cone construction rejects bad generators") {
  CHECK(code_of([] { bridge::cone({{2, 0}, {0, 1}}); }) == Errc::InvalidCone);
  CHECK(code_of([] { bridge::cone({{1, 1}, {2, 2}}); }) == Errc::InvalidCone);
  CHECK(code_of([] { bridge::cone({{1, 0, 0}, {0, 1}}); }) == Errc::DimensionMismatch);
  CHECK(SimplicialCone::from_rays(bridge::evs({{2, 0}, {0, 3}})).generators() == bridge::evs({{1, 0}, {0, 1}}));
}

TEST_CASE("dual basis") {
  CHECK(dual_basis(bridge::cone(kStandard3)) == bridge::evs(kStandard3));
  CHECK(dual_basis(bridge::cone(kTerminal)) ==
        std::vector<ExactVector>{ExactVector{q(1), q(0), q(-1, 2)}, ExactVector{q(0), q(1), q(-1, 2)},
                                 ExactVector{q(0), q(0), q(1, 2)}});
  CHECK(dual_basis(bridge::cone(kA1)) ==
        std::vector<ExactVector>{ExactVector{q(1), q(-1, 2)}, ExactVector{q(0), q(1, 2)}});
}

TEST_CASE("dual generators") {
  CHECK(bridge::ivs(dual_generators(bridge::cone(kTerminal))) == oracle::Gens{{2, 0, -1}, {0, 2, -1}, {0, 0, 1}});
  CHECK(bridge::ivs(dual_generators(bridge::cone(kStandard3))) == kStandard3);
  CHECK(bridge::ivs(dual_generators(bridge::cone(kA1))) == oracle::Gens{{2, -1}, {0, 1}});
}

TEST_CASE("duality laws on random cones") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 150; ++n) {
    const std::size_t d = 1 + n % 5;
    const auto g = oracle::random_cone(rng, d, 5, 500);
    const SimplicialCone c = bridge::cone(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) CHECK(dot(c.dual_basis()[i], c.generator(j)) == (i == j ? 1 : 0));
    CHECK(bridge::ivs(c.dual_generators()) == oracle::dual_rays(g));
    // The dual of the dual gives back the generators (as a set).
    const SimplicialCone back(c.dual_generators());
    auto a = back.dual_generators();
    auto b = c.generators();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("minimal face") {
  const SimplicialCone c = bridge::cone(kTerminal);
  const FaceSelector all = minimal_face(c, bridge::ev({1, 1, 1}));
  CHECK(all.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(all.coords == std::vector<Rational>{q(1, 2), q(1, 2), q(1, 2)});
  CHECK(all.interior());
  const FaceSelector two = minimal_face(c, bridge::ev({1, 2, 2}));
  CHECK(two.indices == std::vector<std::size_t>{1, 2});
  CHECK(two.coords == std::vector<Rational>{0, 1, 1});
  CHECK(minimal_face(c, bridge::ev({1, 0, 0})).indices == std::vector<std::size_t>{0});
  CHECK(code_of([&] { minimal_face(c, bridge::ev({0, 0, 0})); }) == Errc::ZeroVector);
  CHECK(code_of([&] { minimal_face(c, bridge::ev({-1, 0, 0})); }) == Errc::NotInCone);
}

TEST_CASE("hilbert basis") {
  CHECK(bridge::ivs(hilbert_basis(bridge::cone(kStandard3))) == oracle::Gens{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(bridge::ivs(hilbert_basis(bridge::cone(kTerminal))) ==
        oracle::Gens{{0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {1, 1, 2}});
  CHECK(bridge::ivs(hilbert_basis(bridge::cone(kA1))) == oracle::Gens{{1, 0}, {1, 1}, {1, 2}});
  CHECK(bridge::ivs(parallelepiped_points(bridge::cone(kA1))) == oracle::Gens{{1, 1}});

  Limits tight;
  tight.max_parallelepiped_points = 1;
  CHECK(code_of([&] { hilbert_basis(bridge::cone(kTerminal), tight); }) == Errc::ResourceLimit);
}

TEST_CASE("hilbert basis matches brute force on random cones") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 120; ++n) {
    const std::size_t d = 2 + n % 2;
    const auto g = oracle::random_cone(rng, d, 4, 50);
    CHECK(bridge::ivs(hilbert_basis(bridge::cone(g))) == oracle::hilbert(g));
  }
}

TEST_CASE("hilbert basis elements are irreducible and generate the parallelepiped") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 40; ++n) {
    const auto g = oracle::random_cone(rng, 3, 3, 30);
    const SimplicialCone c = bridge::cone(g);
    const auto hb = bridge::ivs(hilbert_basis(c));
    for (const auto& x : hb)
      for (const auto& y : hb) {
        if (x == y) continue;
        oracle::Vec z(3);
        for (int r = 0; r < 3; ++r) z[r] = x[r] - y[r];
        CHECK_FALSE(oracle::in_cone(g, z));
      }
    // Every parallelepiped point is a nonnegative integer combination, found
    // by repeatedly subtracting a basis element that stays in the cone.
    for (const auto& p : bridge::ivs(parallelepiped_points(c))) {
      std::vector<oracle::Vec> frontier{p};
      bool reached = false;
      for (int step = 0; step < 64 && !frontier.empty() && !reached; ++step) {
        std::vector<oracle::Vec> next;
        for (const auto& x : frontier) {
          if (std::all_of(x.begin(), x.end(), [](auto t) { return t == 0; })) {
            reached = true;
            break;
          }
          for (const auto& h : hb) {
            oracle::Vec z(3);
            for (int r = 0; r < 3; ++r) z[r] = x[r] - h[r];
            if (oracle::in_cone(g, z)) next.push_back(z);
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
      }
      CHECK(reached);
    }
  }
}

TEST_CASE("discrepancy") {
  const oracle::Gens g4{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 3, 3, 0}, {4, 3, 1, 4}};
  CHECK(discrepancy(bridge::cone(g4), bridge::ev({4, 4, 2, 3})) == q(5, 4));
  CHECK(discrepancy(bridge::cone(g4), bridge::ev({4, 3, 1, 4})) == 0);
  CHECK(discrepancy(bridge::cone(kTerminal), bridge::ev({1, 1, 1})) == q(1, 2));
}

TEST_CASE("discrepancy scales linearly") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 60; ++n) {
    const auto g = oracle::random_cone(rng, 3, 4, 40);
    const SimplicialCone c = bridge::cone(g);
    for (const auto& h : hilbert_basis(c)) {
      const Rational a1 = discrepancy(c, h);
      for (int k = 2; k <= 4; ++k) CHECK(discrepancy(c, Rational(k) * h) + 1 == k * (a1 + 1));
      const auto o = oracle::discrepancy(g, bridge::iv(h));
      CHECK(a1 == q(o.n, o.d));
    }
  }
}

TEST_CASE("singularity classes") {
  CHECK(classify_singularity(bridge::cone(kTerminal)) == SingularityClass::Terminal);
  CHECK(classify_singularity(bridge::cone(kStandard3)) == SingularityClass::Smooth);
  CHECK(classify_singularity(bridge::cone(kA1)) == SingularityClass::Canonical);
  CHECK(classify_singularity(bridge::cone({{1, 0}, {-1, 3}})) == SingularityClass::LogTerminalOnly);
  CHECK(singularity_name(SingularityClass::LogTerminalOnly) == "log-terminal-only");
}

TEST_CASE("singularity class survives unimodular changes of basis") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 60; ++n) {
    const auto g = oracle::random_cone(rng, 3, 3, 25);
    const auto base = classify_singularity(bridge::cone(g));
    const auto u = oracle::random_unimodular(rng, 3);
    oracle::Gens h;
    for (const auto& v : g) h.push_back(oracle::apply(u, v));
    CHECK(classify_singularity(bridge::cone(h)) == base);
  }
}

TEST_CASE("essential candidates") {
  CHECK(bridge::ivs(essential_candidates(bridge::cone(kTerminal))) == oracle::Gens{{1, 1, 1}});
  CHECK(essential_candidates(bridge::cone(kStandard3)).empty());
  CHECK(bridge::ivs(essential_candidates(bridge::cone({{1, 0, 0}, {0, 1, 0}, {1, 2, 3}}))) ==
        oracle::Gens{{1, 1, 1}, {1, 2, 2}});
}

TEST_CASE("level one lattice points") {
  SUBCASE("terminal normal form") {
    const oracle::Gens g{{1, 0, 0}, {0, 1, 0}, {1, 2, 5}};
    const SimplicialCone c = bridge::cone(g);
    for (const auto& w : essential_candidates(c)) {
      const LevelOneResult r = level_one_lattice_points(c, w);
      CHECK(r.complete);
      CHECK(std::find(r.points.begin(), r.points.end(), bridge::ev({1, 0, 0})) != r.points.end());
      CHECK(bridge::ivs(r.points) == oracle::level_one(g, bridge::iv(w), oracle::level_one_bound(g, bridge::iv(w))));
    }
  }
  SUBCASE("boundary w needs a bound") {
    const SimplicialCone c = bridge::cone(kStandard3);
    CHECK(code_of([&] { level_one_lattice_points(c, bridge::ev({1, 0, 0})); }) == Errc::UnboundedRegion);
    const LevelOneResult r = level_one_lattice_points(c, bridge::ev({1, 0, 0}), 2);
    CHECK_FALSE(r.complete);
    CHECK(std::find(r.points.begin(), r.points.end(), bridge::ev({1, 0, 0})) != r.points.end());
    for (const auto& u : r.points) {
      CHECK(dot(u, bridge::ev({1, 0, 0})) == 1);
      CHECK(c.dual_contains(u));
    }
  }
}

TEST_CASE("level one points agree with brute force on random interior points") {
  std::mt19937_64 rng(47);
  for (int n = 0; n < 40; ++n) {
    const auto g = oracle::random_cone(rng, 3, 3, 20);
    const SimplicialCone c = bridge::cone(g);
    for (const auto& w : essential_candidates(c)) {
      if (!minimal_face(c, w).interior()) continue;
      const auto r = level_one_lattice_points(c, w);
      CHECK(bridge::ivs(r.points) == oracle::level_one(g, bridge::iv(w), oracle::level_one_bound(g, bridge::iv(w))));
    }
  }
}
