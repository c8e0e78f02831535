#pragma once

// Abelian quotient singularities A^d / G for diagonal G. The toric model is
// the positive orthant over N = Z^d + sum_g Z g; we rewrite everything in a
// basis of N so the cone lives over the standard lattice.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "critarrow/cone.hpp"

namespace critarrow {

/// The element (1/r)(weights) of Q^d / Z^d.
struct CyclicGenerator {
  std::int64_t r = 1;
  std::vector<std::int64_t> weights;
};

/// "r:a1,...,ad", several generators separated by ';'. Throws ParseError.
std::vector<CyclicGenerator> parse_group_spec(std::string_view text);

struct QuotientDatum {
  std::size_t dim = 0;
  std::vector<CyclicGenerator> generators;
  Integer group_order;
  ExactMatrix basis_change;   // columns: a basis of N in original coordinates
  ExactMatrix basis_inverse;  // original coordinates -> N-coordinates
  SimplicialCone normalized_cone;
};

/// Throws BadParameters on r < 1 or a weight count different from dim.
QuotientDatum build_quotient(const std::vector<CyclicGenerator>& generators, std::size_t dim);

/// N-coordinates of x; throws NotALatticePoint when x is not in N.
ExactVector to_lattice_coords(const QuotientDatum& q, const ExactVector& x);
ExactVector from_lattice_coords(const QuotientDatum& q, const ExactVector& n);

enum class CanonicalCase { Case1, Case2, Case3, Case4, Case5, NotCanonical };
std::string_view canonical_case_name(CanonicalCase c) noexcept;

struct CyclicClassification {
  CanonicalCase label = CanonicalCase::NotCanonical;
  std::int64_t r = 1;                   // after dividing out gcd(r, a, b, c)
  std::array<std::int64_t, 3> weights;  // reduced weights, as given
  std::int64_t power = 1;               // generator power that matched
  std::array<int, 3> permutation{0, 1, 2};
  bool via_symmetry = false;            // power != 1 or permutation not the identity
};

/// Checks the five normal forms in order, over every generator power
/// coprime to r and every coordinate permutation; first match wins.
CyclicClassification classify_cyclic_3d(std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t c);

/// {(1,0,0),(0,1,0),(1,p,q)} together with (1, m_k, k), m_k = floor(kp/q) + 1.
/// Throws BadParameters unless 1 <= p < q and gcd(p, q) = 1.
std::vector<ExactVector> terminal_hilbert_basis(std::int64_t p, std::int64_t q);

}  // namespace critarrow
