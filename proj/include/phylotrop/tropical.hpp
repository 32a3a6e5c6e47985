#pragma once

#include "phylotrop/combinatorics.hpp"
#include "phylotrop/dissimilarity.hpp"
#include "phylotrop/puiseux.hpp"
#include "phylotrop/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace phylotrop {

using TropicalValue = ExtRational;

/// A point of (Q ∪ {+∞})^a, a = C(n, m), coordinates indexed by the
/// m-subsets of {1..n} in lexicographic order.
struct TropicalPoint {
  int n = 0;
  int m = 0;
  std::vector<TropicalValue> coordinates;

  const TropicalValue& at(std::span<const int> sigma) const { return coordinates.at(subset_rank(n, sigma)); }
};

enum class Sign { AsGiven, Negated };

/// The dissimilarity vector as a tropical point, optionally negated.
TropicalPoint tropical_point(const DissimilarityVector& dv, Sign sign = Sign::AsGiven);

/// val(c) + Σ exponent·x_index. Exponents are kept sparse, sorted by
/// coordinate index, and positive.
struct TropicalTerm {
  Rational coefficient_valuation;
  std::vector<std::pair<std::size_t, int>> exponents;
};

struct TropicalPolynomial {
  std::size_t dimension = 0;  // a
  std::vector<TropicalTerm> terms;
};

struct TropicalEvaluation {
  TropicalValue minimum;
  std::size_t argmin_count = 0;
};

/// Minimum over terms and how many terms attain it. A term touching a +∞
/// coordinate is +∞; when every term is +∞ all of them attain the minimum.
/// Throws std::invalid_argument on a dimension mismatch.
TropicalEvaluation trop_eval(const TropicalPolynomial& f, std::span<const TropicalValue> x);

/// The minimum is attained at least twice.
bool hypersurface_member(const TropicalPolynomial& f, std::span<const TropicalValue> x);

/// p_{S∪ij}·p_{S∪kl} - p_{S∪ik}·p_{S∪jl} + p_{S∪il}·p_{S∪jk}
struct ThreeTermRelation {
  std::vector<int> s;        // |S| = m - 2
  std::array<int, 4> quad;   // i < j < k < l, disjoint from S
  friend auto operator<=>(const ThreeTermRelation&, const ThreeTermRelation&) = default;
};

/// Every (S, quad) pair in lexicographic order. Throws unless 2 ≤ m ≤ n;
/// empty when n < m + 2.
std::vector<ThreeTermRelation> three_term_relations(int m, int n);

/// The three index sets S∪ij, S∪kl, ... paired per term.
std::array<std::pair<LeafSet, LeafSet>, 3> relation_term_subsets(const ThreeTermRelation& relation);

/// Tropicalization with every coefficient valuation 0.
TropicalPolynomial relation_polynomial(const ThreeTermRelation& relation, int m, int n);

struct PluckerViolation {
  ThreeTermRelation relation;
  std::array<TropicalValue, 3> terms;
  std::size_t argmin_count;
};

/// Three-term relations whose minimum is attained only once on the
/// (optionally negated) point, sorted lexicographically.
std::vector<PluckerViolation> plucker_prevariety_check(const TropicalPoint& x, Sign sign = Sign::AsGiven);

/// min over permutations π of Σ_i V[i][π(i)], by the Hungarian method in
/// exact arithmetic. +∞ when every permutation hits a +∞ entry.
TropicalValue tropical_det_bound(const ValuationMatrix& v);

}  // namespace phylotrop
