#include "phylotrop/tropical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phylotrop {

namespace {

TropicalValue negate(const TropicalValue& v) {
  if (v.is_infinite()) throw std::invalid_argument("cannot negate +inf: -inf is outside Q ∪ {+inf}");
  return TropicalValue(Rational(-v.value()));
}

LeafSet join(const std::vector<int>& s, int a, int b) {
  LeafSet out = s;
  out.push_back(a);
  out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TropicalPoint tropical_point(const DissimilarityVector& dv, Sign sign) {
  TropicalPoint p{dv.n, dv.m, {}};
  p.coordinates.reserve(dv.values.size());
  for (const auto& v : dv.values) p.coordinates.emplace_back(sign == Sign::Negated ? Rational(-v) : v);
  return p;
}

TropicalEvaluation trop_eval(const TropicalPolynomial& f, std::span<const TropicalValue> x) {
  if (x.size() != f.dimension)
    throw std::invalid_argument("trop_eval: point has " + std::to_string(x.size()) + " coordinates, polynomial expects " +
                                std::to_string(f.dimension));
  TropicalEvaluation result{TropicalValue::infinity(), 0};
  for (const auto& term : f.terms) {
    TropicalValue value(term.coefficient_valuation);
    for (auto [index, power] : term.exponents) {
      if (index >= f.dimension) throw std::invalid_argument("trop_eval: exponent index out of range");
      if (power <= 0) continue;
      if (x[index].is_infinite()) {
        value = TropicalValue::infinity();
        break;
      }
      value = TropicalValue(Rational(value.value() + x[index].value() * power));
    }
    if (value < result.minimum) {
      result.minimum = value;
      result.argmin_count = 1;
    } else if (value == result.minimum) {
      ++result.argmin_count;
    }
  }
  return result;
}

bool hypersurface_member(const TropicalPolynomial& f, std::span<const TropicalValue> x) {
  return trop_eval(f, x).argmin_count >= 2;
}

std::vector<ThreeTermRelation> three_term_relations(int m, int n) {
  if (m < 2 || m > n) throw std::invalid_argument("three_term_relations: need 2 <= m <= n");
  std::vector<ThreeTermRelation> out;
  if (n < m + 2) return out;
  for (const auto& s : k_subsets(n, m - 2)) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
    const int r = static_cast<int>(rest.size());
    for (const auto& q : k_subsets(r, 4))
      out.push_back({s, {rest[q[0] - 1], rest[q[1] - 1], rest[q[2] - 1], rest[q[3] - 1]}});
  }
  return out;
}

std::array<std::pair<LeafSet, LeafSet>, 3> relation_term_subsets(const ThreeTermRelation& rel) {
  auto [i, j, k, l] = rel.quad;
  return {{{join(rel.s, i, j), join(rel.s, k, l)},
           {join(rel.s, i, k), join(rel.s, j, l)},
           {join(rel.s, i, l), join(rel.s, j, k)}}};
}

TropicalPolynomial relation_polynomial(const ThreeTermRelation& rel, int m, int n) {
  TropicalPolynomial f{binomial(n, m), {}};
  for (const auto& [left, right] : relation_term_subsets(rel)) {
    TropicalTerm term{Rational(0), {}};
    std::size_t a = subset_rank(n, left), b = subset_rank(n, right);
    if (a == b)
      term.exponents = {{a, 2}};
    else
      term.exponents = {{std::min(a, b), 1}, {std::max(a, b), 1}};
    f.terms.push_back(std::move(term));
  }
  return f;
}

std::vector<PluckerViolation> plucker_prevariety_check(const TropicalPoint& x, Sign sign) {
  if (x.coordinates.size() != binomial(x.n, x.m))
    throw std::invalid_argument("plucker_prevariety_check: point has the wrong number of coordinates");
  std::vector<TropicalValue> coords = x.coordinates;
  if (sign == Sign::Negated)
    for (auto& c : coords) c = negate(c);

  std::vector<PluckerViolation> out;
  for (auto& rel : three_term_relations(x.m, x.n)) {
    PluckerViolation v{rel, {}, 0};
    auto subsets = relation_term_subsets(rel);
    for (std::size_t t = 0; t < 3; ++t)
      v.terms[t] = coords[subset_rank(x.n, subsets[t].first)] + coords[subset_rank(x.n, subsets[t].second)];
    const auto& lo = *std::min_element(v.terms.begin(), v.terms.end());
    v.argmin_count = static_cast<std::size_t>(std::count(v.terms.begin(), v.terms.end(), lo));
    if (v.argmin_count < 2) out.push_back(std::move(v));
  }
  return out;
}

TropicalValue tropical_det_bound(const ValuationMatrix& v) {
  const std::size_t n = v.size();
  for (const auto& row : v)
    if (row.size() != n) throw std::invalid_argument("tropical_det_bound: matrix is not square");
  if (n == 0) return TropicalValue(Rational(0));

  // +∞ entries become a penalty larger than any finite assignment can
  // offset; an optimum that pays it means no finite permutation exists.
  Rational largest = 0;
  for (const auto& row : v)
    for (const auto& x : row)
      if (x.is_finite()) largest = std::max(largest, Rational(abs(x.value())));
  const Rational finite_cap = largest * static_cast<long>(n);
  const Rational penalty = 2 * finite_cap + 1;
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    return v[i - 1][j - 1].is_finite() ? v[i - 1][j - 1].value() : penalty;
  };

  // Shortest augmenting path form of the Hungarian method, 1-based.
  std::vector<Rational> u(n + 1, Rational(0)), w(n + 1, Rational(0));
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1);
    std::vector<char> has_min(n + 1, 0), used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      std::size_t j1 = 0;
      Rational delta;
      bool have_delta = false;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0, j) - u[i0] - w[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          w[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += cost(match[j], j);
  if (total > finite_cap) return TropicalValue::infinity();
  return TropicalValue(total);
}

}  // namespace phylotrop
