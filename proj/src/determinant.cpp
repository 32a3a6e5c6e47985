#include "phylotrop/puiseux.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace phylotrop {

namespace {

constexpr std::size_t kMaxOrder = 16;
constexpr std::int64_t kExponentLimit = std::int64_t{1} << 40;
// Dense accumulation is used when the exponent span is at most this many
// times the number of partial products.
constexpr std::int64_t kDenseFactor = 8;

// Polynomial with exponents scaled to integers by a common denominator.
struct ScaledTerm {
  std::int64_t exponent;
  Integer coefficient;
};
using ScaledPoly = std::vector<ScaledTerm>;

Integer lcm_of_denominators(const PuiseuxMatrix& m) {
  Integer l = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& t : m.at(r, c).terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.exponent.get_den_mpz_t());
  return l;
}

ScaledPoly scale(const PuiseuxPoly& p, const Integer& denominator) {
  ScaledPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer e = t.exponent.get_num() * (denominator / t.exponent.get_den());
    if (!e.fits_slong_p() || abs(e) >= kExponentLimit)
      throw std::overflow_error("determinant: exponent too large after clearing denominators");
    out.push_back({e.get_si(), t.coefficient});
  }
  return out;
}

// Accumulates signed products entry·minor for one expansion step.
class Accumulator {
public:
  void add_products(const ScaledPoly& entry, const ScaledPoly& minor, bool negate) {
    pending_.push_back({&entry, &minor, negate});
  }

  ScaledPoly collect() {
    ScaledPoly out;
    if (pending_.empty()) return out;
    std::int64_t lo = INT64_MAX, hi = INT64_MIN, products = 0;
    for (const auto& p : pending_) {
      lo = std::min(lo, p.entry->front().exponent + p.minor->front().exponent);
      hi = std::max(hi, p.entry->back().exponent + p.minor->back().exponent);
      products += static_cast<std::int64_t>(p.entry->size() * p.minor->size());
    }
    const std::int64_t span = hi - lo + 1;
    if (span <= kDenseFactor * products) {
      if (static_cast<std::int64_t>(dense_.size()) < span) dense_.resize(span);
      for (const auto& p : pending_)
        for (const auto& x : *p.entry)
          for (const auto& y : *p.minor) {
            mpz_ptr slot = dense_[x.exponent + y.exponent - lo].get_mpz_t();
            if (p.negate)
              mpz_submul(slot, x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
            else
              mpz_addmul(slot, x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
          }
      for (std::int64_t i = 0; i < span; ++i) {
        if (dense_[i] != 0) {
          out.push_back({lo + i, dense_[i]});
          dense_[i] = 0;
        }
      }
    } else {
      sparse_.clear();
      for (const auto& p : pending_)
        for (const auto& x : *p.entry)
          for (const auto& y : *p.minor) {
            Integer c = x.coefficient * y.coefficient;
            if (p.negate) c = -c;
            sparse_.push_back({x.exponent + y.exponent, std::move(c)});
          }
      std::sort(sparse_.begin(), sparse_.end(),
                [](const ScaledTerm& a, const ScaledTerm& b) { return a.exponent < b.exponent; });
      for (std::size_t i = 0; i < sparse_.size();) {
        std::size_t j = i + 1;
        Integer c = sparse_[i].coefficient;
        while (j < sparse_.size() && sparse_[j].exponent == sparse_[i].exponent) c += sparse_[j++].coefficient;
        if (c != 0) out.push_back({sparse_[i].exponent, std::move(c)});
        i = j;
      }
    }
    pending_.clear();
    return out;
  }

private:
  struct Pending {
    const ScaledPoly* entry;
    const ScaledPoly* minor;
    bool negate;
  };
  std::vector<Pending> pending_;
  std::vector<Integer> dense_;
  ScaledPoly sparse_;
};

}  // namespace

PuiseuxPoly determinant(const PuiseuxMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kMaxOrder) throw std::invalid_argument("determinant: matrices larger than 16x16 are not supported");
  if (n == 0) return PuiseuxPoly::constant(1);

  const Integer denominator = lcm_of_denominators(m);
  std::vector<ScaledPoly> entries(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = scale(m.at(r, c), denominator);

  // minors[mask] = determinant of the bottom popcount(mask) rows restricted
  // to the columns in mask. Level k only reads level k - 1.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::vector<std::uint32_t>> by_level(n + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) by_level[std::popcount(mask)].push_back(mask);

  std::vector<ScaledPoly> minors(std::size_t{full} + 1);
  minors[0] = {{0, Integer(1)}};
  Accumulator acc;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = n - k;
    for (std::uint32_t mask : by_level[k]) {
      // Expansion along `row`; the sign counts columns of mask left of c.
      std::size_t position = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask >> c & 1u)) continue;
        const ScaledPoly& entry = entries[row * n + c];
        const ScaledPoly& minor = minors[mask & ~(std::uint32_t{1} << c)];
        if (!entry.empty() && !minor.empty()) acc.add_products(entry, minor, position % 2 == 1);
        ++position;
      }
      minors[mask] = acc.collect();
    }
    for (std::uint32_t mask : by_level[k - 1]) ScaledPoly().swap(minors[mask]);
  }

  std::vector<PuiseuxTerm> terms;
  terms.reserve(minors[full].size());
  for (auto& t : minors[full]) terms.push_back({Rational(Integer(t.exponent), denominator), std::move(t.coefficient)});
  return PuiseuxPoly::from_terms(std::move(terms));
}

}  // namespace phylotrop
