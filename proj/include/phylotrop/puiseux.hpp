#pragma once

#include "phylotrop/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phylotrop {

/// val(p): least exponent present, +∞ for the zero polynomial.
using Valuation = ExtRational;

struct PuiseuxTerm {
  Rational exponent;
  Integer coefficient;
  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Finite sum of integer multiples of rational powers of t. Terms are kept
/// sorted by ascending exponent with no zero coefficients, so equality is
/// structural and the valuation is the first exponent.
class PuiseuxPoly {
public:
  PuiseuxPoly() = default;

  static PuiseuxPoly constant(const Integer& c) { return monomial(c, Rational(0)); }
  static PuiseuxPoly monomial(const Integer& c, const Rational& exponent);
  /// Accepts terms in any order; merges repeated exponents and drops zeros.
  static PuiseuxPoly from_terms(std::vector<PuiseuxTerm> terms);

  std::span<const PuiseuxTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Valuation valuation() const;
  Integer coefficient(const Rational& exponent) const;
  std::vector<Rational> exponents() const;

  PuiseuxPoly operator-() const;
  PuiseuxPoly& operator+=(const PuiseuxPoly& other);
  PuiseuxPoly& operator-=(const PuiseuxPoly& other);
  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

private:
  std::vector<PuiseuxTerm> terms_;
};

/// Report form, e.g. "-3*t^(-9) + 1*t^(-1/2)"; "0" for the zero polynomial.
std::string to_string(const PuiseuxPoly& p);

/// Dense matrix of polynomials; at() is 0-based and bounds-checked.
class PuiseuxMatrix {
public:
  PuiseuxMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PuiseuxPoly& at(std::size_t r, std::size_t c);
  const PuiseuxPoly& at(std::size_t r, std::size_t c) const;

  friend bool operator==(const PuiseuxMatrix&, const PuiseuxMatrix&) = default;

private:
  std::size_t rows_, cols_;
  std::vector<PuiseuxPoly> entries_;
};

using ValuationMatrix = std::vector<std::vector<Valuation>>;

ValuationMatrix valuations(const PuiseuxMatrix& m);

/// Exact determinant by Laplace expansion with memoized minors over column
/// subsets: O(2^n · n) polynomial products, no division. Exponents are put
/// over a common denominator internally. Square matrices up to 16×16;
/// throws std::invalid_argument otherwise.
PuiseuxPoly determinant(const PuiseuxMatrix& m);

}  // namespace phylotrop
