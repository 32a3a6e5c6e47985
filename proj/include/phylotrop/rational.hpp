#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace phylotrop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "0.125" into an exact
/// rational. A leading '-' is accepted. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

/// An element of Q ∪ {+∞}, ordered with +∞ above every rational.
class ExtRational {
public:
  ExtRational() = default;  // +∞
  ExtRational(Rational value) : value_(std::move(value)) {}

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Requires a finite value.
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// +∞ absorbs.
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);

private:
  std::optional<Rational> value_;
};

/// "inf" for +∞, otherwise the canonical rational string.
std::string to_string(const ExtRational& value);

}  // namespace phylotrop
