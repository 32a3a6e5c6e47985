#include "phylotrop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace phylotrop {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer denominator{std::string(den), 10};
    if (denominator == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer{std::string(num), 10}, denominator);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    result = Rational(Integer{std::string(body), 10});
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

const Rational& ExtRational::value() const {
  if (!value_) throw std::logic_error("value() on +inf");
  return *value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(*a.value_ + *b.value_));
}

std::string to_string(const ExtRational& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.value());
}

}  // namespace phylotrop
