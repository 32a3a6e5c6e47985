#include "phylotrop/puiseux.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylotrop {

namespace {

void canonicalize(std::vector<PuiseuxTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = terms[i].coefficient;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) c += terms[j++].coefficient;
    if (c != 0) {
      terms[out].exponent = terms[i].exponent;
      terms[out].coefficient = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists, b scaled by `sign`.
std::vector<PuiseuxTerm> merge(const std::vector<PuiseuxTerm>& a, const std::vector<PuiseuxTerm>& b, int sign) {
  std::vector<PuiseuxTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, sign > 0 ? b[j].coefficient : Integer(-b[j].coefficient)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coefficient + b[j].coefficient)
                           : Integer(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

PuiseuxPoly PuiseuxPoly::monomial(const Integer& c, const Rational& exponent) {
  PuiseuxPoly p;
  if (c != 0) {
    Rational e = exponent;
    e.canonicalize();
    p.terms_.push_back({e, c});
  }
  return p;
}

PuiseuxPoly PuiseuxPoly::from_terms(std::vector<PuiseuxTerm> terms) {
  for (auto& t : terms) t.exponent.canonicalize();
  canonicalize(terms);
  PuiseuxPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Valuation PuiseuxPoly::valuation() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation(terms_.front().exponent);
}

Integer PuiseuxPoly::coefficient(const Rational& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const PuiseuxTerm& t, const Rational& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return Integer(0);
}

std::vector<Rational> PuiseuxPoly::exponents() const {
  std::vector<Rational> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<PuiseuxTerm> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) products.push_back({Rational(x.exponent + y.exponent), Integer(x.coefficient * y.coefficient)});
  canonicalize(products);
  PuiseuxPoly p;
  p.terms_ = std::move(products);
  return p;
}

std::string to_string(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      out += t.coefficient.get_str();
    } else if (t.coefficient < 0) {
      out += " - ";
      out += Integer(-t.coefficient).get_str();
    } else {
      out += " + ";
      out += t.coefficient.get_str();
    }
    out += "*t^(" + to_string(t.exponent) + ")";
    first = false;
  }
  return out;
}

PuiseuxPoly& PuiseuxMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PuiseuxMatrix index out of range");
  return entries_[r * cols_ + c];
}

const PuiseuxPoly& PuiseuxMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PuiseuxMatrix index out of range");
  return entries_[r * cols_ + c];
}

ValuationMatrix valuations(const PuiseuxMatrix& m) {
  ValuationMatrix out(m.rows(), std::vector<Valuation>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).valuation();
  return out;
}

}  // namespace phylotrop
