#include "arcic/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace arcic {

HalfLaurent::HalfLaurent(Integer constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

HalfLaurent HalfLaurent::monomial(Integer coeff, long exponent) {
  HalfLaurent r;
  if (coeff != 0) r.terms_.emplace(exponent, std::move(coeff));
  return r;
}

bool HalfLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer HalfLaurent::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer HalfLaurent::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void HalfLaurent::add_term(long exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) {
  *this = *this * other;
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

HalfLaurent HalfLaurent::exact_div(const Integer& d) const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw std::logic_error("HalfLaurent::exact_div: inexact division");
    r.terms_.emplace(e, c / d);
  }
  return r;
}

HalfLaurent HalfLaurent::pow(unsigned n) const {
  HalfLaurent result(1);
  HalfLaurent base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

NumericValue specialize(const HalfLaurent& value, const Integer& q, int sign) {
  if (q <= 0) throw std::invalid_argument("specialize: q must be positive");
  NumericValue out{0, 0};
  for (const auto& [e, c] : value.terms()) {
    // v^e = (sign sqrt q)^e = sign^e q^floor(e/2) (sqrt q)^(e mod 2)
    long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
    bool odd = (e - 2 * half) != 0;
    Rational term(c);
    if (half >= 0) {
      term *= Rational(ipow(q, static_cast<unsigned>(half)));
    } else {
      term /= Rational(ipow(q, static_cast<unsigned>(-half)));
    }
    if (odd) {
      if (sign < 0) term = -term;
      out.sqrt_q += term;
    } else {
      out.rational += term;
    }
  }
  return out;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace arcic
