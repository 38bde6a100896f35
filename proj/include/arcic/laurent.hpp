#pragma once

#include "arcic/integer.hpp"

#include <map>
#include <string>

namespace arcic {

/// Laurent polynomial in a half-power variable v, where v^2 = q.
///
/// Every IC value and Hecke-algebra coefficient in the library lives in this
/// ring. Zero coefficients are never stored, so structural equality is ring
/// equality.
class HalfLaurent {
 public:
  using TermMap = std::map<long, Integer>;

  HalfLaurent() = default;
  HalfLaurent(Integer constant);  // NOLINT(google-explicit-constructor)
  HalfLaurent(int constant) : HalfLaurent(Integer(constant)) {}

  /// c * v^exponent.
  static HalfLaurent monomial(Integer coeff, long exponent);
  /// v^exponent.
  static HalfLaurent v_power(long exponent) { return monomial(1, exponent); }
  /// q^exponent = v^(2 exponent).
  static HalfLaurent q_power(long exponent) { return monomial(1, 2 * exponent); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no positive or negative power of v occurs.
  bool is_constant() const;
  Integer coefficient(long exponent) const;
  Integer constant_term() const { return coefficient(0); }
  /// Value at v = 1 (sum of coefficients).
  Integer at_one() const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const HalfLaurent& other);
  HalfLaurent operator-() const;
  /// Divides every coefficient by d; throws std::logic_error if inexact.
  HalfLaurent exact_div(const Integer& d) const;
  HalfLaurent pow(unsigned n) const;

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  /// Human-readable form, e.g. "v^-2 + 3".
  std::string to_string() const;

 private:
  void add_term(long exponent, const Integer& coeff);
  TermMap terms_;
};

/// Value of a HalfLaurent at a numeric q, written as rational + sqrt_q * sqrt(q).
///
/// v is sent to sign * sqrt(q); sign = -1 realizes the embedding that sends
/// the Frobenius square root to -sqrt(q).
struct NumericValue {
  Rational rational;
  Rational sqrt_q;
};

NumericValue specialize(const HalfLaurent& value, const Integer& q, int sign = +1);

std::string rational_to_string(const Rational& r);

}  // namespace arcic
