#pragma once

#include "arcic/toric_ic.hpp"

#include <cstddef>
#include <vector>

namespace arcic {

/// Closed-point counts a_d of a curve over F_q, for d = 1..max_degree.
class CurveData {
 public:
  /// P^1 over F_q with a_d computed by the necklace formula. q >= 2.
  static CurveData projective_line(Integer q, std::size_t max_degree);
  /// Arbitrary counts; counts[d - 1] = a_d.
  static CurveData from_point_counts(Integer q, std::vector<Integer> counts);

  const Integer& q() const { return q_; }
  std::size_t max_degree() const { return counts_.size(); }
  /// a_d; throws DomainError if d is 0 or beyond max_degree().
  const Integer& closed_points(std::size_t d) const;

  /// Coefficients of prod_d (1 - u^d)^{-a_d} up to u^n_max, i.e. the number
  /// of effective divisors of each degree.
  std::vector<Integer> effective_divisor_counts(std::size_t n_max) const;

 private:
  Integer q_;
  std::vector<Integer> counts_;
};

/// Number of closed points of degree d on P^1 over F_q:
/// (1/d) sum_{e | d} moebius(e) q^{d/e}, plus 1 for d = 1 (the point at infinity).
Integer closed_points(const Integer& q, std::size_t d);

/// Effective divisors of degree n on P^1 over F_q: (q^{n+1} - 1) / (q - 1).
Integer sym_power_count(const Integer& q, std::size_t n);

/// sum over c-valued divisors D of degree lambda of prod_x m(lambda_x), by
/// enumerating value assignments to closed points grouped by residue degree.
Integer divisor_sum_direct(const SaturatedMonoid& m, const CurveData& curve, const LatticePoint& lambda);
Integer divisor_sum_direct(const SaturatedMonoid& m, const Integer& q, const LatticePoint& lambda);

/// sum over primitive multisets mu of degree lambda of prod_nu |C_{mu(nu)}(F_q)|.
Integer divisor_sum_via_normalization(const SaturatedMonoid& m, const CurveData& curve, const LatticePoint& lambda);
Integer divisor_sum_via_normalization(const SaturatedMonoid& m, const Integer& q, const LatticePoint& lambda);

/// prod_{d >= 1} prod_{nu in Prim(c)} (1 - e^{d nu})^{-a_d}, truncated to grading <= bound.
GradedSeries global_euler_product(const SaturatedMonoid& m, const CurveData& curve, const Integer& bound);
GradedSeries global_euler_product(const SaturatedMonoid& m, const Integer& q, const Integer& bound);

}  // namespace arcic
