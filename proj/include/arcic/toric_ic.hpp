#pragma once

#include "arcic/laurent.hpp"
#include "arcic/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace arcic {

/// Lattice points of a strictly convex rational cone, with its Hilbert basis
/// and grading computed once at construction.
class SaturatedMonoid {
 public:
  /// Throws UnsupportedError if the cone contains a line.
  explicit SaturatedMonoid(RationalCone cone);

  /// Saturates the monoid generated by `gens`. When the saturation is strictly
  /// larger than the generated monoid a message is recorded in warnings().
  static SaturatedMonoid from_generators(std::size_t rank, std::vector<LatticePoint> gens);

  const RationalCone& cone() const { return cone_; }
  std::size_t rank() const { return cone_.rank(); }
  const DualVector& grading() const { return grading_; }
  /// Prim(c), ordered by (grading, lex).
  const std::vector<LatticePoint>& hilbert_basis() const { return hilbert_basis_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool contains(const LatticePoint& p) const { return arcic::contains(cone_, p); }
  Integer grade(const LatticePoint& p) const { return pairing(grading_, p); }
  bool is_hilbert_element(const LatticePoint& p) const;
  /// Cone points mu with lambda - mu also in the cone, ordered by (grading, lex).
  std::vector<LatticePoint> down_set(const LatticePoint& lambda) const;
  /// Throws DomainError unless p has the right rank and lies in the cone.
  void require_member(const LatticePoint& p, const char* what) const;

 private:
  RationalCone cone_;
  DualVector grading_;
  std::vector<LatticePoint> hilbert_basis_;
  std::vector<std::string> warnings_;
};

/// Hilbert basis of the lattice points of a strictly convex cone.
std::vector<LatticePoint> hilbert_basis(const RationalCone& cone);

/// Truncated formal series sum m_lambda e^lambda over the cone, keyed by
/// lattice point, with v-Laurent coefficients.
struct GradedSeries {
  DualVector grading;
  Integer bound;
  std::map<LatticePoint, HalfLaurent> terms;

  /// Zero for points that are absent.
  HalfLaurent coefficient(const LatticePoint& lambda) const;
  /// Multiplies by sum_{k>=0} c_k e^{k step}, dropping terms above the bound.
  void multiply_by_series_in(const LatticePoint& step, const std::vector<Integer>& c);
};

/// Number of multisets of Hilbert-basis elements summing to lambda (dynamic
/// programming over the down-set of lambda).
Integer decomposition_count(const SaturatedMonoid& m, const LatticePoint& lambda);

/// Same number by plain recursion without memoization.
Integer decomposition_count_oracle(const SaturatedMonoid& m, const LatticePoint& lambda);

/// prod_{nu in Prim(c)} (1 - e^nu)^{-1}, truncated to grading <= bound.
GradedSeries toric_ic_series(const SaturatedMonoid& m, const Integer& bound);

/// Value of the IC function on the orbit T(O) t^lambda.
HalfLaurent ic_arc_value(const SaturatedMonoid& m, const LatticePoint& lambda);

}  // namespace arcic
