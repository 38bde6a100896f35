#pragma once

#include "arcic/toric_ic.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace arcic {

/// Finitely supported map from nonzero cone points to positive multiplicities.
///
/// Parts are kept sorted by (grading, lex) and merged, so two multisets over
/// the same monoid are equal iff their parts() are equal.
class CMultiset {
 public:
  using Part = std::pair<LatticePoint, std::size_t>;

  CMultiset() = default;
  /// Throws DomainError for zero parts or parts outside the cone.
  CMultiset(const SaturatedMonoid& m, const std::vector<Part>& parts);
  /// e^lambda.
  static CMultiset single(const SaturatedMonoid& m, const LatticePoint& lambda);

  const std::vector<Part>& parts() const { return parts_; }
  /// Total multiplicity.
  std::size_t size() const;
  bool empty() const { return parts_.empty(); }
  std::size_t multiplicity(const LatticePoint& lambda) const;

  friend bool operator==(const CMultiset&, const CMultiset&) = default;
  friend bool operator<(const CMultiset& a, const CMultiset& b) { return a.parts_ < b.parts_; }

  std::string to_string() const;

 private:
  std::vector<Part> parts_;
};

/// c-valued divisor on a curve, with each closed point recorded only by its
/// residue degree.
struct CValuedDivisor {
  struct Place {
    std::size_t degree;
    LatticePoint value;
  };
  std::vector<Place> places;
};

/// sum_lambda mu(lambda) lambda; the zero vector of the monoid rank for the empty multiset.
LatticePoint degree(const SaturatedMonoid& m, const CMultiset& mu);

/// mu refines mu_prime: mu is reachable from mu_prime by replacing parts
/// lambda with pairs lambda' + lambda'' = lambda of nonzero cone points.
bool refines(const SaturatedMonoid& m, const CMultiset& mu, const CMultiset& mu_prime);

/// Every multiset of degree lambda, ordered by (size, parts).
std::vector<CMultiset> enumerate_multisets(const SaturatedMonoid& m, const LatticePoint& lambda);

/// Support contained in the Hilbert basis.
bool is_primitive_multiset(const SaturatedMonoid& m, const CMultiset& mu);

/// prod over places of decomposition_count(value).
Integer fiber_count(const CValuedDivisor& d, const SaturatedMonoid& m);

/// The refinement order on one degree fiber. refines[i][j] means
/// elements[i] refines elements[j].
struct ClosurePoset {
  std::vector<CMultiset> elements;
  std::vector<std::vector<bool>> refines;

  /// Index of the element refined by every other one; throws std::logic_error if none.
  std::size_t minimum() const;
  /// Indices of elements refined by no other element.
  std::vector<std::size_t> maxima() const;
  /// Pairs (i, j) such that elements[i] refines elements[j] with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

ClosurePoset closure_poset(const SaturatedMonoid& m, const LatticePoint& lambda);

/// Rank of the differential at the diagonal origin of the map
/// (A^1)^n -> prod_j Lambda (x) A^1, D -> (sum_x x^j lambda_x)_{j=1..num_coords}.
std::size_t jacobian_rank_at_diagonal(const SaturatedMonoid& m, const std::vector<LatticePoint>& parts,
                                      std::size_t num_coords);

}  // namespace arcic
