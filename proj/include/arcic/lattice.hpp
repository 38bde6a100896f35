#pragma once

#include "arcic/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace arcic {

/// Integer vector tagged by the lattice it lives in.
///
/// LatticePoint (cocharacters) and DualVector (characters, facet normals)
/// share the representation but are not interchangeable; the only bridge
/// between them is `pairing`.
template <class Tag>
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t rank) : coords_(rank, 0) {}
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
  }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
  }

  IntVector& operator+=(const IntVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator-(IntVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend IntVector operator*(const Integer& k, IntVector a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const IntVector& a, const IntVector& b) { return a.coords_ < b.coords_; }

  /// "(1,-2,0)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Integer> coords_;
};

using LatticePoint = IntVector<struct CocharacterTag>;
using DualVector = IntVector<struct CharacterTag>;

/// <alpha, lambda>; throws InputError on rank mismatch.
Integer pairing(const DualVector& alpha, const LatticePoint& lambda);

/// Divides out the gcd of the coordinates (zero vector unchanged).
template <class Tag>
IntVector<Tag> make_primitive(IntVector<Tag> v) {
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  if (g > 1)
    for (std::size_t i = 0; i < v.rank(); ++i) v[i] /= g;
  return v;
}

/// Rank over Q of a list of integer vectors (all of the same length).
std::size_t matrix_rank(const std::vector<std::vector<Integer>>& rows);

/// Primitive integer basis of the orthogonal complement of span(rows) in Q^n,
/// in a deterministic order (reduced row echelon form of the null space).
std::vector<std::vector<Integer>> orthogonal_complement(const std::vector<std::vector<Integer>>& rows,
                                                        std::size_t n);

/// Polyhedral cone in Lambda (x) R generated by lattice points, together
/// with its complete inequality description.
///
/// `facets()` holds primitive dual vectors alpha with <alpha, x> >= 0 on the
/// cone, sorted lexicographically. For a full-dimensional cone these are
/// exactly the facet normals. Otherwise the list also contains +-e for a
/// primitive basis e of the orthogonal complement of the linear span, and the
/// facet normals are taken inside that span.
class RationalCone {
 public:
  std::size_t rank() const { return rank_; }
  /// Dimension of the linear span of the generators.
  std::size_t dimension() const { return dimension_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }
  const std::vector<DualVector>& facets() const { return facets_; }

  friend RationalCone cone_from_generators(std::size_t rank, std::vector<LatticePoint> gens);

 private:
  std::size_t rank_ = 0;
  std::size_t dimension_ = 0;
  std::vector<LatticePoint> generators_;
  std::vector<DualVector> facets_;
};

/// Builds the cone and derives its facets by Fourier-Motzkin elimination.
/// Throws InputError if rank == 0 or a generator has the wrong length.
RationalCone cone_from_generators(std::size_t rank, std::vector<LatticePoint> gens);

/// True iff the cone contains no line.
bool is_strictly_convex(const RationalCone& cone);

bool contains(const RationalCone& cone, const LatticePoint& p);

/// Sum of the facet normals; positive on every nonzero lattice point of a
/// strictly convex cone. Throws UnsupportedError for cones containing a line.
DualVector grading_functional(const RationalCone& cone);

/// Lattice points v of the cone with <g, v> <= bound, ordered by (<g, v>, lex).
/// Throws DomainError if g is not positive on the nonzero generators.
std::vector<LatticePoint> enumerate_up_to(const RationalCone& cone, const DualVector& g,
                                          const Integer& bound);

/// Order used throughout: grading first, then lexicographic.
struct GradedLess {
  const DualVector* grading;
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    Integer ga = pairing(*grading, a), gb = pairing(*grading, b);
    if (ga != gb) return ga < gb;
    return a < b;
  }
};

}  // namespace arcic
