#include "arcic/error.hpp"
#include "arcic/lattice.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace arcic;

namespace {

using P = LatticePoint;
using D = DualVector;

std::vector<D> facets_of(std::size_t rank, std::vector<P> gens) {
  return cone_from_generators(rank, std::move(gens)).facets();
}

/// Solves A c = b exactly for square invertible A; empty if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// p is a nonnegative rational combination of gens. By Caratheodory it is
/// enough to try linearly independent subsets; each is completed to a square
/// system with coordinate vectors whose coefficients must then vanish.
bool in_cone_by_lp(std::size_t rank, const std::vector<P>& gens, const P& p) {
  const std::size_t g = gens.size();
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<P> subset;
    for (std::size_t i = 0; i < g; ++i)
      if (mask & (1u << i)) subset.push_back(gens[i]);
    if (subset.size() > rank) continue;
    std::vector<std::vector<Integer>> rows;
    for (const auto& s : subset) rows.push_back(s.coords());
    if (matrix_rank(rows) != subset.size()) continue;
    // complete with unit vectors to a basis
    std::vector<std::size_t> extra;
    for (std::size_t e = 0; e < rank && rows.size() < rank; ++e) {
      auto trial = rows;
      std::vector<Integer> unit(rank, 0);
      unit[e] = 1;
      trial.push_back(unit);
      if (matrix_rank(trial) == trial.size()) {
        rows = trial;
        extra.push_back(e);
      }
    }
    std::vector<std::vector<Rational>> a(rank, std::vector<Rational>(rank));
    for (std::size_t c = 0; c < rank; ++c)
      for (std::size_t r = 0; r < rank; ++r) a[r][c] = Rational(rows[c][r]);
    std::vector<Rational> b;
    for (const auto& x : p.coords()) b.emplace_back(x);
    auto c = solve(a, b);
    if (c.empty()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < subset.size(); ++i) ok = ok && c[i] >= 0;
    for (std::size_t i = subset.size(); i < rank; ++i) ok = ok && c[i] == 0;
    if (ok) return true;
  }
  return false;
}

struct Case {
  std::size_t rank;
  std::vector<P> gens;
};

std::vector<Case> corpus() {
  return {
      {1, {P{1}}},
      {2, {P{1, 0}, P{0, 1}}},
      {2, {P{1, 0}, P{1, 2}}},
      {2, {P{1, 1}, P{1, -1}}},
      {2, {P{3, 0}, P{2, 1}, P{1, 2}, P{0, 3}}},
      {3, {P{1, 0, 0}, P{0, 1, 0}, P{1, 1, 2}}},
      {3, {P{1, 0, 0}, P{0, 1, 0}, P{0, 0, 1}, P{1, 1, -1}}},
      {3, {P{1, 1, 0}, P{1, 0, 0}}},  // not full-dimensional
  };
}

}  // namespace

TEST_CASE("cone_from_generators examples") {
  CHECK(facets_of(1, {P{1}}) == std::vector<D>{D{1}});
  CHECK(facets_of(2, {P{1, 0}, P{1, 2}}) == std::vector<D>{D{0, 1}, D{2, -1}});
  CHECK(facets_of(2, {P{3, 0}, P{2, 1}, P{1, 2}, P{0, 3}}) == std::vector<D>{D{0, 1}, D{1, 0}});
  // lower-dimensional: the plane z = 0 plus the two facets inside it
  CHECK(facets_of(3, {P{1, 1, 0}, P{1, 0, 0}}) == std::vector<D>{D{0, 0, -1}, D{0, 0, 1}, D{0, 1, 0}, D{1, -1, 0}});
}

TEST_CASE("cone_from_generators is idempotent under redundant generators") {
  auto base = facets_of(2, {P{1, 0}, P{1, 2}});
  CHECK(facets_of(2, {P{1, 0}, P{1, 2}, P{1, 1}, P{2, 2}, P{1, 0}}) == base);
}

TEST_CASE("cone_from_generators input errors") {
  CHECK_THROWS_AS(cone_from_generators(0, {}), InputError);
  CHECK_THROWS_AS(cone_from_generators(2, {P{1, 0, 0}}), InputError);
}

TEST_CASE("facets are primitive and valid on generators") {
  for (const auto& [rank, gens] : corpus()) {
    RationalCone cone = cone_from_generators(rank, gens);
    for (const auto& f : cone.facets()) {
      CHECK(make_primitive(f) == f);
      for (const auto& g : gens) CHECK(pairing(f, g) >= 0);
    }
  }
}

TEST_CASE("is_strictly_convex examples") {
  CHECK(is_strictly_convex(cone_from_generators(2, {P{1, 0}, P{0, 1}})));
  CHECK_FALSE(is_strictly_convex(cone_from_generators(2, {P{1, 0}, P{-1, 0}})));
  CHECK(is_strictly_convex(cone_from_generators(2, {P{1, 0}, P{1, 1}, P{1, 2}})));
  CHECK(is_strictly_convex(cone_from_generators(3, {P{1, 1, 0}, P{1, 0, 0}})));
}

TEST_CASE("contains examples") {
  auto quadrant = cone_from_generators(2, {P{1, 0}, P{0, 1}});
  auto c12 = cone_from_generators(2, {P{1, 0}, P{1, 2}});
  CHECK(contains(quadrant, P{2, 3}));
  CHECK(contains(c12, P{1, 1}));
  CHECK_FALSE(contains(c12, P{0, 1}));
  CHECK_THROWS_AS(contains(c12, P{1, 1, 1}), InputError);
}

TEST_CASE("grading_functional examples") {
  CHECK(grading_functional(cone_from_generators(2, {P{1, 0}, P{0, 1}})) == D{1, 1});
  CHECK(grading_functional(cone_from_generators(2, {P{1, 0}, P{1, 2}})) == D{2, 0});
  CHECK(grading_functional(cone_from_generators(1, {P{1}})) == D{1});
  CHECK_THROWS_AS(grading_functional(cone_from_generators(2, {P{1, 0}, P{-1, 0}})), UnsupportedError);
}

TEST_CASE("enumerate_up_to examples") {
  auto quadrant = cone_from_generators(2, {P{1, 0}, P{0, 1}});
  CHECK(enumerate_up_to(quadrant, D{1, 1}, 1) == std::vector<P>{P{0, 0}, P{0, 1}, P{1, 0}});
  auto line = cone_from_generators(1, {P{1}});
  CHECK(enumerate_up_to(line, D{1}, 3) == std::vector<P>{P{0}, P{1}, P{2}, P{3}});
  auto c12 = cone_from_generators(2, {P{1, 0}, P{1, 2}});
  CHECK(enumerate_up_to(c12, D{2, 0}, 2) == std::vector<P>{P{0, 0}, P{1, 0}, P{1, 1}, P{1, 2}});
  CHECK(enumerate_up_to(c12, D{2, 0}, -1).empty());
  CHECK_THROWS_AS(enumerate_up_to(c12, D{0, 1}, 3), DomainError);
}

TEST_CASE("enumerate_up_to agrees with a box scan and is monotone in the bound") {
  for (const auto& [rank, gens] : corpus()) {
    RationalCone cone = cone_from_generators(rank, gens);
    DualVector g = grading_functional(cone);
    std::vector<P> previous;
    for (int bound = 0; bound <= 6; ++bound) {
      auto pts = enumerate_up_to(cone, g, bound);
      for (std::size_t i = 1; i < pts.size(); ++i) CHECK(GradedLess{&g}(pts[i - 1], pts[i]));
      for (const auto& p : previous) CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
      // brute force in [-6, 6]^rank; every point of grading <= 6 lies there for this corpus
      std::size_t count = 0;
      P p(rank);
      std::function<void(std::size_t)> scan = [&](std::size_t i) {
        if (i == rank) {
          if (contains(cone, p) && pairing(g, p) <= bound) ++count;
          return;
        }
        for (long x = -6; x <= 6; ++x) {
          p[i] = x;
          scan(i + 1);
        }
      };
      scan(0);
      CHECK(count == pts.size());
      previous = pts;
    }
  }
}

TEST_CASE("facet description agrees with exact feasibility on random points") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> coord(-5, 5);
  for (const auto& [rank, gens] : corpus()) {
    RationalCone cone = cone_from_generators(rank, gens);
    for (int trial = 0; trial < 60; ++trial) {
      P p(rank);
      for (std::size_t i = 0; i < rank; ++i) p[i] = coord(rng);
      CHECK(contains(cone, p) == in_cone_by_lp(rank, gens, p));
    }
  }
}

TEST_CASE("contains is invariant under unimodular change of basis") {
  const std::vector<std::vector<long>> matrices{{1, 1, 0, 1}, {2, 1, 1, 1}, {0, 1, -1, 0}};
  for (const auto& u : matrices) {
    auto apply = [&](const P& x) { return P(std::vector<Integer>{u[0] * x[0] + u[1] * x[1], u[2] * x[0] + u[3] * x[1]}); };
    for (const auto& gens : std::vector<std::vector<P>>{{P{1, 0}, P{1, 2}}, {P{1, 1}, P{1, -1}}, {P{2, 1}, P{1, 3}}}) {
      std::vector<P> moved;
      for (const auto& g : gens) moved.push_back(apply(g));
      auto c = cone_from_generators(2, gens);
      auto uc = cone_from_generators(2, moved);
      for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) CHECK(contains(c, P{x, y}) == contains(uc, apply(P{x, y})));
    }
  }
}

TEST_CASE("matrix_rank and orthogonal_complement") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{3, 0}, {2, 1}, {1, 2}, {0, 3}}) == 2);
  auto perp = orthogonal_complement({{1, 1, 0}, {1, 0, 0}}, 3);
  REQUIRE(perp.size() == 1);
  CHECK((perp[0] == std::vector<Integer>{0, 0, 1} || perp[0] == std::vector<Integer>{0, 0, -1}));
}
