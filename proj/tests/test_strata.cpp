#include "arcic/error.hpp"
#include "arcic/strata.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace arcic;

namespace {

using P = LatticePoint;

SaturatedMonoid monoid(std::size_t rank, std::vector<P> gens) {
  return SaturatedMonoid(cone_from_generators(rank, std::move(gens)));
}

std::vector<P> expand(const CMultiset& mu) {
  std::vector<P> out;
  for (const auto& [p, k] : mu.parts()) out.insert(out.end(), k, p);
  return out;
}

/// mu refines mu' iff the parts of mu can be grouped so that the groups sum
/// to the parts of mu'.
bool refines_by_grouping(const SaturatedMonoid& m, const CMultiset& mu, const CMultiset& mu_prime) {
  auto fine = expand(mu);
  auto coarse = expand(mu_prime);
  if (fine.size() < coarse.size()) return false;
  std::vector<P> remaining = coarse;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == fine.size()) {
      for (const auto& r : remaining)
        if (!r.is_zero()) return false;
      return true;
    }
    for (auto& r : remaining) {
      P next = r - fine[i];
      if (!m.contains(next)) continue;
      P saved = r;
      r = next;
      if (assign(i + 1)) return true;
      r = saved;
    }
    return false;
  };
  return assign(0);
}

/// Every multiset of nonzero cone points summing to lambda, as sorted lists.
std::set<std::vector<P>> brute_force_multisets(const SaturatedMonoid& m, const P& lambda) {
  auto pts = enumerate_up_to(m.cone(), m.grading(), m.grade(lambda));
  std::set<std::vector<P>> out;
  std::vector<P> current;
  std::function<void(const P&)> rec = [&](const P& rest) {
    if (rest.is_zero()) {
      auto sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    for (const auto& p : pts) {
      if (p.is_zero() || !m.contains(rest - p)) continue;
      current.push_back(p);
      rec(rest - p);
      current.pop_back();
    }
  };
  rec(lambda);
  return out;
}

}  // namespace

TEST_CASE("degree examples") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  CHECK(degree(c12, CMultiset()) == P{0, 0});
  CHECK(degree(c12, CMultiset(c12, {{P{1, 0}, 2}, {P{1, 2}, 1}})) == P{3, 2});
}

TEST_CASE("CMultiset validation and canonical form") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  CHECK_THROWS_AS(CMultiset(c12, {{P{0, 0}, 1}}), DomainError);
  CHECK_THROWS_AS(CMultiset(c12, {{P{0, 1}, 1}}), DomainError);
  CMultiset a(c12, {{P{1, 2}, 1}, {P{1, 0}, 1}, {P{1, 0}, 1}});
  CMultiset b(c12, {{P{1, 0}, 2}, {P{1, 2}, 1}});
  CHECK(a == b);
  CHECK(a.size() == 3);
  CHECK(a.multiplicity(P{1, 0}) == 2);
  CHECK(a.to_string() == "2*e^(1,0) + e^(1,2)");
}

TEST_CASE("refines examples") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  CMultiset split(c12, {{P{1, 0}, 1}, {P{1, 2}, 1}});
  CMultiset whole = CMultiset::single(c12, P{2, 2});
  CHECK(refines(c12, whole, whole));
  CHECK(refines(c12, split, whole));
  CHECK_FALSE(refines(c12, whole, split));
  CHECK_FALSE(refines(c12, CMultiset(c12, {{P{1, 0}, 2}}), CMultiset::single(c12, P{1, 2})));
}

TEST_CASE("enumerate_multisets examples") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  auto fiber = enumerate_multisets(c12, P{2, 2});
  // {(2,2)}, {(1,1) x 2}, {(1,0),(1,2)}
  REQUIRE(fiber.size() == 3);
  CHECK(fiber[0] == CMultiset::single(c12, P{2, 2}));
  CHECK(fiber[1] == CMultiset(c12, {{P{1, 0}, 1}, {P{1, 2}, 1}}));
  CHECK(fiber[2] == CMultiset(c12, {{P{1, 1}, 2}}));

  for (const auto& nu : c12.hilbert_basis())
    CHECK(enumerate_multisets(c12, nu) == std::vector<CMultiset>{CMultiset::single(c12, nu)});
  CHECK(enumerate_multisets(c12, P{0, 0}) == std::vector<CMultiset>{CMultiset()});
  CHECK_THROWS_AS(enumerate_multisets(c12, P{0, 1}), DomainError);

  auto quadrant = monoid(2, {P{1, 0}, P{0, 1}});
  CHECK(enumerate_multisets(quadrant, P{2, 2}).size() == 9);
}

TEST_CASE("enumerate_multisets matches brute force") {
  for (const auto& m : {monoid(2, {P{1, 0}, P{1, 2}}), monoid(2, {P{1, 1}, P{1, -1}}), monoid(2, {P{1, 0}, P{0, 1}})}) {
    for (const auto& lambda : enumerate_up_to(m.cone(), m.grading(), 6)) {
      std::set<std::vector<P>> got;
      for (const auto& mu : enumerate_multisets(m, lambda)) {
        auto e = expand(mu);
        std::sort(e.begin(), e.end());
        got.insert(e);
        CHECK(degree(m, mu) == lambda);
      }
      CHECK(got == brute_force_multisets(m, lambda));
    }
  }
}

TEST_CASE("is_primitive_multiset examples") {
  auto quadrant = monoid(2, {P{1, 0}, P{0, 1}});
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  CHECK(is_primitive_multiset(quadrant, CMultiset(quadrant, {{P{1, 0}, 3}})));
  CHECK_FALSE(is_primitive_multiset(c12, CMultiset::single(c12, P{2, 2})));
  CHECK(is_primitive_multiset(c12, CMultiset()));
}

TEST_CASE("fiber_count examples") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  CHECK(fiber_count(CValuedDivisor{}, c12) == 1);
  CHECK(fiber_count(CValuedDivisor{{{1, P{2, 2}}}}, c12) == 2);
  CHECK(fiber_count(CValuedDivisor{{{1, P{1, 0}}, {3, P{1, 1}}}}, c12) == 1);
  CHECK(fiber_count(CValuedDivisor{{{1, P{2, 2}}, {2, P{4, 4}}}}, c12) == 6);
  CHECK_THROWS_AS(fiber_count(CValuedDivisor{{{1, P{0, 1}}}}, c12), DomainError);
  CHECK_THROWS_AS(fiber_count(CValuedDivisor{{{0, P{1, 0}}}}, c12), DomainError);
  for (const auto& lambda : enumerate_up_to(c12.cone(), c12.grading(), 8)) {
    if (lambda.is_zero()) continue;
    CHECK(fiber_count(CValuedDivisor{{{1, lambda}}}, c12) == decomposition_count(c12, lambda));
  }
}

TEST_CASE("closure_poset examples") {
  auto c12 = monoid(2, {P{1, 0}, P{1, 2}});
  auto single = closure_poset(c12, P{1, 1});
  CHECK(single.elements.size() == 1);
  CHECK(single.maxima() == std::vector<std::size_t>{0});

  auto poset = closure_poset(c12, P{2, 2});
  CHECK(poset.elements[poset.minimum()] == CMultiset::single(c12, P{2, 2}));
  auto maxima = poset.maxima();
  REQUIRE(maxima.size() == 2);
  for (auto i : maxima) CHECK(is_primitive_multiset(c12, poset.elements[i]));
  CHECK(poset.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 0}});
}

TEST_CASE("refinement is a partial order agreeing with grouping") {
  for (const auto& m : {monoid(2, {P{1, 0}, P{1, 2}}), monoid(2, {P{1, 1}, P{1, -1}}), monoid(1, {P{1}})}) {
    for (const auto& lambda : enumerate_up_to(m.cone(), m.grading(), 8)) {
      ClosurePoset poset = closure_poset(m, lambda);
      const auto& r = poset.refines;
      const std::size_t n = poset.elements.size();
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(r[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && r[i][j]) CHECK_FALSE(r[j][i]);
          if (r[i][j]) CHECK(poset.elements[i].size() >= poset.elements[j].size());
          for (std::size_t k = 0; k < n; ++k)
            if (r[i][j] && r[j][k]) CHECK(r[i][k]);
        }
      }
      if (m.grade(lambda) > 6) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          bool expected = refines_by_grouping(m, poset.elements[i], poset.elements[j]);
          CHECK(r[i][j] == expected);
          CHECK(refines(m, poset.elements[i], poset.elements[j]) == expected);
        }
      }
    }
  }
}

TEST_CASE("jacobian_rank_at_diagonal examples") {
  auto quadrant = SaturatedMonoid::from_generators(2, {P{3, 0}, P{2, 1}, P{1, 2}, P{0, 3}});
  std::vector<P> cubic{P{3, 0}, P{2, 1}, P{1, 2}, P{0, 3}};
  for (std::size_t k = 1; k <= 4; ++k) CHECK(jacobian_rank_at_diagonal(quadrant, cubic, k) == 2);
  CHECK(jacobian_rank_at_diagonal(quadrant, {P{1, 0}, P{0, 1}}, 1) == 2);
  CHECK(jacobian_rank_at_diagonal(monoid(1, {P{1}}), {P{1}}, 1) == 1);
  CHECK_THROWS_AS(jacobian_rank_at_diagonal(quadrant, {P{-1, 0}}, 1), DomainError);
}
