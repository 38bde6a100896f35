#include "arcic/acceptance.hpp"

#include "arcic/global_curve.hpp"
#include "arcic/satake.hpp"
#include "arcic/strata.hpp"
#include "arcic/symfunc.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace arcic {

namespace {

SaturatedMonoid monoid(std::size_t rank, std::vector<LatticePoint> gens) {
  return SaturatedMonoid(cone_from_generators(rank, std::move(gens)));
}

CriterionResult timed(int id, std::string name, double limit_seconds, const std::function<bool(std::string&)>& body) {
  CriterionResult r{id, std::move(name), false, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > limit_seconds) {
    r.passed = false;
    std::ostringstream s;
    s << " (took " << r.seconds << " s, limit " << limit_seconds << " s)";
    r.detail += s.str();
  }
  return r;
}

std::vector<LatticePoint> points_up_to(const SaturatedMonoid& m, long bound) {
  return enumerate_up_to(m.cone(), m.grading(), bound);
}

/// Number of SSYT of shape lambda and content mu, by peeling horizontal strips
/// of the largest entry.
Integer kostka_number(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const int strip = mu.back();
  const Partition rest(mu.begin(), mu.end() - 1);
  Integer total = 0;
  Partition nu(lambda.size());
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
    if (i == lambda.size()) {
      if (left == 0) total += kostka_number(make_partition(nu), rest);
      return;
    }
    const int low = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= low && lambda[i] - v <= left; --v) {
      nu[i] = v;
      choose(i + 1, left - (lambda[i] - v));
    }
  };
  choose(0, strip);
  return total;
}

Integer binomial(long n, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

std::vector<NamedMonoid> desk_corpus() {
  std::vector<NamedMonoid> out;
  out.push_back({"N", monoid(1, {LatticePoint{1}})});
  out.push_back({"N^2", monoid(2, {LatticePoint{1, 0}, LatticePoint{0, 1}})});
  out.push_back({"<(1,0),(1,2)>", monoid(2, {LatticePoint{1, 0}, LatticePoint{1, 2}})});
  out.push_back({"<(1,1),(1,-1)>", monoid(2, {LatticePoint{1, 1}, LatticePoint{1, -1}})});
  out.push_back({"sat<(3,0),(2,1),(1,2),(0,3)>",
                 SaturatedMonoid::from_generators(
                     2, {LatticePoint{3, 0}, LatticePoint{2, 1}, LatticePoint{1, 2}, LatticePoint{0, 3}})});
  return out;
}

CriterionResult criterion_product_formula() {
  return timed(1, "toric product formula", 60, [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& [name, m] : desk_corpus()) {
      GradedSeries series = toric_ic_series(m, 12);
      for (const auto& lambda : points_up_to(m, 12)) {
        Integer dp = decomposition_count(m, lambda);
        Integer brute = decomposition_count_oracle(m, lambda);
        HalfLaurent coeff = series.coefficient(lambda);
        if (dp != brute || coeff != HalfLaurent(dp)) {
          detail = name + " at " + lambda.to_string() + ": dp " + dp.str() + ", oracle " + brute.str() + ", series " +
                   coeff.to_string();
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " lambdas with grading <= 12, three-way equal";
    return true;
  });
}

CriterionResult criterion_smooth_normalization() {
  return timed(2, "smooth-case normalization", 60, [](std::string& detail) {
    std::vector<NamedMonoid> free_monoids;
    free_monoids.push_back({"N", monoid(1, {LatticePoint{1}})});
    free_monoids.push_back({"N^2", monoid(2, {LatticePoint{1, 0}, LatticePoint{0, 1}})});
    free_monoids.push_back({"N^3", monoid(3, {LatticePoint{1, 0, 0}, LatticePoint{0, 1, 0}, LatticePoint{0, 0, 1}})});
    free_monoids.push_back({"<(1,0),(1,1)>", monoid(2, {LatticePoint{1, 0}, LatticePoint{1, 1}})});
    free_monoids.push_back(
        {"<(1,0,0),(1,1,0),(1,1,1)>", monoid(3, {LatticePoint{1, 0, 0}, LatticePoint{1, 1, 0}, LatticePoint{1, 1, 1}})});
    std::size_t checked = 0;
    for (const auto& [name, m] : free_monoids) {
      if (m.hilbert_basis().size() != m.cone().dimension()) {
        detail = name + " is not free";
        return false;
      }
      for (const auto& lambda : points_up_to(m, 12)) {
        if (ic_arc_value(m, lambda) != HalfLaurent(1)) {
          detail = name + " at " + lambda.to_string() + ": " + ic_arc_value(m, lambda).to_string();
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " lambdas over 5 free monoids, all m = 1";
    return true;
  });
}

CriterionResult criterion_global_local() {
  return timed(3, "global/local identity", 300, [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& [name, m] : desk_corpus()) {
      for (int q : {2, 3, 4}) {
        CurveData curve = CurveData::projective_line(q, 8);
        GradedSeries euler = global_euler_product(m, curve, 8);
        for (const auto& lambda : points_up_to(m, 8)) {
          Integer direct = divisor_sum_direct(m, curve, lambda);
          Integer normal = divisor_sum_via_normalization(m, curve, lambda);
          HalfLaurent coeff = euler.coefficient(lambda);
          if (direct != normal || coeff != HalfLaurent(direct)) {
            detail = name + ", q = " + std::to_string(q) + " at " + lambda.to_string() + ": direct " + direct.str() +
                     ", normalization " + normal.str() + ", Euler product " + coeff.to_string();
            return false;
          }
          ++checked;
        }
      }
    }
    detail = std::to_string(checked) + " (monoid, q, lambda) cases with grading <= 8, three-way equal";
    return true;
  });
}

CriterionResult criterion_stratification() {
  return timed(4, "stratification combinatorics", 120, [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& [name, m] : desk_corpus()) {
      for (const auto& lambda : points_up_to(m, 8)) {
        if (lambda.is_zero()) continue;
        ClosurePoset poset = closure_poset(m, lambda);
        const std::size_t n = poset.elements.size();
        std::vector<std::size_t> minima;
        for (std::size_t j = 0; j < n; ++j) {
          bool below_all = true;
          for (std::size_t i = 0; i < n && below_all; ++i) below_all = poset.refines[i][j];
          if (below_all) minima.push_back(j);
        }
        auto maxima = poset.maxima();
        std::set<std::size_t> max_set(maxima.begin(), maxima.end()), primitive;
        for (std::size_t i = 0; i < n; ++i)
          if (is_primitive_multiset(m, poset.elements[i])) primitive.insert(i);
        std::string where = name + " at " + lambda.to_string();
        if (minima.size() != 1 || !(poset.elements[minima[0]] == CMultiset::single(m, lambda))) {
          detail = where + ": minimum is not unique or not e^lambda";
          return false;
        }
        if (max_set != primitive) {
          detail = where + ": maximal elements differ from primitive multisets";
          return false;
        }
        if (Integer(primitive.size()) != decomposition_count(m, lambda)) {
          detail = where + ": " + std::to_string(primitive.size()) + " primitive multisets, m = " +
                   decomposition_count(m, lambda).str();
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " nonzero lambdas with grading <= 8";
    return true;
  });
}

CriterionResult criterion_cubic_jacobian() {
  return timed(5, "cubic monoid jacobian rank", 60, [](std::string& detail) {
    std::vector<LatticePoint> parts{LatticePoint{3, 0}, LatticePoint{2, 1}, LatticePoint{1, 2}, LatticePoint{0, 3}};
    SaturatedMonoid m = SaturatedMonoid::from_generators(2, parts);
    std::size_t rank = jacobian_rank_at_diagonal(m, parts, parts.size());
    detail = "rank " + std::to_string(rank) + " for 4 parts";
    return rank == 2;
  });
}

CriterionResult criterion_godement_jacquet() {
  return timed(6, "Godement-Jacquet identity", 120, [](std::string& detail) {
    std::size_t checked = 0;
    for (std::size_t n_gl : {2u, 3u}) {
      for (int n = 0; n <= 8; ++n) {
        HeckeElement ic = ic_lmonoid_degree(n_gl, {1}, n);
        for (const auto& lambda : partitions_of(n, n_gl)) {
          DominantWeight mu = weight_from_partition(lambda, n_gl);
          if (ic.value(mu) != HalfLaurent(1)) {
            detail = "N = " + std::to_string(n_gl) + " at " + mu.to_string() + ": " + ic.value(mu).to_string();
            return false;
          }
          ++checked;
        }
      }
    }
    detail = std::to_string(checked) + " dominant weights with |mu| <= 8, all values exactly 1";
    return true;
  });
}

CriterionResult criterion_satake_machinery() {
  return timed(7, "Satake machinery properties", 120, [](std::string& detail) {
    std::size_t kostka_cases = 0;
    for (int size = 0; size <= 6; ++size) {
      auto parts = partitions_of(size, static_cast<std::size_t>(size));
      for (const auto& lambda : parts) {
        for (const auto& mu : parts) {
          IntPolynomial k = kostka_foulkes(lambda, mu);
          std::string where = "K_{" + partition_to_string(lambda) + "," + partition_to_string(mu) + "}";
          for (const auto& c : k.coefficients()) {
            if (c < 0) {
              detail = where + " has a negative coefficient";
              return false;
            }
          }
          if (k.at(Integer(1)) != kostka_number(lambda, mu)) {
            detail = where + "(1) != tableau count";
            return false;
          }
          if (dominates(lambda, mu) && k.at(Integer(0)) != Integer(lambda == mu ? 1 : 0)) {
            detail = where + "(0) != delta";
            return false;
          }
          if (!dominates(lambda, mu) && !k.is_zero()) {
            detail = where + " nonzero without dominance";
            return false;
          }
          ++kostka_cases;
        }
      }
    }

    const HalfLaurent zero, one(1);
    for (std::size_t n_gl : {1u, 2u, 3u}) {
      if (!satake_roundtrip_check(n_gl, 8)) {
        detail = "Satake round trip fails for N = " + std::to_string(n_gl);
        return false;
      }
      for (int size = 0; size <= 8; ++size) {
        for (const auto& mu : partitions_of(size, n_gl)) {
          std::map<Partition, HalfLaurent> unit{{mu, one}};
          if (hall_littlewood_expand(schur(n_gl, mu), zero) != unit ||
              hall_littlewood_expand(SymPolynomial::monomial_symmetric(n_gl, mu), one) != unit) {
            detail = "specialization P(x;0) = s or P(x;1) = m fails at " + partition_to_string(mu);
            return false;
          }
        }
      }
    }

    const std::vector<std::pair<std::size_t, Partition>> reps{{2, {1}}, {3, {1}}, {2, {2}}, {3, {1, 1}}, {3, {2, 1}}};
    for (const auto& [n_gl, lambda] : reps) {
      Integer dim = schur(n_gl, lambda).at_ones().constant_term();
      for (int n = 0; n <= 8; ++n) {
        HalfLaurent got = sym_power_character(n_gl, lambda, n).at_ones();
        if (got != HalfLaurent(binomial(static_cast<long>(dim) + n - 1, n))) {
          detail = "dim Sym^" + std::to_string(n) + " of " + partition_to_string(lambda) + " for N = " +
                   std::to_string(n_gl) + " is " + got.to_string();
          return false;
        }
      }
    }
    detail = std::to_string(kostka_cases) +
             " Kostka-Foulkes pairs; round trip and specializations for N <= 3, degree <= 8; 5 plethysm series to order 8";
    return true;
  });
}

CriterionResult criterion_field_independence() {
  return timed(8, "field independence", 60, [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& [name, m] : desk_corpus()) {
      for (const auto& [lambda, c] : toric_ic_series(m, 12).terms) {
        if (!c.is_constant() || c != ic_arc_value(m, lambda)) {
          detail = name + " at " + lambda.to_string() + ": " + c.to_string();
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " toric coefficients, none involve v";
    return true;
  });
}

std::vector<CriterionResult> run_acceptance() {
  return {criterion_product_formula(), criterion_smooth_normalization(), criterion_global_local(),
          criterion_stratification(),  criterion_cubic_jacobian(),      criterion_godement_jacquet(),
          criterion_satake_machinery(), criterion_field_independence()};
}

}  // namespace arcic
