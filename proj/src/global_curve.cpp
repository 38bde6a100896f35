#include "arcic/global_curve.hpp"

#include "arcic/error.hpp"

#include <map>

namespace arcic {

namespace {

int moebius(std::size_t n) {
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Integer binomial(const Integer& n, std::size_t k) {
  if (n < 0) return 0;
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Coefficients of (1 - x)^{-a} up to x^n: binomial(a + k - 1, k).
std::vector<Integer> negative_binomial_series(const Integer& a, std::size_t n) {
  std::vector<Integer> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = k == 0 ? Integer(1) : binomial(a + k - 1, k);
  return c;
}

void require_q(const Integer& q) {
  if (q < 2) throw DomainError("q must be at least 2");
}

std::size_t to_size(const Integer& x) { return static_cast<std::size_t>(x); }

/// Sum over value assignments to closed points, processing (degree, value)
/// blocks in order. `used[d]` counts places of degree d already assigned.
struct DirectSum {
  const SaturatedMonoid& m;
  const CurveData& curve;
  struct Block {
    std::size_t degree;
    LatticePoint step;  // degree * value
    Integer weight;     // m(value)
  };
  std::vector<Block> blocks;
  std::vector<Integer> used;

  Integer run(std::size_t i, const LatticePoint& rest) {
    if (rest.is_zero()) return 1;
    if (i == blocks.size()) return 0;
    Integer total = run(i + 1, rest);
    const Block& b = blocks[i];
    const Integer& available = curve.closed_points(b.degree);
    Integer& u = used[b.degree];
    LatticePoint r = rest;
    Integer power = 1;
    for (std::size_t k = 1;; ++k) {
      r -= b.step;
      if (!m.contains(r)) break;
      if (u + k > available) break;
      power *= b.weight;
      // choose k of the remaining places of this degree
      Integer ways = binomial(available - u, k) * power;
      u += k;
      total += ways * run(i + 1, r);
      u -= k;
    }
    return total;
  }
};

void primitive_multisets(const SaturatedMonoid& m, std::size_t first, const LatticePoint& rest,
                         std::vector<std::size_t>& counts, std::vector<std::vector<std::size_t>>& out) {
  if (rest.is_zero()) {
    out.push_back(counts);
    return;
  }
  const auto& basis = m.hilbert_basis();
  for (std::size_t i = first; i < basis.size(); ++i) {
    LatticePoint next = rest - basis[i];
    if (!m.contains(next)) continue;
    ++counts[i];
    primitive_multisets(m, i, next, counts, out);
    --counts[i];
  }
}

void require_degrees(const CurveData& curve, const Integer& needed) {
  if (needed > Integer(curve.max_degree()))
    throw DomainError("curve data covers degrees up to " + std::to_string(curve.max_degree()) + ", need " +
                      needed.str());
}

}  // namespace

Integer closed_points(const Integer& q, std::size_t d) {
  require_q(q);
  if (d == 0) throw DomainError("closed point degree must be positive");
  Integer sum = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = moebius(e);
    if (mu != 0) sum += mu * ipow(q, static_cast<unsigned>(d / e));
  }
  Integer count = sum / d;
  if (d == 1) count += 1;  // point at infinity
  return count;
}

Integer sym_power_count(const Integer& q, std::size_t n) {
  require_q(q);
  return (ipow(q, static_cast<unsigned>(n + 1)) - 1) / (q - 1);
}

CurveData CurveData::projective_line(Integer q, std::size_t max_degree) {
  CurveData c;
  for (std::size_t d = 1; d <= max_degree; ++d) c.counts_.push_back(arcic::closed_points(q, d));
  c.q_ = std::move(q);
  return c;
}

CurveData CurveData::from_point_counts(Integer q, std::vector<Integer> counts) {
  for (const auto& a : counts)
    if (a < 0) throw DomainError("closed point counts must be nonnegative");
  CurveData c;
  c.q_ = std::move(q);
  c.counts_ = std::move(counts);
  return c;
}

const Integer& CurveData::closed_points(std::size_t d) const {
  if (d == 0 || d > counts_.size())
    throw DomainError("no closed point count for degree " + std::to_string(d));
  return counts_[d - 1];
}

std::vector<Integer> CurveData::effective_divisor_counts(std::size_t n_max) const {
  std::vector<Integer> series(n_max + 1, 0);
  series[0] = 1;
  for (std::size_t d = 1; d <= n_max; ++d) {
    auto factor = negative_binomial_series(closed_points(d), n_max / d);
    std::vector<Integer> next(n_max + 1, 0);
    for (std::size_t i = 0; i <= n_max; ++i) {
      if (series[i] == 0) continue;
      for (std::size_t k = 0; i + k * d <= n_max; ++k) next[i + k * d] += series[i] * factor[k];
    }
    series = std::move(next);
  }
  return series;
}

Integer divisor_sum_direct(const SaturatedMonoid& m, const CurveData& curve, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  const Integer top = m.grade(lambda);
  DirectSum sum{m, curve, {}, std::vector<Integer>(to_size(top) + 1, 0)};
  if (top > 0) require_degrees(curve, top);
  auto values = m.down_set(lambda);
  for (std::size_t d = 1; Integer(d) <= top; ++d) {
    for (const auto& v : values) {
      if (v.is_zero()) continue;
      LatticePoint step = Integer(d) * v;
      if (!m.contains(lambda - step)) continue;
      sum.blocks.push_back({d, std::move(step), decomposition_count(m, v)});
    }
  }
  return sum.run(0, lambda);
}

Integer divisor_sum_direct(const SaturatedMonoid& m, const Integer& q, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  return divisor_sum_direct(m, CurveData::projective_line(q, to_size(m.grade(lambda))), lambda);
}

Integer divisor_sum_via_normalization(const SaturatedMonoid& m, const CurveData& curve, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> counts(m.hilbert_basis().size(), 0);
  primitive_multisets(m, 0, lambda, counts, multisets);

  const Integer top = m.grade(lambda);
  if (top > 0) require_degrees(curve, top);
  auto sym = curve.effective_divisor_counts(to_size(top));
  Integer total = 0;
  for (const auto& mu : multisets) {
    Integer term = 1;
    for (std::size_t c : mu) term *= sym[c];
    total += term;
  }
  return total;
}

Integer divisor_sum_via_normalization(const SaturatedMonoid& m, const Integer& q, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  return divisor_sum_via_normalization(m, CurveData::projective_line(q, to_size(m.grade(lambda))), lambda);
}

GradedSeries global_euler_product(const SaturatedMonoid& m, const CurveData& curve, const Integer& bound) {
  GradedSeries s{m.grading(), bound, {}};
  if (bound < 0) return s;
  s.terms.emplace(LatticePoint(m.rank()), HalfLaurent(1));
  for (std::size_t d = 1; Integer(d) <= bound; ++d) {
    for (const auto& nu : m.hilbert_basis()) {
      Integer step_grade = Integer(d) * m.grade(nu);
      if (step_grade > bound) continue;
      const Integer& a = curve.closed_points(d);
      if (a == 0) continue;
      s.multiply_by_series_in(Integer(d) * nu, negative_binomial_series(a, to_size(bound / step_grade)));
    }
  }
  return s;
}

GradedSeries global_euler_product(const SaturatedMonoid& m, const Integer& q, const Integer& bound) {
  return global_euler_product(m, CurveData::projective_line(q, bound > 0 ? to_size(bound) : 0), bound);
}

}  // namespace arcic
