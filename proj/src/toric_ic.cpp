#include "arcic/toric_ic.hpp"

#include "arcic/error.hpp"

#include <algorithm>
#include <set>

namespace arcic {

namespace {

/// For each point of `region`, the number of N-combinations of `gens`
/// (nondecreasing index) equal to it. `region` must be sorted by grading and
/// contain every cone point p - g that is reachable from its members.
std::map<LatticePoint, Integer> combination_counts(const std::vector<LatticePoint>& gens,
                                                   const std::vector<LatticePoint>& region) {
  std::map<LatticePoint, Integer> ways;
  for (const auto& p : region) ways.emplace(p, p.is_zero() ? 1 : 0);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    // region is sorted by grading, so p - g is visited before p.
    for (const auto& p : region) {
      auto prev = ways.find(p - g);
      if (prev != ways.end() && prev->second != 0) ways[p] += prev->second;
    }
  }
  return ways;
}

Integer count_combinations(const std::vector<LatticePoint>& gens, const std::vector<LatticePoint>& region,
                           const LatticePoint& target) {
  auto ways = combination_counts(gens, region);
  auto it = ways.find(target);
  return it == ways.end() ? Integer(0) : it->second;
}

Integer count_recursive(const SaturatedMonoid& m, const LatticePoint& rest, std::size_t first) {
  if (rest.is_zero()) return 1;
  Integer total = 0;
  const auto& basis = m.hilbert_basis();
  for (std::size_t i = first; i < basis.size(); ++i) {
    LatticePoint next = rest - basis[i];
    if (m.contains(next)) total += count_recursive(m, next, i);
  }
  return total;
}

}  // namespace

std::vector<LatticePoint> hilbert_basis(const RationalCone& cone) {
  DualVector g = grading_functional(cone);
  const std::size_t dim = cone.dimension();

  // A Hilbert-basis element either is a generator or lies in the half-open
  // parallelepiped of at most `dim` linearly independent generators, so its
  // grading is below the sum of the `dim` largest generator gradings.
  std::vector<Integer> grades;
  for (const auto& gen : cone.generators())
    if (!gen.is_zero()) grades.push_back(pairing(g, gen));
  std::sort(grades.rbegin(), grades.rend());
  Integer bound = 0;
  for (std::size_t i = 0; i < grades.size() && i < dim; ++i) bound += grades[i];

  std::vector<LatticePoint> points = enumerate_up_to(cone, g, bound);
  std::vector<LatticePoint> basis;
  for (const auto& p : points) {
    if (p.is_zero()) continue;
    // p decomposes iff p - h is a nonzero cone point for some basis element h
    // of smaller grading; all such h precede p in the enumeration order.
    bool decomposes = std::any_of(basis.begin(), basis.end(), [&](const LatticePoint& h) {
      LatticePoint rest = p - h;
      return !rest.is_zero() && contains(cone, rest);
    });
    if (!decomposes) basis.push_back(p);
  }

  for (const auto& [p, ways] : combination_counts(basis, points)) {
    if (ways == 0) throw std::logic_error("computed Hilbert basis does not generate " + p.to_string());
  }
  return basis;
}

SaturatedMonoid::SaturatedMonoid(RationalCone cone)
    : cone_(std::move(cone)), grading_(grading_functional(cone_)), hilbert_basis_(arcic::hilbert_basis(cone_)) {}

SaturatedMonoid SaturatedMonoid::from_generators(std::size_t rank, std::vector<LatticePoint> gens) {
  SaturatedMonoid m(cone_from_generators(rank, gens));
  for (const auto& h : m.hilbert_basis_) {
    auto region = m.down_set(h);
    if (count_combinations(gens, region, h) == 0) {
      m.warnings_.push_back("generators do not span a saturated monoid: " + h.to_string() +
                            " is a cone point but not a sum of generators; using the saturation");
      break;
    }
  }
  return m;
}

bool SaturatedMonoid::is_hilbert_element(const LatticePoint& p) const {
  return std::find(hilbert_basis_.begin(), hilbert_basis_.end(), p) != hilbert_basis_.end();
}

std::vector<LatticePoint> SaturatedMonoid::down_set(const LatticePoint& lambda) const {
  std::vector<LatticePoint> out;
  for (auto& p : enumerate_up_to(cone_, grading_, grade(lambda)))
    if (contains(lambda - p)) out.push_back(std::move(p));
  return out;
}

void SaturatedMonoid::require_member(const LatticePoint& p, const char* what) const {
  if (p.rank() != rank())
    throw InputError(std::string(what) + " " + p.to_string() + " has rank " + std::to_string(p.rank()) +
                     ", monoid has rank " + std::to_string(rank()));
  if (!contains(p)) throw DomainError(std::string(what) + " " + p.to_string() + " lies outside the cone");
}

HalfLaurent GradedSeries::coefficient(const LatticePoint& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? HalfLaurent() : it->second;
}

void GradedSeries::multiply_by_series_in(const LatticePoint& step, const std::vector<Integer>& c) {
  Integer step_grade = pairing(grading, step);
  std::map<LatticePoint, HalfLaurent> out;
  for (const auto& [lambda, coeff] : terms) {
    LatticePoint p = lambda;
    Integer grade = pairing(grading, lambda);
    for (std::size_t k = 0; k < c.size() && grade <= bound; ++k) {
      if (c[k] != 0) {
        HalfLaurent& slot = out[p];
        slot += coeff * HalfLaurent(c[k]);
        if (slot.is_zero()) out.erase(p);
      }
      p += step;
      grade += step_grade;
    }
  }
  terms = std::move(out);
}

Integer decomposition_count(const SaturatedMonoid& m, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  return count_combinations(m.hilbert_basis(), m.down_set(lambda), lambda);
}

Integer decomposition_count_oracle(const SaturatedMonoid& m, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  return count_recursive(m, lambda, 0);
}

GradedSeries toric_ic_series(const SaturatedMonoid& m, const Integer& bound) {
  GradedSeries s{m.grading(), bound, {}};
  if (bound < 0) return s;
  s.terms.emplace(LatticePoint(m.rank()), HalfLaurent(1));
  for (const auto& nu : m.hilbert_basis()) {
    // (1 - e^nu)^{-1} = sum_k e^{k nu}
    Integer terms_needed = bound / m.grade(nu) + 1;
    std::vector<Integer> geometric(static_cast<std::size_t>(terms_needed), Integer(1));
    s.multiply_by_series_in(nu, geometric);
  }
  return s;
}

HalfLaurent ic_arc_value(const SaturatedMonoid& m, const LatticePoint& lambda) {
  return HalfLaurent(decomposition_count(m, lambda));
}

}  // namespace arcic
