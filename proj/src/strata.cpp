#include "arcic/strata.hpp"

#include "arcic/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace arcic {

namespace {

/// Multiset as a lex-ordered map; used for search states.
using State = std::map<LatticePoint, std::size_t>;

State to_state(const CMultiset& mu) { return {mu.parts().begin(), mu.parts().end()}; }

std::size_t state_size(const State& s) {
  std::size_t n = 0;
  for (const auto& [p, c] : s) n += c;
  return n;
}

/// Unordered splits lambda = a + b into nonzero cone points, memoized per call.
class SplitTable {
 public:
  explicit SplitTable(const SaturatedMonoid& m) : m_(m) {}

  const std::vector<std::pair<LatticePoint, LatticePoint>>& splits(const LatticePoint& lambda) {
    auto it = table_.find(lambda);
    if (it != table_.end()) return it->second;
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    for (const auto& a : m_.down_set(lambda)) {
      LatticePoint b = lambda - a;
      if (a.is_zero() || b.is_zero() || b < a) continue;
      out.emplace_back(a, std::move(b));
    }
    return table_.emplace(lambda, std::move(out)).first->second;
  }

 private:
  const SaturatedMonoid& m_;
  std::map<LatticePoint, std::vector<std::pair<LatticePoint, LatticePoint>>> table_;
};

/// All multisets obtained from s by one elementary splitting move.
std::vector<State> one_step_refinements(const State& s, SplitTable& table) {
  std::vector<State> out;
  for (const auto& [lambda, count] : s) {
    for (const auto& [a, b] : table.splits(lambda)) {
      State next = s;
      if (--next[lambda] == 0) next.erase(lambda);
      ++next[a];
      ++next[b];
      out.push_back(std::move(next));
    }
  }
  return out;
}

void collect_multisets(const std::vector<LatticePoint>& candidates, std::size_t first, const LatticePoint& rest,
                       const SaturatedMonoid& m, std::vector<CMultiset::Part>& current,
                       std::vector<std::vector<CMultiset::Part>>& out) {
  if (rest.is_zero()) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = first; i < candidates.size(); ++i) {
    LatticePoint next = rest - candidates[i];
    if (!m.contains(next)) continue;
    bool extend = !current.empty() && current.back().first == candidates[i];
    if (extend) {
      ++current.back().second;
    } else {
      current.emplace_back(candidates[i], 1);
    }
    collect_multisets(candidates, i, next, m, current, out);
    if (extend) {
      --current.back().second;
    } else {
      current.pop_back();
    }
  }
}

}  // namespace

CMultiset::CMultiset(const SaturatedMonoid& m, const std::vector<Part>& parts) {
  std::map<LatticePoint, std::size_t> merged;
  for (const auto& [p, c] : parts) {
    if (c == 0) continue;
    m.require_member(p, "multiset part");
    if (p.is_zero()) throw DomainError("multiset parts must be nonzero");
    merged[p] += c;
  }
  parts_.assign(merged.begin(), merged.end());
  std::stable_sort(parts_.begin(), parts_.end(),
                   [&](const Part& a, const Part& b) { return GradedLess{&m.grading()}(a.first, b.first); });
}

CMultiset CMultiset::single(const SaturatedMonoid& m, const LatticePoint& lambda) {
  if (lambda.is_zero()) return {};
  return CMultiset(m, {{lambda, 1}});
}

std::size_t CMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [p, c] : parts_) n += c;
  return n;
}

std::size_t CMultiset::multiplicity(const LatticePoint& lambda) const {
  for (const auto& [p, c] : parts_)
    if (p == lambda) return c;
  return 0;
}

std::string CMultiset::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : parts_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "e^" + p.to_string();
  }
  return s;
}

LatticePoint degree(const SaturatedMonoid& m, const CMultiset& mu) {
  LatticePoint d(m.rank());
  for (const auto& [p, c] : mu.parts()) d += Integer(c) * p;
  return d;
}

bool refines(const SaturatedMonoid& m, const CMultiset& mu, const CMultiset& mu_prime) {
  if (degree(m, mu) != degree(m, mu_prime)) return false;
  const std::size_t target_size = mu.size();
  if (target_size < mu_prime.size()) return false;
  const State target = to_state(mu);
  SplitTable table(m);
  std::set<State> seen{to_state(mu_prime)};
  std::deque<State> queue{to_state(mu_prime)};
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (s == target) return true;
    // each move adds one part, so states larger than mu cannot lead to it
    if (state_size(s) >= target_size) continue;
    for (auto& next : one_step_refinements(s, table)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

std::vector<CMultiset> enumerate_multisets(const SaturatedMonoid& m, const LatticePoint& lambda) {
  m.require_member(lambda, "lambda");
  std::vector<LatticePoint> candidates;
  for (auto& p : m.down_set(lambda))
    if (!p.is_zero()) candidates.push_back(std::move(p));
  std::vector<std::vector<CMultiset::Part>> raw;
  std::vector<CMultiset::Part> current;
  collect_multisets(candidates, 0, lambda, m, current, raw);

  std::vector<CMultiset> out;
  out.reserve(raw.size());
  for (const auto& parts : raw) out.emplace_back(m, parts);
  std::sort(out.begin(), out.end(), [](const CMultiset& a, const CMultiset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_primitive_multiset(const SaturatedMonoid& m, const CMultiset& mu) {
  return std::all_of(mu.parts().begin(), mu.parts().end(),
                     [&](const CMultiset::Part& part) { return m.is_hilbert_element(part.first); });
}

Integer fiber_count(const CValuedDivisor& d, const SaturatedMonoid& m) {
  Integer product = 1;
  for (const auto& place : d.places) {
    if (place.degree == 0) throw DomainError("places must have positive degree");
    m.require_member(place.value, "divisor value");
    if (place.value.is_zero()) throw DomainError("divisor values must be nonzero");
    product *= decomposition_count(m, place.value);
  }
  return product;
}

std::size_t ClosurePoset::minimum() const {
  for (std::size_t j = 0; j < elements.size(); ++j) {
    bool below_all = true;
    for (std::size_t i = 0; i < elements.size() && below_all; ++i) below_all = refines[i][j];
    if (below_all) return j;
  }
  throw std::logic_error("closure poset has no minimum");
}

std::vector<std::size_t> ClosurePoset::maxima() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool refined = false;
    for (std::size_t k = 0; k < elements.size() && !refined; ++k) refined = k != i && refines[k][i];
    if (!refined) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ClosurePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !refines[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && refines[i][k] && refines[k][j];
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

ClosurePoset closure_poset(const SaturatedMonoid& m, const LatticePoint& lambda) {
  ClosurePoset poset;
  poset.elements = enumerate_multisets(m, lambda);
  const std::size_t n = poset.elements.size();

  std::map<State, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(to_state(poset.elements[i]), i);

  SplitTable table(m);
  std::vector<std::vector<std::size_t>> finer(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> targets;
    for (const auto& next : one_step_refinements(to_state(poset.elements[i]), table))
      targets.insert(index.at(next));
    finer[i].assign(targets.begin(), targets.end());
  }

  // refines[k][i] iff k is reachable from i through splitting moves
  poset.refines.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> stack{i};
    poset.refines[i][i] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t k : finer[cur]) {
        if (!poset.refines[k][i]) {
          poset.refines[k][i] = true;
          stack.push_back(k);
        }
      }
    }
  }
  return poset;
}

std::size_t jacobian_rank_at_diagonal(const SaturatedMonoid& m, const std::vector<LatticePoint>& parts,
                                      std::size_t num_coords) {
  std::vector<std::vector<Integer>> columns;
  for (const auto& p : parts) {
    m.require_member(p, "part");
    if (p.is_zero()) throw DomainError("parts must be nonzero");
    columns.push_back(p.coords());
  }
  // d(sum_x x^j lambda_x) vanishes at x = 0 for j >= 2; only Z^1 contributes.
  if (num_coords == 0) return 0;
  return matrix_rank(columns);
}

}  // namespace arcic
