#include "arcic/lattice.hpp"

#include "arcic/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>
#include <utility>

namespace arcic {

namespace {

using Row = std::vector<Integer>;
using RatRow = std::vector<Rational>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RatRow>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatRow> to_rational(const std::vector<Row>& rows) {
  std::vector<RatRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

/// Scales a rational vector to a primitive integer vector with the same direction.
Row clear_denominators(const RatRow& v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer& d = boost::multiprecision::denominator(x);
    l = l / gcd(l, d) * d;
  }
  Row out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

Integer dot(const Row& a, const Row& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize(Row& r) {
  Integer g = 0;
  for (const auto& x : r) g = gcd(g, x);
  if (g > 1)
    for (auto& x : r) x /= g;
}

struct FmRow {
  Row coeffs;
  boost::dynamic_bitset<> history;
};

/// Fourier-Motzkin: eliminate a from { x = sum a_i g_i, a >= 0 } and return
/// inequalities alpha with <alpha, x> >= 0 describing the generated cone.
std::vector<Row> fourier_motzkin(std::size_t rank, const std::vector<Row>& gens) {
  const std::size_t m = gens.size();
  const std::size_t width = rank + m;
  const std::size_t n_orig = 2 * rank + m;
  std::vector<FmRow> rows;
  auto push_original = [&](Row coeffs) {
    boost::dynamic_bitset<> h(n_orig);
    h.set(rows.size());
    rows.push_back({std::move(coeffs), std::move(h)});
  };
  for (std::size_t j = 0; j < rank; ++j) {
    Row eq(width, 0);
    eq[j] = 1;
    for (std::size_t i = 0; i < m; ++i) eq[rank + i] = -gens[i][j];
    Row neg(width);
    for (std::size_t k = 0; k < width; ++k) neg[k] = -eq[k];
    push_original(std::move(eq));
    push_original(std::move(neg));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Row nonneg(width, 0);
    nonneg[rank + i] = 1;
    push_original(std::move(nonneg));
  }

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t col = rank + i;
    std::vector<FmRow> pos, neg, next;
    for (auto& r : rows) {
      if (r.coeffs[col] > 0) {
        pos.push_back(std::move(r));
      } else if (r.coeffs[col] < 0) {
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        boost::dynamic_bitset<> h = p.history | n.history;
        // Chernikov: a combination of more than (eliminated + 1) original
        // rows is implied by the others.
        if (h.count() > i + 2) continue;
        Row c(width);
        const Integer& pa = p.coeffs[col];
        Integer na = -n.coeffs[col];
        for (std::size_t k = 0; k < width; ++k) c[k] = p.coeffs[k] * na + n.coeffs[k] * pa;
        normalize(c);
        next.push_back({std::move(c), std::move(h)});
      }
    }
    // Deduplicate, keeping the shortest history.
    std::map<Row, std::size_t> seen;
    rows.clear();
    for (auto& r : next) {
      auto it = seen.find(r.coeffs);
      if (it == seen.end()) {
        seen.emplace(r.coeffs, rows.size());
        rows.push_back(std::move(r));
      } else if (r.history.count() < rows[it->second].history.count()) {
        rows[it->second].history = r.history;
      }
    }
  }

  std::set<Row> out;
  for (const auto& r : rows) {
    Row x(r.coeffs.begin(), r.coeffs.begin() + static_cast<std::ptrdiff_t>(rank));
    bool zero = std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; });
    if (!zero) out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

/// Orthogonal projection of alpha onto span(basis), as a primitive integer vector.
Row project_onto_span(const Row& alpha, const std::vector<Row>& basis) {
  const std::size_t d = basis.size();
  std::vector<RatRow> system(d, RatRow(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) system[i][j] = Rational(dot(basis[i], basis[j]));
    system[i][d] = Rational(dot(basis[i], alpha));
  }
  rref(system, d);
  RatRow proj(alpha.size(), 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < alpha.size(); ++k) proj[k] += system[i][d] * Rational(basis[i][k]);
  return clear_denominators(proj);
}

}  // namespace

Integer pairing(const DualVector& alpha, const LatticePoint& lambda) {
  if (alpha.rank() != lambda.rank())
    throw InputError("pairing: rank mismatch (" + std::to_string(alpha.rank()) + " vs " +
                     std::to_string(lambda.rank()) + ")");
  Integer s = 0;
  for (std::size_t i = 0; i < alpha.rank(); ++i) s += alpha[i] * lambda[i];
  return s;
}

std::size_t matrix_rank(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) return 0;
  auto m = to_rational(rows);
  return rref(m, rows.front().size()).size();
}

std::vector<std::vector<Integer>> orthogonal_complement(const std::vector<std::vector<Integer>>& rows,
                                                        std::size_t n) {
  auto m = to_rational(rows);
  auto pivots = rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatRow v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

RationalCone cone_from_generators(std::size_t rank, std::vector<LatticePoint> gens) {
  if (rank == 0) throw InputError("cone rank must be at least 1");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rank() != rank)
      throw InputError("generator " + std::to_string(i) + " has length " + std::to_string(gens[i].rank()) +
                           ", expected " + std::to_string(rank),
                       "/generators/" + std::to_string(i));
  }

  RationalCone cone;
  cone.rank_ = rank;
  cone.generators_ = std::move(gens);

  std::vector<Row> nonzero;
  for (const auto& g : cone.generators_)
    if (!g.is_zero()) nonzero.push_back(g.coords());
  cone.dimension_ = matrix_rank(nonzero);

  std::set<Row> facets;
  for (auto& e : orthogonal_complement(nonzero, rank)) {
    Row neg(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) neg[k] = -e[k];
    facets.insert(std::move(neg));
    facets.insert(std::move(e));
  }

  if (cone.dimension_ > 0) {
    // Linearly independent generators spanning the cone's linear hull.
    std::vector<Row> span_basis;
    for (const auto& g : nonzero) {
      span_basis.push_back(g);
      if (matrix_rank(span_basis) < span_basis.size()) span_basis.pop_back();
    }
    for (const auto& alpha : fourier_motzkin(rank, nonzero)) {
      std::vector<Row> face;
      bool proper = false;
      for (const auto& g : nonzero) {
        Integer s = dot(alpha, g);
        if (s == 0) {
          face.push_back(g);
        } else {
          proper = true;
        }
      }
      if (!proper || matrix_rank(face) + 1 != cone.dimension_) continue;
      facets.insert(cone.dimension_ == rank ? alpha : project_onto_span(alpha, span_basis));
    }
  }

  for (const auto& f : facets) cone.facets_.emplace_back(f);
  return cone;
}

bool is_strictly_convex(const RationalCone& cone) {
  std::vector<Row> rows;
  for (const auto& f : cone.facets()) rows.push_back(f.coords());
  return matrix_rank(rows) == cone.rank();
}

bool contains(const RationalCone& cone, const LatticePoint& p) {
  if (p.rank() != cone.rank())
    throw InputError("point " + p.to_string() + " has rank " + std::to_string(p.rank()) + ", cone has rank " +
                     std::to_string(cone.rank()));
  return std::all_of(cone.facets().begin(), cone.facets().end(),
                     [&](const DualVector& f) { return pairing(f, p) >= 0; });
}

DualVector grading_functional(const RationalCone& cone) {
  if (!is_strictly_convex(cone)) throw UnsupportedError("grading functional requires a strictly convex cone");
  DualVector g(cone.rank());
  for (const auto& f : cone.facets()) g += f;
  for (const auto& gen : cone.generators()) {
    if (!gen.is_zero() && pairing(g, gen) < 1)
      throw std::logic_error("grading functional is not positive on generator " + gen.to_string());
  }
  return g;
}

std::vector<LatticePoint> enumerate_up_to(const RationalCone& cone, const DualVector& g, const Integer& bound) {
  if (g.rank() != cone.rank()) throw InputError("grading rank does not match cone rank");
  if (bound < 0) return {};
  const std::size_t r = cone.rank();

  // Every point of { x in cone : <g,x> <= bound } is a convex combination of
  // 0 and the points bound * gen / <g, gen>.
  std::vector<Integer> lo(r, 0), hi(r, 0);
  for (const auto& gen : cone.generators()) {
    if (gen.is_zero()) continue;
    Integer t = pairing(g, gen);
    if (t <= 0) throw DomainError("grading is not positive on generator " + gen.to_string());
    for (std::size_t i = 0; i < r; ++i) {
      lo[i] = std::min(lo[i], floor_div(bound * gen[i], t));
      hi[i] = std::max(hi[i], ceil_div(bound * gen[i], t));
    }
  }

  std::vector<std::pair<Integer, LatticePoint>> found;
  LatticePoint cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = lo[i];
  auto advance = [&] {
    for (std::size_t i = r; i-- > 0;) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        return true;
      }
      cur[i] = lo[i];
    }
    return false;
  };
  do {
    if (contains(cone, cur)) {
      Integer grade = pairing(g, cur);
      if (grade <= bound) found.emplace_back(std::move(grade), cur);
    }
  } while (advance());
  std::sort(found.begin(), found.end());
  std::vector<LatticePoint> out;
  out.reserve(found.size());
  for (auto& [grade, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace arcic
