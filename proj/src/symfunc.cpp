#include "arcic/symfunc.hpp"

#include "arcic/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace arcic {

// ---------------------------------------------------------------------------
// Partitions

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition make_partition(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw DomainError("partition parts must be nonnegative");
  std::sort(parts.rbegin(), parts.rend());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool dominates(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b)) return false;
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, std::size_t max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int largest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (int p = std::min(rest, largest); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<Integer> c(degree + 1, 0);
  c[degree] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::at(const Integer& t) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
  return r;
}

HalfLaurent IntPolynomial::at(const HalfLaurent& t) const {
  HalfLaurent r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + HalfLaurent(*it);
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Integer mag = c < 0 ? Integer(-c) : c;
    if (k == 0 || mag != 1) s += mag.str();
    if (k > 0) {
      if (mag != 1) s += "*";
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// SymPolynomial

namespace {

bool terms_symmetric(const SymPolynomial::TermMap& terms) {
  for (const auto& [e, c] : terms) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      auto swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms.find(swapped);
      if (it == terms.end() || it->second != c) return false;
    }
  }
  return true;
}

}  // namespace

void SymPolynomial::add_term(const Exponent& e, const HalfLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPolynomial SymPolynomial::from_terms(std::size_t n_vars, const TermMap& terms) {
  SymPolynomial p(n_vars);
  for (const auto& [e, c] : terms) {
    if (e.size() != n_vars)
      throw InputError("exponent of length " + std::to_string(e.size()) + " in " + std::to_string(n_vars) +
                       " variables");
    p.add_term(e, c);
  }
  if (!p.is_symmetric()) throw DomainError("polynomial is not symmetric");
  return p;
}

SymPolynomial SymPolynomial::constant(std::size_t n_vars, const HalfLaurent& c) {
  SymPolynomial p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

SymPolynomial SymPolynomial::monomial_symmetric(std::size_t n_vars, const Partition& mu) {
  if (mu.size() > n_vars) return SymPolynomial(n_vars);
  Exponent e(n_vars, 0);
  std::copy(mu.begin(), mu.end(), e.begin());
  std::sort(e.begin(), e.end());
  SymPolynomial p(n_vars);
  do {
    p.add_term(e, HalfLaurent(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

bool SymPolynomial::is_symmetric() const { return terms_symmetric(terms_); }

HalfLaurent SymPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? HalfLaurent() : it->second;
}

HalfLaurent SymPolynomial::at_ones() const {
  HalfLaurent s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

SymPolynomial SymPolynomial::power_substitution(int k) const {
  SymPolynomial p(n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent scaled = e;
    for (auto& x : scaled) x *= k;
    p.add_term(scaled, c);
  }
  return p;
}

SymPolynomial SymPolynomial::shifted_by_determinant(int k) const {
  SymPolynomial p(n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent shifted = e;
    for (auto& x : shifted) x += k;
    p.terms_.emplace(std::move(shifted), c);
  }
  return p;
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
  if (o.n_vars_ != n_vars_) throw InputError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
  if (o.n_vars_ != n_vars_) throw InputError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const HalfLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  if (a.n_vars_ != b.n_vars_) throw InputError("variable count mismatch");
  SymPolynomial r(a.n_vars_);
  SymPolynomial::Exponent e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SymPolynomial SymPolynomial::exact_div(const Integer& d) const {
  SymPolynomial p(n_vars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.exact_div(d));
  return p;
}

std::string SymPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*x^[";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(it->first[i]);
    }
    s += "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Tableaux and charge

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry, const std::vector<int>& content) {
  if (!is_partition(shape)) throw DomainError("shape " + partition_to_string(shape) + " is not a partition");
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  const bool restricted = !content.empty();
  std::vector<int> remaining = content;
  if (restricted) {
    if (static_cast<int>(content.size()) > max_entry) return out;
    if (std::accumulate(content.begin(), content.end(), 0) != partition_size(shape)) return out;
  }

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t row, std::size_t col) {
    if (row == t.size()) {
      out.push_back(t);
      return;
    }
    std::size_t next_row = row, next_col = col + 1;
    if (next_col == t[row].size()) {
      ++next_row;
      next_col = 0;
    }
    int low = 1;
    if (col > 0) low = std::max(low, t[row][col - 1]);
    if (row > 0) low = std::max(low, t[row - 1][col] + 1);
    for (int v = low; v <= max_entry; ++v) {
      if (restricted) {
        if (static_cast<std::size_t>(v) > remaining.size() || remaining[v - 1] == 0) continue;
        --remaining[v - 1];
      }
      t[row][col] = v;
      fill(next_row, next_col);
      if (restricted) ++remaining[v - 1];
    }
  };
  if (t.empty()) {
    out.push_back(t);
  } else {
    fill(0, 0);
  }
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto row = t.rbegin(); row != t.rend(); ++row) w.insert(w.end(), row->begin(), row->end());
  return w;
}

std::size_t charge(const std::vector<int>& word) {
  std::vector<bool> used(word.size(), false);
  std::size_t remaining = word.size();
  std::size_t total = 0;
  while (remaining > 0) {
    // Extract a standard subword: the rightmost 1, then cyclically leftwards 2, 3, ...
    std::size_t pos = word.size();
    for (std::size_t i = word.size(); i-- > 0;) {
      if (!used[i] && word[i] == 1) {
        pos = i;
        break;
      }
    }
    if (pos == word.size()) throw DomainError("charge: word content is not a partition");
    used[pos] = true;
    --remaining;
    std::size_t index = 0;
    for (int letter = 2;; ++letter) {
      std::size_t found = word.size();
      for (std::size_t i = pos; i-- > 0;) {
        if (!used[i] && word[i] == letter) {
          found = i;
          break;
        }
      }
      if (found == word.size()) {
        for (std::size_t i = word.size(); i-- > pos + 1;) {
          if (!used[i] && word[i] == letter) {
            found = i;
            break;
          }
        }
        if (found == word.size()) break;
        ++index;  // wrapped around: letter sits to the right of its predecessor
      }
      used[found] = true;
      --remaining;
      total += index;
      pos = found;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Schur, plethysm, Kostka-Foulkes, Hall-Littlewood

SymPolynomial schur(std::size_t n_vars, const Partition& lambda) {
  if (!is_partition(lambda)) throw DomainError(partition_to_string(lambda) + " is not a partition");
  if (lambda.size() > n_vars)
    throw DomainError("partition " + partition_to_string(lambda) + " has more than " + std::to_string(n_vars) +
                      " parts");
  SymPolynomial::TermMap terms;
  for (const auto& t : semistandard_tableaux(lambda, static_cast<int>(n_vars))) {
    SymPolynomial::Exponent e(n_vars, 0);
    for (const auto& row : t)
      for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
    terms[e] += HalfLaurent(1);
  }
  return SymPolynomial::from_terms(n_vars, terms);
}

SymPolynomial sym_power_character(std::size_t n_vars, const Partition& lambda, int n) {
  if (n < 0) throw DomainError("symmetric power degree must be nonnegative");
  SymPolynomial f = schur(n_vars, lambda);
  std::vector<SymPolynomial> power_sums;  // power_sums[k-1] = p_k[f]
  for (int k = 1; k <= n; ++k) power_sums.push_back(f.power_substitution(k));
  // Newton: m h_m = sum_{k=1}^m p_k h_{m-k}
  std::vector<SymPolynomial> h{SymPolynomial::constant(n_vars, HalfLaurent(1))};
  for (int m = 1; m <= n; ++m) {
    SymPolynomial sum(n_vars);
    for (int k = 1; k <= m; ++k) sum += power_sums[static_cast<std::size_t>(k - 1)] * h[static_cast<std::size_t>(m - k)];
    h.push_back(sum.exact_div(m));
  }
  return h.back();
}

IntPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu)) throw DomainError("Kostka-Foulkes arguments must be partitions");
  if (partition_size(lambda) != partition_size(mu))
    throw DomainError("Kostka-Foulkes size mismatch: " + partition_to_string(lambda) + " vs " +
                      partition_to_string(mu));
  IntPolynomial k;
  if (!dominates(lambda, mu)) return k;
  for (const auto& t : semistandard_tableaux(lambda, static_cast<int>(mu.size()), mu))
    k += IntPolynomial::monomial(charge(reading_word(t)));
  return k;
}

std::map<Partition, HalfLaurent> schur_expand(const SymPolynomial& f) {
  const std::size_t n = f.n_vars();
  std::map<Partition, HalfLaurent> out;
  SymPolynomial rest = f;
  std::map<Partition, SymPolynomial> cache;
  while (!rest.is_zero()) {
    // the lexicographically largest exponent of a symmetric polynomial is dominant
    const auto& [top, coeff] = *rest.terms().rbegin();
    std::vector<int> parts(top.begin(), top.end());
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
      throw DomainError("Schur expansion needs nonnegative exponents");
    if (!std::is_sorted(parts.rbegin(), parts.rend())) throw DomainError("polynomial is not symmetric");
    Partition lambda = make_partition(parts);
    HalfLaurent c = coeff;
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, schur(n, lambda)).first;
    rest -= it->second * c;
    out[lambda] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<Partition, HalfLaurent> hall_littlewood_expand(const SymPolynomial& f, const HalfLaurent& t) {
  if (!f.is_symmetric()) throw DomainError("polynomial is not symmetric");
  std::map<Partition, HalfLaurent> out;
  for (const auto& [lambda, a] : schur_expand(f)) {
    for (const auto& mu : partitions_of(partition_size(lambda), f.n_vars())) {
      if (!dominates(lambda, mu)) continue;
      out[mu] += a * kostka_foulkes(lambda, mu).at(t);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SymPolynomial hall_littlewood_p(std::size_t n_vars, const Partition& mu, const HalfLaurent& t) {
  if (!is_partition(mu)) throw DomainError(partition_to_string(mu) + " is not a partition");
  if (mu.size() > n_vars) return SymPolynomial(n_vars);
  std::map<Partition, SymPolynomial> memo;
  // s_mu = sum_{nu <= mu} K_{mu nu}(t) P_nu with K_{mu mu} = 1
  std::function<const SymPolynomial&(const Partition&)> p = [&](const Partition& target) -> const SymPolynomial& {
    auto it = memo.find(target);
    if (it != memo.end()) return it->second;
    SymPolynomial result = schur(n_vars, target);
    for (const auto& nu : partitions_of(partition_size(target), n_vars)) {
      if (nu == target || !dominates(target, nu)) continue;
      HalfLaurent k = kostka_foulkes(target, nu).at(t);
      if (!k.is_zero()) result -= p(nu) * k;
    }
    return memo.emplace(target, std::move(result)).first->second;
  };
  return p(mu);
}

}  // namespace arcic
