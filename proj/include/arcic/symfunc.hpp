#pragma once

#include "arcic/laurent.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace arcic {

/// Positive parts, weakly decreasing. Trailing zeros are not stored.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
/// Sorts decreasingly and drops zeros; throws DomainError on negative parts.
Partition make_partition(std::vector<int> parts);
int partition_size(const Partition& p);
/// a dominates b: equal sizes and every partial sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b);
/// Partitions of n with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, std::size_t max_parts);
std::string partition_to_string(const Partition& p);

/// Polynomial in t with integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial monomial(std::size_t degree);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  bool is_zero() const { return coeffs_.empty(); }
  Integer at(const Integer& t) const;
  HalfLaurent at(const HalfLaurent& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Symmetric Laurent polynomial in x_1..x_N with v-Laurent coefficients.
class SymPolynomial {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, HalfLaurent>;

  explicit SymPolynomial(std::size_t n_vars) : n_vars_(n_vars) {}
  /// Throws InputError on exponent length mismatch, DomainError if not symmetric.
  static SymPolynomial from_terms(std::size_t n_vars, const TermMap& terms);
  static SymPolynomial constant(std::size_t n_vars, const HalfLaurent& c);
  /// m_mu: sum of the distinct permutations of x^mu.
  static SymPolynomial monomial_symmetric(std::size_t n_vars, const Partition& mu);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Invariant under every permutation of the variables.
  bool is_symmetric() const;
  HalfLaurent coefficient(const Exponent& e) const;
  /// Value at x = (1, ..., 1).
  HalfLaurent at_ones() const;
  /// f(x_1^k, ..., x_N^k): the power-sum plethysm p_k[f] (coefficients are scalars).
  SymPolynomial power_substitution(int k) const;
  /// Multiplies by (x_1 ... x_N)^k.
  SymPolynomial shifted_by_determinant(int k) const;

  SymPolynomial& operator+=(const SymPolynomial& o);
  SymPolynomial& operator-=(const SymPolynomial& o);
  SymPolynomial& operator*=(const HalfLaurent& c);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  friend SymPolynomial operator*(SymPolynomial a, const HalfLaurent& c) { return a *= c; }
  SymPolynomial exact_div(const Integer& d) const;
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const HalfLaurent& c);
  std::size_t n_vars_;
  TermMap terms_;
};

using Tableau = std::vector<std::vector<int>>;

/// Semistandard tableaux of the given shape with entries in 1..max_entry.
/// When content is nonempty, only tableaux with that many i's for each i.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry, const std::vector<int>& content = {});

/// Rows from bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schuetzenberger charge of a word whose content is a partition.
std::size_t charge(const std::vector<int>& word);

/// Schur polynomial s_lambda(x_1..x_N). Throws DomainError if lambda has more than N parts.
SymPolynomial schur(std::size_t n_vars, const Partition& lambda);

/// Character of Sym^n(V_lambda), through the power-sum exponential
/// sum_n h_n[f] y^n = exp(sum_k p_k[f] y^k / k).
SymPolynomial sym_power_character(std::size_t n_vars, const Partition& lambda, int n);

/// K_{lambda mu}(t) = sum over SSYT of shape lambda and content mu of t^charge.
/// Throws DomainError when |lambda| != |mu|.
IntPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Coefficients a_lambda with f = sum a_lambda s_lambda. f must have
/// nonnegative exponents (DomainError otherwise).
std::map<Partition, HalfLaurent> schur_expand(const SymPolynomial& f);

/// Coefficients c_mu with f = sum c_mu P_mu(x; t), mu over partitions with at most N parts.
std::map<Partition, HalfLaurent> hall_littlewood_expand(const SymPolynomial& f, const HalfLaurent& t);

/// Hall-Littlewood P_mu(x_1..x_N; t), from the unitriangular Kostka-Foulkes transition.
SymPolynomial hall_littlewood_p(std::size_t n_vars, const Partition& mu, const HalfLaurent& t);

}  // namespace arcic
