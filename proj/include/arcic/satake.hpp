#pragma once

#include "arcic/laurent.hpp"
#include "arcic/symfunc.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace arcic {

/// Dominant cocharacter of GL_N: N weakly decreasing integers, possibly negative.
class DominantWeight {
 public:
  /// Throws DomainError unless parts are weakly decreasing.
  explicit DominantWeight(std::vector<int> parts);
  static DominantWeight zero(std::size_t n) { return DominantWeight(std::vector<int>(n, 0)); }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const;
  int last() const { return parts_.empty() ? 0 : parts_.back(); }
  /// Adds k to every entry.
  DominantWeight shifted(int k) const;
  /// Nonzero parts as a partition; requires every entry >= 0.
  Partition to_partition() const;

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Pads a partition with zeros to length n; DomainError if it has more parts.
DominantWeight weight_from_partition(const Partition& p, std::size_t n);

struct HalfInteger {
  long doubled = 0;
  std::string to_string() const;
};

/// <nu, mu> for nu half the sum of the positive roots of GL_N:
/// sum_i (N + 1 - 2i)/2 * mu_i. The doubled value is the matching v-exponent.
HalfInteger nu_pairing(std::size_t n_gl, const DominantWeight& mu);

/// Sat(1_{K t^mu K}) = v^{s * 2<nu, mu>} P_mu(x; q^-1), s = +1 for plus and -1 for minus.
enum class SatakeConvention { plus, minus };

std::string to_string(SatakeConvention c);
/// "plus" or "minus"; InputError otherwise.
SatakeConvention parse_convention(const std::string& s);

/// Finitely supported bi-K-invariant function on GL_N(F), by double coset.
struct HeckeElement {
  std::size_t n_gl = 0;
  std::map<DominantWeight, HalfLaurent> values;

  HalfLaurent value(const DominantWeight& mu) const;
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

SymPolynomial satake_transform(const HeckeElement& h, SatakeConvention conv = SatakeConvention::plus);

/// Throws DomainError if f is not symmetric.
HeckeElement inverse_satake(const SymPolynomial& f, std::size_t n_gl,
                            SatakeConvention conv = SatakeConvention::plus);

/// The Hecke element whose Satake transform is the character of Sym^n of the
/// representation with highest weight rep. Only the standard representation
/// (rep = (1)) is supported; others throw UnsupportedError.
HeckeElement psi_n(std::size_t n_gl, const Partition& rep, int n, SatakeConvention conv = SatakeConvention::plus);

/// Degree-n part of the IC function: v^{s * n * 2<nu, rep>} psi_n.
HeckeElement ic_lmonoid_degree(std::size_t n_gl, const Partition& rep, int n,
                               SatakeConvention conv = SatakeConvention::plus);

/// IC function of the L-monoid at t^mu. InputError on length mismatch,
/// DomainError for non-dominant mu or negative entries.
HalfLaurent ic_lmonoid_value(std::size_t n_gl, const Partition& rep, const std::vector<int>& mu,
                             SatakeConvention conv = SatakeConvention::plus);

/// inverse_satake(satake_transform(1_mu)) == 1_mu for every dominant mu >= 0
/// with |mu| <= bound, and for the same weights shifted by -1.
bool satake_roundtrip_check(std::size_t n_gl, int bound, SatakeConvention conv = SatakeConvention::plus);

}  // namespace arcic
