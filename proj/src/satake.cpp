#include "arcic/satake.hpp"

#include "arcic/error.hpp"

#include <algorithm>
#include <numeric>

namespace arcic {

namespace {

int sign_of(SatakeConvention c) { return c == SatakeConvention::plus ? 1 : -1; }

const HalfLaurent& t_parameter() {
  static const HalfLaurent t = HalfLaurent::q_power(-1);
  return t;
}

}  // namespace

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    throw DomainError("weight " + to_string() + " is not dominant (entries must be weakly decreasing)");
}

int DominantWeight::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

DominantWeight DominantWeight::shifted(int k) const {
  std::vector<int> p = parts_;
  for (auto& x : p) x += k;
  return DominantWeight(std::move(p));
}

Partition DominantWeight::to_partition() const {
  if (last() < 0) throw DomainError("weight " + to_string() + " has negative entries");
  return make_partition(parts_);
}

std::string DominantWeight::to_string() const { return partition_to_string(parts_); }

DominantWeight weight_from_partition(const Partition& p, std::size_t n) {
  if (p.size() > n)
    throw DomainError("partition " + partition_to_string(p) + " has more than " + std::to_string(n) + " parts");
  std::vector<int> parts(n, 0);
  std::copy(p.begin(), p.end(), parts.begin());
  return DominantWeight(std::move(parts));
}

std::string HalfInteger::to_string() const {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

HalfInteger nu_pairing(std::size_t n_gl, const DominantWeight& mu) {
  if (mu.size() != n_gl)
    throw InputError("weight " + mu.to_string() + " does not have " + std::to_string(n_gl) + " entries");
  long doubled = 0;
  const long n = static_cast<long>(n_gl);
  for (long i = 1; i <= n; ++i) doubled += (n + 1 - 2 * i) * mu.parts()[static_cast<std::size_t>(i - 1)];
  return {doubled};
}

std::string to_string(SatakeConvention c) { return c == SatakeConvention::plus ? "plus" : "minus"; }

SatakeConvention parse_convention(const std::string& s) {
  if (s == "plus") return SatakeConvention::plus;
  if (s == "minus") return SatakeConvention::minus;
  throw InputError("convention must be plus or minus, got '" + s + "'", "/convention");
}

HalfLaurent HeckeElement::value(const DominantWeight& mu) const {
  auto it = values.find(mu);
  return it == values.end() ? HalfLaurent() : it->second;
}

SymPolynomial satake_transform(const HeckeElement& h, SatakeConvention conv) {
  const int s = sign_of(conv);
  SymPolynomial out(h.n_gl);
  for (const auto& [mu, c] : h.values) {
    if (c.is_zero()) continue;
    // P_{mu + k(1,...,1)} = det^k P_mu
    const int k = mu.last() < 0 ? -mu.last() : 0;
    SymPolynomial p = hall_littlewood_p(h.n_gl, mu.shifted(k).to_partition(), t_parameter()).shifted_by_determinant(-k);
    out += p * (c * HalfLaurent::v_power(s * nu_pairing(h.n_gl, mu).doubled));
  }
  return out;
}

HeckeElement inverse_satake(const SymPolynomial& f, std::size_t n_gl, SatakeConvention conv) {
  if (f.n_vars() != n_gl)
    throw InputError("polynomial in " + std::to_string(f.n_vars()) + " variables for GL_" + std::to_string(n_gl));
  const int s = sign_of(conv);
  int lowest = 0;
  for (const auto& [e, c] : f.terms())
    for (int x : e) lowest = std::min(lowest, x);
  const int k = -lowest;
  HeckeElement h{n_gl, {}};
  for (const auto& [lambda, c] : hall_littlewood_expand(f.shifted_by_determinant(k), t_parameter())) {
    DominantWeight mu = weight_from_partition(lambda, n_gl).shifted(-k);
    h.values.emplace(mu, c * HalfLaurent::v_power(-s * nu_pairing(n_gl, mu).doubled));
  }
  return h;
}

HeckeElement psi_n(std::size_t n_gl, const Partition& rep, int n, SatakeConvention conv) {
  if (n_gl == 0) throw DomainError("GL_N needs N >= 1");
  if (rep != Partition{1})
    throw UnsupportedError("only the standard representation (1) is supported, got " + partition_to_string(rep));
  if (n < 0) throw DomainError("symmetric power degree must be nonnegative");
  return inverse_satake(sym_power_character(n_gl, rep, n), n_gl, conv);
}

HeckeElement ic_lmonoid_degree(std::size_t n_gl, const Partition& rep, int n, SatakeConvention conv) {
  HeckeElement h = psi_n(n_gl, rep, n, conv);
  const long rep_exponent = nu_pairing(n_gl, weight_from_partition(rep, n_gl)).doubled;
  const HalfLaurent shift = HalfLaurent::v_power(sign_of(conv) * n * rep_exponent);
  for (auto& [mu, c] : h.values) c *= shift;
  return h;
}

HalfLaurent ic_lmonoid_value(std::size_t n_gl, const Partition& rep, const std::vector<int>& mu,
                             SatakeConvention conv) {
  if (mu.size() != n_gl)
    throw InputError("mu has " + std::to_string(mu.size()) + " entries, expected " + std::to_string(n_gl), "/mu");
  DominantWeight w(mu);
  if (w.last() < 0) throw DomainError("mu " + w.to_string() + " has a negative entry: outside X(O)");
  return ic_lmonoid_degree(n_gl, rep, w.total(), conv).value(w);
}

bool satake_roundtrip_check(std::size_t n_gl, int bound, SatakeConvention conv) {
  if (n_gl == 0) throw DomainError("GL_N needs N >= 1");
  for (int size = 0; size <= bound; ++size) {
    for (const auto& lambda : partitions_of(size, n_gl)) {
      DominantWeight base = weight_from_partition(lambda, n_gl);
      for (const auto& mu : {base, base.shifted(-1)}) {
        HeckeElement delta{n_gl, {{mu, HalfLaurent(1)}}};
        if (inverse_satake(satake_transform(delta, conv), n_gl, conv) != delta) return false;
      }
    }
  }
  return true;
}

}  // namespace arcic
