#include "kmarc/gf2tower.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace kmarc {
namespace {

int poly_degree(std::uint32_t p) { return std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) {
    a ^= m << (poly_degree(a) - dm);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  // Any factorization has a factor of degree at most d/2.
  const std::uint32_t limit = std::uint32_t{1} << (d / 2 + 1);
  for (std::uint32_t f = 2; f < limit; ++f) {
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int degree) {
  if (degree < 1 || degree > 2 * FieldTower::kMaxM) {
    throw std::invalid_argument("modulus degree out of range: " + std::to_string(degree));
  }
  const std::uint32_t lo = std::uint32_t{1} << degree;
  for (std::uint32_t p = lo; p < 2 * lo; ++p) {
    if (is_irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldTower::FieldTower(int m, int h, std::optional<std::uint32_t> modulus) : m_(m), h_(h) {
  if (m < 1 || m > kMaxM) {
    throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxM) +
                                "], got " + std::to_string(m));
  }
  if (h < 1 || m % h != 0) {
    throw std::invalid_argument("h must be a positive divisor of m (m=" + std::to_string(m) +
                                ", h=" + std::to_string(h) + ")");
  }
  if (modulus) {
    if (poly_degree(*modulus) != 2 * m) {
      throw std::invalid_argument("modulus must have degree " + std::to_string(2 * m));
    }
    if (!is_irreducible(*modulus)) {
      throw std::invalid_argument("modulus is reducible over GF(2)");
    }
    modulus_ = *modulus;
  } else {
    modulus_ = default_modulus(2 * m);
  }
  high_bit_ = std::uint32_t{1} << (2 * m);
  group_primes_ = prime_factors(group_order());

  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t x = 1; x < n; ++x) {
    if (multiplicative_order(FieldElement(x)) == group_order()) {
      generator_ = FieldElement(x);
      break;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (trace(FieldElement(x)) == FieldElement(1)) {
      i_ = FieldElement(x);
      break;
    }
  }
  delta_ = norm(i_);
  if (trace(i_) != FieldElement(1) || !in_F(delta_)) {
    throw std::logic_error("tower invariant violated for the element i");
  }

  auto cyclic_subgroup = [this](std::uint64_t order) {
    std::vector<FieldElement> out;
    const FieldElement step = pow(generator_, group_order() / order);
    FieldElement x(1);
    for (std::uint64_t k = 0; k < order; ++k) {
      out.push_back(x);
      x = mul(x, step);
    }
    return out;
  };

  f_ = cyclic_subgroup(q() - 1);
  f_.push_back(FieldElement(0));
  std::ranges::sort(f_);
  fprime_ = cyclic_subgroup(r() - 1);
  fprime_.push_back(FieldElement(0));
  std::ranges::sort(fprime_);
  s_ = cyclic_subgroup(q() + 1);
  std::ranges::sort(s_);
  sprime_ = cyclic_subgroup(r() + 1);
  std::ranges::sort(sprime_);
}

FieldElement FieldTower::mul(FieldElement x, FieldElement y) const noexcept {
  std::uint32_t a = x.bits();
  std::uint32_t b = y.bits();
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & high_bit_) a ^= modulus_;
  }
  return FieldElement(acc);
}

FieldElement FieldTower::pow(FieldElement x, std::uint64_t e) const noexcept {
  if (x.is_zero()) return FieldElement(e == 0 ? 1 : 0);
  e %= group_order();
  FieldElement acc(1);
  while (e != 0) {
    if (e & 1u) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

FieldElement FieldTower::inv(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  return pow(x, group_order() - 1);
}

FieldElement FieldTower::frobenius(FieldElement x, int k) const noexcept {
  k %= degree();
  if (k < 0) k += degree();
  for (int j = 0; j < k; ++j) x = mul(x, x);
  return x;
}

FieldElement FieldTower::sqrt(FieldElement x) const noexcept { return frobenius(x, degree() - 1); }

FieldElement FieldTower::conj(FieldElement x, Level level) const noexcept {
  return frobenius(x, level_degree(level));
}

FieldElement FieldTower::trace(FieldElement x, Level level) const noexcept {
  return x + conj(x, level);
}

FieldElement FieldTower::norm(FieldElement x, Level level) const noexcept {
  return mul(x, conj(x, level));
}

FieldElement FieldTower::rel_trace(FieldElement x) const {
  if (!in_F(x)) throw std::invalid_argument("rel_trace: argument is not in F");
  FieldElement acc;
  for (int j = 0; j < m_ / h_; ++j) {
    acc += x;
    x = frobenius(x, h_);
  }
  return acc;
}

bool FieldTower::in_F(FieldElement x) const noexcept { return frobenius(x, m_) == x; }
bool FieldTower::in_Fprime(FieldElement x) const noexcept { return frobenius(x, h_) == x; }
bool FieldTower::in_Kprime(FieldElement x) const noexcept { return frobenius(x, 2 * h_) == x; }

bool FieldTower::in_base(FieldElement x, Level level) const noexcept {
  return level == Level::full ? in_F(x) : in_Fprime(x);
}

bool FieldTower::in_ambient(FieldElement x, Level level) const noexcept {
  if (x.bits() >= size()) return false;
  return level == Level::full || in_Kprime(x);
}

std::span<const FieldElement> FieldTower::base_field(Level level) const noexcept {
  return level == Level::full ? std::span<const FieldElement>(f_)
                              : std::span<const FieldElement>(fprime_);
}

std::span<const FieldElement> FieldTower::unit_circle(Level level) const noexcept {
  return level == Level::full ? std::span<const FieldElement>(s_)
                              : std::span<const FieldElement>(sprime_);
}

std::vector<FieldElement> FieldTower::elements(Level level) const {
  std::vector<FieldElement> out;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (level == Level::full || in_Kprime(FieldElement(x))) out.emplace_back(x);
  }
  return out;
}

FieldTower::Polar FieldTower::polar(FieldElement x, Level level) const {
  if (x.is_zero()) throw std::invalid_argument("polar decomposition of zero is undefined");
  if (!in_ambient(x, level)) throw std::invalid_argument("polar: element outside K'");
  const FieldElement xbar = conj(x, level);
  return {sqrt(mul(x, xbar)), sqrt(div(x, xbar))};
}

std::uint64_t FieldTower::multiplicative_order(FieldElement x) const {
  if (x.is_zero()) throw std::invalid_argument("zero has no multiplicative order");
  std::uint64_t order = group_order();
  for (std::uint64_t p : group_primes_) {
    while (order % p == 0 && pow(x, order / p) == FieldElement(1)) order /= p;
  }
  return order;
}

}  // namespace kmarc
