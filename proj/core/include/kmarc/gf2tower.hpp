#pragma once

// Exact arithmetic in K = GF(2^{2m}) together with the embedded chain
// GF(2) < F' = GF(2^h) < F = GF(2^m) < K and the polar-coordinate
// machinery (conjugate, trace, norm, unit circle) of K over F.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kmarc {

/// An element of K stored as the coefficient bit-vector of its residue
/// polynomial: bit j is the coefficient of z^j. Ordering by integer value is
/// the canonical element order used for every "smallest" choice.
class FieldElement {
 public:
  constexpr FieldElement() noexcept = default;
  constexpr explicit FieldElement(std::uint32_t bits) noexcept : bits_(bits) {}

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }

  constexpr auto operator<=>(const FieldElement&) const noexcept = default;

  // Characteristic 2: addition and subtraction are both XOR.
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) noexcept {
    return FieldElement(a.bits_ ^ b.bits_);
  }
  constexpr FieldElement& operator+=(FieldElement o) noexcept {
    bits_ ^= o.bits_;
    return *this;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Which quadratic extension a polar-coordinate operation refers to:
/// `full` is K over F (conjugation x -> x^q), `sub` is K' = GF(r^2) over
/// F' (conjugation x -> x^r).
enum class Level { full, sub };

bool is_irreducible(std::uint32_t poly);

/// Lexicographically smallest irreducible polynomial of the given degree.
std::uint32_t default_modulus(int degree);

class FieldTower {
 public:
  static constexpr int kMaxM = 8;

  struct Polar {
    FieldElement lambda;  // in the base field, nonzero
    FieldElement u;       // on the unit circle
  };

  /// Throws std::invalid_argument when m is out of [1, kMaxM], h does not
  /// divide m, or the modulus is not an irreducible polynomial of degree 2m.
  FieldTower(int m, int h, std::optional<std::uint32_t> modulus = std::nullopt);

  int m() const noexcept { return m_; }
  int h() const noexcept { return h_; }
  int degree() const noexcept { return 2 * m_; }
  std::uint64_t q() const noexcept { return std::uint64_t{1} << m_; }
  std::uint64_t r() const noexcept { return std::uint64_t{1} << h_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (2 * m_); }
  std::uint32_t modulus() const noexcept { return modulus_; }

  FieldElement i_elem() const noexcept { return i_; }
  FieldElement delta() const noexcept { return delta_; }
  FieldElement generator() const noexcept { return generator_; }

  FieldElement mul(FieldElement x, FieldElement y) const noexcept;
  FieldElement square(FieldElement x) const noexcept { return mul(x, x); }
  /// Throws std::domain_error for x = 0.
  FieldElement inv(FieldElement x) const;
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  /// x^e with the exponent reduced mod |K*| for nonzero x; 0^0 = 1.
  FieldElement pow(FieldElement x, std::uint64_t e) const noexcept;
  /// x^(2^k).
  FieldElement frobenius(FieldElement x, int k) const noexcept;
  FieldElement sqrt(FieldElement x) const noexcept;

  /// Degree of the base field of a level: m for `full`, h for `sub`.
  int level_degree(Level level) const noexcept { return level == Level::full ? m_ : h_; }

  FieldElement conj(FieldElement x, Level level = Level::full) const noexcept;
  FieldElement trace(FieldElement x, Level level = Level::full) const noexcept;
  FieldElement norm(FieldElement x, Level level = Level::full) const noexcept;
  /// Tr_{F/F'}; throws std::invalid_argument when x is not in F.
  FieldElement rel_trace(FieldElement x) const;

  bool in_F(FieldElement x) const noexcept;
  bool in_Fprime(FieldElement x) const noexcept;
  bool in_Kprime(FieldElement x) const noexcept;
  bool in_base(FieldElement x, Level level) const noexcept;
  bool in_ambient(FieldElement x, Level level) const noexcept;

  /// F (level full) or F' (level sub), canonical order, including 0.
  std::span<const FieldElement> base_field(Level level = Level::full) const noexcept;
  /// S = {x : x^{q+1} = 1} or S' = {x : x^{r+1} = 1}, canonical order.
  std::span<const FieldElement> unit_circle(Level level = Level::full) const noexcept;
  /// The whole ambient field of a level (K or K'), canonical order.
  std::vector<FieldElement> elements(Level level = Level::full) const;

  /// x = lambda * u with lambda in the base field and u on the unit circle.
  /// Throws std::invalid_argument for x = 0.
  Polar polar(FieldElement x, Level level = Level::full) const;

  std::uint64_t multiplicative_order(FieldElement x) const;

  friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
    return a.m_ == b.m_ && a.h_ == b.h_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t group_order() const noexcept { return size() - 1; }

  int m_;
  int h_;
  std::uint32_t modulus_;
  std::uint32_t high_bit_;
  FieldElement i_;
  FieldElement delta_;
  FieldElement generator_;
  std::vector<std::uint64_t> group_primes_;
  std::vector<FieldElement> f_;
  std::vector<FieldElement> fprime_;
  std::vector<FieldElement> s_;
  std::vector<FieldElement> sprime_;
};

inline FieldTower make_tower(int m, int h, std::optional<std::uint32_t> modulus = std::nullopt) {
  return FieldTower(m, h, modulus);
}

}  // namespace kmarc
