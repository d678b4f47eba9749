#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kmarc/gf2tower.hpp"
#include "oracle.hpp"

using kmarc::FieldElement;
using kmarc::FieldTower;
using kmarc::Level;

namespace {

FieldElement fe(std::uint32_t v) { return FieldElement(v); }

std::vector<std::uint32_t> bits(std::span<const FieldElement> xs) {
  std::vector<std::uint32_t> out;
  for (FieldElement x : xs) out.push_back(x.bits());
  return out;
}

}  // namespace

TEST(Irreducible, SmallCases) {
  EXPECT_TRUE(kmarc::is_irreducible(0x7));
  EXPECT_TRUE(kmarc::is_irreducible(0x13));
  EXPECT_TRUE(kmarc::is_irreducible(0x19));
  EXPECT_FALSE(kmarc::is_irreducible(0x15));  // (z^2+z+1)^2
  EXPECT_FALSE(kmarc::is_irreducible(0x11));  // (z+1)^4
  EXPECT_FALSE(kmarc::is_irreducible(0x1));
}

TEST(Tower, DefaultModuliAndCanonicalChoices) {
  // From tests/oracle/gf_oracle.py.
  const std::uint32_t moduli[] = {0x7, 0x13, 0x43, 0x11b, 0x409, 0x1009, 0x4021, 0x1002b};
  const std::uint32_t i_elems[] = {0x2, 0x2, 0x22, 0x12, 0xb6, 0x8, 0x266, 0x26c};
  for (int m = 1; m <= 8; ++m) {
    const FieldTower t(m, 1);
    EXPECT_EQ(t.modulus(), moduli[m - 1]) << "m=" << m;
    EXPECT_EQ(kmarc::default_modulus(2 * m), moduli[m - 1]);
    EXPECT_EQ(t.i_elem(), fe(i_elems[m - 1])) << "m=" << m;
    EXPECT_EQ(t.trace(t.i_elem()), fe(1));
    EXPECT_TRUE(t.in_F(t.delta()));
    EXPECT_EQ(t.multiplicative_order(t.generator()), t.size() - 1);
  }
  EXPECT_EQ(FieldTower(1, 1).generator(), fe(2));
  EXPECT_EQ(FieldTower(2, 1).generator(), fe(2));
  EXPECT_EQ(FieldTower(3, 1).generator(), fe(2));
  EXPECT_EQ(FieldTower(4, 1).generator(), fe(3));
}

TEST(Tower, RejectsBadParameters) {
  EXPECT_THROW(FieldTower(0, 1), std::invalid_argument);
  EXPECT_THROW(FieldTower(9, 1), std::invalid_argument);
  EXPECT_THROW(FieldTower(4, 3), std::invalid_argument);
  EXPECT_THROW(FieldTower(2, 1, 0x15), std::invalid_argument);   // reducible
  EXPECT_THROW(FieldTower(2, 1, 0x43), std::invalid_argument);   // wrong degree
}

TEST(Tower, AlternativeModulus) {
  const FieldTower t(2, 1, 0x19);
  EXPECT_EQ(t.modulus(), 0x19u);
  EXPECT_EQ(t.trace(t.i_elem()), fe(1));
  EXPECT_EQ(t.unit_circle().size(), 5u);
  EXPECT_FALSE(t == FieldTower(2, 1));
}

TEST(Arithmetic, HandValuesInGF16) {
  const FieldTower t(2, 1);
  EXPECT_EQ(t.mul(fe(0x2), fe(0x8)), fe(0x3));  // z * z^3 = z + 1
  EXPECT_EQ(t.i_elem(), fe(0x2));
  EXPECT_THROW(t.inv(fe(0)), std::domain_error);
  EXPECT_EQ(t.pow(fe(0), 0), fe(1));
  EXPECT_EQ(t.pow(fe(0), 5), fe(0));
}

TEST(Arithmetic, MatchesSchoolbookOracle) {
  for (int m : {1, 2, 3, 4}) {
    const FieldTower t(m, 1);
    for (std::uint32_t a = 0; a < t.size(); ++a) {
      for (std::uint32_t b = 0; b < t.size(); b += (m == 4 ? 7 : 1)) {
        ASSERT_EQ(t.mul(fe(a), fe(b)).bits(), oracle::mul(a, b, t.modulus()));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int m : {6, 8}) {
    const FieldTower t(m, 1);
    for (int n = 0; n < 2000; ++n) {
      const auto a = static_cast<std::uint32_t>(rng() % t.size());
      const auto b = static_cast<std::uint32_t>(rng() % t.size());
      ASSERT_EQ(t.mul(fe(a), fe(b)).bits(), oracle::mul(a, b, t.modulus()));
    }
  }
}

TEST(Arithmetic, InverseSqrtAndPowers) {
  for (int m : {1, 2, 3, 4, 5}) {
    const FieldTower t(m, 1);
    for (FieldElement x : t.elements()) {
      ASSERT_EQ(x + x, fe(0));
      ASSERT_EQ(t.square(t.sqrt(x)), x);
      ASSERT_EQ(t.sqrt(t.square(x)), x);
      ASSERT_EQ(t.conj(t.conj(x)), x);
      if (!x.is_zero()) {
        ASSERT_EQ(t.mul(x, t.inv(x)), fe(1));
        ASSERT_EQ(t.pow(x, t.size() - 1), fe(1));
        ASSERT_EQ(t.pow(x, t.size()), x);
      }
    }
  }
  const FieldTower t(3, 1);
  for (std::uint32_t e = 0; e < 70; ++e) {
    ASSERT_EQ(t.pow(fe(0x2b), e).bits(), oracle::pow(0x2b, e, t.modulus()));
  }
}

TEST(Arithmetic, FieldAxiomsOnSamples) {
  const FieldTower t(5, 1);
  std::mt19937_64 rng(11);
  auto draw = [&] { return fe(static_cast<std::uint32_t>(rng() % t.size())); };
  for (int n = 0; n < 3000; ++n) {
    const FieldElement a = draw();
    const FieldElement b = draw();
    const FieldElement c = draw();
    ASSERT_EQ(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
    ASSERT_EQ(t.mul(a, b + c), t.mul(a, b) + t.mul(a, c));
    ASSERT_EQ(t.mul(a, b), t.mul(b, a));
  }
}

TEST(Subfields, SizesAndMembership) {
  for (auto [m, h] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {6, 2}, {6, 3}, {8, 4}}) {
    const FieldTower t(m, h);
    const auto f = t.base_field();
    EXPECT_EQ(f.size(), t.q());
    EXPECT_EQ(t.base_field(Level::sub).size(), t.r());
    EXPECT_EQ(t.elements(Level::sub).size(), t.r() * t.r());
    EXPECT_EQ(bits(f), oracle::fixed_field(m, m, t.modulus()));
    EXPECT_EQ(bits(t.base_field(Level::sub)), oracle::fixed_field(m, h, t.modulus()));
    for (FieldElement x : f) EXPECT_TRUE(t.in_F(x));
    // F and K' meet in F' when m/h is odd, in GF(r^2) otherwise.
    std::size_t both = 0;
    for (FieldElement x : t.elements(Level::sub)) both += t.in_F(x) ? 1 : 0;
    EXPECT_EQ(both, (m / h) % 2 == 1 ? t.r() : t.r() * t.r()) << m << "," << h;
  }
}

TEST(Subfields, FrozenGF16Sets) {
  const FieldTower t(2, 1);
  EXPECT_EQ(bits(t.base_field()), (std::vector<std::uint32_t>{0, 1, 6, 7}));
  EXPECT_EQ(bits(t.unit_circle()), (std::vector<std::uint32_t>{1, 8, 10, 12, 15}));
  // S = {1, z^3, z^6, z^9, z^12}.
  std::set<std::uint32_t> powers;
  for (int k : {0, 3, 6, 9, 12}) powers.insert(t.pow(fe(2), static_cast<std::uint64_t>(k)).bits());
  EXPECT_EQ(powers, (std::set<std::uint32_t>{1, 8, 10, 12, 15}));
}

TEST(TraceNorm, Properties) {
  for (int m : {1, 2, 3, 4}) {
    const FieldTower t(m, 1);
    EXPECT_EQ(t.trace(fe(1)), fe(0));
    EXPECT_EQ(t.norm(fe(1)), fe(1));
    std::map<FieldElement, int> hits;
    for (FieldElement x : t.elements()) {
      ASSERT_TRUE(t.in_F(t.trace(x)));
      ASSERT_TRUE(t.in_F(t.norm(x)));
      ++hits[t.trace(x)];
    }
    EXPECT_EQ(hits.size(), t.q());  // surjective onto F
    for (const auto& [v, n] : hits) EXPECT_EQ(static_cast<std::uint64_t>(n), t.q());
  }
  const FieldTower t(3, 1);
  for (FieldElement x : t.elements()) {
    for (FieldElement y : t.elements()) {
      ASSERT_EQ(t.norm(t.mul(x, y)), t.mul(t.norm(x), t.norm(y)));
    }
  }
}

TEST(TraceNorm, RelativeTrace) {
  const FieldTower t(2, 1);
  EXPECT_EQ(t.rel_trace(fe(0)), fe(0));
  // omega and omega^2 in F = GF(4) are 6 and 7 here.
  EXPECT_EQ(t.rel_trace(fe(6)), fe(1));
  EXPECT_EQ(t.rel_trace(fe(7)), fe(1));
  EXPECT_THROW(t.rel_trace(t.i_elem()), std::invalid_argument);

  for (auto [m, h] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {4, 4}}) {
    const FieldTower tw(m, h);
    std::map<FieldElement, std::uint64_t> hits;
    for (FieldElement x : tw.base_field()) {
      const FieldElement v = tw.rel_trace(x);
      ASSERT_TRUE(tw.in_Fprime(v));
      ++hits[v];
    }
    EXPECT_EQ(hits.size(), tw.r());
    for (const auto& [v, n] : hits) EXPECT_EQ(n, tw.q() / tw.r());
  }
}

TEST(UnitCircle, SizesAndClosure) {
  const FieldTower t1(1, 1);
  EXPECT_EQ(t1.unit_circle().size(), 3u);
  for (auto [m, h] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {6, 3}}) {
    const FieldTower t(m, h);
    const auto s = t.unit_circle();
    const auto sp = t.unit_circle(Level::sub);
    EXPECT_EQ(s.size(), t.q() + 1);
    EXPECT_EQ(sp.size(), t.r() + 1);
    for (FieldElement u : s) {
      for (FieldElement v : s) ASSERT_TRUE(std::ranges::binary_search(s, t.mul(u, v)));
    }
    for (FieldElement u : sp) EXPECT_TRUE(t.in_Kprime(u));
  }
}

TEST(Polar, BijectionAndSpecialCases) {
  for (int m : {1, 2, 3, 4}) {
    const FieldTower t(m, 1);
    std::set<std::pair<FieldElement, FieldElement>> seen;
    for (FieldElement x : t.elements()) {
      if (x.is_zero()) continue;
      const auto p = t.polar(x);
      ASSERT_TRUE(t.in_F(p.lambda));
      ASSERT_TRUE(std::ranges::binary_search(t.unit_circle(), p.u));
      ASSERT_EQ(t.mul(p.lambda, p.u), x);
      seen.insert({p.lambda, p.u});
    }
    EXPECT_EQ(seen.size(), t.size() - 1);
    for (FieldElement x : t.base_field()) {
      if (x.is_zero()) continue;
      EXPECT_EQ(t.polar(x).lambda, x);
      EXPECT_EQ(t.polar(x).u, fe(1));
    }
    for (FieldElement u : t.unit_circle()) {
      EXPECT_EQ(t.polar(u).lambda, fe(1));
      EXPECT_EQ(t.polar(u).u, u);
    }
    EXPECT_THROW(t.polar(fe(0)), std::invalid_argument);
  }
}
