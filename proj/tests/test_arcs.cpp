#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "kmarc/arcs.hpp"
#include "kmarc/constructions.hpp"
#include "oracle.hpp"

using namespace kmarc;

namespace {

std::vector<std::uint32_t> bits_of(const PointSet& h) {
  std::vector<std::uint32_t> out;
  for (FieldElement x : h) out.push_back(x.bits());
  return out;
}

std::map<int, std::uint64_t> hist(std::initializer_list<std::pair<const int, std::uint64_t>> v) {
  return std::map<int, std::uint64_t>(v);
}

// Moves one point of H along its own ray, so the result stays a star-set.
PointSet slide_on_ray(const FieldTower& t, const PointSet& h, std::mt19937_64& rng) {
  std::vector<FieldElement> pts(h.begin(), h.end());
  for (;;) {
    const std::size_t k = rng() % pts.size();
    const auto polar = t.polar(pts[k]);
    const FieldElement lambda = t.base_field()[1 + rng() % (t.q() - 1)];
    const FieldElement moved = t.mul(lambda, polar.u);
    if (h.contains(moved)) continue;
    pts[k] = moved;
    return PointSet(pts);
  }
}

struct Verdicts {
  bool direct, bracket, d, e;
};

Verdicts all_verdicts(const FieldTower& t, const PointSet& h) {
  const int type = static_cast<int>(h.size() - t.q());
  return {verify_direct(t, h, type).km_arc, verify_bracket(t, h).holds,
          verify_power_sums(t, h, ExponentKind::D).holds,
          verify_power_sums(t, h, ExponentKind::E).holds};
}

}  // namespace

TEST(Preceq, MatchesPascalParity) {
  EXPECT_TRUE(preceq(0, 17));
  EXPECT_TRUE(preceq(2, 3));
  EXPECT_FALSE(preceq(2, 5));
  const auto rows = oracle::pascal_mod2(255);
  for (int k = 0; k <= 255; ++k) {
    for (int i = 0; i <= k; ++i) ASSERT_EQ(preceq(i, k), rows[k][i]) << i << " " << k;
  }
}

TEST(Exponents, SmallSets) {
  EXPECT_EQ(gen_exponents(ExponentKind::D, 2).values, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(gen_exponents(ExponentKind::E, 2).values,
            (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12}));
  EXPECT_EQ(gen_exponents(ExponentKind::Dprime, 2).values,
            gen_exponents(ExponentKind::E, 2).values);
  EXPECT_THROW(gen_exponents(ExponentKind::E, 0), std::invalid_argument);
  EXPECT_THROW(gen_exponents(ExponentKind::D, 9), std::invalid_argument);
}

TEST(Exponents, AgreeWithBinomialEnumeration) {
  for (int m = 1; m <= 6; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    const auto rows = oracle::pascal_mod2(static_cast<int>(q));
    std::set<std::uint64_t> d, dprime;
    for (std::uint64_t k = 1; k < q; ++k) {
      for (std::uint64_t i = 0; i <= k; ++i) {
        if (!rows[k][i]) continue;
        dprime.insert(k + (q - 1) * i);
        if (k <= q - 2 && 2 * i + 1 <= k) d.insert(i * q + k - i);
      }
    }
    EXPECT_EQ(gen_exponents(ExponentKind::D, m).values,
              std::vector<std::uint64_t>(d.begin(), d.end()));
    EXPECT_EQ(gen_exponents(ExponentKind::Dprime, m).values,
              std::vector<std::uint64_t>(dprime.begin(), dprime.end()));
  }
}

TEST(Exponents, RangeAndDigitPairs) {
  for (int m = 1; m <= 8; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    const auto e = gen_exponents(ExponentKind::E, m).values;
    EXPECT_EQ(e.size(), static_cast<std::size_t>(std::pow(3, m)) - 1);
    for (std::uint64_t v : e) {
      ASSERT_GE(v, 1u);
      ASSERT_LE(v, q * q - 2);
      ASSERT_EQ(v & (v >> m) & (q - 1), 0u) << v;
    }
  }
}

TEST(PowerSum, Basics) {
  const FieldTower t(2, 1);
  EXPECT_EQ(power_sum(t, {}, 3), FieldElement(0));
  const FieldElement a(5), b(9);
  const std::vector<FieldElement> triple{a, a + b, b};
  EXPECT_EQ(power_sum(t, triple, 1), FieldElement(0));
  const std::vector<FieldElement> with_zero{FieldElement(0), FieldElement(1)};
  EXPECT_EQ(power_sum(t, with_zero, 4), FieldElement(1));
  // V_1 = {6, 7} at m = 2, h = 1.
  const std::vector<FieldElement> v1{FieldElement(6), FieldElement(7)};
  EXPECT_EQ(power_sum(t, v1, 1), FieldElement(1));
}

TEST(StarSet, Classification) {
  const FieldTower t(2, 1);
  const PointSet h2 = build_hr(t);
  EXPECT_EQ(bits_of(h2), (std::vector<std::uint32_t>{6, 7, 9, 10, 12, 14}));
  auto info = classify_star_set(t, h2);
  EXPECT_TRUE(info.is_star);
  EXPECT_EQ(info.t, 2);

  std::vector<FieldElement> ray(t.base_field().begin() + 1, t.base_field().end());
  EXPECT_FALSE(classify_star_set(t, PointSet(ray)).is_star);

  const FieldTower top(2, 2);
  const auto u = recurrence_set(top).points;
  info = classify_star_set(top, PointSet(u));
  EXPECT_TRUE(info.is_star);
  EXPECT_EQ(info.t, 1);

  std::vector<FieldElement> with_zero(h2.begin(), h2.end());
  with_zero.back() = FieldElement(0);
  EXPECT_FALSE(classify_star_set(t, PointSet(with_zero)).is_star);
}

TEST(PointSetType, RejectsDuplicates) {
  EXPECT_THROW(PointSet({FieldElement(3), FieldElement(3)}), std::invalid_argument);
  const PointSet p({FieldElement(9), FieldElement(2)});
  EXPECT_EQ(p.points().front(), FieldElement(2));
  EXPECT_TRUE(p.contains(FieldElement(9)));
  EXPECT_FALSE(p.contains(FieldElement(3)));
}

TEST(Direct, FrozenHistograms) {
  const FieldTower t2(2, 1);
  const auto r = verify_direct(t2, build_hr(t2), 2);
  EXPECT_TRUE(r.km_arc);
  EXPECT_TRUE(r.is_star_set);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.histogram, hist({{0, 6}, {2, 15}}));

  EXPECT_EQ(verify_direct(FieldTower(3, 1), build_hr(FieldTower(3, 1)), 4).histogram,
            hist({{0, 22}, {2, 48}, {4, 3}}));
  EXPECT_EQ(verify_direct(FieldTower(4, 1), build_hr(FieldTower(4, 1)), 8).histogram,
            hist({{0, 78}, {2, 192}, {8, 3}}));
  EXPECT_EQ(verify_direct(FieldTower(4, 2), build_hr(FieldTower(4, 2)), 4).histogram,
            hist({{0, 108}, {2, 160}, {4, 5}}));
}

TEST(Direct, MatchesBruteForceCensus) {
  std::mt19937_64 rng(7);
  for (int m : {2, 3}) {
    const FieldTower t(m, 1);
    for (int n = 0; n < 6; ++n) {
      const int type = m == 2 ? 2 : (n % 2 ? 2 : 4);
      const PointSet h = random_star_set(t, type, rng);
      const auto report = verify_direct(t, h, type);
      EXPECT_EQ(report.histogram, oracle::census(m, t.modulus(), bits_of(h)));
    }
  }
}

TEST(Direct, HistogramDoubleCount) {
  std::mt19937_64 rng(11);
  const FieldTower t(3, 1);
  for (int n = 0; n < 10; ++n) {
    const PointSet h = slide_on_ray(t, build_hr(t), rng);
    const auto r = verify_direct(t, h, 4);
    std::uint64_t lines = 0, incidences = 0;
    for (auto [size, count] : r.histogram) {
      lines += count;
      incidences += static_cast<std::uint64_t>(size) * count;
    }
    EXPECT_EQ(lines, t.q() * t.q() + t.q() + 1);
    EXPECT_EQ(incidences, h.size() * (t.q() + 1));
  }
}

TEST(Direct, WitnessOnFailure) {
  const FieldTower t(2, 1);
  std::vector<FieldElement> pts(t.base_field().begin() + 1, t.base_field().end());
  pts.push_back(t.i_elem());
  pts.push_back(t.i_elem() + FieldElement(1));
  const PointSet h(pts);
  const auto r = verify_direct(t, h, 1);
  EXPECT_FALSE(r.km_arc);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness_count, 3);
  int on_witness = 0;
  for (FieldElement x : h) on_witness += incident(t, *r.witness, ProjPoint::affine(x));
  EXPECT_EQ(on_witness, r.witness_count);

  EXPECT_THROW(verify_direct(t, h, 2), std::invalid_argument);
  EXPECT_THROW(verify_direct(t, PointSet(std::vector<FieldElement>(pts.begin(), pts.begin() + 4)), 0),
               std::invalid_argument);
}

TEST(Direct, JobsDoNotChangeResult) {
  std::mt19937_64 rng(5);
  const FieldTower t(4, 2);
  const PointSet h = slide_on_ray(t, build_hr(t), rng);
  const auto serial = census(t, h, Level::full, 1);
  const auto parallel = census(t, h, Level::full, 3);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    ASSERT_EQ(serial[k].line, parallel[k].line);
    ASSERT_EQ(serial[k].count, parallel[k].count);
  }
  const auto a = verify_direct(t, h, 4, Level::full, 1);
  const auto b = verify_direct(t, h, 4, Level::full, 4);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(verify_bracket(t, h, false, 1).witness_v, verify_bracket(t, h, false, 3).witness_v);
}

TEST(Criteria, AgreeOnConstructedArcs) {
  for (auto [m, h] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}}) {
    const FieldTower t(m, h);
    const Verdicts v = all_verdicts(t, build_hr(t));
    EXPECT_TRUE(v.direct && v.bracket && v.d && v.e) << m << "," << h;
    EXPECT_TRUE(verify_bracket(t, build_hr(t), true).holds);
  }
}

TEST(Criteria, AgreeOnRandomAndMutatedStarSets) {
  std::mt19937_64 rng(2024);
  int km = 0, not_km = 0;
  for (int m : {2, 3}) {
    const FieldTower t(m, 1);
    for (int n = 0; n < 40; ++n) {
      PointSet h = n % 2 ? slide_on_ray(t, build_hr(t), rng)
                         : random_star_set(t, m == 3 && n % 4 == 0 ? 4 : 2, rng);
      const Verdicts v = all_verdicts(t, h);
      ASSERT_EQ(v.direct, v.bracket);
      ASSERT_EQ(v.direct, v.d);
      ASSERT_EQ(v.direct, v.e);
      (v.direct ? km : not_km)++;
    }
  }
  EXPECT_GT(km, 0);
  EXPECT_GT(not_km, 0);
}

TEST(Criteria, WitnessesReported) {
  std::mt19937_64 rng(8);
  const FieldTower t(3, 1);
  PointSet h = slide_on_ray(t, build_hr(t), rng);
  while (verify_direct(t, h, 4).km_arc) h = slide_on_ray(t, build_hr(t), rng);
  const auto b = verify_bracket(t, h);
  ASSERT_FALSE(b.holds);
  ASSERT_TRUE(b.witness_v.has_value());
  FieldElement sum;
  for (FieldElement y : h) sum += t.pow(bilinear(t, *b.witness_v, y), b.witness_k);
  EXPECT_FALSE(sum.is_zero());

  const auto p = verify_power_sums(t, h, ExponentKind::D);
  ASSERT_FALSE(p.holds);
  EXPECT_FALSE(power_sum(t, h.points(), *p.witness_exponent).is_zero());
}

TEST(Criteria, Preconditions) {
  const FieldTower t(2, 1);
  std::vector<FieldElement> pts(t.base_field().begin() + 1, t.base_field().end());
  pts.push_back(t.i_elem());
  pts.push_back(t.i_elem() + FieldElement(1));
  EXPECT_THROW(verify_bracket(t, PointSet(pts)), std::invalid_argument);
  EXPECT_THROW(verify_power_sums(t, PointSet(pts), ExponentKind::E), std::invalid_argument);
  const FieldTower top(2, 2);
  const PointSet u(recurrence_set(top).points);
  EXPECT_THROW(verify_bracket(top, u), std::invalid_argument);
}

TEST(Expansion, SmallCasesAndRange) {
  const FieldTower t(3, 1);
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const FieldElement a(static_cast<std::uint32_t>(rng() % t.size()));
    const FieldElement b(static_cast<std::uint32_t>(rng() % t.size()));
    EXPECT_EQ(bracket_power_expand(t, a, b, 1, ExpansionForm::low), bilinear(t, a, b));
    EXPECT_EQ(bracket_power_expand(t, a, b, 1, ExpansionForm::high), bilinear(t, a, b));
    EXPECT_EQ(bracket_power_expand(t, a, b, 2, ExpansionForm::low),
              bilinear(t, t.square(a), t.square(b)));
  }
  EXPECT_THROW(bracket_power_expand(t, FieldElement(1), FieldElement(2), 0, ExpansionForm::low),
               std::invalid_argument);
  EXPECT_THROW(bracket_power_expand(t, FieldElement(1), FieldElement(2), 8, ExpansionForm::high),
               std::invalid_argument);
}

TEST(Expansion, BothFormsEqualDirectPower) {
  std::mt19937_64 rng(77);
  for (int m : {4, 6}) {
    const FieldTower t(m, 1);
    for (int n = 0; n < 300; ++n) {
      const FieldElement a(static_cast<std::uint32_t>(rng() % t.size()));
      const FieldElement b(static_cast<std::uint32_t>(rng() % t.size()));
      const std::uint64_t k = 1 + rng() % (t.q() - 1);
      const FieldElement want = t.pow(bilinear(t, a, b), k);
      ASSERT_EQ(bracket_power_expand(t, a, b, k, ExpansionForm::low), want);
      ASSERT_EQ(bracket_power_expand(t, a, b, k, ExpansionForm::high), want);
    }
  }
}

TEST(Vandermonde, Examples) {
  const FieldTower t(4, 2);
  // Tr_{F/F'} kernel: an additive subgroup of F of size 4.
  std::vector<FieldElement> v0;
  for (FieldElement x : t.base_field()) {
    if (t.rel_trace(x).is_zero()) v0.push_back(x);
  }
  ASSERT_EQ(v0.size(), 4u);
  EXPECT_TRUE(is_vandermonde(t, v0));
  std::mt19937_64 rng(4);
  for (int n = 0; n < 20; ++n) {
    const FieldElement a = t.base_field()[1 + rng() % (t.q() - 1)];
    const FieldElement b = t.base_field()[rng() % t.q()];
    std::vector<FieldElement> image;
    for (FieldElement x : v0) image.push_back(t.mul(a, x) + b);
    EXPECT_TRUE(is_vandermonde(t, image));
  }
  // {0, 1} inside F = GF(4): no power sums to check.
  const FieldTower small(2, 1);
  EXPECT_TRUE(is_vandermonde(small, std::vector<FieldElement>{FieldElement(0), FieldElement(1)}));

  const std::vector<FieldElement> sumful{FieldElement(1), FieldElement(2), FieldElement(4)};
  EXPECT_FALSE(is_vandermonde(t, sumful));
  EXPECT_THROW(is_vandermonde(t, std::vector<FieldElement>{FieldElement(2), FieldElement(2)}),
               std::invalid_argument);
  EXPECT_THROW(is_vandermonde(t, std::vector<FieldElement>{FieldElement(2)}), std::invalid_argument);
}

TEST(Secants, CountsAndInverseSets) {
  for (auto [m, h] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
    const FieldTower t(m, h);
    const PointSet arc = build_hr(t);
    const int type = static_cast<int>(t.q() / t.r());
    const auto secants = t_secants(t, arc, type);
    EXPECT_EQ(secants.size(), t.q() / type + 1);
    for (FieldElement y : arc) {
      int through = 0;
      for (const Line& l : secants) through += incident(t, l, ProjPoint::affine(y));
      ASSERT_EQ(through, 1);
    }
    EXPECT_TRUE(secant_inverse_check(t, arc, type));
  }
  const FieldTower t(2, 1);
  std::vector<FieldElement> pts(t.base_field().begin() + 1, t.base_field().end());
  pts.push_back(t.i_elem());
  pts.push_back(t.i_elem() + FieldElement(1));
  EXPECT_THROW(t_secants(t, PointSet(pts), 1), std::invalid_argument);
}

TEST(RandomStarSet, ShapeAndErrors) {
  std::mt19937_64 rng(3);
  const FieldTower t(4, 1);
  for (int type : {1, 2, 4, 8}) {
    const PointSet h = random_star_set(t, type, rng);
    EXPECT_EQ(h.size(), t.q() + type);
    const auto info = classify_star_set(t, h);
    EXPECT_TRUE(info.is_star);
    EXPECT_EQ(info.t, type);
  }
  EXPECT_THROW(random_star_set(t, 3, rng), std::invalid_argument);
  EXPECT_THROW(random_star_set(t, 16, rng), std::invalid_argument);
}

TEST(Invariance, CollineationsFixingOriginKeepVerdict) {
  std::mt19937_64 rng(12);
  const FieldTower t(3, 1);
  const auto f = t.base_field();
  for (int n = 0; n < 15; ++n) {
    Matrix3 m = identity_matrix();
    do {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m[i][j] = f[rng() % f.size()];
      }
    } while (determinant(t, m).is_zero());
    const Collineation c = make_collineation(t, m, static_cast<int>(rng() % 3));
    for (const PointSet& h : {build_hr(t), slide_on_ray(t, build_hr(t), rng)}) {
      const PointSet image = apply(t, c, h);
      EXPECT_EQ(verify_direct(t, image, 4).km_arc, verify_direct(t, h, 4).km_arc);
      EXPECT_EQ(verify_direct(t, image, 4).histogram, verify_direct(t, h, 4).histogram);
    }
  }
  // Third row (1/x_p, 0, 1) sends the point p = (x_p : y_p : 1) of H to infinity.
  FieldElement xp;
  for (FieldElement y : build_hr(t)) {
    xp = to_homogeneous(t, ProjPoint::affine(y))[0];
    if (!xp.is_zero()) break;
  }
  Matrix3 to_infinity = identity_matrix();
  to_infinity[2][0] = t.inv(xp);
  EXPECT_THROW(apply(t, make_collineation(t, to_infinity), build_hr(t)), std::invalid_argument);
}
