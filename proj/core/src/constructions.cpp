#include "kmarc/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kmarc {
namespace {

FieldElement coords(const FieldTower& tower, FieldElement x, FieldElement y) {
  return x + tower.mul(y, tower.i_elem());
}

std::vector<FieldElement> roots_in_fprime(const FieldTower& tower, std::uint32_t poly) {
  std::vector<FieldElement> out;
  for (FieldElement x : tower.base_field(Level::sub)) {
    FieldElement value;
    FieldElement power(1);
    for (std::uint32_t bits = poly; bits != 0; bits >>= 1) {
      if (bits & 1u) value += power;
      power = tower.mul(power, x);
    }
    if (value.is_zero()) out.push_back(x);
  }
  return out;
}

int example_h(ExampleName name) {
  switch (name) {
    case ExampleName::h2: return 1;
    case ExampleName::h4: return 2;
    case ExampleName::h8: return 3;
  }
  return 0;
}

}  // namespace

TraceSlice trace_slice(const FieldTower& tower, FieldElement c) {
  if (c.is_zero() || !tower.in_F(c)) {
    throw std::invalid_argument("trace_slice: c must be a nonzero element of F");
  }
  TraceSlice slice;
  slice.c = c;
  for (FieldElement x : tower.base_field()) {
    if (tower.rel_trace(x) == FieldElement(1)) slice.v1.push_back(x);
  }
  for (FieldElement x : slice.v1) slice.elements.push_back(tower.mul(c, x));
  std::ranges::sort(slice.elements);
  return slice;
}

std::vector<std::uint64_t> trace_digit_exponents(const FieldTower& tower) {
  const std::uint64_t q = tower.q();
  const std::uint64_t r = tower.r();
  std::vector<std::uint64_t> digits{0};
  for (std::uint64_t a = q / r;; a /= r) {
    digits.push_back(a);
    if (a == 1) break;
  }
  std::vector<std::uint64_t> sums{0};
  for (int j = 0; j < tower.h(); ++j) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : sums) {
      for (std::uint64_t a : digits) next.push_back(s + (a << j));
    }
    sums = std::move(next);
  }
  std::ranges::sort(sums);
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

std::vector<std::uint64_t> v1_power_sum_support(const FieldTower& tower) {
  const std::uint64_t q = tower.q();
  const TraceSlice slice = trace_slice(tower);
  const auto admissible = trace_digit_exponents(tower);
  std::vector<std::uint64_t> support;
  for (std::uint64_t k = 1; k + 2 <= q; ++k) {
    const FieldElement s = power_sum(tower, slice.v1, k);
    if (s.is_zero()) continue;
    if (s != FieldElement(1) || !std::ranges::binary_search(admissible, q - 1 - k)) {
      throw std::logic_error("pi_" + std::to_string(k) + "(V_1) violates the trace-digit form");
    }
    support.push_back(k);
  }
  return support;
}

PointSet subplane_oval(const FieldTower& tower) {
  const auto circle = tower.unit_circle(Level::sub);
  PointSet oval(std::vector<FieldElement>(circle.begin(), circle.end()));
  // 0 is the nucleus exactly when every subplane line through 0 is a tangent.
  const StarSetInfo star = classify_star_set(tower, oval, Level::sub);
  if (!star.is_star || star.t != 1) throw std::logic_error("S' failed the nucleus census");
  return oval;
}

PointSet subplane_hyperoval(const FieldTower& tower) {
  if (tower.r() < 4) {
    throw std::invalid_argument("PG(2,2) has no affine hyperoval avoiding 0; need r >= 4");
  }
  std::vector<FieldElement> base(tower.unit_circle(Level::sub).begin(),
                                 tower.unit_circle(Level::sub).end());
  base.push_back(FieldElement(0));
  for (FieldElement c0 : tower.elements(Level::sub)) {
    if (std::ranges::find(base, c0) != base.end()) continue;
    std::vector<FieldElement> shifted;
    for (FieldElement x : base) shifted.push_back(x + c0);
    PointSet hyperoval(std::move(shifted));
    const ArcReport report = verify_direct(tower, hyperoval, 2, Level::sub);
    if (!report.km_arc) throw std::logic_error("translated S' u {0} is not a hyperoval");
    return hyperoval;
  }
  throw std::logic_error("no translation keeps 0 off the hyperoval");
}

PointSet lift_construction(const FieldTower& tower, const PointSet& sub_arc, int s,
                           FieldElement c) {
  const int ratio = tower.m() / tower.h();
  if (ratio % 2 == 0) {
    throw std::invalid_argument("lift_construction requires m/h odd (m=" +
                                std::to_string(tower.m()) + ", h=" + std::to_string(tower.h()) +
                                ")");
  }
  const auto r = static_cast<std::int64_t>(tower.r());
  if (s < 1 || s > r) throw std::invalid_argument("lift_construction: s must lie in [1, r]");
  if (s == r) {
    throw std::invalid_argument("lift_construction: s = r gives type t = q, which is excluded");
  }
  if (c.is_zero()) throw std::invalid_argument("lift_construction: c must be nonzero");
  if (sub_arc.contains(FieldElement(0))) {
    throw std::invalid_argument("lift_construction: the subplane arc contains 0");
  }
  if (static_cast<std::int64_t>(sub_arc.size()) != r + s) {
    throw std::invalid_argument("lift_construction: expected r + s subplane points");
  }
  const ArcReport report = verify_direct(tower, sub_arc, s, Level::sub);
  const StarSetInfo star = classify_star_set(tower, sub_arc, Level::sub);
  if (!report.km_arc || !star.is_star || star.t != s) {
    throw std::invalid_argument("lift_construction: input is not an (r+s, s)-arc with s-nucleus 0");
  }
  const TraceSlice slice = trace_slice(tower, c);
  std::vector<FieldElement> out;
  for (FieldElement w : slice.elements) {
    const FieldElement lambda = tower.inv(w);
    for (FieldElement u : sub_arc) out.push_back(tower.mul(lambda, u));
  }
  return PointSet(std::move(out));
}

RecurrenceSet recurrence_set(const FieldTower& tower) {
  const std::uint64_t r = tower.r();
  RecurrenceSet rec;
  for (FieldElement u : tower.unit_circle(Level::sub)) {
    if (u != FieldElement(1) && tower.multiplicative_order(u) == r + 1) {
      rec.u_gen = u;
      break;
    }
  }
  rec.b = rec.u_gen + tower.frobenius(rec.u_gen, tower.h());

  // One term beyond b_{r+1} to confirm the period.
  std::vector<FieldElement> seq{FieldElement(1), FieldElement(0)};
  while (seq.size() < r + 3) {
    const std::size_t n = seq.size();
    seq.push_back(tower.mul(rec.b, seq[n - 1]) + seq[n - 2]);
  }
  for (std::size_t n = 1; n < seq.size(); ++n) {
    const bool zero_expected = (n - 1) % (r + 1) == 0;
    if (seq[n].is_zero() != zero_expected) {
      throw std::logic_error("recurrence does not have period r+1");
    }
  }
  if (seq[r + 1] != FieldElement(1)) throw std::logic_error("b_{r+1} != 1");
  rec.b_seq.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r + 2));

  for (std::uint64_t i = 0; i <= r; ++i) {
    const FieldElement x = rec.b_seq[i];
    const FieldElement y = rec.b_seq[i + 1];
    const FieldElement conic = tower.square(x) + tower.square(y) + tower.mul(rec.b, tower.mul(x, y));
    if (conic != FieldElement(1)) throw std::logic_error("U point off the conic");
    rec.points.push_back(coords(tower, x, y));
  }
  std::vector<FieldElement> sorted = rec.points;
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end()) {
    throw std::logic_error("U has fewer than r+1 points");
  }
  return rec;
}

PointSet build_hr(const FieldTower& tower, FieldElement c) {
  const RecurrenceSet rec = recurrence_set(tower);
  const TraceSlice slice = trace_slice(tower, c);
  std::vector<FieldElement> out;
  out.reserve(slice.elements.size() * rec.points.size());
  for (FieldElement w : slice.elements) {
    const FieldElement lambda = tower.inv(w);
    for (FieldElement u : rec.points) out.push_back(tower.mul(lambda, u));
  }
  return PointSet(std::move(out));
}

std::vector<FieldElement> example_u_set(const FieldTower& tower, ExampleName name,
                                        FieldElement p) {
  const FieldElement one(1);
  const FieldElement zero(0);
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  switch (name) {
    case ExampleName::h2:
      pairs = {{one, zero}, {zero, one}, {one, one}};
      break;
    case ExampleName::h4:
      pairs = {{one, zero}, {zero, one}, {one, p}, {p, one}, {p, p}};
      break;
    case ExampleName::h8: {
      const FieldElement p3 = tower.pow(p, 3);
      const FieldElement p6 = tower.pow(p, 6);
      pairs = {{one, zero}, {zero, one}, {one, p},  {p, p6}, {p6, p3},
               {p3, p3},    {p3, p6},    {p6, p},   {p, one}};
      break;
    }
  }
  std::vector<FieldElement> out;
  for (const auto& [x, y] : pairs) out.push_back(coords(tower, x, y));
  std::ranges::sort(out);
  return out;
}

ExampleFixture example_fixture(ExampleName name, int m, std::optional<std::uint32_t> modulus) {
  const int h = example_h(name);
  if (m < h || m % h != 0) {
    throw std::invalid_argument("example needs m to be a positive multiple of " +
                                std::to_string(h) + ", got m=" + std::to_string(m));
  }
  FieldTower tower(m, h, modulus);
  RecurrenceSet rec = recurrence_set(tower);
  PointSet arc = build_hr(tower);

  std::vector<FieldElement> computed = rec.points;
  std::ranges::sort(computed);
  std::vector<FieldElement> candidates{FieldElement(1)};
  if (name == ExampleName::h4) candidates = roots_in_fprime(tower, 0b111);
  if (name == ExampleName::h8) candidates = roots_in_fprime(tower, 0b1011);
  if (candidates.empty()) throw std::logic_error("listed parameter has no root in F'");

  for (int j = 0; j < tower.h(); ++j) {
    const FieldElement parameter = tower.frobenius(candidates.front(), j);
    if (example_u_set(tower, name, parameter) == computed) {
      return {std::move(tower), std::move(rec), std::move(arc), {parameter, j}};
    }
  }
  throw std::logic_error("computed U matches no Galois conjugate of the listed set");
}

}  // namespace kmarc
