#include "kmarc/arcs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace kmarc {
namespace {

// Runs fn(begin, end) over a partition of [0, n). fn must not throw.
template <class Fn>
void parallel_chunks(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = n * w / workers;
    const std::size_t e = n * (w + 1) / workers;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
}

void require_in_level(const FieldTower& tower, const PointSet& points, Level level) {
  for (FieldElement y : points) {
    if (!tower.in_ambient(y, level)) {
      throw std::invalid_argument(level == Level::full ? "point outside K" : "point outside K'");
    }
  }
}

int require_star_type(const FieldTower& tower, const PointSet& points) {
  const StarSetInfo info = classify_star_set(tower, points);
  if (!info.is_star) throw std::invalid_argument("point set is not a star-set");
  const int t = *info.t;
  if (t < 2 || static_cast<std::uint64_t>(t) >= tower.q()) {
    throw std::invalid_argument("algebraic criteria need 2 <= t < q, got t=" + std::to_string(t));
  }
  return t;
}

}  // namespace

PointSet::PointSet(std::vector<FieldElement> points) : points_(std::move(points)) {
  std::ranges::sort(points_);
  if (std::ranges::adjacent_find(points_) != points_.end()) {
    throw std::invalid_argument("point set contains duplicates");
  }
}

bool PointSet::contains(FieldElement x) const noexcept {
  return std::ranges::binary_search(points_, x);
}

ExponentSet gen_exponents(ExponentKind kind, int m) {
  if (m < 1 || m > FieldTower::kMaxM) {
    throw std::invalid_argument("gen_exponents: m must lie in [1, 8]");
  }
  const std::uint64_t q = std::uint64_t{1} << m;
  std::vector<std::uint64_t> values;
  switch (kind) {
    case ExponentKind::D:
      for (std::uint64_t k = 1; k + 2 <= q; ++k) {
        for (std::uint64_t i = 0; 2 * i + 1 <= k; ++i) {
          if (preceq(i, k)) values.push_back(i * q + k - i);
        }
      }
      break;
    case ExponentKind::Dprime:
      for (std::uint64_t k = 1; k < q; ++k) {
        // Walk the submasks of k, 0 included.
        for (std::uint64_t i = k;; i = (i - 1) & k) {
          values.push_back(k + (q - 1) * i);
          if (i == 0) break;
        }
      }
      break;
    case ExponentKind::E: {
      std::uint64_t combos = 1;
      for (int j = 0; j < m; ++j) combos *= 3;
      const std::uint64_t digit_value[3] = {0, 1, q};
      for (std::uint64_t c = 1; c < combos; ++c) {
        std::uint64_t rest = c;
        std::uint64_t e = 0;
        for (int j = 0; j < m; ++j) {
          e += digit_value[rest % 3] << j;
          rest /= 3;
        }
        values.push_back(e);
      }
      break;
    }
  }
  std::ranges::sort(values);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {kind, m, std::move(values)};
}

FieldElement power_sum(const FieldTower& tower, std::span<const FieldElement> points,
                       std::uint64_t d) noexcept {
  FieldElement acc;
  for (FieldElement y : points) acc += tower.pow(y, d);
  return acc;
}

StarSetInfo classify_star_set(const FieldTower& tower, const PointSet& points, Level level) {
  const auto q = static_cast<std::int64_t>(std::uint64_t{1} << tower.level_degree(level));
  const auto t = static_cast<std::int64_t>(points.size()) - q;
  if (t < 1 || q % t != 0 || points.contains(FieldElement(0))) return {};
  for (FieldElement y : points) {
    if (!tower.in_ambient(y, level)) return {};
  }
  std::map<FieldElement, std::int64_t> rays;
  for (FieldElement y : points) ++rays[tower.polar(y, level).u];
  if (static_cast<std::int64_t>(rays.size()) != q / t + 1) return {};
  for (const auto& [u, count] : rays) {
    if (count != t) return {};
  }
  return {true, static_cast<int>(t)};
}

std::vector<LineCount> census(const FieldTower& tower, const PointSet& points, Level level,
                              int jobs) {
  require_in_level(tower, points, level);
  const auto circle = tower.unit_circle(level);
  const auto base = tower.base_field(level);
  std::vector<LineCount> out(circle.size() * base.size() + 1);
  parallel_chunks(circle.size(), jobs, [&](std::size_t b, std::size_t e) {
    std::vector<int> counts(tower.size(), 0);
    for (std::size_t idx = b; idx < e; ++idx) {
      const FieldElement u = circle[idx];
      // y lies on L(u, mu) exactly when mu = <u, y>.
      for (FieldElement y : points) ++counts[bilinear(tower, u, y, level).bits()];
      for (std::size_t j = 0; j < base.size(); ++j) {
        out[idx * base.size() + j] = {Line::affine(u, base[j]), counts[base[j].bits()]};
      }
      for (FieldElement y : points) counts[bilinear(tower, u, y, level).bits()] = 0;
    }
  });
  out.back() = {Line::infinity(), 0};
  return out;
}

ArcReport verify_direct(const FieldTower& tower, const PointSet& points, int t, Level level,
                        int jobs) {
  const auto q = std::uint64_t{1} << tower.level_degree(level);
  if (t < 1 || static_cast<std::uint64_t>(t) >= q) {
    throw std::invalid_argument("verify_direct: t must lie in [1, q), got " + std::to_string(t));
  }
  if (points.size() != q + static_cast<std::uint64_t>(t)) {
    throw std::invalid_argument("verify_direct: expected q + t = " + std::to_string(q + t) +
                                " points, got " + std::to_string(points.size()));
  }
  ArcReport report;
  report.is_star_set = classify_star_set(tower, points, level).is_star;
  report.km_arc = true;
  for (const LineCount& lc : census(tower, points, level, jobs)) {
    ++report.histogram[lc.count];
    const bool legal = lc.count == 0 || lc.count == 2 || lc.count == t;
    if (!legal && report.km_arc) {
      report.km_arc = false;
      report.witness = lc.line;
      report.witness_count = lc.count;
    }
  }
  if (report.km_arc) report.t = t;
  return report;
}

BracketCheck verify_bracket(const FieldTower& tower, const PointSet& points,
                            bool include_q_minus_1, int jobs) {
  require_star_type(tower, points);
  const std::uint64_t kmax = tower.q() - (include_q_minus_1 ? 1 : 2);
  const auto circle = tower.unit_circle();
  // Per direction: the smallest failing k, or 0.
  std::vector<std::uint64_t> first_failure(circle.size(), 0);
  parallel_chunks(circle.size(), jobs, [&](std::size_t b, std::size_t e) {
    std::vector<FieldElement> base(points.size());
    std::vector<FieldElement> acc(points.size());
    for (std::size_t idx = b; idx < e; ++idx) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        base[j] = acc[j] = bilinear(tower, circle[idx], points.points()[j]);
      }
      for (std::uint64_t k = 1; k <= kmax; ++k) {
        FieldElement sum;
        for (FieldElement a : acc) sum += a;
        if (!sum.is_zero()) {
          first_failure[idx] = k;
          break;
        }
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = tower.mul(acc[j], base[j]);
      }
    }
  });
  for (std::size_t idx = 0; idx < circle.size(); ++idx) {
    if (first_failure[idx] != 0) return {false, circle[idx], first_failure[idx]};
  }
  return {};
}

PowerSumCheck verify_power_sums(const FieldTower& tower, const PointSet& points,
                                ExponentKind kind) {
  require_star_type(tower, points);
  for (std::uint64_t d : gen_exponents(kind, tower.m()).values) {
    if (!power_sum(tower, points.points(), d).is_zero()) return {false, d};
  }
  return {};
}

FieldElement bracket_power_expand(const FieldTower& tower, FieldElement a, FieldElement b,
                                  std::uint64_t k, ExpansionForm form) {
  const std::uint64_t q = tower.q();
  if (k < 1 || k > q - 1) {
    throw std::invalid_argument("bracket_power_expand: k must lie in [1, q-1]");
  }
  const std::uint64_t lo = form == ExpansionForm::low ? 0 : (k + 2) / 2;
  const std::uint64_t hi = form == ExpansionForm::low ? (k - 1) / 2 : k;
  FieldElement acc;
  for (std::uint64_t i = lo; i <= hi; ++i) {
    if (!preceq(i, k)) continue;  // even binomial coefficient
    const std::uint64_t e = i * q + k - i;
    acc += bilinear(tower, tower.pow(a, e), tower.pow(b, e));
  }
  return acc;
}

bool is_vandermonde(const FieldTower& tower, std::span<const FieldElement> set) {
  std::vector<FieldElement> sorted(set.begin(), set.end());
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end()) {
    throw std::invalid_argument("is_vandermonde: duplicate elements");
  }
  const bool in_f = std::ranges::all_of(sorted, [&](FieldElement x) { return tower.in_F(x); });
  const std::uint64_t field_size = in_f ? tower.q() : tower.size();
  if (sorted.size() <= 1 || sorted.size() >= field_size) {
    throw std::invalid_argument("is_vandermonde: need 1 < |T| < field size");
  }
  for (std::uint64_t k = 1; k + 2 <= sorted.size(); ++k) {
    if (!power_sum(tower, sorted, k).is_zero()) return false;
  }
  return true;
}

std::vector<Line> t_secants(const FieldTower& tower, const PointSet& points, int t) {
  if (t < 2) throw std::invalid_argument("t_secants: t must be at least 2");
  const ArcReport report = verify_direct(tower, points, t);
  const StarSetInfo star = classify_star_set(tower, points);
  if (!report.km_arc || !star.is_star || star.t != t) {
    throw std::invalid_argument("t_secants: not a verified KM-arc of type " + std::to_string(t) +
                                " with t-nucleus 0");
  }
  std::vector<Line> out;
  for (FieldElement y : points) {
    const Line line = Line::affine(tower.polar(y).u, FieldElement(0));
    if (std::ranges::find(out, line) == out.end()) out.push_back(line);
  }
  std::ranges::sort(out);
  return out;
}

bool secant_inverse_check(const FieldTower& tower, const PointSet& points, int t) {
  for (const Line& line : t_secants(tower, points, t)) {
    std::vector<FieldElement> inverses;
    for (FieldElement y : points) {
      if (incident(tower, line, ProjPoint::affine(y))) inverses.push_back(tower.inv(y));
    }
    if (!is_vandermonde(tower, inverses)) return false;
  }
  return true;
}

PointSet random_star_set(const FieldTower& tower, int t, std::mt19937_64& rng) {
  const std::uint64_t q = tower.q();
  if (t < 1 || static_cast<std::uint64_t>(t) >= q || q % static_cast<std::uint64_t>(t) != 0) {
    throw std::invalid_argument("random_star_set: t must be a proper divisor of q");
  }
  std::vector<FieldElement> directions(tower.unit_circle().begin(), tower.unit_circle().end());
  std::shuffle(directions.begin(), directions.end(), rng);
  directions.resize(q / static_cast<std::uint64_t>(t) + 1);
  std::vector<FieldElement> scalars(tower.base_field().begin() + 1, tower.base_field().end());
  std::vector<FieldElement> out;
  for (FieldElement u : directions) {
    std::shuffle(scalars.begin(), scalars.end(), rng);
    for (int j = 0; j < t; ++j) out.push_back(tower.mul(scalars[j], u));
  }
  return PointSet(std::move(out));
}

PointSet apply(const FieldTower& tower, const Collineation& c, const PointSet& points) {
  std::vector<FieldElement> out;
  out.reserve(points.size());
  for (FieldElement y : points) {
    const ProjPoint image = apply(tower, c, ProjPoint::affine(y));
    if (image.at_infinity) throw std::invalid_argument("collineation maps a point to infinity");
    out.push_back(image.value);
  }
  return PointSet(std::move(out));
}

}  // namespace kmarc
