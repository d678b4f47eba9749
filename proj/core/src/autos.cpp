#include "kmarc/autos.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace kmarc {
namespace {

constexpr std::uint64_t kElationSampleSeed = 20240611;
constexpr int kElationSamples = 50;

struct CollineationHash {
  std::size_t operator()(const Collineation& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.frob) + 0x9e3779b97f4a7c15ULL;
    for (const auto& row : c.matrix) {
      for (FieldElement x : row) h = (h ^ x.bits()) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

FieldElement recurrence_b(const FieldTower& tower) { return recurrence_set(tower).b; }

Matrix3 rows(FieldElement a00, FieldElement a01, FieldElement a02, FieldElement a10,
             FieldElement a11, FieldElement a12, FieldElement a20, FieldElement a21,
             FieldElement a22) {
  return {{{a00, a01, a02}, {a10, a11, a12}, {a20, a21, a22}}};
}

void require_in_F(const FieldTower& tower, FieldElement x, const char* what) {
  if (!tower.in_F(x)) throw std::invalid_argument(std::string(what) + " must lie in F");
}

void require_order(const FieldTower& tower, const NamedMap& map, std::uint64_t expected) {
  const auto order = collineation_order(tower, map.realized, expected);
  if (order != expected) {
    throw std::logic_error(to_string(map.kind) + " does not have order " +
                           std::to_string(expected));
  }
}

FieldElement smallest_with_trace(const FieldTower& tower, FieldElement target) {
  for (FieldElement x : tower.base_field()) {
    if (tower.rel_trace(x) == target) return x;
  }
  throw std::invalid_argument("no element of F has the requested relative trace");
}

std::vector<FieldElement> trace_kernel(const FieldTower& tower) {
  std::vector<FieldElement> out;
  for (FieldElement x : tower.base_field()) {
    if (tower.rel_trace(x).is_zero()) out.push_back(x);
  }
  return out;
}

// Greedy GF(2)-basis, spans tracked as a sorted list.
std::vector<FieldElement> gf2_basis(const std::vector<FieldElement>& elements) {
  std::vector<FieldElement> basis;
  std::set<FieldElement> span{FieldElement(0)};
  for (FieldElement x : elements) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    std::vector<FieldElement> shifted;
    for (FieldElement y : span) shifted.push_back(x + y);
    span.insert(shifted.begin(), shifted.end());
  }
  return basis;
}

template <class T>
std::vector<std::vector<T>> orbit_partition(const std::vector<Collineation>& generators,
                                            const std::vector<T>& items, auto&& image) {
  const std::set<T> universe(items.begin(), items.end());
  for (const auto& g : generators) {
    for (const T& x : items) {
      if (!universe.contains(image(g, x))) {
        throw std::invalid_argument("orbits: the set is not invariant under the generators");
      }
    }
  }
  std::set<T> seen;
  std::vector<std::vector<T>> out;
  for (const T& start : items) {
    if (seen.contains(start)) continue;
    std::vector<T> orbit{start};
    seen.insert(start);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : generators) {
        T next = image(g, orbit[i]);
        if (seen.insert(next).second) orbit.push_back(next);
      }
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::theta: return "theta";
    case MapKind::sigma_prime: return "sigma_prime";
    case MapKind::elation: return "elation";
    case MapKind::psi: return "psi";
    case MapKind::rho: return "rho";
    case MapKind::tau: return "tau";
  }
  return "unknown";
}

MapKind map_kind_from_string(const std::string& name) {
  for (MapKind k : {MapKind::theta, MapKind::sigma_prime, MapKind::elation, MapKind::psi,
                    MapKind::rho, MapKind::tau}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown map name: " + name);
}

std::optional<std::uint64_t> collineation_order(const FieldTower& tower, const Collineation& c,
                                                std::uint64_t limit) {
  const Collineation id;
  Collineation acc = c;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (acc == id) return k;
    acc = compose(tower, c, acc);
  }
  return std::nullopt;
}

FieldElement primitive_fprime(const FieldTower& tower) {
  const std::uint64_t target = tower.r() - 1;
  for (FieldElement x : tower.base_field(Level::sub)) {
    if (!x.is_zero() && tower.multiplicative_order(x) == target) return x;
  }
  throw std::logic_error("F' has no primitive element");
}

NamedMap make_theta(const FieldTower& tower) {
  const FieldElement o(0);
  const FieldElement l(1);
  NamedMap map{MapKind::theta, {},
               make_collineation(tower, rows(o, l, o, l, recurrence_b(tower), o, o, o, l))};
  require_order(tower, map, tower.r() + 1);
  return map;
}

NamedMap make_sigma_prime(const FieldTower& tower) {
  const FieldElement o(0);
  const FieldElement l(1);
  NamedMap map{MapKind::sigma_prime, {},
               make_collineation(tower, rows(l, l, o, o, recurrence_b(tower), o, o, o, l), 1)};
  if (power(tower, map.realized, static_cast<std::uint64_t>(tower.m())).frob != 0) {
    throw std::logic_error("(sigma')^m is not linear");
  }
  return map;
}

NamedMap make_elation(const FieldTower& tower, FieldElement a, FieldElement b) {
  require_in_F(tower, a, "elation parameter a");
  require_in_F(tower, b, "elation parameter b");
  const FieldElement o(0);
  const FieldElement l(1);
  NamedMap map{MapKind::elation, {a, b}, make_collineation(tower, rows(l, o, o, o, l, o, a, b, l))};

  const FieldElement axis = b + tower.mul(a, tower.i_elem());
  std::mt19937_64 rng(kElationSampleSeed);
  for (int n = 0; n < kElationSamples; ++n) {
    const FieldElement z(static_cast<std::uint32_t>(rng() % tower.size()));
    const FieldElement denom = bilinear(tower, z, axis) + l;
    ProjPoint expected;
    if (!denom.is_zero()) {
      expected = ProjPoint::affine(tower.div(z, denom));
    } else {
      expected = ProjPoint::infinite(tower.polar(z).u);
    }
    if (apply(tower, map.realized, ProjPoint::affine(z)) != expected) {
      throw std::logic_error("elation matrix disagrees with z/(<z, b + a i> + 1)");
    }
  }
  return map;
}

NamedMap make_psi(const FieldTower& tower) {
  const FieldElement o(0);
  const FieldElement l(1);
  NamedMap map{MapKind::psi, {},
               make_collineation(tower, rows(l, recurrence_b(tower), o, o, l, o, o, o, l))};
  require_order(tower, map, 2);
  return map;
}

NamedMap make_rho(const FieldTower& tower, FieldElement gamma, FieldElement s, FieldElement t) {
  if (gamma.is_zero() || !tower.in_Fprime(gamma)) {
    throw std::invalid_argument("rho: gamma must be a nonzero element of F'");
  }
  require_in_F(tower, s, "rho parameter s");
  require_in_F(tower, t, "rho parameter t");
  const FieldElement l(1);
  const FieldElement gamma_inv = tower.inv(gamma);
  if (tower.rel_trace(s) != gamma + l) throw std::invalid_argument("rho: Tr(s) != gamma + 1");
  if (tower.rel_trace(t) != gamma_inv + l) throw std::invalid_argument("rho: Tr(t) != 1/gamma + 1");
  const FieldElement o(0);
  NamedMap map{MapKind::rho, {gamma, s, t},
               make_collineation(tower, rows(gamma, o, o, o, gamma_inv, o, s, t, l))};
  if (gamma == primitive_fprime(tower)) require_order(tower, map, tower.r() - 1);
  return map;
}

NamedMap make_rho(const FieldTower& tower, FieldElement gamma) {
  if (gamma.is_zero() || !tower.in_Fprime(gamma)) {
    throw std::invalid_argument("rho: gamma must be a nonzero element of F'");
  }
  const FieldElement l(1);
  return make_rho(tower, gamma, smallest_with_trace(tower, gamma + l),
                  smallest_with_trace(tower, tower.inv(gamma) + l));
}

NamedMap make_tau(const FieldTower& tower, FieldElement t) {
  require_in_F(tower, t, "tau parameter t");
  const FieldElement o(0);
  const FieldElement l(1);
  NamedMap map{MapKind::tau, {t}, make_collineation(tower, rows(l, l, o, o, l, o, o, t, l))};
  return map;
}

NamedMap make_example_tau(const ExampleFixture& fixture, ExampleName name) {
  const FieldTower& tower = fixture.tower;
  FieldElement target(0);
  if (name == ExampleName::h4) target = fixture.match.parameter;
  if (name == ExampleName::h8) target = tower.pow(fixture.match.parameter, 5);
  return make_tau(tower, smallest_with_trace(tower, target));
}

std::vector<Collineation> trace_kernel_elations(const FieldTower& tower) {
  const auto kernel = trace_kernel(tower);
  std::vector<Collineation> out;
  out.reserve(kernel.size() * kernel.size());
  for (FieldElement a : kernel) {
    for (FieldElement b : kernel) out.push_back(make_elation(tower, a, b).realized);
  }
  return out;
}

std::vector<Collineation> trace_kernel_generators(const FieldTower& tower) {
  const auto basis = gf2_basis(trace_kernel(tower));
  std::vector<Collineation> out;
  for (FieldElement a : basis) out.push_back(make_elation(tower, a, FieldElement(0)).realized);
  for (FieldElement b : basis) out.push_back(make_elation(tower, FieldElement(0), b).realized);
  return out;
}

StabilizeResult stabilizes(const FieldTower& tower, const Collineation& c, const PointSet& points) {
  for (FieldElement x : points) {
    const ProjPoint image = apply(tower, c, ProjPoint::affine(x));
    if (image.at_infinity || !points.contains(image.value)) return {false, x, image};
  }
  return {};
}

std::vector<std::vector<ProjPoint>> orbits(const FieldTower& tower,
                                           const std::vector<Collineation>& generators,
                                           const std::vector<ProjPoint>& points) {
  return orbit_partition(generators, points, [&](const Collineation& g, const ProjPoint& p) {
    return apply(tower, g, p);
  });
}

std::vector<std::vector<Line>> orbits(const FieldTower& tower,
                                      const std::vector<Collineation>& generators,
                                      const std::vector<Line>& lines) {
  return orbit_partition(generators, lines, [&](const Collineation& g, const Line& l) {
    return apply(tower, g, l);
  });
}

Homogeneous line_form(const FieldTower& tower, const Line& line) {
  if (line.at_infinity) return {FieldElement(0), FieldElement(0), FieldElement(1)};
  // <u, x + y*i> = x*<u,1> + y*<u,i>.
  return {bilinear(tower, line.u, FieldElement(1)), bilinear(tower, line.u, tower.i_elem()),
          line.mu};
}

bool is_elation_with_axis(const FieldTower& tower, const Collineation& c, const Line& axis) {
  if (c.frob != 0) return false;
  const bool identity = c == Collineation{};
  for (const ProjPoint& p : all_points(tower)) {
    const bool fixed = apply(tower, c, p) == p;
    if (incident(tower, axis, p) ? !fixed : (fixed && !identity)) return false;
  }
  return true;
}

std::string to_string(TranslationVerdict verdict) {
  switch (verdict) {
    case TranslationVerdict::translation: return "translation";
    case TranslationVerdict::elation_only: return "elation_only";
    case TranslationVerdict::neither: return "neither";
  }
  return "unknown";
}

TranslationReport verify_translation_arc(const FieldTower& tower, const PointSet& points, int t,
                                         const Line& l0) {
  if (t <= 2) throw std::invalid_argument("verify_translation_arc requires t > 2");
  const auto secants = t_secants(tower, points, t);
  if (std::ranges::find(secants, l0) == secants.end()) {
    throw std::invalid_argument("verify_translation_arc: l0 is not a t-secant");
  }

  // Elations with axis f = 0 are I + c f^T with f(c) = 0.
  const Homogeneous f = line_form(tower, l0);
  std::vector<Collineation> group;
  for (FieldElement c0 : tower.base_field()) {
    for (FieldElement c1 : tower.base_field()) {
      for (FieldElement c2 : tower.base_field()) {
        const Homogeneous c{c0, c1, c2};
        FieldElement dot;
        for (int k = 0; k < 3; ++k) dot += tower.mul(f[k], c[k]);
        if (!dot.is_zero()) continue;
        Matrix3 m{};
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            m[i][j] = tower.mul(c[i], f[j]) + FieldElement(i == j ? 1 : 0);
          }
        }
        const Collineation e = make_collineation(tower, m);
        if (stabilizes(tower, e, points).holds) group.push_back(e);
      }
    }
  }

  TranslationReport report;
  report.stabilizer_order = group.size();

  auto on = [&](const Line& l, FieldElement x) { return incident(tower, l, ProjPoint::affine(x)); };
  auto orbit_of = [&](FieldElement x, const std::vector<const Collineation*>& members) {
    std::set<FieldElement> out;
    for (const Collineation* g : members) out.insert(apply(tower, *g, ProjPoint::affine(x)).value);
    return out;
  };

  std::set<FieldElement> off_axis;
  for (FieldElement x : points) {
    if (!on(l0, x)) off_axis.insert(x);
  }
  std::vector<const Collineation*> all;
  for (const auto& g : group) all.push_back(&g);
  report.translation_property = !off_axis.empty() && orbit_of(*off_axis.begin(), all) == off_axis;

  report.elation_property = true;
  for (const Line& l : secants) {
    if (l == l0) continue;
    std::set<FieldElement> on_l;
    for (FieldElement x : points) {
      if (on(l, x)) on_l.insert(x);
    }
    std::vector<const Collineation*> fixing;
    for (const auto& g : group) {
      if (apply(tower, g, l) == l) fixing.push_back(&g);
    }
    if (on_l.empty() || orbit_of(*on_l.begin(), fixing) != on_l) {
      report.elation_property = false;
      break;
    }
  }

  if (report.elation_property && report.translation_property) {
    report.verdict = TranslationVerdict::translation;
  } else if (report.elation_property) {
    report.verdict = TranslationVerdict::elation_only;
  }
  return report;
}

std::uint64_t group_closure(const FieldTower& tower, const std::vector<Collineation>& generators,
                            std::uint64_t cap) {
  std::unordered_set<Collineation, CollineationHash> seen{Collineation{}};
  std::deque<Collineation> queue{Collineation{}};
  while (!queue.empty()) {
    const Collineation g = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Collineation next = compose(tower, s, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw std::length_error("group closure exceeds the cap of " + std::to_string(cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

QuotientOrder example_quotient_order(const ExampleFixture& fixture, ExampleName name,
                                     std::uint64_t cap) {
  const FieldTower& tower = fixture.tower;
  std::vector<Collineation> gens = trace_kernel_generators(tower);
  QuotientOrder out;
  out.kernel_order = group_closure(tower, gens, cap);
  gens.push_back(make_theta(tower).realized);
  gens.push_back(make_example_tau(fixture, name).realized);
  out.group_order = group_closure(tower, gens, cap);
  if (out.group_order % out.kernel_order != 0) {
    throw std::logic_error("kernel order does not divide the group order");
  }
  out.quotient_order = out.group_order / out.kernel_order;
  return out;
}

}  // namespace kmarc
