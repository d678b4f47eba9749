#pragma once

// Named collineations stabilizing H_r, orbit computations and the
// elation/translation tests for a t-secant l0.
//
// All matrices act on column vectors (x, y, z) of homogeneous coordinates
// over F, after the coordinate-wise Frobenius (see plane.hpp). The constant b
// is u_gen + u_gen^r from the recurrence of constructions.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmarc/arcs.hpp"
#include "kmarc/constructions.hpp"
#include "kmarc/plane.hpp"

namespace kmarc {

enum class MapKind { theta, sigma_prime, elation, psi, rho, tau };

std::string to_string(MapKind kind);
/// Throws std::invalid_argument for an unknown name.
MapKind map_kind_from_string(const std::string& name);

struct NamedMap {
  MapKind kind;
  std::vector<FieldElement> params;  // (a, b) for elation, (gamma, s, t) for rho, (t) for tau
  Collineation realized;
};

/// [[0,1,0],[1,b,0],[0,0,1]], order r+1.
NamedMap make_theta(const FieldTower& tower);
/// z = x + y*i -> x^2 + y^2 + b*y^2*i. (sigma')^m is linear.
NamedMap make_sigma_prime(const FieldTower& tower);
/// [[1,0,0],[0,1,0],[a,b,1]], i.e. z -> z / (<z, b + a*i> + 1). The matrix is
/// checked against that formula on 50 sampled points. a, b must lie in F.
NamedMap make_elation(const FieldTower& tower, FieldElement a, FieldElement b);
/// [[1,b,0],[0,1,0],[0,0,1]], order 2.
NamedMap make_psi(const FieldTower& tower);
/// [[gamma,0,0],[0,1/gamma,0],[s,t,1]] with Tr(s) = gamma + 1 and
/// Tr(t) = 1/gamma + 1 (Tr = Tr_{F/F'}). Order r-1 for primitive gamma.
NamedMap make_rho(const FieldTower& tower, FieldElement gamma, FieldElement s, FieldElement t);
/// As above with the smallest admissible s and t.
NamedMap make_rho(const FieldTower& tower, FieldElement gamma);
/// [[1,1,0],[0,1,0],[0,t,1]]; t = 0 is the conjugation z -> z^q.
NamedMap make_tau(const FieldTower& tower, FieldElement t);

/// The tau attached to an example: the smallest t with Tr(t) equal to 0 (h2),
/// the matched omega (h4) or eta^5 (h8).
NamedMap make_example_tau(const ExampleFixture& fixture, ExampleName name);

/// The smallest primitive element of F'.
FieldElement primitive_fprime(const FieldTower& tower);

/// Order of c, or std::nullopt when it exceeds `limit`.
std::optional<std::uint64_t> collineation_order(const FieldTower& tower, const Collineation& c,
                                                std::uint64_t limit = 1u << 20);

/// The (q/r)^2 maps E_{a,b} with Tr(a) = Tr(b) = 0.
std::vector<Collineation> trace_kernel_elations(const FieldTower& tower);
/// E_{a,0} and E_{0,b} for a and b running over a GF(2)-basis of ker Tr.
std::vector<Collineation> trace_kernel_generators(const FieldTower& tower);

struct StabilizeResult {
  bool holds = true;
  std::optional<FieldElement> witness;  // a point of H whose image leaves H
  std::optional<ProjPoint> witness_image;
};

StabilizeResult stabilizes(const FieldTower& tower, const Collineation& c, const PointSet& points);

/// Orbits of the generated group on X, each in discovery order, listed by
/// first appearance in X. Throws std::invalid_argument unless every generator
/// maps X into X.
std::vector<std::vector<ProjPoint>> orbits(const FieldTower& tower,
                                           const std::vector<Collineation>& generators,
                                           const std::vector<ProjPoint>& points);
std::vector<std::vector<Line>> orbits(const FieldTower& tower,
                                      const std::vector<Collineation>& generators,
                                      const std::vector<Line>& lines);

/// The coefficients (f0, f1, f2) of the line f0*x + f1*y + f2*z = 0.
Homogeneous line_form(const FieldTower& tower, const Line& line);

/// c fixes `axis` pointwise and fixes no point off it (or is the identity).
bool is_elation_with_axis(const FieldTower& tower, const Collineation& c, const Line& axis);

enum class TranslationVerdict { translation, elation_only, neither };
std::string to_string(TranslationVerdict verdict);

struct TranslationReport {
  TranslationVerdict verdict = TranslationVerdict::neither;
  std::uint64_t stabilizer_order = 0;  // elations with axis l0 fixing H
  bool elation_property = false;       // transitive on H cap l for each t-secant l != l0
  bool translation_property = false;   // transitive on H \ l0
};

/// Enumerates the q^2 elations with axis l0 and keeps those stabilizing H.
/// Throws std::invalid_argument unless H is a KM-arc of type t > 2 with
/// t-nucleus 0 and l0 is one of its t-secants.
TranslationReport verify_translation_arc(const FieldTower& tower, const PointSet& points, int t,
                                         const Line& l0);

/// Order of the group generated by `generators`. Throws std::length_error if
/// it exceeds `cap`.
std::uint64_t group_closure(const FieldTower& tower, const std::vector<Collineation>& generators,
                            std::uint64_t cap = 1'000'000);

struct QuotientOrder {
  std::uint64_t group_order = 0;   // |<E, theta, tau>|
  std::uint64_t kernel_order = 0;  // |E|
  std::uint64_t quotient_order = 0;
};

/// The order of <E, theta, tau> / E for an example arc.
QuotientOrder example_quotient_order(const ExampleFixture& fixture, ExampleName name,
                                     std::uint64_t cap = 1'000'000);

}  // namespace kmarc
