#pragma once

// Two families of KM-arcs with t-nucleus 0:
//
//  * the lift {lambda*u : 1/lambda in V_c, u in H'} of an (r+s, s)-arc H' of
//    the subplane K' (requires m/h odd), of type s*q/r;
//  * H_r = {lambda*u : 1/lambda in V_c, u in U}, with U the r+1 points
//    b_i + b_{i+1}*i of a second-order linear recurrence over F', of type q/r.
//
// Here V_1 = {x in F : Tr_{F/F'}(x) = 1} and V_c = c*V_1.

#include <cstdint>
#include <optional>
#include <vector>

#include "kmarc/arcs.hpp"
#include "kmarc/gf2tower.hpp"

namespace kmarc {

struct TraceSlice {
  FieldElement c;
  std::vector<FieldElement> v1;        // Tr_{F/F'} = 1, canonical order
  std::vector<FieldElement> elements;  // c * V_1, canonical order
};

/// Throws std::invalid_argument unless c is a nonzero element of F.
TraceSlice trace_slice(const FieldTower& tower, FieldElement c = FieldElement(1));

/// All k = sum_{j<h} 2^j a_j with a_j in {q/r^j : 1 <= j <= m/h} u {0},
/// sorted, 0 included.
std::vector<std::uint64_t> trace_digit_exponents(const FieldTower& tower);

/// The k in [1, q-2] with pi_k(V_1) != 0, by direct evaluation. Every such k
/// satisfies q-1-k in trace_digit_exponents() and pi_k(V_1) = 1; a violation
/// throws std::logic_error.
std::vector<std::uint64_t> v1_power_sum_support(const FieldTower& tower);

/// S', an oval of the subplane PG(2,r) whose nucleus is 0.
PointSet subplane_oval(const FieldTower& tower);

/// (S' u {0}) + c0 for the smallest c0 in K' keeping 0 outside: a hyperoval
/// of PG(2,r) not containing 0. Throws std::invalid_argument for r = 2.
PointSet subplane_hyperoval(const FieldTower& tower);

/// Lifts an (r+s, s)-arc of K' with s-nucleus 0 to a KM-arc of type s*q/r in
/// K. Throws std::invalid_argument when m/h is even, when the parameters give
/// t = q, when 0 lies in the input, or when the input fails its subplane
/// census.
PointSet lift_construction(const FieldTower& tower, const PointSet& sub_arc, int s,
                           FieldElement c = FieldElement(1));

struct RecurrenceSet {
  FieldElement u_gen;               // smallest generator of S'
  FieldElement b;                   // u_gen + u_gen^r, in F'
  std::vector<FieldElement> b_seq;  // b_0 .. b_{r+1}
  std::vector<FieldElement> points; // u_i = b_i + b_{i+1}*i, 0 <= i <= r
};

/// Builds the recurrence and checks the period r+1, |U| = r+1 and the conic
/// equation x^2 + y^2 + bxy = 1 (std::logic_error on failure).
RecurrenceSet recurrence_set(const FieldTower& tower);

/// H_r, q + q/r points.
PointSet build_hr(const FieldTower& tower, FieldElement c = FieldElement(1));

enum class ExampleName { h2, h4, h8 };

/// Which root of the listed parameter's minimal polynomial (x^2+x+1 for h4,
/// x^3+x+1 for h8) reproduces the computed U; `frobenius_power` j gives
/// parameter = (smallest root)^(2^j).
struct GaloisMatch {
  FieldElement parameter;
  int frobenius_power = 0;
};

struct ExampleFixture {
  FieldTower tower;
  RecurrenceSet recurrence;
  PointSet arc;
  GaloisMatch match;
};

/// The listed U of each example, written with the given parameter (omega for
/// h4, eta for h8, ignored for h2).
std::vector<FieldElement> example_u_set(const FieldTower& tower, ExampleName name,
                                        FieldElement parameter);

/// h2/h4/h8 use r = 2/4/8. Throws std::invalid_argument when m is not a
/// multiple of h, std::logic_error when no Galois conjugate of the listed U
/// matches.
ExampleFixture example_fixture(ExampleName name, int m,
                               std::optional<std::uint32_t> modulus = std::nullopt);

}  // namespace kmarc
