#pragma once

// The polar presentation of PG(2,q): affine points are elements of K, points
// at infinity are directions u in S, and affine lines are
// L(u, mu) = {x : <u,x> + mu = 0} with u in S and mu in F.
//
// Collineations act through homogeneous coordinates over F. An affine point
// z = x + y*i is the triple (x : y : 1) with x = <i,z> and y = <1,z>; a point
// at infinity u is (<i,u> : <1,u> : 0).

#include <array>
#include <compare>
#include <vector>

#include "kmarc/gf2tower.hpp"

namespace kmarc {

struct ProjPoint {
  bool at_infinity = false;
  FieldElement value;  // x for the affine point (x:1), u in S for (u:0)

  static constexpr ProjPoint affine(FieldElement x) noexcept { return {false, x}; }
  static constexpr ProjPoint infinite(FieldElement u) noexcept { return {true, u}; }

  constexpr auto operator<=>(const ProjPoint&) const noexcept = default;
};

struct Line {
  bool at_infinity = false;
  FieldElement u;   // in S
  FieldElement mu;  // in F

  static constexpr Line affine(FieldElement u, FieldElement mu) noexcept { return {false, u, mu}; }
  static constexpr Line infinity() noexcept { return {true, {}, {}}; }

  constexpr auto operator<=>(const Line&) const noexcept = default;
};

using Homogeneous = std::array<FieldElement, 3>;
using Matrix3 = std::array<std::array<FieldElement, 3>, 3>;

constexpr Matrix3 identity_matrix() noexcept {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = FieldElement(1);
  return m;
}

/// A semilinear map v -> M * phi^frob(v) of PG(2,q), phi(x) = x^2 applied
/// coordinate-wise. Values produced by make_collineation/compose/inverse are
/// normalized (first nonzero matrix entry is 1, 0 <= frob < m), so == is
/// equality of the induced maps.
struct Collineation {
  Matrix3 matrix = identity_matrix();
  int frob = 0;

  friend bool operator==(const Collineation&, const Collineation&) = default;
};

FieldElement bilinear(const FieldTower& tower, FieldElement x, FieldElement y,
                      Level level = Level::full) noexcept;

bool incident(const FieldTower& tower, const Line& line, const ProjPoint& p);

/// Affine points of a line in canonical order (q of them). Throws for the
/// line at infinity.
std::vector<FieldElement> line_points(const FieldTower& tower, const Line& line);

/// The q^2 + q affine lines (u in S order, then mu in F order) followed by
/// the line at infinity.
std::vector<Line> all_lines(const FieldTower& tower);

/// All q^2 + q + 1 points: affine points of K, then the directions of S.
std::vector<ProjPoint> all_points(const FieldTower& tower);

/// The unique line through two distinct points; throws if p == q.
Line line_through(const FieldTower& tower, const ProjPoint& p, const ProjPoint& q);

Homogeneous to_homogeneous(const FieldTower& tower, const ProjPoint& p);
/// Throws std::invalid_argument for (0:0:0) or coordinates outside F.
ProjPoint from_homogeneous(const FieldTower& tower, const Homogeneous& v);

Matrix3 matrix_mul(const FieldTower& tower, const Matrix3& a, const Matrix3& b);
FieldElement determinant(const FieldTower& tower, const Matrix3& a);
/// Throws std::invalid_argument for singular input.
Matrix3 matrix_inverse(const FieldTower& tower, const Matrix3& a);

/// Validates (entries in F, invertible) and normalizes.
Collineation make_collineation(const FieldTower& tower, const Matrix3& matrix, int frob = 0);
/// a after b.
Collineation compose(const FieldTower& tower, const Collineation& a, const Collineation& b);
Collineation inverse(const FieldTower& tower, const Collineation& c);
Collineation power(const FieldTower& tower, const Collineation& c, std::uint64_t k);

ProjPoint apply(const FieldTower& tower, const Collineation& c, const ProjPoint& p);
Line apply(const FieldTower& tower, const Collineation& c, const Line& line);

}  // namespace kmarc
