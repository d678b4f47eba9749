#include "kmarc/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmarc {
namespace {

Matrix3 frobenius_entries(const FieldTower& tower, Matrix3 a, int k) {
  for (auto& row : a) {
    for (auto& x : row) x = tower.frobenius(x, k);
  }
  return a;
}

int normalize_frob(const FieldTower& tower, int e) {
  const int m = tower.m();
  return ((e % m) + m) % m;
}

Matrix3 normalize_scale(const FieldTower& tower, Matrix3 a) {
  for (const auto& row : a) {
    for (FieldElement x : row) {
      if (x.is_zero()) continue;
      const FieldElement s = tower.inv(x);
      for (auto& r : a) {
        for (auto& y : r) y = tower.mul(y, s);
      }
      return a;
    }
  }
  return a;
}

}  // namespace

FieldElement bilinear(const FieldTower& tower, FieldElement x, FieldElement y, Level level) noexcept {
  return tower.mul(x, tower.conj(y, level)) + tower.mul(tower.conj(x, level), y);
}

bool incident(const FieldTower& tower, const Line& line, const ProjPoint& p) {
  if (line.at_infinity) return p.at_infinity;
  if (p.at_infinity) return p.value == line.u;
  return (bilinear(tower, line.u, p.value) + line.mu).is_zero();
}

std::vector<FieldElement> line_points(const FieldTower& tower, const Line& line) {
  if (line.at_infinity) throw std::invalid_argument("the line at infinity has no affine points");
  // <u, i*u> = N(u) * T(i) = 1, so mu*i*u is a particular solution and the
  // line is the coset u*(mu*i + F).
  const FieldElement base = tower.mul(line.mu, tower.i_elem());
  std::vector<FieldElement> out;
  out.reserve(tower.q());
  for (FieldElement lambda : tower.base_field()) {
    out.push_back(tower.mul(line.u, base + lambda));
  }
  std::ranges::sort(out);
  return out;
}

std::vector<Line> all_lines(const FieldTower& tower) {
  std::vector<Line> out;
  out.reserve(tower.q() * tower.q() + tower.q() + 1);
  for (FieldElement u : tower.unit_circle()) {
    for (FieldElement mu : tower.base_field()) out.push_back(Line::affine(u, mu));
  }
  out.push_back(Line::infinity());
  return out;
}

std::vector<ProjPoint> all_points(const FieldTower& tower) {
  std::vector<ProjPoint> out;
  out.reserve(tower.size() + tower.q() + 1);
  for (FieldElement x : tower.elements()) out.push_back(ProjPoint::affine(x));
  for (FieldElement u : tower.unit_circle()) out.push_back(ProjPoint::infinite(u));
  return out;
}

Line line_through(const FieldTower& tower, const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw std::invalid_argument("line_through: points coincide");
  if (p.at_infinity && q.at_infinity) return Line::infinity();
  if (p.at_infinity) return line_through(tower, q, p);
  if (q.at_infinity) return Line::affine(q.value, bilinear(tower, q.value, p.value));
  const FieldElement u = tower.polar(p.value + q.value).u;
  return Line::affine(u, bilinear(tower, u, p.value));
}

Homogeneous to_homogeneous(const FieldTower& tower, const ProjPoint& p) {
  const FieldElement i = tower.i_elem();
  return {bilinear(tower, i, p.value), bilinear(tower, FieldElement(1), p.value),
          FieldElement(p.at_infinity ? 0 : 1)};
}

ProjPoint from_homogeneous(const FieldTower& tower, const Homogeneous& v) {
  for (FieldElement x : v) {
    if (!tower.in_F(x)) throw std::invalid_argument("homogeneous coordinate outside F");
  }
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
    throw std::invalid_argument("(0:0:0) is not a projective point");
  }
  const FieldElement w = v[0] + tower.mul(v[1], tower.i_elem());
  if (!v[2].is_zero()) return ProjPoint::affine(tower.div(w, v[2]));
  return ProjPoint::infinite(tower.polar(w).u);
}

Matrix3 matrix_mul(const FieldTower& tower, const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      FieldElement acc;
      for (int k = 0; k < 3; ++k) acc += tower.mul(a[i][k], b[k][j]);
      c[i][j] = acc;
    }
  }
  return c;
}

FieldElement determinant(const FieldTower& tower, const Matrix3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return tower.mul(a[r0][c0], a[r1][c1]) + tower.mul(a[r0][c1], a[r1][c0]);
  };
  return tower.mul(a[0][0], minor(1, 2, 1, 2)) + tower.mul(a[0][1], minor(1, 2, 0, 2)) +
         tower.mul(a[0][2], minor(1, 2, 0, 1));
}

Matrix3 matrix_inverse(const FieldTower& tower, const Matrix3& a) {
  const FieldElement det = determinant(tower, a);
  if (det.is_zero()) throw std::invalid_argument("matrix is singular");
  const FieldElement s = tower.inv(det);
  Matrix3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor of a[j][i]; signs vanish in characteristic 2.
      const int r0 = j == 0 ? 1 : 0;
      const int r1 = j == 2 ? 1 : 2;
      const int c0 = i == 0 ? 1 : 0;
      const int c1 = i == 2 ? 1 : 2;
      const FieldElement cof =
          tower.mul(a[r0][c0], a[r1][c1]) + tower.mul(a[r0][c1], a[r1][c0]);
      out[i][j] = tower.mul(cof, s);
    }
  }
  return out;
}

Collineation make_collineation(const FieldTower& tower, const Matrix3& matrix, int frob) {
  for (const auto& row : matrix) {
    for (FieldElement x : row) {
      if (!tower.in_F(x)) throw std::invalid_argument("collineation entry outside F");
    }
  }
  if (determinant(tower, matrix).is_zero()) {
    throw std::invalid_argument("collineation matrix is singular");
  }
  return {normalize_scale(tower, matrix), normalize_frob(tower, frob)};
}

Collineation compose(const FieldTower& tower, const Collineation& a, const Collineation& b) {
  const Matrix3 m = matrix_mul(tower, a.matrix, frobenius_entries(tower, b.matrix, a.frob));
  return {normalize_scale(tower, m), normalize_frob(tower, a.frob + b.frob)};
}

Collineation inverse(const FieldTower& tower, const Collineation& c) {
  const Matrix3 m = frobenius_entries(tower, matrix_inverse(tower, c.matrix), -c.frob);
  return {normalize_scale(tower, m), normalize_frob(tower, -c.frob)};
}

Collineation power(const FieldTower& tower, const Collineation& c, std::uint64_t k) {
  Collineation acc;
  Collineation base = c;
  while (k != 0) {
    if (k & 1u) acc = compose(tower, acc, base);
    base = compose(tower, base, base);
    k >>= 1;
  }
  return acc;
}

ProjPoint apply(const FieldTower& tower, const Collineation& c, const ProjPoint& p) {
  Homogeneous v = to_homogeneous(tower, p);
  for (auto& x : v) x = tower.frobenius(x, c.frob);
  Homogeneous w{};
  for (int i = 0; i < 3; ++i) {
    FieldElement acc;
    for (int k = 0; k < 3; ++k) acc += tower.mul(c.matrix[i][k], v[k]);
    w[i] = acc;
  }
  return from_homogeneous(tower, w);
}

Line apply(const FieldTower& tower, const Collineation& c, const Line& line) {
  ProjPoint a;
  ProjPoint b;
  if (line.at_infinity) {
    const auto s = tower.unit_circle();
    a = ProjPoint::infinite(s[0]);
    b = ProjPoint::infinite(s[1]);
  } else {
    a = ProjPoint::infinite(line.u);
    b = ProjPoint::affine(tower.mul(tower.mul(line.mu, tower.i_elem()), line.u));
  }
  return line_through(tower, apply(tower, c, a), apply(tower, c, b));
}

}  // namespace kmarc
