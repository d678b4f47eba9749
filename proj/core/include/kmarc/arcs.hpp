#pragma once

// Star-sets and KM-arcs with their t-nucleus at 0, verified three ways:
// a direct line census, vanishing sums of powers of the bilinear form, and
// vanishing monomial power sums over the exponent sets D and E.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kmarc/gf2tower.hpp"
#include "kmarc/plane.hpp"

namespace kmarc {

/// A duplicate-free set of affine points of K in canonical order.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts the input; throws std::invalid_argument on duplicates.
  explicit PointSet(std::vector<FieldElement> points);

  std::span<const FieldElement> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(FieldElement x) const noexcept;
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<FieldElement> points_;
};

// ---------------------------------------------------------------------------
// Binary domination and exponent sets

/// i is dominated by k in binary: every set bit of i is set in k. Equivalently
/// (Lucas) "binom(k, i) is odd".
constexpr bool preceq(std::uint64_t i, std::uint64_t k) noexcept { return (i & ~k) == 0; }

enum class ExponentKind { D, Dprime, E };

struct ExponentSet {
  ExponentKind kind;
  int m;
  std::vector<std::uint64_t> values;  // sorted, deduplicated
};

/// Throws std::invalid_argument for m outside [1, 8].
ExponentSet gen_exponents(ExponentKind kind, int m);

/// sum of y^d over the points; 0^d = 0 for d >= 1.
FieldElement power_sum(const FieldTower& tower, std::span<const FieldElement> points,
                       std::uint64_t d) noexcept;

// ---------------------------------------------------------------------------
// Star-sets and the direct census

struct StarSetInfo {
  bool is_star = false;
  std::optional<int> t;
};

/// Groups the points by polar direction. A star-set has |H| - q = t points
/// on each of q/t + 1 lines through 0 and does not contain 0.
StarSetInfo classify_star_set(const FieldTower& tower, const PointSet& points,
                              Level level = Level::full);

struct LineCount {
  Line line;
  int count = 0;
};

/// |L cap H| for every line of the plane of the given level, in all_lines
/// order (for level sub: u in S', mu in F'). `jobs` > 1 splits the work over
/// threads; the result does not depend on it.
std::vector<LineCount> census(const FieldTower& tower, const PointSet& points,
                              Level level = Level::full, int jobs = 1);

struct ArcReport {
  bool is_star_set = false;
  std::optional<int> t;                       // set when km_arc
  std::map<int, std::uint64_t> histogram;     // intersection size -> number of lines
  bool km_arc = false;
  std::optional<Line> witness;                // first line with an illegal count
  int witness_count = 0;
};

/// Full census over all lines (the line at infinity included). The verdict
/// is km_arc iff every intersection size lies in {0, 2, t}. Throws
/// std::invalid_argument if |H| != q + t or t is outside [1, q).
ArcReport verify_direct(const FieldTower& tower, const PointSet& points, int t,
                        Level level = Level::full, int jobs = 1);

// ---------------------------------------------------------------------------
// Algebraic criteria

struct BracketCheck {
  bool holds = true;
  std::optional<FieldElement> witness_v;
  std::uint64_t witness_k = 0;
};

/// sum_{y in H} <v,y>^k = 0 for every v in S and 1 <= k <= q-2 (and k = q-1
/// when `include_q_minus_1`). Throws std::invalid_argument unless H is a
/// star-set with 2 <= t < q.
BracketCheck verify_bracket(const FieldTower& tower, const PointSet& points,
                            bool include_q_minus_1 = false, int jobs = 1);

struct PowerSumCheck {
  bool holds = true;
  std::optional<std::uint64_t> witness_exponent;
};

/// pi_d(H) = 0 for every d of the generated exponent set. Same precondition
/// as verify_bracket.
PowerSumCheck verify_power_sums(const FieldTower& tower, const PointSet& points,
                                ExponentKind kind);

enum class ExpansionForm { low, high };

/// Evaluates the binomial expansion of <a,b>^k as a sum of
/// <a^{iq+k-i}, b^{iq+k-i}> over odd binom(k,i), with i in
/// [0, floor((k-1)/2)] (low) or [ceil((k+1)/2), k] (high). Both forms equal
/// <a,b>^k. Throws std::invalid_argument unless 1 <= k <= q-1.
FieldElement bracket_power_expand(const FieldTower& tower, FieldElement a, FieldElement b,
                                  std::uint64_t k, ExpansionForm form);

/// Power sums of orders 1..|T|-2 all vanish. Throws std::invalid_argument on
/// duplicates or unless 1 < |T| < size of the smallest of F, K holding T.
bool is_vandermonde(const FieldTower& tower, std::span<const FieldElement> set);

/// The q/t + 1 lines L(u, 0) meeting H in t points. Throws
/// std::invalid_argument unless H is a verified KM-arc of type t >= 2 with
/// t-nucleus 0.
std::vector<Line> t_secants(const FieldTower& tower, const PointSet& points, int t);

/// Every t-secant's inverse point set {1/y} is a Vandermonde set.
bool secant_inverse_check(const FieldTower& tower, const PointSet& points, int t);

/// A uniformly chosen star-set of type t: q/t + 1 directions of S with t
/// points each. Throws unless t divides q and 1 <= t < q.
PointSet random_star_set(const FieldTower& tower, int t, std::mt19937_64& rng);

/// The image of every point under c; throws std::invalid_argument if some
/// image is at infinity.
PointSet apply(const FieldTower& tower, const Collineation& c, const PointSet& points);

}  // namespace kmarc
