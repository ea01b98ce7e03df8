#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symcodes/sympoly.hpp"

namespace symcodes {

/// Point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  Elt x = 0, y = 0, z = 0;
  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
};

/// Line aX + bY + cZ = 0, normalized like a point.
struct ProjLine {
  Elt a = 0, b = 0, c = 0;
  bool operator==(const ProjLine&) const = default;
  auto operator<=>(const ProjLine&) const = default;
};

ProjPoint normalize_point(const Field& F, Elt x, Elt y, Elt z);
ProjLine normalize_line(const Field& F, Elt a, Elt b, Elt c);
/// Line through two distinct points (cross product).
ProjLine line_through(const Field& F, const ProjPoint& P, const ProjPoint& Q);
/// Intersection of two distinct lines.
ProjPoint line_meet(const Field& F, const ProjLine& l1, const ProjLine& l2);
bool point_on_line(const Field& F, const ProjPoint& P, const ProjLine& l);

/// All q^2+q+1 points, lexicographic on normalized coordinates.
std::vector<ProjPoint> all_proj_points(const Field& F);
std::vector<ProjLine> all_proj_lines(const Field& F);

enum class PointClass { OnConic, External, Internal };
enum class LineClass { Tangent, Secant, ExternalLine };
enum class CountMode { Affine, Projective };

/// The fixed parabola y1^2 - 4 y2 = 0, projectively X^2 - 4YZ = 0.
/// Conic coefficients ordered (X^2, Y^2, Z^2, XY, XZ, YZ).
using ConicCoeffs = std::array<Elt, 6>;
ConicCoeffs parabola_conic(const Field& F);
Elt conic_value(const Field& F, const ConicCoeffs& D, Elt x, Elt y, Elt z);
MultiPoly conic_to_poly(const Field& F, const ConicCoeffs& D);
/// Inverse of conic_to_poly; the polynomial must be homogeneous quadratic.
ConicCoeffs poly_to_conic(const MultiPoly& f);

/// Affine classification by the discriminant eta1^2 - 4 eta2: zero on the
/// parabola, nonzero square external, non-square internal.
PointClass classify_point_parabola(const Field& F, Elt eta1, Elt eta2);
/// Projective classification; the line at infinity is tangent at (0:1:0),
/// so its other points are all external.
PointClass classify_proj_point(const Field& F, const ProjPoint& P);
/// By counting intersections with the parabola: 1 tangent, 2 secant, 0 external.
LineClass classify_line(const Field& F, Elt a, Elt b, Elt c);
/// The q+1 tangent lines (polar lines of the conic points).
std::vector<ProjLine> parabola_tangents(const Field& F);

/// Points external to the parabola: q(q-1)/2 affine pairs, or q(q+1)/2
/// projective points, both in lexicographic order.
std::vector<std::array<Elt, 2>> external_set_affine(const Field& F);
std::vector<ProjPoint> external_set_projective(const Field& F);

/// Number of external points on the curve. Affine mode evaluates a
/// 3-variable curve at z = 1; 2-variable curves are affine already.
long curve_external_count(const MultiPoly& curve, CountMode mode);

/// Determinant of the symmetric matrix of a conic (odd characteristic);
/// nonzero exactly when the conic is absolutely irreducible.
Elt conic_determinant(const Field& F, const ConicCoeffs& D);

/// Upper bound on GF(q)-points of a degree-u plane curve:
/// (u-1)q + floor(u/2) + 1 without rational linear factors covering the
/// curve, uq + 1 when it splits into GF(q)-lines.
long segre_bound(int u, long q, bool splits_into_lines);

/// Number of projective GF(q)-points of a homogeneous curve.
long proj_point_count(const MultiPoly& curve);

/// Exact quotient by the line aX+bY+cZ, or nullopt when not divisible.
std::optional<MultiPoly> divide_by_linear(const MultiPoly& f, Elt a, Elt b, Elt c);
/// Whether a homogeneous curve of degree <= 3 is a product of GF(q)-lines.
bool splits_into_lines(const MultiPoly& curve);

/// One pass over all conics up to scalar, classifying each against the
/// parabola. Guarded at q <= 11.
struct ConicSweep {
  long long total = 0;              // conics up to scalar, parabola included
  long long irreducible = 0;        // det != 0, parabola excluded
  long long census_total = 0;       // irreducible, every off-parabola point external
  std::array<long long, 5> census_by_cap{};  // split by |C.D| = 0..4
  long long noncensus_total = 0;
  long noncensus_max_external = -1;  // largest |E.D| with some internal point on D
  long noncensus_min_external = -1;
  long long window_violations = 0;   // non-census conics outside the sqrt window
  bool segre_ok = true;              // no conic exceeded its point-count bound
};
ConicSweep conic_sweep(const Field& F, int threads = 1);

/// Count of irreducible conics other than the parabola whose off-parabola
/// points are all external; equals (q^3 - q^2 - 3q - 3)/2.
long long census_special_conics(const Field& F, int threads = 1);
/// Largest projective |E.D| over irreducible conics with an internal point.
long noncensus_max_intersection(const Field& F, int threads = 1);

}  // namespace symcodes
