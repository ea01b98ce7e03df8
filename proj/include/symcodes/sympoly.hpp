#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcodes/field.hpp"

namespace symcodes {

/// Exponent vector of a term, padded with zeros past nvars.
using Exponents = std::array<int, 3>;

/// Sparse multivariate polynomial in up to three variables over a fixed field.
/// Gets used for symmetric polynomials, plane conics and cubics, and the
/// curves obtained by substitution; degrees stay small (<= 6).
class MultiPoly {
 public:
  MultiPoly(const Field& field, int nvars);
  static MultiPoly constant(const Field& field, int nvars, Elt c);
  static MultiPoly monomial(const Field& field, int nvars, const Exponents& ex, Elt c);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const std::map<Exponents, Elt>& terms() const { return terms_; }

  Elt coeff(const Exponents& ex) const;
  void add_term(const Exponents& ex, Elt c);  // accumulates; erases on zero

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(Elt c) const;
  MultiPoly pow(int n) const;

  Elt eval(const std::vector<Elt>& point) const;
  /// Replaces variable i with subs[i]; all subs share a variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;

  /// "c*X1^a*X2^b" terms joined by "+".
  std::string to_string() const;
  /// Accepts X1..X3 and the aliases X/Y/Z, x/y/z; extension-field
  /// coefficients in parentheses.
  static MultiPoly parse(const Field& field, int nvars, const std::string& text);

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  Field field_;
  int nvars_;
  std::map<Exponents, Elt> terms_;
};

/// Point of AG(m,q) as a coordinate tuple.
using PointTuple = std::vector<Elt>;

/// True when all coordinates are pairwise distinct.
bool is_distinguished(const PointTuple& x);
/// Coordinates sorted ascending in element order; the canonical orbit
/// representative under coordinate permutations.
PointTuple canonical_tuple(PointTuple x);

/// The i-th elementary symmetric polynomial in m variables: all i-fold
/// products of distinct variables, C(m,i) terms, coefficients 1.
MultiPoly elementary_symmetric(const Field& field, int m, int i);

/// Substitutes the elementary symmetric polynomials into F, producing the
/// symmetric polynomial F(s_1, ..., s_m). Linear in F.
MultiPoly phi_map(const MultiPoly& F, int m);

/// All points of AG(m,q) with pairwise distinct coordinates, lexicographic;
/// exactly q(q-1)...(q-m+1) of them.
std::vector<PointTuple> distinguished_points(const Field& field, int m);
/// One ascending representative per coordinate-permutation orbit,
/// lexicographic; exactly C(q,m) of them.
std::vector<PointTuple> representatives(const Field& field, int m);

/// x -> (s_1(x), ..., s_m(x)); constant on permutation orbits.
PointTuple quotient_map(const Field& field, const PointTuple& x);

/// Monic polynomial with the tuple as its root multiset:
/// Y^m - s_1 Y^(m-1) + s_2 Y^(m-2) - ...; little-endian coefficients.
std::vector<Elt> monic_from_roots(const Field& field, const PointTuple& roots);

/// Root multiset (ascending) of a monic polynomial of degree 2 or 3 when it
/// splits over GF(q), found by exhaustive evaluation; nullopt otherwise.
std::optional<PointTuple> vieta_roots(const Field& field, const std::vector<Elt>& monic_coeffs);

/// Whether the monic polynomial with the given symmetric-function coordinates
/// has a repeated root: m = 2 tests s1^2 - 4 s2 = 0, m = 3 evaluates the
/// cubic discriminant (needs p > 3).
bool discriminant_membership(const Field& field, int m, const PointTuple& sigma);

/// Discriminant of X^3 - a X^2 + b X - c:
/// a^2 b^2 - 4 b^3 - 4 a^3 c + 18 a b c - 27 c^2.
Elt cubic_discriminant(const Field& field, Elt a, Elt b, Elt c);
/// The same quantity computed independently as the 5x5 Sylvester determinant
/// of the cubic and its derivative (equals minus the discriminant).
Elt cubic_sylvester_resultant(const Field& field, Elt a, Elt b, Elt c);

// Dense univariate polynomials over a Field, little-endian coefficients.
namespace upoly {
using Coeffs = std::vector<Elt>;
void trim(Coeffs& f);
int deg(const Coeffs& f);  // -1 for zero
Elt eval(const Field& F, const Coeffs& f, Elt x);
Coeffs derivative(const Field& F, const Coeffs& f);
/// Quotient of f by (X - r); f(r) must be 0.
Coeffs divide_linear_root(const Field& F, const Coeffs& f, Elt r);
Coeffs remainder(const Field& F, Coeffs a, const Coeffs& b);
/// Monic gcd.
Coeffs gcd(const Field& F, Coeffs a, Coeffs b);
}  // namespace upoly

}  // namespace symcodes
