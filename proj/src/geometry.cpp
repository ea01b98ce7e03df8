#include "symcodes/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace symcodes {

ProjPoint normalize_point(const Field& F, Elt x, Elt y, Elt z) {
  if (x == 0 && y == 0 && z == 0)
    throw std::invalid_argument("projective point cannot be all zero");
  Elt lead = x != 0 ? x : (y != 0 ? y : z);
  Elt s = F.inv(lead);
  return {F.mul(x, s), F.mul(y, s), F.mul(z, s)};
}

ProjLine normalize_line(const Field& F, Elt a, Elt b, Elt c) {
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("line cannot be all zero");
  Elt lead = a != 0 ? a : (b != 0 ? b : c);
  Elt s = F.inv(lead);
  return {F.mul(a, s), F.mul(b, s), F.mul(c, s)};
}

ProjLine line_through(const Field& F, const ProjPoint& P, const ProjPoint& Q) {
  Elt a = F.sub(F.mul(P.y, Q.z), F.mul(P.z, Q.y));
  Elt b = F.sub(F.mul(P.z, Q.x), F.mul(P.x, Q.z));
  Elt c = F.sub(F.mul(P.x, Q.y), F.mul(P.y, Q.x));
  return normalize_line(F, a, b, c);
}

ProjPoint line_meet(const Field& F, const ProjLine& l1, const ProjLine& l2) {
  Elt x = F.sub(F.mul(l1.b, l2.c), F.mul(l1.c, l2.b));
  Elt y = F.sub(F.mul(l1.c, l2.a), F.mul(l1.a, l2.c));
  Elt z = F.sub(F.mul(l1.a, l2.b), F.mul(l1.b, l2.a));
  return normalize_point(F, x, y, z);
}

bool point_on_line(const Field& F, const ProjPoint& P, const ProjLine& l) {
  return F.add(F.add(F.mul(l.a, P.x), F.mul(l.b, P.y)), F.mul(l.c, P.z)) == 0;
}

std::vector<ProjPoint> all_proj_points(const Field& F) {
  const long q = F.q();
  std::vector<ProjPoint> pts;
  pts.reserve(q * q + q + 1);
  pts.push_back({0, 0, 1});
  for (long c = 0; c < q; ++c) pts.push_back({0, 1, static_cast<Elt>(c)});
  for (long b = 0; b < q; ++b)
    for (long c = 0; c < q; ++c) pts.push_back({1, static_cast<Elt>(b), static_cast<Elt>(c)});
  return pts;
}

std::vector<ProjLine> all_proj_lines(const Field& F) {
  const long q = F.q();
  std::vector<ProjLine> ls;
  ls.reserve(q * q + q + 1);
  ls.push_back({0, 0, 1});
  for (long c = 0; c < q; ++c) ls.push_back({0, 1, static_cast<Elt>(c)});
  for (long b = 0; b < q; ++b)
    for (long c = 0; c < q; ++c) ls.push_back({1, static_cast<Elt>(b), static_cast<Elt>(c)});
  return ls;
}

ConicCoeffs parabola_conic(const Field& F) { return {1, 0, 0, 0, 0, F.from_int(-4)}; }

Elt conic_value(const Field& F, const ConicCoeffs& D, Elt x, Elt y, Elt z) {
  Elt acc = F.mul(D[0], F.mul(x, x));
  acc = F.add(acc, F.mul(D[1], F.mul(y, y)));
  acc = F.add(acc, F.mul(D[2], F.mul(z, z)));
  acc = F.add(acc, F.mul(D[3], F.mul(x, y)));
  acc = F.add(acc, F.mul(D[4], F.mul(x, z)));
  acc = F.add(acc, F.mul(D[5], F.mul(y, z)));
  return acc;
}

MultiPoly conic_to_poly(const Field& F, const ConicCoeffs& D) {
  MultiPoly f(F, 3);
  f.add_term({2, 0, 0}, D[0]);
  f.add_term({0, 2, 0}, D[1]);
  f.add_term({0, 0, 2}, D[2]);
  f.add_term({1, 1, 0}, D[3]);
  f.add_term({1, 0, 1}, D[4]);
  f.add_term({0, 1, 1}, D[5]);
  return f;
}

ConicCoeffs poly_to_conic(const MultiPoly& f) {
  if (f.nvars() != 3 || f.degree() > 2 || !f.is_homogeneous())
    throw std::invalid_argument("not a homogeneous quadratic in three variables");
  return {f.coeff({2, 0, 0}), f.coeff({0, 2, 0}), f.coeff({0, 0, 2}),
          f.coeff({1, 1, 0}), f.coeff({1, 0, 1}), f.coeff({0, 1, 1})};
}

PointClass classify_point_parabola(const Field& F, Elt eta1, Elt eta2) {
  Elt delta = F.sub(F.mul(eta1, eta1), F.mul(F.from_int(4), eta2));
  if (delta == 0) return PointClass::OnConic;
  return F.is_square(delta) ? PointClass::External : PointClass::Internal;
}

PointClass classify_proj_point(const Field& F, const ProjPoint& P) {
  if (P.z != 0) {
    Elt zi = F.inv(P.z);
    return classify_point_parabola(F, F.mul(P.x, zi), F.mul(P.y, zi));
  }
  // The line at infinity is tangent at (0:1:0).
  return (P.x == 0) ? PointClass::OnConic : PointClass::External;
}

LineClass classify_line(const Field& F, Elt a, Elt b, Elt c) {
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("line cannot be all zero");
  // Two independent solutions of ax + by + cz = 0.
  std::array<Elt, 3> v1, v2;
  if (a != 0) {
    v1 = {F.neg(b), a, 0};
    v2 = {F.neg(c), 0, a};
  } else if (b != 0) {
    v1 = {1, 0, 0};
    v2 = {0, F.neg(c), b};
  } else {
    v1 = {1, 0, 0};
    v2 = {0, 1, 0};
  }
  const ConicCoeffs C = parabola_conic(F);
  int hits = 0;
  if (conic_value(F, C, v1[0], v1[1], v1[2]) == 0) ++hits;
  for (Elt t : F.elements()) {
    Elt x = F.add(v2[0], F.mul(t, v1[0]));
    Elt y = F.add(v2[1], F.mul(t, v1[1]));
    Elt z = F.add(v2[2], F.mul(t, v1[2]));
    if (conic_value(F, C, x, y, z) == 0) ++hits;
  }
  if (hits == 1) return LineClass::Tangent;
  if (hits == 2) return LineClass::Secant;
  return LineClass::ExternalLine;
}

std::vector<ProjLine> parabola_tangents(const Field& F) {
  // Polar line of a conic point T under X^2 - 4YZ is (2x_T, -4z_T, -4y_T);
  // scale by the inverse of 2.
  std::vector<ProjLine> out;
  for (const auto& P : all_proj_points(F)) {
    if (conic_value(F, parabola_conic(F), P.x, P.y, P.z) != 0) continue;
    Elt a = P.x;
    Elt b = F.mul(F.from_int(-2), P.z);
    Elt c = F.mul(F.from_int(-2), P.y);
    out.push_back(normalize_line(F, a, b, c));
  }
  return out;
}

std::vector<std::array<Elt, 2>> external_set_affine(const Field& F) {
  std::vector<std::array<Elt, 2>> out;
  out.reserve(F.q() * (F.q() - 1) / 2);
  for (Elt e1 : F.elements())
    for (Elt e2 : F.elements())
      if (classify_point_parabola(F, e1, e2) == PointClass::External) out.push_back({e1, e2});
  return out;
}

std::vector<ProjPoint> external_set_projective(const Field& F) {
  std::vector<ProjPoint> out;
  out.reserve(F.q() * (F.q() + 1) / 2);
  for (const auto& P : all_proj_points(F))
    if (classify_proj_point(F, P) == PointClass::External) out.push_back(P);
  return out;
}

long curve_external_count(const MultiPoly& curve, CountMode mode) {
  const Field& F = curve.field();
  long count = 0;
  if (mode == CountMode::Affine) {
    for (const auto& [e1, e2] : external_set_affine(F)) {
      Elt v = curve.nvars() == 3 ? curve.eval({e1, e2, 1}) : curve.eval({e1, e2});
      if (v == 0) ++count;
    }
    return count;
  }
  if (curve.nvars() != 3 || !curve.is_homogeneous())
    throw std::invalid_argument("projective counting needs a homogeneous curve");
  for (const auto& P : external_set_projective(F))
    if (curve.eval({P.x, P.y, P.z}) == 0) ++count;
  return count;
}

Elt conic_determinant(const Field& F, const ConicCoeffs& D) {
  if (D == ConicCoeffs{0, 0, 0, 0, 0, 0}) throw std::invalid_argument("zero conic");
  Elt h = F.inv(F.from_int(2));
  Elt a = D[0], b = D[1], c = D[2];
  Elt d = F.mul(D[3], h), e = F.mul(D[4], h), f = F.mul(D[5], h);
  // det [[a,d,e],[d,b,f],[e,f,c]]
  Elt t1 = F.mul(a, F.sub(F.mul(b, c), F.mul(f, f)));
  Elt t2 = F.mul(d, F.sub(F.mul(d, c), F.mul(f, e)));
  Elt t3 = F.mul(e, F.sub(F.mul(d, f), F.mul(b, e)));
  return F.add(F.sub(t1, t2), t3);
}

long segre_bound(int u, long q, bool splits) {
  if (u < 1) throw std::invalid_argument("degree must be >= 1");
  if (splits) return u * q + 1;
  return (u - 1) * q + u / 2 + 1;
}

long proj_point_count(const MultiPoly& curve) {
  if (curve.nvars() != 3 || !curve.is_homogeneous() || curve.is_zero())
    throw std::invalid_argument("point counting needs a nonzero homogeneous curve");
  const Field& F = curve.field();
  long n = 0;
  for (const auto& P : all_proj_points(F))
    if (curve.eval({P.x, P.y, P.z}) == 0) ++n;
  return n;
}

std::optional<MultiPoly> divide_by_linear(const MultiPoly& f, Elt a, Elt b, Elt c) {
  const Field& F = f.field();
  if (f.nvars() != 3) throw std::invalid_argument("linear division expects three variables");
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("line cannot be all zero");
  std::array<Elt, 3> l{a, b, c};
  int v = a != 0 ? 0 : (b != 0 ? 1 : 2);

  // Write f = sum_j C_j(rest) * x_v^j and divide synthetically by
  // l = l[v]*x_v + L(rest).
  int dmax = 0;
  std::map<int, MultiPoly> layers;
  for (const auto& [ex, coef] : f.terms()) {
    int j = ex[v];
    Exponents rest = ex;
    rest[v] = 0;
    auto [it, fresh] = layers.try_emplace(j, MultiPoly(F, 3));
    it->second.add_term(rest, coef);
    dmax = std::max(dmax, j);
  }
  auto layer = [&](int j) {
    auto it = layers.find(j);
    return it == layers.end() ? MultiPoly(F, 3) : it->second;
  };
  MultiPoly L(F, 3);
  for (int i = 0; i < 3; ++i) {
    if (i == v || l[i] == 0) continue;
    Exponents ex{0, 0, 0};
    ex[i] = 1;
    L.add_term(ex, l[i]);
  }
  Elt inv_lead = F.inv(l[v]);

  std::map<int, MultiPoly> quot;
  MultiPoly carry = layer(dmax);
  for (int j = dmax; j >= 1; --j) {
    MultiPoly qj = carry.scaled(inv_lead);
    quot.emplace(j - 1, qj);
    carry = layer(j - 1) - L * qj;
  }
  if (!carry.is_zero()) return std::nullopt;

  MultiPoly out(F, 3);
  for (const auto& [j, poly] : quot) {
    for (const auto& [ex, coef] : poly.terms()) {
      Exponents shifted = ex;
      shifted[v] += j;
      out.add_term(shifted, coef);
    }
  }
  return out;
}

bool splits_into_lines(const MultiPoly& curve) {
  if (curve.is_zero()) throw std::invalid_argument("zero curve");
  if (!curve.is_homogeneous() || curve.nvars() != 3)
    throw std::invalid_argument("split test needs a homogeneous curve");
  int u = curve.degree();
  if (u == 0) throw std::invalid_argument("constant curve");
  if (u == 1) return true;
  if (u > 3) throw std::invalid_argument("split test implemented for degree <= 3");
  for (const auto& l : all_proj_lines(curve.field())) {
    auto quotient = divide_by_linear(curve, l.a, l.b, l.c);
    if (quotient) return splits_into_lines(*quotient);
  }
  return false;
}

namespace {

struct SweepAccum {
  long long irreducible = 0;
  long long census_total = 0;
  std::array<long long, 5> census_by_cap{};
  long long noncensus_total = 0;
  long noncensus_max = -1;
  long noncensus_min = -1;
  long long window_violations = 0;
  bool segre_ok = true;
};

}  // namespace

ConicSweep conic_sweep(const Field& F, int threads) {
  const long q = F.q();
  if (q > 11) throw too_large_error("conic sweep enumerates ~q^5 conics; limited to q <= 11");

  const auto points = all_proj_points(F);
  const long npts = static_cast<long>(points.size());
  std::vector<std::array<Elt, 6>> monomials(npts);
  std::vector<PointClass> cls(npts);
  for (long i = 0; i < npts; ++i) {
    const auto& P = points[i];
    monomials[i] = {F.mul(P.x, P.x), F.mul(P.y, P.y), F.mul(P.z, P.z),
                    F.mul(P.x, P.y), F.mul(P.x, P.z), F.mul(P.y, P.z)};
    cls[i] = classify_proj_point(F, P);
  }
  const ConicCoeffs parabola = parabola_conic(F);

  // Conic index -> canonical coefficients (first nonzero is 1).
  long long total = 0;
  std::array<long long, 6> block_start{};
  long long acc = 0;
  for (int lead = 0; lead < 6; ++lead) {
    block_start[lead] = acc;
    long long size = 1;
    for (int i = lead + 1; i < 6; ++i) size *= q;
    acc += size;
  }
  total = acc;

  auto decode_conic = [&](long long index) {
    int lead = 5;
    while (lead > 0 && index < block_start[lead]) --lead;
    long long off = index - block_start[lead];
    ConicCoeffs D{};
    D[lead] = 1;
    for (int i = 5; i > lead; --i) {
      D[i] = static_cast<Elt>(off % q);
      off /= q;
    }
    return D;
  };

  const double window = (q - 1) / 2.0;
  const double slack = std::sqrt(static_cast<double>(q)) + 3.0;
  const long win_lo = static_cast<long>(std::ceil(window - slack));
  const long win_hi = static_cast<long>(std::floor(window + slack));

  std::vector<SweepAccum> parts(std::max(threads, 1));
  parallel_chunks(static_cast<std::size_t>(total), threads, [&](int chunk, std::size_t begin,
                                                                std::size_t end) {
    SweepAccum& A = parts[chunk];
    const Elt* mul = F.mul_table();
    const Elt* add = F.add_table();
    for (std::size_t idx = begin; idx < end; ++idx) {
      ConicCoeffs D = decode_conic(static_cast<long long>(idx));
      if (D == parabola) continue;
      Elt det = conic_determinant(F, D);

      long zeros = 0, cap = 0, internal_hits = 0, external_hits = 0;
      for (long i = 0; i < npts; ++i) {
        const auto& m = monomials[i];
        Elt acc_v = 0;
        for (int t = 0; t < 6; ++t)
          if (D[t] != 0) acc_v = add[acc_v * q + mul[D[t] * q + m[t]]];
        if (acc_v != 0) continue;
        ++zeros;
        switch (cls[i]) {
          case PointClass::OnConic: ++cap; break;
          case PointClass::External: ++external_hits; break;
          case PointClass::Internal: ++internal_hits; break;
        }
      }

      // Point-count bound check (degree 2): a conic with more than one
      // rational zero and zero determinant splits into rational lines.
      bool split = det == 0 && zeros > 1;
      if (zeros > segre_bound(2, q, split)) A.segre_ok = false;

      if (det == 0) continue;
      ++A.irreducible;
      if (internal_hits == 0) {
        ++A.census_total;
        ++A.census_by_cap[std::min<long>(cap, 4)];
      } else {
        ++A.noncensus_total;
        if (A.noncensus_max < external_hits) A.noncensus_max = external_hits;
        if (A.noncensus_min < 0 || A.noncensus_min > external_hits) A.noncensus_min = external_hits;
        if (external_hits < win_lo || external_hits > win_hi) ++A.window_violations;
      }
    }
  });

  ConicSweep out;
  out.total = total;
  for (const auto& A : parts) {
    out.irreducible += A.irreducible;
    out.census_total += A.census_total;
    for (int i = 0; i < 5; ++i) out.census_by_cap[i] += A.census_by_cap[i];
    out.noncensus_total += A.noncensus_total;
    if (A.noncensus_max > out.noncensus_max_external) out.noncensus_max_external = A.noncensus_max;
    if (A.noncensus_min >= 0 &&
        (out.noncensus_min_external < 0 || A.noncensus_min < out.noncensus_min_external))
      out.noncensus_min_external = A.noncensus_min;
    out.window_violations += A.window_violations;
    out.segre_ok = out.segre_ok && A.segre_ok;
  }
  return out;
}

long long census_special_conics(const Field& F, int threads) {
  return conic_sweep(F, threads).census_total;
}

long noncensus_max_intersection(const Field& F, int threads) {
  return conic_sweep(F, threads).noncensus_max_external;
}

}  // namespace symcodes
