#include "symcodes/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace symcodes {

MultiPoly::MultiPoly(const Field& field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("nvars must be 1..3");
}

MultiPoly MultiPoly::constant(const Field& field, int nvars, Elt c) {
  MultiPoly f(field, nvars);
  f.add_term({0, 0, 0}, c);
  return f;
}

MultiPoly MultiPoly::monomial(const Field& field, int nvars, const Exponents& ex, Elt c) {
  MultiPoly f(field, nvars);
  for (int i = nvars; i < 3; ++i)
    if (ex[i] != 0) throw std::invalid_argument("exponent set beyond nvars");
  f.add_term(ex, c);
  return f;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [ex, c] : terms_) d = std::max(d, ex[0] + ex[1] + ex[2]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -2;
  for (const auto& [ex, c] : terms_) {
    int t = ex[0] + ex[1] + ex[2];
    if (d == -2) d = t;
    else if (t != d) return false;
  }
  return true;
}

Elt MultiPoly::coeff(const Exponents& ex) const {
  auto it = terms_.find(ex);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponents& ex, Elt c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(ex, c);
  if (!fresh) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  MultiPoly r = *this;
  for (const auto& [ex, c] : o.terms_) r.add_term(ex, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  MultiPoly r = *this;
  for (const auto& [ex, c] : o.terms_) r.add_term(ex, field_.neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  MultiPoly r(field_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, field_.mul(ca, cb));
  return r;
}

MultiPoly MultiPoly::scaled(Elt c) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [ex, v] : terms_) r.add_term(ex, field_.mul(v, c));
  return r;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly r = constant(field_, nvars_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

Elt MultiPoly::eval(const std::vector<Elt>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("arity mismatch");
  Elt acc = 0;
  for (const auto& [ex, c] : terms_) {
    Elt v = c;
    for (int i = 0; i < nvars_; ++i)
      if (ex[i] != 0) v = field_.mul(v, field_.pow(point[i], ex[i]));
    acc = field_.add(acc, v);
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("arity mismatch");
  int out_vars = subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != out_vars) throw std::invalid_argument("substitutions disagree on arity");
  MultiPoly r(field_, out_vars);
  for (const auto& [ex, c] : terms_) {
    MultiPoly term = MultiPoly::constant(field_, out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (ex[i] != 0) term = term * subs[i].pow(ex[i]);
    r = r + term;
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    if (!first) os << "+";
    first = false;
    std::string cs = field_.to_string(c);
    bool has_vars = ex[0] + ex[1] + ex[2] > 0;
    bool wrapped = cs.find('+') != std::string::npos;
    if (!has_vars || c != 1) {
      os << (wrapped ? "(" + cs + ")" : cs);
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (ex[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << "X" << (i + 1);
      if (ex[i] > 1) os << "^" << ex[i];
    }
  }
  return os.str();
}

namespace {

int var_index(const std::string& name, int nvars) {
  static const std::map<std::string, int> alias = {
      {"X1", 0}, {"X2", 1}, {"X3", 2}, {"x1", 0}, {"x2", 1}, {"x3", 2},
      {"X", 0},  {"Y", 1},  {"Z", 2},  {"x", 0},  {"y", 1},  {"z", 2}};
  auto it = alias.find(name);
  if (it == alias.end() || it->second >= nvars)
    throw std::invalid_argument("unknown variable: " + name);
  return it->second;
}

}  // namespace

MultiPoly MultiPoly::parse(const Field& field, int nvars, const std::string& text) {
  MultiPoly r(field, nvars);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") return r;

  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negate = false;
    if (s[pos] == '+') ++pos;
    else if (s[pos] == '-') {
      negate = true;
      ++pos;
    }
    // Find the end of the term: next top-level '+'/'-'.
    std::size_t next = pos;
    int depth = 0;
    while (next < s.size()) {
      char ch = s[next];
      if (ch == '(') ++depth;
      else if (ch == ')') --depth;
      else if ((ch == '+' || ch == '-') && depth == 0) break;
      ++next;
    }
    std::string term = s.substr(pos, next - pos);
    pos = next;
    if (term.empty()) throw std::invalid_argument("malformed polynomial: " + text);

    Elt coeff = 1;
    Exponents ex{0, 0, 0};
    std::size_t tp = 0;
    while (tp < term.size()) {
      std::size_t fend = tp;
      int d2 = 0;
      while (fend < term.size()) {
        char ch = term[fend];
        if (ch == '(') ++d2;
        else if (ch == ')') --d2;
        else if (ch == '*' && d2 == 0) break;
        ++fend;
      }
      std::string factor = term.substr(tp, fend - tp);
      tp = fend < term.size() ? fend + 1 : fend;
      if (factor.empty()) throw std::invalid_argument("malformed polynomial: " + text);
      if (factor.front() == '(') {
        if (factor.back() != ')') throw std::invalid_argument("unbalanced parentheses: " + text);
        coeff = field.mul(coeff, field.parse(factor.substr(1, factor.size() - 2)));
      } else if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
        coeff = field.mul(coeff, field.parse(factor));
      } else {
        int deg = 1;
        std::string name = factor;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
          name = factor.substr(0, caret);
          deg = std::stoi(factor.substr(caret + 1));
        }
        ex[var_index(name, nvars)] += deg;
      }
    }
    if (negate) coeff = field.neg(coeff);
    r.add_term(ex, coeff);
  }
  return r;
}

bool is_distinguished(const PointTuple& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return false;
  return true;
}

PointTuple canonical_tuple(PointTuple x) {
  std::sort(x.begin(), x.end());
  return x;
}

MultiPoly elementary_symmetric(const Field& field, int m, int i) {
  if (m < 1 || m > 3) throw std::invalid_argument("m must be 1..3");
  if (i < 1 || i > m) throw std::invalid_argument("symmetric polynomial index out of range");
  MultiPoly f(field, m);
  // Subsets of {0..m-1} of size i.
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != i) continue;
    Exponents ex{0, 0, 0};
    for (int b = 0; b < m; ++b)
      if (mask & (1 << b)) ex[b] = 1;
    f.add_term(ex, 1);
  }
  return f;
}

MultiPoly phi_map(const MultiPoly& F, int m) {
  if (F.nvars() != m) throw std::invalid_argument("arity mismatch");
  std::vector<MultiPoly> sigmas;
  sigmas.reserve(m);
  for (int i = 1; i <= m; ++i) sigmas.push_back(elementary_symmetric(F.field(), m, i));
  return F.substitute(sigmas);
}

std::vector<PointTuple> distinguished_points(const Field& field, int m) {
  if (m > field.q()) throw std::invalid_argument("m exceeds the field size");
  std::vector<PointTuple> out;
  PointTuple x(m, 0);
  while (true) {
    if (is_distinguished(x)) out.push_back(x);
    int i = m - 1;
    while (i >= 0) {
      if (static_cast<long>(x[i]) + 1 < field.q()) {
        ++x[i];
        break;
      }
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<PointTuple> representatives(const Field& field, int m) {
  if (m > field.q()) throw std::invalid_argument("m exceeds the field size");
  std::vector<PointTuple> out;
  PointTuple x(m);
  // Strictly ascending tuples in lexicographic order.
  std::function<void(int, long)> rec = [&](int depth, long start) {
    if (depth == m) {
      out.push_back(x);
      return;
    }
    for (long v = start; v < field.q(); ++v) {
      x[depth] = static_cast<Elt>(v);
      rec(depth + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

PointTuple quotient_map(const Field& field, const PointTuple& x) {
  int m = static_cast<int>(x.size());
  PointTuple out(m);
  for (int i = 1; i <= m; ++i) out[i - 1] = elementary_symmetric(field, m, i).eval(x);
  return out;
}

std::vector<Elt> monic_from_roots(const Field& field, const PointTuple& roots) {
  // Expand prod (Y - r_i) directly.
  std::vector<Elt> f{1};
  for (Elt r : roots) {
    std::vector<Elt> g(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] = field.add(g[i + 1], f[i]);
      g[i] = field.add(g[i], field.mul(field.neg(r), f[i]));
    }
    f = std::move(g);
  }
  return f;
}

std::optional<PointTuple> vieta_roots(const Field& field, const std::vector<Elt>& monic_coeffs) {
  int m = static_cast<int>(monic_coeffs.size()) - 1;
  if (m != 2 && m != 3) throw std::invalid_argument("degree must be 2 or 3");
  if (monic_coeffs.back() != 1) throw std::invalid_argument("polynomial must be monic");
  upoly::Coeffs f = monic_coeffs;
  PointTuple roots;
  for (Elt r : field.elements()) {
    while (upoly::deg(f) > 0 && upoly::eval(field, f, r) == 0) {
      roots.push_back(r);
      f = upoly::divide_linear_root(field, f, r);
    }
    if (upoly::deg(f) == 0) break;
  }
  if (static_cast<int>(roots.size()) != m) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool discriminant_membership(const Field& field, int m, const PointTuple& sigma) {
  if (static_cast<int>(sigma.size()) != m) throw std::invalid_argument("arity mismatch");
  if (m == 2) {
    Elt d = field.sub(field.mul(sigma[0], sigma[0]), field.mul(field.from_int(4), sigma[1]));
    return d == 0;
  }
  if (m == 3) {
    if (field.p() == 3)
      throw std::domain_error("cubic discriminant degenerates in characteristic 3");
    return cubic_discriminant(field, sigma[0], sigma[1], sigma[2]) == 0;
  }
  throw std::invalid_argument("m must be 2 or 3");
}

Elt cubic_discriminant(const Field& F, Elt a, Elt b, Elt c) {
  Elt a2 = F.mul(a, a), b2 = F.mul(b, b), c2 = F.mul(c, c);
  Elt r = F.mul(a2, b2);                                       // a^2 b^2
  r = F.sub(r, F.mul(F.from_int(4), F.mul(b2, b)));            // -4 b^3
  r = F.sub(r, F.mul(F.from_int(4), F.mul(F.mul(a2, a), c)));  // -4 a^3 c
  r = F.add(r, F.mul(F.from_int(18), F.mul(a, F.mul(b, c))));  // +18 a b c
  r = F.sub(r, F.mul(F.from_int(27), c2));                     // -27 c^2
  return r;
}

Elt cubic_sylvester_resultant(const Field& F, Elt a, Elt b, Elt c) {
  // Sylvester matrix of X^3 - a X^2 + b X - c and 3X^2 - 2a X + b.
  const Elt na = F.neg(a), nc = F.neg(c);
  const Elt three = F.from_int(3), n2a = F.neg(F.mul(F.from_int(2), a));
  Elt M[5][5] = {{1, na, b, nc, 0},
                 {0, 1, na, b, nc},
                 {three, n2a, b, 0, 0},
                 {0, three, n2a, b, 0},
                 {0, 0, three, n2a, b}};
  // Gaussian elimination determinant.
  Elt det = 1;
  for (int col = 0; col < 5; ++col) {
    int piv = -1;
    for (int row = col; row < 5; ++row)
      if (M[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < 5; ++j) std::swap(M[piv][j], M[col][j]);
      det = F.neg(det);
    }
    det = F.mul(det, M[col][col]);
    Elt inv = F.inv(M[col][col]);
    for (int row = col + 1; row < 5; ++row) {
      if (M[row][col] == 0) continue;
      Elt factor = F.mul(M[row][col], inv);
      for (int j = col; j < 5; ++j) M[row][j] = F.sub(M[row][j], F.mul(factor, M[col][j]));
    }
  }
  return det;
}

namespace upoly {

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Coeffs& f) { return static_cast<int>(f.size()) - 1; }

Elt eval(const Field& F, const Coeffs& f, Elt x) {
  Elt acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

Coeffs derivative(const Field& F, const Coeffs& f) {
  Coeffs d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(F.mul(F.from_int(static_cast<long long>(i)), f[i]));
  trim(d);
  return d;
}

Coeffs divide_linear_root(const Field& F, const Coeffs& f, Elt r) {
  // Synthetic division by (X - r).
  if (f.empty()) return {};
  Coeffs q(f.size() - 1, 0);
  Elt carry = f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = F.add(f[i], F.mul(carry, r));
  }
  if (carry != 0) throw std::invalid_argument("not a root");
  trim(q);
  return q;
}

Coeffs remainder(const Field& F, Coeffs a, const Coeffs& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  trim(a);
  Elt lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Elt factor = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Coeffs gcd(const Field& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elt inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

}  // namespace upoly

}  // namespace symcodes
