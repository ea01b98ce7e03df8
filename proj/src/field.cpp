#include "symcodes/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace symcodes {

namespace {

constexpr long kMaxFieldSize = 128L * 128L * 128L;  // towers stop at GF(q^3), q <= 128
constexpr long kSmallTableCap = 512;                // full add/mul tables below this

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense univariate polynomials over GF(p), little-endian, trailing zeros trimmed.
using Poly = std::vector<long>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a by monic m.
Poly poly_mod(Poly a, const Poly& m, long p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    long c = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (c != 0)
      for (std::size_t i = 0; i < dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& m, long p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly cand(d + 1, 0);
      cand[d] = 1;
      long c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      if (poly_mod(m, cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<long> factor_distinct_primes(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field Field::make(long p, int e, const std::optional<std::vector<long>>& modulus) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

  long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw too_large_error("field too large: q exceeds 128^3");
  }

  Field F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = q;

  if (modulus) {
    if (static_cast<int>(modulus->size()) != e + 1)
      throw std::invalid_argument("modulus degree does not match extension degree");
    Poly m(e + 1);
    for (int i = 0; i <= e; ++i) m[i] = ((*modulus)[i] % p + p) % p;
    if (m[e] != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_irreducible(m, p)) throw std::invalid_argument("modulus is reducible over GF(p)");
    F.modulus_ = m;
  } else {
    // Smallest monic irreducible in coefficient encoding.
    Poly m(e + 1, 0);
    m[e] = 1;
    if (e > 1) {
      bool found = false;
      for (long code = 0; code < q && !found; ++code) {
        long c = code;
        for (int i = 0; i < e; ++i) {
          m[i] = c % p;
          c /= p;
        }
        found = poly_irreducible(m, p);
      }
      if (!found) throw std::logic_error("no irreducible modulus found");  // unreachable
    }
    F.modulus_ = m;
  }

  auto decode = [&](Elt a) {
    Poly f(e, 0);
    long v = a;
    for (int i = 0; i < e; ++i) {
      f[i] = v % p;
      v /= p;
    }
    trim(f);
    return f;
  };
  auto encode = [&](const Poly& f) {
    long scale = 1, out = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      out += f[i] * scale;
      scale *= p;
    }
    return static_cast<Elt>(out);
  };
  auto slow_mul = [&](Elt a, Elt b) {
    return encode(poly_mod(poly_mul(decode(a), decode(b), p), F.modulus_, p));
  };
  auto slow_pow = [&](Elt a, long long n) {
    Elt r = 1, base = a;
    while (n > 0) {
      if (n & 1) r = slow_mul(r, base);
      base = slow_mul(base, base);
      n >>= 1;
    }
    return r;
  };

  auto tables = std::make_shared<Tables>();

  // Smallest generator of the multiplicative group in element order.
  const auto prime_factors = factor_distinct_primes(q - 1);
  Elt gen = 1;
  if (q > 2) {
    for (Elt a = 2; a < static_cast<Elt>(q); ++a) {
      bool ok = true;
      for (long f : prime_factors)
        if (slow_pow(a, (q - 1) / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = a;
        break;
      }
    }
  }
  tables->primitive = gen;

  tables->exp.resize(q - 1);
  tables->log.assign(q, 0);
  Elt cur = 1;
  for (long i = 0; i < q - 1; ++i) {
    tables->exp[i] = cur;
    tables->log[cur] = static_cast<Elt>(i);
    cur = slow_mul(cur, gen);
  }

  tables->neg.resize(q);
  for (long a = 0; a < q; ++a) {
    Poly f = decode(static_cast<Elt>(a));
    for (auto& c : f) c = (p - c) % p;
    trim(f);
    tables->neg[a] = encode(f);
  }

  tables->inv.assign(q, 0);
  for (long a = 1; a < q; ++a)
    tables->inv[a] = tables->exp[(q - 1 - tables->log[a]) % (q - 1)];

  F.small_ = q <= kSmallTableCap;
  if (F.small_) {
    tables->add.resize(static_cast<std::size_t>(q) * q);
    tables->mul.resize(static_cast<std::size_t>(q) * q);
    for (long a = 0; a < q; ++a) {
      for (long b = 0; b < q; ++b) {
        Elt s;
        if (e == 1) {
          s = static_cast<Elt>((a + b) % p);
        } else {
          long va = a, vb = b, scale = 1, out = 0;
          for (int i = 0; i < e; ++i) {
            out += ((va % p) + (vb % p)) % p * scale;
            va /= p;
            vb /= p;
            scale *= p;
          }
          s = static_cast<Elt>(out);
        }
        tables->add[static_cast<std::size_t>(a) * q + b] = s;
        Elt m = 0;
        if (a != 0 && b != 0) {
          long lg = tables->log[a] + tables->log[b];
          if (lg >= q - 1) lg -= q - 1;
          m = tables->exp[lg];
        }
        tables->mul[static_cast<std::size_t>(a) * q + b] = m;
      }
    }
  }
  F.t_ = std::move(tables);
  return F;
}

Elt Field::add_slow(Elt a, Elt b) const {
  if (e_ == 1) return static_cast<Elt>((static_cast<long>(a) + b) % p_);
  long va = a, vb = b, scale = 1, out = 0;
  for (int i = 0; i < e_; ++i) {
    out += ((va % p_) + (vb % p_)) % p_ * scale;
    va /= p_;
    vb /= p_;
    scale *= p_;
  }
  return static_cast<Elt>(out);
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return t_->inv[a];
}

Elt Field::pow(Elt a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  if (a == 0) return n == 0 ? 1 : 0;
  long long r = (static_cast<long long>(t_->log[a]) * (n % (q_ - 1))) % (q_ - 1);
  return t_->exp[r];
}

std::optional<Elt> Field::sqrt(Elt a) const {
  if (a == 0) return Elt{0};
  if (t_->log[a] % 2 != 0) return std::nullopt;
  Elt r = t_->exp[t_->log[a] / 2];
  Elt s = t_->neg[r];
  return std::min(r, s);
}

long long Field::multiplicative_order(Elt a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  long long g = std::gcd<long long>(t_->log[a], q_ - 1);
  return (q_ - 1) / g;
}

Elt Field::smallest_nonsquare() const {
  for (long a = 2; a < q_; ++a)
    if (!is_square(static_cast<Elt>(a))) return static_cast<Elt>(a);
  throw std::logic_error("no non-square found");  // impossible for odd q
}

std::vector<Elt> Field::elements() const {
  std::vector<Elt> out(q_);
  for (long i = 0; i < q_; ++i) out[i] = static_cast<Elt>(i);
  return out;
}

Elt Field::from_int(long long n) const {
  long r = static_cast<long>(((n % p_) + p_) % p_);
  return static_cast<Elt>(r);
}

std::vector<long> Field::coeffs(Elt a) const {
  std::vector<long> c(e_);
  long v = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elt Field::from_coeffs(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) > e_)
    throw std::invalid_argument("coefficient vector longer than extension degree");
  long out = 0, scale = 1;
  for (int i = 0; i < e_; ++i) {
    long ci = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    out += ci * scale;
    scale *= p_;
  }
  return static_cast<Elt>(out);
}

std::string Field::to_string(Elt a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < e_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Elt Field::parse(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty field element");
  // Integer literal: the constant n mod p.
  std::size_t digit_start = s[0] == '-' ? 1 : 0;
  if (digit_start < s.size() &&
      s.find_first_not_of("0123456789", digit_start) == std::string::npos)
    return from_int(std::stoll(s));

  std::vector<long> c(e_, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+') ++pos;
    else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t next = pos;
    while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
    std::string term = s.substr(pos, next - pos);
    pos = next;
    if (term.empty()) throw std::invalid_argument("malformed field element: " + text);
    long coeff = 1;
    int deg = 0;
    std::size_t tpos = term.find('t');
    if (tpos == std::string::npos) {
      coeff = std::stol(term);
    } else {
      std::string cs = term.substr(0, tpos);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      coeff = cs.empty() ? 1 : std::stol(cs);
      deg = 1;
      if (tpos + 1 < term.size()) {
        if (term[tpos + 1] != '^') throw std::invalid_argument("malformed field element: " + text);
        deg = std::stoi(term.substr(tpos + 2));
      }
    }
    if (deg >= e_) throw std::invalid_argument("element degree exceeds field degree: " + text);
    c[deg] = (((c[deg] + sign * coeff) % p_) + p_) % p_;
  }
  return from_coeffs(c);
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p_ << "^" << e_ << "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ",";
    os << modulus_[i];
  }
  return os.str();
}

Field Field::from_descriptor(const std::string& text) {
  auto caret = text.find('^');
  auto slash = text.find('/');
  if (caret == std::string::npos)
    throw std::invalid_argument("field descriptor must look like p^e/c0,c1,...,ce");
  long p = std::stol(text.substr(0, caret));
  std::string etail = slash == std::string::npos ? text.substr(caret + 1)
                                                 : text.substr(caret + 1, slash - caret - 1);
  int e = std::stoi(etail);
  if (slash == std::string::npos) return make(p, e);
  std::vector<long> mod;
  std::stringstream ss(text.substr(slash + 1));
  std::string item;
  while (std::getline(ss, item, ',')) mod.push_back(std::stol(item));
  return make(p, e, mod);
}

Tower Tower::make(const Field& base, int r) {
  if (r != 2 && r != 3) throw std::invalid_argument("tower degree must be 2 or 3");
  Tower T;
  T.base_ = base;
  T.r_ = r;
  T.ext_ = Field::make(base.p(), base.e() * r);

  // Deterministic embedding: send the base generator t to the smallest root
  // of the base modulus inside the extension.
  const auto& m = base.modulus();
  Elt root = 0;
  bool found = false;
  for (long a = 0; a < T.ext_.q() && !found; ++a) {
    Elt acc = 0, xp = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      acc = T.ext_.add(acc, T.ext_.mul(T.ext_.from_int(m[i]), xp));
      xp = T.ext_.mul(xp, static_cast<Elt>(a));
    }
    if (acc == 0) {
      root = static_cast<Elt>(a);
      found = true;
    }
  }
  if (!found) throw std::logic_error("base modulus has no root in the extension");

  auto embed = std::make_shared<std::vector<Elt>>(base.q());
  auto section = std::make_shared<std::vector<Elt>>(T.ext_.q(), kNotInBase);
  for (long a = 0; a < base.q(); ++a) {
    auto c = base.coeffs(static_cast<Elt>(a));
    Elt acc = 0, xp = 1;
    for (int i = 0; i < base.e(); ++i) {
      acc = T.ext_.add(acc, T.ext_.mul(T.ext_.from_int(c[i]), xp));
      xp = T.ext_.mul(xp, root);
    }
    (*embed)[a] = acc;
    (*section)[acc] = static_cast<Elt>(a);
  }
  T.embed_ = std::move(embed);
  T.section_ = std::move(section);
  return T;
}

std::optional<Elt> Tower::to_base(Elt a) const {
  if ((*section_)[a] == kNotInBase) return std::nullopt;
  return (*section_)[a];
}

std::pair<Elt, Elt> Tower::norm_trace(Elt a) const {
  Elt n = a, t = a, cur = a;
  for (int i = 1; i < r_; ++i) {
    cur = frobenius(cur);
    n = ext_.mul(n, cur);
    t = ext_.add(t, cur);
  }
  auto nb = to_base(n), tb = to_base(t);
  if (!nb || !tb) throw std::logic_error("norm/trace landed outside the base field");
  return {*nb, *tb};
}

}  // namespace symcodes
