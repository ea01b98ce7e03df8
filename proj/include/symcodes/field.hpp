#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcodes/common.hpp"

namespace symcodes {

/// Exact arithmetic in GF(p^e) for odd p.
///
/// Elements are indices in [0, q) encoding the polynomial-basis coefficient
/// vector base p (constant digit least significant). Index order is the
/// canonical element order: 0, 1, ..., p-1, t, 1+t, ...
///
/// A Field is an immutable handle over shared lookup tables; copies are cheap
/// and all operations are pure, so instances can be shared across threads.
class Field {
 public:
  /// Builds GF(p^e). If no modulus is given, picks the irreducible monic
  /// polynomial of degree e over GF(p) that is smallest in the coefficient
  /// encoding, so every derived object is reproducible across runs.
  /// The modulus is a coefficient list of length e+1, constant first, monic.
  static Field make(long p, int e,
                    const std::optional<std::vector<long>>& modulus = std::nullopt);

  long p() const { return p_; }
  int e() const { return e_; }
  long q() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const {
    return small_ ? t_->add[static_cast<std::size_t>(a) * q_ + b] : add_slow(a, b);
  }
  Elt neg(Elt a) const { return t_->neg[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, t_->neg[b]); }
  Elt mul(Elt a, Elt b) const {
    if (small_) return t_->mul[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    long s = static_cast<long>(t_->log[a]) + t_->log[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return t_->exp[s];
  }
  /// Throws on zero divisor.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  /// Negative exponents go through the inverse; pow(0, 0) = 1.
  Elt pow(Elt a, long long n) const;

  /// Zero counts as a square; for a != 0 this is Euler's criterion.
  bool is_square(Elt a) const { return a == 0 || t_->log[a] % 2 == 0; }
  /// The smaller of the two square roots in element order, if any.
  std::optional<Elt> sqrt(Elt a) const;

  /// Smallest element in element order whose multiplicative order is q-1.
  Elt primitive_element() const { return t_->primitive; }
  long long multiplicative_order(Elt a) const;
  /// Smallest non-square in element order.
  Elt smallest_nonsquare() const;

  /// All q elements in element order, starting 0, 1.
  std::vector<Elt> elements() const;

  /// The constant n mod p.
  Elt from_int(long long n) const;
  std::vector<long> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<long>& c) const;

  /// "c0+c1*t+..." for extensions, plain integer for prime fields.
  std::string to_string(Elt a) const;
  /// Accepts the to_string format and plain integers (reduced mod p).
  Elt parse(const std::string& text) const;

  /// "p^e/c0,c1,...,ce"
  std::string descriptor() const;
  static Field from_descriptor(const std::string& text);

  bool same_spec(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  /// Direct table access for enumeration-heavy inner loops (small fields only).
  const Elt* add_table() const { return small_ ? t_->add.data() : nullptr; }
  const Elt* mul_table() const { return small_ ? t_->mul.data() : nullptr; }

 private:
  friend class Tower;
  Field() = default;
  Elt add_slow(Elt a, Elt b) const;

  struct Tables {
    Elt primitive = 0;
    std::vector<Elt> exp;  // exp[i] = g^i, i in [0, q-1)
    std::vector<Elt> log;  // log[exp[i]] = i; log[0] unused
    std::vector<Elt> neg;
    std::vector<Elt> inv;
    std::vector<Elt> add;  // small fields only, q x q
    std::vector<Elt> mul;  // small fields only, q x q
  };

  long p_ = 0;
  int e_ = 0;
  long q_ = 0;
  std::vector<long> modulus_;
  bool small_ = false;
  std::shared_ptr<const Tables> t_;
};

/// GF(q) sitting inside GF(q^r), r in {2, 3}, with the embedding table and
/// the relative Frobenius a -> a^q. Immutable and shareable.
class Tower {
 public:
  static Tower make(const Field& base, int r);

  const Field& base() const { return base_; }
  const Field& ext() const { return ext_; }
  int r() const { return r_; }

  Elt embed(Elt a) const { return (*embed_)[a]; }
  /// Inverse of embed on its image.
  std::optional<Elt> to_base(Elt a) const;
  bool in_base(Elt a) const { return (*section_)[a] != kNotInBase; }

  /// a^q. Applying it r times is the identity; its fixed field is the
  /// embedded base field.
  Elt frobenius(Elt a) const { return ext_.pow(a, base_.q()); }

  /// (norm, trace) of a over the base field.
  std::pair<Elt, Elt> norm_trace(Elt a) const;

 private:
  Tower() = default;
  static constexpr Elt kNotInBase = 0xffffffffu;

  Field base_, ext_;
  int r_ = 0;
  std::shared_ptr<const std::vector<Elt>> embed_;    // base.q entries
  std::shared_ptr<const std::vector<Elt>> section_;  // ext.q entries
};

}  // namespace symcodes
