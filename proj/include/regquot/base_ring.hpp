#pragma once

#include <gmpxx.h>

#include <string>

namespace regquot {

using Scalar = mpq_class;

// Principal ideal domain used for degreewise linear algebra.  Every base
// ring is handled by one of these: ZZ and ZZ/m by the integers (with m
// adjoined as extra relations), GF(p) by the field itself, ZZ_(p) by the
// discrete valuation ring of fractions with denominator prime to p.
class Pid {
 public:
  enum class Kind { Integers, PrimeField, Local };

  static Pid integers() { return Pid(Kind::Integers, 0); }
  static Pid prime_field(long p) { return Pid(Kind::PrimeField, p); }
  static Pid local(long p) { return Pid(Kind::Local, p); }

  Kind kind() const { return kind_; }
  long prime() const { return p_; }

  Scalar normalize(const Scalar& x) const;
  bool is_unit(const Scalar& x) const;
  // p-adic valuation for Local, 0 for nonzero field elements, unused for ZZ.
  long valuation(const Scalar& x) const;

  // Unit u with u*x the canonical associate of x (x != 0).
  Scalar normalizer(const Scalar& x) const;
  Scalar canonical(const Scalar& x) const { return normalize(normalizer(x) * x); }
  bool divides(const Scalar& a, const Scalar& b) const;

  struct Bezout {
    Scalar g, s, t;  // s*a + t*b == g, g canonical
  };
  Bezout gcdext(const Scalar& a, const Scalar& b) const;
  Scalar gcd(const Scalar& a, const Scalar& b) const { return gcdext(a, b).g; }
  Scalar lcm(const Scalar& a, const Scalar& b) const;

  // Canonical remainder of x modulo a canonical pivot.
  Scalar rem(const Scalar& x, const Scalar& pivot) const;

  bool operator==(const Pid&) const = default;

 private:
  Pid(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

class BaseRing {
 public:
  enum class Kind { Integers, PrimeField, IntegersMod, IntegersLocalized };

  static BaseRing integers();
  static BaseRing prime_field(long p);
  static BaseRing integers_mod(long m);
  static BaseRing localized(long p);

  Kind kind() const { return kind_; }
  // p for PrimeField/IntegersLocalized, m for IntegersMod, 0 for ZZ.
  long modulus() const { return n_; }

  // Canonical representative; throws InvalidArgument for values outside
  // the ring (a fraction over ZZ, a p in the denominator over ZZ_(p)).
  Scalar normalize(const Scalar& x) const;
  bool is_unit(const Scalar& x) const;
  bool is_domain() const;
  bool is_field() const;

  Pid pid() const;
  // Nonzero when the additive group is torsion: every degree component is
  // then presented over ZZ with m*e_i adjoined.
  long torsion() const { return kind_ == Kind::IntegersMod ? n_ : 0; }

  std::string name() const;
  std::string format(const Scalar& x) const;

  bool operator==(const BaseRing&) const = default;

 private:
  BaseRing(Kind k, long n) : kind_(k), n_(n) {}
  Kind kind_;
  long n_;
};

bool is_prime(long n);

}  // namespace regquot
