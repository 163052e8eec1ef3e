#include "regquot/base_ring.hpp"

#include "regquot/error.hpp"

namespace regquot {

namespace {

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(ErrorKind::InvalidArgument, a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return inv;
}

mpz_class fmod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mpz_valuation(const mpz_class& a, long p) {
  if (a == 0) return 0;
  mpz_class x = a;
  long v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++v;
  }
  return v;
}

mpz_class power(long p, long v) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
  return r;
}

// a/b mod m with gcd(b, m) = 1.
mpz_class residue(const Scalar& x, const mpz_class& m) {
  return fmod(x.get_num() * mod_inverse(x.get_den(), m), m);
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar Pid::normalize(const Scalar& x) const {
  switch (kind_) {
    case Kind::Integers:
      if (x.get_den() != 1) fail(ErrorKind::InvalidArgument, x.get_str() + " is not an integer");
      return x;
    case Kind::PrimeField:
      return Scalar(residue(x, p_));
    case Kind::Local:
      if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p_))) {
        fail(ErrorKind::InvalidArgument, x.get_str() + " has " + std::to_string(p_) + " in its denominator");
      }
      return x;
  }
  return x;
}

bool Pid::is_unit(const Scalar& x) const {
  if (x == 0) return false;
  switch (kind_) {
    case Kind::Integers: return abs(x) == 1;
    case Kind::PrimeField: return true;
    case Kind::Local: return valuation(x) == 0;
  }
  return false;
}

long Pid::valuation(const Scalar& x) const {
  if (kind_ != Kind::Local || x == 0) return 0;
  return mpz_valuation(x.get_num(), p_);
}

Scalar Pid::normalizer(const Scalar& x) const {
  switch (kind_) {
    case Kind::Integers: return x < 0 ? Scalar(-1) : Scalar(1);
    case Kind::PrimeField: return Scalar(mod_inverse(residue(x, p_), p_));
    case Kind::Local: {
      Scalar r = Scalar(power(p_, valuation(x))) / x;
      r.canonicalize();
      return r;
    }
  }
  return Scalar(1);
}

bool Pid::divides(const Scalar& a, const Scalar& b) const {
  if (b == 0) return true;
  if (a == 0) return false;
  switch (kind_) {
    case Kind::Integers: return mpz_divisible_p(b.get_num().get_mpz_t(), a.get_num().get_mpz_t()) != 0;
    case Kind::PrimeField: return true;
    case Kind::Local: return valuation(a) <= valuation(b);
  }
  return false;
}

Pid::Bezout Pid::gcdext(const Scalar& a, const Scalar& b) const {
  if (a == 0 && b == 0) return {Scalar(0), Scalar(1), Scalar(0)};
  switch (kind_) {
    case Kind::Integers: {
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
      return {Scalar(g), Scalar(s), Scalar(t)};
    }
    case Kind::PrimeField:
      if (a != 0) return {Scalar(1), normalizer(a), Scalar(0)};
      return {Scalar(1), Scalar(0), normalizer(b)};
    case Kind::Local:
      if (b == 0 || (a != 0 && valuation(a) <= valuation(b))) {
        return {Scalar(power(p_, valuation(a))), normalizer(a), Scalar(0)};
      }
      return {Scalar(power(p_, valuation(b))), Scalar(0), normalizer(b)};
  }
  return {Scalar(0), Scalar(1), Scalar(0)};
}

Scalar Pid::lcm(const Scalar& a, const Scalar& b) const {
  if (a == 0 || b == 0) return Scalar(0);
  switch (kind_) {
    case Kind::Integers: {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
      return Scalar(l);
    }
    case Kind::PrimeField: return Scalar(1);
    case Kind::Local: return Scalar(power(p_, std::max(valuation(a), valuation(b))));
  }
  return Scalar(0);
}

Scalar Pid::rem(const Scalar& x, const Scalar& pivot) const {
  switch (kind_) {
    case Kind::Integers: return Scalar(fmod(x.get_num(), pivot.get_num()));
    case Kind::PrimeField: return Scalar(0);
    case Kind::Local: {
      const long v = valuation(pivot);
      if (v == 0) return Scalar(0);
      return Scalar(residue(x, power(p_, v)));
    }
  }
  return Scalar(0);
}

BaseRing BaseRing::integers() { return BaseRing(Kind::Integers, 0); }

BaseRing BaseRing::prime_field(long p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "GF(p) needs a prime, got " + std::to_string(p));
  return BaseRing(Kind::PrimeField, p);
}

BaseRing BaseRing::integers_mod(long m) {
  if (m < 2) fail(ErrorKind::InvalidArgument, "ZZ/m needs m >= 2, got " + std::to_string(m));
  return BaseRing(Kind::IntegersMod, m);
}

BaseRing BaseRing::localized(long p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "ZZ_(p) needs a prime, got " + std::to_string(p));
  return BaseRing(Kind::IntegersLocalized, p);
}

Scalar BaseRing::normalize(const Scalar& x) const {
  switch (kind_) {
    case Kind::Integers: return Pid::integers().normalize(x);
    case Kind::PrimeField: return Pid::prime_field(n_).normalize(x);
    case Kind::IntegersMod: return Scalar(residue(x, n_));
    case Kind::IntegersLocalized: return Pid::local(n_).normalize(x);
  }
  return x;
}

bool BaseRing::is_unit(const Scalar& x) const {
  switch (kind_) {
    case Kind::Integers: return Pid::integers().is_unit(x);
    case Kind::PrimeField: return normalize(x) != 0;
    case Kind::IntegersMod: {
      mpz_class g;
      const mpz_class r = residue(x, n_);
      mpz_gcd_ui(g.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n_));
      return g == 1;
    }
    case Kind::IntegersLocalized: return Pid::local(n_).is_unit(x);
  }
  return false;
}

bool BaseRing::is_domain() const { return kind_ != Kind::IntegersMod || is_prime(n_); }

bool BaseRing::is_field() const {
  return kind_ == Kind::PrimeField || (kind_ == Kind::IntegersMod && is_prime(n_));
}

Pid BaseRing::pid() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::IntegersMod: return Pid::integers();
    case Kind::PrimeField: return Pid::prime_field(n_);
    case Kind::IntegersLocalized: return Pid::local(n_);
  }
  return Pid::integers();
}

std::string BaseRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "ZZ";
    case Kind::PrimeField: return "GF(" + std::to_string(n_) + ")";
    case Kind::IntegersMod: return "ZZ/" + std::to_string(n_);
    case Kind::IntegersLocalized: return "ZZ_(" + std::to_string(n_) + ")";
  }
  return "?";
}

std::string BaseRing::format(const Scalar& x) const { return x.get_str(); }

}  // namespace regquot
