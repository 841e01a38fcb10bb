#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extalg {

/// Exact rational number, kept in canonical reduced form.
/// A default-constructed value is zero.
class Rational {
public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  static Rational from_strings(const std::string& num, const std::string& den) {
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    Rational r;
    r.v_ = mpq_class(n) / mpq_class(d);
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  bool is_negative() const { return sgn(v_) < 0; }
  std::string str() const { return v_.get_str(); }
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

private:
  mpq_class v_;
};

/// Residue in a prime field F_p.  A default-constructed value is the
/// field-agnostic zero; it combines with residues of any modulus, so
/// generic code can use `Zp{}` without knowing p.
class Zp {
public:
  Zp() = default;
  Zp(long n, uint32_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Zp: modulus must be positive");
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    v_ = static_cast<uint32_t>(r);
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Zp& operator+=(const Zp& o) {
    uint32_t p = reconcile(o);
    if (p == 0) return *this;
    v_ = static_cast<uint32_t>((static_cast<uint64_t>(v_) + o.v_) % p);
    p_ = p;
    return *this;
  }
  Zp& operator-=(const Zp& o) { return *this += (-o); }
  Zp& operator*=(const Zp& o) {
    uint32_t p = reconcile(o);
    if (p == 0) return *this;
    v_ = static_cast<uint32_t>(static_cast<uint64_t>(v_) * o.v_ % p);
    p_ = p;
    return *this;
  }
  Zp& operator/=(const Zp& o) {
    if (o.is_zero()) throw std::domain_error("Zp: division by zero");
    return *this *= o.inverse();
  }
  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const {
    Zp r = *this;
    if (r.v_ != 0) r.v_ = r.p_ - r.v_;
    return r;
  }
  friend bool operator==(const Zp& a, const Zp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("Zp: zero has no inverse");
    // extended Euclid on (v, p)
    int64_t t = 0, new_t = 1;
    int64_t r = p_, new_r = v_;
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::domain_error("Zp: modulus is not prime");
    if (t < 0) t += p_;
    Zp out;
    out.v_ = static_cast<uint32_t>(t);
    out.p_ = p_;
    return out;
  }

  bool is_negative() const { return false; }
  std::string str() const { return std::to_string(v_); }

private:
  // Moduli must agree; zero of unknown modulus adopts the other side's.
  uint32_t reconcile(const Zp& o) {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      throw std::invalid_argument("Zp: mixed moduli");
    return p_ != 0 ? p_ : o.p_;
  }

  uint32_t v_ = 0;
  uint32_t p_ = 0;
};

/// Field descriptors: runtime carriers of the FIELD line of an ALGEBRA file.
/// They construct scalars from parsed integer/fraction literals.
struct RationalField {
  using Scalar = Rational;
  std::string name() const { return "Q"; }
  Scalar from_long(long n) const { return Rational(n); }
  Scalar from_fraction(const std::string& num, const std::string& den) const {
    return Rational::from_strings(num, den);
  }
  Scalar from_rational(const Rational& r) const { return r; }
};

struct PrimeField {
  uint32_t p = 0;
  using Scalar = Zp;
  std::string name() const { return "F " + std::to_string(p); }
  Scalar from_long(long n) const { return Zp(n, p); }
  Scalar from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num, 10), d(den, 10);
    mpz_class pm(p);
    mpz_class nr = n % pm, dr = d % pm;
    if (nr < 0) nr += pm;
    if (dr < 0) dr += pm;
    Zp nz(nr.get_si(), p), dz(dr.get_si(), p);
    if (dz.is_zero()) throw std::domain_error("coefficient denominator vanishes mod p");
    return nz / dz;
  }
  Scalar from_rational(const Rational& r) const {
    return from_fraction(r.num_str(), r.den_str());
  }
};

}  // namespace extalg
