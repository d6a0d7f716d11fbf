#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g2v {

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. gmp keeps arithmetic canonical as long as every value starts
// canonical, so construction is the only place that needs care.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long n, long d) : q_(n, d) { canon(); }
  explicit Rat(const mpq_class& q) : q_(q) { canon(); }
  explicit Rat(const mpz_class& z) : q_(z) {}

  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    return Rat(q);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_), NoCanon{}); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(mpq_class(1) / q_, NoCanon{});
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat abs() const { return is_negative() ? -*this : *this; }

  // Exact square root if the value is a perfect square of a rational;
  // throws otherwise. Used by Hodge star volume factors.
  Rat sqrt_exact() const {
    if (is_negative()) throw std::domain_error("sqrt of negative rational");
    mpz_class n = num(), d = den(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn != n || rd * rd != d)
      throw std::domain_error("rational is not a perfect square");
    return Rat(mpq_class(rn, rd), NoCanon{});
  }

  std::string str() const { return q_.get_str(); }

 private:
  struct NoCanon {};
  Rat(const mpq_class& q, NoCanon) : q_(q) {}
  void canon() { q_.canonicalize(); }
  mpq_class q_;
};

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace g2v
