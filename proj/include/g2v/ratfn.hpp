#pragma once

#include "g2v/jet.hpp"
#include "g2v/poly.hpp"
#include "g2v/rational.hpp"

#include <stdexcept>
#include <string>

namespace g2v {

struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Rational function num/den over the eight coordinates. Equality of p/q and
// r/s means p*s - r*q == 0; no multivariate gcd is attempted. The stored
// representative is normalized so den is monic in grlex order, which keeps
// serialization deterministic and makes the fast equality path fire often.
class RatFn {
 public:
  RatFn() : num_(), den_(Poly::constant(Rat(1))) {}
  RatFn(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(Rat(1))) {}
  explicit RatFn(Poly p) : num_(std::move(p)), den_(Poly::constant(Rat(1))) {}
  RatFn(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  static RatFn var(int coord) { return RatFn(Poly::var(coord)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    return den_.term_count() == 1 && den_.leading().first.is_constant();
  }

  RatFn operator-() const { return RatFn(-num_, den_, NoNormalize{}); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    if (a.is_zero()) return RatFn();
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator*(const Rat& s, const RatFn& f) {
    return RatFn(s * f.num_, f.den_, NoNormalize{});
  }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFn(den_, num_);
  }

  // Quotient-rule derivative; the representative is (n'd - nd')/d^2.
  RatFn deriv(int coord) const {
    if (is_polynomial()) return RatFn(num_.deriv(coord));
    return RatFn(num_.deriv(coord) * den_ - num_ * den_.deriv(coord), den_ * den_);
  }

  // Exact evaluation over a ring; throws PoleError when the denominator
  // vanishes at the point (Jet2 evaluation checks the value part).
  Rat eval(const std::array<Rat, kNumCoords>& pt) const {
    Rat d = den_.eval(pt);
    if (d.is_zero()) throw PoleError("evaluation at a pole");
    return num_.eval(pt) / d;
  }
  Jet2 eval_jet(const std::array<Jet2, kNumCoords>& pt) const {
    Jet2 d = den_.eval(pt);
    if (d.v.is_zero()) throw PoleError("jet evaluation at a pole");
    return num_.eval(pt) * d.inverse();
  }

  // Substitute a rational function for every coordinate. The composed
  // denominator must not vanish identically.
  RatFn compose(const std::array<RatFn, kNumCoords>& sub) const {
    RatFn n = num_.eval(sub);
    RatFn d = den_.eval(sub);
    if (d.is_zero()) throw std::domain_error("composition produced a zero denominator");
    return n / d;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  struct NoNormalize {};
  RatFn(Poly n, Poly d, NoNormalize) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(Rat(1));
      return;
    }
    const Rat& lead = den_.leading().second;
    if (!lead.is_one()) {
      Rat inv = lead.inverse();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_, den_;
};

template <>
inline Jet2 Poly::ring_one<Jet2>() { return Jet2(Rat(1)); }
template <>
inline RatFn Poly::ring_one<RatFn>() { return RatFn(Rat(1)); }

}  // namespace g2v
