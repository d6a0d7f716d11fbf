#pragma once

#include "g2v/rational.hpp"

#include <stdexcept>

namespace g2v {

// Second-order jet in two independent directions: value, the two first
// derivatives, and the mixed second derivative. Evaluating a rational
// function over this ring yields exact directional derivatives without
// symbolic differentiation (the ring is Q[e1,e2]/(e1^2, e2^2)).
struct Jet2 {
  Rat v, d1, d2, d12;

  Jet2() = default;
  explicit Jet2(Rat value) : v(std::move(value)) {}
  Jet2(Rat value, Rat da, Rat db, Rat dab)
      : v(std::move(value)), d1(std::move(da)), d2(std::move(db)), d12(std::move(dab)) {}

  static Jet2 constant(const Rat& c) { return Jet2(c); }

  Jet2 operator-() const { return {-v, -d1, -d2, -d12}; }

  Jet2& operator+=(const Jet2& o) {
    v += o.v; d1 += o.d1; d2 += o.d2; d12 += o.d12;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    v -= o.v; d1 -= o.d1; d2 -= o.d2; d12 -= o.d12;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.v * b.d1 + a.d1 * b.v,
            a.v * b.d2 + a.d2 * b.v,
            a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v};
  }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }

  Jet2 inverse() const {
    if (v.is_zero()) throw std::domain_error("jet inverse at a zero value");
    Rat iv = v.inverse();
    Rat iv2 = iv * iv;
    // 1/(v + a e1 + b e2 + c e12) expanded to first order in each epsilon.
    return {iv, -d1 * iv2, -d2 * iv2, -d12 * iv2 + Rat(2) * d1 * d2 * iv2 * iv};
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.inverse(); }

  friend Jet2 operator*(const Rat& s, const Jet2& a) {
    return {s * a.v, s * a.d1, s * a.d2, s * a.d12};
  }

  bool operator==(const Jet2& o) const {
    return v == o.v && d1 == o.d1 && d2 == o.d2 && d12 == o.d12;
  }
};

}  // namespace g2v
