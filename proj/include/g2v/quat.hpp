#pragma once

#include "g2v/linalg.hpp"
#include "g2v/ratfn.hpp"

#include <array>
#include <vector>

namespace g2v {

// Quaternion over a scalar ring, written on the basis
//   {e0, e1, e2, e3} = {1, -i, -j, -k}.
// With that identification e_i e_j = -delta_ij e0 - eps_ijk e_k for
// i,j in {1,2,3}; e.g. e1*e2 = -e3.
template <class T>
struct Quat {
  std::array<T, 4> c{};

  Quat() = default;
  Quat(T a, T b, T d, T e) : c{std::move(a), std::move(b), std::move(d), std::move(e)} {}

  static Quat unit(int i) {
    Quat q;
    q.c[i] = ring_one();
    return q;
  }
  static Quat scalar(const T& s) {
    Quat q;
    q.c[0] = s;
    return q;
  }

  static T ring_one() { return T(Rat(1)); }

  bool is_zero() const {
    for (auto& v : c)
      if (!(v == T())) return false;
    return true;
  }

  Quat operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  friend Quat operator+(const Quat& a, const Quat& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
  }
  friend Quat operator-(const Quat& a, const Quat& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
  }
  Quat& operator+=(const Quat& o) { return *this = *this + o; }
  Quat& operator-=(const Quat& o) { return *this = *this - o; }

  friend Quat operator*(const Quat& a, const Quat& b) {
    static const int eps[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
        {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
        {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    Quat r;
    // e0 acts as identity.
    r.c[0] = a.c[0] * b.c[0];
    for (int i = 1; i < 4; ++i) {
      r.c[i] = r.c[i] + a.c[0] * b.c[i] + a.c[i] * b.c[0];
      r.c[0] = r.c[0] - a.c[i] * b.c[i];
    }
    for (int i = 1; i < 4; ++i)
      for (int j = 1; j < 4; ++j) {
        if (i == j) continue;
        for (int k = 1; k < 4; ++k) {
          int s = eps[i - 1][j - 1][k - 1];
          if (s == 1)
            r.c[k] = r.c[k] - a.c[i] * b.c[j];
          else if (s == -1)
            r.c[k] = r.c[k] + a.c[i] * b.c[j];
        }
      }
    return r;
  }
  Quat& operator*=(const Quat& o) { return *this = *this * o; }

  friend Quat operator*(const T& s, const Quat& q) {
    return {s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]};
  }

  friend bool operator==(const Quat& a, const Quat& b) { return a.c == b.c; }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

  Quat conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
  Quat im() const { return {T(), c[1], c[2], c[3]}; }
  T re() const { return c[0]; }
  T norm_sq() const {
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }

  // q^{-1} = conj(q)/|q|^2; requires the ring to support division.
  Quat inverse() const {
    T n = norm_sq();
    Quat k = conj();
    return {k.c[0] / n, k.c[1] / n, k.c[2] / n, k.c[3] / n};
  }
};

using QuatR = Quat<Rat>;
using QuatF = Quat<RatFn>;

inline Quat<Rat> bracket(const Quat<Rat>& a, const Quat<Rat>& b) {
  return a * b - b * a;
}

// 4x4 matrix of left multiplication v -> q v in the e-basis.
inline QMat left_mult_matrix(const QuatR& q) {
  QMat m(4, 4);
  for (int b = 0; b < 4; ++b) {
    QuatR col = q * QuatR::unit(b);
    for (int a = 0; a < 4; ++a) m(a, b) = col.c[a];
  }
  return m;
}

// 4x4 matrix of right multiplication v -> v q.
inline QMat right_mult_matrix(const QuatR& q) {
  QMat m(4, 4);
  for (int b = 0; b < 4; ++b) {
    QuatR col = QuatR::unit(b) * q;
    for (int a = 0; a < 4; ++a) m(a, b) = col.c[a];
  }
  return m;
}

// The complex structures I1, I2, I3: right multiplication by e1, e2, e3.
// Note composition is contravariant: I_a I_b = R_{e_b e_a}.
inline const QMat& complex_structure(int i) {
  static const std::array<QMat, 3> structures = {
      right_mult_matrix(QuatR::unit(1)),
      right_mult_matrix(QuatR::unit(2)),
      right_mult_matrix(QuatR::unit(3))};
  return structures[i - 1];
}

inline std::vector<Rat> apply_complex_structure(int i, const std::vector<Rat>& v) {
  return complex_structure(i).apply(v);
}

// The defining combination L + I1 L I1 + I2 L I2 - I3 L I3.
inline QMat fueter_defect(const QMat& L) {
  const QMat& i1 = complex_structure(1);
  const QMat& i2 = complex_structure(2);
  const QMat& i3 = complex_structure(3);
  return L + i1 * L * i1 + i2 * L * i2 - (i3 * L * i3);
}

inline bool is_fueter(const QMat& L) { return fueter_defect(L).is_zero(); }

// The quaternion-valued coordinate functions x and y on R^8 = H_x + H_y.
inline Quat<RatFn> quat_coord_x_fn() {
  return {RatFn::var(0), RatFn::var(1), RatFn::var(2), RatFn::var(3)};
}
inline Quat<RatFn> quat_coord_y_fn() {
  return {RatFn::var(4), RatFn::var(5), RatFn::var(6), RatFn::var(7)};
}

inline std::vector<Rat> flatten(const QMat& m) {
  std::vector<Rat> v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline QMat unflatten4(const std::vector<Rat>& v) {
  QMat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[static_cast<size_t>(4 * i + j)];
  return m;
}

// Basis of the 12-dimensional Fueter space H_l + H_l I1 + H_l I2.
inline std::vector<QMat> fueter_basis() {
  std::vector<QMat> out;
  for (int factor = 0; factor < 3; ++factor)
    for (int a = 0; a < 4; ++a) {
      QMat L = left_mult_matrix(QuatR::unit(a));
      if (factor > 0) L = L * complex_structure(factor);
      out.push_back(L);
    }
  return out;
}

// Exact nullspace of L -> L + I1 L I1 + I2 L I2 - I3 L I3 on End(R^4),
// expressed in the 16-dimensional flattened coordinates.
inline std::vector<std::vector<Rat>> fueter_operator_nullspace() {
  QMat op(16, 16);
  for (int b = 0; b < 16; ++b) {
    QMat E(4, 4);
    E(b / 4, b % 4) = Rat(1);
    auto col = flatten(fueter_defect(E));
    for (int a = 0; a < 16; ++a) op(a, b) = col[static_cast<size_t>(a)];
  }
  return op.nullspace();
}

}  // namespace g2v
