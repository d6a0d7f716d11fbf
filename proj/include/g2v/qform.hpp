#pragma once

#include "g2v/form.hpp"
#include "g2v/quat.hpp"

#include <array>

namespace g2v {

// Product of quaternion basis elements: e_i * e_j = sign * e_k.
struct QuatBasisProduct {
  int k;
  int sign;
};

inline QuatBasisProduct quat_basis_product(int i, int j) {
  static const auto table = [] {
    std::array<std::array<QuatBasisProduct, 4>, 4> t{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        QuatR p = QuatR::unit(a) * QuatR::unit(b);
        for (int k = 0; k < 4; ++k) {
          if (p.c[k].is_zero()) continue;
          t[a][b] = {k, p.c[k].is_negative() ? -1 : 1};
        }
      }
    return t;
  }();
  return table[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

// Quaternion-valued differential form, stored as four scalar-form
// components over {e0, e1, e2, e3}. Wedge carries the quaternion product,
// so for a 1-form A the square A ^ A has commutator coefficients.
template <class C>
struct QFormT {
  std::array<FormT<C>, 4> c;

  QFormT() = default;
  QFormT(Chart ch, int deg)
      : c{FormT<C>(ch, deg), FormT<C>(ch, deg), FormT<C>(ch, deg), FormT<C>(ch, deg)} {}
  explicit QFormT(std::array<FormT<C>, 4> parts) : c(std::move(parts)) {}

  int degree() const { return c[0].degree; }
  Chart chart() const { return c[0].chart; }
  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }

  QFormT operator-() const { return QFormT(std::array<FormT<C>, 4>{-c[0], -c[1], -c[2], -c[3]}); }
  friend QFormT operator+(const QFormT& a, const QFormT& b) {
    return QFormT(std::array<FormT<C>, 4>{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]});
  }
  friend QFormT operator-(const QFormT& a, const QFormT& b) {
    return QFormT(std::array<FormT<C>, 4>{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]});
  }
  QFormT& operator+=(const QFormT& o) { return *this = *this + o; }
  QFormT& operator-=(const QFormT& o) { return *this = *this - o; }

  friend QFormT operator*(const C& s, const QFormT& f) {
    return QFormT(std::array<FormT<C>, 4>{s * f.c[0], s * f.c[1], s * f.c[2], s * f.c[3]});
  }
  friend QFormT operator*(const Rat& s, const QFormT& f)
    requires(!std::is_same_v<C, Rat>)
  {
    return QFormT(std::array<FormT<C>, 4>{s * f.c[0], s * f.c[1], s * f.c[2], s * f.c[3]});
  }
  friend bool operator==(const QFormT& a, const QFormT& b) { return a.c == b.c; }
  friend bool operator!=(const QFormT& a, const QFormT& b) { return !(a == b); }

  QFormT conj() const { return QFormT(std::array<FormT<C>, 4>{c[0], -c[1], -c[2], -c[3]}); }
  QFormT im() const {
    QFormT r = *this;
    r.c[0] = FormT<C>(r.c[0].n, r.c[0].chart, r.c[0].degree);
    return r;
  }
  const FormT<C>& re() const { return c[0]; }
};

using QForm = QFormT<RatFn>;
using QFormValue = QFormT<Rat>;

template <class C>
QFormT<C> qwedge(const QFormT<C>& a, const QFormT<C>& b) {
  QFormT<C> r(a.chart(), a.degree() + b.degree());
  for (int i = 0; i < 4; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c[j].is_zero()) continue;
      auto [k, sign] = quat_basis_product(i, j);
      FormT<C> w = wedge(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(j)]);
      r.c[static_cast<size_t>(k)] += sign < 0 ? -w : w;
    }
  }
  return r;
}

// Left/right multiplication by a quaternion-valued function.
template <class C>
QFormT<C> qmul_left(const Quat<C>& q, const QFormT<C>& a) {
  QFormT<C> r(a.chart(), a.degree());
  for (int i = 0; i < 4; ++i) {
    if (q.c[i] == C()) continue;
    for (int j = 0; j < 4; ++j) {
      if (a.c[j].is_zero()) continue;
      auto [k, sign] = quat_basis_product(i, j);
      FormT<C> w = q.c[static_cast<size_t>(i)] * a.c[static_cast<size_t>(j)];
      r.c[static_cast<size_t>(k)] += sign < 0 ? -w : w;
    }
  }
  return r;
}

template <class C>
QFormT<C> qmul_right(const QFormT<C>& a, const Quat<C>& q) {
  QFormT<C> r(a.chart(), a.degree());
  for (int i = 0; i < 4; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (q.c[j] == C()) continue;
      auto [k, sign] = quat_basis_product(i, j);
      FormT<C> w = q.c[static_cast<size_t>(j)] * a.c[static_cast<size_t>(i)];
      r.c[static_cast<size_t>(k)] += sign < 0 ? -w : w;
    }
  }
  return r;
}

inline QForm qform_d(const QForm& a) {
  QForm r(a.chart(), a.degree() + 1);
  for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = exterior_d(a.c[static_cast<size_t>(i)]);
  return r;
}

// Differential of a quaternion-valued function, as a quaternion 1-form.
inline QForm quat_differential(const Quat<RatFn>& q, Chart chart) {
  QForm r(chart, 1);
  for (int i = 0; i < 4; ++i) {
    Form d(chart, 1);
    for (int axis = 0; axis < chart_dim(chart); ++axis) {
      RatFn dc = q.c[static_cast<size_t>(i)].deriv(chart_coord(chart, axis));
      if (!dc.is_zero()) d.add(static_cast<Mask>(1u << axis), dc);
    }
    r.c[static_cast<size_t>(i)] = std::move(d);
  }
  return r;
}

inline QForm qform_pullback(const QForm& a, const std::vector<RatFn>& sub, Chart source) {
  QForm r(source, a.degree());
  for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = pullback(a.c[static_cast<size_t>(i)], sub, source);
  return r;
}

inline QFormValue eval_qform(const QForm& a, const std::array<Rat, kNumCoords>& pt) {
  QFormValue r(a.chart(), a.degree());
  for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = eval_form(a.c[static_cast<size_t>(i)], pt);
  return r;
}

inline QuatR qvalue_on(const QFormValue& a, const std::vector<std::vector<Rat>>& vecs) {
  QuatR q;
  for (int i = 0; i < 4; ++i) q.c[static_cast<size_t>(i)] = value_on(a.c[static_cast<size_t>(i)], vecs);
  return q;
}

// Interior products, componentwise in the algebra part.
template <class C, class V>
QFormT<C> qinterior_first(const std::vector<V>& v, const QFormT<C>& a) {
  QFormT<C> r(a.chart(), a.degree() - 1);
  for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = interior_first(v, a.c[static_cast<size_t>(i)]);
  return r;
}

// The quaternion-valued differential dx = dx0 e0 + dx1 e1 + ...; same for
// the y block when on R8.
inline QForm quat_dx(Chart chart) {
  QForm r(chart, 1);
  for (int i = 0; i < 4; ++i) {
    Form f(chart, 1);
    f.add(static_cast<Mask>(1u << i), RatFn(Rat(1)));
    r.c[static_cast<size_t>(i)] = std::move(f);
  }
  return r;
}

inline QForm quat_dy_r8() {
  QForm r(Chart::R8, 1);
  for (int i = 0; i < 4; ++i) {
    Form f(Chart::R8, 1);
    f.add(static_cast<Mask>(1u << (i + 4)), RatFn(Rat(1)));
    r.c[static_cast<size_t>(i)] = std::move(f);
  }
  return r;
}

}  // namespace g2v
