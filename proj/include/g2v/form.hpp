#pragma once

#include "g2v/ratfn.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2v {

// Charts the engine works on. R4 is the x-factor (coordinates x0..x3),
// R7 drops x0 (coordinates x1..x3, y0..y3), R8 is everything. Frame means
// components are taken against some pointwise frame rather than coordinate
// differentials; only the metric-free algebra applies there.
enum class Chart { R4, R7, R8, Frame };

inline int chart_dim(Chart c) {
  switch (c) {
    case Chart::R4: return 4;
    case Chart::R7: return 7;
    case Chart::R8: return 8;
    default: throw std::logic_error("frame charts have no fixed dimension");
  }
}

// Axis index -> global coordinate index.
inline int chart_coord(Chart c, int axis) {
  switch (c) {
    case Chart::R4: return axis;
    case Chart::R7: return axis + 1;
    case Chart::R8: return axis;
    default: throw std::logic_error("frame charts have no coordinates");
  }
}

using Mask = uint16_t;

inline int mask_size(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

// Sign of sorting the concatenation (a ascending, b ascending) into one
// ascending list; 0 when the index sets overlap.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (int i = 0; i < 16; ++i)
    if ((b >> i) & 1) inv += std::popcount(static_cast<unsigned>(a) >> (i + 1));
  return (inv & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> idx;
  for (int i = 0; i < 16; ++i)
    if ((m >> i) & 1) idx.push_back(i);
  return idx;
}

template <class Fn>
inline void for_each_mask(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  Mask m = static_cast<Mask>((1u << k) - 1);
  Mask limit = static_cast<Mask>(1u << n);
  while (m < limit) {
    fn(m);
    if (k == 0) break;
    // Next bit permutation with the same popcount.
    Mask c = m & static_cast<Mask>(-m);
    Mask r = m + c;
    m = static_cast<Mask>(r | ((((m ^ r) >> 2) / c)));
  }
}

// Differential form of fixed degree with coefficients in C (RatFn for
// symbolic forms, Rat for pointwise values). Multi-indices are strictly
// increasing bit masks; no zero coefficients are stored.
template <class C>
struct FormT {
  int n = 8;
  Chart chart = Chart::R8;
  int degree = 0;
  std::map<Mask, C> comp;

  FormT() = default;
  FormT(Chart ch, int deg) : n(chart_dim(ch)), chart(ch), degree(deg) {}
  FormT(int dim, Chart ch, int deg) : n(dim), chart(ch), degree(deg) {}

  static FormT zero(Chart ch, int deg) { return FormT(ch, deg); }
  static FormT frame_zero(int dim, int deg) { return FormT(dim, Chart::Frame, deg); }

  bool is_zero() const { return comp.empty(); }

  void add(Mask m, const C& c) {
    if (c == C()) return;
    auto it = comp.find(m);
    if (it == comp.end()) {
      comp.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == C()) comp.erase(it);
    }
  }

  C coeff(Mask m) const {
    auto it = comp.find(m);
    return it == comp.end() ? C() : it->second;
  }

  FormT operator-() const {
    FormT r(n, chart, degree);
    for (auto& [m, c] : comp) r.comp.emplace(m, -c);
    return r;
  }
  FormT& operator+=(const FormT& o) {
    require_same(o);
    for (auto& [m, c] : o.comp) add(m, c);
    return *this;
  }
  FormT& operator-=(const FormT& o) {
    require_same(o);
    for (auto& [m, c] : o.comp) add(m, -c);
    return *this;
  }
  friend FormT operator+(FormT a, const FormT& b) { return a += b; }
  friend FormT operator-(FormT a, const FormT& b) { return a -= b; }

  friend FormT operator*(const C& s, const FormT& f) {
    FormT r(f.n, f.chart, f.degree);
    for (auto& [m, c] : f.comp) r.add(m, s * c);
    return r;
  }
  friend FormT operator*(const Rat& s, const FormT& f)
    requires(!std::is_same_v<C, Rat>)
  {
    FormT r(f.n, f.chart, f.degree);
    if (s.is_zero()) return r;
    for (auto& [m, c] : f.comp) r.add(m, s * c);
    return r;
  }

  friend bool operator==(const FormT& a, const FormT& b) {
    return a.degree == b.degree && a.comp == b.comp;
  }
  friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }

  void require_same(const FormT& o) const {
    if (n != o.n || degree != o.degree)
      throw std::invalid_argument("form dimension/degree mismatch");
  }
};

using Form = FormT<RatFn>;
using FormValue = FormT<Rat>;

// Vector field with one component per chart axis.
struct VecField {
  Chart chart;
  std::vector<RatFn> comp;

  explicit VecField(Chart ch) : chart(ch), comp(static_cast<size_t>(chart_dim(ch))) {}

  static VecField radial(Chart ch) {
    VecField v(ch);
    for (int a = 0; a < chart_dim(ch); ++a) v.comp[static_cast<size_t>(a)] = RatFn::var(chart_coord(ch, a));
    return v;
  }
  static VecField basis(Chart ch, int axis) {
    VecField v(ch);
    v.comp[static_cast<size_t>(axis)] = RatFn(Rat(1));
    return v;
  }
};

template <class C>
FormT<C> wedge(const FormT<C>& a, const FormT<C>& b) {
  if (a.n != b.n) throw std::invalid_argument("wedge across different spaces");
  FormT<C> r(a.n, a.chart, a.degree + b.degree);
  if (r.degree > a.n) return r;  // above top degree everything is zero
  for (auto& [ma, ca] : a.comp)
    for (auto& [mb, cb] : b.comp) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      C prod = ca * cb;
      if (s < 0) prod = -prod;
      r.add(static_cast<Mask>(ma | mb), prod);
    }
  return r;
}

// Exterior derivative (coefficients must be coordinate functions).
inline Form exterior_d(const Form& a) {
  Form r(a.n, a.chart, a.degree + 1);
  if (r.degree > a.n) return r;
  for (auto& [m, c] : a.comp) {
    for (int axis = 0; axis < a.n; ++axis) {
      Mask bit = static_cast<Mask>(1u << axis);
      if (m & bit) continue;
      RatFn dc = c.deriv(chart_coord(a.chart, axis));
      if (dc.is_zero()) continue;
      int s = merge_sign(bit, m);
      r.add(static_cast<Mask>(m | bit), s < 0 ? -dc : dc);
    }
  }
  return r;
}

// First-slot insertion: (v interior a)(Z...) = a(v, Z...).
template <class C, class V>
FormT<C> interior_first(const std::vector<V>& v, const FormT<C>& a) {
  FormT<C> r(a.n, a.chart, a.degree - 1);
  if (a.degree == 0) throw std::invalid_argument("interior product of a 0-form");
  for (auto& [m, c] : a.comp) {
    auto idx = mask_indices(m);
    for (size_t t = 0; t < idx.size(); ++t) {
      const V& vc = v[static_cast<size_t>(idx[t])];
      if (vc == V()) continue;
      C term = c * vc;
      if (t & 1) term = -term;
      r.add(static_cast<Mask>(m & ~(1u << idx[t])), term);
    }
  }
  return r;
}

// Last-slot insertion: (a interior v)(Z...) = a(Z..., v); matches
// dx01 . d/dx1 = dx0 and dx01 . d/dx0 = -dx1.
template <class C, class V>
FormT<C> interior_last(const FormT<C>& a, const std::vector<V>& v) {
  FormT<C> r(a.n, a.chart, a.degree - 1);
  if (a.degree == 0) throw std::invalid_argument("interior product of a 0-form");
  int k = a.degree;
  for (auto& [m, c] : a.comp) {
    auto idx = mask_indices(m);
    for (size_t t = 0; t < idx.size(); ++t) {
      const V& vc = v[static_cast<size_t>(idx[t])];
      if (vc == V()) continue;
      C term = c * vc;
      if ((k - 1 - static_cast<int>(t)) & 1) term = -term;
      r.add(static_cast<Mask>(m & ~(1u << idx[t])), term);
    }
  }
  return r;
}

// Contraction of a lower-degree form into the leading slots of a higher
// one: (low . high)(Z...) = (1/q!) low^{I} high_{I Z...}. With increasing
// multi-indices and a diagonal inverse metric this is a sum over subsets.
// inv_metric holds g^{ii} per axis; nullptr means Euclidean.
template <class C>
FormT<C> contract_leading(const FormT<C>& low, const FormT<C>& high,
                          const std::vector<Rat>* inv_metric = nullptr) {
  if (low.degree > high.degree) throw std::invalid_argument("contraction degree mismatch");
  FormT<C> r(high.n, high.chart, high.degree - low.degree);
  for (auto& [ml, cl] : low.comp) {
    Rat w(1);
    if (inv_metric)
      for (int i : mask_indices(ml)) w *= (*inv_metric)[static_cast<size_t>(i)];
    for (auto& [mh, ch] : high.comp) {
      if ((ml & mh) != ml) continue;
      Mask rest = static_cast<Mask>(mh & ~ml);
      int s = merge_sign(ml, rest);
      C term = cl * ch;
      term = w * term;
      if (s < 0) term = -term;
      r.add(rest, term);
    }
  }
  return r;
}

// Contraction into the trailing slots: (high . low)(Z...) =
// (1/q!) high_{Z... I} low^{I}.
template <class C>
FormT<C> contract_trailing(const FormT<C>& high, const FormT<C>& low,
                           const std::vector<Rat>* inv_metric = nullptr) {
  if (low.degree > high.degree) throw std::invalid_argument("contraction degree mismatch");
  FormT<C> r(high.n, high.chart, high.degree - low.degree);
  for (auto& [ml, cl] : low.comp) {
    Rat w(1);
    if (inv_metric)
      for (int i : mask_indices(ml)) w *= (*inv_metric)[static_cast<size_t>(i)];
    for (auto& [mh, ch] : high.comp) {
      if ((ml & mh) != ml) continue;
      Mask rest = static_cast<Mask>(mh & ~ml);
      int s = merge_sign(rest, ml);
      C term = cl * ch;
      term = w * term;
      if (s < 0) term = -term;
      r.add(rest, term);
    }
  }
  return r;
}

// Inner product of two equal-degree forms for a diagonal metric.
template <class C>
C form_inner(const FormT<C>& a, const FormT<C>& b,
             const std::vector<Rat>* inv_metric = nullptr) {
  a.require_same(b);
  C acc{};
  for (auto& [m, ca] : a.comp) {
    auto it = b.comp.find(m);
    if (it == b.comp.end()) continue;
    C term = ca * it->second;
    if (inv_metric) {
      Rat w(1);
      for (int i : mask_indices(m)) w *= (*inv_metric)[static_cast<size_t>(i)];
      term = w * term;
    }
    acc += term;
  }
  return acc;
}

// Hodge star for a diagonal metric (entries per axis, on vectors) and an
// orientation sign. The metric volume sqrt(det g) must be rational.
template <class C>
FormT<C> hodge_star(const FormT<C>& a, const std::vector<Rat>* metric = nullptr,
                    int orientation = 1) {
  FormT<C> r(a.n, a.chart, a.n - a.degree);
  Rat vol(1);
  if (metric) {
    Rat det(1);
    for (auto& d : *metric) det *= d;
    vol = det.sqrt_exact();  // throws when the metric volume is irrational
  }
  Mask full = static_cast<Mask>((1u << a.n) - 1);
  for (auto& [m, c] : a.comp) {
    Mask mc = static_cast<Mask>(full & ~m);
    Rat w = vol;
    if (metric)
      for (int i : mask_indices(m)) w /= (*metric)[static_cast<size_t>(i)];
    int s = merge_sign(m, mc) * orientation;
    C term = w * c;
    if (s < 0) term = -term;
    r.add(mc, term);
  }
  return r;
}

// Pullback along a rational map: sub[axis of the target chart] is the
// substituted coordinate expression in the source chart's coordinates.
inline Form pullback(const Form& target, const std::vector<RatFn>& sub, Chart source) {
  if (static_cast<int>(sub.size()) != target.n)
    throw std::invalid_argument("pullback substitution arity mismatch");
  std::array<RatFn, kNumCoords> full_sub{};
  for (int axis = 0; axis < target.n; ++axis)
    full_sub[static_cast<size_t>(chart_coord(target.chart, axis))] = sub[static_cast<size_t>(axis)];
  // Differentials of the substituted coordinates, as source 1-forms.
  std::vector<Form> dsub;
  dsub.reserve(sub.size());
  for (auto& s : sub) {
    Form ds(source, 1);
    for (int axis = 0; axis < chart_dim(source); ++axis) {
      RatFn dc = s.deriv(chart_coord(source, axis));
      if (!dc.is_zero()) ds.add(static_cast<Mask>(1u << axis), dc);
    }
    dsub.push_back(std::move(ds));
  }
  Form r(source, target.degree);
  for (auto& [m, c] : target.comp) {
    Form term(source, 0);
    term.add(0, c.compose(full_sub));
    for (int i : mask_indices(m)) term = wedge(term, dsub[static_cast<size_t>(i)]);
    r += term;
  }
  return r;
}

// Exact evaluation at an ambient point (all eight coordinates supplied).
inline FormValue eval_form(const Form& a, const std::array<Rat, kNumCoords>& pt) {
  FormValue r(a.n, a.chart, a.degree);
  for (auto& [m, c] : a.comp) r.add(m, c.eval(pt));
  return r;
}

inline Rat det_rat(std::vector<std::vector<Rat>> m) {
  size_t k = m.size();
  Rat det(1);
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = m[col][col].inverse();
    for (size_t i = col + 1; i < k; ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] * inv;
      for (size_t j = col; j < k; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

// Value of a k-form on k vectors (each vector has one entry per axis).
inline Rat value_on(const FormValue& a, const std::vector<std::vector<Rat>>& vecs) {
  if (static_cast<int>(vecs.size()) != a.degree)
    throw std::invalid_argument("tuple arity mismatch");
  if (a.degree == 0) return a.coeff(0);
  Rat acc(0);
  for (auto& [m, c] : a.comp) {
    auto idx = mask_indices(m);
    std::vector<std::vector<Rat>> sub(vecs.size(), std::vector<Rat>(idx.size()));
    for (size_t r = 0; r < vecs.size(); ++r)
      for (size_t cidx = 0; cidx < idx.size(); ++cidx)
        sub[r][cidx] = vecs[r][static_cast<size_t>(idx[cidx])];
    Rat d = det_rat(std::move(sub));
    if (!d.is_zero()) acc += c * d;
  }
  return acc;
}

inline std::string form_str(const Form& a) {
  if (a.comp.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : a.comp) {
    if (!first) out += "  +  ";
    first = false;
    out += "(" + c.str() + ")";
    if (m) {
      out += " d[";
      bool fi = true;
      for (int i : mask_indices(m)) {
        if (!fi) out += ",";
        fi = false;
        out += coord_name(chart_coord(a.chart, i));
      }
      out += "]";
    }
  }
  return out;
}

inline std::string form_value_str(const FormValue& a) {
  if (a.comp.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : a.comp) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    if (m) {
      out += "*e[";
      bool fi = true;
      for (int i : mask_indices(m)) {
        if (!fi) out += ",";
        fi = false;
        out += std::to_string(i);
      }
      out += "]";
    }
  }
  return out;
}

}  // namespace g2v
