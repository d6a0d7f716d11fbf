#pragma once

#include "g2v/form.hpp"
#include "g2v/qform.hpp"
#include "g2v/quat.hpp"

#include <utility>
#include <vector>

namespace g2v {

inline Form const_form(Chart ch, std::initializer_list<int> axes, Rat c = Rat(1)) {
  Form f(ch, static_cast<int>(axes.size()));
  Mask m = 0;
  for (int a : axes) m |= static_cast<Mask>(1u << a);
  f.add(m, RatFn(c));
  return f;
}

// Self-dual basis on the x-factor, as forms on R8 (axes 0..3):
//   w1 = dx01 + dx23, w2 = dx02 - dx13, w3 = dx03 + dx12.
inline Form omega_x_r8(int i) {
  switch (i) {
    case 1: return const_form(Chart::R8, {0, 1}) + const_form(Chart::R8, {2, 3});
    case 2: return const_form(Chart::R8, {0, 2}) - const_form(Chart::R8, {1, 3});
    case 3: return const_form(Chart::R8, {0, 3}) + const_form(Chart::R8, {1, 2});
  }
  throw std::invalid_argument("omega index");
}
inline Form omega_y_r8(int i) {
  switch (i) {
    case 1: return const_form(Chart::R8, {4, 5}) + const_form(Chart::R8, {6, 7});
    case 2: return const_form(Chart::R8, {4, 6}) - const_form(Chart::R8, {5, 7});
    case 3: return const_form(Chart::R8, {4, 7}) + const_form(Chart::R8, {5, 6});
  }
  throw std::invalid_argument("omega index");
}
inline Form omega_r4(int i) {
  switch (i) {
    case 1: return const_form(Chart::R4, {0, 1}) + const_form(Chart::R4, {2, 3});
    case 2: return const_form(Chart::R4, {0, 2}) - const_form(Chart::R4, {1, 3});
    case 3: return const_form(Chart::R4, {0, 3}) + const_form(Chart::R4, {1, 2});
  }
  throw std::invalid_argument("omega index");
}
inline Form omega_r4_asd(int i) {
  switch (i) {
    case 1: return const_form(Chart::R4, {0, 1}) - const_form(Chart::R4, {2, 3});
    case 2: return const_form(Chart::R4, {0, 2}) + const_form(Chart::R4, {1, 3});
    case 3: return const_form(Chart::R4, {0, 3}) - const_form(Chart::R4, {1, 2});
  }
  throw std::invalid_argument("omega index");
}

inline Form vol_r8() { return const_form(Chart::R8, {0, 1, 2, 3, 4, 5, 6, 7}); }
inline Form vol_x_r8() { return const_form(Chart::R8, {0, 1, 2, 3}); }
inline Form vol_y_r8() { return const_form(Chart::R8, {4, 5, 6, 7}); }

// Psi0 = dx0123 + dy0123 + w1^x w1^y + w2^x w2^y - w3^x w3^y.
inline Form psi0_r8() {
  Form f = vol_x_r8() + vol_y_r8();
  f += wedge(omega_x_r8(1), omega_y_r8(1));
  f += wedge(omega_x_r8(2), omega_y_r8(2));
  f -= wedge(omega_x_r8(3), omega_y_r8(3));
  return f;
}

// Model positive 3-form on R7 (axes: x1,x2,x3,y0..y3) and its dual 4-form.
inline Form omega_y_r7(int i) {
  switch (i) {
    case 1: return const_form(Chart::R7, {3, 4}) + const_form(Chart::R7, {5, 6});
    case 2: return const_form(Chart::R7, {3, 5}) - const_form(Chart::R7, {4, 6});
    case 3: return const_form(Chart::R7, {3, 6}) + const_form(Chart::R7, {4, 5});
  }
  throw std::invalid_argument("omega index");
}
inline Form phi0_r7() {
  Form f = const_form(Chart::R7, {0, 1, 2});
  f += wedge(const_form(Chart::R7, {0}), omega_y_r7(1));
  f += wedge(const_form(Chart::R7, {1}), omega_y_r7(2));
  f -= wedge(const_form(Chart::R7, {2}), omega_y_r7(3));
  return f;
}
inline Form psi0_r7() { return hodge_star(phi0_r7()); }

// Kahler form and holomorphic volume form for z1 = x0 + i x1, z2 = x2 + i x3,
// z3 = y0 + i y1, z4 = y2 + i y3. Complex forms are carried as (re, im) pairs.
struct CForm {
  Form re, im;
};
inline CForm cwedge(const CForm& a, const CForm& b) {
  return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}
inline CForm dz(int pair) {
  // pair 0..3 -> (re axis, im axis) = (0,1), (2,3), (4,5), (6,7)
  return {const_form(Chart::R8, {2 * pair}), const_form(Chart::R8, {2 * pair + 1})};
}
inline Form holomorphic_volume_re() {
  CForm w = cwedge(cwedge(dz(0), dz(1)), cwedge(dz(2), dz(3)));
  return w.re;
}
inline Form kahler_omega_r8() { return omega_x_r8(1) + omega_y_r8(1); }

// Radial contractions: zeta_i^x = r . w_i^x etc. (polynomial 1-forms on R8).
inline Form zeta_x(int i) {
  return interior_first(VecField::radial(Chart::R8).comp, omega_x_r8(i));
}
inline Form zeta_y(int i) {
  return interior_first(VecField::radial(Chart::R8).comp, omega_y_r8(i));
}
inline Form nu_x() {
  return interior_first(VecField::radial(Chart::R8).comp, vol_x_r8());
}
inline Form nu_y() {
  return interior_first(VecField::radial(Chart::R8).comp, vol_y_r8());
}

// Sp(2)-invariant frames: zeta_i, w_i circ, w_i bar, nu, nubar.
inline Form zeta_frame(int i) { return zeta_x(i) + zeta_y(i); }
inline Form omega_circ(int i) { return omega_x_r8(i) + omega_y_r8(i); }
inline Form omega_bar(int i) {
  Form f = omega_circ(i);
  int j = i % 3 + 1, k = j % 3 + 1;  // (i,j,k) cyclic, eps_ijk = +1
  f -= wedge(zeta_frame(j), zeta_frame(k));
  return f;
}
inline Form nu_frame() {
  return wedge(wedge(zeta_frame(1), zeta_frame(2)), zeta_frame(3));
}

// Ambient representative of the round-S7 Hodge dual of a tangential k-form
// value: *_{S7} a = (-1)^k r . (*_{R8} a). Applied to the vertical volume it
// gives the horizontal volume form nubar.
inline Form sphere_star_ambient(const Form& tangential, int degree) {
  Form s = hodge_star(tangential);
  Form r = interior_first(VecField::radial(Chart::R8).comp, s);
  return (degree % 2) ? -r : r;
}
inline Form nubar_frame() { return sphere_star_ambient(nu_frame(), 3); }

// phi_std as an ambient polynomial 3-form, both directly and expanded.
inline Form phi_std_ambient() {
  return interior_first(VecField::radial(Chart::R8).comp, psi0_r8());
}
inline Form phi_std_expanded() {
  Form f = nu_x() + nu_y();
  f += wedge(zeta_x(1), omega_y_r8(1)) + wedge(zeta_y(1), omega_x_r8(1));
  f += wedge(zeta_x(2), omega_y_r8(2)) + wedge(zeta_y(2), omega_x_r8(2));
  f -= wedge(zeta_x(3), omega_y_r8(3)) + wedge(zeta_y(3), omega_x_r8(3));
  return f;
}
// Sp(2)-frame expression nu + z1 wb1 + z2 wb2 - z3 wb3 (equals phi_std on S7).
inline Form phi_std_sp2_frame() {
  Form f = nu_frame();
  f += wedge(zeta_frame(1), omega_bar(1));
  f += wedge(zeta_frame(2), omega_bar(2));
  f -= wedge(zeta_frame(3), omega_bar(3));
  return f;
}

// E = sum over all (i,j,k) of eps_ijk zeta_i ^ zeta_j ^ wbar_k
//   = 2 (z1 z2 wb3 + z2 z3 wb1 + z3 z1 wb2).
inline Form eps_zeta_zeta_omegabar() {
  Form f = wedge(wedge(zeta_frame(1), zeta_frame(2)), omega_bar(3));
  f += wedge(wedge(zeta_frame(2), zeta_frame(3)), omega_bar(1));
  f += wedge(wedge(zeta_frame(3), zeta_frame(1)), omega_bar(2));
  return Rat(2) * f;
}

// The Sp(2) Sp(1)-invariant family phi_{a,b} = a nu - b sum_i zeta_i ^ wbar_i.
inline Form phi_ab(const Rat& a, const Rat& b) {
  Form f = a * nu_frame();
  for (int i = 1; i <= 3; ++i) f -= b * wedge(zeta_frame(i), omega_bar(i));
  return f;
}

// Dual 4-form psi_{a,b} = a^{-2/3} b^2 nubar - (a^{1/3} b / 2) E, written with
// the all-indices epsilon sum E above. Requires a^{1/3} rational.
inline Form psi_ab(const Rat& a, const Rat& b, const Rat& cbrt_a) {
  Rat a23 = cbrt_a * cbrt_a;
  Form f = (b * b / a23) * nubar_frame();
  f -= (cbrt_a * b / Rat(2)) * eps_zeta_zeta_omegabar();
  return f;
}

// The squashed structure phi_sq = (3/5)^3 phi_{1,5}; its definitional
// expansion on the x/y frames is checked in tests against this form.
inline Form phi_sq() { return Rat(27, 125) * phi_ab(Rat(1), Rat(5)); }

// 2-form attached to an antisymmetric matrix N by eta(u, v) = <N u, v>.
inline Form two_form_of_matrix(const QMat& N, Chart ch) {
  int n = chart_dim(ch);
  Form f(ch, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Rat v = N(static_cast<size_t>(b), static_cast<size_t>(a));
      if (!v.is_zero()) f.add(static_cast<Mask>((1u << a) | (1u << b)), RatFn(v));
    }
  return f;
}

// F_{x,y} spanner: eta_L = sum L_ij dy^i ^ dx^j for a 4x4 matrix L.
inline Form fueter_two_form(const QMat& L) {
  Form f(Chart::R8, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rat& v = L(static_cast<size_t>(i), static_cast<size_t>(j));
      if (v.is_zero()) continue;
      // dy^i ^ dx^j = -dx^j ^ dy^i; masks store ascending axes.
      f.add(static_cast<Mask>((1u << (i + 4)) | (1u << j)), RatFn(-v));
    }
  return f;
}

// Block-diagonal action of the complex structures on R8 = H_x + H_y.
inline QMat complex_structure_r8(int i) {
  QMat m(8, 8);
  const QMat& c = complex_structure(i);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      m(static_cast<size_t>(a), static_cast<size_t>(b)) = c(static_cast<size_t>(a), static_cast<size_t>(b));
      m(static_cast<size_t>(a + 4), static_cast<size_t>(b + 4)) = c(static_cast<size_t>(a), static_cast<size_t>(b));
    }
  return m;
}

}  // namespace g2v
