#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2v/jet.hpp"
#include "g2v/poly.hpp"
#include "g2v/prng.hpp"
#include "g2v/ratfn.hpp"

#include <map>

using namespace g2v;

namespace {

Poly norm_sq(int first, int count) {
  Poly p;
  for (int i = first; i < first + count; ++i) p += Poly::var(i) * Poly::var(i);
  return p;
}
Poly nx2() { return norm_sq(0, 4); }  // |x|^2
Poly ny2() { return norm_sq(4, 4); }  // |y|^2

// Independent multiplication oracle: plain term-by-term expansion into a
// bare map, no use of Poly arithmetic.
std::map<Expo, Rat> naive_mul(const Poly& a, const Poly& b) {
  std::map<Expo, Rat> acc;
  for (auto& [xa, ca] : a.terms())
    for (auto& [xb, cb] : b.terms()) {
      Expo x;
      for (int i = 0; i < kNumCoords; ++i) x.e[i] = static_cast<uint8_t>(xa.e[i] + xb.e[i]);
      auto [it, fresh] = acc.emplace(x, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

Poly random_poly(SplitMix64& rng, int terms, int max_deg = 3) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Expo x;
    for (int d = 0; d < max_deg; ++d) x.e[rng.below(kNumCoords)] += rng.below(2);
    p += Poly::monomial(rng.small_rational(), x);
  }
  return p;
}

std::array<Rat, kNumCoords> random_point(SplitMix64& rng) {
  std::array<Rat, kNumCoords> pt;
  for (auto& v : pt) v = rng.small_rational(3, 3);
  return pt;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rat(2, 6) == Rat(1, 3));
  CHECK(Rat(-4, -8) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK(Rat(0, 7).den() == 1);
  CHECK(Rat(7, 2).inverse() == Rat(2, 7));
  CHECK_THROWS_AS(Rat(1).operator/=(Rat(0)), std::domain_error);
  CHECK(Rat(9, 4).sqrt_exact() == Rat(3, 2));
  CHECK_THROWS_AS(Rat(2).sqrt_exact(), std::domain_error);
  CHECK(Rat::parse("-22/7") == Rat(-22, 7));
}

TEST_CASE("polynomial product of monomials") {
  Poly x0 = Poly::var(0);
  Poly sq = x0 * x0;
  Expo e;
  e.e[0] = 2;
  CHECK(sq == Poly::monomial(Rat(1), e));
}

TEST_CASE("polynomial cancellation to zero") {
  Poly s = Poly::var(0) + Poly::var(4);
  CHECK((s - s).is_zero());
}

TEST_CASE("norm-square product expands to 16 terms, matches naive oracle") {
  Poly prod = nx2() * ny2();
  CHECK(prod.term_count() == 16);
  CHECK(prod.degree() == 4);
  CHECK(prod.terms() == naive_mul(nx2(), ny2()));
}

TEST_CASE("polynomial multiplication matches naive oracle on random inputs") {
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
    CHECK((a * b).terms() == naive_mul(a, b));
  }
}

TEST_CASE("partial derivatives") {
  CHECK((Poly::var(0) * Poly::var(1)).deriv(0) == Poly::var(1));
  CHECK(nx2().deriv(2) == Rat(2) * Poly::var(2));
  CHECK(Poly::constant(Rat(5, 3)).deriv(7).is_zero());
}

TEST_CASE("Leibniz rule holds exactly on random pairs") {
  SplitMix64 rng(23);
  for (int i = 0; i < 12; ++i) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
    int c = static_cast<int>(rng.below(kNumCoords));
    CHECK((a * b).deriv(c) == a.deriv(c) * b + a * b.deriv(c));
  }
}

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(37);
  for (int i = 0; i < 8; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
  for (int i = 0; i < 6; ++i) {
    RatFn a(random_poly(rng, 3), random_poly(rng, 2) + Poly::constant(Rat(1)));
    RatFn b(random_poly(rng, 3), random_poly(rng, 2) + Poly::constant(Rat(1)));
    RatFn c(random_poly(rng, 3), random_poly(rng, 2) + Poly::constant(Rat(1)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rational function arithmetic") {
  RatFn inv_ny(Poly::constant(Rat(1)), ny2());
  RatFn ny(ny2());
  CHECK(inv_ny * ny == RatFn(Rat(1)));

  RatFn s(nx2() + ny2());
  RatFn f(Poly::constant(Rat(1)), nx2() + ny2());
  CHECK(f + RatFn() == f);

  RatFn part_y(ny2(), nx2() + ny2());
  RatFn part_x(nx2(), nx2() + ny2());
  CHECK(part_y + part_x == RatFn(Rat(1)));

  CHECK_THROWS_AS(f / RatFn(), std::domain_error);
}

TEST_CASE("evaluation, including poles") {
  RatFn f(Poly::constant(Rat(1)), nx2() + ny2());
  std::array<Rat, kNumCoords> e0{};
  e0[0] = Rat(1);
  CHECK(f.eval(e0) == Rat(1));

  RatFn part_y(ny2(), nx2() + ny2());
  std::array<Rat, kNumCoords> p{};
  p[0] = Rat(1);
  p[4] = Rat(1);
  CHECK(part_y.eval(p) == Rat(1, 2));

  RatFn inv_ny(Poly::constant(Rat(1)), ny2());
  CHECK_THROWS_AS(inv_ny.eval(e0), PoleError);  // y = 0 there
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(53);
  for (int i = 0; i < 10; ++i) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
    auto pt = random_point(rng);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("composition with quaternion-inverse substitutions") {
  // Substitute w := y^{-1} into functions of w; w occupies the y slots.
  std::array<RatFn, kNumCoords> sub{};
  for (int i = 0; i < 4; ++i) sub[static_cast<size_t>(i)] = RatFn::var(i);
  RatFn inv_n(Poly::constant(Rat(1)), ny2());
  sub[4] = RatFn(Poly::var(4), ny2());
  for (int i = 5; i < 8; ++i) sub[static_cast<size_t>(i)] = RatFn(-Poly::var(i), ny2());

  CHECK(RatFn::var(4).compose(sub) == RatFn(Poly::var(4), ny2()));
  CHECK(RatFn(Rat(5, 7)).compose(sub) == RatFn(Rat(5, 7)));

  RatFn w_norm(ny2());  // |w|^2 written in the w-coordinates
  CHECK(w_norm.compose(sub) == inv_n);
}

TEST_CASE("equality by cross-multiplication is an equivalence relation") {
  Poly s = nx2() + ny2();
  RatFn a(Poly::var(0) * s, s);
  RatFn b(Poly::var(0));
  RatFn c(Poly::var(0) * ny2(), ny2());
  CHECK(a == a);
  CHECK(a == b);
  CHECK(b == a);
  CHECK(b == c);
  CHECK(a == c);
  CHECK_FALSE(a == RatFn::var(1));
}

TEST_CASE("term budget guardrail fails loudly") {
  size_t saved = Poly::term_budget();
  Poly::term_budget() = 8;
  CHECK_THROWS_AS(nx2() * ny2(), PolyBudgetExceeded);
  Poly::term_budget() = saved;
}

TEST_CASE("graded-lexicographic serialization is deterministic") {
  Poly p = Poly::var(4) + Poly::var(0) + Poly::var(0) * Poly::var(0) +
           Poly::constant(Rat(-1, 2));
  CHECK(p.str() == "-1/2 + y0 + x0 + x0^2");
}

TEST_CASE("jets compute exact first and second derivatives") {
  // f = x0^2 * x1 at (2,3), directions e0 and e1.
  Poly f = Poly::var(0) * Poly::var(0) * Poly::var(1);
  std::array<Jet2, kNumCoords> pt;
  for (int i = 0; i < kNumCoords; ++i) pt[static_cast<size_t>(i)] = Jet2(Rat(0));
  pt[0] = Jet2(Rat(2), Rat(1), Rat(0), Rat(0));
  pt[1] = Jet2(Rat(3), Rat(0), Rat(1), Rat(0));
  Jet2 j = f.eval(pt);
  CHECK(j.v == Rat(12));
  CHECK(j.d1 == Rat(12));  // 2 x0 x1
  CHECK(j.d2 == Rat(4));   // x0^2
  CHECK(j.d12 == Rat(4));  // 2 x0

  // g = 1/x0 at x0 = 2 with both directions e0: d12 is the full second
  // derivative 2/x0^3.
  RatFn g(Poly::constant(Rat(1)), Poly::var(0));
  std::array<Jet2, kNumCoords> pt2;
  for (int i = 0; i < kNumCoords; ++i) pt2[static_cast<size_t>(i)] = Jet2(Rat(0));
  pt2[0] = Jet2(Rat(2), Rat(1), Rat(1), Rat(0));
  Jet2 k = g.eval_jet(pt2);
  CHECK(k.v == Rat(1, 2));
  CHECK(k.d1 == Rat(-1, 4));
  CHECK(k.d2 == Rat(-1, 4));
  CHECK(k.d12 == Rat(1, 4));

  // Pole detection in jet evaluation.
  pt2[0] = Jet2(Rat(0), Rat(1), Rat(1), Rat(0));
  CHECK_THROWS_AS(g.eval_jet(pt2), PoleError);
}

TEST_CASE("rational function derivative via quotient rule") {
  RatFn f(Poly::var(0), ny2());
  // d/dy0 (x0/|y|^2) = -2 x0 y0 / |y|^4
  RatFn expect(Rat(-2) * (Poly::var(0) * Poly::var(4)), ny2() * ny2());
  CHECK(f.deriv(4) == expect);
}
