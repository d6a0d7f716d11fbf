#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2v/prng.hpp"
#include "g2v/quat.hpp"

using namespace g2v;

namespace {

QuatR rand_quat(SplitMix64& rng) {
  return {rng.small_rational(), rng.small_rational(), rng.small_rational(),
          rng.small_rational()};
}

std::vector<Rat> to_vec(const QuatR& q) { return {q.c[0], q.c[1], q.c[2], q.c[3]}; }
QuatR from_vec(const std::vector<Rat>& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

TEST_CASE("basis multiplication matches the sign convention e1 = -i etc.") {
  CHECK(QuatR::unit(1) * QuatR::unit(2) == -QuatR::unit(3));  // (-i)(-j) = k = -e3
  CHECK(QuatR::unit(2) * QuatR::unit(1) == QuatR::unit(3));
  CHECK(QuatR::unit(2) * QuatR::unit(3) == -QuatR::unit(1));
  CHECK(QuatR::unit(3) * QuatR::unit(1) == -QuatR::unit(2));
  for (int i = 1; i < 4; ++i) CHECK(QuatR::unit(i) * QuatR::unit(i) == -QuatR::unit(0));
  QuatR q{Rat(2), Rat(-1), Rat(3), Rat(5)};
  CHECK(QuatR::unit(0) * q == q);
}

TEST_CASE("norm and conjugation") {
  QuatR q{Rat(1), Rat(1), Rat(0), Rat(0)};
  CHECK(q * q.conj() == Rat(2) * QuatR::unit(0));
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) {
    QuatR a = rand_quat(rng), b = rand_quat(rng);
    CHECK((a * b).conj() == b.conj() * a.conj());
    CHECK((a * b) * a == a * (b * a));
  }
  // associativity on random triples
  for (int i = 0; i < 10; ++i) {
    QuatR a = rand_quat(rng), b = rand_quat(rng), c = rand_quat(rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("inverse over rational functions: x * x^{-1} = e0") {
  Quat<RatFn> x = quat_coord_x_fn();
  Quat<RatFn> xi = x.inverse();
  Quat<RatFn> prod = x * xi;
  CHECK(prod.c[0] == RatFn(Rat(1)));
  for (int i = 1; i < 4; ++i) CHECK(prod.c[static_cast<size_t>(i)].is_zero());

  // Inverse of the coordinate quaternion y is conj(y)/|y|^2.
  Quat<RatFn> y = quat_coord_y_fn();
  Quat<RatFn> yi = y.inverse();
  RatFn ny2 = y.norm_sq();
  CHECK(yi.c[0] == y.c[0] / ny2);
  CHECK(yi.c[1] == -y.c[1] / ny2);

  CHECK(QuatR::unit(0).inverse() == QuatR::unit(0));
}

TEST_CASE("complex structures act by right multiplication") {
  // I1(e0) = e1, I1(e2) = e3, and every I_a squares to -Id.
  CHECK(apply_complex_structure(1, to_vec(QuatR::unit(0))) == to_vec(QuatR::unit(1)));
  CHECK(apply_complex_structure(1, to_vec(QuatR::unit(2))) == to_vec(QuatR::unit(3)));
  SplitMix64 rng(7);
  for (int a = 1; a <= 3; ++a) {
    QMat sq = complex_structure(a) * complex_structure(a);
    CHECK(sq == -QMat::identity(4));
    QuatR v = rand_quat(rng);
    CHECK(from_vec(complex_structure(a).apply(to_vec(v))) == v * QuatR::unit(a));
  }
}

TEST_CASE("right-multiplication operators compose contravariantly") {
  // R_a R_b = R_{ba}: applying I2 then I1 multiplies by e2 e1 on the right.
  CHECK(complex_structure(1) * complex_structure(2) ==
        right_mult_matrix(QuatR::unit(2) * QuatR::unit(1)));
  // e1 e2 = -e3, so in operator order I2 I1 = R_{e1 e2} = -I3.
  CHECK(complex_structure(2) * complex_structure(1) == -complex_structure(3));
  CHECK(complex_structure(1) * complex_structure(2) == complex_structure(3));
}

TEST_CASE("fueter condition examples") {
  CHECK(is_fueter(QMat::identity(4)));
  CHECK(is_fueter(complex_structure(1)));
  CHECK_FALSE(is_fueter(complex_structure(3)));
  // The defect of I3 is exactly 4*I3.
  CHECK(fueter_defect(complex_structure(3)) == Rat(4) * complex_structure(3));
}

TEST_CASE("fueter space has dimension 12 and the explicit basis spans it") {
  auto basis = fueter_basis();
  REQUIRE(basis.size() == 12);
  std::vector<std::vector<Rat>> rows;
  for (auto& L : basis) {
    CHECK(is_fueter(L));
    rows.push_back(flatten(L));
  }
  CHECK(rank_of_rows(rows) == 12);

  auto null = fueter_operator_nullspace();
  CHECK(null.size() == 12);

  // Mutual containment: nullspace plus explicit basis still has rank 12.
  std::vector<std::vector<Rat>> all = rows;
  for (auto& v : null) all.push_back(v);
  CHECK(rank_of_rows(all) == 12);

  // I3 is not in the span: appending it bumps the rank to 13.
  rows.push_back(flatten(complex_structure(3)));
  CHECK(rank_of_rows(rows) == 13);
}

TEST_CASE("left and right multiplications commute") {
  SplitMix64 rng(17);
  for (int i = 0; i < 6; ++i) {
    QMat L = left_mult_matrix(rand_quat(rng));
    QMat R = right_mult_matrix(rand_quat(rng));
    CHECK(L * R == R * L);
  }
}
