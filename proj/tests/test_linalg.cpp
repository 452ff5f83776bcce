#include <doctest.h>

#include "oracle.hpp"
#include "rbd/ball.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/linalg.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

namespace {

IntMatrix scaled(const RatMatrix& m, long factor) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational x = m(i, j) * factor;
      REQUIRE(x.get_den() == 1);
      out(i, j) = x.get_num();
    }
  return out;
}

const IntMatrix kWahl{{-4, 1, 1, 1}, {1, -3, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -3}};

}  // namespace

TEST_CASE("smith normal form of a diagonal pair") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto s = smith_normal_form(a);
  CHECK(s.invariant_factors() == make_vector({1, 6}));
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("smith normal form of the reference forms") {
  CHECK(smith_normal_form(family_form(3, false)).invariant_factors() == make_vector({1, 1, 1, 1, 7, 7}));
  CHECK(smith_normal_form(kWahl).invariant_factors() == make_vector({1, 1, 3, 27}));
}

TEST_CASE("smith normal form is deterministic and handles zero and rectangular input") {
  const IntMatrix a{{4, 6, 2}, {2, 8, 10}};
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  CHECK(s1.u == s2.u);
  CHECK(s1.v == s2.v);
  CHECK(s1.invariant_factors() == make_vector({2, 2}));
  CHECK(smith_normal_form(IntMatrix(2, 3)).invariant_factors() == make_vector({0, 0}));
}

TEST_CASE("inverse of the C_{5,3} chain") {
  // The reference table lists the chain in the order (-2,-5,-3).
  const IntMatrix a{{-2, 1, 0}, {1, -5, 1}, {0, 1, -3}};
  const IntMatrix want{{14, 3, 1}, {3, 6, 2}, {1, 2, 9}};
  CHECK(scaled(invert(a), -25) == want);
  const IntMatrix b{{-3, 1, 0}, {1, -5, 1}, {0, 1, -2}};
  CHECK(scaled(invert(b), -25) == permuted(want, {2, 1, 0}));
  CHECK(invert(b) == oracle::inverse(b));
}

TEST_CASE("inverse of the Wahl(2,2,2) form") {
  const IntMatrix want{{27, 9, 9, 9}, {9, 30, 3, 3}, {9, 3, 30, 3}, {9, 3, 3, 30}};
  CHECK(scaled(invert(kWahl), -81) == want);
  CHECK(invert(IntMatrix{{-1}}) == RatMatrix{{Rational(-1)}});
}

TEST_CASE("invert and determinant errors") {
  CHECK_THROWS_AS(invert(IntMatrix{{1, 2}, {2, 4}}), Error);
  try {
    invert(IntMatrix{{1, 2}, {2, 4}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularMatrix);
  }
  try {
    determinant(IntMatrix(2, 3));
    FAIL("expected NotSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSquare);
  }
}

TEST_CASE("determinant matches the Leibniz expansion") {
  CHECK(determinant(kWahl) == oracle::det_leibniz(kWahl));
  CHECK(determinant(family_form(3, false)) == 49);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(IntMatrix{{-3, 1, 0}, {1, -5, 1}, {0, 1, -2}}));
  CHECK_FALSE(is_negative_definite(IntMatrix{{0}}));
  // Inverting the reference inverse -(1/7)[[2,1,1],[1,3,1],[1,1,2]] gives this form.
  const IntMatrix mirror{{-5, 1, 2}, {1, -3, 1}, {2, 1, -5}};
  CHECK(scaled(invert(mirror), -7) == IntMatrix{{2, 1, 1}, {1, 3, 1}, {1, 1, 2}});
  CHECK(is_negative_definite(mirror));
  CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 2}, {2, -1}}));
  try {
    is_negative_definite(IntMatrix{{-1, 1}, {0, -1}});
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
}

TEST_CASE("kernel of the enhanced Wahl matrix") {
  const IntMatrix p2 = enhanced_matrix(kWahl, {make_vector({1, -1, 1, 0}), Integer(-1)});
  const IntMatrix printed{{-4, 1, 1, 1, 1}, {1, -3, 0, 0, -1}, {1, 0, -3, 0, 1}, {1, 0, 0, -3, 0}, {1, -1, 1, 0, -1}};
  CHECK(p2 == printed);
  CHECK(rank(p2) == 4);
  CHECK(kernel_primitive(p2) == make_vector({3, -2, 4, 1, 9}));
}

TEST_CASE("kernel of the C_{4,1} enhanced matrix") {
  const auto g = park_chain(4, 1);
  const IntMatrix e = enhanced_matrix(intersection_form(g), casson_harer_handle(4));
  const auto k = kernel_primitive(e);
  REQUIRE(k);
  // (handle, v1, v2, v3) = (-4, 1, -2, -1) up to sign, handle last here.
  CHECK(*k == make_vector({-1, 2, 1, 4}));
  const IntVector image = e * *k;
  for (const auto& x : image) CHECK(x == 0);
}

TEST_CASE("kernel edge cases") {
  CHECK_FALSE(kernel_primitive(kWahl).has_value());
  try {
    kernel_primitive(IntMatrix(2, 2));
    FAIL("expected KernelRankTooHigh");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KernelRankTooHigh);
  }
}

TEST_CASE("integer solutions through the Smith form") {
  const IntMatrix a{{2, 1}, {1, 2}};
  const auto s = smith_normal_form(a);
  CHECK(solve_integer(s, make_vector({3, 3})) == make_vector({1, 1}));
  CHECK_FALSE(solve_integer(s, make_vector({1, 0})).has_value());
}
