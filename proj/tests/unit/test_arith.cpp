#include <doctest.h>

#include "k3pell/arith.hpp"

using namespace k3pell;

TEST_SUITE("arith") {
  TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(is_square(Int("100000000000000000000")));
    CHECK_FALSE(is_square(Int("100000000000000000001")));
    CHECK_FALSE(is_square(-4));
    CHECK(exact_sqrt(320) == std::nullopt);
    CHECK(*exact_sqrt(324) == 18);
  }

  TEST_CASE("floor division and residues") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(mod_floor(-7, 3) == 2);
    CHECK(mod_floor(7, -3) == 1);
  }

  TEST_CASE("squarefree parts") {
    CHECK(is_squarefree(29));
    CHECK_FALSE(is_squarefree(125));
    CHECK(square_part_root(125) == 5);
    CHECK(square_part_root(20) == 2);
    CHECK(square_part_root(1) == 1);
  }

  TEST_CASE("matrix algebra") {
    const Mat2 u{5, 8, 8, 13};
    CHECK(u.det() == 1);
    CHECK(u.trace() == 18);
    CHECK(u * u.inverse_unimodular() == Mat2::identity());
    CHECK(mat_pow(Mat2{1, 1, 1, 2}, 3) == u);
    CHECK(mat_pow(u, 0).is_identity());
    CHECK(Mat2{4, 6, 8, 10}.divisible_by(2));
    CHECK_FALSE(Mat2{4, 6, 8, 11}.divisible_by(2));
    CHECK_THROWS_AS(Mat2(2, 0, 0, 1).inverse_unimodular(), std::exception);
  }
}
