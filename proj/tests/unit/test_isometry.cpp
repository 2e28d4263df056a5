#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "k3pell/isometry.hpp"
#include "k3pell/pell.hpp"
#include "k3pell/qform.hpp"
#include "oracle.hpp"

using namespace k3pell;

namespace {

bool valid_order_disc(long D) {
  return D > 0 && (D % 4 == 0 || D % 4 == 1) && !is_square(Int(D));
}

EvenLattice gram(long g00, long g01, long g11) { return EvenLattice::from_gram(g00, g01, g11); }

Int max_abs_entry(const Mat2& m) {
  Int out = 0;
  for (const Int* e : {&m.m00, &m.m01, &m.m10, &m.m11}) out = std::max<Int>(out, abs(*e));
  return out;
}

}  // namespace

TEST_SUITE("isometry") {
  TEST_CASE("g_from_pell examples") {
    CHECK(isometry::g_from_pell(gram(4, 2, -4), {18, 4, 20, 1}).m == Mat2{5, 8, 8, 13});
    CHECK(isometry::g_from_pell(gram(2, 4, 2), {14, 4, 12, 1}).m == Mat2{-1, -4, 4, 15});
    // v = 1/5 on a lattice of content 5
    CHECK(isometry::g_from_pell(gram(10, 5, -10), {3, 1, 125, 5}).m == Mat2{1, 1, 1, 2});
    CHECK_THROWS_AS(isometry::g_from_pell(gram(4, 2, -4), {4, 1, 20, 1}), PreconditionError);
    CHECK_THROWS_AS(isometry::g_from_pell(gram(2, 4, 2), {3, 1, 5, 1}), PreconditionError);
  }

  TEST_CASE("pell_from_isometry inverts g_from_pell") {
    for (long D = 5; D <= 300; ++D) {
      if (!valid_order_disc(D)) continue;
      for (const auto& cls : qform::class_inventory(D).classes) {
        const EvenLattice& L = cls.representative();
        const auto g0 = isometry::so_plus_generator(L);
        REQUIRE(g0.has_value());
        Mat2 g = g0->m;
        for (int j = 1; j <= 3; ++j, g = g * g0->m) {
          const PellSolution s = isometry::pell_from_isometry({g, L});
          CAPTURE(L.to_string());
          CHECK(isometry::g_from_pell(L, s).m == g);
          CHECK(s.norm() == 1);
        }
      }
    }
  }

  TEST_CASE("v as a rational") {
    const Rational v = isometry::v_of({3, 1, 125, 5});
    CHECK(v == Rational{1, 5});
    CHECK(isometry::v_of({18, 4, 20, 1}).is_integer());
    CHECK(Rational::make(4, -6) == Rational{-2, 3});
  }

  TEST_CASE("orientation") {
    const EvenLattice L = gram(4, 2, -4);
    CHECK(isometry::orientation(L, Mat2::identity()) == Orientation::kSOPlus);
    CHECK(isometry::orientation(L, Mat2::scalar(-1)) == Orientation::kSOMinus);
    CHECK(isometry::orientation(L, Mat2{5, 8, 8, 13}) == Orientation::kSOPlus);
    CHECK(isometry::orientation(L, Mat2{1, 0, 1, -1}) == Orientation::kOPlusNotSO);
    CHECK(isometry::orientation(L, Mat2{-1, 0, -1, 1}) == Orientation::kOMinusNotSO);
    CHECK(isometry::is_isometry(L, Mat2{1, 0, 1, -1}));
    CHECK_FALSE(isometry::is_isometry(L, Mat2{1, 1, 0, 1}));
    CHECK_THROWS_AS(isometry::orientation(L, Mat2{1, 1, 0, 1}), PreconditionError);
  }

  TEST_CASE("SO+ generators") {
    const auto g20 = isometry::so_plus_generator(gram(4, 2, -4));
    REQUIRE(g20.has_value());
    CHECK(g20->m == Mat2{1, 1, 1, 2});
    CHECK(mat_pow(g20->m, 3) == Mat2{5, 8, 8, 13});
    CHECK(isometry::so_plus_generator(gram(10, 5, -10))->m == Mat2{1, 1, 1, 2});
    CHECK(isometry::so_plus_generator(gram(2, 4, 2))->m == Mat2{0, -1, 1, 4});
    CHECK_FALSE(isometry::so_plus_generator(gram(2, 0, -2)).has_value());
  }

  TEST_CASE("SO+ elements within a box are generator powers (D <= 200)") {
    for (long D = 5; D <= 200; ++D) {
      if (!valid_order_disc(D)) continue;
      for (const auto& cls : qform::class_inventory(D).classes) {
        const EvenLattice& L = cls.representative();
        const Mat2 g0 = isometry::so_plus_generator(L)->m;
        const Int bound = std::min<Int>(std::max<Int>(max_abs_entry(g0), 1), 100);
        std::vector<Mat2> powers{Mat2::identity()};
        const Mat2 g0_inv = g0.inverse_unimodular();
        for (const Mat2* step : {&g0, &g0_inv}) {
          Mat2 g = *step;
          while (max_abs_entry(g) <= 100) {
            powers.push_back(g);
            g = g * *step;
          }
        }
        for (const Mat2& m : oracle::bf_isometries(L, bound.get_si())) {
          if (m.det() != 1 || m.trace() <= 0) continue;
          CAPTURE(L.to_string());
          CAPTURE(m.to_string());
          CHECK(std::find(powers.begin(), powers.end(), m) != powers.end());
        }
      }
    }
  }

  TEST_CASE("acts on the discriminant group") {
    CHECK(isometry::acts_eps_on_disc_group(gram(4, 2, -4), Mat2{5, 8, 8, 13}, -1));
    CHECK_FALSE(isometry::acts_eps_on_disc_group(gram(4, 2, -4), Mat2{5, 8, 8, 13}, 1));
    CHECK(isometry::acts_eps_on_disc_group(gram(2, 4, 2), Mat2{-1, -4, 4, 15}, 1));
    CHECK(isometry::acts_eps_on_disc_group(gram(6, 1, -4), Mat2::identity(), 1));
    // (g + I) Q^{-1} = (2 -1; 3 -2)
    const Mat2 Q{4, 2, 2, -4};
    const Mat2 prod = (Mat2{5, 8, 8, 13} - Mat2::scalar(-1)) * Q.adjugate();
    CHECK(prod.divisible_by(Q.det()));
    CHECK(Mat2{prod.m00 / Q.det(), prod.m01 / Q.det(), prod.m10 / Q.det(), prod.m11 / Q.det()} ==
          Mat2{2, -1, 3, -2});
  }

  TEST_CASE("alpha-beta decomposition") {
    const auto ab = isometry::decompose_alpha_beta(gram(4, 2, -4), Mat2{5, 8, 8, 13}, -1);
    REQUIRE(ab.has_value());
    CHECK(ab->alpha == 4);
    CHECK(ab->beta == 1);
    CHECK_FALSE(isometry::decompose_alpha_beta(gram(4, 2, -4), Mat2{5, 8, 8, 13}, 1).has_value());
    const auto ab12 = isometry::decompose_alpha_beta(gram(2, 4, 2), Mat2{-1, -4, 4, 15}, 1);
    REQUIRE(ab12.has_value());
    CHECK(ab12->alpha == 4);
    CHECK(ab12->beta == 1);
    CHECK_THROWS_AS(isometry::decompose_alpha_beta(gram(2, 4, 2), Mat2::identity(), 1),
                    PreconditionError);
    CHECK_THROWS_AS(isometry::decompose_alpha_beta(gram(2, 4, 2), Mat2::scalar(-1), 1),
                    PreconditionError);
  }

  TEST_CASE("acts_eps iff decomposition, D <= 500, powers up to 6") {
    for (long D = 5; D <= 500; ++D) {
      if (!valid_order_disc(D)) continue;
      for (const auto& cls : qform::class_inventory(D).classes) {
        const EvenLattice& L = cls.representative();
        const Mat2 g0 = isometry::so_plus_generator(L)->m;
        Mat2 g = g0;
        for (int j = 1; j <= 6; ++j, g = g * g0) {
          for (int eps : {1, -1}) {
            const auto ab = isometry::decompose_alpha_beta(L, g, eps);
            CAPTURE(L.to_string());
            CAPTURE(j);
            CAPTURE(eps);
            CHECK(isometry::acts_eps_on_disc_group(L, g, eps) == ab.has_value());
            if (ab) {
              CHECK(ab->alpha * ab->alpha - 2 * eps == g.trace());
              CHECK(ab->alpha * ab->alpha - Int(D) * ab->beta * ab->beta == 4 * eps);
            }
          }
        }
      }
    }
  }

  TEST_CASE("index of the eps-acting powers") {
    for (long D = 5; D <= 500; ++D) {
      if (!valid_order_disc(D)) continue;
      const unsigned expected = pell::solve_pell_neg4(D) ? 1 : 2;
      for (const auto& cls : qform::class_inventory(D).classes) {
        if (!cls.primitive) continue;
        const EvenLattice& L = cls.representative();
        const Mat2 g0 = isometry::so_plus_generator(L)->m;
        Mat2 g = g0;
        for (unsigned j = 1; j <= 8; ++j, g = g * g0) {
          const bool acts = isometry::acts_eps_on_disc_group(L, g, 1) ||
                            isometry::acts_eps_on_disc_group(L, g, -1);
          CAPTURE(L.to_string());
          CAPTURE(j);
          CHECK(acts == (j % expected == 0));
        }
      }
    }
  }

  TEST_CASE("Salem data") {
    const SalemData s = isometry::salem_data(Mat2{5, 8, 8, 13});
    CHECK(s.trace == 18);
    CHECK(s.coeffs == std::array<Int, 3>{1, -18, 1});
    CHECK(s.radius.u == 18);
    CHECK(s.radius.radicand == 320);
    CHECK(s.radius.decimal.rfind("17.944", 0) == 0);
    CHECK(s.entropy == doctest::Approx(std::log(17.94427190999916)).epsilon(1e-12));

    const SalemData id = isometry::salem_data(Mat2::identity());
    CHECK(id.trace == 2);
    CHECK(id.radius.radicand == 0);
    CHECK(id.radius.decimal.rfind("1", 0) == 0);
    CHECK(id.entropy == 0.0);

    const SpectralRadius r14 = isometry::spectral_radius(Mat2{-1, -4, 4, 15});
    CHECK(r14.u == 14);
    CHECK(r14.radicand == 192);
    CHECK(isometry::entropy(Mat2{-1, -4, 4, 15}) ==
          doctest::Approx(std::log((14 + std::sqrt(192.0)) / 2)).epsilon(1e-12));
  }
}
