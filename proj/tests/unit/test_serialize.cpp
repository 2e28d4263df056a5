#include <doctest.h>

#include "k3pell/serialize.hpp"

using namespace k3pell;
using Json = nlohmann::json;
namespace kj = k3pell::json;

TEST_SUITE("serialize") {
  TEST_CASE("integers") {
    CHECK(kj::integer(-20) == Json(-20));
    const Int big("123456789012345678901234567890");
    CHECK(kj::integer(big) == Json("123456789012345678901234567890"));
    CHECK(kj::parse_integer(kj::integer(big)) == big);
    CHECK(kj::parse_integer(Json(7)) == 7);
    CHECK_THROWS_AS(kj::parse_integer(Json("12x")), PreconditionError);
    CHECK_THROWS_AS(kj::parse_integer(Json(1.5)), PreconditionError);
  }

  TEST_CASE("lattice schema round trip") {
    const EvenLattice L{2, 2, -2};
    const Json j = kj::lattice(L);
    CHECK(j == Json::parse(R"({"gram": [[4, 2], [2, -4]]})"));
    CHECK(kj::parse_lattice(j) == L);
    CHECK_THROWS_AS(kj::parse_lattice(Json::parse(R"({"gram": [[3, 2], [2, -4]]})")),
                    PreconditionError);
    CHECK_THROWS_AS(kj::parse_lattice(Json::parse(R"({"gram": [[4, 2], [1, -4]]})")),
                    PreconditionError);
  }

  TEST_CASE("inventory schema") {
    const Json j = kj::inventory(qform::class_inventory(20));
    CHECK(j.at("D") == 20);
    REQUIRE(j.at("classes").is_array());
    for (const auto& c : j.at("classes")) {
      CHECK(c.contains("gram"));
      CHECK(c.at("primitive").is_boolean());
      CHECK(c.at("in_L_prime").is_boolean());
    }
    CHECK(j.at("gl2_class_count") == 2);
  }

  TEST_CASE("isometry schema") {
    const Isometry g{Mat2{1, 1, 1, 2}, EvenLattice{5, 5, -5}};
    const Json j = kj::isometry(g);
    CHECK(j.at("matrix") == Json::parse("[[1, 1], [1, 2]]"));
    CHECK(j.at("gram") == Json::parse("[[10, 5], [5, -10]]"));
    CHECK(j.at("u") == 3);
    CHECK(j.at("v_num") == 1);
    CHECK(j.at("v_den") == 5);
  }

  TEST_CASE("report schemas") {
    const Json w = kj::witness(k3class::witness(-1, 4));
    CHECK(w.at("trace") == 18);
    CHECK(w.at("valid") == true);
    CHECK(w.at("g").at("matrix") == Json::parse("[[5, 8], [8, 13]]"));

    const Json o = kj::oguiso(k3class::oguiso_classification());
    CHECK(o.at("gram") == Json::parse("[[4, 2], [2, -4]]"));
    CHECK(o.at("matrix") == Json::parse("[[5, 8], [8, 13]]"));
    CHECK(o.at("conjugator") == Json::parse("[[1, 0], [1, -1]]"));
    CHECK(o.at("fixed_points") == 0);
    CHECK(o.at("rejected").size() == 2);

    const Json s = kj::salem(isometry::salem_data(Mat2{5, 8, 8, 13}));
    CHECK(s.at("salem_polynomial") == Json::parse("[1, -18, 1]"));
    CHECK(s.at("spectral_radius").at("exact") == "(18 + sqrt(320))/2");

    const Json p = kj::pell_solution(pell::solve_pell4(1621));
    CHECK(p.at("u").is_string());
  }
}
