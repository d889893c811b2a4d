#include <catch_amalgamated.hpp>

#include <clocale>
#include <random>
#include <sstream>

#include "octo/io.hpp"

using octo::Octonion;

TEST_CASE("format and parse round trip", "[io]") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    Octonion x;
    for (std::size_t i = 0; i < 8; ++i) x[i] = g(rng);
    CHECK(octo::parse_octonion(octo::format_octonion(x)) == x);
  }
}

TEST_CASE("format examples", "[io]") {
  CHECK(octo::format_octonion(Octonion(1.0)) == "1,0,0,0,0,0,0,0");
  CHECK(octo::format_octonion(Octonion::unit(7) * -2.5) == "0,0,0,0,0,0,0,-2.5");
  std::ostringstream os;
  os << Octonion(8.0);
  CHECK(os.str() == "8,0,0,0,0,0,0,0");
}

TEST_CASE("parse accepts spaces, signs and exponents", "[io]") {
  const Octonion x = octo::parse_octonion(" 1, -2 ,+3,4e-1,0,0,0,1E2");
  CHECK(x[0] == 1.0);
  CHECK(x[1] == -2.0);
  CHECK(x[2] == 3.0);
  CHECK(x[3] == 0.4);
  CHECK(x[7] == 100.0);
}

TEST_CASE("parse rejects malformed literals", "[io]") {
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,8,9"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,x"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,nan"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,inf"), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion("1,2,3,4,5,6,7,1e999"), std::invalid_argument);
}

TEST_CASE("parsing ignores the C locale", "[io]") {
  // A comma-decimal locale must not change the reading of "0.5".
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") == nullptr) SKIP("de_DE locale not installed");
  CHECK(octo::parse_octonion("0.5,0,0,0,0,0,0,0")[0] == 0.5);
  CHECK(octo::format_real(0.5) == "0.5");
  std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("series literal", "[io]") {
  const auto c = octo::parse_octonion_list("1,0,0,0,0,0,0,0; 0,1,0,0,0,0,0,0");
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Octonion(1.0));
  CHECK(c[1] == Octonion::unit(1));
  CHECK_THROWS_AS(octo::parse_octonion_list(""), std::invalid_argument);
  CHECK_THROWS_AS(octo::parse_octonion_list("1,0;2"), std::invalid_argument);
}
