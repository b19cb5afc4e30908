#include "mckay/epoly.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "mckay/error.hpp"

using mckay::EPoly;
using mckay::Integer;

namespace {

EPoly random_epoly(std::mt19937& rng) {
  std::uniform_int_distribution<long> exp_dist(0, 5);
  std::uniform_int_distribution<long> coeff_dist(-4, 4);
  std::uniform_int_distribution<int> terms_dist(0, 5);
  EPoly e;
  const int terms = terms_dist(rng);
  for (int i = 0; i < terms; ++i)
    e += EPoly::term(exp_dist(rng), exp_dist(rng), Integer(coeff_dist(rng)));
  return e;
}

}  // namespace

TEST_CASE("ring operation examples") {
  const EPoly uv = EPoly::uv_power(1);
  CHECK(uv * (EPoly(1) + uv) == uv + EPoly::uv_power(2));
  const EPoly e = EPoly::term(2, 1, Integer(3));
  CHECK(e + EPoly() == e);
  CHECK(mckay::geometric_sum(3) == EPoly(1) + uv + EPoly::uv_power(2));
}

TEST_CASE("geometric sum") {
  CHECK(mckay::geometric_sum(1) == EPoly(1));
  CHECK(mckay::geometric_sum(2) == EPoly(1) + EPoly::uv_power(1));
  CHECK(mckay::geometric_sum(4) ==
        EPoly(1) + EPoly::uv_power(1) + EPoly::uv_power(2) + EPoly::uv_power(3));
  CHECK_THROWS_AS(mckay::geometric_sum(0), mckay::precondition_error);
  // (1 + uv + ... + (uv)^{k-1}) * (uv - 1) = (uv)^k - 1
  for (long k = 1; k <= 6; ++k)
    CHECK(mckay::geometric_sum(k) * (EPoly::uv_power(1) - EPoly(1)) ==
          EPoly::uv_power(k) - EPoly(1));
}

TEST_CASE("affine quotient E-polynomial") {
  CHECK(mckay::affine_quotient_e(0) == EPoly(1));
  CHECK(mckay::affine_quotient_e(1) == EPoly::uv_power(1));
  CHECK(mckay::affine_quotient_e(3) == EPoly::uv_power(3));
  CHECK_THROWS_AS(mckay::affine_quotient_e(-1), mckay::precondition_error);
}

TEST_CASE("euler numbers") {
  CHECK(mckay::euler_number(EPoly(1) + EPoly::uv_power(1)) == 2);
  CHECK(mckay::euler_number(EPoly::uv_power(1) + EPoly::uv_power(2)) == 2);
  for (long k = 1; k <= 5; ++k) CHECK(mckay::euler_number(mckay::geometric_sum(k)) == k);
  CHECK(mckay::euler_number(EPoly::term(1, 0, Integer(1))) == -1);
}

TEST_CASE("euler evaluation is a ring homomorphism") {
  std::mt19937 rng(424243);
  for (int round = 0; round < 50; ++round) {
    const EPoly a = random_epoly(rng);
    const EPoly b = random_epoly(rng);
    CHECK(mckay::euler_number(a + b) == mckay::euler_number(a) + mckay::euler_number(b));
    CHECK(mckay::euler_number(a * b) == mckay::euler_number(a) * mckay::euler_number(b));
  }
}

TEST_CASE("purity and degree range") {
  const EPoly pure = EPoly::uv_power(1) + EPoly::uv_power(2);
  CHECK(mckay::is_pure_uv(pure));
  CHECK(mckay::uv_degree_range(pure) == std::pair<long, long>{1, 2});
  CHECK_FALSE(mckay::is_pure_uv(EPoly::term(1, 2, Integer(1))));
  CHECK(mckay::is_pure_uv(EPoly(1)));
  CHECK(mckay::uv_degree_range(EPoly(1)) == std::pair<long, long>{0, 0});
  CHECK_THROWS_AS(mckay::uv_degree_range(EPoly()), mckay::precondition_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(99021);
  for (int round = 0; round < 40; ++round) {
    const EPoly a = random_epoly(rng);
    const EPoly b = random_epoly(rng);
    const EPoly c = random_epoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + EPoly() == a);
    CHECK(a * EPoly(1) == a);
  }
}

TEST_CASE("E-polynomial rendering") {
  CHECK(EPoly().to_string() == "0");
  CHECK((EPoly::uv_power(1) + EPoly::uv_power(2)).to_string() == "uv + (uv)^2");
  CHECK((EPoly::uv_power(2) + EPoly::uv_power(1).scaled(Integer(8))).to_string() ==
        "8*uv + (uv)^2");
  CHECK(EPoly::term(1, 2, Integer(1)).to_string() == "u*v^2");
  CHECK((EPoly(1) - EPoly::term(2, 1, Integer(3))).to_string() == "1 - 3*u^2*v");
}
