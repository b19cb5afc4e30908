#include "mckay/series.hpp"

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mckay/error.hpp"

using mckay::Integer;
using mckay::Partition;
using mckay::QSeries;
using mckay::TPoly;

namespace {

// independent p(n) oracle: Euler's pentagonal-number recurrence
std::vector<long> pentagonal_partition_counts(long up_to) {
  std::vector<long> p(static_cast<std::size_t>(up_to) + 1, 0);
  p[0] = 1;
  for (long n = 1; n <= up_to; ++n) {
    long value = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      value += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) value += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = value;
  }
  return p;
}

TPoly random_tpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg_dist(0, 4);
  std::uniform_int_distribution<long> coeff_dist(-3, 3);
  std::vector<Integer> coeffs;
  const int degree = deg_dist(rng);
  for (int i = 0; i <= degree; ++i) coeffs.emplace_back(coeff_dist(rng));
  return TPoly(std::move(coeffs));
}

QSeries random_qseries(std::mt19937& rng, long order) {
  QSeries s(order);
  for (long k = 0; k <= order; ++k) s += QSeries::monomial(order, random_tpoly(rng), k);
  return s;
}

}  // namespace

TEST_CASE("partition enumeration") {
  const auto empty = mckay::partitions(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].parts_count() == 0);
  CHECK(mckay::partitions(4).size() == 5);
  CHECK(mckay::partitions(10).size() == 42);
  CHECK_THROWS_AS(mckay::partitions(-1), mckay::precondition_error);
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  const auto expected = pentagonal_partition_counts(30);
  for (long n = 0; n <= 30; ++n)
    CHECK(mckay::partitions(n).size() == static_cast<std::size_t>(expected[static_cast<std::size_t>(n)]));
}

TEST_CASE("partition invariants") {
  for (long n = 0; n <= 12; ++n) {
    for (const Partition& nu : mckay::partitions(n)) {
      long total = 0;
      for (std::size_t j = 0; j < nu.multiplicity.size(); ++j)
        total += static_cast<long>(j + 1) * nu.multiplicity[j];
      CHECK(total == n);
      CHECK(nu.parts_count() <= n);
    }
  }
}

TEST_CASE("t-polynomial basics") {
  const TPoly p({Integer(1), Integer(0), Integer(2)});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "1 + 2t^2");
  CHECK(p.eval(Integer(-1)) == 3);
  CHECK(p.shifted(2).to_string() == "t^2 + 2t^4");
  CHECK(p.reciprocal(4).to_string() == "2t^2 + t^4");
  CHECK(TPoly().to_string() == "0");
  CHECK((TPoly(1) + TPoly::t_power(1, Integer(2))).to_string() == "1 + 2t");
  CHECK_THROWS_AS(p.reciprocal(1), mckay::precondition_error);
}

TEST_CASE("geometric inverse factors") {
  // 1/(1 - q) at order 3
  const QSeries geo = QSeries::geometric_inverse(3, TPoly(1), 1);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(geo.coeff(k) == TPoly(1));

  // (1 + t q)^2 at order 2
  const QSeries linear(2, {TPoly(1), TPoly::t_power(1)});
  const QSeries square = linear.pow(2);
  CHECK(square.coeff(0) == TPoly(1));
  CHECK(square.coeff(1) == TPoly::t_power(1, Integer(2)));
  CHECK(square.coeff(2) == TPoly::t_power(2));

  // (1 - t^2 q)^{-1} * (1 - t^2 q) = 1 through the truncation order
  const QSeries factor = QSeries::one(5) - QSeries::monomial(5, TPoly::t_power(2), 1);
  CHECK(QSeries::geometric_inverse(5, TPoly::t_power(2), 1) * factor == QSeries::one(5));

  CHECK_THROWS_AS(QSeries::geometric_inverse(5, TPoly(1), 0), mckay::precondition_error);
}

TEST_CASE("ring axioms through truncation") {
  std::mt19937 rng(30111);
  for (int round = 0; round < 25; ++round) {
    const QSeries a = random_qseries(rng, 5);
    const QSeries b = random_qseries(rng, 5);
    const QSeries c = random_qseries(rng, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("mixed truncation orders take the minimum") {
  const QSeries wide = QSeries::geometric_inverse(8, TPoly(1), 1);
  const QSeries narrow = QSeries::one(3);
  CHECK((wide * narrow).order() == 3);
  CHECK((wide + narrow).order() == 3);
}

TEST_CASE("series rendering") {
  const QSeries s(2, {TPoly(1), TPoly({Integer(1), Integer(2)}), TPoly()});
  CHECK(s.to_string() == "(1) + (1 + 2t)*q + (0)*q^2");
}
