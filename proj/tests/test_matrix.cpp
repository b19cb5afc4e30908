#include "mckay/matrix.hpp"

#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "mckay/error.hpp"

using mckay::Cyclotomic;
using mckay::Matrix;
using mckay::Rational;

namespace {

Matrix transposition3() {
  // swap of the first two coordinates in GL(3)
  return Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
}

}  // namespace

TEST_CASE("determinant and inverse") {
  const Cyclotomic z3 = Cyclotomic::zeta(3);
  const Matrix g = Matrix::diagonal({z3, z3.pow(2)});
  CHECK(g.determinant() == Cyclotomic(1));
  CHECK(g.inverse() * g == Matrix::identity(2));

  Matrix singular(2, 2);
  singular.at(0, 0) = Cyclotomic(1);
  singular.at(1, 0) = Cyclotomic(1);
  CHECK(singular.determinant().is_zero());
  CHECK_THROWS_AS(singular.inverse(), mckay::precondition_error);
}

TEST_CASE("fixed subspaces") {
  CHECK(mckay::fixed_subspace(Matrix::identity(3)).dim == 3);
  CHECK(mckay::fixed_subspace(Matrix::diagonal({Cyclotomic(-1), Cyclotomic(-1)})).dim == 0);
  const auto fix = mckay::fixed_subspace(transposition3());
  CHECK(fix.dim == 2);
  // both basis vectors satisfy x1 = x2
  for (std::size_t r = 0; r < fix.basis.rows(); ++r)
    CHECK(fix.basis.at(r, 0) == fix.basis.at(r, 1));
}

TEST_CASE("element order") {
  CHECK(mckay::element_order(Matrix::identity(2)) == 1);
  CHECK(mckay::element_order(Matrix::diagonal({Cyclotomic::zeta(3), Cyclotomic::zeta(3).pow(2)})) == 3);
  CHECK(mckay::element_order(Matrix::identity(2).scaled(Cyclotomic(-1))) == 2);
  CHECK_THROWS_AS(mckay::element_order(Matrix::diagonal({Cyclotomic::zeta(12)}), 5),
                  mckay::precondition_error);
}

TEST_CASE("eigen data examples") {
  const auto id = mckay::eigen_data(Matrix::identity(2));
  CHECK(id.modulus == 1);
  CHECK(id.multiplicity == std::map<long, long>{{0, 2}});

  const auto diag = mckay::eigen_data(Matrix::diagonal({Cyclotomic::zeta(3), Cyclotomic::zeta(3).pow(2)}));
  CHECK(diag.modulus == 3);
  CHECK(diag.multiplicity == std::map<long, long>{{1, 1}, {2, 1}});

  const auto minus = mckay::eigen_data(Matrix::identity(2).scaled(Cyclotomic(-1)));
  CHECK(minus.modulus == 2);
  CHECK(minus.multiplicity == std::map<long, long>{{1, 2}});
}

TEST_CASE("eigen data agrees with direct reading on random diagonal matrices") {
  std::mt19937 rng(77001);
  std::uniform_int_distribution<long> order_dist(1, 12);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
  for (int round = 0; round < 25; ++round) {
    const long m = order_dist(rng);
    const std::size_t d = dim_dist(rng);
    std::uniform_int_distribution<long> exp_dist(0, m - 1);
    std::map<long, long> expected;
    std::vector<Cyclotomic> entries;
    long gcd_all = m;
    for (std::size_t i = 0; i < d; ++i) {
      const long e = exp_dist(rng);
      entries.push_back(Cyclotomic::zeta(m).pow(e));
      ++expected[e];
      gcd_all = std::gcd(gcd_all, e);
    }
    // eigen_data reports exponents modulo the element order m' = m/gcd
    const long actual_order = m / gcd_all;
    std::map<long, long> normalized;
    for (const auto& [e, mult] : expected) normalized[e / gcd_all] += mult;
    const auto data = mckay::eigen_data(Matrix::diagonal(entries));
    CHECK(data.modulus == actual_order);
    CHECK(data.multiplicity == normalized);
  }
}

TEST_CASE("weights") {
  CHECK(mckay::weight(Matrix::identity(3)) == 0);
  CHECK(mckay::weight(Matrix::identity(2).scaled(Cyclotomic(-1))) == 1);
  CHECK(mckay::weight(Matrix::diagonal({Cyclotomic::zeta(3), Cyclotomic::zeta(3).pow(2)})) == 1);
  // det != 1 gives a genuinely fractional weight
  CHECK(mckay::weight(transposition3()) == Rational(1, 2));
}

TEST_CASE("symplectic test") {
  CHECK(mckay::is_symplectic(Matrix::identity(4)));
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(mckay::is_symplectic(Matrix::diagonal({i, i.pow(3)})));
  CHECK_FALSE(mckay::is_symplectic(Matrix::diagonal({i, i})));
  CHECK_THROWS_AS(mckay::is_symplectic(Matrix::identity(3)), mckay::precondition_error);
}

TEST_CASE("cotangent lift") {
  CHECK(mckay::cotangent_lift(Matrix::identity(3)) == Matrix::identity(6));

  const Cyclotomic z3 = Cyclotomic::zeta(3);
  const Matrix lifted = mckay::cotangent_lift(Matrix::diagonal({z3}));
  CHECK(lifted == Matrix::diagonal({z3, z3.pow(2)}));
  CHECK(lifted.determinant() == Cyclotomic(1));

  // lift of a transposition in GL(2): check g^T J g = J by direct product
  const Matrix swap2 = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix lift = mckay::cotangent_lift(swap2);
  const Matrix j = mckay::symplectic_form(2);
  CHECK(lift.transpose() * j * lift == j);
  CHECK(mckay::is_symplectic(lift));
}

TEST_CASE("kernel basis is canonical") {
  // two matrices with the same kernel produce identical bases
  const Matrix a = Matrix::from_rows({{1, 1, 0}});
  const Matrix b = Matrix::from_rows({{2, 2, 0}, {1, 1, 0}});
  CHECK(mckay::kernel_basis(a) == mckay::kernel_basis(b));
  CHECK(mckay::rank(b) == 1);
}
