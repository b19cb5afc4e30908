#include "mckay/criteria.hpp"

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mckay/catalog.hpp"
#include "mckay/error.hpp"

using mckay::MatrixGroup;

TEST_CASE("maximal fixed codimensions") {
  CHECK(mckay::maximal_fixed_codims(mckay::catalog_group("minus-one-sl2")) ==
        std::vector<long>{2});
  CHECK(mckay::maximal_fixed_codims(mckay::catalog_group("minus-one-sp4")) ==
        std::vector<long>{4});
  CHECK(mckay::maximal_fixed_codims(MatrixGroup::trivial(4)).empty());
  // lifted S_3: the maximal fixed subspaces come from transpositions, codim 2 in C^6
  const auto codims = mckay::maximal_fixed_codims(mckay::cotangent_lift(mckay::catalog_group("symmetric:3")));
  REQUIRE(codims.size() == 3);
  for (const long c : codims) CHECK(c == 2);
}

TEST_CASE("pure codimension-2 condition") {
  CHECK(mckay::passes_pure_codim2(mckay::catalog_group("minus-one-sl2")).pass);
  CHECK(mckay::passes_pure_codim2(MatrixGroup::trivial(2)).pass);

  const auto fail = mckay::passes_pure_codim2(mckay::catalog_group("minus-one-sp4"));
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.witness.has_value());
  CHECK(fail.witness_codim == 4);
  CHECK(fail.witness_fixed_dim == 0);
  // the witness is -I
  CHECK(mckay::catalog_group("minus-one-sp4").element(*fail.witness) ==
        mckay::Matrix::identity(4).scaled(mckay::Cyclotomic(-1)));

  CHECK(mckay::passes_pure_codim2(mckay::cotangent_lift(mckay::catalog_group("symmetric:3"))).pass);

  CHECK_THROWS_AS(mckay::passes_pure_codim2(mckay::catalog_group("symmetric:3")),
                  mckay::precondition_error);
}

TEST_CASE("symplectic reflection generation") {
  const auto pm2 = mckay::generated_by_symplectic_reflections(mckay::catalog_group("minus-one-sl2"));
  CHECK(pm2.generated);
  CHECK(pm2.reflections == std::vector<std::size_t>{1});

  const auto pm4 = mckay::generated_by_symplectic_reflections(mckay::catalog_group("minus-one-sp4"));
  CHECK_FALSE(pm4.generated);
  CHECK(pm4.reflections.empty());
  CHECK(pm4.subgroup_order == 1);

  const auto s3 = mckay::generated_by_symplectic_reflections(
      mckay::cotangent_lift(mckay::catalog_group("symmetric:3")));
  CHECK(s3.generated);
  CHECK(s3.subgroup_order == 6);
}

TEST_CASE("pseudo-reflection generation") {
  const auto s3 = mckay::generated_by_pseudo_reflections(mckay::catalog_group("symmetric:3"));
  CHECK(s3.generated);
  CHECK(s3.reflections.size() == 3);  // the three transpositions
  CHECK(s3.subgroup_order == 6);

  CHECK_FALSE(mckay::generated_by_pseudo_reflections(mckay::catalog_group("cyclic-sl2:3")).generated);
  CHECK(mckay::generated_by_pseudo_reflections(MatrixGroup::trivial(3)).generated);
}

TEST_CASE("reflection generation failure forces a codimension violation") {
  // tested empirically over the symplectic catalog
  const std::vector<MatrixGroup> groups = {
      mckay::catalog_group("minus-one-sl2"),
      mckay::catalog_group("minus-one-sp4"),
      mckay::catalog_group("cyclic-sl2:5"),
      mckay::catalog_group("binary-dihedral:2"),
      mckay::catalog_group("binary-tetrahedral"),
      mckay::cotangent_lift(mckay::catalog_group("symmetric:2")),
      mckay::cotangent_lift(mckay::catalog_group("symmetric:3")),
      mckay::cotangent_lift(mckay::catalog_group("cyclic-sl2:3")),
  };
  for (const MatrixGroup& g : groups) {
    if (!mckay::generated_by_symplectic_reflections(g).generated)
      CHECK_FALSE(mckay::passes_pure_codim2(g).pass);
  }
}

TEST_CASE("cotangent lift doubles fixed codimensions") {
  for (const char* name : {"symmetric:3", "symmetric:4", "cyclic-sl2:3", "binary-dihedral:2"}) {
    const MatrixGroup g = mckay::catalog_group(name);
    const MatrixGroup lifted = mckay::cotangent_lift(g);
    const long n = static_cast<long>(g.dim());
    for (std::size_t i = 0; i < g.order(); ++i) {
      const long base_codim = n - mckay::fixed_subspace(g.element(i)).dim;
      const long lift_codim = 2 * n - mckay::fixed_subspace(lifted.element(i)).dim;
      CHECK(lift_codim == 2 * base_codim);
    }
    // passes_pure_codim2 on the lift == every maximal fixed subspace downstairs has codim 1
    const auto base_codims = mckay::maximal_fixed_codims(g);
    const bool all_codim1 =
        std::all_of(base_codims.begin(), base_codims.end(), [](long c) { return c == 1; });
    CHECK(mckay::passes_pure_codim2(lifted).pass == all_codim1);
  }
}
