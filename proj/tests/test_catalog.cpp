#include "mckay/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "mckay/error.hpp"

using mckay::catalog_group;
using mckay::MatrixGroup;

TEST_CASE("catalog orders") {
  CHECK(catalog_group("trivial-sl2").order() == 1);
  CHECK(catalog_group("minus-one-sl2").order() == 2);
  CHECK(catalog_group("minus-one-sp4").order() == 2);
  CHECK(catalog_group("cyclic-sl2:1").order() == 1);
  CHECK(catalog_group("cyclic-sl2:6").order() == 6);
  CHECK(catalog_group("binary-dihedral:2").order() == 8);
  CHECK(catalog_group("binary-dihedral:3").order() == 12);
  CHECK(catalog_group("binary-tetrahedral").order() == 24);
  CHECK(catalog_group("binary-octahedral").order() == 48);
  CHECK(catalog_group("binary-icosahedral").order() == 120);
  CHECK(catalog_group("symmetric:1").order() == 1);
  CHECK(catalog_group("symmetric:2").order() == 2);
  CHECK(catalog_group("symmetric:4").order() == 24);
}

TEST_CASE("catalog groups in SL(2) have determinant one") {
  for (const char* name : {"minus-one-sl2", "cyclic-sl2:5", "binary-dihedral:3",
                           "binary-tetrahedral", "binary-octahedral", "binary-icosahedral"}) {
    const MatrixGroup g = catalog_group(name);
    CHECK(g.dim() == 2);
    for (const auto& m : g.elements()) CHECK(m.determinant() == mckay::Cyclotomic(1));
  }
}

TEST_CASE("ADE class counts") {
  CHECK(catalog_group("binary-dihedral:2").conjugacy_classes().classes.size() == 5);
  CHECK(catalog_group("binary-dihedral:3").conjugacy_classes().classes.size() == 6);
  CHECK(catalog_group("binary-tetrahedral").conjugacy_classes().classes.size() == 7);
  CHECK(catalog_group("binary-octahedral").conjugacy_classes().classes.size() == 8);
  CHECK(catalog_group("binary-icosahedral").conjugacy_classes().classes.size() == 9);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(catalog_group("unknown-group"), mckay::precondition_error);
  CHECK_THROWS_AS(catalog_group("cyclic-sl2:"), mckay::precondition_error);
  CHECK_THROWS_AS(catalog_group("cyclic-sl2:abc"), mckay::precondition_error);
  CHECK_THROWS_AS(catalog_group("symmetric:0"), mckay::precondition_error);
}

TEST_CASE("catalog listing names are buildable") {
  for (const auto& [name, description] : mckay::catalog_names()) {
    std::string instance = name;
    if (const auto colon = instance.find(':'); colon != std::string::npos)
      instance = instance.substr(0, colon + 1) + "3";
    CHECK(catalog_group(instance).order() >= 1);
  }
}
