#include "blockscope/weil.hpp"

#include <algorithm>
#include <set>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "doctest.h"

using namespace blockscope;

TEST_CASE("unitary group orders") {
  CHECK(gu_order_formula(1, 2) == 3);
  CHECK(gu_order_formula(2, 2) == 18);
  CHECK(gu_order_formula(3, 2) == 648);
  CHECK(gu_group(1, 2).order() == 3);
  CHECK(gu_group(2, 2).order() == 18);
  CHECK(gu_group(3, 2).order() == 648);
}

TEST_CASE("generator closure agrees with brute force for (3,2)") {
  UnitaryGroup U = gu_group(3, 2);
  auto brute = gu_brute_force(3, 2);
  REQUIRE(brute.size() == 648);
  std::set<FqMat> a(U.elements.begin(), U.elements.end());
  std::set<FqMat> b(brute.begin(), brute.end());
  CHECK(a == b);
}

TEST_CASE("kernel dimensions") {
  UnitaryGroup U = gu_group(3, 2);
  const GFTable& F = *U.F;
  FqMat id(9, 0);
  for (int i = 0; i < 3; ++i) id[i * 3 + i] = F.from_int(1);
  CHECK(kernel_dimension(F, id, 3, F.from_int(1)) == 3);
  CHECK(kernel_dimension(F, id, 3, U.xi_hat) == 0);
  // diag(b, b^-1, 1) has a one-dimensional eigenspace for b
  long b = U.xi_hat;
  FqMat d(9, 0);
  d[0] = b;
  d[4] = F.inv(b);
  d[8] = F.from_int(1);
  CHECK(kernel_dimension(F, d, 3, b) == 1);
  CHECK(kernel_dimension(F, d, 3, F.from_int(1)) == 1);
}

TEST_CASE("weil values: degree, central element, torus expansion") {
  UnitaryGroup U = gu_group(3, 2);
  const GFTable& F = *U.F;
  FqMat id(9, 0);
  for (int i = 0; i < 3; ++i) id[i * 3 + i] = F.from_int(1);
  Cyclotomic at_id = weil_value(F, id, 3, 2, 1, U.xi_hat);
  CHECK(at_id == Cyclotomic(3));  // (2^3+1)/(2+1)

  // central element: |value| = degree
  FqMat z(9, 0);
  for (int i = 0; i < 3; ++i) z[i * 3 + i] = U.xi_hat;
  Cyclotomic at_z = weil_value(F, z, 3, 2, 1, U.xi_hat);
  CHECK(at_z * at_z.conj() == Cyclotomic(9));

  // diag(b, b^-1, 1) expansion: (xi^{im}+xi^{-im}) + (q^{n-2}+1)/(q+1), m = 1
  FqMat d(9, 0);
  d[0] = U.xi_hat;
  d[4] = F.inv(U.xi_hat);
  d[8] = F.from_int(1);
  for (long i = 1; i <= 2; ++i) {
    Cyclotomic got = weil_value(F, d, 3, 2, i, U.xi_hat);
    Cyclotomic expect = Cyclotomic::root(3, i) + Cyclotomic::root(3, 3 - i) + Cyclotomic(1);
    CHECK(got == expect);
  }
}

TEST_CASE("parallel weil evaluation matches the serial reference") {
  UnitaryGroup U = gu_group(2, 2);
  auto a = weil_values(U, 1);
  auto b = weil_values_serial(U, 1);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("sl2 semisimple values") {
  CHECK(sl2_semisimple_value(8, -1, 1, 0) == Cyclotomic(2));
  CHECK(sl2_semisimple_value(8, -1, 3, 3) == Cyclotomic(2));  // ij = 0 mod 9
  CHECK(sl2_semisimple_value(8, -1, 1, 3) == Cyclotomic(-1)); // z3 + z3^2
  CHECK(sl2_semisimple_value(8, -1, 1, 1) ==
        Cyclotomic::root(9, 1) + Cyclotomic::root(9, 8));
  CHECK(sl2_semisimple_value(4, 1, 1, 1) == Cyclotomic(-1));  // z3 + z3^-1
}

TEST_CASE("weil consistency for (3,2,3)") {
  WeilConsistencyResult R = weil_consistency(3, 2, 3);
  CHECK(R.applicable);
  CHECK(R.group_order == 648);
  CHECK(R.class_function_ok);
  CHECK(R.degree_ok);
  CHECK(R.norms_ok);
  CHECK(R.levels_ok);
  CHECK(R.dixon_checked);
  CHECK(R.dixon_match_ok);
  CHECK(R.ok());
}

TEST_CASE("weil consistency inapplicable cases") {
  CHECK_FALSE(weil_consistency(3, 2, 5).applicable);
  CHECK_FALSE(weil_consistency(3, 2, 2).applicable);
  CHECK(weil_consistency(3, 2, 5).ok());  // not applicable is not a failure
}

TEST_CASE("sl2 oracle: SL(2,8) degree-7 characters against the formula") {
  Sl2OracleResult R = sl2_oracle_check(8, -1, 3);
  CHECK(R.matched_all);
  CHECK(R.matched_count == 4);
  CHECK(R.sign == -1);
  CHECK(R.levels_ok);
  CHECK(R.ok());
}

TEST_CASE("sl2 oracle: SL(2,8) degree-9 characters on the split torus") {
  Sl2OracleResult R = sl2_oracle_check(8, 1, 7);
  CHECK(R.matched_all);
  CHECK(R.matched_count == 3);
  CHECK(R.sign == 1);
  CHECK(R.levels_ok);
}

TEST_CASE("psl2 groups") {
  CHECK(psl2_group(2).order() == 6);
  CHECK(psl2_group(4).order() == 60);
  CHECK(psl2_group(8).order() == 504);
}
