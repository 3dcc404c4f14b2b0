// Serial reference implementations against the OpenMP kernels, and
// determinism across thread budgets.

#include "blockscope/parallel.hpp"
#include "blockscope/perm.hpp"
#include "blockscope/weil.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

Group sl2_8() { return psl2_group(8); }

}  // namespace

TEST_CASE("class constants kernel") {
  for (int threads : {1, 4}) {
    set_thread_budget(threads);
    Group g = sl2_8();
    CHECK(g.class_constants() == g.class_constants_serial());
  }
  set_thread_budget(1);
}

TEST_CASE("centralizer and normalizer scans") {
  Group g = sl2_8();
  Subgroup P = sylow_subgroup(g, 3);
  for (int threads : {1, 4}) {
    set_thread_budget(threads);
    CHECK(normalizer(g, P).elems == normalizer_serial(g, P).elems);
    CHECK(centralizer(g, {P.gens[0]}).elems == centralizer_serial(g, {P.gens[0]}).elems);
  }
  set_thread_budget(1);
}

TEST_CASE("weil value kernel") {
  UnitaryGroup U = gu_group(3, 2);
  auto s = weil_values_serial(U, 2);
  for (int threads : {1, 4}) {
    set_thread_budget(threads);
    auto par = weil_values(U, 2);
    REQUIRE(par.size() == s.size());
    for (size_t i = 0; i < s.size(); ++i) CHECK(par[i] == s[i]);
  }
  set_thread_budget(1);
}

TEST_CASE("thread budget does not change the computed table") {
  set_thread_budget(4);
  Group a = sl2_8();
  CharacterTable Ta = character_table(a);
  set_thread_budget(1);
  Group b = sl2_8();
  CharacterTable Tb = character_table(b);
  REQUIRE(Ta.size() == Tb.size());
  for (int i = 0; i < Ta.size(); ++i) CHECK(Ta.irr[i].values == Tb.irr[i].values);
}
