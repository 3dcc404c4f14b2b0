#include "blockscope/chartab.hpp"

#include <algorithm>
#include <set>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

Group trivial() { return group_from_generators(1, {}); }
Group s3() { return group_from_generators(3, {{1, 2, 0}, {1, 0, 2}}); }
Group c3() { return group_from_generators(3, {{1, 2, 0}}); }
Group s4() { return group_from_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }
Group q8() {
  // regular representation: left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}
  return group_from_generators(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}
Group sl2_8() {
  return group_from_generators(9, {{0, 2, 1, 4, 3, 6, 5, 8, 7},
                                   {0, 1, 3, 5, 7, 4, 2, 8, 6},
                                   {1, 0, 2, 6, 7, 8, 3, 4, 5}});
}

std::multiset<long> degrees(const CharacterTable& T) {
  std::multiset<long> d;
  for (auto& chi : T.irr) d.insert(chi.degree());
  return d;
}

}  // namespace

TEST_CASE("small character tables") {
  Group t = trivial();
  CharacterTable Tt = character_table(t);
  REQUIRE(Tt.size() == 1);
  CHECK(Tt.irr[0].degree() == 1);

  Group g = s3();
  CharacterTable T = character_table(g);
  REQUIRE(T.size() == 3);
  CHECK(degrees(T) == std::multiset<long>{1, 1, 2});

  Group h = s4();
  CharacterTable Th = character_table(h);
  CHECK(degrees(Th) == std::multiset<long>{1, 1, 2, 3, 3});

  CHECK(degrees(character_table(q8())) == std::multiset<long>{1, 1, 1, 1, 2});
}

TEST_CASE("SL(2,8) degrees and exact orthogonality") {
  Group g = sl2_8();
  CharacterTable T = character_table(g);
  CHECK(degrees(T) == std::multiset<long>{1, 7, 7, 7, 7, 8, 9, 9, 9});
  // full row orthogonality, exact
  for (int i = 0; i < T.size(); ++i)
    for (int j = i; j < T.size(); ++j) {
      mpq_class ip = inner_product(T.irr[i], T.irr[j]);
      CHECK(ip == (i == j ? 1 : 0));
    }
}

TEST_CASE("column orthogonality on S4") {
  Group g = s4();
  CharacterTable T = character_table(g);
  const auto& cls = g.classes();
  for (size_t a = 0; a < cls.size(); ++a)
    for (size_t b = 0; b < cls.size(); ++b) {
      Cyclotomic acc(0);
      for (auto& chi : T.irr) acc += chi.values[a] * chi.values[b].conj();
      if (a == b)
        CHECK(acc == Cyclotomic(cls[a].centralizer_order));
      else
        CHECK(acc.is_zero());
    }
}

TEST_CASE("restriction and decomposition") {
  Group g = s3();
  CharacterTable T = character_table(g);
  Group h = c3();
  CharacterTable Th = character_table(h);
  // restrict(1_G, H) = 1_H
  auto find_trivial = [](const CharacterTable& X) {
    for (int i = 0; i < X.size(); ++i) {
      bool all_one = true;
      for (auto& v : X.irr[i].values) all_one = all_one && v == Cyclotomic(1);
      if (all_one) return i;
    }
    return -1;
  };
  Character r0 = restrict_to(T.irr[find_trivial(T)], h);
  CHECK(r0.values == Th.irr[find_trivial(Th)].values);
  // the degree-2 character restricts to the sum of the two nontrivial linears
  int two = -1;
  for (int i = 0; i < T.size(); ++i)
    if (T.irr[i].degree() == 2) two = i;
  Character r2 = restrict_to(T.irr[two], h);
  auto mult = decompose(Th, r2);
  long total = 0;
  for (int i = 0; i < Th.size(); ++i) {
    bool trivial_char = true;
    for (auto& v : Th.irr[i].values) trivial_char = trivial_char && v == Cyclotomic(1);
    CHECK(mult[i] == (trivial_char ? 0 : 1));
    total += mult[i];
  }
  CHECK(total == 2);
}

TEST_CASE("induction and Frobenius reciprocity") {
  Group g = s3();
  Group h = c3();
  CharacterTable T = character_table(g);
  CharacterTable Th = character_table(h);
  // induce(1_H)(1) = [G:H]
  Character ind = induce_from(Th.irr[0], g);
  CHECK(ind.degree() == 2);
  // induced regular character of H = regular character of G scaled at identity
  Character regH;
  regH.grp = &h;
  regH.values.assign(h.class_count(), Cyclotomic(0));
  for (auto& chi : Th.irr)
    for (int j = 0; j < h.class_count(); ++j)
      regH.values[j] += chi.values[j] * mpq_class(chi.degree());
  Character indreg = induce_from(regH, g);
  CHECK(indreg.degree() == 6);
  for (int j = 1; j < g.class_count(); ++j) CHECK(indreg.values[j].is_zero());
  // reciprocity for every pair
  for (auto& psi : Th.irr)
    for (auto& chi : T.irr) {
      Character up = induce_from(psi, g);
      Character down = restrict_to(chi, h);
      CHECK(inner_product(up, chi) == inner_product(psi, down));
    }
}

TEST_CASE("regular character inner products") {
  Group g = s4();
  CharacterTable T = character_table(g);
  Character reg;
  reg.grp = &g;
  reg.values.assign(g.class_count(), Cyclotomic(0));
  for (auto& chi : T.irr)
    for (int j = 0; j < g.class_count(); ++j)
      reg.values[j] += chi.values[j] * mpq_class(chi.degree());
  for (auto& chi : T.irr) CHECK(inner_product(reg, chi) == chi.degree());
}

TEST_CASE("character levels on SL(2,8)") {
  Group g = sl2_8();
  CharacterTable T = character_table(g);
  // p = 3: the three non-rational degree-7 characters have level 2
  int lev2count = 0, lev0count = 0;
  for (int i = 0; i < T.size(); ++i) {
    int lv = T.levels(3)[i];
    if (T.irr[i].degree() == 7) {
      CHECK((lv == 0 || lv == 2));
      if (lv == 2) ++lev2count;
      if (lv == 0) ++lev0count;
    } else {
      // degrees 1, 8, 9: the 9s have level 0 at 3? they involve z7 and z9 values
      if (T.irr[i].degree() == 1 || T.irr[i].degree() == 8) CHECK(lv == 0);
    }
  }
  CHECK(lev2count == 3);
  CHECK(lev0count == 1);
  // levels never exceed nu_p(exp G)
  for (long p : {2L, 3L, 7L})
    for (int i = 0; i < T.size(); ++i)
      CHECK(T.levels(p)[i] <= valuation(g.exponent(), p));
  // witness classes realize the maximum (Remark-style identity)
  for (int i = 0; i < T.size(); ++i) {
    auto [cls, lv] = level_witness(T.irr[i], 3);
    CHECK(lv == T.levels(3)[i]);
    CHECK(level(T.irr[i].values[cls], 3) == lv);
  }
}

TEST_CASE("sigma_e stability matches levels for p odd") {
  Group g = sl2_8();
  CharacterTable T = character_table(g);
  long m = g.exponent();
  for (int i = 0; i < T.size(); ++i) {
    int a = T.levels(3)[i];
    if (a < 1) continue;
    for (long e = 1; e <= a + 1; ++e) {
      long k = sigma_e_exponent(m, 3, e);
      bool fixed = galois_permute(T, i, k) == i;
      CHECK(fixed == (e >= a));
    }
  }
}

TEST_CASE("galois action permutes the table") {
  Group g = sl2_8();
  CharacterTable T = character_table(g);
  long m = g.exponent();
  for (long k : {1L, 5L, 11L, 13L, 25L}) {
    if (gcd_l(k, m) != 1) continue;
    std::set<int> image;
    for (int i = 0; i < T.size(); ++i) {
      int j = galois_permute(T, i, k);
      CHECK(T.irr[j].degree() == T.irr[i].degree());
      image.insert(j);
    }
    CHECK((int)image.size() == T.size());
  }
  // k = sigma_1 at p = 3 moves the level-2 degree-7 characters nontrivially
  long k = sigma_e_exponent(m, 3, 1);
  bool moved = false;
  for (int i = 0; i < T.size(); ++i)
    if (T.levels(3)[i] == 2 && galois_permute(T, i, k) != i) moved = true;
  CHECK(moved);
}

TEST_CASE("delta parts and the ell invariant") {
  Group g = s3();
  CharacterTable T = character_table(g);
  // Psi = 1_G: delta_0 = 1_G, higher parts vanish, ell = 0
  Character one = T.irr[0];
  for (int i = 0; i < T.size(); ++i)
    if (T.irr[i].degree() == 1) {
      bool is_one = true;
      for (auto& v : T.irr[i].values) is_one = is_one && v == Cyclotomic(1);
      if (is_one) one = T.irr[i];
    }
  Character d0 = delta_part(T, one, 0, 3);
  CHECK(d0.values == one.values);
  CHECK(delta_part(T, one, 1, 3).values[0].is_zero());
  auto l = ell_invariant(T, one, 3);
  REQUIRE(l.has_value());
  CHECK(*l == 0);
  // Psi = p copies of 1_G: ell absent
  Character three_ones;
  three_ones.grp = &g;
  for (auto& v : one.values) three_ones.values.push_back(v * mpq_class(3));
  CHECK(!ell_invariant(T, three_ones, 3).has_value());
  // delta parts sum back to Psi (over all levels)
  Group h = sl2_8();
  CharacterTable Th = character_table(h);
  Character psi;
  psi.grp = &h;
  psi.values = Th.irr[3].values;
  for (size_t j = 0; j < psi.values.size(); ++j) psi.values[j] += Th.irr[5].values[j];
  Character sum;
  sum.grp = &h;
  sum.values.assign(psi.values.size(), Cyclotomic(0));
  for (int i = 0; i <= valuation(h.exponent(), 3); ++i) {
    Character di = delta_part(Th, psi, i, 3);
    for (size_t j = 0; j < sum.values.size(); ++j) sum.values[j] += di.values[j];
  }
  CHECK(sum.values == psi.values);
}

TEST_CASE("restriction to Sylow: SL(2,8) level-2 characters keep level 2 on P") {
  Group g = sl2_8();
  CharacterTable T = character_table(g);
  Subgroup P = sylow_subgroup(g, 3);
  REQUIRE(P.order() == 9);
  for (int i = 0; i < T.size(); ++i) {
    if (T.levels(3)[i] != 2) continue;
    CHECK(restricted_level(T.irr[i], g, P.elems, 3) == 2);
  }
}

TEST_CASE("no character has 2-level exactly 1") {
  for (auto g : {s3(), s4(), q8(), sl2_8()}) {
    CharacterTable T = character_table(g);
    for (int i = 0; i < T.size(); ++i) CHECK(T.levels(2)[i] != 1);
  }
}
