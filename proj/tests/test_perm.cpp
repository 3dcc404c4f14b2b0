#include "blockscope/perm.hpp"

#include <algorithm>
#include <set>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

Group trivial() { return group_from_generators(1, {}); }

Group s3() { return group_from_generators(3, {{1, 2, 0}, {1, 0, 2}}); }

Group s4() { return group_from_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }

Group c9() { return group_from_generators(9, {{1, 2, 3, 4, 5, 6, 7, 8, 0}}); }

// SL(2,8) = PSL(2,8) acting on the projective line over F_8 (9 points):
// x -> x+1, x -> a*x, x -> 1/x with a a generator of F_8^*.
Group sl2_8() {
  return group_from_generators(9, {{0, 2, 1, 4, 3, 6, 5, 8, 7},
                                   {0, 1, 3, 5, 7, 4, 2, 8, 6},
                                   {1, 0, 2, 6, 7, 8, 3, 4, 5}});
}

Group d8() { return group_from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }

}  // namespace

TEST_CASE("construction and enumeration") {
  CHECK(trivial().order() == 1);
  CHECK(s3().order() == 6);
  CHECK(s4().order() == 24);
  CHECK(sl2_8().order() == 504);
  CHECK_THROWS_AS(group_from_generators(3, {{0, 0, 1}}), Error);
  // enumeration bound
  long saved = max_group_order().load();
  max_group_order().store(100);
  CHECK_THROWS_AS(group_from_generators(9, {{1, 2, 3, 4, 5, 6, 7, 8, 0},
                                            {1, 0, 2, 3, 4, 5, 6, 7, 8}}),
                  Error);
  max_group_order().store(saved);
}

TEST_CASE("conjugacy classes") {
  CHECK(trivial().class_count() == 1);
  Group g = s3();
  REQUIRE(g.class_count() == 3);
  std::multiset<long> sizes;
  long total = 0;
  for (auto& c : g.classes()) {
    sizes.insert(c.size);
    total += c.size;
    CHECK(c.size * c.centralizer_order == g.order());
  }
  CHECK(total == g.order());
  CHECK(sizes == std::multiset<long>{1, 2, 3});
  CHECK(sl2_8().class_count() == 9);
}

TEST_CASE("centralizer and normalizer") {
  Group g = s4();
  CHECK(centralizer(g, {0}).order() == 24);
  Subgroup full = full_subgroup(g);
  CHECK(normalizer(g, full).order() == 24);
  // the Sylow 2-subgroup of S4 (dihedral of order 8) is self-normalizing
  Subgroup syl = sylow_subgroup(g, 2);
  CHECK(syl.order() == 8);
  CHECK(normalizer(g, syl).order() == 8);
  // serial and parallel scans agree
  Subgroup a = normalizer(g, syl), b = normalizer_serial(g, syl);
  CHECK(a.elems == b.elems);
  int t = -1;
  for (long i = 0; i < g.order(); ++i)
    if (g.element_order((int)i) == 3) {
      t = (int)i;
      break;
    }
  Subgroup c3 = subgroup_closure(g, {t});
  CHECK(normalizer(g, c3).order() == 6);
  CHECK(centralizer(g, {t}).elems == centralizer_serial(g, {t}).elems);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(s3(), 5).order() == 1);
  CHECK(sylow_subgroup(s4(), 2).order() == 8);
  CHECK(sylow_subgroup(s4(), 3).order() == 3);
  Group g = sl2_8();
  Subgroup p3 = sylow_subgroup(g, 3);
  CHECK(p3.order() == 9);
  CHECK(p3.is_cyclic());
  CHECK(sylow_subgroup(g, 2).order() == 8);
  CHECK(sylow_subgroup(g, 7).order() == 7);
  // different seeds give conjugate (here: equal-order, conjugacy-checked) results
  Subgroup a = sylow_subgroup(g, 3, 0), b = sylow_subgroup(g, 3, 12345);
  CHECK(subgroups_conjugate(g, a, b));
}

TEST_CASE("p-decomposition") {
  Group g = c9();
  auto [gp, gpp] = p_decomposition(g, 1, 3);
  CHECK(gp == 1);
  CHECK(gpp == 0);
  auto [ip, ipp] = p_decomposition(g, 0, 3);
  CHECK(ip == 0);
  CHECK(ipp == 0);

  Group s = s3();  // order-6 elements do not exist here; use S4's 4-cycles * 3-cycles
  Group g4 = group_from_generators(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 3, 5}});  // C3 x C2 = C6
  int six = -1;
  for (long i = 0; i < g4.order(); ++i)
    if (g4.element_order((int)i) == 6) six = (int)i;
  REQUIRE(six >= 0);
  auto [p2, p2c] = p_decomposition(g4, six, 2);
  // g_p = g^3 and g_p' = g^4 for |g| = 6, p = 2
  Permutation e = g4.element(six);
  CHECK(g4.element(p2) == e * e * e);
  CHECK(g4.element(p2c) == e * e * e * e);
  CHECK(g4.mult(p2, p2c) == six);
  CHECK(g4.mult(p2c, p2) == six);
  CHECK(g4.element_order(p2) == 2);
  CHECK(g4.element_order(p2c) == 3);
  (void)s;

  // uniqueness against brute force over powers
  Group big = sl2_8();
  for (int i : {5, 17, 100, 400}) {
    long o = big.element_order(i);
    for (long p : {2L, 3L, 7L}) {
      auto [a, b] = p_decomposition(big, i, p);
      CHECK(big.mult(a, b) == i);
      CHECK(big.mult(b, a) == i);
      CHECK(big.element_order(a) == p_part(o, p));
      CHECK(big.element_order(b) == o / p_part(o, p));
    }
  }
}

TEST_CASE("power class map") {
  Group g = s3();
  auto id = g.power_class_map(1);
  for (int c = 0; c < g.class_count(); ++c) CHECK(id[c] == c);
  // squaring kills involutions
  auto sq = g.power_class_map(2);
  for (int c = 0; c < g.class_count(); ++c) {
    if (g.classes()[c].element_order == 2) CHECK(g.classes()[sq[c]].element_order == 1);
  }
  // inverse map fixes real classes (all classes of S3 are real)
  auto invm = g.power_class_map(-1);
  for (int c = 0; c < g.class_count(); ++c) CHECK(invm[c] == c);
  // composition law for exponents coprime to the exponent
  Group h = sl2_8();
  long e = h.exponent();
  CHECK(e == 126);
  for (long k1 : {5L, 11L}) {
    for (long k2 : {13L, 25L}) {
      auto m1 = h.power_class_map(k1);
      auto m2 = h.power_class_map(k2);
      auto m12 = h.power_class_map(k1 * k2 % e);
      for (int c = 0; c < h.class_count(); ++c) CHECK(m2[m1[c]] == m12[c]);
    }
  }
}

TEST_CASE("subgroup profile") {
  Group g = c9();
  Subgroup full = full_subgroup(g);
  CHECK(full.is_cyclic());
  CHECK(full.is_abelian());
  CHECK(full.exponent() == 9);
  Group v4 = group_from_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  Subgroup fv = full_subgroup(v4);
  CHECK(!fv.is_cyclic());
  CHECK(fv.is_abelian());
  CHECK(fv.exponent() == 2);
  Group d = d8();
  Subgroup fd = full_subgroup(d);
  CHECK(!fd.is_cyclic());
  CHECK(!fd.is_abelian());
  CHECK(fd.exponent() == 4);
}

TEST_CASE("class constants: parallel kernel matches serial reference") {
  for (auto g : {s4(), sl2_8()}) {
    auto a = g.class_constants();
    auto b = g.class_constants_serial();
    CHECK(a == b);
    // sanity: sum_l a_ijl |K_l| = |K_i| |K_j|
    const auto& cls = g.classes();
    for (int i = 0; i < g.class_count(); ++i)
      for (int j = 0; j < g.class_count(); ++j) {
        long total = 0;
        for (int l = 0; l < g.class_count(); ++l) total += a[i][j][l] * cls[l].size;
        CHECK(total == cls[i].size * cls[j].size);
      }
  }
}

TEST_CASE("p-decomposition is the unique power-pair solution") {
  // brute force over all pairs of powers of g
  Group g = sl2_8();
  for (int i : {5, 17, 100}) {
    long o = g.element_order(i);
    for (long p : {2L, 3L, 7L}) {
      auto [gp, gpp] = p_decomposition(g, i, p);
      // both components are powers of g
      bool gp_power = false, gpp_power = false;
      int cur = 0;
      for (long e = 0; e < o; ++e) {
        if (cur == gp) gp_power = true;
        if (cur == gpp) gpp_power = true;
        cur = g.mult(cur, i);
      }
      CHECK(gp_power);
      CHECK(gpp_power);
      // unique pair (x, y) of powers with xy = g, |x| the p-part, |y| the p'-part
      int solutions = 0;
      int x = 0;
      for (long a = 0; a < o; ++a) {
        int y = 0;
        for (long b = 0; b < o; ++b) {
          if (g.mult(x, y) == i && g.element_order(x) == p_part(o, p) &&
              g.element_order(y) == o / p_part(o, p)) {
            ++solutions;
            CHECK(x == gp);
            CHECK(y == gpp);
          }
          y = g.mult(y, i);
        }
        x = g.mult(x, i);
      }
      CHECK(solutions == 1);
    }
  }
}
