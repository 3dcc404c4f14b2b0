#include "blockscope/blocks.hpp"

#include <algorithm>
#include <set>

#include "blockscope/common.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/numth.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

Group s3() { return group_from_generators(3, {{1, 2, 0}, {1, 0, 2}}); }
Group s4() { return group_from_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }
Group c12() {
  return group_from_generators(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}});
}
Group sl2_8() {
  return group_from_generators(9, {{0, 2, 1, 4, 3, 6, 5, 8, 7},
                                   {0, 1, 3, 5, 7, 4, 2, 8, 6},
                                   {1, 0, 2, 6, 7, 8, 3, 4, 5}});
}

struct Ctx {
  Group G;
  CharacterTable T;
  PrimeIdealData ideal;
  std::vector<Block> blocks;
};

Ctx make(Group g, long p) {
  Ctx c{std::move(g), {}, {}, {}};
  c.T = character_table(c.G);
  c.ideal = prime_ideal(p, p_prime_part(c.G.exponent(), p));
  c.blocks = p_blocks(c.G, c.T, c.ideal);
  return c;
}

}  // namespace

TEST_CASE("S3 at p=3: one block of all three characters") {
  Ctx c = make(s3(), 3);
  REQUIRE(c.blocks.size() == 1);
  CHECK(c.blocks[0].chars.size() == 3);
  CHECK(c.blocks[0].defect == 1);
  CHECK(c.blocks[0].principal);
  CHECK(c.blocks[0].defect_group.order() == 3);
  for (int h : c.blocks[0].heights) CHECK(h == 0);
}

TEST_CASE("p not dividing the order: all defect-zero singletons") {
  Ctx c = make(s3(), 5);
  CHECK(c.blocks.size() == 3);
  for (auto& B : c.blocks) {
    CHECK(B.chars.size() == 1);
    CHECK(B.defect == 0);
    CHECK(B.defect_group.order() == 1);
  }
}

TEST_CASE("abelian group: block count is the p'-part of the order") {
  for (long p : {2L, 3L}) {
    Ctx c = make(c12(), p);
    CHECK((long)c.blocks.size() == p_prime_part(12, p));
    long total = 0;
    for (auto& B : c.blocks) total += (long)B.chars.size();
    CHECK(total == c.T.size());
  }
}

TEST_CASE("blocks partition Irr(G) and the principal block has Sylow defect group") {
  for (auto& [mk, p] : std::vector<std::pair<Group (*)(), long>>{
           {s4, 2}, {s4, 3}, {sl2_8, 2}, {sl2_8, 3}, {sl2_8, 7}}) {
    Ctx c = make(mk(), p);
    std::set<int> seen;
    for (auto& B : c.blocks)
      for (int i : B.chars) {
        CHECK(!seen.count(i));
        seen.insert(i);
      }
    CHECK((int)seen.size() == c.T.size());
    CHECK(c.blocks[0].principal);
    CHECK(c.blocks[0].defect_group.order() == p_part(c.G.order(), p));
    for (auto& B : c.blocks) {
      long want = 1;
      for (int t = 0; t < B.defect; ++t) want *= p;
      CHECK(B.defect_group.order() == want);
      CHECK(*std::min_element(B.heights.begin(), B.heights.end()) == 0);
    }
  }
}

TEST_CASE("S4 at p=3: structure and central character residue spot-check") {
  Ctx c = make(s4(), 3);
  // degrees 1,1,2,3,3: the two degree-3 characters are defect-zero blocks
  int defect0 = 0, principal_size = 0;
  for (auto& B : c.blocks) {
    if (B.defect == 0) {
      ++defect0;
      CHECK(B.chars.size() == 1);
      CHECK(c.T.irr[B.chars[0]].degree() == 3);
    } else {
      CHECK(B.principal);
      principal_size = (int)B.chars.size();
      CHECK(B.defect == 1);
    }
  }
  CHECK(defect0 == 2);
  CHECK(principal_size == 3);
  // 1_G's residues are the class sizes mod p
  int triv = -1;
  for (int i = 0; i < c.T.size(); ++i) {
    bool all_one = true;
    for (auto& v : c.T.irr[i].values) all_one = all_one && v == Cyclotomic(1);
    if (all_one) triv = i;
  }
  auto r = central_character_residues(c.T.irr[triv], c.ideal);
  for (int j = 0; j < c.G.class_count(); ++j)
    CHECK(r[j] == c.ideal.field->from_int(c.G.classes()[j].size));
}

TEST_CASE("block partition is independent of the prime-ideal factor choice") {
  for (auto& [mk, p] : std::vector<std::pair<Group (*)(), long>>{{s4, 2}, {sl2_8, 3}}) {
    Group g = mk();
    CharacterTable T = character_table(g);
    auto choices = prime_ideal_all_choices(p, p_prime_part(g.exponent(), p));
    std::vector<std::vector<std::vector<int>>> partitions;
    for (auto& ideal : choices) {
      auto blocks = p_blocks(g, T, ideal);
      std::vector<std::vector<int>> part;
      for (auto& B : blocks) part.push_back(B.chars);
      std::sort(part.begin(), part.end());
      partitions.push_back(part);
    }
    for (size_t i = 1; i < partitions.size(); ++i) CHECK(partitions[i] == partitions[0]);
  }
}

TEST_CASE("Brauer first main correspondence on S4 at p=3") {
  Ctx c = make(s4(), 3);
  // the principal block has defect group C3
  const Block& B = c.blocks[0];
  REQUIRE(B.defect_group.order() == 3);
  Subgroup N = normalizer(c.G, B.defect_group);
  CHECK(N.order() == 6);
  Group Ng = N.as_group();
  CharacterTable TN = character_table(Ng);
  auto nblocks = p_blocks(Ng, TN, c.ideal);
  auto n_to_g = class_map_into(Ng, c.G);
  // blocks of N with defect group (conjugate to) D biject with blocks of G
  // with defect group D; here: exactly the principal block on both sides
  std::vector<int> n_with_D, g_with_D;
  for (size_t i = 0; i < nblocks.size(); ++i)
    if (nblocks[i].defect == 1) n_with_D.push_back((int)i);
  for (size_t i = 0; i < c.blocks.size(); ++i)
    if (c.blocks[i].defect == 1) g_with_D.push_back((int)i);
  REQUIRE(n_with_D.size() == 1);
  REQUIRE(g_with_D.size() == 1);
  int corr = brauer_correspondent(c.blocks, nblocks[n_with_D[0]], n_to_g, c.G.class_count(),
                                  c.ideal);
  CHECK(corr == g_with_D[0]);
  CHECK(c.blocks[corr].principal);
}

TEST_CASE("D normal: the correspondent of every block is itself") {
  Ctx c = make(c12(), 2);
  auto n_to_g = class_map_into(c.G, c.G);  // N = G
  for (auto& B : c.blocks) {
    int corr = brauer_correspondent(c.blocks, B, n_to_g, c.G.class_count(), c.ideal);
    CHECK(c.blocks[corr].residues == B.residues);
  }
}

TEST_CASE("cyclic defect classification: SL(2,8) principal 3-block") {
  Ctx c = make(sl2_8(), 3);
  const Block& B = c.blocks[0];
  REQUIRE(B.principal);
  REQUIRE(B.defect == 2);
  REQUIRE(B.defect_group.is_cyclic());
  CHECK(B.chars.size() == 6);  // 1, 8, and the four degree-7 characters
  auto data = cyclic_defect_classify(c.G, c.T, B);
  REQUIRE(data.status == CyclicStatus::classified);
  CHECK(data.e == 2);
  CHECK(data.lambda_count == 4);
  // the exceptional family is the four degree-7 characters
  for (int i : data.exceptional) CHECK(c.T.irr[i].degree() == 7);
  // non-exceptional characters are p-rational
  for (int i : data.nonexceptional) CHECK(c.T.levels(3)[i] == 0);
  // level-capturing elements generate the defect group
  for (int i : data.exceptional)
    CHECK(level_element_check(c.G, c.T, B, i, 3));
}

TEST_CASE("cyclic defect classification: S3 principal 3-block is indeterminate") {
  Ctx c = make(s3(), 3);
  auto data = cyclic_defect_classify(c.G, c.T, c.blocks[0]);
  CHECK(data.status == CyclicStatus::indeterminate);
  CHECK(data.e == 2);
  CHECK(data.lambda_count == 1);
}

TEST_CASE("defect group of the SL(2,8) principal 3-block is cyclic of order 9") {
  Ctx c = make(sl2_8(), 3);
  CHECK(c.blocks[0].defect_group.order() == 9);
  CHECK(c.blocks[0].defect_group.is_cyclic());
  // Lemma-style bound: levels never exceed nu_p(exp(D))
  for (auto& B : c.blocks) {
    long expD = B.defect_group.exponent();
    for (int i : B.chars) CHECK(c.T.levels(3)[i] <= valuation(expD, 3));
  }
}
