// Randomized closure subgroups of S6 pushed through the whole pipeline.
// The proven statements (orthogonality, block identities, first-main
// bijection, level bounds) act as canaries for every layer at once.

#include <random>
#include <set>

#include "blockscope/corpus.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/verify.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

std::vector<Point> random_perm(std::mt19937_64& rng, int degree) {
  std::vector<Point> v(degree);
  for (int i = 0; i < degree; ++i) v[i] = i;
  for (int i = degree - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(v[i], v[d(rng)]);
  }
  return v;
}

}  // namespace

TEST_CASE("random subgroups of S6 survive the full statement battery") {
  std::mt19937_64 rng(20240901);
  int built = 0;
  std::set<long> orders_seen;
  while (built < 12) {
    CorpusEntry e;
    e.name = "rnd" + std::to_string(built);
    e.degree = 6;
    e.generators = {random_perm(rng, 6), random_perm(rng, 6)};
    GroupContext gc = build_group_context(e, 0);
    orders_seen.insert(gc.G->order());
    // exact orthonormality of the computed table
    for (int i = 0; i < gc.T->size(); ++i)
      for (int j = i; j < gc.T->size(); ++j)
        CHECK(inner_product(gc.T->irr[i], gc.T->irr[j]) == (i == j ? 1 : 0));
    for (long p : prime_divisors(gc.G->order())) {
      CHECK(check_theorem_A(gc, p).verdict != Verdict::fail);
      CHECK(check_brauer_bijection(gc, p).verdict == Verdict::pass);
      for (auto& o : check_lemma_suite(gc, p)) CHECK(o.verdict != Verdict::fail);
      CHECK(check_conjecture_main(gc, p).verdict != Verdict::finding);
      CHECK(check_conjecture_ntC(gc, p).verdict != Verdict::finding);
      // every block's character count and defect data are internally coherent
      auto& pc = gc.prime(p);
      long total = 0;
      for (auto& B : pc.blocks) {
        total += (long)B.chars.size();
        long want = 1;
        for (int t = 0; t < B.defect; ++t) want *= p;
        CHECK(B.defect_group.order() == want);
      }
      CHECK(total == gc.T->size());
    }
    ++built;
  }
  // the sampler should not have collapsed to a single group
  CHECK(orders_seen.size() >= 3);
}
