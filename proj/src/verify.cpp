#include "blockscope/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "blockscope/common.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/parallel.hpp"

namespace blockscope {

using nlohmann::ordered_json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::finding: return "finding";
  }
  return "?";
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {
      "conj_main", "conj_ntC",  "thm_A",   "lem_3_1",        "cor_3_2",
      "lem_3_3",   "lem_4_2",   "lem_4_3", "lem_6_3",        "amn_consequence",
      "cons_7_2",  "cons_7_3",  "cons_7_4", "brauer_first_main", "fixture"};
  return ids;
}

namespace {

std::string chi_tag(const CharacterTable& T, int c) {
  return "chi" + std::to_string(c) + "(deg " + std::to_string(T.irr[c].degree()) + ")";
}

std::vector<int> to_child_indices(const Group& child, const Group& parent,
                                  const std::vector<int>& parent_elems) {
  std::vector<int> out;
  out.reserve(parent_elems.size());
  for (int e : parent_elems) {
    int i = child.index_of(parent.element(e));
    if (i < 0) fail(Errc::malformed_permutation, "element missing from materialized subgroup");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PrimeContext& GroupContext::prime(long p) {
  auto it = primes.find(p);
  if (it != primes.end()) return it->second;
  PrimeContext pc;
  pc.p = p;
  pc.ideal = prime_ideal(p, p_prime_part(G->exponent(), p));
  pc.blocks = p_blocks(*G, *T, pc.ideal);
  pc.sylow = sylow_subgroup(*G, p, seed);
  std::map<std::vector<int>, std::pair<std::vector<Block>, std::vector<int>>> nblock_cache;
  for (auto& B : pc.blocks) {
    BlockLocal L;
    Subgroup N = normalizer(*G, B.defect_group);
    auto& sc = materialize(N.elems);
    L.N = sc.grp;
    if (!sc.table) sc.table = std::make_shared<CharacterTable>(character_table(*sc.grp));
    L.TN = sc.table;
    auto nit = nblock_cache.find(N.elems);
    if (nit == nblock_cache.end()) {
      std::vector<Block> nb = p_blocks(*L.N, *L.TN, pc.ideal);
      std::vector<int> ng = class_map_into(*L.N, *G);
      nit = nblock_cache.emplace(N.elems, std::make_pair(std::move(nb), std::move(ng))).first;
    }
    L.nblocks = nit->second.first;
    L.n_to_g = nit->second.second;
    L.n_elems = N.elems;
    // Brauer correspondent of B among the blocks of N
    int found = -1;
    for (size_t nb = 0; nb < L.nblocks.size(); ++nb) {
      auto ind = induced_residue_vector(L.nblocks[nb], L.n_to_g, G->class_count(), pc.ideal);
      if (ind == B.residues) {
        if (found >= 0)
          fail(Errc::ambiguous_correspondent, "two local blocks induce the same residues");
        found = (int)nb;
      }
    }
    if (found < 0)
      fail(Errc::correspondent_not_found,
           "no local block induces the residues of a block of the group");
    // the correspondent must have defect group D (first main theorem)
    {
      const Block& b = L.nblocks[found];
      std::vector<int> d_in_n = to_child_indices(*L.N, *G, B.defect_group.elems);
      Subgroup Dn;
      Dn.parent = L.N.get();
      Dn.elems = d_in_n;
      Dn.gens = generators_of(*L.N, d_in_n);
      if (b.defect_group.order() != B.defect_group.order() ||
          !subgroups_conjugate(*L.N, b.defect_group, Dn))
        fail(Errc::correspondent_not_found,
             "correspondent's defect group is not the block's defect group");
    }
    L.correspondent = found;
    if (B.defect >= 1 && B.defect_group.is_cyclic())
      L.cyclic = cyclic_defect_classify(*G, *T, B);
    pc.locals.push_back(std::move(L));
  }
  return primes.emplace(p, std::move(pc)).first->second;
}

SubgroupCtx& GroupContext::materialize(const std::vector<int>& elems) {
  auto it = subgroup_cache.find(elems);
  if (it != subgroup_cache.end()) return it->second;
  SubgroupCtx sc;
  if ((long)elems.size() == G->order()) {
    sc.grp = G;
    sc.table = T;
  } else {
    std::vector<Permutation> perms;
    perms.reserve(elems.size());
    for (int e : elems) perms.push_back(G->element(e));
    std::vector<int> gens = generators_of(*G, elems);
    std::vector<Permutation> genperms;
    for (int g : gens) genperms.push_back(G->element(g));
    sc.grp = std::make_shared<Group>(
        Group::from_elements(G->degree(), std::move(perms), std::move(genperms)));
  }
  return subgroup_cache.emplace(elems, std::move(sc)).first->second;
}

GroupContext build_group_context(const CorpusEntry& entry, uint64_t seed) {
  GroupContext gc;
  gc.entry = &entry;
  gc.seed = seed;
  gc.G = std::make_shared<Group>(group_from_generators(entry.degree, entry.generators));
  gc.T = std::make_shared<CharacterTable>(character_table(*gc.G));
  return gc;
}

CheckOutcome check_conjecture_main(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  CheckOutcome O{"conj_main", gc.entry->name, p, Verdict::not_applicable, {}};
  int considered = 0;
  bool all_ok = true;
  for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
    const Block& B = pc.blocks[bi];
    const BlockLocal& L = pc.locals[bi];
    for (size_t t = 0; t < B.chars.size(); ++t) {
      if (B.heights[t] != 0) continue;
      int c = B.chars[t];
      int lev = T.levels(p)[c];
      if (lev < 2) continue;
      ++considered;
      int levN = restricted_level(T.irr[c], *gc.G, L.n_elems, p);
      bool ok = levN == lev;
      all_ok = all_ok && ok;
      O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) + " lev=" +
                          std::to_string(lev) + " lev_N=" + std::to_string(levN) +
                          (ok ? "" : " MISMATCH"));
    }
  }
  if (considered) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
  return O;
}

CheckOutcome check_conjecture_ntC(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  CheckOutcome O{"conj_ntC", gc.entry->name, p, Verdict::not_applicable, {}};
  int considered = 0;
  bool all_ok = true;
  for (int c = 0; c < T.size(); ++c) {
    if (T.irr[c].degree() % p == 0) continue;
    int a = T.levels(p)[c];
    if (a < 1) continue;
    ++considered;
    bool ok = true;
    if (a >= 2) {
      int levP = restricted_level(T.irr[c], *gc.G, pc.sylow.elems, p);
      ok = levP == a;
      if (ok && p == 2) {
        std::vector<Cyclotomic> pvals;
        std::vector<char> seen(gc.G->class_count(), 0);
        for (int e : pc.sylow.elems) {
          int cl = gc.G->class_of(e);
          if (!seen[cl]) {
            seen[cl] = 1;
            pvals.push_back(T.irr[c].values[cl]);
          }
        }
        ok = field_contains_q4(pvals);
        if (!ok)
          O.details.push_back(chi_tag(T, c) + " lev=" + std::to_string(a) +
                              " restriction misses Q4");
      }
      O.details.push_back(chi_tag(T, c) + " lev=" + std::to_string(a) + " lev_P=" +
                          std::to_string(levP) + (ok ? "" : " MISMATCH"));
    } else {
      O.details.push_back(chi_tag(T, c) + " lev=1 (holds trivially)");
    }
    all_ok = all_ok && ok;
  }
  if (considered) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
  return O;
}

CheckOutcome check_theorem_A(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  CheckOutcome O{"thm_A", gc.entry->name, p, Verdict::not_applicable, {}};
  int considered = 0;
  bool all_ok = true;
  for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
    const Block& B = pc.blocks[bi];
    if (!B.defect_group.is_cyclic()) continue;
    const BlockLocal& L = pc.locals[bi];
    for (int c : B.chars) {
      ++considered;
      int lev = T.levels(p)[c];
      int levN = restricted_level(T.irr[c], *gc.G, L.n_elems, p);
      if (lev != levN) {
        all_ok = false;
        O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) + " lev=" +
                            std::to_string(lev) + " lev_N=" + std::to_string(levN) +
                            " VIOLATION");
      }
    }
  }
  if (considered) O.verdict = all_ok ? Verdict::pass : Verdict::fail;
  return O;
}

std::vector<CheckOutcome> check_lemma_suite(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  const Group& G = *gc.G;
  std::vector<CheckOutcome> out;

  {  // lem_3_1: lev(chi) <= nu(exp(D))
    CheckOutcome O{"lem_3_1", gc.entry->name, p, Verdict::pass, {}};
    for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
      const Block& B = pc.blocks[bi];
      int bound = valuation(B.defect_group.exponent(), p);
      for (int c : B.chars)
        if (T.levels(p)[c] > bound) {
          O.verdict = Verdict::fail;
          O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) +
                              " exceeds nu(exp D)=" + std::to_string(bound));
        }
    }
    out.push_back(std::move(O));
  }

  {  // cor_3_2: defect 0 (any p), defect 1 (p = 2) blocks are level 0
    CheckOutcome O{"cor_3_2", gc.entry->name, p, Verdict::pass, {}};
    for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
      const Block& B = pc.blocks[bi];
      if (!(B.defect == 0 || (p == 2 && B.defect == 1))) continue;
      for (int c : B.chars)
        if (T.levels(p)[c] != 0) {
          O.verdict = Verdict::fail;
          O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) +
                              " has nonzero level in a small-defect block");
        }
    }
    out.push_back(std::move(O));
  }

  {  // lem_3_3: p odd, defect-1 blocks: lev in {0,1} and preserved by N_G(D)
    CheckOutcome O{"lem_3_3", gc.entry->name, p, Verdict::pass, {}};
    if (p == 2) O.verdict = Verdict::not_applicable;
    else {
      bool any = false;
      for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
        const Block& B = pc.blocks[bi];
        if (B.defect != 1) continue;
        any = true;
        for (int c : B.chars) {
          int lev = T.levels(p)[c];
          int levN = restricted_level(T.irr[c], G, pc.locals[bi].n_elems, p);
          if (lev > 1 || lev != levN) {
            O.verdict = Verdict::fail;
            O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) +
                                " lev=" + std::to_string(lev) + " lev_N=" + std::to_string(levN));
          }
        }
      }
      if (!any) O.verdict = Verdict::not_applicable;
    }
    out.push_back(std::move(O));
  }

  // Sylow restriction data for the Delta lemmas
  const bool p_divides = G.order() % p == 0;
  SubgroupCtx* Pctx = nullptr;
  int max_i = 0;
  if (p_divides) {
    Pctx = &gc.materialize(pc.sylow.elems);
    if (!Pctx->table) Pctx->table = std::make_shared<CharacterTable>(character_table(*Pctx->grp));
    max_i = valuation(Pctx->grp->exponent(), p);
  }

  auto deg_by_level = [&](const Character& psi) {
    std::map<int, long> m;
    auto mult = decompose(*Pctx->table, psi);
    const auto& lv = Pctx->table->levels(p);
    for (int c = 0; c < Pctx->table->size(); ++c)
      if (mult[c]) m[lv[c]] += mult[c] * Pctx->table->irr[c].degree();
    return m;
  };

  {  // lem_4_2(i): Delta_i(chi_P)(1) = 0 mod p for i >= max(2, lev+1)
    CheckOutcome O{"lem_4_2", gc.entry->name, p, Verdict::pass, {}};
    if (!p_divides) O.verdict = Verdict::not_applicable;
    else {
      for (int c = 0; c < T.size(); ++c) {
        Character psi = restrict_to(T.irr[c], *Pctx->grp);
        int a = value_set_level(psi, p);
        auto dm = deg_by_level(psi);
        for (int i = std::max(2, a + 1); i <= max_i; ++i) {
          long d = dm.count(i) ? dm[i] : 0;
          if (d % p != 0) {
            O.verdict = Verdict::fail;
            O.details.push_back(chi_tag(T, c) + " Delta_" + std::to_string(i) +
                                "(chi_P)(1)=" + std::to_string(d) + " not divisible");
          }
        }
      }
    }
    out.push_back(std::move(O));
  }

  {  // lem_4_3: Delta_i congruences match between chi_P and psi_P
    CheckOutcome O{"lem_4_3", gc.entry->name, p, Verdict::pass, {}};
    if (!p_divides || max_i < 2) O.verdict = Verdict::not_applicable;
    else {
      int tested = 0;
      std::set<std::vector<int>> seen;
      std::vector<std::vector<int>> subgroups;
      for (long g = 0; g < G.order() && (long)subgroups.size() < 500; ++g) {
        std::vector<int> seed_elems = pc.sylow.gens;
        seed_elems.push_back((int)g);
        Subgroup K = subgroup_closure(G, seed_elems);
        if (K.order() == G.order()) continue;
        if (seen.insert(K.elems).second) subgroups.push_back(K.elems);
      }
      for (auto& kelems : subgroups) {
        auto& Kctx = gc.materialize(kelems);
        if (!Kctx.table)
          Kctx.table = std::make_shared<CharacterTable>(character_table(*Kctx.grp));
        for (auto& psi : Kctx.table->irr) {
          Character ind = induce_from(psi, G);
          if (ind.degree() % p == 0) continue;
          if (inner_product(ind, ind) != 1) continue;
          Character chiP = restrict_to(ind, *Pctx->grp);
          Character psiP = restrict_to(psi, *Pctx->grp);
          auto dmc = deg_by_level(chiP);
          auto dmp = deg_by_level(psiP);
          ++tested;
          for (int i = 2; i <= max_i; ++i) {
            long dc = dmc.count(i) ? dmc[i] : 0;
            long dp = dmp.count(i) ? dmp[i] : 0;
            if ((dc % p != 0) != (dp % p != 0)) {
              O.verdict = Verdict::fail;
              O.details.push_back("K of order " + std::to_string(kelems.size()) +
                                  " psi-induced degree " + std::to_string(ind.degree()) +
                                  ": Delta_" + std::to_string(i) + " congruences disagree");
            }
          }
        }
      }
      if (!tested) O.verdict = Verdict::not_applicable;
      else
        O.details.push_back(std::to_string(tested) + " induced-pair instances tested");
    }
    out.push_back(std::move(O));
  }

  {  // lem_6_3: level of a union of value sets is the max of the levels
    CheckOutcome O{"lem_6_3", gc.entry->name, p, Verdict::pass, {}};
    int budget = 200;
    for (int i = 0; i < T.size() && budget > 0; ++i)
      for (int j = i; j < T.size() && budget > 0; ++j) {
        --budget;
        std::vector<Cyclotomic> uni = T.irr[i].values;
        uni.insert(uni.end(), T.irr[j].values.begin(), T.irr[j].values.end());
        int lu = level(std::span<const Cyclotomic>(uni.data(), uni.size()), p);
        int want = std::max(T.levels(p)[i], T.levels(p)[j]);
        if (lu != want) {
          O.verdict = Verdict::fail;
          O.details.push_back("chi" + std::to_string(i) + ",chi" + std::to_string(j) +
                              " union level " + std::to_string(lu) + " != max " +
                              std::to_string(want));
        }
      }
    out.push_back(std::move(O));
  }
  return out;
}

CheckOutcome check_amn_consequence(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  CheckOutcome O{"amn_consequence", gc.entry->name, p, Verdict::not_applicable, {}};
  bool any = false, all_ok = true;
  for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
    const Block& B = pc.blocks[bi];
    const BlockLocal& L = pc.locals[bi];
    const Block& b = L.nblocks[L.correspondent];
    any = true;
    std::vector<int> irr0B, irr0b;
    for (size_t t = 0; t < B.chars.size(); ++t)
      if (B.heights[t] == 0) irr0B.push_back(B.chars[t]);
    for (size_t t = 0; t < b.chars.size(); ++t)
      if (b.heights[t] == 0) irr0b.push_back(b.chars[t]);
    bool ok1 = irr0B.size() == irr0b.size();
    std::vector<int> levB, levb;
    for (int c : irr0B) levB.push_back(T.levels(p)[c]);
    for (int c : irr0b) levb.push_back(L.TN->levels(p)[c]);
    std::sort(levB.begin(), levB.end());
    std::sort(levb.begin(), levb.end());
    bool ok2 = levB == levb;
    std::vector<int> rlevB, levb2;
    for (int c : irr0B)
      if (T.levels(p)[c] >= 2)
        rlevB.push_back(restricted_level(T.irr[c], *gc.G, L.n_elems, p));
    for (int c : irr0b)
      if (L.TN->levels(p)[c] >= 2) levb2.push_back(L.TN->levels(p)[c]);
    std::sort(rlevB.begin(), rlevB.end());
    std::sort(levb2.begin(), levb2.end());
    bool ok3 = rlevB == levb2;
    if (!(ok1 && ok2 && ok3)) all_ok = false;
    std::string tag = "block " + std::to_string(bi) + ": |Irr0(B)|=" +
                      std::to_string(irr0B.size()) + " |Irr0(b)|=" + std::to_string(irr0b.size());
    if (!ok1) tag += " COUNT-MISMATCH";
    if (!ok2) tag += " LEVEL-MULTISET-MISMATCH";
    if (!ok3) tag += " RESTRICTED-LEVEL-MISMATCH";
    O.details.push_back(tag);
  }
  if (any) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
  return O;
}

std::vector<CheckOutcome> check_consequences(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  const Group& G = *gc.G;
  std::vector<CheckOutcome> out;

  {  // cons_7_2: almost p-rational iff almost p-rational downstairs
    CheckOutcome O{"cons_7_2", gc.entry->name, p, Verdict::not_applicable, {}};
    bool any = false, all_ok = true;
    for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
      const Block& B = pc.blocks[bi];
      for (size_t t = 0; t < B.chars.size(); ++t) {
        if (B.heights[t] != 0) continue;
        int c = B.chars[t];
        any = true;
        bool lhs = T.levels(p)[c] <= 1;
        bool rhs = restricted_level(T.irr[c], G, pc.locals[bi].n_elems, p) <= 1;
        if (lhs != rhs) {
          all_ok = false;
          O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) +
                              " almost-rationality differs downstairs");
        }
      }
    }
    if (any) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
    out.push_back(std::move(O));
  }

  {  // cons_7_3: abelian Sylow: the restriction identity for every level>=2 character
    CheckOutcome O{"cons_7_3", gc.entry->name, p, Verdict::not_applicable, {}};
    if (pc.sylow.order() > 1 && pc.sylow.is_abelian()) {
      bool any = false, all_ok = true;
      for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
        const Block& B = pc.blocks[bi];
        for (int c : B.chars) {
          if (T.levels(p)[c] < 2) continue;
          any = true;
          int levN = restricted_level(T.irr[c], G, pc.locals[bi].n_elems, p);
          bool ok = levN == T.levels(p)[c];
          all_ok = all_ok && ok;
          O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) + " lev=" +
                              std::to_string(T.levels(p)[c]) + " lev_N=" + std::to_string(levN) +
                              (ok ? "" : " MISMATCH"));
        }
      }
      if (any) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
    }
    out.push_back(std::move(O));
  }

  {  // cons_7_4: quadratic fields Q(sqrt d), d != 1 mod 4, at p = 2
    CheckOutcome O{"cons_7_4", gc.entry->name, p, Verdict::not_applicable, {}};
    if (p == 2) {
      bool any = false, all_ok = true;
      for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
        const Block& B = pc.blocks[bi];
        for (size_t t = 0; t < B.chars.size(); ++t) {
          if (B.heights[t] != 0) continue;
          int c = B.chars[t];
          long cond = conductor(std::span<const Cyclotomic>(T.irr[c].values.data(),
                                                            T.irr[c].values.size()));
          if (cond == 1) continue;
          // find a squarefree d with Q(chi) = Q(sqrt d)
          long found_d = 0;
          std::vector<long> primes_of_c = prime_divisors(cond);
          int np = (int)primes_of_c.size();
          for (int mask = 0; mask < (1 << np) && !found_d; ++mask) {
            long d = 1;
            for (int b2 = 0; b2 < np; ++b2)
              if (mask & (1 << b2)) d *= primes_of_c[b2];
            for (long sd : {d, -d}) {
              if (sd == 1) continue;
              Cyclotomic rt = sqrt_of_squarefree(sd);
              std::vector<Cyclotomic> rts{rt};
              if (same_field(std::span<const Cyclotomic>(T.irr[c].values.data(),
                                                         T.irr[c].values.size()),
                             std::span<const Cyclotomic>(rts.data(), rts.size()))) {
                found_d = sd;
                break;
              }
            }
          }
          if (!found_d) continue;
          long dm = ((found_d % 4) + 4) % 4;
          if (dm == 1) continue;
          any = true;
          std::vector<Cyclotomic> nvals;
          std::vector<char> seen(G.class_count(), 0);
          for (int e : pc.locals[bi].n_elems) {
            int cl = G.class_of(e);
            if (!seen[cl]) {
              seen[cl] = 1;
              nvals.push_back(T.irr[c].values[cl]);
            }
          }
          bool ok = same_field(std::span<const Cyclotomic>(T.irr[c].values.data(),
                                                           T.irr[c].values.size()),
                               std::span<const Cyclotomic>(nvals.data(), nvals.size()));
          all_ok = all_ok && ok;
          O.details.push_back("block " + std::to_string(bi) + " " + chi_tag(T, c) +
                              " field Q(sqrt(" + std::to_string(found_d) + "))" +
                              (ok ? " preserved" : " NOT preserved"));
        }
      }
      if (any) O.verdict = all_ok ? Verdict::pass : Verdict::finding;
    }
    out.push_back(std::move(O));
  }
  return out;
}

CheckOutcome check_brauer_bijection(GroupContext& gc, long p) {
  auto& pc = gc.prime(p);
  const Group& G = *gc.G;
  CheckOutcome O{"brauer_first_main", gc.entry->name, p, Verdict::pass, {}};
  // group blocks by conjugacy class of defect groups
  std::vector<int> rep_of_class;
  std::vector<int> class_of_block(pc.blocks.size(), -1);
  for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
    for (size_t r = 0; r < rep_of_class.size(); ++r) {
      if (subgroups_conjugate(G, pc.blocks[bi].defect_group,
                              pc.blocks[rep_of_class[r]].defect_group)) {
        class_of_block[bi] = (int)r;
        break;
      }
    }
    if (class_of_block[bi] < 0) {
      class_of_block[bi] = (int)rep_of_class.size();
      rep_of_class.push_back((int)bi);
    }
  }
  for (size_t r = 0; r < rep_of_class.size(); ++r) {
    int bref = rep_of_class[r];
    const BlockLocal& L = pc.locals[bref];
    const Block& Bref = pc.blocks[bref];
    // G-blocks in this defect-group class
    std::vector<int> gclass_blocks;
    for (size_t bi = 0; bi < pc.blocks.size(); ++bi)
      if (class_of_block[bi] == (int)r) gclass_blocks.push_back((int)bi);
    // N-blocks with this defect group (up to N-conjugacy)
    std::vector<int> d_in_n = to_child_indices(*L.N, G, Bref.defect_group.elems);
    Subgroup Dn;
    Dn.parent = L.N.get();
    Dn.elems = d_in_n;
    Dn.gens = generators_of(*L.N, d_in_n);
    std::vector<int> nblocks_with_D;
    for (size_t nb = 0; nb < L.nblocks.size(); ++nb)
      if (L.nblocks[nb].defect_group.order() == Bref.defect_group.order() &&
          subgroups_conjugate(*L.N, L.nblocks[nb].defect_group, Dn))
        nblocks_with_D.push_back((int)nb);
    // induced residues must match the G-blocks bijectively
    std::set<int> hit;
    bool ok = nblocks_with_D.size() == gclass_blocks.size();
    for (int nb : nblocks_with_D) {
      auto ind = induced_residue_vector(L.nblocks[nb], L.n_to_g, G.class_count(), pc.ideal);
      int match = -1;
      for (int bi : gclass_blocks)
        if (pc.blocks[bi].residues == ind) match = bi;
      if (match < 0 || hit.count(match)) ok = false;
      else
        hit.insert(match);
    }
    if (!ok) {
      O.verdict = Verdict::fail;
      O.details.push_back("defect-group class " + std::to_string(r) + ": |Bl(N|D)|=" +
                          std::to_string(nblocks_with_D.size()) + " |Bl(G|D)|=" +
                          std::to_string(gclass_blocks.size()) + " bijection fails");
    } else {
      O.details.push_back("defect-group class of order " +
                          std::to_string(Bref.defect_group.order()) + ": " +
                          std::to_string(gclass_blocks.size()) + " blocks matched");
    }
  }
  return O;
}

std::optional<CheckOutcome> check_fixture_expected(GroupContext& gc, long p) {
  const auto& exp_all = gc.entry->expected;
  if (exp_all.is_null() || !exp_all.is_object()) return std::nullopt;
  auto key = std::to_string(p);
  if (!exp_all.contains(key)) return std::nullopt;
  const auto& exp = exp_all[key];
  auto& pc = gc.prime(p);
  const CharacterTable& T = *gc.T;
  CheckOutcome O{"fixture", gc.entry->name, p, Verdict::pass, {}};
  if (exp.contains("character_degrees")) {
    std::vector<long> want = exp["character_degrees"].get<std::vector<long>>();
    std::vector<long> got;
    for (auto& chi : T.irr) got.push_back(chi.degree());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      O.verdict = Verdict::fail;
      O.details.push_back("character degrees differ from the catalogue export");
    }
  }
  if (exp.contains("defect_restriction_levels")) {
    for (const auto& rec : exp["defect_restriction_levels"]) {
      long deg = rec["degree"].get<long>();
      int lev = rec["lev"].get<int>();
      int lev_D = rec["lev_D"].get<int>();
      int lev_N = rec["lev_N"].get<int>();
      bool found = false;
      for (size_t bi = 0; bi < pc.blocks.size() && !found; ++bi) {
        const Block& B = pc.blocks[bi];
        for (int c : B.chars) {
          if (T.irr[c].degree() != deg || T.levels(p)[c] != lev) continue;
          int gotD = restricted_level(T.irr[c], *gc.G, B.defect_group.elems, p);
          int gotN = restricted_level(T.irr[c], *gc.G, pc.locals[bi].n_elems, p);
          if (gotD == lev_D && gotN == lev_N) {
            found = true;
            O.details.push_back("deg " + std::to_string(deg) + ": lev=" + std::to_string(lev) +
                                " lev_D=" + std::to_string(lev_D) + " lev_N=" +
                                std::to_string(lev_N) + " realized by chi" + std::to_string(c));
            break;
          }
        }
      }
      if (!found) {
        O.verdict = Verdict::fail;
        O.details.push_back("no character with deg " + std::to_string(deg) + " lev " +
                            std::to_string(lev) + " lev_D " + std::to_string(lev_D) +
                            " lev_N " + std::to_string(lev_N));
      }
    }
  }
  return O;
}

nlohmann::ordered_json group_table_json(GroupContext& gc, std::optional<long> prime_filter) {
  const Group& G = *gc.G;
  const CharacterTable& T = *gc.T;
  ordered_json j;
  j["name"] = gc.entry->name;
  j["degree"] = G.degree();
  j["order"] = G.order();
  j["exponent"] = G.exponent();
  j["class_count"] = G.class_count();
  {
    ordered_json co = ordered_json::array(), cs = ordered_json::array();
    for (auto& c : G.classes()) {
      co.push_back(c.element_order);
      cs.push_back(c.size);
    }
    j["class_orders"] = std::move(co);
    j["class_sizes"] = std::move(cs);
  }
  {
    ordered_json d = ordered_json::array();
    for (auto& chi : T.irr) d.push_back(chi.degree());
    j["character_degrees"] = std::move(d);
  }
  ordered_json primes = ordered_json::object();
  for (long p : prime_divisors(G.order())) {
    if (prime_filter && *prime_filter != p) continue;
    auto& pc = gc.prime(p);
    ordered_json pj;
    pj["sylow_order"] = pc.sylow.order();
    pj["sylow_abelian"] = pc.sylow.is_abelian();
    pj["sylow_cyclic"] = pc.sylow.is_cyclic();
    {
      ordered_json lv = ordered_json::array(), wc = ordered_json::array();
      for (int c = 0; c < T.size(); ++c) {
        lv.push_back(T.levels(p)[c]);
        wc.push_back(level_witness(T.irr[c], p).first);
      }
      pj["levels"] = std::move(lv);
      pj["witness_classes"] = std::move(wc);
    }
    ordered_json bj = ordered_json::array();
    for (size_t bi = 0; bi < pc.blocks.size(); ++bi) {
      const Block& B = pc.blocks[bi];
      const BlockLocal& L = pc.locals[bi];
      ordered_json b;
      b["characters"] = B.chars;
      b["defect"] = B.defect;
      b["defect_group_order"] = B.defect_group.order();
      b["defect_group_cyclic"] = B.defect_group.is_cyclic();
      b["defect_group_abelian"] = B.defect_group.is_abelian();
      b["principal"] = B.principal;
      b["heights"] = B.heights;
      {
        ordered_json lv = ordered_json::array(), ld = ordered_json::array(),
                     ln = ordered_json::array(), wn = ordered_json::array();
        // classes meeting N (for the max-level witness location finding)
        std::vector<char> meets_n(G.class_count(), 0);
        for (int e : L.n_elems) meets_n[G.class_of(e)] = 1;
        for (int c : B.chars) {
          lv.push_back(T.levels(p)[c]);
          ld.push_back(restricted_level(T.irr[c], G, B.defect_group.elems, p));
          ln.push_back(restricted_level(T.irr[c], G, L.n_elems, p));
          // does every class realizing the top level meet N_G(D)?
          bool all_in_n = true;
          int lev = T.levels(p)[c];
          if (lev >= 1) {
            for (int cl = 0; cl < G.class_count(); ++cl)
              if (level(T.irr[c].values[cl], p) == lev && !meets_n[cl]) all_in_n = false;
          }
          wn.push_back(all_in_n);
        }
        b["levels"] = std::move(lv);
        b["levels_on_defect_group"] = std::move(ld);
        b["levels_on_defect_normalizer"] = std::move(ln);
        b["max_level_classes_meet_normalizer"] = std::move(wn);
      }
      b["normalizer_order"] = (long)L.n_elems.size();
      b["correspondent_character_count"] = (long)L.nblocks[L.correspondent].chars.size();
      if (L.cyclic) {
        ordered_json cd;
        cd["status"] =
            L.cyclic->status == CyclicStatus::classified ? "classified" : "indeterminate";
        cd["e"] = L.cyclic->e;
        cd["lambda_count"] = L.cyclic->lambda_count;
        if (L.cyclic->status == CyclicStatus::classified) {
          cd["exceptional"] = L.cyclic->exceptional;
          cd["nonexceptional"] = L.cyclic->nonexceptional;
        }
        b["cyclic_defect"] = std::move(cd);
      }
      bj.push_back(std::move(b));
    }
    pj["blocks"] = std::move(bj);
    primes[std::to_string(p)] = std::move(pj);
  }
  j["primes"] = std::move(primes);
  return j;
}

VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport R;
  std::vector<std::vector<CheckOutcome>> per_entry(entries.size());
  std::vector<ordered_json> tables(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());

  auto want = [&](const std::string& st) {
    return !opts.statement || *opts.statement == st;
  };

  auto process = [&](size_t idx) {
    try {
      GroupContext gc = build_group_context(entries[idx], opts.seed);
      std::vector<CheckOutcome> outs;
      for (long p : prime_divisors(gc.G->order())) {
        if (opts.prime && *opts.prime != p) continue;
        if (want("conj_main")) outs.push_back(check_conjecture_main(gc, p));
        if (want("conj_ntC")) outs.push_back(check_conjecture_ntC(gc, p));
        if (want("thm_A")) outs.push_back(check_theorem_A(gc, p));
        bool lemmas = false;
        for (auto st : {"lem_3_1", "cor_3_2", "lem_3_3", "lem_4_2", "lem_4_3", "lem_6_3"})
          lemmas = lemmas || want(st);
        if (lemmas) {
          for (auto& o : check_lemma_suite(gc, p))
            if (want(o.statement)) outs.push_back(std::move(o));
        }
        if (want("amn_consequence")) outs.push_back(check_amn_consequence(gc, p));
        bool cons = false;
        for (auto st : {"cons_7_2", "cons_7_3", "cons_7_4"}) cons = cons || want(st);
        if (cons) {
          for (auto& o : check_consequences(gc, p))
            if (want(o.statement)) outs.push_back(std::move(o));
        }
        if (want("brauer_first_main")) outs.push_back(check_brauer_bijection(gc, p));
        if (want("fixture")) {
          auto fo = check_fixture_expected(gc, p);
          if (fo) outs.push_back(std::move(*fo));
        }
      }
      per_entry[idx] = std::move(outs);
      tables[idx] = group_table_json(gc, opts.prime);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  if (opts.jobs > 1) {
    set_thread_budget(opts.jobs);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < (long)entries.size(); ++idx) process((size_t)idx);
  } else {
    for (size_t idx = 0; idx < entries.size(); ++idx) process(idx);
  }
  for (size_t idx = 0; idx < entries.size(); ++idx)
    if (errors[idx]) std::rethrow_exception(errors[idx]);

  for (size_t idx = 0; idx < entries.size(); ++idx) {
    for (auto& o : per_entry[idx]) {
      switch (o.verdict) {
        case Verdict::pass: ++R.pass; break;
        case Verdict::fail:
          ++R.failed;
          R.proven_violation = true;
          break;
        case Verdict::finding: ++R.findings; break;
        case Verdict::not_applicable: ++R.inapplicable; break;
      }
      R.outcomes.push_back(std::move(o));
    }
    R.group_tables.push_back(std::move(tables[idx]));
  }
  R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return R;
}

}  // namespace blockscope
