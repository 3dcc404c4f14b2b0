#include "blockscope/blocks.hpp"

#include <algorithm>
#include <map>

#include "blockscope/common.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/numth.hpp"

namespace blockscope {

std::vector<long> central_character_residues(const Character& chi, const PrimeIdealData& ideal) {
  const Group& G = *chi.grp;
  const auto& cls = G.classes();
  long d = chi.degree();
  std::vector<long> out(cls.size());
  for (size_t j = 0; j < cls.size(); ++j) {
    Cyclotomic omega = chi.values[j] * mpq_class(cls[j].size) / mpq_class(d);
    if (!omega.is_algebraic_integer())
      fail(Errc::not_algebraic_integer, "central character value is not an algebraic integer");
    out[j] = residue(omega, ideal);
  }
  return out;
}

Subgroup block_defect_group(const Group& G, long p, const std::vector<long>& residues,
                            int defect, uint64_t seed) {
  const auto& cls = G.classes();
  int target_nu = valuation(G.order(), p) - defect;
  for (size_t j = 0; j < cls.size(); ++j) {
    if (residues[j] == 0) continue;
    if (valuation(cls[j].size, p) != target_nu) continue;
    Subgroup C = centralizer(G, {cls[j].rep});
    Group Cg = C.as_group();
    Subgroup P = sylow_subgroup(Cg, p, seed);
    // pull back into G
    Subgroup D;
    D.parent = &G;
    for (int i : P.elems) D.elems.push_back(G.index_of(Cg.element(i)));
    std::sort(D.elems.begin(), D.elems.end());
    for (int i : P.gens) D.gens.push_back(G.index_of(Cg.element(i)));
    long want = 1;
    for (int t = 0; t < defect; ++t) want *= p;
    if (D.order() != want)
      fail(Errc::defect_class_not_found, "defect class gave a Sylow subgroup of the wrong order");
    return D;
  }
  fail(Errc::defect_class_not_found, "no defect class with nonzero residue");
}

std::vector<Block> p_blocks(const Group& G, const CharacterTable& T, const PrimeIdealData& ideal) {
  const long p = ideal.p;
  const int k = T.size();
  std::vector<std::vector<long>> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = central_character_residues(T.irr[i], ideal);

  std::vector<int> owner(k, -1);
  std::vector<Block> blocks;
  for (int i = 0; i < k; ++i) {
    if (owner[i] >= 0) continue;
    Block B;
    B.p = p;
    B.residues = rows[i];
    for (int j = i; j < k; ++j)
      if (owner[j] < 0 && rows[j] == rows[i]) {
        owner[j] = (int)blocks.size();
        B.chars.push_back(j);
      }
    blocks.push_back(std::move(B));
  }

  // defects and heights
  const long nuG = valuation(G.order(), p);
  for (auto& B : blocks) {
    int mn = 1 << 30;
    for (int c : B.chars) mn = std::min(mn, valuation(T.irr[c].degree(), p));
    B.defect = (int)nuG - mn;
    for (int c : B.chars) B.heights.push_back(valuation(T.irr[c].degree(), p) - mn);
    bool has_trivial = false;
    for (int c : B.chars) {
      bool all_one = true;
      for (auto& v : T.irr[c].values) all_one = all_one && v == Cyclotomic(1);
      has_trivial = has_trivial || all_one;
    }
    B.principal = has_trivial;
    B.defect_group = block_defect_group(G, p, B.residues, B.defect);
  }

  // principal block first, then by minimal character index
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.principal != b.principal) return a.principal;
    return a.chars.front() < b.chars.front();
  });
  return blocks;
}

std::vector<int> class_map_into(const Group& N, const Group& G) {
  std::vector<int> m(N.class_count());
  for (int c = 0; c < N.class_count(); ++c) {
    int gi = G.index_of(N.element(N.classes()[c].rep));
    if (gi < 0) fail(Errc::malformed_permutation, "subgroup element missing from parent group");
    m[c] = G.class_of(gi);
  }
  return m;
}

std::vector<long> induced_residue_vector(const Block& b, const std::vector<int>& n_to_g,
                                         int g_class_count, const PrimeIdealData& ideal) {
  const auto& F = *ideal.field;
  std::vector<long> out(g_class_count, 0);
  for (size_t c = 0; c < n_to_g.size(); ++c) out[n_to_g[c]] = F.add(out[n_to_g[c]], b.residues[c]);
  return out;
}

int brauer_correspondent(const std::vector<Block>& gblocks, const Block& nblock,
                         const std::vector<int>& n_to_g, int g_class_count,
                         const PrimeIdealData& ideal) {
  auto ind = induced_residue_vector(nblock, n_to_g, g_class_count, ideal);
  int found = -1;
  for (size_t i = 0; i < gblocks.size(); ++i) {
    if (gblocks[i].residues == ind) {
      if (found >= 0) fail(Errc::ambiguous_correspondent, "two blocks share the induced residues");
      found = (int)i;
    }
  }
  if (found < 0) fail(Errc::correspondent_not_found, "induced central function matches no block");
  return found;
}

CyclicDefectData cyclic_defect_classify(const Group& G, const CharacterTable& T, const Block& B) {
  const long p = B.p;
  if (B.defect < 1 || !B.defect_group.is_cyclic())
    fail(Errc::not_cyclic_defect, "block defect group is not cyclic and nontrivial");
  const auto& cls = G.classes();
  std::vector<int> preg;
  for (int j = 0; j < (int)cls.size(); ++j)
    if (cls[j].element_order % p != 0) preg.push_back(j);

  // group members by their value tuples on p-regular classes
  std::vector<int> family(B.chars.size(), -1);
  int nfam = 0;
  for (size_t i = 0; i < B.chars.size(); ++i) {
    if (family[i] >= 0) continue;
    family[i] = nfam;
    for (size_t j = i + 1; j < B.chars.size(); ++j) {
      if (family[j] >= 0) continue;
      bool same = true;
      for (int c : preg)
        if (T.irr[B.chars[i]].values[c] != T.irr[B.chars[j]].values[c]) {
          same = false;
          break;
        }
      if (same) family[j] = nfam;
    }
    ++nfam;
  }
  std::vector<std::vector<int>> groups(nfam);
  for (size_t i = 0; i < B.chars.size(); ++i) groups[family[i]].push_back(B.chars[i]);
  std::vector<int> big;  // indices of families of size > 1
  for (int f = 0; f < nfam; ++f)
    if (groups[f].size() > 1) big.push_back(f);

  long pa = 1;
  for (int t = 0; t < B.defect; ++t) pa *= p;

  CyclicDefectData data;
  if (big.size() > 1)
    fail(Errc::lifting_failure, "more than one repeated-value family in a cyclic block");
  if (big.empty()) {
    // |Lambda| = 1: one exceptional character, indistinguishable from the
    // nonexceptional ones; only the count identities are meaningful.
    data.status = CyclicStatus::indeterminate;
    data.e = (long)B.chars.size() - 1;
    data.lambda_count = 1;
    if (data.e < 1 || data.e * data.lambda_count != pa - 1)
      fail(Errc::not_cyclic_defect, "character count violates the cyclic-block identity");
    return data;
  }
  const auto& fam = groups[big[0]];
  if (fam.size() == B.chars.size()) {
    // e = 1: all characters share the single Brauer character's p-regular
    // values; the unique nonexceptional member cannot be singled out.
    data.status = CyclicStatus::indeterminate;
    data.e = 1;
    data.lambda_count = (long)B.chars.size() - 1;
    if (data.lambda_count != pa - 1)
      fail(Errc::not_cyclic_defect, "character count violates the cyclic-block identity");
    return data;
  }
  data.status = CyclicStatus::classified;
  data.exceptional = fam;
  for (int c : B.chars)
    if (std::find(fam.begin(), fam.end(), c) == fam.end()) data.nonexceptional.push_back(c);
  data.e = (long)data.nonexceptional.size();
  data.lambda_count = (long)data.exceptional.size();
  if (data.e * data.lambda_count != pa - 1 ||
      data.e + data.lambda_count != (long)B.chars.size())
    fail(Errc::not_cyclic_defect, "classified family sizes violate the cyclic-block identities");
  if (p != 2 && (p - 1) % data.e != 0)
    fail(Errc::not_cyclic_defect, "inertial index does not divide p-1");
  return data;
}

bool level_element_check(const Group& G, const CharacterTable& T, const Block& B, int chi,
                         long p) {
  const Character& X = T.irr[chi];
  int lev = T.levels(p)[chi];
  if (lev < 1) return true;  // nothing to check
  const auto& cls = G.classes();
  long dorder = B.defect_group.order();
  for (size_t j = 0; j < cls.size(); ++j) {
    if (level(X.values[j], p) != lev) continue;
    auto [gp, gpp] = p_decomposition(G, cls[j].rep, p);
    if (G.element_order(gp) != dorder) return false;
    if (!conjugate_into(G, gp, B.defect_group)) return false;
  }
  return true;
}

}  // namespace blockscope
