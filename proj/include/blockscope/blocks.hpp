#pragma once

#include <vector>

#include "blockscope/chartab.hpp"
#include "blockscope/cyclo.hpp"
#include "blockscope/perm.hpp"

namespace blockscope {

// A p-block of Irr(G): members, defect data, one defect-group representative,
// and the residue vector of its central character modulo the chosen ideal.
struct Block {
  long p = 2;
  std::vector<int> chars;      // indices into the table, ascending
  int defect = 0;
  std::vector<int> heights;    // parallel to chars
  Subgroup defect_group;       // subgroup of the ambient group
  std::vector<long> residues;  // residue-field element per class
  bool principal = false;
};

enum class CyclicStatus { classified, indeterminate };

struct CyclicDefectData {
  std::vector<int> exceptional;     // char indices (into the table)
  std::vector<int> nonexceptional;  // char indices
  long e = 0;                       // inertial index
  long lambda_count = 0;            // (p^a - 1) / e
  CyclicStatus status = CyclicStatus::indeterminate;
};

// omega_chi(K^) = |K| chi(g_K) / chi(1) reduced mod the ideal, per class.
std::vector<long> central_character_residues(const Character& chi, const PrimeIdealData& ideal);

// Partition of Irr(G) into p-blocks by equality of residue vectors. Blocks
// are ordered principal first, then by minimal character index. Defect
// groups are located via a defect class (residue nonzero, class of defect
// equal to the block defect).
std::vector<Block> p_blocks(const Group& G, const CharacterTable& T, const PrimeIdealData& ideal);

// Defect group search alone (used internally by p_blocks; exposed for tests).
Subgroup block_defect_group(const Group& G, long p, const std::vector<long>& residues,
                            int defect, uint64_t seed = 0);

// Map from classes of the materialized subgroup N to classes of G.
std::vector<int> class_map_into(const Group& N, const Group& G);

// lambda_b^G: the induced central function of an N-block on G-classes
// (sum of lambda_b over the N-classes inside each G-class).
std::vector<long> induced_residue_vector(const Block& b, const std::vector<int>& n_to_g,
                                         int g_class_count, const PrimeIdealData& ideal);

// Index into gblocks of the Brauer correspondent of nblocks[b] (the G-block
// whose residues equal the induced ones). CorrespondentNotFound or
// AmbiguousCorrespondent when matching fails (bug signals).
int brauer_correspondent(const std::vector<Block>& gblocks, const Block& nblock,
                         const std::vector<int>& n_to_g, int g_class_count,
                         const PrimeIdealData& ideal);

// Partition of a cyclic-defect block into exceptional / non-exceptional
// characters by equality of values on p-regular classes. Indeterminate when
// the family is not a proper subset (the e = 1 and |Lambda| = 1 situations).
CyclicDefectData cyclic_defect_classify(const Group& G, const CharacterTable& T, const Block& B);

// For an exceptional character of positive level in a cyclic-defect block:
// every element whose value realizes the character's level must have p-part
// generating a conjugate of the defect group.
bool level_element_check(const Group& G, const CharacterTable& T, const Block& B, int chi,
                         long p);

}  // namespace blockscope
