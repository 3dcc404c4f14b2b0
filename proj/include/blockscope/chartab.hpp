#pragma once

#include <map>
#include <optional>
#include <vector>

#include "blockscope/cyclo.hpp"
#include "blockscope/perm.hpp"

namespace blockscope {

// A class function with exact cyclotomic values, indexed by the conjugacy
// classes of grp. Characters produced by the table builder are irreducible;
// restrictions, inductions and Delta-parts may not be.
struct Character {
  const Group* grp = nullptr;
  std::vector<Cyclotomic> values;
  bool irreducible = false;

  long degree() const;  // value at the identity class, as an integer
  const Cyclotomic& at(int cls) const { return values[cls]; }
};

class CharacterTable {
public:
  const Group* grp = nullptr;
  std::vector<Character> irr;
  long group_exponent = 1;

  int size() const { return (int)irr.size(); }
  const std::vector<int>& power_map(long k) const;       // class -> class of k-th powers
  const std::vector<int>& levels(long p) const;          // char_level per irreducible
  int index_of(const Character& chi) const;              // -1 if absent

private:
  mutable std::map<long, std::vector<int>> power_maps_;
  mutable std::map<long, std::vector<int>> levels_;
};

// Exact table via Dixon-Schneider: class-algebra eigenvectors over F_q for a
// deterministic q = 1 (mod exp G), q > 2*ceil(sqrt(|G|)), lifted to
// cyclotomics. Characters ordered by degree, then value vectors.
CharacterTable character_table(const Group& G);

// (1/|G|) sum over classes of |K| a(g) conj(b(g)); rational for class
// functions with cyclotomic-stable value sets, integral for characters.
mpq_class inner_product(const Character& a, const Character& b);

// chi restricted to the subgroup H (a materialized Group on the same points,
// all of whose elements belong to chi's group).
Character restrict_to(const Character& chi, const Group& H);

// Multiplicities of psi against the irreducibles of T; checked nonnegative
// integers when psi is a character.
std::vector<long> decompose(const CharacterTable& T, const Character& psi);

// Induced class function from psi on H up to G (H's elements inside G).
Character induce_from(const Character& psi, const Group& G);

// p-rationality level of the character's full value set.
int value_set_level(const Character& chi, long p);
// Level of {chi(h) : h in H} without building H's table.
int restricted_level(const Character& chi, const Group& G, const std::vector<int>& h_elems, long p);

// Class index realizing the maximum per-class level (Remark-style witness),
// together with that level.
std::pair<int, int> level_witness(const Character& chi, long p);

// Sum of the irreducible constituents of Psi of level exactly i (with
// multiplicity); zero class function when there are none.
Character delta_part(const CharacterTable& T, const Character& Psi, int i, long p);

// max{i : Delta_i(Psi)(1) != 0 mod p}, or nullopt when every part's degree
// is divisible by p.
std::optional<int> ell_invariant(const CharacterTable& T, const Character& Psi, long p);

// Index of chi^sigma_k in the table (values moved through the power map).
int galois_permute(const CharacterTable& T, int chi, long k);

}  // namespace blockscope
