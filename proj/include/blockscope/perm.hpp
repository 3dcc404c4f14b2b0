#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace blockscope {

using Point = int32_t;

// A permutation of {0, ..., n-1}, stored as the image array.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(int degree);

  int degree() const { return (int)img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  // (a*b)(x) = a(b(x))
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  long order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string cycle_string() const;

private:
  std::vector<Point> img_;
};

struct ConjClass {
  int rep;                  // element index of the minimal member
  long size;
  long centralizer_order;
  long element_order;
};

// An enumerated permutation group. Elements are indexed 0..order-1 in
// lexicographic order of image arrays (so index 0 is the identity).
class Group {
public:
  Group(int degree, std::vector<Permutation> generators);

  // Wraps an already-closed element list (skips the closure recheck).
  static Group from_elements(int degree, std::vector<Permutation> elements,
                             std::vector<Permutation> generators);

  int degree() const { return degree_; }
  long order() const { return (long)elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& element(int i) const { return elems_[i]; }

  int index_of(const Permutation& p) const;  // -1 if not a member
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  int mult(int i, int j) const;  // index of elems_[i] * elems_[j]
  int inv(int i) const;
  long element_order(int i) const;
  long exponent() const;

  const std::vector<ConjClass>& classes() const;
  int class_of(int i) const;          // class index of element i
  int class_count() const { return (int)classes().size(); }
  int inverse_class(int c) const;     // class of inverses

  // Class of the k-th power of class c (k may be any integer).
  int power_class(int c, long k) const;
  // power_class for every class at once.
  std::vector<int> power_class_map(long k) const;

  // Class multiplication constants a[i][j][l] with K_i K_j = sum_l a_ijl K_l.
  // Parallel over l; the _serial variant is the reference implementation.
  std::vector<std::vector<std::vector<long>>> class_constants() const;
  std::vector<std::vector<std::vector<long>>> class_constants_serial() const;

private:
  Group() = default;
  void index_elements();
  void compute_classes() const;

  int degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<uint64_t, std::vector<int>> index_;  // hash -> candidate ids
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<long> orders_;
};

// A subgroup as an element subset of its ambient group.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<int> elems;  // sorted element indices in the parent
  std::vector<int> gens;   // generator indices (subset of elems)

  long order() const { return (long)elems.size(); }
  bool contains(int idx) const;
  // Re-enumerates the subgroup as a standalone Group (same degree).
  Group as_group() const;
  bool is_cyclic() const;
  bool is_abelian() const;
  long exponent() const;
};

Group group_from_generators(int degree, const std::vector<std::vector<Point>>& images);

Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);
Subgroup subgroup_closure(const Group& G, std::vector<int> seed);
// Minimal-ish generator list for an element set known to be closed.
std::vector<int> generators_of(const Group& G, const std::vector<int>& elems);

Subgroup centralizer(const Group& G, const std::vector<int>& elems);
Subgroup centralizer_serial(const Group& G, const std::vector<int>& elems);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup normalizer_serial(const Group& G, const Subgroup& H);

// Sylow p-subgroup by normalizer ascent; deterministic for a fixed seed.
Subgroup sylow_subgroup(const Group& G, long p, uint64_t seed = 0);

// g = g_p * g_p' as indices (both powers of g).
std::pair<int, int> p_decomposition(const Group& G, int g, long p);

// True iff some G-conjugate of element g lies in H.
bool conjugate_into(const Group& G, int g, const Subgroup& H);
// True iff H and K are conjugate subgroups of G.
bool subgroups_conjugate(const Group& G, const Subgroup& H, const Subgroup& K);

}  // namespace blockscope
