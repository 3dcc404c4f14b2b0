#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blockscope/chartab.hpp"
#include "blockscope/cyclo.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/perm.hpp"

namespace blockscope {

// n x n matrices over GF(q^2), row-major element indices into the field.
using FqMat = std::vector<long>;

// GF(q^2) for a prime power q.
std::shared_ptr<const GFTable> gu_field(long q);

// The unitary group GU_n(q) for the identity Gram matrix and the conjugation
// x -> x^q, enumerated by generator closure (diagonal + permutation +
// pseudo-reflection seeds), order-checked against
// q^(n(n-1)/2) * prod_{i<=n} (q^i - (-1)^i).
struct UnitaryGroup {
  int n = 1;
  long q = 2;
  std::shared_ptr<const GFTable> F;
  long xi_hat = 0;  // deterministic generator of the order-(q+1) subgroup
  std::vector<FqMat> elements;
  std::vector<FqMat> gens;
  std::vector<int> class_of;    // conjugacy class per element
  std::vector<int> class_reps;  // element index of each class representative
  long order() const { return (long)elements.size(); }
};

long gu_order_formula(int n, long q);
UnitaryGroup gu_group(int n, long q);
// Exhaustive matrix scan; only for tiny parameter sets. Second oracle for (3,2).
std::vector<FqMat> gu_brute_force(int n, long q);

// dim ker(g - scalar * I) over GF(q^2).
int kernel_dimension(const GFTable& F, const FqMat& g, int n, long scalar);

// chi_i(g) = (-1)^n/(q+1) * sum_k xi^{-ik} (-q)^{dim ker(g - xi_hat^{-k})}.
Cyclotomic weil_value(const GFTable& F, const FqMat& g, int n, long q, long i, long xi_hat);

// Batch evaluation over a list of matrices (OpenMP); serial reference kept.
std::vector<Cyclotomic> weil_values(const UnitaryGroup& U, long i);
std::vector<Cyclotomic> weil_values_serial(const UnitaryGroup& U, long i);

// zeta^{i j} + zeta^{-i j} with zeta a primitive (q - eps)-th root of unity.
Cyclotomic sl2_semisimple_value(long q, int eps, long i, long j);

// PSL(2,q) = SL(2,q) on the projective line for q = 2^f (q+1 points).
Group psl2_group(long q);

struct WeilConsistencyResult {
  int n = 3;
  long q = 2;
  long p = 3;
  bool applicable = false;
  long group_order = 0;
  bool class_function_ok = false;
  bool degree_ok = false;
  bool norms_ok = false;
  bool levels_ok = false;
  bool dixon_checked = false;
  bool dixon_match_ok = false;
  std::vector<std::string> notes;
  bool ok() const {
    return !applicable || (class_function_ok && degree_ok && norms_ok && levels_ok &&
                           (!dixon_checked || dixon_match_ok));
  }
};

// Class-function property, degrees, norms, level identities against the
// linear characters of C_{q+1}, and (order permitting) a match against the
// Dixon table of the group realized as permutations on itself.
WeilConsistencyResult weil_consistency(int n, long q, long p);

struct Sl2OracleResult {
  long q = 8;
  int eps = -1;
  long p = 3;
  bool matched_all = false;
  int sign = 0;         // global sign relating table values to the formula
  int matched_count = 0;
  bool levels_ok = false;
  std::vector<std::string> notes;
  bool ok() const { return matched_all && levels_ok; }
};

// Matches every degree-(q+eps) character of SL(2,q), q even, against the
// zeta^{ij}+zeta^{-ij} pattern on the classes of the order-(q-eps) torus,
// and checks the p-level identities lev(chi) = lev(chi_P).
Sl2OracleResult sl2_oracle_check(long q, int eps, long p);

}  // namespace blockscope
