#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blockscope {

// Exact element of a cyclotomic field Q_n, held as the canonical coefficient
// vector of 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial,
// where z = exp(2*pi*i/n). Ambients are never = 2 (mod 4); arithmetic between
// different ambients lifts both operands to the lcm.
class Cyclotomic {
public:
  Cyclotomic();  // zero in Q_1
  explicit Cyclotomic(const mpq_class& r);
  explicit Cyclotomic(long r);

  // z_n^k, with the mod-4 normalization applied to the ambient.
  static Cyclotomic root(long n, long k);

  long ambient() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Defined when is_rational().
  mpq_class rational_value() const;
  // All power-basis coefficients integral (equivalent to being an algebraic
  // integer, since Z[z_n] is the full ring of integers of Q_n).
  bool is_algebraic_integer() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic operator*(const mpq_class& s) const;
  Cyclotomic operator/(const mpq_class& s) const;

  // Image under z_n -> z_n^k; requires gcd(k, n) = 1 (BadExponent otherwise).
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const;

  // Same value re-expressed in Q_m; requires the value to lie in Q_m and
  // n | lcm handling done by the caller (m must be a multiple of the
  // conductor and m != 2 mod 4).
  Cyclotomic lifted_to(long m) const;

  // Drops the ambient to 1 when the value is rational (cheap canonicalization).
  void shrink();

  std::string str() const;

  // Total order usable for deterministic sorting: both values are compared
  // through their coefficient vectors in Q_lcm. Not compatible with numeric
  // order; stable under representation.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

private:
  struct Ring;
  static std::shared_ptr<const Ring> ring(long n);
  Cyclotomic(std::shared_ptr<const Ring> r, std::vector<mpq_class> c);

  long n_;
  std::shared_ptr<const Ring> ring_;
  std::vector<mpq_class> c_;
};

// Conductor of a set of values: the smallest n with all values in Q_n,
// normalized to never be = 2 (mod 4). Empty set has conductor 1.
long conductor(std::span<const Cyclotomic> values);
long conductor(const Cyclotomic& v);

// p-rationality level: nu_p(conductor(values)).
int level(std::span<const Cyclotomic> values, long p);
int level(const Cyclotomic& v, long p);

// Exponent k mod n with k = 1 + p^e on the p-part of n and k = 1 on the
// p'-part; realizes the Galois automorphism sigma_e.
long sigma_e_exponent(long n, long p, long e);

// True iff Q_4 is contained in the field generated by the values.
bool field_contains_q4(std::span<const Cyclotomic> values);

// Q(values_a) == Q(values_b) as subfields of the ambient cyclotomic field.
bool same_field(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

// sqrt(d) for squarefree d (any sign), as an exact cyclotomic (Gauss sums).
Cyclotomic sqrt_of_squarefree(long d);

// Chosen maximal ideal above p in Q_{p^inf * m}: p, the p'-modulus m, the
// irreducible factor of the m-th cyclotomic polynomial mod p, and the
// residue field F_{p^deg(factor)}.
struct PrimeIdealData {
  long p = 2;
  long m = 1;
  std::vector<long> factor;  // monic, low degree first
  int residue_degree = 1;
  std::shared_ptr<const class GFTable> field;  // F_p[t]/(factor)
  long root = 0;                               // image of z_m in the residue field
};

// Deterministic choice: lexicographically smallest irreducible factor.
PrimeIdealData prime_ideal(long p, long m);
// Every factor choice (for the invariance test).
std::vector<PrimeIdealData> prime_ideal_all_choices(long p, long m);

// Reduction of an algebraic integer modulo the chosen ideal; p-power roots of
// unity map to 1. NotAlgebraicInteger if a denominator is divisible by p
// (values of central characters never are).
long residue(const Cyclotomic& v, const PrimeIdealData& ideal);

}  // namespace blockscope
