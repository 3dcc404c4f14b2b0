#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blockscope {

// GF(p^d) as F_p[x]/(f) for a monic irreducible f, elements packed as
// base-p integer indices (coefficient of x^i is digit i). Small fields only;
// multiplication goes through log/antilog tables.
class GFTable {
public:
  // Field with the given modulus polynomial (coefficients mod p, degree d,
  // monic; irreducibility is the caller's responsibility).
  GFTable(long p, std::vector<long> modulus);

  // Field of order p^d with the lexicographically smallest monic irreducible
  // modulus (coefficients compared as integers, low degree first).
  static std::shared_ptr<const GFTable> get(long p, int d);

  long p() const { return p_; }
  int degree() const { return d_; }
  long size() const { return size_; }
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long a, long b) const;
  long neg(long a) const;
  long sub(long a, long b) const { return add(a, neg(b)); }
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long e) const;
  long from_int(long t) const;        // image of the rational integer t
  long generator() const { return gen_; }
  long frobenius(long a, int k = 1) const;  // a^(p^k)
  long mult_order(long a) const;

  std::string to_string(long a) const;

private:
  long p_;
  int d_;
  long size_;
  std::vector<long> modulus_;
  long gen_ = 0;
  std::vector<int32_t> log_;   // log_[a] for a != 0
  std::vector<int32_t> exp_;   // exp_[k] = gen^k, k in [0, size-1)
  long mul_poly(long a, long b) const;
};

// Lexicographically smallest monic irreducible polynomial of degree d over
// F_p, low-degree coefficients first, constant term included, leading 1
// omitted from the comparison (it is forced).
std::vector<long> lex_min_irreducible(long p, int d);

// Polynomial utilities over F_p (dense coefficient vectors, low degree first).
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p);
std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& m, long p);
std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p);
bool poly_is_irreducible(const std::vector<long>& f, long p);

// All monic irreducible factors of f over F_p (f squarefree), sorted
// lexicographically (coefficients as integers, low degree first).
// Deterministic Berlekamp splitting.
std::vector<std::vector<long>> berlekamp_factors(const std::vector<long>& f, long p);

}  // namespace blockscope
