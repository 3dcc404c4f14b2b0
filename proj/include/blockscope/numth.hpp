#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace blockscope {

// Elementary number theory over machine integers. Everything here is
// deterministic and sized for desk-scale inputs (arguments well below 2^40).

long gcd_l(long a, long b);
long lcm_l(long a, long b);

bool is_prime_l(long n);
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> prime_divisors(long n);

// p-adic valuation of n (n != 0).
int valuation(long n, long p);
// Largest power of p dividing n, and the complementary p'-part.
long p_part(long n, long p);
long p_prime_part(long n, long p);

long euler_phi(long n);

// x^e mod m with 0 <= x < m, m < 2^31.
long mod_pow(long x, long e, long m);
// Inverse of x mod m, gcd(x, m) = 1.
long mod_inv(long x, long m);
// Solve k = r1 mod m1, k = r2 mod m2 with gcd(m1, m2) = 1; result in [0, m1*m2).
long crt2(long r1, long m1, long r2, long m2);

// Multiplicative order of x mod m, gcd(x, m) = 1.
long mult_order(long x, long m);

// Smallest prime q = 1 (mod m) with q > floor_bound.
long next_prime_1mod(long m, long floor_bound);

// Deterministic element of multiplicative order exactly m in F_q (m | q-1).
long element_of_order(long m, long q);

}  // namespace blockscope
