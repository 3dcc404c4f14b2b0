#include "blockscope/numth.hpp"

#include "blockscope/common.hpp"

namespace blockscope {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_permutation: return "MalformedPermutation";
    case Errc::enumeration_bound_exceeded: return "EnumerationBoundExceeded";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::bad_exponent: return "BadExponent";
    case Errc::not_algebraic_integer: return "NotAlgebraicInteger";
    case Errc::lifting_failure: return "LiftingFailure";
    case Errc::defect_class_not_found: return "DefectClassNotFound";
    case Errc::correspondent_not_found: return "CorrespondentNotFound";
    case Errc::ambiguous_correspondent: return "AmbiguousCorrespondent";
    case Errc::not_cyclic_defect: return "NotCyclicDefect";
    case Errc::size_bound_exceeded: return "SizeBoundExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::unknown_command: return "UnknownCommand";
    case Errc::proven_statement_violated: return "ProvenStatementViolated";
  }
  return "Error";
}

long gcd_l(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_l(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_l(a, b) * b;
}

bool is_prime_l(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> fac;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

int valuation(long n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long p_part(long n, long p) {
  long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

long p_prime_part(long n, long p) { return n / p_part(n, p); }

long euler_phi(long n) {
  long phi = n;
  for (auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

long mod_pow(long x, long e, long m) {
  long r = 1 % m;
  x %= m;
  if (x < 0) x += m;
  while (e > 0) {
    if (e & 1) r = (__int128)r * x % m;
    x = (__int128)x * x % m;
    e >>= 1;
  }
  return r;
}

long mod_inv(long x, long m) {
  long a = x % m, b = m, u = 1, v = 0;
  if (a < 0) a += m;
  while (b) {
    long t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  if (a != 1) fail(Errc::bad_exponent, "mod_inv: arguments not coprime");
  u %= m;
  if (u < 0) u += m;
  return u;
}

long crt2(long r1, long m1, long r2, long m2) {
  // k = r1 + m1*t with t = (r2-r1)/m1 mod m2
  long t = ((r2 - r1) % m2 + m2) % m2;
  t = (__int128)t * mod_inv(m1 % m2, m2) % m2;
  return r1 + m1 * t;
}

long mult_order(long x, long m) {
  long o = 1, y = x % m;
  if (y < 0) y += m;
  while (y != 1 % m) {
    y = (__int128)y * x % m;
    ++o;
  }
  return o;
}

long next_prime_1mod(long m, long floor_bound) {
  long q = (floor_bound / m) * m + 1;
  while (q <= floor_bound || q < 3 || !is_prime_l(q)) q += m;
  return q;
}

long element_of_order(long m, long q) {
  auto fac = factorize(m);
  for (long a = 2; a < q; ++a) {
    long z = mod_pow(a, (q - 1) / m, q);
    bool ok = z != 1 || m == 1;
    for (auto& [p, e] : fac)
      if (mod_pow(z, m / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  fail(Errc::lifting_failure, "no element of requested order mod q");
}

}  // namespace blockscope
