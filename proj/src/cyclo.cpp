#include "blockscope/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "blockscope/common.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/numth.hpp"

namespace blockscope {

namespace {

// n-th cyclotomic polynomial over Z, low degree first, monic.
const std::vector<mpz_class>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // iterative over divisors so recursion depth stays trivial
  std::vector<long> divs;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  for (long d : divs) {
    if (cache.count(d)) continue;
    std::vector<mpz_class> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;  // x^d - 1
    for (long e : divs) {
      if (e >= d || d % e != 0) continue;
      const auto& g = cache.at(e);
      // exact division f /= g (g monic)
      std::vector<mpz_class> q(f.size() - g.size() + 1, 0);
      for (int k = (int)q.size() - 1; k >= 0; --k) {
        q[k] = f[k + g.size() - 1];
        if (q[k] == 0) continue;
        for (size_t i = 0; i < g.size(); ++i) f[k + i] -= q[k] * g[i];
      }
      f = std::move(q);
    }
    cache[d] = std::move(f);
  }
  return cache.at(n);
}

long normalize_ambient(long n) { return n % 4 == 2 ? n / 2 : n; }

}  // namespace

struct Cyclotomic::Ring {
  long n;
  long phi;
  std::vector<mpz_class> poly;                // Phi_n, size phi+1, monic
  std::vector<std::vector<mpz_class>> powtab; // x^t mod Phi_n, t < max(2*phi-1, n+1)
};

std::shared_ptr<const Cyclotomic::Ring> Cyclotomic::ring(long n) {
  static std::map<long, std::shared_ptr<const Ring>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n <= 0 || n % 4 == 2) fail(Errc::bad_exponent, "invalid cyclotomic ambient");
  auto r = std::make_shared<Ring>();
  r->n = n;
  r->poly = cyclotomic_poly(n);
  r->phi = (long)r->poly.size() - 1;
  long maxpow = std::max(2 * r->phi - 1, n + 1);
  r->powtab.resize(maxpow);
  for (long t = 0; t < maxpow; ++t) {
    if (t < r->phi) {
      r->powtab[t].assign(r->phi, 0);
      r->powtab[t][t] = 1;
    } else {
      // shift previous row by one, reduce by the monic modulus
      std::vector<mpz_class> v(r->phi + 1, 0);
      const auto& prev = r->powtab[t - 1];
      for (long i = 0; i < r->phi; ++i) v[i + 1] = prev[i];
      mpz_class lead = v[r->phi];
      if (lead != 0)
        for (long i = 0; i <= r->phi; ++i) v[i] -= lead * r->poly[i];
      v.resize(r->phi);
      r->powtab[t] = std::move(v);
    }
  }
  cache[n] = r;
  return r;
}

Cyclotomic::Cyclotomic() : n_(1), ring_(ring(1)), c_(1, mpq_class(0)) {}

Cyclotomic::Cyclotomic(const mpq_class& r) : n_(1), ring_(ring(1)), c_(1, r) { c_[0].canonicalize(); }

Cyclotomic::Cyclotomic(long r) : n_(1), ring_(ring(1)), c_(1, mpq_class(r)) {}

Cyclotomic::Cyclotomic(std::shared_ptr<const Ring> r, std::vector<mpq_class> c)
    : n_(r->n), ring_(std::move(r)), c_(std::move(c)) {}

Cyclotomic Cyclotomic::root(long n, long k) {
  if (n <= 0) fail(Errc::bad_exponent, "root of unity of nonpositive order");
  k %= n;
  if (k < 0) k += n;
  bool negate = false;
  if (n % 4 == 2) {
    long m = n / 2;  // odd
    negate = (k % 2) != 0;
    k = (k % m) * ((m + 1) / 2) % m;
    n = m;
  }
  if (n == 1) {
    Cyclotomic one(1);
    return negate ? -one : one;
  }
  auto rg = ring(n);
  std::vector<mpq_class> c(rg->phi, mpq_class(0));
  if (k < rg->phi) {
    c[k] = negate ? -1 : 1;
  } else {
    for (long i = 0; i < rg->phi; ++i) c[i] = negate ? mpq_class(-rg->powtab[k][i]) : mpq_class(rg->powtab[k][i]);
  }
  return Cyclotomic(rg, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) fail(Errc::lifting_failure, "value is not rational");
  return c_[0];
}

bool Cyclotomic::is_algebraic_integer() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::lifted_to(long m) const {
  m = normalize_ambient(m);
  if (m == n_) return *this;
  long n = n_;
  if (n_ == 1) {
    auto rg = ring(m);
    std::vector<mpq_class> c(rg->phi, mpq_class(0));
    c[0] = c_[0];
    return Cyclotomic(rg, std::move(c));
  }
  if (m % n != 0) fail(Errc::bad_exponent, "lift target is not a multiple of the ambient");
  auto rg = ring(m);
  long step = m / n;
  std::vector<mpq_class> out(rg->phi, mpq_class(0));
  for (long t = 0; t < (long)c_.size(); ++t) {
    if (c_[t] == 0) continue;
    const auto& row = rg->powtab[step * t];
    for (long i = 0; i < rg->phi; ++i)
      if (row[i] != 0) out[i] += c_[t] * mpq_class(row[i]);
  }
  return Cyclotomic(rg, std::move(out));
}

void Cyclotomic::shrink() {
  if (n_ != 1 && is_rational()) {
    mpq_class r = c_[0];
    n_ = 1;
    ring_ = ring(1);
    c_.assign(1, r);
  }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = normalize_ambient(lcm_l(n_, o.n_));
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.shrink();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  long m = normalize_ambient(lcm_l(n_, o.n_));
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  a.shrink();
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& q : a.c_) q = -q;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = normalize_ambient(lcm_l(n_, o.n_));
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  long phi = (long)a.c_.size();
  std::vector<mpq_class> conv(2 * phi - 1, mpq_class(0));
  for (long i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<mpq_class> out(phi, mpq_class(0));
  for (long t = 0; t < phi; ++t) out[t] = conv[t];
  for (long t = phi; t < 2 * phi - 1; ++t) {
    if (conv[t] == 0) continue;
    const auto& row = a.ring_->powtab[t];
    for (long i = 0; i < phi; ++i)
      if (row[i] != 0) out[i] += conv[t] * mpq_class(row[i]);
  }
  Cyclotomic r(a.ring_, std::move(out));
  r.shrink();
  return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
  Cyclotomic a = *this;
  for (auto& q : a.c_) q *= s;
  return a;
}

Cyclotomic Cyclotomic::operator/(const mpq_class& s) const {
  if (s == 0) fail(Errc::division_by_zero, "division by zero scalar");
  Cyclotomic a = *this;
  for (auto& q : a.c_) q /= s;
  return a;
}

namespace {

// dense rational polynomials, low degree first
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmod(QPoly a, const QPoly& m) {
  qtrim(a);
  int dm = (int)m.size() - 1;
  while ((int)a.size() - 1 >= dm) {
    mpq_class c = a.back() / m.back();
    int k = (int)a.size() - 1 - dm;
    for (int i = 0; i <= dm; ++i) a[k + i] -= c * m[i];
    qtrim(a);
  }
  return a;
}

}  // namespace

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero");
  if (o.is_rational()) return *this / o.c_[0];
  long m = normalize_ambient(lcm_l(n_, o.n_));
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  // invert b modulo Phi_m by the extended Euclidean algorithm over Q[x]
  QPoly phi_poly(b.ring_->poly.size());
  for (size_t i = 0; i < phi_poly.size(); ++i) phi_poly[i] = mpq_class(b.ring_->poly[i]);
  QPoly r0 = phi_poly, r1(b.c_.begin(), b.c_.end());
  qtrim(r1);
  QPoly s0 = {mpq_class(0)}, s1 = {mpq_class(1)};  // coefficients of b
  qtrim(s0);
  while (true) {
    qtrim(r1);
    if (r1.empty()) fail(Errc::division_by_zero, "non-invertible element");
    if ((int)r1.size() == 1) break;  // nonzero constant
    // r0 = q*r1 + r2
    QPoly q;
    {
      QPoly rem = r0;
      qtrim(rem);
      int d1 = (int)r1.size() - 1;
      int dq = (int)rem.size() - 1 - d1;
      if (dq < 0) {
        q = {};
      } else {
        q.assign(dq + 1, mpq_class(0));
        for (int k = dq; k >= 0; --k) {
          if ((int)rem.size() - 1 < d1 + k) continue;
          mpq_class c = rem[d1 + k] / r1[d1];
          q[k] = c;
          for (int i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
          qtrim(rem);
        }
      }
      r0.swap(rem);  // r0 now the remainder
    }
    std::swap(r0, r1);
    // s2 = s0 - q*s1
    QPoly qs(q.size() + s1.size(), mpq_class(0));
    if (!q.empty() && !s1.empty()) {
      qs.assign(q.size() + s1.size() - 1, mpq_class(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    } else {
      qs.clear();
    }
    QPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qtrim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // b * s1 = r1 (a nonzero constant) mod Phi; so b^{-1} = s1 / r1
  mpq_class cst = r1[0];
  s1 = qmod(std::move(s1), phi_poly);
  std::vector<mpq_class> invc(a.c_.size(), mpq_class(0));
  for (size_t i = 0; i < s1.size() && i < invc.size(); ++i) invc[i] = s1[i] / cst;
  Cyclotomic binv(b.ring_, std::move(invc));
  return a * binv;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = normalize_ambient(lcm_l(n_, o.n_));
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  long kk = k % n_;
  if (kk < 0) kk += n_;
  if (gcd_l(kk, n_) != 1) fail(Errc::bad_exponent, "galois exponent not coprime to ambient");
  if (kk == 1) return *this;
  std::vector<mpq_class> out(c_.size(), mpq_class(0));
  for (long t = 0; t < (long)c_.size(); ++t) {
    if (c_[t] == 0) continue;
    const auto& row = ring_->powtab[(t * kk) % n_];
    for (long i = 0; i < (long)c_.size(); ++i)
      if (row[i] != 0) out[i] += c_[t] * mpq_class(row[i]);
  }
  Cyclotomic r(ring_, std::move(out));
  r.shrink();
  return r;
}

Cyclotomic Cyclotomic::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  if (is_rational()) return c_[0].get_str();
  std::string s;
  for (long t = 0; t < (long)c_.size(); ++t) {
    if (c_[t] == 0) continue;
    mpq_class q = c_[t];
    bool neg = q < 0;
    if (neg) q = -q;
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    std::string term;
    if (t == 0) {
      term = q.get_str();
    } else {
      std::string base = "z" + std::to_string(n_) + (t > 1 ? "^" + std::to_string(t) : "");
      term = (q == 1) ? base : q.get_str() + "*" + base;
    }
    s += term;
  }
  return s;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long m = normalize_ambient(lcm_l(a.n_, b.n_));
  Cyclotomic x = a.lifted_to(m), y = b.lifted_to(m);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

long conductor(std::span<const Cyclotomic> values) {
  long N = 1;
  for (const auto& v : values) N = lcm_l(N, v.ambient());
  N = normalize_ambient(N);
  if (N == 1) return 1;
  std::vector<Cyclotomic> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(v.lifted_to(N));

  // Is every value invariant under Gal(Q_N / Q_m)?
  auto contained_in = [&](long m) {
    for (long k = 1 + m; k < N; k += m) {
      if (gcd_l(k, N) != 1) continue;
      for (const auto& v : lifted)
        if (v.galois(k) != v) return false;
    }
    return true;
  };

  long m = N;
  bool improved = true;
  while (improved) {
    improved = false;
    for (long ell : prime_divisors(m)) {
      if (contained_in(m / ell)) {
        m /= ell;
        improved = true;
        break;
      }
    }
  }
  return normalize_ambient(m);
}

long conductor(const Cyclotomic& v) { return conductor(std::span<const Cyclotomic>(&v, 1)); }

int level(std::span<const Cyclotomic> values, long p) { return valuation(conductor(values), p); }

int level(const Cyclotomic& v, long p) { return valuation(conductor(v), p); }

long sigma_e_exponent(long n, long p, long e) {
  if (e < 1) fail(Errc::bad_exponent, "sigma_e requires e >= 1");
  long np = p_part(n, p);
  long npp = n / np;
  if (np == 1) return 1;
  long rp = (1 + mod_pow(p, e, np)) % np;
  if (npp == 1) return rp % n == 0 ? n : rp;
  long k = crt2(rp, np, 1 % npp, npp);
  k %= n;
  if (k == 0) k = n;
  return k;
}

bool field_contains_q4(std::span<const Cyclotomic> values) {
  long N = 4;
  for (const auto& v : values) N = lcm_l(N, v.ambient());
  N = normalize_ambient(N);
  std::vector<Cyclotomic> lifted;
  for (const auto& v : values) lifted.push_back(v.lifted_to(N));
  for (long k = 1; k < N; ++k) {
    if (gcd_l(k, N) != 1) continue;
    if (k % 4 == 1) continue;
    bool fixes = true;
    for (const auto& v : lifted)
      if (v.galois(k) != v) {
        fixes = false;
        break;
      }
    if (fixes) return false;
  }
  return true;
}

bool same_field(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  long N = 1;
  for (const auto& v : a) N = lcm_l(N, v.ambient());
  for (const auto& v : b) N = lcm_l(N, v.ambient());
  N = normalize_ambient(N);
  std::vector<Cyclotomic> la, lb;
  for (const auto& v : a) la.push_back(v.lifted_to(N));
  for (const auto& v : b) lb.push_back(v.lifted_to(N));
  auto fixes_all = [&](const std::vector<Cyclotomic>& vs, long k) {
    for (const auto& v : vs)
      if (v.galois(k) != v) return false;
    return true;
  };
  for (long k = 1; k < N; ++k) {
    if (gcd_l(k, N) != 1) continue;
    if (fixes_all(la, k) != fixes_all(lb, k)) return false;
  }
  return true;
}

Cyclotomic sqrt_of_squarefree(long d) {
  if (d == 0) fail(Errc::bad_exponent, "sqrt of zero");
  long ad = d < 0 ? -d : d;
  Cyclotomic v(1);
  for (auto& [p, e] : factorize(ad)) {
    if (e != 1) fail(Errc::bad_exponent, "argument not squarefree");
    if (p == 2) {
      v = v * (Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7));
    } else {
      Cyclotomic g(0);
      for (long t = 1; t < p; ++t) {
        long ls = mod_pow(t, (p - 1) / 2, p) == 1 ? 1 : -1;
        g += Cyclotomic::root(p, t) * mpq_class(ls);
      }
      v = v * g;
    }
  }
  Cyclotomic sq = v * v;
  if (sq == Cyclotomic(d)) return v;
  v = v * Cyclotomic::root(4, 1);
  sq = v * v;
  if (sq != Cyclotomic(d)) fail(Errc::lifting_failure, "sqrt construction failed");
  return v;
}

PrimeIdealData prime_ideal(long p, long m) {
  auto all = prime_ideal_all_choices(p, m);
  return all.front();
}

std::vector<PrimeIdealData> prime_ideal_all_choices(long p, long m) {
  if (!is_prime_l(p)) fail(Errc::bad_exponent, "p must be prime");
  if (m % p == 0) fail(Errc::bad_exponent, "modulus must be prime to p");
  const auto& phim = cyclotomic_poly(m);
  std::vector<long> f(phim.size());
  for (size_t i = 0; i < phim.size(); ++i) {
    mpz_class r = phim[i] % p;
    f[i] = r.get_si();
    if (f[i] < 0) f[i] += p;
  }
  std::vector<std::vector<long>> factors;
  if (m == 1) {
    factors = {{p - 1, 1}};  // Phi_1 = x - 1; residue field is F_p itself
  } else {
    factors = berlekamp_factors(f, p);
  }
  long expected_deg = m == 1 ? 1 : mult_order(p % m, m);
  std::vector<PrimeIdealData> out;
  for (auto& fac : factors) {
    PrimeIdealData d;
    d.p = p;
    d.m = m;
    d.factor = fac;
    d.residue_degree = (int)fac.size() - 1;
    if (d.residue_degree != expected_deg)
      fail(Errc::lifting_failure, "cyclotomic factor of unexpected degree");
    d.field = std::make_shared<GFTable>(p, fac);
    if (d.residue_degree == 1) {
      d.root = m == 1 ? 1 % p : (p - fac[0]) % p;
    } else {
      d.root = p;  // the polynomial t itself
    }
    out.push_back(std::move(d));
  }
  return out;
}

long residue(const Cyclotomic& v, const PrimeIdealData& ideal) {
  const auto& F = *ideal.field;
  long n = v.ambient();
  long p = ideal.p;
  long ps = p_part(n, p);
  long mp = n / ps;
  if (ideal.m % mp != 0) fail(Errc::bad_exponent, "value outside the ideal's p'-modulus");
  long E;
  if (mp == 1) {
    E = 0;
  } else {
    long beta = mod_inv(ps % mp, mp);
    E = (ideal.m / mp) * beta % ideal.m;
  }
  long ybase = E == 0 ? F.from_int(1) : F.pow(ideal.root, E);
  long acc = 0;
  long ypow = F.from_int(1);
  const auto& c = v.coeffs();
  for (size_t t = 0; t < c.size(); ++t) {
    if (c[t] != 0) {
      const mpz_class& num = c[t].get_num();
      const mpz_class& den = c[t].get_den();
      unsigned long dm = mpz_fdiv_ui(den.get_mpz_t(), p);
      if (dm == 0)
        fail(Errc::not_algebraic_integer, "denominator divisible by p in residue computation");
      unsigned long nm = mpz_fdiv_ui(num.get_mpz_t(), p);
      long coef = (long)nm * mod_inv((long)dm, p) % p;
      acc = F.add(acc, F.mul(F.from_int(coef), ypow));
    }
    ypow = F.mul(ypow, ybase);
  }
  return acc;
}

}  // namespace blockscope
