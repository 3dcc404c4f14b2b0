#include "blockscope/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"

namespace blockscope {

namespace {

void poly_trim(std::vector<long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
  poly_trim(a);
  int dm = (int)m.size() - 1;
  long lead_inv = mod_inv(m[dm], p);
  while ((int)a.size() - 1 >= dm) {
    int k = (int)a.size() - 1 - dm;
    long c = a.back() % p * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      a[k + i] = ((a[k + i] - c * m[i]) % p + p) % p;
    }
    poly_trim(a);
  }
  return a;
}

std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& m, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    long c = mod_inv(a.back(), p);
    for (auto& x : a) x = x * c % p;
  }
  return a;
}

bool poly_is_irreducible(const std::vector<long>& f, long p) {
  int d = (int)f.size() - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  // x^(p^d) = x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for prime r | d.
  auto xp = [&](int e) {
    std::vector<long> r = {0, 1};
    for (int i = 0; i < e; ++i) {
      // r <- r^p mod f by square-and-multiply on the exponent p
      std::vector<long> acc = {1};
      std::vector<long> base = r;
      long ee = p;
      while (ee) {
        if (ee & 1) acc = poly_mul_mod(acc, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        ee >>= 1;
      }
      r = std::move(acc);
    }
    return r;
  };
  std::vector<long> x = {0, 1};
  auto top = xp(d);
  auto diff = top;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (long r : prime_divisors(d)) {
    auto mid = xp(d / (int)r);
    auto g = mid;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    auto gg = poly_gcd(g, f, p);
    if ((int)gg.size() - 1 != 0) return false;
  }
  return true;
}

std::vector<long> lex_min_irreducible(long p, int d) {
  // Enumerate coefficient vectors (c0, ..., c_{d-1}) in lexicographic order.
  std::vector<long> c(d, 0);
  for (;;) {
    std::vector<long> f(c);
    f.push_back(1);
    if (f[0] != 0 && poly_is_irreducible(f, p)) return f;
    int i = d - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) fail(Errc::lifting_failure, "no irreducible polynomial found");
    ++c[i];
  }
}

GFTable::GFTable(long p, std::vector<long> modulus) : p_(p), modulus_(std::move(modulus)) {
  d_ = (int)modulus_.size() - 1;
  size_ = 1;
  for (int i = 0; i < d_; ++i) size_ *= p_;
  if (size_ > (1 << 22)) fail(Errc::size_bound_exceeded, "finite field too large for tables");
  // Find the smallest-index generator of the multiplicative group.
  long order = size_ - 1;
  for (long a = 1; a < size_; ++a) {
    bool ok = true;
    for (long r : prime_divisors(order)) {
      // a^(order/r) by plain polynomial power
      long e = order / r;
      long acc = from_int(1), base = a;
      while (e) {
        if (e & 1) acc = mul_poly(acc, base);
        base = mul_poly(base, base);
        e >>= 1;
      }
      if (acc == from_int(1)) {
        ok = false;
        break;
      }
    }
    if (ok && a != from_int(1)) {
      gen_ = a;
      break;
    }
  }
  if (order == 1) gen_ = 1 % size_;
  log_.assign(size_, -1);
  exp_.assign(order, 0);
  long cur = from_int(1);
  for (long k = 0; k < order; ++k) {
    exp_[k] = (int32_t)cur;
    log_[cur] = (int32_t)k;
    cur = mul_poly(cur, gen_);
  }
}

long GFTable::mul_poly(long a, long b) const {
  // schoolbook on base-p digits, then reduce mod modulus_
  std::vector<long> av, bv;
  for (long x = a; x; x /= p_) av.push_back(x % p_);
  for (long x = b; x; x /= p_) bv.push_back(x % p_);
  if (av.empty() || bv.empty()) return 0;
  std::vector<long> c(av.size() + bv.size() - 1, 0);
  for (size_t i = 0; i < av.size(); ++i)
    for (size_t j = 0; j < bv.size(); ++j) c[i + j] = (c[i + j] + av[i] * bv[j]) % p_;
  c = poly_mod(std::move(c), modulus_, p_);
  long r = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) r = r * p_ + c[i];
  return r;
}

long GFTable::add(long a, long b) const {
  long r = 0, mult = 1;
  while (a || b) {
    long s = (a % p_ + b % p_) % p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

long GFTable::neg(long a) const {
  long r = 0, mult = 1;
  while (a) {
    long s = (p_ - a % p_) % p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

long GFTable::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  long k = (long)log_[a] + log_[b];
  long order = size_ - 1;
  if (k >= order) k -= order;
  return exp_[k];
}

long GFTable::inv(long a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero in GF");
  long order = size_ - 1;
  long k = (order - log_[a]) % order;
  return exp_[k];
}

long GFTable::pow(long a, long e) const {
  long order = size_ - 1;
  if (a == 0) {
    if (e <= 0) fail(Errc::division_by_zero, "0^e, e <= 0");
    return 0;
  }
  long k = ((__int128)log_[a] * (e % order) % order + order) % order;
  return exp_[k];
}

long GFTable::from_int(long t) const {
  long r = t % p_;
  if (r < 0) r += p_;
  return r;
}

long GFTable::frobenius(long a, int k) const {
  long e = 1;
  for (int i = 0; i < k; ++i) e *= p_;
  return a == 0 ? 0 : pow(a, e);
}

long GFTable::mult_order(long a) const {
  if (a == 0) fail(Errc::division_by_zero, "order of zero");
  long order = size_ - 1;
  long g = gcd_l(log_[a] == 0 ? order : log_[a], order);
  return order / g;
}

std::string GFTable::to_string(long a) const {
  if (d_ == 1) return std::to_string(a);
  std::string s;
  bool first = true;
  int i = 0;
  for (long x = a; x || first; x /= p_, ++i) {
    long c = x % p_;
    if (c) {
      if (!first) s += "+";
      s += std::to_string(c);
      if (i >= 1) s += "*t";
      if (i >= 2) s += "^" + std::to_string(i);
      first = false;
    }
    if (!x) break;
  }
  if (s.empty()) s = "0";
  return s;
}

std::shared_ptr<const GFTable> GFTable::get(long p, int d) {
  static std::map<std::pair<long, int>, std::shared_ptr<const GFTable>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(p, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = d == 1 ? std::vector<long>{0, 1} : lex_min_irreducible(p, d);
  if (d == 1) f = {0, 1};  // x itself; arithmetic is plain mod p
  auto tab = std::make_shared<GFTable>(p, f);
  cache[key] = tab;
  return tab;
}

std::vector<std::vector<long>> berlekamp_factors(const std::vector<long>& f, long p) {
  // f monic squarefree. Returns sorted monic irreducible factors.
  std::vector<std::vector<long>> done, work{f};
  // normalize monic
  {
    auto& g = work[0];
    long c = mod_inv(g.back(), p);
    for (auto& x : g) x = x * c % p;
  }
  while (!work.empty()) {
    std::vector<long> g = std::move(work.back());
    work.pop_back();
    int n = (int)g.size() - 1;
    if (n == 1) {
      done.push_back(g);
      continue;
    }
    // Berlekamp matrix Q: row i = x^(i*p) mod g
    std::vector<std::vector<long>> Q(n, std::vector<long>(n, 0));
    std::vector<long> xp = {1};  // x^(0*p)
    std::vector<long> xpow = {0, 1};
    // x^p mod g
    std::vector<long> xp1 = {1};
    {
      std::vector<long> base = xpow;
      long e = p;
      while (e) {
        if (e & 1) xp1 = poly_mul_mod(xp1, base, g, p);
        base = poly_mul_mod(base, base, g, p);
        e >>= 1;
      }
    }
    std::vector<long> cur = {1};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < (int)cur.size(); ++j) Q[i][j] = cur[j];
      cur = poly_mul_mod(cur, xp1, g, p);
    }
    // null space of (Q - I)^T acting on row vectors v: v*Q = v, i.e.
    // solve (Q^T - I) w = 0 using column operations; use standard rref on
    // (Q - I) transposed.
    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[j][i] = Q[i][j];
    for (int i = 0; i < n; ++i) M[i][i] = ((M[i][i] - 1) % p + p) % p;
    // rref
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int pr = -1;
      for (int i = r; i < n; ++i)
        if (M[i][c]) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(M[pr], M[r]);
      long inv = mod_inv(M[r][c], p);
      for (int j = 0; j < n; ++j) M[r][j] = M[r][j] * inv % p;
      for (int i = 0; i < n; ++i)
        if (i != r && M[i][c]) {
          long t = M[i][c];
          for (int j = 0; j < n; ++j) M[i][j] = ((M[i][j] - t * M[r][j]) % p + p) % p;
        }
      pivot_col.push_back(c);
      ++r;
    }
    int nullity = n - r;
    if (nullity == 1) {
      done.push_back(g);
      continue;
    }
    // basis of null space
    std::vector<std::vector<long>> basis;
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c) {
      if (is_pivot[c]) continue;
      std::vector<long> v(n, 0);
      v[c] = 1;
      for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = (p - M[i][c]) % p;
      basis.push_back(std::move(v));
    }
    // split with the first non-constant basis vector
    bool split = false;
    for (auto& v : basis) {
      std::vector<long> h(v);
      poly_trim(h);
      if ((int)h.size() <= 1) continue;  // constant, useless
      for (long c0 = 0; c0 < p && !split; ++c0) {
        std::vector<long> hc(h);
        if (hc.empty()) hc.push_back(0);
        hc[0] = ((hc[0] - c0) % p + p) % p;
        auto d1 = poly_gcd(hc, g, p);
        int dd = (int)d1.size() - 1;
        if (dd > 0 && dd < n) {
          // g = d1 * (g/d1)
          // divide g by d1
          std::vector<long> quo;
          {
            std::vector<long> rem(g);
            int dg = (int)rem.size() - 1, dd1 = (int)d1.size() - 1;
            quo.assign(dg - dd1 + 1, 0);
            long li = mod_inv(d1.back(), p);
            for (int k = dg - dd1; k >= 0; --k) {
              long c = rem[k + dd1] % p * li % p;
              quo[k] = c;
              for (int i = 0; i <= dd1; ++i)
                rem[k + i] = ((rem[k + i] - c * d1[i]) % p + p) % p;
            }
          }
          work.push_back(d1);
          work.push_back(quo);
          split = true;
        }
      }
      if (split) break;
    }
    if (!split) fail(Errc::lifting_failure, "berlekamp failed to split reducible polynomial");
  }
  std::sort(done.begin(), done.end(), [](const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return done;
}

}  // namespace blockscope
