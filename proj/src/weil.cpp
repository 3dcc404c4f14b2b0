#include "blockscope/weil.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/parallel.hpp"

namespace blockscope {

namespace {

uint64_t hash_mat(const FqMat& m) {
  uint64_t h = 1469598103934665603ull;
  for (long x : m) {
    h ^= (uint64_t)x;
    h *= 1099511628211ull;
  }
  return h;
}

FqMat mat_identity(const GFTable& F, int n) {
  FqMat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = F.from_int(1);
  return m;
}

FqMat mat_mul(const GFTable& F, const FqMat& a, const FqMat& b, int n) {
  FqMat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b[k * n + j]) c[i * n + j] = F.add(c[i * n + j], F.mul(aik, b[k * n + j]));
    }
  return c;
}

// conj-transpose; for unitary g this is the inverse
FqMat mat_star(const GFTable& F, const FqMat& a, int n, long q) {
  FqMat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[j * n + i] = F.pow(a[i * n + j], q);
  return c;
}

bool is_unitary(const GFTable& F, const FqMat& g, int n, long q) {
  FqMat gs = mat_star(F, g, n, q);
  FqMat prod = mat_mul(F, g, gs, n);
  return prod == mat_identity(F, n);
}

struct MatIndex {
  std::unordered_map<uint64_t, std::vector<int>> map;
  const std::vector<FqMat>* store = nullptr;
  int find(const FqMat& m) const {
    auto it = map.find(hash_mat(m));
    if (it == map.end()) return -1;
    for (int id : it->second)
      if ((*store)[id] == m) return id;
    return -1;
  }
  void insert(const FqMat& m, int id) { map[hash_mat(m)].push_back(id); }
};

}  // namespace

std::shared_ptr<const GFTable> gu_field(long q) {
  auto fac = factorize(q);
  if (fac.size() != 1) fail(Errc::bad_exponent, "q must be a prime power");
  long p = fac[0].first;
  int k = fac[0].second;
  return GFTable::get(p, 2 * k);
}

long gu_order_formula(int n, long q) {
  long o = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) o *= q;
  long s = 1;
  for (int i = 1; i <= n; ++i) {
    long term = 1;
    for (int t = 0; t < i; ++t) term *= q;
    term -= (i % 2 == 0) ? 1 : -1;
    s *= term;
  }
  return o * s;
}

std::vector<FqMat> gu_brute_force(int n, long q) {
  auto Fp = gu_field(q);
  const GFTable& F = *Fp;
  long q2 = F.size();
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= (double)q2;
  if (total > 2.1e7) fail(Errc::size_bound_exceeded, "matrix space too large for brute force");
  long cells = n * n;
  std::vector<FqMat> out;
  FqMat m(cells, 0);
  // odometer enumeration
  for (;;) {
    if (is_unitary(F, m, n, q)) out.push_back(m);
    int i = (int)cells - 1;
    while (i >= 0 && m[i] == q2 - 1) m[i--] = 0;
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

UnitaryGroup gu_group(int n, long q) {
  UnitaryGroup U;
  U.n = n;
  U.q = q;
  U.F = gu_field(q);
  const GFTable& F = *U.F;
  long order_target = gu_order_formula(n, q);
  if (order_target > 1000000L)
    fail(Errc::size_bound_exceeded, "unitary group order exceeds the enumeration bound");
  U.xi_hat = F.pow(F.generator(), (F.size() - 1) / (q + 1));

  // seed set: diagonal unitaries, permutation matrices, pseudo-reflections
  std::vector<FqMat> seeds;
  {
    // diagonal matrices with entries in the norm-one subgroup
    std::vector<long> mu{F.from_int(1)};
    long cur = U.xi_hat;
    while (cur != F.from_int(1)) {
      mu.push_back(cur);
      cur = F.mul(cur, U.xi_hat);
    }
    std::vector<int> digits(n, 0);
    for (;;) {
      FqMat d(n * n, 0);
      for (int i = 0; i < n; ++i) d[i * n + i] = mu[digits[i]];
      seeds.push_back(d);
      int i = n - 1;
      while (i >= 0 && digits[i] == (int)mu.size() - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    // permutation matrices
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      FqMat m(n * n, 0);
      for (int j = 0; j < n; ++j) m[perm[j] * n + j] = F.from_int(1);
      seeds.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // pseudo-reflections r_{v,z}: x -> x - (1-z) (x,v)/(v,v) v
    long cells = 1;
    for (int i = 0; i < n; ++i) cells *= F.size();
    if (cells <= 100000) {
      std::vector<long> v(n, 0);
      for (;;) {
        long vv = 0;
        for (int i = 0; i < n; ++i) vv = F.add(vv, F.mul(v[i], F.pow(v[i], q)));
        if (vv != 0) {
          long zeta = U.xi_hat;
          for (long t = 1; t <= q; ++t) {  // zeta runs over nontrivial norm-one scalars
            long one = F.from_int(1);
            long c = F.mul(F.sub(one, zeta), F.inv(vv));
            FqMat m(n * n, 0);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) {
                long t2 = F.mul(F.mul(c, v[i]), F.pow(v[j], q));
                m[i * n + j] = F.sub(i == j ? one : 0, t2);
              }
            if (is_unitary(F, m, n, q)) seeds.push_back(m);
            zeta = F.mul(zeta, U.xi_hat);
            if (zeta == one) break;
          }
        }
        int i = n - 1;
        while (i >= 0 && v[i] == F.size() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
      }
    }
  }

  // closure
  MatIndex idx;
  idx.store = &U.elements;
  auto push = [&](const FqMat& m) {
    if (idx.find(m) >= 0) return false;
    idx.insert(m, (int)U.elements.size());
    U.elements.push_back(m);
    return true;
  };
  push(mat_identity(F, n));
  std::vector<FqMat> gens;
  for (auto& s : seeds) {
    if (idx.find(s) < 0) {
      gens.push_back(s);
      push(s);
    }
  }
  size_t head = 0;
  while (head < U.elements.size()) {
    FqMat cur = U.elements[head++];
    for (auto& g : gens) {
      FqMat nx = mat_mul(F, cur, g, n);
      push(nx);
      if ((long)U.elements.size() > order_target)
        fail(Errc::size_bound_exceeded, "closure exceeded the unitary group order");
    }
  }
  if ((long)U.elements.size() != order_target)
    fail(Errc::size_bound_exceeded,
         "generator closure produced " + std::to_string(U.elements.size()) +
             " elements, expected " + std::to_string(order_target));
  // trim the generating set for later conjugacy scans
  U.gens = std::move(gens);

  // conjugacy classes by brute-force orbits (g x g^-1 with g^-1 = g*)
  long N = U.order();
  U.class_of.assign(N, -1);
  for (long s = 0; s < N; ++s) {
    if (U.class_of[s] >= 0) continue;
    int id = (int)U.class_reps.size();
    U.class_reps.push_back((int)s);
    std::vector<int> orbit{(int)s};
    U.class_of[s] = id;
    size_t h2 = 0;
    while (h2 < orbit.size()) {
      int cur = orbit[h2++];
      for (auto& g : U.gens) {
        FqMat gi = mat_star(F, g, n, q);
        FqMat c = mat_mul(F, mat_mul(F, g, U.elements[cur], n), gi, n);
        int ci = idx.find(c);
        if (U.class_of[ci] < 0) {
          U.class_of[ci] = id;
          orbit.push_back(ci);
        }
      }
    }
  }
  return U;
}

int kernel_dimension(const GFTable& F, const FqMat& g, int n, long scalar) {
  FqMat m = g;
  for (int i = 0; i < n; ++i) m[i * n + i] = F.sub(m[i * n + i], scalar);
  // rank by gaussian elimination
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m[r * n + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[rank * n + j]);
    long iv = F.inv(m[rank * n + c]);
    for (int j = 0; j < n; ++j) m[rank * n + j] = F.mul(m[rank * n + j], iv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r * n + c] == 0) continue;
      long t = m[r * n + c];
      for (int j = 0; j < n; ++j) m[r * n + j] = F.sub(m[r * n + j], F.mul(t, m[rank * n + j]));
    }
    ++rank;
  }
  return n - rank;
}

Cyclotomic weil_value(const GFTable& F, const FqMat& g, int n, long q, long i, long xi_hat) {
  Cyclotomic s(0);
  for (long k = 0; k <= q; ++k) {
    long scalar = F.pow(xi_hat, ((q + 1) - k % (q + 1)) % (q + 1));  // xi_hat^{-k}
    int d = kernel_dimension(F, g, n, scalar);
    mpq_class pw(1);
    for (int t = 0; t < d; ++t) pw *= mpq_class(-q);
    s += Cyclotomic::root(q + 1, (-i * k) % (q + 1)) * pw;
  }
  if (n % 2 == 1) s = -s;
  Cyclotomic v = s / mpq_class(q + 1);
  if (!v.is_algebraic_integer())
    fail(Errc::lifting_failure, "weil value is not an algebraic integer");
  return v;
}

std::vector<Cyclotomic> weil_values_serial(const UnitaryGroup& U, long i) {
  std::vector<Cyclotomic> out(U.order());
  for (long e = 0; e < U.order(); ++e)
    out[e] = weil_value(*U.F, U.elements[e], U.n, U.q, i, U.xi_hat);
  return out;
}

std::vector<Cyclotomic> weil_values(const UnitaryGroup& U, long i) {
  std::vector<Cyclotomic> out(U.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (long e = 0; e < U.order(); ++e)
    out[e] = weil_value(*U.F, U.elements[e], U.n, U.q, i, U.xi_hat);
  return out;
}

Cyclotomic sl2_semisimple_value(long q, int eps, long i, long j) {
  long t = q - eps;
  return Cyclotomic::root(t, i * j % t) + Cyclotomic::root(t, (t - i * j % t) % t);
}

Group psl2_group(long q) {
  auto fac = factorize(q);
  if (fac.size() != 1 || fac[0].first != 2)
    fail(Errc::bad_exponent, "projective construction requires q a power of 2");
  auto Fp = GFTable::get(2, fac[0].second);
  const GFTable& F = *Fp;
  // points: 0 = infinity, 1 + e for field elements e
  int deg = (int)q + 1;
  auto pt = [&](long e) { return (Point)(1 + e); };
  std::vector<Point> t(deg), m(deg), s(deg);
  t[0] = 0;
  m[0] = 0;
  s[0] = 1;
  s[1] = 0;
  for (long e = 0; e < q; ++e) {
    t[pt(e)] = pt(F.add(e, F.from_int(1)));
    m[pt(e)] = pt(F.mul(e, F.generator()));
    if (e != 0) s[pt(e)] = pt(F.inv(e));
  }
  return group_from_generators(deg, {std::vector<Point>(t.begin(), t.end()),
                                     std::vector<Point>(m.begin(), m.end()),
                                     std::vector<Point>(s.begin(), s.end())});
}

WeilConsistencyResult weil_consistency(int n, long q, long p) {
  WeilConsistencyResult R;
  R.n = n;
  R.q = q;
  R.p = p;
  if (n % 2 == 0 || n < 1) {
    R.applicable = false;
    R.notes.push_back("requires odd n");
    return R;
  }
  if (p % 2 == 0 || (q + 1) % p != 0 || !is_prime_l(p)) {
    R.applicable = false;
    R.notes.push_back("requires an odd prime p dividing q+1");
    return R;
  }
  R.applicable = true;
  UnitaryGroup U = gu_group(n, q);
  R.group_order = U.order();

  long expected_degree = 1;
  for (int t = 0; t < n; ++t) expected_degree *= q;
  expected_degree = (expected_degree + 1) / (q + 1);

  R.class_function_ok = true;
  R.degree_ok = true;
  R.norms_ok = true;
  R.levels_ok = true;
  std::vector<std::vector<Cyclotomic>> all(q);
  for (long i = 1; i <= q; ++i) {
    auto vals = weil_values(U, i);
    // constant on classes
    for (long e = 0; e < U.order(); ++e)
      if (vals[e] != vals[U.class_reps[U.class_of[e]]]) R.class_function_ok = false;
    // degree at the identity (element 0 of the enumeration is the identity)
    FqMat id(n * n, 0);
    for (int t = 0; t < n; ++t) id[t * n + t] = U.F->from_int(1);
    Cyclotomic at_id = weil_value(*U.F, id, n, q, i, U.xi_hat);
    if (at_id != Cyclotomic(expected_degree)) R.degree_ok = false;
    // level identity against the linear character alpha^i of C_{q+1}
    std::vector<Cyclotomic> alpha_i;
    for (long t = 0; t <= q; ++t) alpha_i.push_back(Cyclotomic::root(q + 1, i * t % (q + 1)));
    if (level(std::span<const Cyclotomic>(vals.data(), vals.size()), p) !=
        level(std::span<const Cyclotomic>(alpha_i.data(), alpha_i.size()), p))
      R.levels_ok = false;
    all[i - 1] = std::move(vals);
  }
  // exact norms and orthogonality
  for (long i = 0; i < q; ++i)
    for (long j = i; j < q; ++j) {
      Cyclotomic acc(0);
      for (long e = 0; e < U.order(); ++e) acc += all[i][e] * all[j][e].conj();
      acc = acc / mpq_class(U.order());
      bool equal_fn = all[i] == all[j];
      if (acc != Cyclotomic(equal_fn ? 1 : 0)) R.norms_ok = false;
    }

  // cross-check against the Dixon table of the regular permutation realization
  if (U.order() <= 2000) {
    R.dixon_checked = true;
    MatIndex idx;
    idx.store = &U.elements;
    for (int e = 0; e < (int)U.elements.size(); ++e) idx.insert(U.elements[e], e);
    auto perm_of = [&](const FqMat& g) {
      std::vector<Point> img(U.order());
      for (long x = 0; x < U.order(); ++x)
        img[x] = (Point)idx.find(mat_mul(*U.F, g, U.elements[x], n));
      return img;
    };
    std::vector<std::vector<Point>> gen_imgs;
    for (auto& g : U.gens) gen_imgs.push_back(perm_of(g));
    Group G = group_from_generators((int)U.order(), gen_imgs);
    CharacterTable T = character_table(G);
    // transport each weil function to the permutation classes
    R.dixon_match_ok = true;
    for (long i = 0; i < q; ++i) {
      std::vector<Cyclotomic> transported(G.class_count(), Cyclotomic(0));
      std::vector<char> set(G.class_count(), 0);
      for (long e = 0; e < U.order(); ++e) {
        int pc = G.class_of(G.index_of(Permutation(perm_of(U.elements[e]))));
        if (!set[pc]) {
          transported[pc] = all[i][e];
          set[pc] = 1;
        } else if (transported[pc] != all[i][e]) {
          R.dixon_match_ok = false;
        }
      }
      bool found = false;
      for (auto& chi : T.irr)
        if (chi.values == transported) found = true;
      if (!found) R.dixon_match_ok = false;
    }
    if (R.dixon_match_ok)
      R.notes.push_back("weil functions match irreducibles of the regular-permutation table");
  }
  R.notes.push_back("labeling pairs xi = z_{q+1} with the deterministic field generator power");
  return R;
}

Sl2OracleResult sl2_oracle_check(long q, int eps, long p) {
  if (eps != 1 && eps != -1) fail(Errc::bad_exponent, "eps must be +1 or -1");
  Sl2OracleResult R;
  R.q = q;
  R.eps = eps;
  R.p = p;
  Group G = psl2_group(q);
  CharacterTable T = character_table(G);
  long t = q - eps;
  // a generator of the torus of order t
  int g0 = -1;
  for (long e = 0; e < G.order(); ++e)
    if (G.element_order((int)e) == t) {
      g0 = (int)e;
      break;
    }
  if (g0 < 0) fail(Errc::lifting_failure, "no torus element of the expected order");
  std::vector<int> torus_class(t);
  {
    int cur = 0;
    for (long j = 0; j < t; ++j) {
      torus_class[j] = G.class_of(cur);
      cur = G.mult(cur, g0);
    }
  }
  long want_degree = q + eps;
  R.matched_all = true;
  R.sign = 0;
  Subgroup P = sylow_subgroup(G, p);
  bool levels_ok = true;
  for (int c = 0; c < T.size(); ++c) {
    if (T.irr[c].degree() != want_degree) continue;
    bool matched = false;
    for (int sign : {-1, +1}) {
      for (long i = 1; i < t && !matched; ++i) {
        bool ok = true;
        for (long j = 1; j < t; ++j) {
          Cyclotomic expect = sl2_semisimple_value(q, eps, i, j) * mpq_class(sign);
          if (T.irr[c].values[torus_class[j]] != expect) {
            ok = false;
            break;
          }
        }
        if (ok) {
          matched = true;
          if (R.sign == 0) R.sign = sign;
          if (R.sign != sign) R.matched_all = false;  // mixed signs: not the uniform pattern
          ++R.matched_count;
          R.notes.push_back("degree-" + std::to_string(want_degree) + " character " +
                            std::to_string(c) + " matches index i=" + std::to_string(i) +
                            " with sign " + std::to_string(sign));
        }
      }
      if (matched) break;
    }
    if (!matched) R.matched_all = false;
    // level identities for this character
    int lev = T.levels(p)[c];
    int levP = restricted_level(T.irr[c], G, P.elems, p);
    if (lev != levP) levels_ok = false;
    if (valuation(t, p) >= 2) {
      // with a torus of p-part order >= p^2, the irrational members have level nu_p(t)
      if (lev != 0 && lev != valuation(t, p)) levels_ok = false;
    }
  }
  R.levels_ok = levels_ok;
  return R;
}

}  // namespace blockscope
