#include "blockscope/chartab.hpp"

#include <algorithm>
#include <numeric>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"

namespace blockscope {

namespace {

// --- dense linear algebra over F_q (q < 2^31), column-vector convention ---

struct FqCtx {
  long q;
  long add(long a, long b) const { return (a + b) % q; }
  long sub(long a, long b) const { return (a - b % q + q) % q; }
  long mul(long a, long b) const { return (long)((__int128)a * b % q); }
  long inv(long a) const { return mod_inv(a, q); }
};

using Mat = std::vector<std::vector<long>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& A, const FqCtx& F) {
  std::vector<int> pivots;
  int rows = (int)A.size();
  if (rows == 0) return pivots;
  int cols = (int)A[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[r]);
    long iv = F.inv(A[r][c]);
    for (int j = 0; j < cols; ++j) A[r][j] = F.mul(A[r][j], iv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      long t = A[i][c];
      for (int j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(t, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  A.resize(r);
  return pivots;
}

// Basis (as rows) of the null space of the square matrix N (columns = coords).
Mat nullspace(Mat N, const FqCtx& F) {
  int n = (int)N.size();
  auto pivots = rref(N, F);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long> v(n, 0);
    v[c] = 1;
    for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = F.sub(0, N[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial of a square matrix via Hessenberg reduction
// (low-degree coefficients first, monic).
std::vector<long> charpoly(Mat H, const FqCtx& F) {
  int n = (int)H.size();
  // similarity reduction to upper Hessenberg with pivoting
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (H[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][j + 1]);
    }
    long d = F.inv(H[j + 1][j]);
    for (int i = j + 2; i < n; ++i) {
      if (H[i][j] == 0) continue;
      long c = F.mul(H[i][j], d);
      for (int t = 0; t < n; ++t) H[i][t] = F.sub(H[i][t], F.mul(c, H[j + 1][t]));
      for (int t = 0; t < n; ++t) H[t][j + 1] = F.add(H[t][j + 1], F.mul(c, H[t][i]));
    }
  }
  // p_m for leading principal m x m blocks
  std::vector<std::vector<long>> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // (x - H[m-1][m-1]) * p[m-1]
    std::vector<long> r(m + 1, 0);
    for (int t = 0; t < m; ++t) {
      r[t + 1] = F.add(r[t + 1], p[m - 1][t]);
      r[t] = F.sub(r[t], F.mul(H[m - 1][m - 1], p[m - 1][t]));
    }
    long prod = 1;
    for (int i = 1; i < m; ++i) {
      prod = F.mul(prod, H[m - i][m - i - 1]);
      if (prod == 0) break;
      long coef = F.mul(H[m - 1 - i][m - 1], prod);
      if (coef == 0) continue;
      for (int t = 0; t < m - i; ++t) r[t] = F.sub(r[t], F.mul(coef, p[m - 1 - i][t]));
    }
    p[m] = std::move(r);
  }
  return p[n];
}

long poly_eval(const std::vector<long>& p, long x, const FqCtx& F) {
  long r = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) r = F.add(F.mul(r, x), p[i]);
  return r;
}

}  // namespace

long Character::degree() const {
  if (!values[0].is_rational()) fail(Errc::lifting_failure, "non-rational degree");
  mpq_class d = values[0].rational_value();
  if (d.get_den() != 1) fail(Errc::lifting_failure, "non-integral degree");
  return (long)d.get_num().get_si();
}

const std::vector<int>& CharacterTable::power_map(long k) const {
  long e = group_exponent;
  long kk = k % e;
  if (kk < 0) kk += e;
  auto it = power_maps_.find(kk);
  if (it != power_maps_.end()) return it->second;
  return power_maps_.emplace(kk, grp->power_class_map(kk)).first->second;
}

const std::vector<int>& CharacterTable::levels(long p) const {
  auto it = levels_.find(p);
  if (it != levels_.end()) return it->second;
  std::vector<int> lv(irr.size());
  for (size_t i = 0; i < irr.size(); ++i) lv[i] = value_set_level(irr[i], p);
  return levels_.emplace(p, std::move(lv)).first->second;
}

int CharacterTable::index_of(const Character& chi) const {
  for (int i = 0; i < size(); ++i) {
    if (irr[i].values == chi.values) return i;
  }
  return -1;
}

CharacterTable character_table(const Group& G) {
  const auto& cls = G.classes();
  const int k = (int)cls.size();
  const long n = G.order();
  const long m = G.exponent();

  long sq = 1;
  while (sq * sq < n) ++sq;  // ceil(sqrt(n))
  const long q = next_prime_1mod(m, 2 * sq);
  FqCtx F{q};

  auto a = G.class_constants();

  // class matrices M_i (column action): (M_i w)[j] = sum_l a[i][j][l] w[l]
  auto apply = [&](int i, const std::vector<long>& w) {
    std::vector<long> r(k, 0);
    for (int j = 0; j < k; ++j) {
      long acc = 0;
      for (int l = 0; l < k; ++l)
        if (a[i][j][l]) acc = F.add(acc, F.mul(a[i][j][l] % q, w[l]));
      r[j] = acc;
    }
    return r;
  };

  // split the common eigenspaces; bases kept as RREF rows of coordinates in F_q^k
  std::vector<Mat> spaces;
  {
    Mat full(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_one = true;
    for (auto& S : spaces)
      if ((int)S.size() > 1) all_one = false;
    if (all_one) break;
    std::vector<Mat> next;
    for (auto& S : spaces) {
      int r = (int)S.size();
      if (r == 1) {
        next.push_back(std::move(S));
        continue;
      }
      // pivot columns of S (S is in RREF)
      Mat scopy = S;
      auto pivots = rref(scopy, F);  // S already reduced; recompute pivots cheaply
      // restriction R: image of each basis row under M_i, in coordinates
      Mat R(r, std::vector<long>(r, 0));
      bool invariant = true;
      for (int s = 0; s < r && invariant; ++s) {
        auto img = apply(i, S[s]);
        std::vector<long> coord(r);
        for (int t = 0; t < r; ++t) coord[t] = img[pivots[t]];
        // verify img = sum coord[t] * S[t]
        for (int c = 0; c < k; ++c) {
          long acc = 0;
          for (int t = 0; t < r; ++t)
            if (coord[t] && S[t][c]) acc = F.add(acc, F.mul(coord[t], S[t][c]));
          if (acc != img[c]) {
            invariant = false;
            break;
          }
        }
        R[s] = std::move(coord);
      }
      if (!invariant) fail(Errc::lifting_failure, "class-algebra subspace not invariant");
      // coordinates transform by N = R^T
      Mat N(r, std::vector<long>(r));
      for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) N[x][y] = R[y][x];
      auto cp = charpoly(N, F);
      std::vector<long> roots;
      for (long lam = 0; lam < q; ++lam)
        if (poly_eval(cp, lam, F) == 0) roots.push_back(lam);
      if (roots.size() <= 1) {
        next.push_back(std::move(S));
        continue;
      }
      for (long lam : roots) {
        Mat NL = N;
        for (int t = 0; t < r; ++t) NL[t][t] = F.sub(NL[t][t], lam);
        Mat coords = nullspace(std::move(NL), F);
        if (coords.empty()) continue;
        Mat venew;
        for (auto& cvec : coords) {
          std::vector<long> v(k, 0);
          for (int t = 0; t < r; ++t)
            if (cvec[t])
              for (int c = 0; c < k; ++c)
                if (S[t][c]) v[c] = F.add(v[c], F.mul(cvec[t], S[t][c]));
          venew.push_back(std::move(v));
        }
        rref(venew, F);
        next.push_back(std::move(venew));
      }
    }
    spaces = std::move(next);
  }
  if ((int)spaces.size() != k) fail(Errc::lifting_failure, "eigenspace splitting incomplete");

  // one normalized eigenvector per space, w[0] = 1 (identity class)
  std::vector<std::vector<long>> omegas;
  for (auto& S : spaces) {
    if (S.size() != 1) fail(Errc::lifting_failure, "eigenspace dimension > 1");
    auto w = S[0];
    if (w[0] == 0) fail(Errc::lifting_failure, "eigenvector vanishes at the identity class");
    long iv = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, iv);
    omegas.push_back(std::move(w));
  }

  // inverse classes, degrees, and value shadows mod q
  std::vector<int> invcls(k);
  for (int j = 0; j < k; ++j) invcls[j] = G.inverse_class(j);
  const long z = element_of_order(m, q);
  long sqrt_bound = 1;
  while ((sqrt_bound + 1) * (sqrt_bound + 1) <= n) ++sqrt_bound;

  // power classes: pc[j][s] = class of rep(j)^s for s < order(rep)
  std::vector<std::vector<int>> pc(k);
  for (int j = 0; j < k; ++j) {
    long o = cls[j].element_order;
    pc[j].resize(o);
    int cur = 0;  // identity
    for (long s = 0; s < o; ++s) {
      pc[j][s] = G.class_of(cur);
      cur = G.mult(cur, cls[j].rep);
    }
  }

  std::vector<Character> chars;
  for (auto& w : omegas) {
    long s = 0;
    for (int j = 0; j < k; ++j)
      s = F.add(s, F.mul(F.mul(w[j], w[invcls[j]]), F.inv(cls[j].size % q)));
    if (s == 0) fail(Errc::lifting_failure, "degenerate norm in degree recovery");
    long d2 = F.mul(n % q, F.inv(s));
    long d = 0;
    for (long r0 = 1; r0 <= sqrt_bound; ++r0)
      if (F.mul(r0, r0) == d2) {
        d = r0;
        break;
      }
    if (d == 0) fail(Errc::lifting_failure, "degree is not a small square root");
    // shadow values mod q
    std::vector<long> x(k);
    for (int j = 0; j < k; ++j) x[j] = F.mul(F.mul(d, w[j]), F.inv(cls[j].size % q));
    // lift each class value
    Character chi;
    chi.grp = &G;
    chi.irreducible = true;
    chi.values.resize(k);
    for (int j = 0; j < k; ++j) {
      long o = cls[j].element_order;
      long zj = mod_pow(z, m / o, q);
      long oi = F.inv(o % q);
      Cyclotomic val(0);
      long musum = 0;
      long check = 0;
      long zj_t = 1;  // zj^t
      for (long t = 0; t < o; ++t) {
        long acc = 0;
        long ze = mod_inv(zj_t, q);  // zj^{-t}
        long zpow = 1;               // zj^{-t*s}
        for (long su = 0; su < o; ++su) {
          acc = F.add(acc, F.mul(x[pc[j][su]], zpow));
          zpow = F.mul(zpow, ze);
        }
        long mu = F.mul(acc, oi);
        if (mu > (long)d) fail(Errc::lifting_failure, "eigenvalue multiplicity out of range");
        if (mu) {
          val += Cyclotomic::root(o, t) * mpq_class(mu);
          musum += mu;
          check = F.add(check, F.mul(mu, zj_t));
        }
        zj_t = F.mul(zj_t, zj);
      }
      if (musum != d) fail(Errc::lifting_failure, "multiplicities do not sum to the degree");
      if (check != x[j]) fail(Errc::lifting_failure, "lifted value fails the mod-q check");
      val.shrink();
      chi.values[j] = std::move(val);
    }
    chars.push_back(std::move(chi));
  }

  // global consistency: sum of squares and row norms
  long sum_sq = 0;
  for (auto& chi : chars) sum_sq += chi.degree() * chi.degree();
  if (sum_sq != n) fail(Errc::lifting_failure, "degrees fail sum-of-squares");

  // deterministic order: degree, then value vectors in the common ambient
  long ma = m % 4 == 2 ? m / 2 : m;
  std::vector<std::vector<Cyclotomic>> keys(chars.size());
  for (size_t i = 0; i < chars.size(); ++i) {
    keys[i].reserve(k);
    for (auto& v : chars[i].values) keys[i].push_back(v.lifted_to(ma));
  }
  std::vector<int> ord(chars.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int A, int B) {
    long da = chars[A].degree(), db = chars[B].degree();
    if (da != db) return da < db;
    for (int j = 0; j < k; ++j) {
      int c = Cyclotomic::compare(keys[A][j], keys[B][j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable T;
  T.grp = &G;
  T.group_exponent = m;
  for (int i : ord) T.irr.push_back(std::move(chars[i]));

  for (auto& chi : T.irr) {
    mpq_class nn = inner_product(chi, chi);
    if (nn != 1) fail(Errc::lifting_failure, "irreducible character with norm != 1");
  }
  return T;
}

mpq_class inner_product(const Character& a, const Character& b) {
  const Group& G = *a.grp;
  const auto& cls = G.classes();
  Cyclotomic acc(0);
  for (size_t j = 0; j < cls.size(); ++j)
    acc += a.values[j] * b.values[j].conj() * mpq_class(cls[j].size);
  if (!acc.is_rational()) fail(Errc::lifting_failure, "inner product is not rational");
  return acc.rational_value() / mpq_class(G.order());
}

Character restrict_to(const Character& chi, const Group& H) {
  const Group& G = *chi.grp;
  Character r;
  r.grp = &H;
  r.irreducible = false;
  const auto& hcls = H.classes();
  r.values.reserve(hcls.size());
  for (auto& c : hcls) {
    int gi = G.index_of(H.element(c.rep));
    if (gi < 0) fail(Errc::malformed_permutation, "subgroup element missing from the parent");
    r.values.push_back(chi.values[G.class_of(gi)]);
  }
  return r;
}

std::vector<long> decompose(const CharacterTable& T, const Character& psi) {
  std::vector<long> mult(T.size());
  for (int i = 0; i < T.size(); ++i) {
    mpq_class c = inner_product(psi, T.irr[i]);
    if (c.get_den() != 1 || c < 0)
      fail(Errc::lifting_failure, "non-integral or negative multiplicity in decomposition");
    mult[i] = (long)c.get_num().get_si();
  }
  return mult;
}

Character induce_from(const Character& psi, const Group& G) {
  const Group& H = *psi.grp;
  Character r;
  r.grp = &G;
  r.irreducible = false;
  const auto& cls = G.classes();
  r.values.resize(cls.size());
  for (size_t j = 0; j < cls.size(); ++j) {
    Cyclotomic acc(0);
    int g = cls[j].rep;
    for (long x = 0; x < G.order(); ++x) {
      int cx = G.mult(G.mult(G.inv((int)x), g), (int)x);
      int hi = H.index_of(G.element(cx));
      if (hi >= 0) acc += psi.values[H.class_of(hi)];
    }
    r.values[j] = acc / mpq_class(H.order());
  }
  return r;
}

int value_set_level(const Character& chi, long p) {
  return level(std::span<const Cyclotomic>(chi.values.data(), chi.values.size()), p);
}

int restricted_level(const Character& chi, const Group& G, const std::vector<int>& h_elems,
                     long p) {
  std::vector<char> seen(chi.values.size(), 0);
  std::vector<Cyclotomic> vals;
  for (int e : h_elems) {
    int c = G.class_of(e);
    if (!seen[c]) {
      seen[c] = 1;
      vals.push_back(chi.values[c]);
    }
  }
  return level(vals, p);
}

std::pair<int, int> level_witness(const Character& chi, long p) {
  int best = 0, arg = 0;
  for (size_t j = 0; j < chi.values.size(); ++j) {
    int lv = level(chi.values[j], p);
    if (lv > best) {
      best = lv;
      arg = (int)j;
    }
  }
  return {arg, best};
}

Character delta_part(const CharacterTable& T, const Character& Psi, int i, long p) {
  auto mult = decompose(T, Psi);
  const auto& lv = T.levels(p);
  Character r;
  r.grp = T.grp;
  r.irreducible = false;
  r.values.assign(Psi.values.size(), Cyclotomic(0));
  for (int c = 0; c < T.size(); ++c) {
    if (mult[c] == 0 || lv[c] != i) continue;
    for (size_t j = 0; j < r.values.size(); ++j)
      r.values[j] += T.irr[c].values[j] * mpq_class(mult[c]);
  }
  return r;
}

std::optional<int> ell_invariant(const CharacterTable& T, const Character& Psi, long p) {
  auto mult = decompose(T, Psi);
  const auto& lv = T.levels(p);
  std::map<int, long> deg_by_level;
  for (int c = 0; c < T.size(); ++c)
    if (mult[c]) deg_by_level[lv[c]] += mult[c] * T.irr[c].degree();
  std::optional<int> best;
  for (auto& [i, d] : deg_by_level)
    if (d % p != 0) best = best ? std::max(*best, i) : i;
  return best;
}

int galois_permute(const CharacterTable& T, int chi, long k) {
  const auto& pm = T.power_map(k);
  Character moved;
  moved.grp = T.grp;
  moved.values.resize(T.irr[chi].values.size());
  for (size_t j = 0; j < moved.values.size(); ++j)
    moved.values[j] = T.irr[chi].values[pm[j]];
  int idx = T.index_of(moved);
  if (idx < 0) fail(Errc::lifting_failure, "galois image is not in the table");
  return idx;
}

}  // namespace blockscope
