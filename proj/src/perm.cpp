#include "blockscope/perm.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/parallel.hpp"

namespace blockscope {

namespace {

uint64_t hash_images(const std::vector<Point>& v) {
  uint64_t h = 1469598103934665603ull;
  for (Point x : v) {
    h ^= (uint64_t)(uint32_t)x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x < 0 || x >= (Point)img_.size() || seen[x])
      fail(Errc::malformed_permutation, "image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> v(degree);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<Point> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) v[x] = img_[o.img_[x]];
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) v[img_[x]] = (Point)x;
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

long Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  long o = 1;
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    long len = 0;
    Point y = (Point)x;
    while (!seen[y]) {
      seen[y] = 1;
      y = img_[y];
      ++len;
    }
    o = lcm_l(o, len);
  }
  return o;
}

std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == (Point)x) {
      seen[x] = 1;
      continue;
    }
    s += "(";
    Point y = (Point)x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) s += " ";
      s += std::to_string(y);
      first = false;
      y = img_[y];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Group::Group(int degree, std::vector<Permutation> generators) : degree_(degree) {
  for (const auto& g : generators)
    if (g.degree() != degree) fail(Errc::malformed_permutation, "generator degree mismatch");
  gens_ = std::move(generators);
  const long bound = max_group_order().load();
  std::unordered_map<uint64_t, std::vector<int>> seen;
  std::vector<Permutation> all;
  auto find = [&](const Permutation& p) {
    auto it = seen.find(hash_images(p.images()));
    if (it == seen.end()) return -1;
    for (int id : it->second)
      if (all[id] == p) return id;
    return -1;
  };
  auto push = [&](const Permutation& p) {
    if (find(p) >= 0) return false;
    seen[hash_images(p.images())].push_back((int)all.size());
    all.push_back(p);
    return true;
  };
  push(Permutation::identity(degree));
  size_t head = 0;
  while (head < all.size()) {
    Permutation cur = all[head++];
    for (const auto& g : gens_) {
      Permutation nxt = cur * g;
      if (push(nxt) && (long)all.size() > bound)
        fail(Errc::enumeration_bound_exceeded,
             "group enumeration exceeded the configured bound of " + std::to_string(bound));
    }
  }
  elems_ = std::move(all);
  index_elements();
}

Group Group::from_elements(int degree, std::vector<Permutation> elements,
                           std::vector<Permutation> generators) {
  Group G;
  G.degree_ = degree;
  G.gens_ = std::move(generators);
  G.elems_ = std::move(elements);
  G.index_elements();
  return G;
}

void Group::index_elements() {
  std::sort(elems_.begin(), elems_.end());
  index_.clear();
  for (size_t i = 0; i < elems_.size(); ++i)
    index_[hash_images(elems_[i].images())].push_back((int)i);
  if (gens_.empty()) gens_.push_back(Permutation::identity(degree_));
  orders_.assign(elems_.size(), 0);
  for (size_t i = 0; i < elems_.size(); ++i) orders_[i] = elems_[i].order();
}

int Group::index_of(const Permutation& p) const {
  auto it = index_.find(hash_images(p.images()));
  if (it == index_.end()) return -1;
  for (int id : it->second)
    if (elems_[id] == p) return id;
  return -1;
}

int Group::mult(int i, int j) const {
  int r = index_of(elems_[i] * elems_[j]);
  if (r < 0) fail(Errc::malformed_permutation, "group not closed under multiplication");
  return r;
}

int Group::inv(int i) const {
  int r = index_of(elems_[i].inverse());
  if (r < 0) fail(Errc::malformed_permutation, "group not closed under inversion");
  return r;
}

long Group::element_order(int i) const { return orders_[i]; }

long Group::exponent() const {
  long e = 1;
  for (long o : orders_) e = lcm_l(e, o);
  return e;
}

void Group::compute_classes() const {
  if (!classes_.empty()) return;
  const long n = order();
  class_of_.assign(n, -1);
  std::vector<std::pair<Permutation, Permutation>> conj;  // (g, g^-1) pairs for generators
  for (const auto& g : gens_) conj.emplace_back(g, g.inverse());
  struct Raw {
    int rep;
    long size;
    long elt_order;
  };
  std::vector<Raw> raw;
  for (long start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    int id = (int)raw.size();
    std::vector<int> orbit{(int)start};
    class_of_[start] = id;
    size_t head = 0;
    while (head < orbit.size()) {
      int cur = orbit[head++];
      for (auto& [g, gi] : conj) {
        Permutation c = g * elems_[cur] * gi;
        int ci = index_of(c);
        if (class_of_[ci] < 0) {
          class_of_[ci] = id;
          orbit.push_back(ci);
        }
      }
    }
    int rep = *std::min_element(orbit.begin(), orbit.end());
    raw.push_back({rep, (long)orbit.size(), orders_[start]});
  }
  // deterministic class order: element order, class size, then minimal member
  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (raw[a].elt_order != raw[b].elt_order) return raw[a].elt_order < raw[b].elt_order;
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return elems_[raw[a].rep] < elems_[raw[b].rep];
  });
  std::vector<int> newid(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) newid[perm[i]] = (int)i;
  for (long i = 0; i < n; ++i) class_of_[i] = newid[class_of_[i]];
  classes_.clear();
  for (int idx : perm)
    classes_.push_back({raw[idx].rep, raw[idx].size, n / raw[idx].size, raw[idx].elt_order});
}

const std::vector<ConjClass>& Group::classes() const {
  if (classes_.empty()) compute_classes();
  return classes_;
}

int Group::class_of(int i) const {
  classes();
  return class_of_[i];
}

int Group::inverse_class(int c) const { return class_of(inv(classes()[c].rep)); }

int Group::power_class(int c, long k) const {
  const auto& cls = classes();
  long o = cls[c].element_order;
  long kk = k % o;
  if (kk < 0) kk += o;
  int x = cls[c].rep;
  Permutation p = Permutation::identity(degree_);
  const Permutation& e = elems_[x];
  for (long t = 0; t < kk; ++t) p = p * e;
  return class_of(index_of(p));
}

std::vector<int> Group::power_class_map(long k) const {
  std::vector<int> m(class_count());
  for (int c = 0; c < class_count(); ++c) m[c] = power_class(c, k);
  return m;
}

std::vector<std::vector<std::vector<long>>> Group::class_constants_serial() const {
  const auto& cls = classes();
  const int k = (int)cls.size();
  const long n = order();
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  std::vector<int> invs(n);
  for (long x = 0; x < n; ++x) invs[x] = inv((int)x);
  for (int l = 0; l < k; ++l) {
    int zl = cls[l].rep;
    for (long x = 0; x < n; ++x) {
      int y = mult(invs[x], zl);  // x * y = z_l
      a[class_of_[x]][class_of_[y]][l] += 1;
    }
  }
  return a;
}

std::vector<std::vector<std::vector<long>>> Group::class_constants() const {
  const auto& cls = classes();
  const int k = (int)cls.size();
  const long n = order();
  if ((long)k * k * k > 100000000L)
    fail(Errc::size_bound_exceeded, "class count too large for the class algebra tensor");
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  std::vector<int> invs(n);
  for (long x = 0; x < n; ++x) invs[x] = inv((int)x);
#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l < k; ++l) {
    int zl = cls[l].rep;
    for (long x = 0; x < n; ++x) {
      int y = mult(invs[x], zl);
      a[class_of_[x]][class_of_[y]][l] += 1;  // distinct l per thread: no races
    }
  }
  return a;
}

bool Subgroup::contains(int idx) const {
  return std::binary_search(elems.begin(), elems.end(), idx);
}

Group Subgroup::as_group() const {
  std::vector<Permutation> es, gs;
  es.reserve(elems.size());
  for (int i : elems) es.push_back(parent->element(i));
  for (int i : gens) gs.push_back(parent->element(i));
  return Group::from_elements(parent->degree(), std::move(es), std::move(gs));
}

bool Subgroup::is_cyclic() const {
  for (int i : elems)
    if (parent->element_order(i) == order()) return true;
  return false;
}

bool Subgroup::is_abelian() const {
  for (int a : gens)
    for (int b : gens)
      if (parent->mult(a, b) != parent->mult(b, a)) return false;
  return true;
}

long Subgroup::exponent() const {
  long e = 1;
  for (int i : elems) e = lcm_l(e, parent->element_order(i));
  return e;
}

Group group_from_generators(int degree, const std::vector<std::vector<Point>>& images) {
  if (degree < 1) fail(Errc::malformed_permutation, "degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& v : images) {
    if ((int)v.size() != degree)
      fail(Errc::malformed_permutation, "generator length does not match degree");
    gens.emplace_back(v);
  }
  return Group(degree, std::move(gens));
}

Subgroup trivial_subgroup(const Group& G) { return {&G, {0}, {}}; }

Subgroup full_subgroup(const Group& G) {
  Subgroup s;
  s.parent = &G;
  s.elems.resize(G.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  s.gens = generators_of(G, s.elems);
  return s;
}

Subgroup subgroup_closure(const Group& G, std::vector<int> seed) {
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> members{0};
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<int> gens;
  for (int s : seed)
    if (s != 0) gens.push_back(s);
  for (int s : gens)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  size_t head = 0;
  std::vector<int> frontier = members;
  while (head < frontier.size()) {
    int cur = frontier[head++];
    for (int g : gens) {
      int nxt = G.mult(cur, g);
      if (!in[nxt]) {
        in[nxt] = 1;
        members.push_back(nxt);
        frontier.push_back(nxt);
      }
      int nxt2 = G.mult(g, cur);
      if (!in[nxt2]) {
        in[nxt2] = 1;
        members.push_back(nxt2);
        frontier.push_back(nxt2);
      }
    }
    int iv = G.inv(cur);
    if (!in[iv]) {
      in[iv] = 1;
      members.push_back(iv);
      frontier.push_back(iv);
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup s;
  s.parent = &G;
  s.elems = std::move(members);
  s.gens = std::move(gens);
  return s;
}

std::vector<int> generators_of(const Group& G, const std::vector<int>& elems) {
  std::vector<int> gens;
  Subgroup cur = subgroup_closure(G, {});
  for (int e : elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    std::vector<int> seed = gens;
    cur = subgroup_closure(G, seed);
    if ((long)cur.elems.size() == (long)elems.size()) break;
  }
  return gens;
}

namespace {

Subgroup pack_subgroup(const Group& G, std::vector<char>& in) {
  Subgroup s;
  s.parent = &G;
  for (long i = 0; i < G.order(); ++i)
    if (in[i]) s.elems.push_back((int)i);
  s.gens = generators_of(G, s.elems);
  return s;
}

}  // namespace

Subgroup centralizer_serial(const Group& G, const std::vector<int>& elems) {
  std::vector<char> in(G.order(), 0);
  for (long g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : elems)
      if (G.mult((int)g, x) != G.mult(x, (int)g)) {
        ok = false;
        break;
      }
    in[g] = ok;
  }
  return pack_subgroup(G, in);
}

Subgroup centralizer(const Group& G, const std::vector<int>& elems) {
  std::vector<char> in(G.order(), 0);
#pragma omp parallel for schedule(static)
  for (long g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : elems)
      if (G.mult((int)g, x) != G.mult(x, (int)g)) {
        ok = false;
        break;
      }
    in[g] = ok;
  }
  return pack_subgroup(G, in);
}

Subgroup normalizer_serial(const Group& G, const Subgroup& H) {
  std::vector<char> in(G.order(), 0);
  const std::vector<int> hg = H.gens.empty() ? std::vector<int>{0} : H.gens;
  for (long g = 0; g < G.order(); ++g) {
    int gi = G.inv((int)g);
    bool ok = true;
    for (int x : hg)
      if (!H.contains(G.mult(G.mult((int)g, x), gi))) {
        ok = false;
        break;
      }
    in[g] = ok;
  }
  return pack_subgroup(G, in);
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  std::vector<char> in(G.order(), 0);
  const std::vector<int> hg = H.gens.empty() ? std::vector<int>{0} : H.gens;
#pragma omp parallel for schedule(static)
  for (long g = 0; g < G.order(); ++g) {
    int gi = G.inv((int)g);
    bool ok = true;
    for (int x : hg)
      if (!H.contains(G.mult(G.mult((int)g, x), gi))) {
        ok = false;
        break;
      }
    in[g] = ok;
  }
  return pack_subgroup(G, in);
}

Subgroup sylow_subgroup(const Group& G, long p, uint64_t seed) {
  if (!is_prime_l(p)) fail(Errc::bad_exponent, "sylow requires a prime");
  long target = p_part(G.order(), p);
  Subgroup P = trivial_subgroup(G);
  if (target == 1) return P;
  std::mt19937_64 rng(seed);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    // find a p-element of N/P: y in N with y^(o/p) outside P for p | o,
    // where o = order of the coset yP
    std::vector<int> candidates = N.elems;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    int found = -1;
    for (int y : candidates) {
      if (P.contains(y)) continue;
      // order of yP in N/P: smallest t with y^t in P
      long t = 1;
      int cur = y;
      while (!P.contains(cur)) {
        cur = G.mult(cur, y);
        ++t;
      }
      if (t % p != 0) continue;
      // y^(t/p) has order exactly p in N/P
      Permutation acc = Permutation::identity(G.degree());
      Permutation base = G.element(y);
      long e = t / p;
      while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
      }
      int z = G.index_of(acc);
      if (P.contains(z)) continue;
      found = z;
      break;
    }
    if (found < 0)
      fail(Errc::lifting_failure, "sylow ascent found no p-element in the normalizer quotient");
    std::vector<int> seed_elems = P.gens;
    seed_elems.push_back(found);
    Subgroup P2 = subgroup_closure(G, seed_elems);
    if (P2.order() <= P.order())
      fail(Errc::lifting_failure, "sylow ascent failed to grow the subgroup");
    P = std::move(P2);
  }
  if (P.order() != target) fail(Errc::lifting_failure, "sylow subgroup has wrong order");
  return P;
}

std::pair<int, int> p_decomposition(const Group& G, int g, long p) {
  long o = G.element_order(g);
  long op = p_part(o, p);
  long opp = o / op;
  // g_p = g^(opp * u) with opp*u = 1 mod op; g_p' = g^(op * v) with op*v = 1 mod opp
  auto power = [&](long e) {
    Permutation acc = Permutation::identity(G.degree());
    Permutation base = G.element(g);
    long ee = e % o;
    while (ee) {
      if (ee & 1) acc = acc * base;
      base = base * base;
      ee >>= 1;
    }
    return G.index_of(acc);
  };
  long ep = op == 1 ? 0 : opp % op == 0 ? 0 : (long)((__int128)opp * mod_inv(opp % op, op) % o);
  long epp = opp == 1 ? 0 : (long)((__int128)op * mod_inv(op % opp, opp) % o);
  if (op == 1) return {0, g};
  if (opp == 1) return {g, 0};
  return {power(ep), power(epp)};
}

bool conjugate_into(const Group& G, int g, const Subgroup& H) {
  for (long x = 0; x < G.order(); ++x) {
    int c = G.mult(G.mult((int)x, g), G.inv((int)x));
    if (H.contains(c)) return true;
  }
  return false;
}

bool subgroups_conjugate(const Group& G, const Subgroup& H, const Subgroup& K) {
  if (H.order() != K.order()) return false;
  for (long x = 0; x < G.order(); ++x) {
    int xi = G.inv((int)x);
    bool ok = true;
    for (int h : H.gens.empty() ? std::vector<int>{0} : H.gens)
      if (!K.contains(G.mult(G.mult((int)x, h), xi))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace blockscope
