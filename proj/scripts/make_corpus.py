#!/usr/bin/env python3
"""Builds the bundled corpora (data/corpus.json, data/paper_7_3.json).

Each group is emitted as 0-based permutation image arrays. Abstract groups are
realized either through a small faithful action or through the regular action
on their own elements; a closure check verifies every stated order.
"""

import json
import os
from itertools import product

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def closure_order(degree, gens):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def entry(name, degree, gens, order, expected=None):
    got = closure_order(degree, [list(g) for g in gens])
    assert got == order, f"{name}: closure gives {got}, wanted {order}"
    e = {"name": name, "degree": degree, "generators": [list(g) for g in gens]}
    if expected:
        e["expected"] = expected
    return e


def cycle(n):
    return [(i + 1) % n for i in range(n)]


def regular(elems, mult, gens):
    """Left-translation permutations of `gens` on the sorted element list."""
    elems = sorted(elems)
    index = {e: i for i, e in enumerate(elems)}
    out = []
    for g in gens:
        out.append([index[mult(g, x)] for x in elems])
    return len(elems), out


def dicyclic(m):
    """<a,b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1>, order 4m."""
    elems = [(i, j) for i in range(2 * m) for j in range(2)]

    def mult(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % (2 * m), l)
        if l == 0:
            return ((i - k) % (2 * m), 1)
        return ((i - k + m) % (2 * m), 0)

    return regular(elems, mult, [(1, 0), (0, 1)])


def metacyclic(n, m, r):
    """<a,b | a^n, b^m, b a b^-1 = a^r>, order n*m (r^m = 1 mod n)."""
    assert pow(r, m, n) == 1
    elems = [(i, j) for i in range(n) for j in range(m)]

    def mult(x, y):
        i, j = x
        k, l = y
        return ((i + k * pow(r, j, n)) % n, (j + l) % m)

    return regular(elems, mult, [(1, 0), (0, 1)])


def affine(p, a):
    """x -> x+1 and x -> a*x on Z/p (a of multiplicative order m): C_p : C_m."""
    add = [(x + 1) % p for x in range(p)]
    mul = [x * a % p for x in range(p)]
    return p, [add, mul]


def on_vectors(q, mats, sign=1):
    """Matrix generators of a subgroup of GL(2,q) acting on nonzero vectors."""
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for m in mats:
        img = [0] * len(vecs)
        for v, i in index.items():
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % q, (m[1][0] * v[0] + m[1][1] * v[1]) % q)
            img[i] = index[w]
        gens.append(img)
    return len(vecs), gens


def psl2(q, squares_gen):
    """x -> x+1, x -> a*x, x -> -1/x on the projective line over the prime field."""
    pts = ["inf"] + list(range(q))
    index = {p: i for i, p in enumerate(pts)}

    def perm(f):
        return [index[f(p)] for p in pts]

    t = perm(lambda x: "inf" if x == "inf" else (x + 1) % q)
    m = perm(lambda x: "inf" if x == "inf" else x * squares_gen % q)
    s = perm(lambda x: 0 if x == "inf" else "inf" if x == 0 else (-pow(x, q - 2, q)) % q)
    return q + 1, [t, m, s]


def psl2_even(f):
    """PSL(2, 2^f) = SL(2, 2^f) on the projective line over GF(2^f)."""
    q = 2 ** f
    # GF(2^f) via the lexicographically smallest irreducible polynomial
    # (precomputed for the sizes used here)
    polys = {1: 0b11, 2: 0b111, 3: 0b1011}  # x+1, x^2+x+1, x^3+x+1
    mod = polys[f]

    def mulf(a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & (1 << f):
                a ^= mod
            b >>= 1
        return r

    def invf(a):
        for b in range(1, q):
            if mulf(a, b) == 1:
                return b
        raise AssertionError

    # multiplicative generator: smallest element of full order
    def order(a):
        o, x = 1, a
        while x != 1:
            x = mulf(x, a)
            o += 1
        return o

    gen = next(a for a in range(2, q) if order(a) == q - 1)
    pts = ["inf"] + list(range(q))
    index = {p: i for i, p in enumerate(pts)}

    def perm(f_):
        return [index[f_(p)] for p in pts]

    t = perm(lambda x: "inf" if x == "inf" else x ^ 1)
    m = perm(lambda x: "inf" if x == "inf" else mulf(x, gen))
    s = perm(lambda x: 0 if x == "inf" else "inf" if x == 0 else invf(x))
    return q + 1, [t, m, s]


def g108_19():
    """(C9 x V4) : C3 with the top C3 twisting C9 by a -> a^4 and cycling V4."""
    a = list(range(13))
    a[:9] = [(x + 1) % 9 for x in range(9)]
    u1 = list(range(13))
    u1[9], u1[10], u1[11], u1[12] = 10, 9, 12, 11  # (9 10)(11 12)
    u2 = list(range(13))
    u2[9], u2[10], u2[11], u2[12] = 11, 12, 9, 10  # (9 11)(10 12)
    c = [(4 * x) % 9 for x in range(9)] + [9, 11, 12, 10]  # (10 11 12)
    return 13, [a, u1, u2, c]


def c9xc3_semi_c2():
    """(C9 x C3) : C2 with the involution inverting both factors."""
    a = [(x + 1) % 9 for x in range(9)] + [9, 10, 11]
    c = list(range(9)) + [10, 11, 9]
    b = [(-x) % 9 for x in range(9)] + [9, 11, 10]
    return 12, [a, c, b]


def c9_x_s3():
    a = [(x + 1) % 9 for x in range(9)] + [9, 10, 11]
    r = list(range(9)) + [10, 11, 9]
    s = list(range(9)) + [10, 9, 11]
    return 12, [a, r, s]


def heisenberg3():
    """3^(1+2) of exponent 3 on the 9 points of F_3^2."""
    idx = {(i, j): 3 * i + j for i, j in product(range(3), range(3))}
    x = [0] * 9
    y = [0] * 9
    for (i, j), n in idx.items():
        x[n] = idx[((i + 1) % 3, j)]
        y[n] = idx[(i, (j + i) % 3)]
    return 9, [x, y]


def f36():
    """(C3 x C3) : C4 (Frobenius) on the 9 points of F_3^2."""
    idx = {(i, j): 3 * i + j for i, j in product(range(3), range(3))}
    t1 = [0] * 9
    t2 = [0] * 9
    m = [0] * 9
    for (i, j), n in idx.items():
        t1[n] = idx[((i + 1) % 3, j)]
        t2[n] = idx[(i, (j + 1) % 3)]
        m[n] = idx[(j, (-i) % 3)]
    return 9, [t1, t2, m]


def c3_wr_c2():
    return 6, [[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3], [3, 4, 5, 0, 1, 2]]


def c2_wr_c3():
    """C2^3 : C3 = C2 x A4 on 6 points."""
    return 6, [[1, 0, 2, 3, 4, 5], [2, 3, 4, 5, 0, 1]]


def main():
    groups = []

    def add(name, pair, order, expected=None):
        degree, gens = pair
        groups.append(entry(name, degree, gens, order, expected))

    # fixtures exported for the negative examples (levels drop on D, not on N_G(D))
    fixtures = []
    fixtures.append(
        entry(
            "SmallGroup(24,4)",
            *dicyclic(6),
            24,
            {"2": {"defect_restriction_levels": [
                {"degree": 2, "lev": 2, "lev_D": 0, "lev_N": 2}]}},
        )
    )
    fixtures.append(
        entry(
            "SmallGroup(48,5)",
            *metacyclic(24, 2, 5),
            48,
            {"2": {"defect_restriction_levels": [
                {"degree": 2, "lev": 3, "lev_D": 2, "lev_N": 3}]}},
        )
    )
    fixtures.append(
        entry(
            "SmallGroup(108,19)",
            *g108_19(),
            108,
            {"3": {"defect_restriction_levels": [
                {"degree": 3, "lev": 2, "lev_D": 1, "lev_N": 2}]}},
        )
    )

    add("C1", (1, []), 1)
    add("C2", (2, [cycle(2)]), 2)
    add("C3", (3, [cycle(3)]), 3)
    add("C4", (4, [cycle(4)]), 4)
    add("C8", (8, [cycle(8)]), 8)
    add("C9", (9, [cycle(9)]), 9)
    add("C12", (12, [cycle(12)]), 12)
    add("C16", (16, [cycle(16)]), 16)
    add("V4", (4, [[1, 0, 3, 2], [2, 3, 0, 1]]), 4)
    add("C3xC3", (6, [[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3]]), 9)
    add("C9xC3", (12, [cycle(9) + [9, 10, 11], list(range(9)) + [10, 11, 9]]), 27)
    add("S3", (3, [[1, 2, 0], [1, 0, 2]]), 6)
    add("D8", (4, [[1, 2, 3, 0], [0, 3, 2, 1]]), 8)
    add("Q8", *[dicyclic(2)], 8)
    add("D12", (6, [[1, 2, 3, 4, 5, 0], [0, 5, 4, 3, 2, 1]]), 12)
    add("Dic3", *[dicyclic(3)], 12)
    add("A4", (4, [[1, 2, 0, 3], [1, 0, 3, 2]]), 12)
    add("D16", (8, [[1, 2, 3, 4, 5, 6, 7, 0], [0, 7, 6, 5, 4, 3, 2, 1]]), 16)
    add("SD16", *[metacyclic(8, 2, 3)], 16)
    add("M4(2)", *[metacyclic(8, 2, 5)], 16)
    add("Q16", *[dicyclic(4)], 16)
    add("C3:C8", *[metacyclic(3, 8, 2)], 24)
    add("S4", (4, [[1, 2, 3, 0], [1, 0, 2, 3]]), 24)
    add("SL(2,3)", on_vectors(3, [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]), 24)
    add("C2xA4", *[c2_wr_c3()], 24)
    add("D24", (12, [cycle(12), [0] + list(range(11, 0, -1))]), 24)
    add("C3wrC2", *[c3_wr_c2()], 18)
    add("D18", (9, [cycle(9), [0] + list(range(8, 0, -1))]), 18)
    add("C9:C3", (9, [cycle(9), [(4 * x) % 9 for x in range(9)]]), 27)
    add("Heis3", *[heisenberg3()], 27)
    add("F20", affine(5, 2), 20)
    add("F21", affine(7, 2), 21)
    add("F42", affine(7, 3), 42)
    add("F36", *[f36()], 36)
    add("F39", affine(13, 3), 39)
    add("F52", affine(13, 5), 52)
    add("F55", affine(11, 3), 55)
    add("(C9xC3):C2", *[c9xc3_semi_c2()], 54)
    add("C9xS3", *[c9_x_s3()], 54)
    add("C3:C16", *[metacyclic(3, 16, 2)], 48)
    add("GL(2,3)", on_vectors(3, [[[1, 1], [0, 1]], [[0, 2], [1, 0]], [[1, 0], [0, 2]]]), 48)
    add("SL(2,5)", on_vectors(5, [[[1, 1], [0, 1]], [[0, 4], [1, 0]]]), 120)
    add("A5", (5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]]), 60)
    add("S5", (5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]), 120)
    add("A6", (6, [[1, 2, 0, 3, 4, 5], [0, 2, 3, 4, 5, 1]]), 360)
    add("S6", (6, [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]]), 720)
    add("PSL(2,7)", psl2(7, 4), 168)
    add("PSL(2,8)", psl2_even(3), 504)

    groups = fixtures + groups

    os.makedirs(OUT_DIR, exist_ok=True)
    with open(os.path.join(OUT_DIR, "paper_7_3.json"), "w") as f:
        json.dump({"groups": fixtures}, f, indent=1)
        f.write("\n")
    with open(os.path.join(OUT_DIR, "corpus.json"), "w") as f:
        json.dump({"groups": groups}, f, indent=1)
        f.write("\n")
    with open(os.path.join(OUT_DIR, "smoke.json"), "w") as f:
        json.dump({"groups": [g for g in groups if g["name"] in ("C1", "S3", "S4")]}, f, indent=1)
        f.write("\n")
    print(f"wrote {len(groups)} groups")


if __name__ == "__main__":
    main()
