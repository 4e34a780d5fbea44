#!/usr/bin/env python3
"""Generate the bundled .pcp/.aut/.endo corpus from concrete group models.

Each group is given by a multiplication on concrete elements (integers mod n,
permutations, matrices) and a pcgs. Normal forms are found by enumerating all
products g_1^e_1 ... g_n^e_n (or, for unitriangular groups, by peeling the
superdiagonals), and relations/map images are read off from them.
"""

import argparse
import itertools
import os
import random

from sympy.ntheory import primitive_root


class Group:
    def __init__(self, mul, identity, pcgs, orders, nf=None):
        self.mul = mul
        self.identity = identity
        self.pcgs = pcgs
        self.orders = orders
        self._nf_fn = nf
        self._table = None if nf else self._enumerate()

    def power(self, g, e):
        r = self.identity
        for _ in range(e):
            r = self.mul(r, g)
        return r

    def inverse(self, g):
        x, prev = g, self.identity
        while x != self.identity:
            prev, x = x, self.mul(x, g)
        return prev

    def _enumerate(self):
        table = {self.identity: ()}
        for g, p in zip(reversed(self.pcgs), reversed(self.orders)):
            nxt = {}
            for e in range(p):
                ge = self.power(g, e)
                for s, ex in table.items():
                    nxt[self.mul(ge, s)] = (e,) + ex
            table = nxt
        total = 1
        for p in self.orders:
            total *= p
        if len(table) != total:
            raise ValueError("sequence is not a pcgs of a group of order %d" % total)
        return table

    def nf(self, g):
        if self._nf_fn:
            return self._nf_fn(g)
        return self._table[g]

    def relations(self):
        n = len(self.pcgs)
        pows, conjs = {}, {}
        for i, (g, p) in enumerate(zip(self.pcgs, self.orders)):
            v = self.nf(self.power(g, p))
            if any(v[: i + 1]):
                raise ValueError("power relation %d escapes the tail" % (i + 1))
            if any(v):
                pows[i] = v
        for j in range(n):
            for i in range(j):
                gi = self.pcgs[i]
                v = self.nf(self.mul(self.mul(self.inverse(gi), self.pcgs[j]), gi))
                if any(v[: i + 1]):
                    raise ValueError("conjugate relation %d %d escapes the tail" % (j + 1, i + 1))
                unit = tuple(1 if k == j else 0 for k in range(n))
                if v != unit:
                    conjs[(j, i)] = v
        return pows, conjs


def word(v):
    return " ".join(str(k + 1) if e == 1 else "%d^%d" % (k + 1, e)
                    for k, e in enumerate(v) if e)


def vec(v):
    return "[" + ",".join(str(e) for e in v) + "]"


def pcp_text(name, grp):
    pows, conjs = grp.relations()
    lines = ["# %s" % name, "pcpres 1", "n %d" % len(grp.orders),
             "orders " + " ".join(str(p) for p in grp.orders)]
    for i in sorted(pows):
        lines.append("pow %d = %s" % (i + 1, word(pows[i])))
    for (j, i) in sorted(conjs, key=lambda t: (t[1], t[0])):
        lines.append("conj %d %d = %s" % (j + 1, i + 1, word(conjs[(j, i)])))
    return "\n".join(lines) + "\n"


def map_text(comment, grp, f):
    lines = ["# " + comment]
    for i, g in enumerate(grp.pcgs):
        lines.append("img %d = %s" % (i + 1, vec(grp.nf(f(g)))))
    return "\n".join(lines) + "\n"


# --- concrete models -------------------------------------------------------

def cyclic(n, pcgs_exps, orders):
    return Group(lambda a, b: (a + b) % n, 0, list(pcgs_exps), orders)


def perm_mul(a, b):
    # apply a, then b
    return tuple(b[a[i]] for i in range(len(a)))


def perm(n, cycles):
    p = list(range(n))
    for c in cycles:
        for k in range(len(c)):
            p[c[k]] = c[(k + 1) % len(c)]
    return tuple(p)


def conj_by(mul, inverse, h):
    return lambda x: mul(mul(h, x), inverse(h))


def dihedral_perms(m):
    rho = tuple((i + 1) % m for i in range(m))
    sigma = tuple((-i) % m for i in range(m))
    return rho, sigma


def mat_mul(p):
    def mul(a, b):
        n = len(a)
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
                     for i in range(n))
    return mul


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def elementary(n, i, j, p, e=1):
    m = [list(r) for r in mat_identity(n)]
    m[i][j] = e % p
    return tuple(tuple(r) for r in m)


def ut_group(n, p, order=None):
    """UT(n, p) with pcgs E_ij ordered by superdiagonal (or a custom order)."""
    mul = mat_mul(p)
    idx = order or [(i, i + k) for k in range(1, n) for i in range(n - k)]
    pcgs = [elementary(n, i, j, p) for (i, j) in idx]
    orders = [p] * len(pcgs)
    if order is not None:
        return Group(mul, mat_identity(n), pcgs, orders)
    pos = {ij: t for t, ij in enumerate(idx)}

    def nf(m):
        # Level by level: the superdiagonal entries of what remains are the
        # exponents; strip them off on the left.
        v = [0] * len(idx)
        r = m
        for k in range(1, n):
            left = mat_identity(n)
            for i in range(n - k):
                e = r[i][i + k] % p
                v[pos[(i, i + k)]] = e
                if e:
                    left = mul(left, elementary(n, i, i + k, p, e))
            r = mul(mat_inverse_unitriangular(left, p), r)
        return tuple(v)

    return Group(mul, mat_identity(n), pcgs, orders, nf=nf)


def mat_inverse_unitriangular(m, p):
    n = len(m)
    mul = mat_mul(p)
    nil = tuple(tuple((m[i][j] - (1 if i == j else 0)) % p for j in range(n)) for i in range(n))
    # (I + N)^{-1} = I - N + N^2 - ...
    result = mat_identity(n)
    term = mat_identity(n)
    for k in range(1, n):
        term = mul(term, nil)
        sign = -1 if k % 2 else 1
        result = tuple(tuple((result[i][j] + sign * term[i][j]) % p for j in range(n))
                       for i in range(n))
    return result


def mat_transpose(m):
    return tuple(zip(*m))


def ut_flip(n, p):
    """M -> J (M^{-1})^T J, an automorphism of UT(n, p)."""
    def f(m):
        inv = mat_inverse_unitriangular(m, p)
        t = mat_transpose(inv)
        return tuple(tuple(t[n - 1 - i][n - 1 - j] for j in range(n)) for i in range(n))
    return f


def random_ut(n, p, rng):
    m = [list(r) for r in mat_identity(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = rng.randrange(p)
    return tuple(tuple(r) for r in m)


def quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)


def affine_mul(m):
    # (a, b): z -> a z + b; product = apply first, then second
    return lambda x, y: ((x[0] * y[0]) % m, (y[0] * x[1] + y[1]) % m)


# --- corpus ----------------------------------------------------------------

def build(out):
    files = {}
    manifest = []

    def add(name, grp, auts=(), endos=()):
        files[name + ".pcp"] = pcp_text(name, grp)
        for tag, comment, f in auts:
            files["%s.%s.aut" % (name, tag)] = map_text(comment, grp, f)
        for tag, comment, f in endos:
            files["%s.%s.endo" % (name, tag)] = map_text(comment, grp, f)
        order = 1
        for p in grp.orders:
            order *= p
        manifest.append("%s %d" % (name, order))

    for p in (2, 3, 5, 7, 10007):
        g = cyclic(p, [1], [p])
        r = primitive_root(p) if p > 2 else 1
        add("C%d" % p, g, [("primitive", "x -> x^%d" % r, lambda x, r=r, p=p: (x * r) % p)],
            [("zero", "trivial endomorphism", lambda x: 0)])

    add("C8", cyclic(8, [1, 2, 4], [2, 2, 2]),
        [("x3", "x -> x^3", lambda x: (3 * x) % 8), ("x5", "x -> x^5", lambda x: (5 * x) % 8)],
        [("square", "x -> x^2", lambda x: (2 * x) % 8)])
    add("C4", cyclic(4, [1, 2], [2, 2]),
        [("inv", "x -> x^-1", lambda x: (-x) % 4)],
        [("square", "x -> x^2", lambda x: (2 * x) % 4)])
    add("C9", cyclic(9, [1, 3], [3, 3]),
        [("x2", "x -> x^2", lambda x: (2 * x) % 9)],
        [("cube", "x -> x^3", lambda x: (3 * x) % 9)])
    add("C25", cyclic(25, [1, 5], [5, 5]),
        [("x2", "x -> x^2", lambda x: (2 * x) % 25)],
        [("fifth", "x -> x^5", lambda x: (5 * x) % 25)])

    # C4 x C2 on (a, a^2, b): a pcgs that does not refine the Frattini series.
    c42 = Group(lambda x, y: ((x[0] + y[0]) % 4, (x[1] + y[1]) % 2), (0, 0),
                [(1, 0), (2, 0), (0, 1)], [2, 2, 2])
    add("C4xC2_mixed", c42,
        [("twist", "(a, b) -> (a + 2b, a + b)", lambda v: ((v[0] + 2 * v[1]) % 4, (v[0] + v[1]) % 2))],
        [("square", "x -> x^2", lambda v: ((2 * v[0]) % 4, 0))])

    add_c3 = lambda a, b: ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3)
    c33 = Group(add_c3, (0, 0), [(1, 0), (0, 1)], [3, 3])
    add("C3xC3", c33,
        [("shear", "(a, b) -> (a + b, b)", lambda v: ((v[0] + v[1]) % 3, v[1])),
         ("swapneg", "(a, b) -> (b, -a)", lambda v: (v[1], (-v[0]) % 3))],
        [("collapse", "(a, b) -> (a + b, 0)", lambda v: ((v[0] + v[1]) % 3, 0))])

    # D4 inside the symmetries of the octagon: conjugation by the rotation of
    # order 8 gives an outer automorphism.
    rho8, sig8 = dihedral_perms(8)
    r = perm_mul(rho8, rho8)
    s = sig8
    inv = lambda x: tuple(sorted(range(len(x)), key=lambda i: x[i]))
    d4 = Group(perm_mul, tuple(range(8)), [s, r, perm_mul(r, r)], [2, 2, 2])
    add("D4", d4,
        [("conj_r", "conjugation by r", conj_by(perm_mul, inv, r)),
         ("outer", "conjugation by a rotation of order 8", conj_by(perm_mul, inv, rho8))],
        [("project", "s -> s, r -> 1", lambda x: s if x in _coset(d4, s, r) else tuple(range(8)))])
    sr = perm_mul(s, r)
    d4s = Group(perm_mul, tuple(range(8)), [sr, perm_mul(r, perm_mul(r, r)), perm_mul(r, r)], [2, 2, 2])
    add("D4_scrambled", d4s,
        [("outer", "conjugation by a rotation of order 8", conj_by(perm_mul, inv, rho8))])

    rho12, sig12 = dihedral_perms(12)
    r6 = perm_mul(rho12, rho12)
    d6 = Group(perm_mul, tuple(range(12)), [sig12, r6, perm_mul(r6, r6)], [2, 2, 3])
    add("D6", d6,
        [("outer", "conjugation by a rotation of order 12", conj_by(perm_mul, inv, rho12)),
         ("inner_s", "conjugation by s", conj_by(perm_mul, inv, sig12))])

    one = (1, 0, 0, 0)
    qi, qj = (0, 1, 0, 0), (0, 0, 1, 0)
    q8 = Group(quat_mul, one, [qi, qj, (-1, 0, 0, 0)], [2, 2, 2])
    add("Q8", q8,
        [("cycle", "i -> j -> k -> i", lambda q: (q[0], q[3], q[1], q[2])),
         ("swap", "i <-> j, k -> -k", lambda q: (q[0], q[2], q[1], -q[3]))],
        [("center", "i -> -1, j -> 1", lambda q: (-1, 0, 0, 0) if q[1] or (q[0] == 0 and q[3]) else one)])

    s3 = Group(perm_mul, (0, 1, 2), [perm(3, [(0, 1)]), perm(3, [(0, 1, 2)])], [2, 3])
    add("S3", s3, [("inner_t", "conjugation by (1 2 3)",
                    conj_by(perm_mul, inv, perm(3, [(0, 1, 2)])))],
        [("zero", "trivial endomorphism", lambda x: (0, 1, 2))])

    a = perm(4, [(0, 1)])
    b = perm(4, [(0, 1, 2)])
    c = perm(4, [(0, 1), (2, 3)])
    d = perm(4, [(0, 2), (1, 3)])
    s4 = Group(perm_mul, (0, 1, 2, 3), [a, b, c, d], [2, 3, 2, 2])
    sign = lambda x: sum(1 for i in range(4) for j in range(i + 1, 4) if x[i] > x[j]) % 2
    add("S4", s4,
        [("inner_4cycle", "conjugation by (1 2 3 4)",
          conj_by(perm_mul, inv, perm(4, [(0, 1, 2, 3)])))],
        [("sign", "x -> (1 2)^sign(x)", lambda x: a if sign(x) else (0, 1, 2, 3))])

    m21 = Group(affine_mul(7), (1, 0), [(2, 0), (1, 1)], [3, 7])
    add("M21", m21,
        [("scale3", "conjugation by z -> 3z", lambda x: (x[0], (3 * x[1]) % 7)),
         ("inner", "conjugation by z -> z + 1",
          conj_by(affine_mul(7), lambda x: (pow(x[0], 5, 7), (-pow(x[0], 5, 7) * x[1]) % 7), (1, 1)))],
        [("complement", "(a, b) -> (a, 0)", lambda x: (x[0], 0))])

    rng = random.Random(20240611)
    for n in (3, 4, 5, 6, 8):
        g = ut_group(n, 2)
        e14 = elementary(n, 0, n - 1, 2)
        auts = [("flip", "anti-transpose inverse", ut_flip(n, 2))]
        for k in range(2):
            h = random_ut(n, 2, rng)
            auts.append(("inner%d" % (k + 1), "conjugation by a random element",
                         conj_by(mat_mul(2), lambda x: mat_inverse_unitriangular(x, 2), h)))
        endos = [("corner", "x -> E_1n^(x_12)", lambda x, e=e14, n=n: e if x[0][1] else mat_identity(n))]
        add("UT%d_2" % n, g, auts, endos)

    ut33 = ut_group(3, 3)
    diag = ((1, 0, 0), (0, 2, 0), (0, 0, 1))
    add("UT3_3", ut33,
        [("diag", "conjugation by diag(1, 2, 1)", conj_by(mat_mul(3), lambda x: x, diag)),
         ("flip", "anti-transpose inverse", ut_flip(3, 3))],
        [("abelian", "x -> E_13^(x_12)", lambda x: elementary(3, 0, 2, 3, x[0][1]) )])

    order = [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (0, 3)]
    uts = ut_group(4, 2, order=order)
    add("UT4_2_scrambled", uts,
        [("flip", "anti-transpose inverse", ut_flip(4, 2)),
         ("inner", "conjugation by a random element",
          conj_by(mat_mul(2), lambda x: mat_inverse_unitriangular(x, 2), random_ut(4, 2, rng)))])

    os.makedirs(out, exist_ok=True)
    for name, text in sorted(files.items()):
        with open(os.path.join(out, name), "w") as fh:
            fh.write(text)
    with open(os.path.join(out, "MANIFEST"), "w") as fh:
        fh.write("# group order\n" + "\n".join(sorted(manifest)) + "\n")


def _coset(grp, s, r):
    # elements of the coset s<r>
    out, x = set(), s
    for _ in range(8):
        out.add(x)
        x = perm_mul(x, r)
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "corpus"))
    build(ap.parse_args().out)
