#!/usr/bin/env python3
"""Generate data/catalogue.txt: one multiplication-table-backed record per
isomorphism class of finite groups of order 1..32 and 49.

Strategy: every group of even order 2m with an index-2 subgroup is a
degree-2 extension of a group N of order m, determined by a pair
(alpha, z) with alpha in Aut(N), alpha(z) = z and alpha^2 = conj_z.
Iterating this from the odd-order seeds covers everything except the
groups with no index-2 subgroup (A4 at order 12, SL(2,3) at order 24),
which are added explicitly.  Classes are deduplicated by brute-force
isomorphism testing and emitted as generators of a small faithful
permutation representation.
"""

import sys
import itertools
from collections import defaultdict

# ---------------------------------------------------------------- tables ---
# A group is a tuple-of-tuples mult table over elements 0..n-1, 0 = identity.


def table_identity(tbl):
    n = len(tbl)
    for e in range(n):
        if all(tbl[e][x] == x and tbl[x][e] == x for x in range(n)):
            return e
    raise ValueError("no identity")


def normalize(tbl):
    """Relabel so the identity is element 0."""
    n = len(tbl)
    e = table_identity(tbl)
    if e == 0:
        return tuple(tuple(r) for r in tbl)
    perm = list(range(n))
    perm[0], perm[e] = e, 0
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(tuple(inv[tbl[perm[a]][perm[b]]] for b in range(n))
                 for a in range(n))


def check_group(tbl):
    n = len(tbl)
    assert table_identity(tbl) == 0
    for a in range(n):
        assert sorted(tbl[a]) == list(range(n))
        assert sorted(tbl[b][a] for b in range(n)) == list(range(n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert tbl[tbl[a][b]][c] == tbl[a][tbl[b][c]]


def inverses(tbl):
    n = len(tbl)
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if tbl[a][b] == 0:
                inv[a] = b
                break
    return inv


def elt_order(tbl, a):
    k, x = 1, a
    while x != 0:
        x = tbl[x][a]
        k += 1
    return k


def order_hist(tbl):
    h = defaultdict(int)
    for a in range(len(tbl)):
        h[elt_order(tbl, a)] += 1
    return tuple(sorted(h.items()))


def power(tbl, a, k):
    x = 0
    for _ in range(k):
        x = tbl[x][a]
    return x


def conj_classes(tbl):
    n = len(tbl)
    inv = inverses(tbl)
    seen = [False] * n
    classes = []
    for a in range(n):
        if seen[a]:
            continue
        cl = set()
        for g in range(n):
            cl.add(tbl[tbl[g][a]][inv[g]])
        for x in cl:
            seen[x] = True
        classes.append(frozenset(cl))
    return classes


def center_size(tbl):
    n = len(tbl)
    return sum(1 for a in range(n)
               if all(tbl[a][b] == tbl[b][a] for b in range(n)))


def subgroup_closure(tbl, gens):
    cur = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tbl[x][g]
                if y not in cur:
                    cur.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(cur)


def derived_subgroup(tbl):
    n = len(tbl)
    inv = inverses(tbl)
    comms = set()
    for a in range(n):
        for b in range(n):
            comms.add(tbl[tbl[tbl[a][b]][inv[a]]][inv[b]])
    return subgroup_closure(tbl, list(comms))


def is_abelian(tbl):
    n = len(tbl)
    return all(tbl[a][b] == tbl[b][a] for a in range(n) for b in range(a))


def abelian_invariants(tbl):
    """Invariant factors of the abelianization, from the order histogram of
    the quotient by the derived subgroup (histogram determines a finite
    abelian group)."""
    d = derived_subgroup(tbl)
    q = quotient(tbl, d)
    n = len(q)
    if n == 1:
        return ()
    # per-prime partitions via counts of p^k-torsion elements
    def factor(m):
        fs = {}
        p = 2
        while p * p <= m:
            while m % p == 0:
                fs[p] = fs.get(p, 0) + 1
                m //= p
            p += 1
        if m > 1:
            fs[m] = fs.get(m, 0) + 1
        return fs
    parts = {}
    for p in factor(n):
        counts = []
        k = 0
        while True:
            c = sum(1 for a in range(len(q)) if power(q, a, p ** k) == 0)
            counts.append(c)
            if c == p_part_size(q, p):
                break
            k += 1
        # m_k = #{i : lambda_i >= k} = log_p(counts[k]/counts[k-1])
        lam = []
        for k in range(1, len(counts)):
            mk = 0
            r = counts[k] // counts[k - 1]
            while r > 1:
                r //= p
                mk += 1
            lam.append(mk)
        partition = []
        for k, mk in enumerate(lam, start=1):
            nxt = lam[k] if k < len(lam) else 0
            partition.extend([k] * (mk - nxt))
        parts[p] = sorted(partition, reverse=True)
    width = max(len(v) for v in parts.values())
    invf = []
    for i in range(width):
        f = 1
        for p, lam in parts.items():
            if i < len(lam):
                f *= p ** lam[i]
        invf.append(f)
    return tuple(sorted(invf))  # ascending invariant-factor-compatible list


def p_part_size(tbl, p):
    c = 0
    for a in range(len(tbl)):
        o = elt_order(tbl, a)
        while o % p == 0:
            o //= p
        if o == 1:
            c += 1
    return c


def quotient(tbl, nsub):
    """Quotient by a normal subgroup given as a frozenset of elements."""
    n = len(tbl)
    rep = {}
    cosets = []
    for a in range(n):
        cs = frozenset(tbl[a][h] for h in nsub)
        if cs not in rep:
            rep[cs] = len(cosets)
            cosets.append(cs)
    idx = {}
    for i, cs in enumerate(cosets):
        for x in cs:
            idx[x] = i
    m = len(cosets)
    qt = [[0] * m for _ in range(m)]
    for i, cs in enumerate(cosets):
        a = min(cs)
        for j, ct in enumerate(cosets):
            b = min(ct)
            qt[i][j] = idx[tbl[a][b]]
    return normalize(qt)


def fingerprint(tbl):
    return (len(tbl), order_hist(tbl), abelian_invariants(tbl),
            center_size(tbl), len(derived_subgroup(tbl)),
            tuple(sorted(len(c) for c in conj_classes(tbl))))


# ------------------------------------------------------- homomorphism kit ---

def greedy_gens(tbl):
    """Generating set built by repeatedly adjoining the element that grows
    the subgroup the most (ties: smallest index).  Keeps the set small,
    which keeps automorphism backtracking shallow."""
    n = len(tbl)
    gens = []
    have = frozenset([0])
    while len(have) < n:
        best = None
        for g in range(n):
            if g in have:
                continue
            cl = subgroup_closure(tbl, gens + [g])
            if best is None or len(cl) > len(best[1]):
                best = (g, cl)
        gens.append(best[0])
        have = best[1]
    return gens


def bfs_program(tbl, gens):
    """Element list of <gens> in BFS order with, per element, a definition
    (prev_index_in_list, gen_index) and the list of all verification edges."""
    elts = [0]
    pos = {0: 0}
    defs = [None]
    i = 0
    while i < len(elts):
        x = elts[i]
        for gi, g in enumerate(gens):
            y = tbl[x][g]
            if y not in pos:
                pos[y] = len(elts)
                elts.append(y)
                defs.append((i, gi))
        i += 1
    edges = [(i, gi, pos[tbl[x][g]])
             for i, x in enumerate(elts)
             for gi, g in enumerate(gens)]
    return elts, defs, edges


def hom_images(src, gens, dst, img_gens):
    """Extend gen->img to <gens>; returns element-wise image list (indexed as
    bfs order of src subgroup) or None if not a homomorphism."""
    elts, defs, edges = bfs_program(src, gens)
    img = [0] * len(elts)
    for i in range(1, len(elts)):
        p, gi = defs[i]
        img[i] = dst[img[p]][img_gens[gi]]
    for i, gi, j in edges:
        if dst[img[i]][img_gens[gi]] != img[j]:
            return None
    return elts, img


def automorphisms(tbl):
    """All automorphisms as element-permutation tuples."""
    n = len(tbl)
    gens = greedy_gens(tbl)
    if not gens:
        return [tuple([0])]
    orders = [elt_order(tbl, a) for a in range(n)]
    cls = conj_classes(tbl)
    clsize = {}
    for c in cls:
        for x in c:
            clsize[x] = len(c)
    profile = [(orders[a], clsize[a]) for a in range(n)]
    cand = [[h for h in range(n) if profile[h] == profile[g]] for g in gens]
    elts, defs, edges = bfs_program(tbl, gens)
    # edges grouped by the highest generator index they use, for pruning
    out = []

    def extend(k, img_gens):
        if k == len(gens):
            res = hom_images(tbl, gens, tbl, img_gens)
            if res is None:
                return
            elts2, img = res
            if len(set(img)) == n:
                perm = [0] * n
                for e, im in zip(elts2, img):
                    perm[e] = im
                out.append(tuple(perm))
            return
        sub = gens[:k + 1]
        for h in cand[k]:
            partial = img_gens + [h]
            if hom_images(tbl, sub, tbl, partial) is not None:
                extend(k + 1, partial)

    extend(0, [])
    return out


def isomorphic(t1, t2, fp1=None, fp2=None):
    if len(t1) != len(t2):
        return False
    if (fp1 or fingerprint(t1)) != (fp2 or fingerprint(t2)):
        return False
    n = len(t1)
    gens = greedy_gens(t1)
    if not gens:
        return True
    orders1 = [elt_order(t1, a) for a in range(n)]
    orders2 = [elt_order(t2, a) for a in range(n)]
    cl2 = conj_classes(t2)
    clsize2 = {}
    for c in cl2:
        for x in c:
            clsize2[x] = len(c)
    cl1 = conj_classes(t1)
    clsize1 = {}
    for c in cl1:
        for x in c:
            clsize1[x] = len(c)
    cand = [[h for h in range(n)
             if orders2[h] == orders1[g] and clsize2[h] == clsize1[g]]
            for g in gens]

    def extend(k, img_gens):
        if k == len(gens):
            res = hom_images(t1, gens, t2, img_gens)
            return res is not None and len(set(res[1])) == n
        sub = gens[:k + 1]
        for h in cand[k]:
            partial = img_gens + [h]
            if hom_images(t1, sub, t2, partial) is not None:
                if extend(k + 1, partial):
                    return True
        return False

    return extend(0, [])


# ------------------------------------------------------------ construction ---

def cyclic(n):
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def direct(t1, t2):
    n1, n2 = len(t1), len(t2)

    def idx(a, b):
        return a * n2 + b
    return tuple(tuple(idx(t1[a1][b1], t2[a2][b2])
                       for (b1, b2) in itertools.product(range(n1), range(n2)))
                 for (a1, a2) in itertools.product(range(n1), range(n2)))


def metacyclic(m, k, r, s):
    """<a,b | a^m = 1, b^k = a^s, b a b^-1 = a^r>, order m*k.
    Elements (i,j) = a^i b^j, i mod m, j mod k."""
    n = m * k

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        i = (i1 + pow(r, j1, m) * i2) % m
        j = j1 + j2
        if j >= k:
            j -= k
            i = (i + s) % m
        return (i, j)
    elts = [(i, j) for j in range(k) for i in range(m)]
    pos = {e: x for x, e in enumerate(elts)}
    tbl = tuple(tuple(pos[mul(a, b)] for b in elts) for a in elts)
    return normalize(tbl)


def from_perm_gens(degree, gens):
    ident = tuple(range(degree))
    elts = [ident]
    pos = {ident: 0}
    i = 0
    while i < len(elts):
        x = elts[i]
        for g in gens:
            y = tuple(x[g[p]] for p in range(degree))  # x*g: apply g then x
            if y not in pos:
                pos[y] = len(elts)
                elts.append(y)
        i += 1
    n = len(elts)
    tbl = tuple(tuple(pos[tuple(a[b[p]] for p in range(degree))]
                      for b in elts) for a in elts)
    return normalize(tbl)


def ext2(tbl, alpha, z):
    """Degree-2 extension of N by (alpha, z): elements (a, eps) -> a + eps*n,
    (a,0)(b,d) = (ab,d); (a,1)(b,0) = (a*alpha(b),1); (a,1)(b,1) = (a*alpha(b)*z,0)."""
    n = len(tbl)
    out = [[0] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            out[a][b] = tbl[a][b]
            out[a][b + n] = tbl[a][b] + n
            ab = tbl[a][alpha[b]]
            out[a + n][b] = ab + n
            out[a + n][b + n] = tbl[ab][z]
    return normalize(tuple(tuple(r) for r in out))


def heisenberg27():
    elts = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    pos = {e: i for i, e in enumerate(elts)}

    def mul(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3,
                (x[2] + y[2] + x[0] * y[1]) % 3)
    return normalize(tuple(tuple(pos[mul(a, b)] for b in elts) for a in elts))


def cycles_to_perm(degree, cycles):
    p = list(range(degree))
    for cyc in cycles:
        for i in range(len(cyc)):
            p[cyc[i] - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(p)


def sl23():
    # 2x2 matrices over F3 with det 1 acting on the 8 nonzero vectors
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        return tuple(pos[((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                          (m[1][0] * v[0] + m[1][1] * v[1]) % 3)]
                     for v in vecs)
    g1 = mat_perm(((1, 1), (0, 1)))
    g2 = mat_perm(((0, 2), (1, 0)))
    return from_perm_gens(8, [g1, g2])


def a4():
    return from_perm_gens(4, [cycles_to_perm(4, [(1, 2, 3)]),
                              cycles_to_perm(4, [(1, 2), (3, 4)])])


# ------------------------------------------------------------- enumeration ---

REF_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
              11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1,
              20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4,
              29: 1, 30: 4, 31: 1, 32: 51, 49: 2}


def odd_order_groups(n):
    if n == 1:
        return [cyclic(1)]
    if n in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        return [cyclic(n)]
    if n in (9, 25, 49):
        p = {9: 3, 25: 5, 49: 7}[n]
        return [cyclic(n), direct(cyclic(p), cyclic(p))]
    if n == 15:
        return [cyclic(15)]
    if n == 21:
        return [cyclic(21), metacyclic(7, 3, 2, 0)]
    if n == 27:
        return [cyclic(27), direct(cyclic(9), cyclic(3)),
                direct(direct(cyclic(3), cyclic(3)), cyclic(3)),
                heisenberg27(), metacyclic(9, 3, 4, 0)]
    raise ValueError(n)


def groups_of_order(n, store):
    """store: dict order -> list of (table, fingerprint)."""
    if n % 2 == 1:
        found = [(t, fingerprint(t)) for t in odd_order_groups(n)]
        store[n] = found
        return
    m = n // 2
    found = []

    def add(tbl):
        fp = fingerprint(tbl)
        for t2, fp2 in found:
            if fp == fp2 and isomorphic(tbl, t2, fp, fp2):
                return
        found.append((tbl, fp))

    for ntbl, _ in store[m]:
        auts = automorphisms(ntbl)
        nn = len(ntbl)
        inv = inverses(ntbl)
        for alpha in auts:
            # alpha^2 must equal conjugation by some fixed point z
            alpha2 = tuple(alpha[alpha[x]] for x in range(nn))
            for z in range(nn):
                if alpha[z] != z:
                    continue
                if all(alpha2[x] == ntbl[ntbl[z][x]][inv[z]]
                       for x in range(nn)):
                    add(ext2(ntbl, alpha, z))
    if n == 12:
        add(a4())
    if n == 24:
        add(sl23())
    store[n] = found


# ------------------------------------------------- permutation representation

def all_subgroups(tbl):
    n = len(tbl)
    subs = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for H in frontier:
            for g in range(1, n):
                if g in H:
                    continue
                H2 = subgroup_closure(tbl, list(H) + [g])
                if H2 not in subs:
                    subs.add(H2)
                    nxt.append(H2)
        frontier = nxt
    return sorted(subs, key=lambda s: (-len(s), sorted(s)))


def core_of(tbl, H):
    n = len(tbl)
    inv = inverses(tbl)
    core = set(H)
    for g in range(n):
        core &= {tbl[tbl[g][h]][inv[g]] for h in H}
    return frozenset(core)


def coset_action(tbl, H, elements):
    """Permutations of the left cosets xH induced by left multiplication
    (a homomorphism under the apply-right-factor-first composition), for
    each element in `elements`."""
    n = len(tbl)
    cosets = []
    cidx = {}
    for g in range(n):
        cs = frozenset(tbl[g][h] for h in H)
        if cs not in cidx:
            cidx[cs] = len(cosets)
            cosets.append(cs)
    perms = []
    for e in elements:
        p = [0] * len(cosets)
        for i, cs in enumerate(cosets):
            rep = min(cs)
            p[i] = cidx[frozenset(tbl[tbl[e][rep]][h] for h in H)]
        perms.append(tuple(p))
    return perms


def faithful_perm_rep(tbl, gens):
    """Small faithful permutation images of `gens`: minimum-total-degree set
    of coset actions with trivial joint kernel, found by shortest path over
    intersections of subgroup cores (cost of using H = its index)."""
    import heapq
    n = len(tbl)
    if not gens:
        return 1, []
    cheapest = {}  # core -> (index, H) with the smallest index achieving it
    for H in all_subgroups(tbl):
        c = core_of(tbl, H)
        idx = n // len(H)
        if c not in cheapest or idx < cheapest[c][0]:
            cheapest[c] = (idx, H)
    edges = sorted(cheapest.items(), key=lambda kv: (kv[1][0], sorted(kv[0])))
    start = frozenset(range(n))
    best = {start: 0}
    back = {start: None}
    pq = [(0, 0, start)]
    tick = 0
    target = frozenset([0])
    while pq:
        cost, _, cur = heapq.heappop(pq)
        if cost > best.get(cur, 1 << 30):
            continue
        if cur == target:
            break
        for c, (idx, H) in edges:
            nxt = cur & c
            if len(nxt) == len(cur):
                continue
            nc = cost + idx
            if nc < best.get(nxt, 1 << 30):
                best[nxt] = nc
                back[nxt] = (cur, H)
                tick += 1
                heapq.heappush(pq, (nc, tick, nxt))
    chosen = []
    node = target
    while back[node] is not None:
        prev, H = back[node]
        chosen.append(H)
        node = prev
    chosen.reverse()
    parts = [coset_action(tbl, H, gens) for H in chosen]
    degree = sum(len(p[0]) for p in parts)
    perms = []
    for gi in range(len(gens)):
        out = []
        off = 0
        for p in parts:
            out.extend(x + off for x in p[gi])
            off += len(p[0])
        perms.append(tuple(out))
    return degree, perms


def perm_to_cycles(p):
    seen = [False] * len(p)
    cycs = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        cycs.append(cyc)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycs)


# ------------------------------------------------------------------ naming ---

def dihedral(n):  # order 2n
    return metacyclic(n, 2, n - 1, 0)


def dicyclic(n):  # order 4n: <a,b | a^2n, b^2 = a^n, b a b^-1 = a^-1>
    return metacyclic(2 * n, 2, 2 * n - 1, n)


def abelian_name(invf):
    if not invf:
        return "Z1"
    return "x".join("Z%d" % d for d in invf)


def name_group(tbl, fp):
    n = len(tbl)
    if is_abelian(tbl):
        return abelian_name(abelian_invariants(tbl))
    named = {
        6: [("S3", lambda: dihedral(3))],
        8: [("D4", lambda: dihedral(4)), ("Q8", lambda: dicyclic(2))],
        10: [("D5", lambda: dihedral(5))],
        12: [("D6", lambda: dihedral(6)), ("Q12", lambda: dicyclic(3)),
             ("A4", a4)],
        14: [("D7", lambda: dihedral(7))],
        16: [("D8", lambda: dihedral(8)), ("Q16", lambda: dicyclic(4)),
             ("SD16", lambda: metacyclic(8, 2, 3, 0)),
             ("M16", lambda: metacyclic(8, 2, 5, 0))],
        18: [("D9", lambda: dihedral(9))],
        20: [("D10", lambda: dihedral(10)), ("Q20", lambda: dicyclic(5))],
        22: [("D11", lambda: dihedral(11))],
        24: [("D12", lambda: dihedral(12)), ("Q24", lambda: dicyclic(6)),
             ("SL23", sl23),
             ("S4", lambda: from_perm_gens(
                 4, [cycles_to_perm(4, [(1, 2, 3, 4)]),
                     cycles_to_perm(4, [(1, 2)])]))],
        26: [("D13", lambda: dihedral(13))],
        28: [("D14", lambda: dihedral(14)), ("Q28", lambda: dicyclic(7))],
        30: [("D15", lambda: dihedral(15))],
        32: [("D16", lambda: dihedral(16)), ("Q32", lambda: dicyclic(8)),
             ("SD32", lambda: metacyclic(16, 2, 7, 0)),
             ("M32", lambda: metacyclic(16, 2, 9, 0))],
        21: [("F21", lambda: metacyclic(7, 3, 2, 0))],
        27: [("He3", heisenberg27), ("M27", lambda: metacyclic(9, 3, 4, 0))],
    }
    for nm, mk in named.get(n, []):
        t = mk()
        if fingerprint(t) == fp and isomorphic(tbl, t, fp, fp):
            return nm
    return None


# ------------------------------------------------ standard id assignment ---

def assign_ids(n, entries):
    """entries: list of (tbl, fp).  Returns {position: gap_index} for the
    groups whose placement in the standard small-group numbering is certain;
    empty dict otherwise."""
    def find(pred, what):
        hits = [i for i, (t, fp) in enumerate(entries) if pred(t, fp)]
        assert len(hits) == 1, "matcher %r hit %r at order %d" % (what, hits, n)
        return hits[0]

    def match_table(mk):
        probe = mk()
        pfp = fingerprint(probe)
        return lambda t, fp: fp == pfp and isomorphic(t, probe, fp, pfp)

    def ab(invf):
        return lambda t, fp: is_abelian(t) and abelian_invariants(t) == tuple(invf)

    def nonab(**kw):
        def pred(t, fp):
            if is_abelian(t):
                return False
            oh = dict(order_hist(t))
            if "invol" in kw and oh.get(2, 0) != kw["invol"]:
                return False
            if "maxord" in kw and max(o for o, _ in order_hist(t)) != kw["maxord"]:
                return False
            if "center" in kw and center_size(t) != kw["center"]:
                return False
            if "abinv" in kw and abelian_invariants(t) != tuple(kw["abinv"]):
                return False
            if "derived" in kw and len(derived_subgroup(t)) != kw["derived"]:
                return False
            return True
        return pred

    ids = {}
    nput = [0]

    def put(gap, pred, what=""):
        nput[0] += 1
        pos = find(pred, what or str(gap))
        assert pos not in ids, "position clash at order %d id %d" % (n, gap)
        ids[pos] = gap

    if n == 1:
        put(1, ab([]))
    elif n in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        put(1, ab([n]))
    elif n == 4:
        put(1, ab([4])); put(2, ab([2, 2]))
    elif n == 6:
        put(1, nonab()); put(2, ab([6]))
    elif n == 8:
        put(1, ab([8])); put(2, ab([2, 4])); put(3, match_table(lambda: dihedral(4)))
        put(4, match_table(lambda: dicyclic(2))); put(5, ab([2, 2, 2]))
    elif n == 9:
        put(1, ab([9])); put(2, ab([3, 3]))
    elif n == 10:
        put(1, nonab()); put(2, ab([10]))
    elif n == 12:
        put(1, match_table(lambda: dicyclic(3))); put(2, ab([12]))
        put(3, match_table(a4)); put(4, match_table(lambda: dihedral(6)))
        put(5, ab([2, 6]))
    elif n == 14:
        put(1, nonab()); put(2, ab([14]))
    elif n == 15:
        put(1, ab([15]))
    elif n == 16:
        put(1, ab([16])); put(2, ab([4, 4]))
        put(3, nonab(invol=7, abinv=(2, 4)), "(C4xC2):C2")
        put(4, nonab(invol=3, maxord=4, abinv=(2, 4)), "C4:C4")
        put(5, ab([2, 8]))
        put(6, nonab(invol=3, maxord=8), "M16")
        put(7, match_table(lambda: dihedral(8)))
        put(8, match_table(lambda: metacyclic(8, 2, 3, 0)))
        put(9, match_table(lambda: dicyclic(4)))
        put(10, ab([2, 2, 4]))
        put(11, nonab(invol=11), "C2xD4")
        put(12, nonab(invol=3, maxord=4, abinv=(2, 2, 2)), "C2xQ8")
        put(13, nonab(invol=7, abinv=(2, 2, 2)), "Pauli")
        put(14, ab([2, 2, 2, 2]))
    elif n == 18:
        put(1, match_table(lambda: dihedral(9))); put(2, ab([18]))
        put(3, nonab(invol=3), "C3xS3")
        put(4, nonab(invol=9, maxord=3), "(C3xC3):C2")
        put(5, ab([3, 6]))
    elif n == 20:
        put(1, match_table(lambda: dicyclic(5))); put(2, ab([20]))
        put(3, nonab(invol=5), "F20"); put(4, match_table(lambda: dihedral(10)))
        put(5, ab([2, 10]))
    elif n == 21:
        put(1, nonab()); put(2, ab([21]))
    elif n == 22:
        put(1, nonab()); put(2, ab([22]))
    elif n == 24:
        put(1, nonab(invol=1, center=4), "C3:C8")
        put(2, ab([24]))
        put(3, match_table(sl23))
        put(4, match_table(lambda: dicyclic(6)))
        put(5, nonab(invol=7, center=4), "C4xS3")
        put(6, match_table(lambda: dihedral(12)))
        put(7, nonab(invol=3, center=4), "C2xQ12")
        put(8, nonab(invol=9, maxord=6), "C3:D4")
        put(9, ab([2, 12]))
        put(10, nonab(invol=5, maxord=12), "C3xD4")
        put(11, nonab(invol=1, maxord=12, center=6), "C3xQ8")
        put(12, nonab(invol=9, center=1), "S4")
        put(13, nonab(invol=7, center=2), "C2xA4")
        put(14, nonab(invol=15), "C2xC2xS3")
        put(15, ab([2, 2, 6]))
    elif n == 25:
        put(1, ab([25])); put(2, ab([5, 5]))
    elif n == 26:
        put(1, nonab()); put(2, ab([26]))
    elif n == 27:
        put(1, ab([27])); put(2, ab([3, 9]))
        put(3, match_table(heisenberg27))
        put(4, match_table(lambda: metacyclic(9, 3, 4, 0)))
        put(5, ab([3, 3, 3]))
    elif n == 28:
        put(1, match_table(lambda: dicyclic(7))); put(2, ab([28]))
        put(3, match_table(lambda: dihedral(14))); put(4, ab([2, 14]))
    elif n == 30:
        put(1, nonab(center=5), "C5xS3"); put(2, nonab(center=3), "C3xD5")
        put(3, match_table(lambda: dihedral(15))); put(4, ab([30]))
    elif n == 32:
        # only placements that are certain: the abelians and a few direct
        # products with well-known positions
        put(1, ab([32])); put(3, ab([4, 8])); put(16, ab([2, 16]))
        put(21, ab([2, 4, 4])); put(36, ab([2, 2, 8])); put(45, ab([2, 2, 2, 4]))
        put(51, ab([2, 2, 2, 2, 2]))
        put(25, match_table(lambda: direct(cyclic(4), dihedral(4))))
        put(26, match_table(lambda: direct(cyclic(4), dicyclic(2))))
        put(39, match_table(lambda: direct(cyclic(2), dihedral(8))))
        put(40, match_table(lambda: direct(cyclic(2), metacyclic(8, 2, 3, 0))))
        put(41, match_table(lambda: direct(cyclic(2), dicyclic(4))))
        put(46, match_table(lambda: direct(direct(cyclic(2), cyclic(2)),
                                           dihedral(4))))
        put(47, match_table(lambda: direct(direct(cyclic(2), cyclic(2)),
                                           dicyclic(2))))
    elif n == 49:
        put(1, ab([49])); put(2, ab([7, 7]))
    assert len(set(ids.values())) == len(ids), "duplicate id at order %d" % n
    if n != 32:
        assert sorted(ids.values()) == list(range(1, len(entries) + 1)), \
            "incomplete id assignment at order %d" % n
    return ids


# --------------------------------------------------------------------- main --

def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/catalogue.txt"
    store = {}
    orders = list(range(1, 33)) + [49]
    for n in orders:
        groups_of_order(n, store)
        got = len(store[n])
        want = REF_COUNTS[n]
        print("order %2d: %3d classes (expected %d)" % (n, got, want))
        assert got == want, "count mismatch at order %d" % n

    lines = ["# group catalogue: order index name degree generators [standard_id]",
             "# generators: permutations in disjoint-cycle notation separated"
             " by ';', '-' if none (trivial group)"]
    for n in orders:
        entries = store[n]
        ids = assign_ids(n, entries)
        # sort: entries with a standard id first by id, the rest by fingerprint
        def sort_key(i):
            if i in ids:
                return (0, ids[i])
            t, fp = entries[i]
            return (1, 0 if is_abelian(t) else 1, fp)
        order_pos = sorted(range(len(entries)), key=sort_key)
        complete = len(ids) == len(entries)
        for rank, i in enumerate(order_pos, start=1):
            tbl, fp = entries[i]
            index = ids[i] if complete else rank
            gens = greedy_gens(tbl)
            degree, perms = faithful_perm_rep(tbl, gens)
            # round-trip check: rebuilt permutation group is the same group
            rebuilt = from_perm_gens(degree, perms) if gens else cyclic(1)
            assert len(rebuilt) == n, (n, index, degree)
            assert isomorphic(rebuilt, tbl), (n, index, "round trip")
            name = name_group(tbl, fp)
            if name is None:
                name = "g%d_%d" % (n, index)
            gstr = ";".join(perm_to_cycles(p) for p in perms) if perms else "-"
            sid = "%d,%d" % (n, ids[i]) if i in ids else "-"
            lines.append("%d %d %s %d %s %s" % (n, index, name, degree, gstr, sid))
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote %s (%d entries)" % (out_path, sum(REF_COUNTS[n] for n in orders)))


if __name__ == "__main__":
    main()
