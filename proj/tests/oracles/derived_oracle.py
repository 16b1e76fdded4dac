#!/usr/bin/env python3
"""Brute-force oracle for the derived example values.

Everything here is enumerated from scratch with plain Python containers and
shares no code or data layout with the C++ library. Run with --write to
refresh the fixture, or --check to compare against it.
"""

import argparse
import itertools
import json
import sys
from functools import lru_cache


# ---------------------------------------------------------------- categories

class Cat:
    """Objects, morphisms (name, src, tgt) and a composition dict (g, f) -> g.f."""

    def __init__(self, objects, morphisms, comp, ident):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.comp = dict(comp)
        self.ident = dict(ident)
        self.src = {m: s for m, s, _ in morphisms}
        self.tgt = {m: t for m, _, t in morphisms}

    def names(self):
        return [m for m, _, _ in self.morphisms]

    def hom(self, x, y):
        return [m for m, s, t in self.morphisms if s == x and t == y]

    def compose(self, g, f):
        return self.comp[(g, f)]

    def is_iso(self, f):
        return any(
            self.comp.get((g, f)) == self.ident[self.src[f]] and self.comp.get((f, g)) == self.ident[self.tgt[f]]
            for g in self.hom(self.tgt[f], self.src[f]))


def interval(n):
    objs = list(range(n + 1))
    mors = [((i, j), i, j) for i in objs for j in objs if i <= j]
    comp = {((j, k), (i, j)): (i, k) for i in objs for j in objs for k in objs if i <= j <= k}
    return Cat(objs, mors, comp, {i: (i, i) for i in objs})


def chaotic(m):
    objs = list(range(m + 1))
    mors = [((i, j), i, j) for i in objs for j in objs]
    comp = {((j, k), (i, j)): (i, k) for i in objs for j in objs for k in objs}
    return Cat(objs, mors, comp, {i: (i, i) for i in objs})


def idempotent():
    return Cat(["x"], [("id", "x", "x"), ("e", "x", "x")],
               {("id", "id"): "id", ("id", "e"): "e", ("e", "id"): "e", ("e", "e"): "e"}, {"x": "id"})


def product(c, d):
    objs = [(x, y) for x in c.objects for y in d.objects]
    mors = [((f, g), (c.src[f], d.src[g]), (c.tgt[f], d.tgt[g])) for f in c.names() for g in d.names()]
    comp = {}
    for (f2, g2), _, _ in mors:
        for (f1, g1), _, _ in mors:
            if (f2, f1) in c.comp and (g2, g1) in d.comp:
                comp[((f2, g2), (f1, g1))] = (c.comp[(f2, f1)], d.comp[(g2, g1)])
    return Cat(objs, mors, comp, {(x, y): (c.ident[x], d.ident[y]) for x, y in objs})


def free_groupoid_path(n):
    """Free groupoid on 0 -> 1 -> ... -> n by enumerating words and cancelling inverses."""
    letters = [(i, +1) for i in range(n)] + [(i, -1) for i in range(n)]

    def ends(letter):
        i, sign = letter
        return (i, i + 1) if sign > 0 else (i + 1, i)

    def reduce(word):
        out = []
        for a in word:
            if out and out[-1][0] == a[0] and out[-1][1] == -a[1]:
                out.pop()
            else:
                out.append(a)
        return tuple(out)

    classes = set()
    for x in range(n + 1):
        classes.add((x, x, ()))
    for length in range(1, 2 * n + 3):
        for word in itertools.product(letters, repeat=length):
            ok = all(ends(word[i])[1] == ends(word[i + 1])[0] for i in range(length - 1))
            if not ok:
                continue
            r = reduce(word)
            s, t = ends(word[0])[0], ends(word[-1])[1]
            classes.add((s, t, r))
    return len({x for x, _, _ in classes}), len(classes)


def functors(c, d):
    """All functors as (object map, morphism map) by exhaustive assignment."""
    out = []
    for objmap in itertools.product(d.objects, repeat=len(c.objects)):
        om = dict(zip(c.objects, objmap))
        choices = [d.hom(om[c.src[f]], om[c.tgt[f]]) for f in c.names()]
        for mormap in itertools.product(*choices):
            mm = dict(zip(c.names(), mormap))
            if any(mm[c.ident[x]] != d.ident[om[x]] for x in c.objects):
                continue
            if all(mm[h] == d.comp[(mm[g], mm[f])] for (g, f), h in c.comp.items()):
                out.append((om, mm))
    return out


def nat_trans(c, d, f, g):
    out = []
    choices = [d.hom(f[0][x], g[0][x]) for x in c.objects]
    for comps in itertools.product(*choices):
        a = dict(zip(c.objects, comps))
        if all(d.comp[(g[1][h], a[c.src[h]])] == d.comp[(a[c.tgt[h]], f[1][h])] for h in c.names()):
            out.append(a)
    return out


def functor_category_counts(c, d):
    fs = functors(c, d)
    mors = sum(len(nat_trans(c, d, f, g)) for f in fs for g in fs)
    return len(fs), mors


def functor_category(c, d):
    fs = functors(c, d)
    key = lambda f: (tuple(sorted(f[0].items(), key=repr)), tuple(sorted(f[1].items(), key=repr)))
    objs = [key(f) for f in fs]
    mors, comp, ident = [], {}, {}
    cells = []
    for i, f in enumerate(fs):
        for j, g in enumerate(fs):
            for a in nat_trans(c, d, f, g):
                name = (objs[i], objs[j], tuple(sorted(a.items(), key=repr)))
                cells.append((name, i, j, a))
                mors.append((name, objs[i], objs[j]))
    for n1, i1, j1, a1 in cells:
        for n2, i2, j2, a2 in cells:
            if j1 == i2:
                a = {x: d.comp[(a2[x], a1[x])] for x in c.objects}
                comp[(n2, n1)] = (objs[i1], objs[j2], tuple(sorted(a.items(), key=repr)))
    for i, f in enumerate(fs):
        ident[objs[i]] = (objs[i], objs[i], tuple(sorted({x: d.ident[f[0][x]] for x in c.objects}.items(), key=repr)))
    return Cat(objs, mors, comp, ident)


def iso_counts(c):
    isos = [f for f in c.names() if c.is_iso(f)]
    return len(c.objects), len(isos)


def iso_classes(c):
    classes = []
    for x in c.objects:
        for cl in classes:
            if any(c.is_iso(f) for f in c.hom(cl[0], x)):
                cl.append(x)
                break
        else:
            classes.append([x])
    return len(classes)


def is_equivalence(c, d, f):
    """F is an equivalence iff some G has natural isomorphisms GF = id and FG = id."""
    idc = ({x: x for x in c.objects}, {m: m for m in c.names()})
    idd = ({x: x for x in d.objects}, {m: m for m in d.names()})
    for g in functors(d, c):
        gf = ({x: g[0][f[0][x]] for x in c.objects}, {m: g[1][f[1][m]] for m in c.names()})
        fg = ({x: f[0][g[0][x]] for x in d.objects}, {m: f[1][g[1][m]] for m in d.names()})
        u = [a for a in nat_trans(c, c, gf, idc) if all(c.is_iso(a[x]) for x in c.objects)]
        v = [a for a in nat_trans(d, d, fg, idd) if all(d.is_iso(a[x]) for x in d.objects)]
        if u and v:
            return True
    return False


# -------------------------------------------------------- simplicial sets
#
# A simplicial set truncated at dim is a dict level -> list of simplices with
# face(s, i) and degen(s, j) functions.

class SSet:
    def __init__(self, dim, simplices, face, degen):
        self.dim = dim
        self.simplices = simplices
        self.face = face
        self.degen = degen

    def degenerate(self, k):
        if k == 0:
            return set()
        return {self.degen(s, j) for s in self.simplices[k - 1] for j in range(k)}

    def nondegenerate_counts(self):
        return [len(set(self.simplices[k]) - self.degenerate(k)) for k in range(self.dim + 1)]

    def counts(self):
        return [len(self.simplices[k]) for k in range(self.dim + 1)]


def vertex_sset(dim, accept, verts):
    """Simplices are vertex tuples accepted by `accept`."""
    simp = {k: [t for t in itertools.product(verts, repeat=k + 1) if accept(t)] for k in range(dim + 1)}
    return SSet(dim, simp, lambda s, i: s[:i] + s[i + 1:], lambda s, j: s[:j + 1] + s[j:])


def monotone(t):
    return all(t[i] <= t[i + 1] for i in range(len(t) - 1))


def simplex(n, dim):
    return vertex_sset(dim, monotone, range(n + 1))


def sub_simplex(n, dim, maximal):
    return vertex_sset(dim, lambda t: monotone(t) and any(set(t) <= set(m) for m in maximal), range(n + 1))


def horn(n, k, dim):
    return sub_simplex(n, dim, [[v for v in range(n + 1) if v != i] for i in range(n + 1) if i != k])


def spine(n, dim):
    return sub_simplex(n, dim, [[i, i + 1] for i in range(n)])


def jspace(m, dim):
    return vertex_sset(dim, lambda t: True, range(m + 1))


def point(dim):
    return simplex(0, dim)


def nerve(c, dim):
    """k-simplices: (x0, f1, ..., fk) with fi : x_{i-1} -> x_i, stored as (objects, morphisms)."""
    simp = {0: [((x,), ()) for x in c.objects]}
    for k in range(1, dim + 1):
        simp[k] = [(o + (c.tgt[f],), m + (f,)) for (o, m) in simp[k - 1] for f in c.names() if c.src[f] == o[-1]]

    def face(s, i):
        o, m = s
        k = len(m)
        if i == 0:
            return o[1:], m[1:]
        if i == k:
            return o[:-1], m[:-1]
        return o[:i] + o[i + 1:], m[:i - 1] + (c.comp[(m[i], m[i - 1])],) + m[i + 1:]

    def degen(s, j):
        o, m = s
        return o[:j + 1] + o[j:], m[:j] + (c.ident[o[j]],) + m[j:]

    return SSet(dim, simp, face, degen)


def sset_product(x, y):
    dim = min(x.dim, y.dim)
    simp = {k: [(a, b) for a in x.simplices[k] for b in y.simplices[k]] for k in range(dim + 1)}
    return SSet(dim, simp, lambda s, i: (x.face(s[0], i), y.face(s[1], i)),
                lambda s, j: (x.degen(s[0], j), y.degen(s[1], j)))


def count_maps(x, y, limit=None):
    """Maps x -> y: images of nondegenerate simplices chosen level by level, faces checked."""
    dim = x.dim
    order = []
    for k in range(dim + 1):
        deg = x.degenerate(k)
        order += [(k, s) for s in x.simplices[k] if s not in deg]
    by_faces = {}
    for k in range(1, dim + 1):
        for t in y.simplices[k]:
            by_faces.setdefault((k, tuple(y.face(t, i) for i in range(k + 1))), []).append(t)
    # Degenerate simplices of x are written as s_j of a lower one.
    lower = {}
    for k in range(1, dim + 1):
        for s in x.simplices[k - 1]:
            for j in range(k):
                lower.setdefault(x.degen(s, j), (s, j))

    def image(img, k, s):
        if s in img:
            return img[s]
        base, j = lower[s]
        return y.degen(image(img, k - 1, base), j)

    count = 0

    def rec(i, img):
        nonlocal count
        if i == len(order):
            count += 1
            return
        k, s = order[i]
        if k == 0:
            cands = y.simplices[0]
        else:
            cands = by_faces.get((k, tuple(image(img, k - 1, x.face(s, j)) for j in range(k + 1))), [])
        for t in cands:
            img[s] = t
            rec(i + 1, img)
            del img[s]

    rec(0, {})
    return count


def pi0(x):
    parent = {v: v for v in x.simplices[0]}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for e in x.simplices[1]:
        parent[find(x.face(e, 0))] = find(x.face(e, 1))
    return len({find(v) for v in x.simplices[0]})


def tau1_counts(x, max_len=4):
    """Objects and morphisms of tau1 from paths of nondegenerate edges modulo the 2-simplex relations."""
    degen_edges = {x.degen(v, 0) for v in x.simplices[0]}
    edges = [e for e in x.simplices[1] if e not in degen_edges]
    src = {e: x.face(e, 1) for e in edges}
    tgt = {e: x.face(e, 0) for e in edges}

    def as_path(e):
        return () if e in degen_edges else (e,)

    rules = []
    for t in x.simplices[2]:
        lhs = as_path(x.face(t, 1))
        rhs = as_path(x.face(t, 2)) + as_path(x.face(t, 0))
        if lhs != rhs:
            rules.append((lhs, rhs))
    paths = {}
    for v in x.simplices[0]:
        paths[(v, ())] = None
    frontier = [(v, ()) for v in x.simplices[0]]
    for _ in range(max_len):
        nxt = []
        for v, p in frontier:
            end = tgt[p[-1]] if p else v
            for e in edges:
                if src[e] == end:
                    q = (v, p + (e,))
                    if q not in paths:
                        paths[q] = None
                        nxt.append(q)
        frontier = nxt
    parent = {p: p for p in paths}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for (v, p) in paths:
        for i in range(len(p) + 1):
            here = tgt[p[i - 1]] if i > 0 else v
            for lhs, rhs in rules:
                for a, b in ((lhs, rhs), (rhs, lhs)):
                    if p[i:i + len(a)] != a:
                        continue
                    # An empty side is inserted only at the vertex where the other side starts.
                    if not a and src[b[0]] != here:
                        continue
                    q = (v, p[:i] + b + p[i + len(a):])
                    if q in parent:
                        parent[find((v, p))] = find(q)
    classes = {find(p) for p in paths}
    return len(x.simplices[0]), len(classes)


def stable_tau1_counts(x):
    a = tau1_counts(x, 4)
    b = tau1_counts(x, 5)
    if a != b:
        raise SystemExit("tau1 path closure did not stabilise")
    return list(a)


def horn_report(x, up_to, inner_only):
    """(every horn fills, fillers unique) by enumerating compatible face tuples."""
    ok, unique = True, True
    for n in range(2, up_to + 1) if inner_only else range(1, up_to + 1):
        ks = range(1, n) if inner_only else range(n + 1)
        fillers = {}
        for t in x.simplices[n]:
            fillers.setdefault(tuple(x.face(t, i) for i in range(n + 1)), []).append(t)
        for k in ks:
            idx = [i for i in range(n + 1) if i != k]
            for faces in itertools.product(x.simplices[n - 1], repeat=len(idx)):
                f = dict(zip(idx, faces))
                compatible = all(x.face(f[j], i) == x.face(f[i], j - 1) for i in idx for j in idx if i < j)
                if not compatible:
                    continue
                count = sum(1 for key, ts in fillers.items()
                            if all(key[i] == f[i] for i in idx) for _ in ts)
                if count == 0:
                    ok = False
                if count > 1:
                    unique = False
    return ok, unique


# ------------------------------------------------------------- the values

def corpus():
    return {
        "[0]": interval(0),
        "[1]": interval(1),
        "[2]": interval(2),
        "I1": chaotic(1),
        "I2": chaotic(2),
        "E": idempotent(),
        "[1]xI1": product(interval(1), chaotic(1)),
    }


def grid_count(c, n, m):
    return len(functors(product(interval(n), chaotic(m)), c))


def derive():
    v = {}
    c = corpus()
    v["interval_3_counts"] = [len(interval(3).objects), len(interval(3).morphisms)]
    v["free_groupoid_2_counts"] = list(free_groupoid_path(2))
    v["iso_idempotent_counts"] = list(iso_counts(idempotent()))
    v["fun_1_1_counts"] = list(functor_category_counts(interval(1), interval(1)))
    v["fun_1xI1_I1_objects"] = len(functors(product(interval(1), chaotic(1)), chaotic(1)))
    v["tau0_1xI1_classes"] = iso_classes(product(interval(1), chaotic(1)))
    v["functors_1_2"] = len(functors(interval(1), interval(2)))
    i1 = interval(1)
    const0 = ({x: 0 for x in i1.objects}, {m: (0, 0) for m in i1.names()})
    const1 = ({x: 1 for x in i1.objects}, {m: (1, 1) for m in i1.names()})
    v["nat_trans_const0_const1"] = len(nat_trans(i1, i1, const0, const1))
    v["j1_dim1_nondegenerate"] = jspace(1, 1).nondegenerate_counts()
    v["j1_dim2_nondegenerate"] = jspace(1, 2).nondegenerate_counts()
    v["nerve_I1_dim3_nondegenerate"] = nerve(chaotic(1), 3).nondegenerate_counts()
    v["product_d1_d1_nondegenerate"] = sset_product(simplex(1, 2), simplex(1, 2)).nondegenerate_counts()
    v["tau1_nerve_2_counts"] = stable_tau1_counts(nerve(interval(2), 2))
    v["tau1_j1_dim2_counts"] = stable_tau1_counts(jspace(1, 2))
    v["pi0_j1_dim1"] = pi0(jspace(1, 1))
    v["nerve_inner_horns_unique"] = {
        name: list(horn_report(nerve(cat, 3), 3, True)) for name, cat in c.items()}
    v["j1_dim3_kan"] = horn_report(jspace(1, 3), 3, False)[0]
    v["nerve_1_dim2_kan"] = horn_report(nerve(interval(1), 2), 2, False)[0]
    v["maps_d1_j1"] = count_maps(simplex(1, 1), jspace(1, 1))
    v["maps_spine2_nerve1"] = count_maps(spine(2, 2), nerve(interval(1), 2))
    v["exp_d1_nerve1_vertices"] = count_maps(simplex(1, 1), nerve(interval(1), 1))
    v["tau1_exp_d1_nerve1_counts"] = list(functor_category_counts(interval(1), interval(1)))
    v["j1_dim3_pi0"] = pi0(jspace(1, 3))
    v["j1_tau1_counts"] = stable_tau1_counts(jspace(1, 2))
    v["row0_classifying_1_counts"] = [grid_count(interval(1), n, 0) for n in range(3)]
    v["nerve_1_dim2_counts"] = nerve(interval(1), 2).counts()
    v["mv_spine2_classifying2_vertices"] = count_maps(spine(2, 2), nerve(interval(2), 2))
    v["classifying_I1_11_count"] = grid_count(chaotic(1), 1, 1)
    v["exp_adjunction_d1_d1_nerve1"] = count_maps(sset_product(simplex(1, 2), simplex(1, 2)), nerve(interval(1), 2))
    v["corpus_counts"] = {name: [len(cat.objects), len(cat.morphisms)] for name, cat in c.items()}
    v["equivalence_vertices"] = {
        "[1]": iso_counts(interval(1))[1],
        "I1": iso_counts(chaotic(1))[1],
    }
    v["completeness_box_nerveI1_point"] = {
        "pi0_column0": len(chaotic(1).objects),
        "pi0_eq": iso_counts(chaotic(1))[1],
    }
    v["equivalence_I1_to_0"] = is_equivalence(chaotic(1), interval(0), functors(chaotic(1), interval(0))[0])
    incl = [f for f in functors(interval(0), interval(1)) if f[0][0] == 0][0]
    v["equivalence_0_to_1"] = is_equivalence(interval(0), interval(1), incl)
    v["iso_I1_hom_0_1"] = len([f for f in chaotic(1).hom(0, 1) if chaotic(1).is_iso(f)])
    v["t_upper_nerve1_11_counts"] = [count_maps(sset_product(simplex(n, n + m), jspace(m, n + m)), nerve(interval(1), n + m))
                                     for n, m in ((0, 0), (1, 0), (0, 1), (1, 1))]
    v["tau1_t_lower_box11_counts"] = [len(product(interval(1), chaotic(1)).objects),
                                      len(product(interval(1), chaotic(1)).morphisms)]
    v["tau1_product_d1_j1_counts"] = stable_tau1_counts(sset_product(simplex(1, 2), jspace(1, 2)))
    v["transposition_counts"] = {
        "box(d1,pt)": count_maps(sset_product(simplex(1, 2), jspace(0, 2)), nerve(interval(1), 2)),
        "box(pt,d1)": count_maps(sset_product(simplex(0, 2), jspace(1, 2)), nerve(interval(1), 2)),
    }
    v["hom_qcat_d1_nerve1_counts"] = list(functor_category_counts(interval(1), interval(1)))
    v["hom_css_box_d1_I1_counts"] = list(functor_category_counts(interval(1), chaotic(1)))
    v["bridge_hom_counts"] = {
        "point,[1]": list(functor_category_counts(interval(0), interval(1))),
        "[1],[1]": list(functor_category_counts(interval(1), interval(1))),
        "I1,[1]": list(functor_category_counts(chaotic(1), interval(1))),
    }
    v["tau1_products"] = {
        f"{n},{m}": stable_tau1_counts(sset_product(simplex(n, 2), simplex(m, 2))) for n in range(3) for m in range(3)}
    return v


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("fixture")
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()
    values = derive()
    text = json.dumps(values, indent=2, sort_keys=True) + "\n"
    if args.write:
        with open(args.fixture, "w") as f:
            f.write(text)
        return 0
    with open(args.fixture) as f:
        frozen = json.load(f)
    fresh = json.loads(text)
    bad = [k for k in sorted(set(frozen) | set(fresh)) if frozen.get(k) != fresh.get(k)]
    for k in bad:
        print(f"mismatch {k}: fixture {frozen.get(k)!r} oracle {fresh.get(k)!r}")
    print("oracle and fixture agree" if not bad else f"{len(bad)} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
