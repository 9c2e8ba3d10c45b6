"""Labelled trees, tree products of infinite cyclic groups, and Pietrowski data.

A tree edge {a, b} carries two labels: λ(a,b) at a and λ(b,a) at b, standing
for the relation a^λ(a,b) = b^λ(b,a).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd, lcm, prod

from .combinators import Construction, Factor, amalgam, hnn_stuffed
from .presentation import Presentation, PresentationError, ComplementTable, right_complement_table
from .reversing import DEFAULT_BUDGET


class TreeError(PresentationError):
    pass


@dataclass(frozen=True)
class LabelledTree:
    vertices: tuple[str, ...]
    # (a, b, label at a, label at b)
    edges: tuple[tuple[str, str, int, int], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise TreeError("duplicate vertex")
        known = set(self.vertices)
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b, la, lb in self.edges:
            if a not in known or b not in known:
                raise TreeError(f"edge {a}-{b} uses an undeclared vertex")
            if la < 2 or lb < 2:
                raise TreeError(f"edge {a}-{b} has a label below 2")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise TreeError(f"edge {a}-{b} closes a cycle")
            parent[ra] = rb
        if self.vertices and len({find(v) for v in self.vertices}) != 1:
            raise TreeError("tree is disconnected")

    def label(self, a: str, b: str) -> int:
        """λ(a, b): the exponent carried by a on the edge towards b."""
        for x, y, lx, ly in self.edges:
            if (x, y) == (a, b):
                return lx
            if (y, x) == (a, b):
                return ly
        raise KeyError((a, b))

    def neighbours(self, v: str) -> list[str]:
        out = []
        for x, y, _, _ in self.edges:
            if x == v:
                out.append(y)
            elif y == v:
                out.append(x)
        return sorted(out)

    def path(self, a: str, b: str) -> list[str]:
        prev = {a: None}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            for w in self.neighbours(v):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        out = [b]
        while out[-1] != a:
            out.append(prev[out[-1]])
        return out[::-1]

    def leaves(self) -> list[str]:
        return [v for v in self.vertices if len(self.neighbours(v)) <= 1]


def parse_tree(text: str) -> LabelledTree:
    vertices: list[str] = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise TreeError(f"syntax error: {line!r}", lineno)
        fields = rest.split()
        if key == "vertex":
            if len(fields) != 1:
                raise TreeError("'vertex:' takes one name", lineno)
            vertices.append(fields[0])
        elif key == "edge":
            if len(fields) != 4:
                raise TreeError("'edge:' takes A B pA pB", lineno)
            try:
                la, lb = int(fields[2]), int(fields[3])
            except ValueError:
                raise TreeError("edge labels must be integers", lineno) from None
            edges.append((fields[0], fields[1], la, lb))
        else:
            raise TreeError(f"syntax error: unknown key {key!r}", lineno)
    return LabelledTree(tuple(vertices), tuple(edges))


def load_tree(path: str) -> LabelledTree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def tree_product_presentation(tree: LabelledTree, budget: int = DEFAULT_BUDGET) -> Construction:
    """⟨V : a^λ(a,b) = b^λ(b,a)⟩ with a complement built by folding amalgams.

    The fold starts at the least vertex name and adds vertices in
    breadth-first order, each step amalgamating a fresh cyclic factor.
    """
    root = min(tree.vertices)
    order = [root]
    seen = {root}
    steps = []
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for w in tree.neighbours(v):
            if w not in seen:
                seen.add(w)
                order.append(w)
                steps.append((v, w))
    current = Construction(Presentation((root,), (), ""), ComplementTable(1, {}))
    for v, w in steps:
        left = Factor(current.presentation, current.table, None)
        right = Factor(Presentation((w,), (), ""), ComplementTable(1, {}), None)
        hv = (current.presentation.index(v),) * tree.label(v, w)
        hw = (0,) * tree.label(w, v)
        current = amalgam(left, hv, right, hw, budget=budget)
    gens = current.presentation.gens
    # put generators back in declaration order
    perm = [gens.index(v) for v in tree.vertices]
    inv = {old: new for new, old in enumerate(perm)}
    entries = {(inv[x], inv[y]): tuple(inv[c] for c in w) for (x, y), w in current.table.entries.items()}
    table = ComplementTable(len(gens), entries)
    idx = {v: i for i, v in enumerate(tree.vertices)}
    rels = tuple(((idx[a],) * la, (idx[b],) * lb) for a, b, la, lb in tree.edges)
    prov = ["tree product of infinite cyclic groups",
            "fold order: " + " ".join(order)]
    pres = Presentation(tree.vertices, rels, "", tuple(prov))
    return Construction(pres, table)


def path_exponent(labels: list[tuple[int, int]]) -> int:
    """Final term of e1 = q1, e_i = lcm(e_{i-1}, p_i)/p_i · q_i."""
    e = labels[0][1]
    for p, q in labels[1:]:
        e = lcm(e, p) // p * q
    return e


def _path_labels(tree: LabelledTree, path: list[str]) -> list[tuple[int, int]]:
    return [(tree.label(a, b), tree.label(b, a)) for a, b in zip(path, path[1:])]


def vertex_exponent(tree: LabelledTree, v: str) -> int:
    """lcm over all maximal paths ending at v of the path exponent."""
    e = 1
    for leaf in tree.leaves():
        if leaf == v:
            continue
        e = lcm(e, path_exponent(_path_labels(tree, tree.path(leaf, v))))
    return e


def vertex_exponents(tree: LabelledTree) -> dict[str, int]:
    return {v: vertex_exponent(tree, v) for v in tree.vertices}


class InconsistentCriteria(AssertionError):
    pass


def hnn_over_tree_garside(tree: LabelledTree, v0: str, v1: str) -> bool:
    """Products of the two label sequences along the v0-v1 path agree."""
    labels = _path_labels(tree, tree.path(v0, v1))
    verdict = prod(p for p, _ in labels) == prod(q for _, q in labels)
    if verdict != (vertex_exponent(tree, v0) == vertex_exponent(tree, v1)):
        raise InconsistentCriteria(f"path products and vertex exponents disagree for {v0}, {v1}")
    return verdict


# -- Pietrowski data -----------------------------------------------------------

@dataclass(frozen=True)
class PietrowskiData:
    p: tuple[int, ...]
    q: tuple[int, ...]
    stable: bool = False

    @property
    def m(self) -> int:
        return len(self.p) + 1


@dataclass(frozen=True)
class PietrowskiReport:
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def parse_pietrowski(text: str) -> PietrowskiData:
    vals: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("p", "q", "stable"):
            raise PresentationError(f"syntax error: {line!r}", lineno)
        if key in vals:
            raise PresentationError(f"repeated key {key!r}", lineno)
        vals[key] = rest.strip()
    try:
        p = tuple(int(x) for x in vals["p"].split())
        q = tuple(int(x) for x in vals["q"].split())
    except KeyError as exc:
        raise PresentationError(f"missing {exc.args[0]!r} line") from None
    except ValueError:
        raise PresentationError("exponents must be integers") from None
    stable = vals.get("stable", "no").lower()
    if stable not in ("yes", "no"):
        raise PresentationError("stable must be yes or no")
    if len(p) != len(q) or not p:
        raise PresentationError("p and q need the same positive length")
    return PietrowskiData(p, q, stable == "yes")


def load_pietrowski(path: str) -> PietrowskiData:
    with open(path, encoding="utf-8") as fh:
        return parse_pietrowski(fh.read())


def pietrowski_validate(d: PietrowskiData) -> PietrowskiReport:
    failures = []
    for x in d.p + d.q:
        if x < 2:
            failures.append(f"exponent {x} is below 2")
    for i in range(len(d.p)):
        for j in range(i):
            g = gcd(d.p[i], d.q[j])
            if g != 1:
                failures.append(f"gcd(p{i + 1}, q{j + 1}) = gcd({d.p[i]}, {d.q[j]}) = {g}")
    if d.stable and prod(d.p) != prod(d.q):
        failures.append(f"stable letter needs equal products, got {prod(d.p)} and {prod(d.q)}")
    return PietrowskiReport(tuple(failures))


def pietrowski_tree(d: PietrowskiData) -> LabelledTree:
    names = tuple(f"x{i + 1}" for i in range(d.m))
    edges = tuple((names[i], names[i + 1], d.p[i], d.q[i]) for i in range(d.m - 1))
    return LabelledTree(names, edges)


def pietrowski_build(d: PietrowskiData, stable_name: str = "a", budget: int = DEFAULT_BUDGET) -> Construction:
    """Chain tree product, then the stuffed HNN with a·x1 = x_m·a when requested."""
    rep = pietrowski_validate(d)
    if not rep.ok:
        raise ValueError("; ".join(rep.failures))
    chain = tree_product_presentation(pietrowski_tree(d), budget)
    if not d.stable:
        return chain
    base = Factor(chain.presentation, chain.table, None)
    return hnn_stuffed(base, (d.m - 1,), (0,), stable_name, budget)
