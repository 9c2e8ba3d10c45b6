"""Simple elements, Garside elements, lattices, central exponents and roots.

Elements below a fixed target D are handled by a divisor enumerator.  Each
divisor s gets an integer id, and ids are canonical: s is keyed by the pair
(x, id of x\\s) where x is the least atom dividing s.  Extending s by an
atom a only needs the words s\\y for atoms y and s\\D, all obtained by
reversing a single letter against a short word.
"""
from __future__ import annotations

import json
import sys
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .atomicity import DEFAULT_LENGTH_CAP, DEFAULT_SIZE_CAP, AtomicityReport, Verdict, atomicity
from .presentation import (ComplementTable, NotComplemented, Presentation, Word, mirror,
                           right_complement_table)
from .reversing import (DEFAULT_BUDGET, CubeReport, Diverged, cube_check_all, left_divides, reverse,
                        right_lcm, words_equal)

DEFAULT_CLOSURE_CAP = 10**6
DEFAULT_DIVISOR_CAP = 10**7
DEFAULT_POWER_CAP = 64
DEFAULT_DELTA_LENGTH_CAP = 4096

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))


class ClosureDiverged(RuntimeError):
    """The simple closure or divisor enumeration exceeded its cap."""


class NotGarside(ValueError):
    """The structure fails one of the Garside axioms."""


class _NoLcm(NotGarside):
    pass


def _theta(rows, u, v, budget):
    r = reverse(rows, u, v, budget)
    if r is None:
        raise _NoLcm("a letter pair has no common right multiple")
    return r


def atom_analysis(table: ComplementTable, budget: int = DEFAULT_BUDGET):
    """Split the generators into atoms and the rest.

    Returns (atoms, expansion) where expansion[g] is a word over atoms equal
    to the generator g.  Generators that are mutual divisors name the same
    atom, the least index standing for the class.
    """
    n = table.rank
    divides = [[left_divides(table, (y,), (g,), budget) for y in range(n)] for g in range(n)]
    atoms = []
    strict: dict[int, int] = {}
    alias: dict[int, int] = {}
    for g in range(n):
        proper = [y for y in range(n) if divides[g][y] and not divides[y][g]]
        if proper:
            strict[g] = proper[0]
        else:
            twin = min(y for y in range(n) if divides[g][y] and divides[y][g])
            alias[g] = twin
            if twin == g:
                atoms.append(g)
    expansion: dict[int, Word] = {}

    def expand(g, depth=0):
        if g in expansion:
            return expansion[g]
        if depth > 10 * n + 64:
            raise NotGarside("generator expansion does not terminate (not atomic?)")
        if g in alias:
            w = (alias[g],)
        else:
            y = strict[g]
            rest = reverse(table, (y,), (g,), budget)[0]
            w = expand(y, depth + 1)
            for z in rest:
                w = w + expand(z, depth + 1)
        expansion[g] = w
        return w

    for g in range(n):
        expand(g)
    return atoms, expansion


class DivisorEnumerator:
    """Left divisors of a target element, with canonical ids.

    Assumes any two divisors of the target have a right lcm computable by
    reversing (true for a complemented presentation of a Garside monoid).
    """

    def __init__(self, table: ComplementTable, target: Word, budget: int = DEFAULT_BUDGET,
                 atoms: tuple | None = None):
        self.table = table
        self.n = table.rank
        self.budget = budget
        self.target = tuple(target)
        if atoms is None:
            atoms = atom_analysis(table, budget)
        self.atoms, self.expansion = atoms
        # letter z stands for atom alias[z] when it is a single-atom generator
        self.single = {z: w[0] for z, w in self.expansion.items() if len(w) == 1}
        n = self.n
        self.first = [n]
        self.rem = [-1]
        self.rep = [b""]
        self.r: list = [self.target]
        self.C: list = [tuple((y,) for y in self.atoms)]
        self.T: list[list] = [[None] * n]
        self.canon: dict[tuple[int, int], int] = {}
        self.order: list[int] = []
        self.display: list[bytes | None] = [b""]

    def __len__(self):
        return len(self.first)

    def step(self, i: int, a: int) -> int:
        """Id of s_i·a for an atom a, or -1 when s_i·a does not divide the target."""
        Ti = self.T[i]
        j = Ti[a]
        if j is not None:
            return j
        res = _theta(self.table, (a,), self.r[i], self.budget)
        if res[1]:
            Ti[a] = -1
            return -1
        Ci = self.C[i]
        fi = self.first[i]
        x = fi
        single = self.single
        # the least atom dividing s·a: either first[i], or some y with s\y ≡ a
        for k, y in enumerate(self.atoms):
            if y >= fi:
                break
            c = Ci[k]
            if len(c) == 1 and single.get(c[0]) == a:
                x = y
                break
        if x == fi:
            rem = self.step(self.rem[i], a)
        else:
            rem = self.key(_theta(self.table, (x,), self.rep[i], self.budget)[0])
        if rem < 0:
            raise NotGarside("divisor set is not closed under right division")
        k = (x, rem)
        j = self.canon.get(k)
        if j is None:
            j = len(self.first)
            self.canon[k] = j
            self.first.append(x)
            self.rem.append(rem)
            self.rep.append(self.rep[i] + bytes((a,)))
            self.r.append(res[0])
            self.C.append(tuple(_theta(self.table, (a,), c, self.budget)[0] for c in Ci))
            self.T.append([None] * self.n)
            self.display.append(None)
        Ti[a] = j
        return j

    def mul(self, i: int, g: int) -> int:
        """Id of s_i·g for any generator g."""
        for a in self.expansion[g]:
            i = self.step(i, a)
            if i < 0:
                return -1
        return i

    def key(self, w) -> int:
        j = 0
        for g in w:
            j = self.mul(j, g)
            if j < 0:
                raise ValueError("word does not divide the target")
        return j

    def divides(self, w) -> bool:
        j = 0
        for g in w:
            j = self.mul(j, g)
            if j < 0:
                return False
        return True

    def enumerate(self, cap: int = DEFAULT_CLOSURE_CAP) -> list[int]:
        """Breadth-first over divisors; display words come out shortlex-minimal.

        Every generator is tried, not just the atoms, so a display word may
        use a non-atomic generator when that is shorter.
        """
        order = [0]
        display = self.display
        gens = range(self.n)
        k = 0
        while k < len(order):
            i = order[k]
            k += 1
            base = display[i]
            for g in gens:
                j = self.mul(i, g)
                if j >= 0 and display[j] is None:
                    display[j] = base + bytes((g,))
                    order.append(j)
                    if len(order) > cap:
                        raise ClosureDiverged(f"more than {cap} divisors")
        self.order = order
        return order

    def word(self, i: int) -> Word:
        d = self.display[i]
        return tuple(d if d is not None else self.rep[i])

    def release(self):
        """Drop the per-node working words once enumeration is finished."""
        self.r = [None] * len(self.r)
        self.C = [None] * len(self.C)


def compute_delta(table: ComplementTable, budget: int = DEFAULT_BUDGET,
                  length_cap: int = DEFAULT_DELTA_LENGTH_CAP) -> Word:
    """Smallest D divisible by every atom with a\\D dividing D for every atom a.

    Starting from the lcm of the atoms, keep joining in the failing
    complements.  Every element produced lies in the closure of the atoms
    under \\ and ∨, so the limit is the lcm of the simples.
    """
    atoms = atom_analysis(table, budget)[0]
    D: Word = ()
    for a in atoms:
        D = _join(table, D, (a,), budget)
    while True:
        changed = False
        for a in atoms:
            q = _theta(table, (a,), D, budget)[0]
            if not left_divides(table, q, D, budget):
                D = _join(table, D, q, budget)
                changed = True
            if len(D) > length_cap:
                raise ClosureDiverged(f"candidate Garside element longer than {length_cap}")
        if not changed:
            return D


def _join(table, a, b, budget):
    r = reverse(table, a, b, budget)
    if r is None:
        raise _NoLcm("no common right multiple")
    return tuple(a) + r[0]


@dataclass
class GarsideStructure:
    presentation: Presentation
    table: ComplementTable
    delta: Word
    simples: list[Word]
    edges: list[tuple[int, int, int]]
    enumerator: DivisorEnumerator = field(repr=False)
    positions: dict[int, int] = field(repr=False)
    budget: int = DEFAULT_BUDGET
    _central: int | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.simples)

    @property
    def count(self) -> int:
        return len(self.simples)

    def index(self, w) -> int:
        """Position of the simple represented by w (ValueError when not simple)."""
        return self.positions[self.enumerator.key(w)]

    def canonical(self, w) -> Word:
        return self.simples[self.index(w)]

    def is_simple(self, w) -> bool:
        return self.enumerator.divides(w)

    def equal(self, u, v) -> bool:
        return words_equal(self.table, u, v, self.budget)

    def divides(self, d, D) -> bool:
        return left_divides(self.table, d, D, self.budget)

    def lcm(self, a, b) -> Word:
        return right_lcm(self.table, a, b, self.budget)

    def under(self, a, b) -> Word:
        r = reverse(self.table, tuple(a), tuple(b), self.budget)
        if r is None:
            raise NotGarside("no common right multiple")
        return r[0]

    def gcd(self, a, b) -> Word:
        return left_gcd(self, a, b)

    @property
    def central_exponent(self) -> int:
        if self._central is None:
            self._central = central_exponent(self)
        return self._central

    def delta_power(self, p: int) -> Word:
        return self.delta * p

    def format(self, w) -> str:
        return self.presentation.compact(w)

    @property
    def atoms(self) -> list[int]:
        return self.enumerator.atoms

    def divisors(self, target: Word) -> DivisorEnumerator:
        """A fresh enumerator for the divisors of target, sharing the atom data."""
        en = self.enumerator
        return DivisorEnumerator(self.table, target, self.budget, (en.atoms, en.expansion))


def simple_closure(p: Presentation, table: ComplementTable | None = None,
                   cap: int = DEFAULT_CLOSURE_CAP, budget: int = DEFAULT_BUDGET) -> GarsideStructure:
    """Enumerate the simples as the left divisors of the minimal Garside element."""
    if table is None:
        table = right_complement_table(p)
    delta = compute_delta(table, budget)
    en = DivisorEnumerator(table, delta, budget)
    order = en.enumerate(cap)
    # s -> s\Δ must permute the simples; then left and right divisors of Δ agree
    dual = set()
    top_id = None
    for i in order:
        if not en.r[i]:
            top_id = i
        dual.add(en.key(en.r[i]))
    if len(dual) != len(order):
        raise NotGarside("left and right divisors of the Garside candidate differ")
    positions = {i: k for k, i in enumerate(order)}
    simples = [en.word(i) for i in order]
    edges = []
    for i in order:
        for a, j in enumerate(en.T[i]):
            if j is not None and j >= 0:
                edges.append((positions[i], positions[j], a))
    en.release()
    top = en.word(top_id)
    return GarsideStructure(p, table, top, simples, edges, en, positions, budget)


def hasse_lattice(gs: GarsideStructure):
    """Covering graph of the simples as a networkx DiGraph (edge attribute 'atom')."""
    import networkx as nx
    g = nx.DiGraph()
    for k, w in enumerate(gs.simples):
        g.add_node(k, word=gs.format(w))
    for i, j, a in gs.edges:
        g.add_edge(i, j, atom=gs.presentation.gens[a])
    return g


def central_exponent(gs: GarsideStructure, cap: int = DEFAULT_POWER_CAP) -> int:
    for e in range(1, cap + 1):
        de = gs.delta * e
        if all(words_equal(gs.table, de + (x,), (x,) + de, gs.budget) for x in gs.atoms):
            return e
    raise ClosureDiverged(f"no central power of the Garside element up to {cap}")


def _power(w: Word, k: int) -> Word:
    return tuple(w) * k


def roots(gs: GarsideStructure, p: int, q: int, cap: int = DEFAULT_DIVISOR_CAP) -> list[Word]:
    """All h with h^q ≡ Δ^p, as shortlex-minimal words in shortlex order."""
    target = gs.delta * p
    en = gs.divisors(target)
    order = en.enumerate(cap)
    out = []
    for i in order:
        h = en.word(i)
        if h and words_equal(gs.table, _power(h, q), target, gs.budget):
            out.append(h)
    return out


@dataclass(frozen=True)
class RootDescriptor:
    element: Word
    delta_power: int
    degree: int


class NotARoot(ValueError):
    pass


def root_descriptor(gs: GarsideStructure, h: Word, cap: int = DEFAULT_POWER_CAP) -> RootDescriptor:
    """Lexicographically least (p, q) with h^q ≡ Δ^p."""
    h = tuple(h)
    if not h:
        raise NotARoot("the trivial element is not a root")
    for p in range(1, cap + 1):
        target = gs.delta * p
        for q in range(1, cap + 1):
            hq = _power(h, q)
            if not left_divides(gs.table, hq, target, gs.budget):
                break
            if words_equal(gs.table, hq, target, gs.budget):
                return RootDescriptor(h, p, q)
    raise NotARoot(f"{gs.format(h)} is not a root of a Garside power within {cap}")


def left_gcd(gs: GarsideStructure, a: Word, b: Word) -> Word:
    """Right lcm of all common left divisors of a and b."""
    a, b = tuple(a), tuple(b)
    p = 1
    while not (gs.divides(a, gs.delta * p) and gs.divides(b, gs.delta * p)):
        p += 1
        if p > DEFAULT_POWER_CAP:
            raise ValueError("arguments do not divide a small Garside power")
    en = gs.divisors(gs.delta * p)
    best: Word = ()
    for i in en.enumerate():
        d = en.word(i)
        if gs.divides(d, a) and gs.divides(d, b):
            best = right_lcm(gs.table, best, d, gs.budget)
    return en.word(en.key(best))


# -- verification -----------------------------------------------------------

@dataclass
class GarsideReport:
    ok: bool
    checks: list[tuple[str, bool, str]]
    structure: GarsideStructure | None = None
    atomicity: AtomicityReport | None = None
    cube: CubeReport | None = None
    # "verdict" for a mathematical failure, "cap" when a resource cap stopped us
    failure_kind: str | None = None

    def summary(self) -> str:
        if self.ok:
            return f"Garside: yes, simples: {self.structure.count}"
        name, _, why = next(c for c in self.checks if not c[1])
        return f"Garside: no ({name}: {why})"


def verify_garside(p: Presentation, table: ComplementTable | None = None,
                   cap: int = DEFAULT_CLOSURE_CAP, budget: int = DEFAULT_BUDGET,
                   check_atomicity: bool = True, check_mirror: bool = True,
                   length_cap: int = DEFAULT_LENGTH_CAP, size_cap: int = DEFAULT_SIZE_CAP) -> GarsideReport:
    """Run every check in turn and collect the verdicts.

    `table` overrides the complement read off the relations; constructed
    monoids carry a completed table.
    """
    checks: list[tuple[str, bool, str]] = []

    def fail(name, why, kind="verdict", **kw):
        checks.append((name, False, why))
        return GarsideReport(False, checks, failure_kind=kind, **kw)

    try:
        own = right_complement_table(p)
        checks.append(("right-complemented", True, ""))
    except NotComplemented as exc:
        if table is None:
            return fail("right-complemented", str(exc))
        own = None
        checks.append(("right-complemented", True, "using supplied complement"))
    supplied_table = table
    if table is None:
        table = own
    mt = None
    supplied = supplied_table is not None
    if check_mirror and supplied:
        checks.append(("left-complemented", True, "skipped: constructed complement"))
    elif check_mirror:
        try:
            mt = right_complement_table(mirror(p))
            checks.append(("left-complemented", True, ""))
        except NotComplemented as exc:
            checks.append(("left-complemented", True, f"skipped: {exc}"))
        if mt is not None and not mt.complete:
            # a partial left complement says nothing on its own, the closure decides
            checks.append(("mirror cube condition", True, "skipped: left complement is partial"))
            mt = None
    rep = None
    if check_atomicity:
        rep = atomicity(p, length_cap, size_cap)
        if rep.verdict is Verdict.NON_ATOMIC:
            return fail("atomicity", str(rep), atomicity=rep)
        checks.append(("atomicity", True, str(rep)))
    cube = cube_check_all(table, budget)
    if not cube.ok:
        f = cube.failures[0]
        triple = ",".join(p.compact(w) for w in f.triple)
        return fail("cube condition", f"fails at ({triple})", atomicity=rep, cube=cube)
    checks.append(("cube condition", True, ""))
    if mt is not None:
        mcube = cube_check_all(mt, budget)
        if not mcube.ok:
            f = mcube.failures[0]
            triple = ",".join(p.compact(w) for w in f.triple)
            return fail("mirror cube condition", f"fails at ({triple})", atomicity=rep, cube=cube)
        checks.append(("mirror cube condition", True, ""))
    try:
        gs = simple_closure(p, table, cap, budget)
    except (ClosureDiverged, Diverged) as exc:
        return fail("simple closure", str(exc), kind="cap", atomicity=rep, cube=cube)
    except NotGarside as exc:
        return fail("simple closure", str(exc), atomicity=rep, cube=cube)
    checks.append(("simple closure", True, f"{gs.count} simples"))
    checks.append(("Garside element", True, p.compact(gs.delta)))
    return GarsideReport(True, checks, gs, rep, cube)


# -- emitters ----------------------------------------------------------------

def to_json(gs: GarsideStructure, central: bool = True) -> dict:
    fmt = gs.format
    doc = {
        "simples": [fmt(w) for w in gs.simples],
        "delta": fmt(gs.delta),
        "edges": [[i, j, gs.presentation.gens[a]] for i, j, a in gs.edges],
    }
    if central:
        doc["central_exponent"] = gs.central_exponent
    return doc


def to_dot(gs: GarsideStructure, name: str = "simples") -> str:
    fmt = gs.format
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for k, w in enumerate(gs.simples):
        lines.append(f"  n{k} [label={json.dumps(fmt(w))}];")
    for i, j, a in gs.edges:
        lines.append(f"  n{i} -> n{j} [label={json.dumps(gs.presentation.gens[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
