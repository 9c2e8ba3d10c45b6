"""Cyclic amalgamated free products and stuffed cyclic HNN extensions.

Both constructors return a `Construction`: the presentation to show, plus a
complement table defined on every letter pair, which is what the Garside
machinery consumes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .atomicity import DEFAULT_LENGTH_CAP, Truncated, norm
from .presentation import (ComplementTable, Presentation, Word, presentation_from_table,
                           right_complement_table)
from .reversing import DEFAULT_BUDGET, left_divides, reverse, words_equal
from .structure import (DEFAULT_POWER_CAP, DivisorEnumerator, GarsideStructure, NotARoot,
                        root_descriptor, simple_closure)

DEFAULT_MU_CAP = 64


class RootPreconditionFailed(ValueError):
    pass


class ConstructionError(ValueError):
    pass


@dataclass
class Construction:
    presentation: Presentation
    table: ComplementTable
    notes: list[str] = field(default_factory=list)

    @property
    def gens(self):
        return self.presentation.gens


@dataclass(frozen=True)
class Factor:
    """A presentation with its complement table and, when computed, its Garside structure."""
    presentation: Presentation
    table: ComplementTable
    structure: GarsideStructure | None

    @classmethod
    def of(cls, p: Presentation, table: ComplementTable | None = None, budget: int = DEFAULT_BUDGET):
        if table is None:
            table = right_complement_table(p)
        return cls(p, table, simple_closure(p, table, budget=budget))

    @classmethod
    def from_construction(cls, c: Construction, budget: int = DEFAULT_BUDGET):
        return cls.of(c.presentation, c.table, budget)


def canonical_word(gs: GarsideStructure, w: Word, cap: int = DEFAULT_POWER_CAP) -> Word:
    """Shortlex-minimal word for the element w, found among the divisors of a Garside power."""
    w = tuple(w)
    for p in range(1, cap + 1):
        target = gs.delta * p
        if left_divides(gs.table, w, target, gs.budget):
            en = gs.divisors(target)
            goal = en.key(w)
            order = [0]
            seen = {0: b""}
            k = 0
            while k < len(order):
                i = order[k]
                k += 1
                if i == goal:
                    return tuple(seen[i])
                for a in range(gs.table.rank):
                    j = en.mul(i, a)
                    if j >= 0 and j not in seen:
                        seen[j] = seen[i] + bytes((a,))
                        order.append(j)
    raise NotARoot("element does not divide a small Garside power")


def _as_given(fac: "Factor", h: Word) -> Word:
    # without a structure the word is taken verbatim (fine for letter powers)
    if fac.structure is None:
        return tuple(h)
    return canonical_word(fac.structure, h)


def _theta(table, u, v, budget=DEFAULT_BUDGET) -> Word:
    r = reverse(table, tuple(u), tuple(v), budget)
    if r is None:
        raise ConstructionError("complement undefined during construction")
    return r[0]


def mu_table(table: ComplementTable, u: Word, cap: int = DEFAULT_MU_CAP,
             budget: int = DEFAULT_BUDGET) -> list[int]:
    """μ_x = least m with x dividing u^m, for each letter x."""
    out = []
    for x in range(table.rank):
        for m in range(1, cap + 1):
            if left_divides(table, (x,), tuple(u) * m, budget):
                out.append(m)
                break
        else:
            raise ConstructionError(f"letter {x} divides no power of the amalgamated word up to {cap}")
    return out


def _fresh_names(taken: set[str], names, suffix: str):
    out = []
    for g in names:
        new = g
        while new in taken:
            new = new + suffix
        taken.add(new)
        out.append(new)
    return out


def amalgam(left: Factor, h_left: Word, right: Factor, h_right: Word,
            mu_cap: int = DEFAULT_MU_CAP, budget: int = DEFAULT_BUDGET,
            check_roots: bool = True) -> Construction:
    """M1 ⋆_{h1=h2} M2 with the cross complement on mixed letter pairs."""
    notes = []
    u1, u2 = _as_given(left, h_left), _as_given(right, h_right)
    if check_roots:
        for fac, u in ((left, u1), (right, u2)):
            if fac.structure is None:
                continue
            try:
                root_descriptor(fac.structure, u)
            except NotARoot as exc:
                raise RootPreconditionFailed(str(exc)) from None
    g1 = list(left.presentation.gens)
    taken = set(g1)
    g2 = _fresh_names(taken, right.presentation.gens, "_2")
    for old, new in zip(right.presentation.gens, g2):
        if old != new:
            notes.append(f"renamed {old} -> {new}")
    n1, n2 = len(g1), len(g2)
    t1, t2 = left.table, right.table
    mu1 = mu_table(t1, u1, mu_cap, budget)
    mu2 = mu_table(t2, u2, mu_cap, budget)
    entries: dict[tuple[int, int], Word] = {}
    for (x, y), w in t1.entries.items():
        entries[x, y] = w
    for (x, y), w in t2.entries.items():
        entries[x + n1, y + n1] = tuple(c + n1 for c in w)

    def shift(w, off):
        return tuple(c + off for c in w)

    # side i letter x against side j letter y
    sides = ((t1, u1, mu1, 0), (t2, u2, mu2, n1))
    for i in (0, 1):
        ti, ui, mui, oi = sides[i]
        tj, uj, muj, oj = sides[1 - i]
        for x in range(ti.rank):
            for y in range(tj.rank):
                mx, my = mui[x], muj[y]
                if mx >= my:
                    w = shift(_theta(ti, (x,), ui * my, budget), oi)
                else:
                    w = shift(_theta(ti, (x,), ui * mx, budget), oi) + shift(_theta(tj, uj * mx, (y,), budget), oj)
                entries[x + oi, y + oj] = w
    table = ComplementTable(n1 + n2, entries)
    lp, rp = left.presentation, right.presentation
    prov = [f"amalgam of {lp.name or 'left'} and {rp.name or 'right'}",
            f"identify {lp.compact(u1)} = {rp.compact(u2)}",
            "mu left: " + " ".join(f"{g}={m}" for g, m in zip(g1, mu1)),
            "mu right: " + " ".join(f"{g}={m}" for g, m in zip(g2, mu2))] + notes
    name = f"{lp.name}_{rp.name}" if lp.name and rp.name else ""
    pres = presentation_from_table(g1 + g2, table, name, prov)
    return Construction(pres, table, notes)


# -- HNN ---------------------------------------------------------------------

def stuff_shuffle(u: Word, stable: int) -> Word:
    """a1 t a2 t ... t am."""
    if not u:
        raise ValueError("cannot stuff the empty word")
    out = [u[0]]
    for a in u[1:]:
        out.append(stable)
        out.append(a)
    return tuple(out)


def _tstuff(w: Word, t: int) -> Word:
    """t·(w⧢t), read as ε for the empty word."""
    return (t,) + stuff_shuffle(w, t) if w else ()


@dataclass(frozen=True)
class HypothesisReport:
    common_root: tuple[int, int] | None  # (n, p) with h1^n ≡ h2^n ≡ Δ^p
    norms: tuple[int | None, int | None]
    warnings: tuple[str, ...]

    @property
    def roots_ok(self) -> bool:
        return self.common_root is not None

    @property
    def norms_ok(self) -> bool:
        return None not in self.norms and self.norms[0] == self.norms[1]


def hnn_hypothesis_check(base: Factor, h1: Word, h2: Word, cap: int = DEFAULT_POWER_CAP) -> HypothesisReport:
    gs = base.structure
    found = None
    for n in range(1, cap + 1):
        a, b = tuple(h1) * n, tuple(h2) * n
        if not words_equal(gs.table, a, b, gs.budget):
            continue
        for p in range(1, cap + 1):
            target = gs.delta * p
            if not left_divides(gs.table, target, a, gs.budget):
                break
            if words_equal(gs.table, a, target, gs.budget):
                found = (n, p)
                break
        if found:
            break
    norms = []
    for h in (h1, h2):
        try:
            norms.append(norm(base.presentation, tuple(h), DEFAULT_LENGTH_CAP, 10**5))
        except Truncated:
            norms.append(None)
    warnings = []
    if found is None:
        warnings.append("h1 and h2 are not roots of a common Garside power")
    if None in norms or norms[0] != norms[1]:
        warnings.append(f"norms differ: {norms[0]} vs {norms[1]}")
    return HypothesisReport(found, tuple(norms), tuple(warnings))


def hnn_stuffed(base: Factor, h1: Word, h2: Word, stable: str = "t",
                budget: int = DEFAULT_BUDGET) -> Construction:
    """The stuffed monoid ⟨A, t : stuffed base relations, (u1⧢t)t = t(u2⧢t)⟩⁺."""
    bp = base.presentation
    if stable in bp.gens:
        raise ConstructionError(f"stable letter {stable!r} already names a generator")
    if not h1 or not h2:
        raise ConstructionError("h1 and h2 must be non-trivial")
    u1, u2 = _as_given(base, h1), _as_given(base, h2)
    n = bp.rank
    t = n
    bt = base.table
    entries: dict[tuple[int, int], Word] = {}
    for (x, y), w in bt.entries.items():
        entries[x, y] = _tstuff(w, t)
    x1 = u1[0]
    entries[x1, t] = stuff_shuffle(u1, t)[1:] + (t,)
    entries[t, x1] = stuff_shuffle(u2, t)
    partial = ComplementTable(n + 1, entries)
    for x in range(n):
        if x == x1:
            continue
        # θ̂(x,t) = x\(x1∨t) and θ̂(t,x) = t\(x1∨x), both by reversing in the partial table
        xt = _theta(partial, (x,), (x1,) + entries[x1, t], budget)
        tx = _theta(partial, (t,), (x1,) + partial[x1, x], budget)
        entries[x, t] = xt
        entries[t, x] = tx
    table = ComplementTable(n + 1, entries)
    rels = [(stuff_shuffle(l, t), stuff_shuffle(r, t)) for l, r in bp.relations]
    rels.append((stuff_shuffle(u1, t) + (t,), (t,) + stuff_shuffle(u2, t)))
    gens = bp.gens + (stable,)
    prov = [f"stuffed HNN extension of {bp.name or 'base'}",
            f"h1 = {bp.compact(u1)}, h2 = {bp.compact(u2)}, stable letter {stable}"]
    pres = Presentation(gens, tuple(rels), f"{bp.name}_hnn" if bp.name else "", tuple(prov))
    return Construction(pres, table)


def cyclic_factor(name: str) -> Factor:
    p = Presentation((name,), (), name)
    return Factor.of(p)


def free_cyclic(name: str = "s") -> Presentation:
    return Presentation((name,), (), name)


def baumslag_solitar(m: int) -> Presentation:
    """The unstuffed positive BS(m,m): ⟨s,t : s^m t = t s^m⟩⁺."""
    return Presentation(("s", "t"), (((0,) * m + (1,), (1,) + (0,) * m),), f"BS{m}")


def stuffed_baumslag_solitar(m: int) -> Construction:
    base = Factor.of(free_cyclic("s"))
    return hnn_stuffed(base, (0,) * m, (0,) * m, "t")


def artin_dihedral(m: int) -> Presentation:
    """⟨s,t : (st)^m = (ts)^m⟩⁺."""
    return Presentation(("s", "t"), (((0, 1) * m, (1, 0) * m),), f"I2_{2 * m}")
