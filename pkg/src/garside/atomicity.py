"""Equivalence classes, norms and a three-valued atomicity test.

Class enumeration is plain breadth-first search over words, applying every
relation in both directions at every position.  It knows nothing about
complements, which is what makes it useful as an independent oracle.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .presentation import Presentation, Word

DEFAULT_LENGTH_CAP = 64
DEFAULT_SIZE_CAP = 10**6

_BASE = 0x100  # letters are encoded as characters from here on


def _enc(w) -> str:
    return "".join(chr(_BASE + x) for x in w)


def _dec(s: str) -> Word:
    return tuple(ord(c) - _BASE for c in s)


def _rules(p: Presentation) -> list[tuple[str, str]]:
    rules = []
    for lhs, rhs in p.relations:
        rules.append((_enc(lhs), _enc(rhs)))
        rules.append((_enc(rhs), _enc(lhs)))
    return rules


def _neighbours(s: str, rules):
    """Yield (word, position, rule index) for every single rewrite of s."""
    for k, (src, dst) in enumerate(rules):
        pos = s.find(src)
        while pos != -1:
            yield s[:pos] + dst + s[pos + len(src):], pos, k
            pos = s.find(src, pos + 1)


@dataclass(frozen=True)
class EquivalenceClass:
    representative: Word
    members: frozenset
    truncated: bool

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return tuple(w) in self.members


class Truncated(RuntimeError):
    pass


def equivalence_class(p: Presentation, w: Word, length_cap: int = DEFAULT_LENGTH_CAP,
                      size_cap: int = DEFAULT_SIZE_CAP) -> EquivalenceClass:
    rules = _rules(p)
    start = _enc(w)
    seen = {start}
    queue = deque([start])
    truncated = False
    while queue:
        s = queue.popleft()
        for t, _, _ in _neighbours(s, rules):
            if t in seen:
                continue
            if len(t) > length_cap or len(seen) >= size_cap:
                truncated = True
                continue
            seen.add(t)
            queue.append(t)
    members = frozenset(_dec(s) for s in seen)
    rep = min(members, key=lambda m: (len(m), m))
    return EquivalenceClass(rep, members, truncated)


def norm(p: Presentation, w: Word, length_cap: int = DEFAULT_LENGTH_CAP,
         size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Longest word in the class of w."""
    cls = equivalence_class(p, w, length_cap, size_cap)
    if cls.truncated:
        raise Truncated(f"class of {p.compact(w)} exceeds the caps")
    return max(len(m) for m in cls.members)


def classes_oracle(p: Presentation, words, length_cap: int = DEFAULT_LENGTH_CAP,
                   size_cap: int = DEFAULT_SIZE_CAP) -> dict[Word, Word]:
    """Map each word to its shortlex-minimal class representative."""
    out: dict[Word, Word] = {}
    for w in words:
        w = tuple(w)
        if w in out:
            continue
        cls = equivalence_class(p, w, length_cap, size_cap)
        if cls.truncated:
            raise Truncated(f"class of {p.compact(w)} exceeds the caps")
        for m in cls.members:
            out[m] = cls.representative
    return out


# -- additive weights -------------------------------------------------------

def additive_weights(p: Presentation) -> dict[str, int] | None:
    """Positive integer weights making both sides of every relation equally heavy."""
    n = p.rank
    if not p.relations:
        return {g: 1 for g in p.gens}
    rows = []
    for lhs, rhs in p.relations:
        row = [0] * n
        for x in lhs:
            row[x] += 1
        for x in rhs:
            row[x] -= 1
        rows.append(row)
    A = np.array(rows, dtype=float)
    # try the all-ones vector first, it is by far the commonest answer
    if not (A @ np.ones(n)).any():
        return {g: 1 for g in p.gens}
    from scipy.optimize import linprog
    res = linprog(np.ones(n), A_eq=A, b_eq=np.zeros(len(rows)), bounds=[(1, None)] * n, method="highs")
    if res.status != 0:
        return None
    fr = [Fraction(v).limit_denominator(10**6) for v in res.x]
    den = 1
    for f in fr:
        den = den * f.denominator // np.gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = int(np.gcd(g, v))
    ints = [v // g for v in ints]
    for row in rows:
        if sum(c * v for c, v in zip(row, ints)) != 0:
            return None
    if min(ints) < 1:
        return None
    return dict(zip(p.gens, ints))


# -- non-atomicity certificates ---------------------------------------------

@dataclass(frozen=True)
class RewriteStep:
    position: int
    relation: int  # index into presentation.relations
    forward: bool  # lhs -> rhs when True


@dataclass(frozen=True)
class PumpingWitness:
    """start ≡ result, result is longer and contains start as a factor."""
    start: Word
    steps: tuple[RewriteStep, ...]
    result: Word


def apply_step(p: Presentation, w: Word, step: RewriteStep) -> Word:
    lhs, rhs = p.relations[step.relation]
    src, dst = (lhs, rhs) if step.forward else (rhs, lhs)
    i = step.position
    if tuple(w[i:i + len(src)]) != tuple(src):
        raise ValueError("rewrite step does not apply")
    return tuple(w[:i]) + tuple(dst) + tuple(w[i + len(src):])


def replay(p: Presentation, witness: PumpingWitness) -> bool:
    """Check that the witness chain really pumps its start word."""
    w = tuple(witness.start)
    for step in witness.steps:
        w = apply_step(p, w, step)
    if w != tuple(witness.result) or len(w) <= len(witness.start):
        return False
    return _enc(witness.start) in _enc(w)


def find_pumping(p: Presentation, start: Word, length_cap: int = DEFAULT_LENGTH_CAP,
                 size_cap: int = 20000) -> PumpingWitness | None:
    """Breadth-first search in the class of `start` for a longer word containing it."""
    rules = _rules(p)
    s0 = _enc(start)
    parent: dict[str, tuple[str, int, int] | None] = {s0: None}
    queue = deque([s0])
    while queue:
        s = queue.popleft()
        for t, pos, k in _neighbours(s, rules):
            if t in parent:
                continue
            if len(t) > length_cap or len(parent) >= size_cap:
                continue
            parent[t] = (s, pos, k)
            if len(t) > len(s0) and s0 in t:
                steps = []
                cur = t
                while parent[cur] is not None:
                    prev, ppos, pk = parent[cur]
                    steps.append(RewriteStep(ppos, pk // 2, pk % 2 == 0))
                    cur = prev
                steps.reverse()
                return PumpingWitness(tuple(start), tuple(steps), _dec(t))
            queue.append(t)
    return None


class Verdict(enum.Enum):
    ATOMIC = "Atomic"
    NON_ATOMIC = "NonAtomic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AtomicityReport:
    verdict: Verdict
    additive_weights: dict | None = None
    witness: PumpingWitness | None = None
    reason: str = ""

    def __str__(self):
        return self.verdict.value + (f" ({self.reason})" if self.reason else "")


def atomicity(p: Presentation, length_cap: int = DEFAULT_LENGTH_CAP, size_cap: int = DEFAULT_SIZE_CAP,
              search_cap: int = 20000) -> AtomicityReport:
    weights = additive_weights(p)
    if weights is not None:
        return AtomicityReport(Verdict.ATOMIC, weights, reason="additive weights")
    starts = []
    for lhs, rhs in p.relations:
        starts.extend([lhs, rhs])
    starts.extend(product(range(p.rank), repeat=2))
    seen = set()
    for s in sorted(set(map(tuple, starts)), key=lambda w: (len(w), w)):
        if s in seen:
            continue
        seen.add(s)
        wit = find_pumping(p, s, length_cap, search_cap)
        if wit is not None:
            return AtomicityReport(Verdict.NON_ATOMIC, None, wit,
                                   f"{p.compact(wit.start)} ≡ {p.compact(wit.result)}")
    # no weights, no pumping: accept when every product of two generators has a finite class
    for pair in product(range(p.rank), repeat=2):
        cls = equivalence_class(p, pair, length_cap, min(size_cap, search_cap))
        if cls.truncated:
            return AtomicityReport(Verdict.UNKNOWN, reason=f"class of {p.compact(pair)} exceeds the caps")
    return AtomicityReport(Verdict.ATOMIC, reason="finite classes, no additive weights")
