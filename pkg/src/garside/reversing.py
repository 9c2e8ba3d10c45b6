"""Word reversing: the word-level right complement and what it decides.

The core routine reverses u⁻¹v into a positive-negative word
θ(u,v)·θ(v,u)⁻¹, one letter pair at a time.  Everything else (cube
condition, equality, divisibility, lcms) is phrased through it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import permutations

from .presentation import EPSILON, ComplementTable, Presentation, Word, mirror, right_complement_table

DEFAULT_BUDGET = 10**6


class Diverged(RuntimeError):
    """Reversing exhausted its step budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"word reversing exceeded {budget} steps")


class Status(enum.Enum):
    DEFINED = "defined"
    UNDEFINED = "undefined"
    DIVERGED = "diverged"


@dataclass(frozen=True)
class ReversingOutcome:
    status: Status
    word: Word | None = None
    steps: int = 0

    @property
    def defined(self) -> bool:
        return self.status is Status.DEFINED

    def __str__(self):
        if self.status is Status.DEFINED:
            return f"Defined({self.word})"
        if self.status is Status.DIVERGED:
            return f"Diverged({self.steps})"
        return "Undefined"


def reverse(table: ComplementTable, u: Word, v: Word, budget: int = DEFAULT_BUDGET):
    """Return (θ(u,v), θ(v,u)), or None when some letter pair is undefined.

    Raises Diverged once more than `budget` letter pairs have been resolved.
    """
    rows = table.rows
    # left holds the reduced prefix P·N⁻¹, right the unread suffix (top = next symbol).
    # negative letters are encoded as ~x.
    left = [~x for x in reversed(u)]
    right = list(reversed(v))
    steps = 0
    while right:
        s = right.pop()
        if s < 0 or not left or left[-1] >= 0:
            left.append(s)
            continue
        x = ~left.pop()
        if x == s:
            continue
        steps += 1
        if steps > budget:
            raise Diverged(budget)
        row = rows[x]
        a = row[s]
        if a is None:
            return None
        b = rows[s][x]
        # x⁻¹s -> a·b⁻¹ ; push b⁻¹ first so that a is read first
        for y in b:
            right.append(~y)
        right.extend(reversed(a))
    pos = [s for s in left if s >= 0]
    neg = [~s for s in left if s < 0]
    neg.reverse()
    return tuple(pos), tuple(neg)


def complement(table: ComplementTable, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> ReversingOutcome:
    try:
        r = reverse(table, tuple(u), tuple(v), budget)
    except Diverged:
        return ReversingOutcome(Status.DIVERGED, None, budget)
    if r is None:
        return ReversingOutcome(Status.UNDEFINED)
    return ReversingOutcome(Status.DEFINED, r[0])


def theta(table: ComplementTable, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> Word | None:
    """θ(u,v) or None when undefined; raises Diverged."""
    r = reverse(table, u, v, budget)
    return None if r is None else r[0]


# -- cube condition ---------------------------------------------------------

@dataclass(frozen=True)
class CubeFailure:
    triple: tuple[Word, Word, Word]
    lhs: ReversingOutcome
    rhs: ReversingOutcome


@dataclass(frozen=True)
class CubeReport:
    failures: tuple[CubeFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def _nested(table, a: Word, b: Word, c: Word, budget) -> ReversingOutcome:
    """θ(θ(a,b), θ(a,c))."""
    r1 = reverse(table, a, b, budget)
    r2 = reverse(table, a, c, budget)
    if r1 is None or r2 is None:
        return ReversingOutcome(Status.UNDEFINED)
    return complement(table, r1[0], r2[0], budget)


def _cube_sides(table, x, y, z, budget):
    try:
        lhs = _nested(table, x, y, z, budget)
    except Diverged:
        lhs = ReversingOutcome(Status.DIVERGED, None, budget)
    try:
        rhs = _nested(table, y, x, z, budget)
    except Diverged:
        rhs = ReversingOutcome(Status.DIVERGED, None, budget)
    return lhs, rhs


def cube_condition(table: ComplementTable, x: Word, y: Word, z: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """θ(θ(x,y),θ(x,z)) = θ(θ(y,x),θ(y,z)), both defined and equal or both undefined."""
    lhs, rhs = _cube_sides(table, tuple(x), tuple(y), tuple(z), budget)
    if Status.DIVERGED in (lhs.status, rhs.status):
        raise Diverged(budget)
    return lhs == rhs


def cube_check_all(table: ComplementTable, budget: int = DEFAULT_BUDGET) -> CubeReport:
    failures = []
    for x, y, z in permutations(range(table.rank), 3):
        lhs, rhs = _cube_sides(table, (x,), (y,), (z,), budget)
        if lhs != rhs or lhs.status is Status.DIVERGED:
            failures.append(CubeFailure(((x,), (y,), (z,)), lhs, rhs))
    return CubeReport(tuple(failures))


# -- element-level predicates ----------------------------------------------

def left_divides(table: ComplementTable, d: Word, D: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """d is a left divisor of D, i.e. θ(D,d) = ε."""
    r = reverse(table, tuple(D), tuple(d), budget)
    return r is not None and not r[0]


def words_equal(table: ComplementTable, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Double reversing: u ≡ v iff θ(u,v) = θ(v,u) = ε."""
    r = reverse(table, tuple(u), tuple(v), budget)
    return r is not None and not r[0] and not r[1]


class NoCommonMultiple(ValueError):
    pass


def right_lcm(table: ComplementTable, a: Word, b: Word, budget: int = DEFAULT_BUDGET) -> Word:
    r = reverse(table, tuple(a), tuple(b), budget)
    if r is None:
        raise NoCommonMultiple("no common right multiple")
    return tuple(a) + r[0]


def right_complement(table: ComplementTable, a: Word, b: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """a\\b, the element with a·(a\\b) = a∨b."""
    r = reverse(table, tuple(a), tuple(b), budget)
    if r is None:
        raise NoCommonMultiple("no common right multiple")
    return r[0]


def left_quotient(table: ComplementTable, d: Word, D: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """The word q with d·q ≡ D; requires d to left-divide D."""
    r = reverse(table, tuple(d), tuple(D), budget)
    if r is None or r[1]:
        raise ValueError("not a left divisor")
    return r[0]


# -- presentation-level convenience -----------------------------------------

@dataclass
class Reverser:
    """A presentation bundled with its right and (when available) left complements.

    Left-sided operations go through the mirror presentation on reversed words.
    """
    presentation: Presentation
    table: ComplementTable
    budget: int = DEFAULT_BUDGET
    mirror_table: ComplementTable | None = field(default=None)

    @classmethod
    def of(cls, p: Presentation, table: ComplementTable | None = None, budget: int = DEFAULT_BUDGET):
        if table is None:
            table = right_complement_table(p)
        try:
            mt = right_complement_table(mirror(p))
        except Exception:
            mt = None
        return cls(p, table, budget, mt)

    def theta(self, u, v):
        return theta(self.table, u, v, self.budget)

    def equal(self, u, v) -> bool:
        return words_equal(self.table, u, v, self.budget)

    def divides(self, d, D) -> bool:
        return left_divides(self.table, d, D, self.budget)

    def lcm(self, a, b) -> Word:
        return right_lcm(self.table, a, b, self.budget)

    def under(self, a, b) -> Word:
        return right_complement(self.table, a, b, self.budget)

    def _need_mirror(self):
        if self.mirror_table is None:
            raise NotImplementedError("mirror presentation is not right-complemented")
        return self.mirror_table

    def left_lcm(self, a, b) -> Word:
        """Least common left multiple, via the mirror."""
        mt = self._need_mirror()
        return right_lcm(mt, tuple(a)[::-1], tuple(b)[::-1], self.budget)[::-1]

    def over(self, a, b) -> Word:
        """a/b: the element with (a/b)·b = left lcm of a and b."""
        mt = self._need_mirror()
        return right_complement(mt, tuple(b)[::-1], tuple(a)[::-1], self.budget)[::-1]

    def right_divides(self, d, D) -> bool:
        mt = self._need_mirror()
        return left_divides(mt, tuple(d)[::-1], tuple(D)[::-1], self.budget)

