"""Brute-force reference computations that never touch word reversing.

Everything here works on explicit equivalence classes, built by applying
relations in both directions at every position until nothing new appears.
"""
from __future__ import annotations

from itertools import product

from garside.atomicity import equivalence_class

LENGTH_CAP = 64
SIZE_CAP = 2 * 10**5


class ClassIndex:
    """Assigns one integer per equivalence class, enumerating classes lazily."""

    def __init__(self, p, length_cap=LENGTH_CAP, size_cap=SIZE_CAP):
        self.p = p
        self.length_cap = length_cap
        self.size_cap = size_cap
        self.of: dict[tuple, int] = {}
        self.reps: list[tuple] = []
        self.members: list[frozenset] = []

    def __call__(self, w) -> int:
        w = tuple(w)
        k = self.of.get(w)
        if k is not None:
            return k
        cls = equivalence_class(self.p, w, self.length_cap, self.size_cap)
        if cls.truncated:
            raise RuntimeError(f"oracle class of {w} is truncated")
        k = len(self.reps)
        self.reps.append(cls.representative)
        self.members.append(cls.members)
        for m in cls.members:
            self.of[m] = k
        return k


def left_divisor_classes(idx: ClassIndex, w) -> set[int]:
    """Classes of all prefixes of all words equivalent to w."""
    out = set()
    for m in idx.members[idx(w)]:
        for i in range(len(m) + 1):
            out.add(idx(m[:i]))
    return out


def right_divisor_classes(idx: ClassIndex, w) -> set[int]:
    out = set()
    for m in idx.members[idx(w)]:
        for i in range(len(m) + 1):
            out.add(idx(m[i:]))
    return out


def divisor_count(p, w, **caps) -> int:
    return len(left_divisor_classes(ClassIndex(p, **caps), w))


def covering_edges(p, w, **caps) -> set[tuple[tuple, tuple, int]]:
    """(s, s·a, a) for left divisors s, s·a of w, as shortlex representatives."""
    idx = ClassIndex(p, **caps)
    divs = left_divisor_classes(idx, w)
    out = set()
    for k in divs:
        s = idx.reps[k]
        for a in range(p.rank):
            j = idx(s + (a,))
            if j in divs:
                out.add((s, idx.reps[j], a))
    return out


def equal_by_classes(p, u, v, **caps) -> bool:
    idx = ClassIndex(p, **caps)
    return idx(u) == idx(v)


def all_words(rank: int, max_len: int):
    for n in range(max_len + 1):
        yield from product(range(rank), repeat=n)
