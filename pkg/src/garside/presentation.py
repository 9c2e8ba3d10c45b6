"""Monoid presentations: parsing, validation, mirroring and serialization.

Words are tuples of generator indices.  Index order is declaration order and
doubles as the canonical shortlex letter order.

>>> p = parse_presentation("gens: a b c\\nrel: a a = b c\\nrel: b b b = c a")
>>> p.format_word(right_complement_table(p)[0, 2])
'a a'
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]
EPSILON: Word = ()

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


class PresentationError(ValueError):
    """Malformed presentation document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotComplemented(ValueError):
    """The presentation is not right-complemented."""


@dataclass(frozen=True)
class Presentation:
    gens: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...] = ()
    name: str = ""
    # free-form lines written as '#' comments when serialized
    provenance: tuple[str, ...] = ()
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError("duplicate generator")
        for g in self.gens:
            if not _TOKEN.match(g):
                raise PresentationError(f"bad generator name {g!r}")
        n = len(self.gens)
        for lhs, rhs in self.relations:
            if not lhs or not rhs:
                raise PresentationError("relation with an empty side")
            if any(not 0 <= x < n for x in lhs + rhs):
                raise PresentationError("relation uses an unknown generator")
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.gens)})

    @property
    def rank(self) -> int:
        return len(self.gens)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PresentationError(f"undeclared generator {name!r}") from None

    def word(self, text: str | Sequence[str] | Word) -> Word:
        """Read a word given as space-separated tokens, a token list, or indices."""
        if isinstance(text, str):
            tokens = text.split()
        else:
            tokens = list(text)
        if tokens and all(isinstance(t, int) for t in tokens):
            if any(not 0 <= t < self.rank for t in tokens):
                raise PresentationError("letter index out of range")
            return tuple(tokens)
        if len(tokens) == 1 and tokens[0] in ("1", "ε") and "1" not in self._index:
            return EPSILON
        return tuple(self.index(t) for t in tokens)

    def format_word(self, w: Iterable[int], sep: str = " ", empty: str = "ε") -> str:
        w = tuple(w)
        if not w:
            return empty
        return sep.join(self.gens[x] for x in w)

    def compact(self, w: Iterable[int]) -> str:
        """Letters glued together, as in 'xyxyx'; '1' for the empty word."""
        return self.format_word(w, sep="", empty="1")


class ComplementTable:
    """Letter-level right complement: table[x, y] is the word w with x·w = y·w'.

    Missing pairs are undefined; the diagonal is always the empty word.
    """

    def __init__(self, rank: int, entries: dict[tuple[int, int], Word]):
        self.rank = rank
        self.entries = dict(entries)
        rows: list[list[Word | None]] = [[None] * rank for _ in range(rank)]
        for x in range(rank):
            rows[x][x] = EPSILON
        for (x, y), w in self.entries.items():
            if x == y:
                raise NotComplemented("diagonal entry supplied")
            rows[x][y] = tuple(w)
        self.rows = rows
        for (x, y) in self.entries:
            if (y, x) not in self.entries:
                raise NotComplemented(f"entry ({x},{y}) lacks its partner")

    def __getitem__(self, pair: tuple[int, int]) -> Word | None:
        x, y = pair
        return self.rows[x][y]

    def defined(self, x: int, y: int) -> bool:
        return self.rows[x][y] is not None

    @property
    def complete(self) -> bool:
        return all(w is not None for row in self.rows for w in row)

    def relations(self) -> list[tuple[Word, Word]]:
        """The relations x·θ(x,y) = y·θ(y,x) for x < y."""
        out = []
        for x in range(self.rank):
            for y in range(x + 1, self.rank):
                w = self.rows[x][y]
                if w is not None:
                    out.append(((x,) + w, (y,) + self.rows[y][x]))
        return out

    def __eq__(self, other):
        return isinstance(other, ComplementTable) and self.rank == other.rank and self.entries == other.entries

    def __repr__(self):
        return f"ComplementTable(rank={self.rank}, pairs={len(self.entries) // 2})"


def right_complement_table(p: Presentation) -> ComplementTable:
    entries: dict[tuple[int, int], Word] = {}
    for lhs, rhs in p.relations:
        if not lhs or not rhs:
            raise NotComplemented("ε-relation")
        x, y = lhs[0], rhs[0]
        if x == y:
            raise NotComplemented(
                f"relation {p.compact(lhs)} = {p.compact(rhs)} starts with the same letter on both sides")
        if (x, y) in entries:
            raise NotComplemented(
                f"two relations start with the letters {p.gens[min(x, y)]}, {p.gens[max(x, y)]}")
        entries[x, y] = lhs[1:]
        entries[y, x] = rhs[1:]
    return ComplementTable(p.rank, entries)


def is_right_complemented(p: Presentation) -> bool:
    try:
        right_complement_table(p)
    except NotComplemented:
        return False
    return True


def presentation_from_table(gens: Sequence[str], table: ComplementTable, name: str = "",
                            provenance: Sequence[str] = ()) -> Presentation:
    return Presentation(tuple(gens), tuple(table.relations()), name, tuple(provenance))


def mirror(p: Presentation) -> Presentation:
    rels = tuple((lhs[::-1], rhs[::-1]) for lhs, rhs in p.relations)
    return Presentation(p.gens, rels, p.name, p.provenance)


# -- text and json documents ------------------------------------------------

def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented format (or its JSON equivalent)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    name = ""
    gens: list[str] | None = None
    index: dict[str, int] = {}
    rels: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise PresentationError(f"syntax error: expected 'key: value', got {line!r}", lineno)
        if key == "monoid":
            if name or gens is not None:
                raise PresentationError("'monoid:' must come first and only once", lineno)
            name = rest.strip()
            if not _TOKEN.match(name):
                raise PresentationError(f"bad monoid name {name!r}", lineno)
        elif key == "gens":
            if gens is not None:
                raise PresentationError("second 'gens:' line", lineno)
            gens = rest.split()
            for g in gens:
                if not _TOKEN.match(g):
                    raise PresentationError(f"bad generator name {g!r}", lineno)
                if g in index:
                    raise PresentationError(f"duplicate generator {g!r}", lineno)
                index[g] = len(index)
        elif key == "rel":
            if gens is None:
                raise PresentationError("'rel:' before 'gens:'", lineno)
            lhs_text, eq, rhs_text = rest.partition("=")
            if not eq or "=" in rhs_text:
                raise PresentationError("syntax error: relation needs exactly one '='", lineno)
            sides = []
            for side in (lhs_text, rhs_text):
                toks = side.split()
                if not toks:
                    raise PresentationError("ε-relation (empty side)", lineno)
                for t in toks:
                    if t not in index:
                        raise PresentationError(f"undeclared generator {t!r}", lineno)
                sides.append(tuple(index[t] for t in toks))
            rels.append((sides[0], sides[1]))
        else:
            raise PresentationError(f"syntax error: unknown key {key!r}", lineno)
    if gens is None:
        raise PresentationError("missing 'gens:' line")
    return Presentation(tuple(gens), tuple(rels), name)


def _parse_json(text: str) -> Presentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"syntax error: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("gens"), list):
        raise PresentationError("JSON presentation needs a 'gens' array")
    lines = []
    if doc.get("name"):
        lines.append(f"monoid: {doc['name']}")
    lines.append("gens: " + " ".join(map(str, doc["gens"])))
    if len(set(doc["gens"])) != len(doc["gens"]):
        raise PresentationError("duplicate generator")
    for rel in doc.get("rels", []):
        if not (isinstance(rel, list) and len(rel) == 2):
            raise PresentationError("each relation must be a [lhs, rhs] pair")
        sides = [" ".join(s) if isinstance(s, list) else str(s) for s in rel]
        lines.append(f"rel: {sides[0]} = {sides[1]}")
    return parse_presentation("\n".join(lines) + "\n")


def serialize(p: Presentation, format: str = "text") -> str:
    if format == "json":
        doc = {"gens": list(p.gens),
               "rels": [[[p.gens[x] for x in lhs], [p.gens[x] for x in rhs]] for lhs, rhs in p.relations]}
        if p.name:
            doc = {"name": p.name, **doc}
        return json.dumps(doc, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"# {c}" for c in p.provenance]
    if p.name:
        lines.append(f"monoid: {p.name}")
    lines.append("gens: " + " ".join(p.gens))
    for lhs, rhs in p.relations:
        lines.append(f"rel: {p.format_word(lhs)} = {p.format_word(rhs)}")
    return "\n".join(lines) + "\n"


def load_presentation(path: str) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def relation_sets_equal(p: Presentation, q: Presentation) -> bool:
    """Same generators and same relations up to order and side swapping."""
    if p.gens != q.gens:
        return False
    norm = lambda rels: sorted(tuple(sorted(r)) for r in rels)
    return norm(p.relations) == norm(q.relations)


def shortlex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)
