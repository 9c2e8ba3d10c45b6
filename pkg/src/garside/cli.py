"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 a resource cap was hit,
3 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import combinators as comb
from . import trees
from .atomicity import DEFAULT_LENGTH_CAP, DEFAULT_SIZE_CAP, Truncated, Verdict
from .presentation import Presentation, PresentationError, load_presentation, serialize
from .reversing import DEFAULT_BUDGET, Diverged
from .structure import (DEFAULT_CLOSURE_CAP, DEFAULT_POWER_CAP, ClosureDiverged, NotARoot, NotGarside,
                        root_descriptor, roots, simple_closure, to_dot, to_json, verify_garside)

OK, NEGATIVE, CAP, USAGE = 0, 1, 2, 3

CAP_FLAGS = {"budget": DEFAULT_BUDGET, "closure-cap": DEFAULT_CLOSURE_CAP,
             "length-cap": DEFAULT_LENGTH_CAP, "size-cap": DEFAULT_SIZE_CAP,
             "power-cap": DEFAULT_POWER_CAP}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(p: Presentation, w) -> str:
    """Glue letters when every generator is one character, else separate by spaces."""
    if all(len(g) == 1 for g in p.gens):
        return p.compact(w)
    return p.format_word(w, empty="1")


def env_caps(environ=None) -> dict[str, int]:
    """Parse GARSIDE_CAPS, e.g. "budget=1000,closure-cap=500" (leading dashes allowed)."""
    raw = (environ if environ is not None else os.environ).get("GARSIDE_CAPS", "")
    out = {}
    for item in filter(None, (s.strip() for s in raw.split(","))):
        key, sep, val = item.lstrip("-").partition("=")
        if not sep:
            key, _, val = key.partition(" ")
        key = key.strip()
        if key not in CAP_FLAGS:
            raise UsageError(f"GARSIDE_CAPS: unknown cap {key!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"GARSIDE_CAPS: {key} needs an integer") from None
    return out


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    for flag in CAP_FLAGS:
        common.add_argument(f"--{flag}", type=_positive, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON document instead of text")
    common.add_argument("--dot", metavar="PATH", default=argparse.SUPPRESS,
                        help="write the simple lattice as DOT")

    ap = _Parser(prog="garside", parents=[common],
                 description="Garside structures from right-complemented presentations.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("check", parents=[common], help="run every Garside check")
    s.add_argument("file")
    s = sub.add_parser("simples", parents=[common], help="count and list the simples")
    s.add_argument("file")
    s = sub.add_parser("roots", parents=[common], help="q-th roots of the p-th Garside power")
    s.add_argument("file")
    s.add_argument("--power", type=_positive, required=True)
    s.add_argument("--degree", type=_positive, required=True)
    s = sub.add_parser("exponent", parents=[common], help="least (p, q) with h^q = Δ^p")
    s.add_argument("file")
    s.add_argument("--element", required=True)
    s = sub.add_parser("amalgam", parents=[common], help="cyclic amalgamated free product")
    s.add_argument("file1")
    s.add_argument("--root", action="append", required=True, help="given once per file, in order")
    s.add_argument("file2")
    s.add_argument("--no-root-check", action="store_true")
    s = sub.add_parser("hnn", parents=[common], help="stuffed cyclic HNN extension")
    s.add_argument("file")
    s.add_argument("--h1", required=True)
    s.add_argument("--h2", required=True)
    s.add_argument("--stable", default="t")
    s = sub.add_parser("tree", parents=[common], help="tree products of infinite cyclic groups")
    s.add_argument("file")
    s.add_argument("--exponents", action="store_true")
    s.add_argument("--hnn", nargs=2, metavar=("V0", "V1"))
    s = sub.add_parser("pietrowski", parents=[common], help="validate and build Pietrowski data")
    s.add_argument("file")
    s = sub.add_parser("bs", parents=[common], help="Baumslag-Solitar monoids")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--unstuffed", action="store_true", help="use ⟨s,t : s^m t = t s^m⟩ as given")
    return ap


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream
        self.doc: dict = {}

    def line(self, text: str = ""):
        if not self.as_json:
            print(text, file=self.stream)

    def put(self, **kw):
        self.doc.update(kw)


def _report(out: _Out, rep, p: Presentation, dot_path):
    out.line(rep.summary())
    for name, ok, why in rep.checks:
        out.line(f"  {name}: {'ok' if ok else 'FAILED'}" + (f" ({why})" if why else ""))
    out.put(garside=rep.ok, checks=[{"name": n, "ok": ok, "detail": why} for n, ok, why in rep.checks])
    if rep.atomicity is not None:
        out.put(atomicity=rep.atomicity.verdict.value)
        wit = rep.atomicity.witness
        if wit is not None:
            steps = [[s.position, s.relation, s.forward] for s in wit.steps]
            unit = "step" if len(steps) == 1 else "steps"
            out.line(f"witness: {fmt(p, wit.start)} ≡ {fmt(p, wit.result)} in {len(steps)} rewrite {unit}")
            out.put(witness={"start": fmt(p, wit.start), "result": fmt(p, wit.result), "steps": steps})
    if rep.ok:
        gs = rep.structure
        out.line(f"delta: {fmt(p, gs.delta)}")
        out.put(count=gs.count, delta=fmt(p, gs.delta))
        _dot(gs, dot_path)
        return OK
    if rep.failure_kind == "cap":
        out.put(cap_hit=True)
        return CAP
    return NEGATIVE


def _dot(gs, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(to_dot(gs))


def _verify(c, caps):
    return verify_garside(c.presentation, c.table, caps["closure-cap"], caps["budget"],
                          length_cap=caps["length-cap"], size_cap=caps["size-cap"])


def _factor(path, caps):
    p = load_presentation(path)
    return comb.Factor.of(p, budget=caps["budget"])


def _cmd_check(a, caps, out):
    p = load_presentation(a.file)
    rep = verify_garside(p, None, caps["closure-cap"], caps["budget"],
                         length_cap=caps["length-cap"], size_cap=caps["size-cap"])
    return _report(out, rep, p, a.dot)


def _cmd_simples(a, caps, out):
    p = load_presentation(a.file)
    gs = simple_closure(p, None, caps["closure-cap"], caps["budget"])
    out.line(f"simples: {gs.count}")
    out.line(f"delta: {fmt(p, gs.delta)}")
    out.line(f"central exponent: {gs.central_exponent}")
    for w in gs.simples:
        out.line(fmt(p, w) if w else "1")
    doc = to_json(gs)
    out.put(count=gs.count, **doc)
    _dot(gs, a.dot)
    return OK


def _cmd_roots(a, caps, out):
    p = load_presentation(a.file)
    gs = simple_closure(p, None, caps["closure-cap"], caps["budget"])
    found = roots(gs, a.power, a.degree, caps["closure-cap"])
    out.line(f"roots: {len(found)}")
    for w in found:
        out.line(fmt(p, w))
    out.put(count=len(found), roots=[fmt(p, w) for w in found])
    return OK


def _cmd_exponent(a, caps, out):
    p = load_presentation(a.file)
    gs = simple_closure(p, None, caps["closure-cap"], caps["budget"])
    h = p.word(a.element)
    try:
        d = root_descriptor(gs, h, caps["power-cap"])
    except NotARoot as exc:
        out.line(f"not a root: {exc}")
        out.put(root=False)
        return NEGATIVE
    out.line(f"exponent: {d.degree} ({fmt(p, h)}^{d.degree} = Δ^{d.delta_power})")
    out.put(root=True, exponent=d.degree, delta_power=d.delta_power)
    return OK


def _cmd_amalgam(a, caps, out):
    if len(a.root) != 2:
        raise UsageError("amalgam needs exactly two --root options")
    left, right = _factor(a.file1, caps), _factor(a.file2, caps)
    h1 = left.presentation.word(a.root[0])
    h2 = right.presentation.word(a.root[1])
    try:
        c = comb.amalgam(left, h1, right, h2, budget=caps["budget"], check_roots=not a.no_root_check)
    except comb.RootPreconditionFailed as exc:
        out.line(f"Garside: no (root precondition: {exc})")
        out.put(garside=False, checks=[{"name": "root precondition", "ok": False, "detail": str(exc)}])
        return NEGATIVE
    for note in c.notes:
        out.line(f"note: {note}")
    return _report(out, _verify(c, caps), c.presentation, a.dot)


def _cmd_hnn(a, caps, out):
    base = _factor(a.file, caps)
    p = base.presentation
    h1, h2 = p.word(a.h1), p.word(a.h2)
    hyp = comb.hnn_hypothesis_check(base, h1, h2)
    for w in hyp.warnings:
        out.line(f"warning: {w}")
    out.put(warnings=list(hyp.warnings))
    c = comb.hnn_stuffed(base, h1, h2, a.stable, caps["budget"])
    return _report(out, _verify(c, caps), c.presentation, a.dot)


def _cmd_tree(a, caps, out):
    t = trees.load_tree(a.file)
    code = OK
    if a.exponents:
        ex = trees.vertex_exponents(t)
        for v in t.vertices:
            out.line(f"ε({v}) = {ex[v]}")
        out.put(exponents=ex)
    if a.hnn:
        v0, v1 = a.hnn
        for v in (v0, v1):
            if v not in t.vertices:
                raise UsageError(f"unknown vertex {v!r}")
        ok = trees.hnn_over_tree_garside(t, v0, v1)
        e0, e1 = trees.vertex_exponent(t, v0), trees.vertex_exponent(t, v1)
        out.line(f"Garside: yes (ε={e0}={e1})" if ok else f"Garside: no (ε={e0}≠{e1})")
        out.put(garside=ok, exponents_pair=[e0, e1])
        code = OK if ok else NEGATIVE
    if not a.exponents and not a.hnn:
        c = trees.tree_product_presentation(t, caps["budget"])
        out.line(serialize(c.presentation).rstrip("\n"))
        code = _report(out, _verify(c, caps), c.presentation, a.dot)
    return code


def _cmd_pietrowski(a, caps, out):
    d = trees.load_pietrowski(a.file)
    rep = trees.pietrowski_validate(d)
    if not rep.ok:
        out.line("Pietrowski data: invalid")
        for f in rep.failures:
            out.line(f"  {f}")
        out.put(valid=False, failures=list(rep.failures))
        return NEGATIVE
    out.put(valid=True)
    c = trees.pietrowski_build(d, budget=caps["budget"])
    out.line(serialize(c.presentation).rstrip("\n"))
    return _report(out, _verify(c, caps), c.presentation, a.dot)


def _cmd_bs(a, caps, out):
    if a.unstuffed:
        p = comb.baumslag_solitar(a.m)
        out.line(serialize(p).rstrip("\n"))
        rep = verify_garside(p, None, caps["closure-cap"], caps["budget"],
                             length_cap=caps["length-cap"], size_cap=caps["size-cap"])
        return _report(out, rep, p, a.dot)
    c = comb.stuffed_baumslag_solitar(a.m)
    out.line(serialize(c.presentation).rstrip("\n"))
    return _report(out, _verify(c, caps), c.presentation, a.dot)


COMMANDS = {"check": _cmd_check, "simples": _cmd_simples, "roots": _cmd_roots,
            "exponent": _cmd_exponent, "amalgam": _cmd_amalgam, "hnn": _cmd_hnn,
            "tree": _cmd_tree, "pietrowski": _cmd_pietrowski, "bs": _cmd_bs}


def run(argv=None, stdout=None, stderr=None, environ=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        caps = dict(CAP_FLAGS)
        caps.update(env_caps(environ))
        for flag in CAP_FLAGS:
            attr = flag.replace("-", "_")
            if hasattr(args, attr):
                caps[flag] = getattr(args, attr)
        args.dot = getattr(args, "dot", None)
        out = _Out(getattr(args, "json", False), stdout)
        out.put(command=args.command)
        code = COMMANDS[args.command](args, caps, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return USAGE
    except (PresentationError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return USAGE
    except (Diverged, ClosureDiverged, Truncated) as exc:
        print(f"cap reached: {exc}", file=stderr)
        return CAP
    except (NotGarside, comb.ConstructionError, ValueError) as exc:
        print(f"Garside: no ({exc})", file=stderr)
        return NEGATIVE
    if out.as_json:
        out.put(exit_code=code)
        json.dump(out.doc, stdout, indent=2, sort_keys=True, ensure_ascii=False)
        stdout.write("\n")
    return code


def main():
    sys.exit(run())
