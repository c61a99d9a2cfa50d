"""
Command-line front end.

    sdgamma vectors   --h 1,5,10,10,5,1
    sdgamma subdivide --facets-inline "[[1,2],[2,3],[1,3]]"
    sdgamma eulerian  6
    sdgamma ffk-check --f 1,3,2 --d 2
    sdgamma witness   --h 1,3,3,1 --format json
    sdgamma verify    --n-max 8 --threads 4

Input documents (``--input FILE`` or ``--input -`` for stdin) are JSON with
either a ``"facets"`` list of integer lists or an ``"h"`` list whose entries
may be ints or decimal strings.  Structured output carries ``"format": 1`` and
writes every count as a decimal string.

Exit status: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import constructions as cons
from . import eulerian as eul
from . import ffk
from . import goodness
from .complex import (
    ColoredComplex, SimplicialComplex, barycentric_subdivision, f_vector, from_facets,
    h_vector, verify_coloring,
)
from .errors import SdGammaError, TheoremRefuted
from .transforms import (
    f_from_h, g_from_h, gamma_from_symmetric, is_symmetric,
)

FORMAT_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ------------------------------------------------------------------ input

@dataclass
class JobInput:
    facets: list[list[int]] | None = None
    h: list[int] | None = None


def _json_load(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def _as_int(x, where: str) -> int:
    if isinstance(x, bool):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise InputError(f"{where}: expected an integer, got {x!r}")


def parse_int_list(text: str, source: str = "--h") -> list[int]:
    """Comma-separated integers; errors report the 1-based column."""
    out, col = [], 1
    for piece in text.split(","):
        s = piece.strip()
        try:
            out.append(int(s))
        except ValueError:
            lead = len(piece) - len(piece.lstrip())
            raise InputError(f"{source}: line 1, column {col + lead}: "
                             f"expected an integer, got {s!r}") from None
        col += len(piece) + 1
    return out


def parse_document(doc, source: str) -> JobInput:
    if not isinstance(doc, dict) or not ({"facets", "h"} & set(doc)):
        raise InputError(f"{source}: expected an object with a 'facets' or 'h' key")
    if "facets" in doc and "h" in doc:
        raise InputError(f"{source}: give either 'facets' or 'h', not both")
    if "h" in doc:
        if not isinstance(doc["h"], list):
            raise InputError(f"{source}: 'h' must be a list")
        return JobInput(h=[_as_int(x, f"{source}: h[{i}]") for i, x in enumerate(doc["h"])])
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(F, list) for F in facets):
        raise InputError(f"{source}: 'facets' must be a list of lists")
    return JobInput(facets=[[_as_int(v, f"{source}: facets[{i}]") for v in F]
                            for i, F in enumerate(facets)])


def read_input(args) -> JobInput:
    given = [x for x in (args.input, args.h, args.facets_inline) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --input, --h, --facets-inline")
    if args.h is not None:
        return JobInput(h=parse_int_list(args.h))
    if args.facets_inline is not None:
        doc = _json_load(args.facets_inline, "--facets-inline")
        return parse_document({"facets": doc}, "--facets-inline")
    if args.input == "-":
        text, source = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"{args.input}: {e.strerror}") from None
        source = args.input
    return parse_document(_json_load(text, source), source)


# ----------------------------------------------------------------- output

def _num(v: Sequence[int]) -> list[str]:
    return [str(x) for x in v]


def _tup(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def emit(doc: dict, fmt: str, text_lines: list[str], out) -> None:
    if fmt == "json":
        out.write(json.dumps({"format": FORMAT_VERSION, **doc}, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _table(rows: list[list[str]], header: list[str]) -> list[str]:
    cols = [header] + rows
    widths = [max(len(r[c]) for r in cols) for c in range(len(header))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in cols]


# --------------------------------------------------------------- commands

def _vectors_of(job: JobInput) -> tuple[list[int], list[int], int]:
    if job.facets is not None:
        c = from_facets(job.facets)
        f = list(f_vector(c))
        return f, list(h_vector(c)), len(f) - 1
    h = job.h
    if not h:
        raise InputError("h-vector must not be empty")
    d = len(h) - 1
    return list(f_from_h(h, d)), list(h), d


def cmd_vectors(args, out) -> int:
    f, h, d = _vectors_of(read_input(args))
    doc = {"command": "vectors", "f": _num(f), "h": _num(h), "g": _num(g_from_h(h))}
    lines = [f"f      = {_tup(f)}", f"h      = {_tup(h)}", f"g      = {_tup(g_from_h(h))}"]
    if is_symmetric(h, d):
        gam = gamma_from_symmetric(h, d)
        doc["gamma"] = _num(gam)
        lines.append(f"gamma  = {_tup(gam)}")
    else:
        doc["gamma"] = None
        lines.append("gamma  : h is not symmetric")
    hsd = eul.h_sd_from_h(h)
    doc["h_sd"] = _num(hsd)
    lines.append(f"h(sd)  = {_tup(hsd)}")
    try:
        gsd = eul.gamma_sd_from_h(h)
        doc["gamma_sd"] = _num(gsd)
        lines.append(f"gamma(sd) = {_tup(gsd)}")
    except SdGammaError as e:
        doc["gamma_sd"] = None
        lines.append(f"gamma(sd) : {e}")
    emit(doc, args.format, lines, out)
    return EXIT_OK


def cmd_subdivide(args, out) -> int:
    job = read_input(args)
    if job.facets is None:
        raise InputError("subdivide needs a facet list")
    c = from_facets(job.facets)
    sd = barycentric_subdivision(c)
    h = h_vector(c)
    hsd, predicted = h_vector(sd), eul.h_sd_from_h(h)
    ok = tuple(hsd) == tuple(predicted)
    doc = {"command": "subdivide", "f": _num(f_vector(c)), "h": _num(h),
           "sd_f": _num(f_vector(sd)), "sd_h": _num(hsd), "predicted_sd_h": _num(predicted),
           "sd_facets": [_num(F) for F in sd.facets], "match": ok}
    lines = [f"f(sd)            = {_tup(f_vector(sd))}",
             f"h(sd) explicit   = {_tup(hsd)}",
             f"h(sd) from h     = {_tup(predicted)}",
             f"match: {'yes' if ok else 'NO'}"]
    emit(doc, args.format, lines, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_eulerian(args, out) -> int:
    n = args.n
    if n < 1:
        raise InputError("n must be at least 1")
    if n > args.cap:
        raise InputError(f"n = {n} exceeds --cap {args.cap}")
    t = eul.table_by_recurrence(n)
    rows = [[str(j)] + [str(t(i, j)) for i in range(n)] for j in range(1, n + 1)]
    lines = [f"A(n,i,j) for n = {n} (rows j, columns i)"]
    lines += _table(rows, ["j"] + [f"i={i}" for i in range(n)])
    lines.append(f"A_{n}(t) = {eul.eulerian_poly(n)}")
    fams = [eul.gamma_nj(n, j) for j in range(1, (n + 1) // 2 + 1)]
    fams += [eul.gamma_nj(n, j, True) for j in range(1, n + 1) if 2 * j < n + 1]
    for g in fams:
        lines.append(f"{g.label} = {_tup(g.vector)}")
    doc = {"command": "eulerian", "n": n,
           "table": [[str(t(i, j)) for i in range(n)] for j in range(1, n + 1)],
           "eulerian": _num(eul.eulerian_poly(n).padded(n)),
           "gamma": {g.label: _num(g.vector) for g in fams}}
    emit(doc, args.format, lines, out)
    return EXIT_OK


def cmd_ffk_check(args, out) -> int:
    f = parse_int_list(args.f, "--f")
    res = ffk.is_ffk(f, args.d, witness=False)
    doc = {"command": "ffk-check", "f": _num(f), "d": args.d, "ffk": res.ok}
    lines = [f"{_tup(f)} is {'' if res.ok else 'not '}{args.d}-FFK"]
    if not res.ok:
        doc["face"], doc["missing"] = _num(res.face), _num(res.missing)
        lines.append(f"face {_tup(res.face)} has shadow element {_tup(res.missing)} "
                     f"outside the compressed family")
    emit(doc, args.format, lines, out)
    return EXIT_OK if res.ok else EXIT_FAIL


def witness_document(h: Sequence[int], w: ColoredComplex, gamma: Sequence[int]) -> dict:
    closure = bool(ffk.is_ffk(cons.trim(gamma), w.d, witness=False))
    return {"command": "witness", "h": _num(h), "gamma_sd": _num(gamma), "d": w.d,
            "facets": [_num(F) for F in w.complex.facets if F],
            "colors": {str(v): w.coloring[v] for v in w.complex.vertices},
            "closure": closure, "coloring_ok": verify_coloring(w)}


def load_witness(text: str) -> tuple[ColoredComplex, list[int]]:
    """Read back a structured witness document: (complex, gamma(sd))."""
    doc = _json_load(text, "witness")
    if doc.get("format") != FORMAT_VERSION:
        raise InputError(f"unsupported witness format {doc.get('format')!r}")
    facets = [[_as_int(v, "facets") for v in F] for F in doc["facets"]]
    c = from_facets(facets) if facets else SimplicialComplex(((),))
    colors = {int(v): int(c_) for v, c_ in doc["colors"].items()}
    return ColoredComplex(c, colors, int(doc["d"])), [_as_int(x, "gamma_sd") for x in doc["gamma_sd"]]


def cmd_witness(args, out) -> int:
    job = read_input(args)
    h = job.h if job.h is not None else list(h_vector(from_facets(job.facets)))
    gamma = cons.theorem_gamma(h)
    try:
        w = cons.theorem_bary_witness(h)
    except TheoremRefuted as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    doc = witness_document(h, w, gamma)
    lines = [f"gamma(sd) = {_tup(gamma)}", f"colors d = {w.d}",
             f"facets ({len([F for F in w.complex.facets if F])}):"]
    lines += ["  " + " ".join(f"{v}:{w.coloring[v]}" for v in F) for F in w.complex.facets if F]
    lines.append(f"closure test: {'pass' if doc['closure'] else 'FAIL'}; "
                 f"coloring: {'proper' if doc['coloring_ok'] else 'IMPROPER'}")
    emit(doc, args.format, lines, out)
    return EXIT_OK if doc["closure"] and doc["coloring_ok"] else EXIT_FAIL


# ------------------------------------------------------------------ verify

Job = tuple[str, str, Callable[[], tuple[bool, str]]]


def _eulerian_jobs(n_max: int) -> list[Job]:
    jobs = []

    def enum(n):
        ok = eul.table_by_recurrence(n) == eul.table_by_enumeration(n, cap=n)
        return ok, ""

    def sym(n):
        t = eul.table_by_recurrence(n)
        ok = all(t(i, j) == t(n - 1 - i, n + 1 - j) for i in range(n) for j in range(1, n + 1))
        if n >= 2:
            prev = eul.eulerian_poly(n - 1)
            ok = ok and t.poly(1) == prev and t.poly(n) == prev.shift(1)
        return ok, ""

    for n in range(1, min(n_max, 9) + 1):
        jobs.append(("recurrence-vs-enumeration", f"n={n}", lambda n=n: enum(n)))
    for n in range(1, n_max + 1):
        jobs.append(("eulerian-symmetry", f"n={n}", lambda n=n: sym(n)))
    for n in range(3, n_max + 1):
        def rec(n=n):
            rep = eul.verify_lemma_rec(n)
            bad = [f"part {c[0]} j={c[1]}" for c in rep.checks if not c[-1]]
            return rep.ok, ", ".join(bad)
        jobs.append(("gamma-recurrences", f"n={n}", rec))
    return jobs


def _rank_jobs(n_max: int) -> list[Job]:
    jobs = []
    for d in range(2, min(n_max, 6) + 1):
        def run(d=d):
            for k in range(1, d):
                for a in range(1, 51):
                    if ffk.r(d, k, a) > (k + 1) * a:
                        return False, f"k={k} a={a}"
            return True, ""
        jobs.append(("rank-inequality", f"d={d}", run))
    return jobs


def _gamma_hat_jobs(n_max: int, cap: int) -> list[Job]:
    jobs = []
    for n in range(1, min(n_max - 1, cap, 9) + 1):
        def run(n=n):
            rep = cons.check_gamma_hat(n, cap)
            return rep.ok, f"f={_tup(rep.f)}"
        jobs.append(("gamma-hat-complex", f"n={n}", run))

    def gineq():
        rep = cons.verify_gineq(n_max, insertion_max=min(n_max, 8, cap), cap=cap)
        bad = [f"n={c[0]} i={c[1]}" for c in rep.checks if not c[-1]]
        bad += [f"insertion n={n}" for n, ok in rep.insertion if not ok]
        return rep.ok, ", ".join(bad)
    jobs.append(("gamma-inequality", f"n<={n_max}", gineq))
    return jobs


def _certificate_jobs(n_max: int) -> list[Job]:
    jobs = []
    for n in range(2, n_max + 1):
        for j, primed in goodness.certificate_range(n):
            def run(n=n, j=j, primed=primed):
                rep = goodness.verify_certificate(goodness.goodness_certificate(n, j, primed))
                return rep.ok, "; ".join(rep.violations[:3])
            label = eul.gamma_nj(n, j, primed).label
            jobs.append(("goodness-certificates", label, run))
    return jobs


def verify_jobs(n_max: int, cap: int) -> list[Job]:
    return (_eulerian_jobs(n_max) + _rank_jobs(n_max)
            + _gamma_hat_jobs(n_max, cap) + _certificate_jobs(n_max))


def _run(job: Job) -> tuple[str, str, bool, str]:
    suite, item, fn = job
    try:
        ok, detail = fn()
    except SdGammaError as e:
        ok, detail = False, f"{type(e).__name__}: {e}"
    return suite, item, ok, detail


def cmd_verify(args, out) -> int:
    n_max = args.n_max
    if n_max > args.cap:
        raise InputError(f"--n-max {n_max} exceeds --cap {args.cap}")
    jobs = verify_jobs(n_max, args.cap)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    failed = [r for r in results if not r[2]]
    suites: dict[str, list[int]] = {}
    for suite, _, ok, _ in results:
        s = suites.setdefault(suite, [0, 0])
        s[0 if ok else 1] += 1
    lines = [f"{name:28s} {p:4d} passed {f:4d} failed" for name, (p, f) in suites.items()]
    lines += [f"FAIL {s} {i}: {d}" for s, i, _, d in failed]
    lines.append("all checks passed" if not failed else f"{len(failed)} check(s) failed")
    doc = {"command": "verify", "n_max": n_max,
           "results": [{"suite": s, "item": i, "ok": ok, "detail": d} for s, i, ok, d in results],
           "ok": not failed}
    emit(doc, args.format, lines, out)
    return EXIT_OK if not failed else EXIT_FAIL


# -------------------------------------------------------------------- main

def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdgamma",
                                description="gamma-vectors of barycentric subdivisions")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=_positive, default=10,
                        help="largest n for tables and permutation enumeration (default 10)")
    common.add_argument("--threads", type=_positive, default=1)
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--input", metavar="FILE", help="JSON document, or - for stdin")
    src.add_argument("--h", help="comma-separated h-vector")
    src.add_argument("--facets-inline", metavar="JSON", help='facet list, e.g. "[[1,2],[2,3]]"')

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("vectors", parents=[common, src], help="f, h, g, gamma and subdivision vectors")
    sub.add_parser("subdivide", parents=[common, src], help="explicit barycentric subdivision")
    e = sub.add_parser("eulerian", parents=[common], help="restricted Eulerian table and gamma families")
    e.add_argument("n", type=int)
    k = sub.add_parser("ffk-check", parents=[common], help="colored compression closure test")
    k.add_argument("--f", required=True, help="comma-separated f-vector")
    k.add_argument("--d", required=True, type=int, help="number of colors")
    sub.add_parser("witness", parents=[common, src], help="balanced complex realizing gamma(sd)")
    v = sub.add_parser("verify", parents=[common], help="batch identity and certificate checks")
    v.add_argument("--n-max", type=int, default=6)
    return p


COMMANDS = {
    "vectors": cmd_vectors, "subdivide": cmd_subdivide, "eulerian": cmd_eulerian,
    "ffk-check": cmd_ffk_check, "witness": cmd_witness, "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, SdGammaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
