"""Command-line front end.

    quadghw hierarchy --p 3 --m 3 --form identity --a 0 --method all
    quadghw verify --p 3 --m 3,4
    quadghw search --p 3 --m 4 --form identity --task selfdual

Exit codes: 0 success/agreement, 1 usage or precondition error, 2 when
methods disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from typing import Sequence

from . import linalg
from .code import (
    DimensionError,
    UnusableCodeError,
    WeightHierarchy,
    build_code,
    code_dimension,
    hierarchy,
)
from .field import FieldSpec, parse_modulus, smallest_nonresidue
from .formulas import FormulaPreconditionError, ghw_closed_form, prop1_count
from .quadform import QuadraticForm, classify, evaluate, parse_form, rank, restrict, standard_forms
from .search import NotFoundError, find_totally_isotropic, self_dual_subspace
from .subspace import all_subspaces, members

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2
GUARDRAIL = 729
METHODS = ("wei", "lemma1", "formula")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _spec(args) -> FieldSpec:
    modulus = parse_modulus(args.modulus) if args.modulus else ()
    return FieldSpec(args.p, args.m, modulus)


def _params(spec: FieldSpec, form: str, a: int | None) -> dict:
    out = {"p": spec.p, "m": spec.m, "modulus": list(spec.modulus), "form": form}
    if a is not None:
        out["a"] = a
    return out


def compute_hierarchies(f: QuadraticForm, a: int, methods: Sequence[str], jobs: int = 1) -> dict:
    """Run the requested methods; returns an ordered report dict.

    Raises DimensionError, UnusableCodeError or FormulaPreconditionError.
    """
    cls = classify(f, a)
    code = build_code(f, a)
    dim = code_dimension(code)
    results: dict[str, list[int]] = {}
    timings: dict[str, float] = {}
    for method in methods:
        t0 = time.perf_counter()
        if method == "formula":
            results[method] = list(ghw_closed_form(f.p, f.m, cls.epsilon, a).values)
        else:
            results[method] = list(hierarchy(code, method, jobs).values)
        timings[method] = round((time.perf_counter() - t0) * 1000, 3)
    values = list(results.values())
    return {
        "theorem": cls.theorem,
        "n": code.n,
        "dimension": dim,
        "hierarchy": results,
        "agreement": all(v == values[0] for v in values),
        "timings": timings,
    }


def cmd_hierarchy(args) -> int:
    spec = _spec(args)
    f = parse_form(spec, args.form)
    a = args.a % spec.p
    if rank(f) != spec.m:
        raise UsageError(f"form {args.form} is degenerate (rank {rank(f)} < {spec.m})")
    methods = METHODS if args.method == "all" else (args.method,)
    params = _params(spec, args.form, a)
    try:
        res = compute_hierarchies(f, a, methods, args.jobs)
    except DimensionError as exc:
        _emit({"params": params, "error": {"type": "dimension", "dimension": exc.dimension, "m": exc.m,
                                            "message": str(exc)}})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormulaPreconditionError as exc:
        _emit({"params": params, "error": {"type": "precondition", "message": str(exc)}})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnusableCodeError as exc:
        _emit({"params": params, "error": {"type": "empty", "message": str(exc)}})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "m", "form", "a", "theorem", "r", "d_r", "method"])
        for method, vals in res["hierarchy"].items():
            for r, d in enumerate(vals, start=1):
                w.writerow([spec.p, spec.m, args.form, a, res["theorem"], r, d, method])
        sys.stdout.write(buf.getvalue())
    else:
        _emit({
            "params": params,
            "theorem": res["theorem"],
            "n": res["n"],
            "dimension": res["dimension"],
            "hierarchy": res["hierarchy"],
            "agreement": res["agreement"],
            "timings_ms": res["timings"] if args.timings else {},
        })
    if not res["agreement"]:
        print("error: methods disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _random_invertible(rng: random.Random, p: int, m: int) -> list[list[int]]:
    while True:
        mat = [[rng.randrange(p) for _ in range(m)] for _ in range(m)]
        if linalg.det(mat, p):
            return mat


def random_forms(spec: FieldSpec, per_class: int, seed: int) -> list[str]:
    """Seeded congruent copies of diag(1,..,1) and diag(1,..,1,g), as gram descriptors."""
    p, m = spec.p, spec.m
    rng = random.Random(f"{seed}:{p}:{m}")
    out = []
    for last in (1, smallest_nonresidue(p)):
        d = [[(1 if i < m - 1 else last) if i == j else 0 for j in range(m)] for i in range(m)]
        for _ in range(per_class):
            mm = _random_invertible(rng, p, m)
            g = linalg.matmul(linalg.matmul(linalg.transpose(mm), d, p), mm, p)
            out.append("gram:" + ",".join(str(v) for row in g for v in row))
    return out


def _verify_cell(f: QuadraticForm, desc: str, a: int, jobs: int) -> dict:
    p, m = f.p, f.m
    cell = {"p": p, "m": m, "form": desc, "a": a}
    methods = METHODS if m >= 3 else ("wei", "lemma1")
    try:
        res = compute_hierarchies(f, a, methods, jobs)
    except UnusableCodeError:
        return {**cell, "status": "empty"}
    except DimensionError as exc:
        return {**cell, "status": "degenerate", "dimension": exc.dimension}
    violations = []
    for vals in res["hierarchy"].values():
        violations += WeightHierarchy(tuple(vals)).violations(res["n"])
    ok = res["agreement"] and not violations
    return {**cell, "status": "agree" if ok else "disagree", "theorem": res["theorem"], "n": res["n"],
            "hierarchy": res["hierarchy"], "violations": sorted(set(violations))}


def _verify_prop1(f: QuadraticForm) -> int:
    """Number of subspace/level pairs where the count formula misses."""
    misses = 0
    for h in all_subspaces(f.p, f.m):
        r, sign = restrict(f, h)
        counts = [0] * f.p
        for v in members(h):
            counts[evaluate(f, v)] += 1
        misses += sum(counts[a] != prop1_count(h.dim, r, sign, a, f.p) for a in range(f.p))
    return misses


def _verify_search(f: QuadraticForm) -> list[str]:
    failures = []
    for r in range(1, (f.m + 1) // 2):
        try:
            find_totally_isotropic(f, r)
        except Exception as exc:  # noqa: BLE001 - every failure is reported
            failures.append(f"isotropic r={r}: {exc}")
    if f.m % 2 == 0:
        try:
            self_dual_subspace(f)
        except Exception as exc:  # noqa: BLE001
            failures.append(f"selfdual: {exc}")
    return failures


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_verify(args) -> int:
    grid = [(p, m) for p in args.p for m in args.m]
    for p, m in grid:
        if p**m > GUARDRAIL and not args.force:
            raise UsageError(f"p^m = {p}^{m} = {p**m} exceeds {GUARDRAIL}; pass --force to run anyway")
    cells, prop1, search = [], [], []
    for p, m in grid:
        spec = FieldSpec(p, m)
        forms = dict(standard_forms(spec))
        for desc in random_forms(spec, args.forms, args.seed):
            forms[desc] = parse_form(spec, desc)
        for desc, f in forms.items():
            print(f"verify p={p} m={m} form={desc}", file=sys.stderr)
            for a in range(p):
                cells.append(_verify_cell(f, desc, a, args.jobs))
            if m <= 4:
                prop1.append({"p": p, "m": m, "form": desc, "misses": _verify_prop1(f)})
            search.append({"p": p, "m": m, "form": desc, "failures": _verify_search(f)})
    disagree = sum(c["status"] == "disagree" for c in cells)
    skipped = sum(c["status"] in ("empty", "degenerate") for c in cells)
    bad_prop1 = sum(e["misses"] for e in prop1)
    bad_search = sum(len(e["failures"]) for e in search)
    ok = not (disagree or bad_prop1 or bad_search)
    _emit({
        "params": {"p": args.p, "m": args.m, "forms": args.forms, "seed": args.seed},
        "cells": cells,
        "prop1": prop1,
        "search": search,
        "summary": {"cells": len(cells), "agree": len(cells) - disagree - skipped, "disagree": disagree,
                    "skipped": skipped, "prop1_misses": bad_prop1, "search_failures": bad_search},
        "agreement": ok,
    })
    return EXIT_OK if ok else EXIT_DISAGREE


# -- search ------------------------------------------------------------------

_SPACE_NAMES = {1: "lines", 2: "planes"}


def cmd_search(args) -> int:
    spec = _spec(args)
    f = parse_form(spec, args.form)
    if rank(f) != spec.m:
        raise UsageError(f"form {args.form} is degenerate")
    task, _, arg = args.task.partition(":")
    if task == "isotropic":
        try:
            r = int(arg)
        except ValueError:
            raise UsageError(f"bad task {args.task!r}: expected isotropic:<r>") from None
        try:
            h = find_totally_isotropic(f, r)
        except NotFoundError as exc:
            print(f"none ({exc})")
            return EXIT_OK
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(h)
        return EXIT_OK
    if task == "selfdual" and not arg:
        if spec.m % 2:
            raise UsageError(f"self-dual subspaces need even m, got m={spec.m}")
        res = self_dual_subspace(f, exhaustive=True if args.exhaustive else None)
        if res.exists:
            print(res.witness)
        elif res.certification == "exhaustive":
            s = spec.m // 2
            name = _SPACE_NAMES.get(s, f"{s}-dimensional subspaces")
            print(f"none (exhaustive over {res.checked} {name})")
        else:
            print("none (sign condition)")
        return EXIT_OK
    raise UsageError(f"bad task {args.task!r}: expected isotropic:<r> or selfdual")


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadghw", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--form", default="identity",
                        help="identity | diag:c1,..,cm | gram:row-major | trace:<gamma encoding>")
        sp.add_argument("--modulus", help="ascending-degree coefficients, e.g. 1,0,1")

    h = sub.add_parser("hierarchy", help="weight hierarchy of one code")
    field_args(h)
    h.add_argument("--a", type=int, required=True)
    h.add_argument("--method", choices=(*METHODS, "all"), default="all")
    h.add_argument("--jobs", type=int, default=1)
    h.add_argument("--out", choices=("json", "csv"), default="json")
    h.add_argument("--timings", action="store_true", help="fill timings_ms (output no longer byte-stable)")
    h.set_defaults(func=cmd_hierarchy)

    v = sub.add_parser("verify", help="cross-check all methods over a parameter grid")
    v.add_argument("--p", type=_int_list, default=[3])
    v.add_argument("--m", type=_int_list, default=[3, 4])
    v.add_argument("--forms", type=int, default=0, help="extra seeded random forms per sign class")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--force", action="store_true", help=f"allow p^m > {GUARDRAIL}")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="isotropic or self-dual subspace witnesses")
    field_args(s)
    s.add_argument("--task", required=True, help="isotropic:<r> | selfdual")
    s.add_argument("--exhaustive", action="store_true", help="certify non-existence by exhaustion for any m")
    s.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
