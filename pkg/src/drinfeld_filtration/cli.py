"""Command line front end: ``report`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Sequence

from . import __version__
from .errors import FeasibilityError, NotACharacterError, UncertifiedError
from .filtration import filtration_report, psi_set
from .localcoh import kernel_by_degree

SCHEMA_ID = "drinfeld-filtration-report/1"
DEFAULT_POLE_BOUND = 2
_NUM = re.compile(r"^-?\d+$")


class UsageError(Exception):
    pass


def parse_weight(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or not all(_NUM.match(p) for p in parts):
        raise UsageError(f"--lambda expects comma-separated integers, got {text!r}")
    return tuple(int(p) for p in parts)


def _finite_level(d: int, p: int, n: int) -> dict[str, Any]:
    from .building import enumerate_submodules, inclusion_exclusion_dim

    out: dict[str, Any] = {"p": p, "n": n}
    out["steinberg_dims"] = [{"j": j, "dimension": inclusion_exclusion_dim(p, d, j)} for j in range(1, d + 1)]
    out["poset_sizes"] = {
        "T": len(enumerate_submodules(p, n, d + 1, "T")),
        "T_free": len(enumerate_submodules(p, n, d + 1, "T_free")),
    }
    return out


def build_report(d: int, lam: Sequence[int], pole_bound: int = DEFAULT_POLE_BOUND,
                 p: int | None = None, n: int | None = None) -> dict[str, Any]:
    rep = filtration_report(d, lam)
    coh = rep.cohomology
    subs = []
    for s in rep.subquotients:
        alg = None
        if s.algebraic_part is not None:
            a = s.algebraic_part
            alg = {"tag": a.tag, "kind": "infinite", "parabolic": list(a.parabolic),
                   "coefficient_dim": a.coefficient_dim}
        ana = s.analytic_part
        k = ana.kernel.k
        try:
            ch = ana.kernel.character(pole_bound)
            kernel = {"status": "certified",
                      "by_degree": [[deg, m] for deg, m in sorted(kernel_by_degree(ch, k).items())]}
        except (NotACharacterError, UncertifiedError) as exc:
            kernel = {"status": f"unavailable: {exc}", "by_degree": []}
        kernel = {"support_index": k, "bound": pole_bound, **kernel}
        subs.append({
            "j": s.j,
            "parabolic": list(s.parabolic.blocks),
            "algebraic_part": alg,
            "analytic_part": {
                "kind": "infinite",
                "steinberg_tag": ana.steinberg_tag,
                "support_index": ana.module_index_p_picture,
                "psi": [list(w) for w in sorted(psi_set(s.j, d, rep.lam), reverse=True)],
                "n_module": [{"highest_weight": list(m.weight),
                              "block_weights": [list(b) for b in m.block_weights],
                              "dimension": m.dimension, "multiplicity": m.multiplicity}
                             for m in ana.module.summands],
                "n_dimension": ana.module.total_dimension,
                "kernel": kernel,
            },
        })
    doc: dict[str, Any] = {
        "schema": SCHEMA_ID,
        "tool": {"name": "drinfeld-filtration", "version": __version__},
        "input": {"d": d, "lambda": list(rep.lam), "pole_bound": pole_bound},
        "i0": rep.i0,
        "case": rep.case,
        "cohomology": {"present": coh.present, "degree": coh.degree,
                       "highest_weight": None if coh.highest_weight is None else list(coh.highest_weight),
                       "dimension": coh.dimension},
        "floor_dim": rep.floor_dim,
        "subquotients": subs,
        "notes": [
            "psi and n_module weights have blocks of sizes (d+1-j, j)",
            "kernel masses are graded by the sum of the first support_index+1 coordinates "
            "and certified up to the minimal degree plus bound",
        ],
    }
    if p is not None:
        doc["finite_level"] = _finite_level(d, p, 1 if n is None else n)
    return doc


def _w(v: Sequence[int] | None) -> str:
    return "-" if v is None else "(" + ",".join(str(x) for x in v) + ")"


def render_text(doc: dict[str, Any]) -> str:
    inp, coh = doc["input"], doc["cohomology"]
    lines = [
        f"schema {doc['schema']}",
        f"tool {doc['tool']['name']} {doc['tool']['version']}",
        f"input d={inp['d']} lambda={_w(inp['lambda'])} pole_bound={inp['pole_bound']}",
        f"i0 {doc['i0']} {doc['case']}",
        f"cohomology present={str(coh['present']).lower()} degree={'-' if coh['degree'] is None else coh['degree']} "
        f"highest_weight={_w(coh['highest_weight'])} dimension={coh['dimension']}",
        f"floor_dim {doc['floor_dim']}",
    ]
    for s in doc["subquotients"]:
        a, an = s["algebraic_part"], s["analytic_part"]
        lines.append(f"subquotient j={s['j']} parabolic={_w(s['parabolic'])}")
        if a is None:
            lines.append("  algebraic none")
        else:
            lines.append(f"  algebraic {a['tag']} {a['kind']} parabolic={_w(a['parabolic'])} "
                         f"coefficient_dim={a['coefficient_dim']}")
        lines.append(f"  analytic {an['kind']} {an['steinberg_tag']} support_index={an['support_index']}")
        lines.append("  psi " + " ".join(_w(w) for w in an["psi"]))
        for m in an["n_module"]:
            lines.append(f"  n_summand {_w(m['highest_weight'])} blocks={'|'.join(_w(b) for b in m['block_weights'])} "
                         f"dimension={m['dimension']} multiplicity={m['multiplicity']}")
        lines.append(f"  n_dimension {an['n_dimension']}")
        k = an["kernel"]
        lines.append(" ".join([f"  kernel support_index={k['support_index']} bound={k['bound']} status={k['status']}"]
                              + [f"{s_}:{m}" for s_, m in k["by_degree"]]))
    if "finite_level" in doc:
        f = doc["finite_level"]
        lines.append(f"finite_level p={f['p']} n={f['n']} T={f['poset_sizes']['T']} T_free={f['poset_sizes']['T_free']}")
        for e in f["steinberg_dims"]:
            lines.append(f"  steinberg j={e['j']} dimension={e['dimension']}")
    for note in doc["notes"]:
        lines.append(f"note {note}")
    return "\n".join(lines) + "\n"


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # "--lambda -2,1,1" would otherwise be read as an option
    out, it = [], iter(argv)
    for a in it:
        if a == "--lambda":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--lambda={nxt}")
        else:
            out.append(a)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 as well; keep the message format ours
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drinfeld-filtration", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    rep = sub.add_parser("report", help="filtration report for one weight")
    rep.add_argument("--d", type=int, required=True)
    rep.add_argument("--lambda", dest="lam", required=True, help="comma-separated integers")
    rep.add_argument("--pole-bound", type=int, default=DEFAULT_POLE_BOUND)
    rep.add_argument("--p", type=int, default=None, help="prime for the finite-level section")
    rep.add_argument("--n", type=int, default=None, help="level for the finite-level section (default 1)")
    rep.add_argument("--format", choices=("json", "text"), default="text")
    ver = sub.add_parser("verify", help="run property suites")
    ver.add_argument("--suite", default="all",
                     choices=("weights", "bott", "pieri", "filtration", "localcoh", "building", "all"))
    ver.add_argument("--size", choices=("smoke", "desk"), default="smoke")
    ver.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _run_report(args: argparse.Namespace) -> int:
    lam = parse_weight(args.lam)
    if args.d < 1:
        raise UsageError("--d must be positive")
    if args.pole_bound < 0:
        raise UsageError("--pole-bound must be nonnegative")
    if args.n is not None and args.p is None:
        raise UsageError("--n needs --p")
    if args.n is not None and args.n < 1:
        raise UsageError("--n must be positive")
    doc = build_report(args.d, lam, args.pole_bound, args.p, args.n)
    sys.stdout.write(dump_json(doc) if args.format == "json" else render_text(doc))
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    from .suites import run_suites

    results = run_suites(args.suite, args.size)
    ok = all(r.passed for r in results)
    if args.format == "json":
        sys.stdout.write(dump_json({
            "suite": args.suite, "size": args.size, "passed": ok,
            "checks": [{"suite": r.suite, "name": r.name, "passed": r.passed,
                        "comparisons": r.comparisons, "detail": r.detail} for r in results],
        }))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            tail = f" {r.detail}" if r.detail else ""
            sys.stdout.write(f"{status} {r.suite}: {r.name} ({r.comparisons} comparisons){tail}\n")
        total = sum(r.comparisons for r in results)
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'} {len(results)} checks, {total} comparisons\n")
    for r in results:
        if not r.passed:
            print(f"{r.suite}: {r.name}: {r.detail}", file=sys.stderr)
    return 0 if ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = make_parser().parse_args(_normalize_argv(argv))
        if args.command is None:
            raise UsageError("a command is required: report or verify")
        if args.command == "report":
            return _run_report(args)
        return _run_verify(args)
    except (UsageError, ValueError, FeasibilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
