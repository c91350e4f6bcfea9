"""
Command-line interface.

Exit codes: 0 success, 1 semantic failure (not a solution, no folding,
theorem check failed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .documents import load_solution, relations_document, solution_document
from .enumeration import MAX_EXHAUSTIVE_N, census_lines, enumerate_solutions
from .errors import FoldingError, ReversingBudgetError, SolutionError, TheoremViolation
from .folding import (
    DEFAULT_DEPTH,
    find_foldings,
    find_strong_foldings,
    folding_for_partition,
    verify_theorem_B,
)
from .garside import build_lattice, garside_failures
from .parabolic import analysis_report, verify_theorem_A
from .solution import (
    check_qybe,
    is_braided,
    is_involutive,
    is_nondegenerate,
    is_symmetric,
    presentation_of,
    require_solution,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class NotASolution(Exception):
    pass


def _render_text(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            f"{pad}-\n{_render_text(v, indent + 1)}" if isinstance(v, (dict, list)) and not _is_flat(v)
            else f"{pad}- {json.dumps(v)}"
            for v in obj
        )
    return f"{pad}{json.dumps(obj)}"


def _is_flat(val) -> bool:
    if isinstance(val, dict):
        return False
    return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _is_flat(v)) for v in val)


def _emit(args, payload, text: Optional[str] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text if text is not None else _render_text(payload))


def _read_input(args):
    if args.inline is not None and args.path is not None:
        raise UsageError("give either a path or --inline, not both")
    if args.inline is not None:
        return args.inline
    if args.path is None:
        raise UsageError("no input: give a path or --inline")
    try:
        return Path(args.path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _load(args, require: bool = True):
    S = load_solution(_read_input(args))
    if require:
        try:
            require_solution(S)
        except SolutionError as exc:
            raise NotASolution(str(exc)) from None
    return S


def _budget(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("YBX_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"YBX_BUDGET={env!r} is not an integer") from None
    return None


def _lattice(args, S):
    return build_lattice(S, _budget(args))


def cmd_check(args) -> int:
    S = _load(args, require=False)
    report = {
        "nondegenerate": is_nondegenerate(S),
        "involutive": is_involutive(S),
        "braided": is_braided(S),
        "symmetric": is_symmetric(S),
        **check_qybe(S),
    }
    _emit(args, report)
    return EXIT_OK if report["symmetric"] and report["nondegenerate"] else EXIT_FAIL


def cmd_analyze(args) -> int:
    S = _load(args)
    _emit(args, analysis_report(_lattice(args, S)))
    return EXIT_OK


def cmd_presentation(args) -> int:
    R = presentation_of(_load(args))
    _emit(args, relations_document(R), str(R))
    return EXIT_OK


def parse_partition(spec: str) -> list[list[int]]:
    """``"1,2,3,4|5"`` -> ``[[0, 1, 2, 3], [4]]``."""
    try:
        blocks = [[int(a) - 1 for a in block.split(",") if a.strip()] for block in spec.split("|")]
    except ValueError:
        raise UsageError(f"malformed partition {spec!r}") from None
    if any(not b for b in blocks):
        raise UsageError(f"empty block in partition {spec!r}")
    return blocks


def cmd_fold(args) -> int:
    S = _load(args)
    lat = _lattice(args, S)
    if args.partition is not None:
        blocks = parse_partition(args.partition)
        try:
            report = folding_for_partition(lat, blocks, depth=args.depth)
        except ValueError as exc:
            if not isinstance(exc, FoldingError):
                raise UsageError(str(exc)) from None
            _emit(args, {"folding": None, "reason": str(exc)})
            return EXIT_FAIL
        if args.strong and not report.strong:
            _emit(args, {"folding": report.to_json(), "reason": "folding is not strong"})
            return EXIT_FAIL
        _emit(args, [report.to_json()])
        return EXIT_OK
    finder = find_strong_foldings if args.strong else find_foldings
    reports = finder(lat, depth=args.depth)
    _emit(args, [r.to_json() for r in reports], None if reports else "no foldings found")
    return EXIT_OK if reports else EXIT_FAIL


def _verify_one(args, S) -> dict:
    lat = _lattice(args, S)
    out = {}
    if args.theorem in ("garside", "all"):
        failures = garside_failures(lat)
        out["garside"] = {"ok": not failures, "failures": failures[:10]}
    if args.theorem in ("a", "all"):
        out["a"] = {"ok": verify_theorem_A(lat)}
    if args.theorem in ("b", "all"):
        out["b"] = {"ok": verify_theorem_B(lat, depth=args.depth)}
    return out


def cmd_verify(args) -> int:
    text = _read_input(args)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) > 1 and all(ln.lstrip().startswith("{") for ln in lines):
        docs = [json.loads(ln) for ln in lines]
        docs = [d for d in docs if "kind" in d]
    else:
        docs = [text]
    results = []
    failed = []
    for doc in docs:
        S = load_solution(doc)
        try:
            require_solution(S)
        except SolutionError as exc:
            raise NotASolution(str(exc)) from None
        res = _verify_one(args, S)
        ok = all(v["ok"] for v in res.values())
        results.append(res)
        if not ok:
            failed.append({"solution": solution_document(S), "results": res})
    summary = {"checked": len(results), "passed": len(results) - len(failed), "theorem": args.theorem}
    if failed:
        summary["counterexamples"] = failed
    _emit(args, summary)
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_EXHAUSTIVE_N:
        raise UsageError(f"n must be between 1 and {MAX_EXHAUSTIVE_N}")
    census = enumerate_solutions(args.n, up_to_iso=args.iso, jobs=args.jobs)
    lines = census_lines(census)
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
        _emit(args, {"n": census.n, "raw_count": census.raw_count,
                     "iso_count": census.iso_count, "out": args.out})
    else:
        print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybx",
        description="Analyze finite non-degenerate symmetric set-theoretic Yang-Baxter solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("path", nargs="?", help="solution document (JSON)")
        p.add_argument("--inline", help="solution document given as a JSON string")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--budget", type=int, default=None,
                       help="word-reversing step budget (default 4^(total length); env YBX_BUDGET)")
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                       help="word length bound when certifying foldings")
        return p

    with_input(sub.add_parser("check", help="check the solution axioms")).set_defaults(func=cmd_check)
    with_input(sub.add_parser("analyze", help="invariant subsets, parabolics, decomposability")) \
        .set_defaults(func=cmd_analyze)
    with_input(sub.add_parser("presentation", help="print the defining relations")) \
        .set_defaults(func=cmd_presentation)
    p = with_input(sub.add_parser("fold", help="search for foldings"))
    p.add_argument("--strong", action="store_true", help="only strong foldings")
    p.add_argument("--partition", help='test one partition, e.g. "1,2,3,4|5"')
    p.set_defaults(func=cmd_fold)
    p = with_input(sub.add_parser("verify", help="run a theorem verifier (input may be a census file)"))
    p.add_argument("--theorem", choices=("a", "b", "garside", "all"), default="all")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("enumerate", help="exhaustive census of solutions on n points")
    p.add_argument("n", type=int)
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--out", help="write the census (JSON lines) to this file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ybx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SolutionError, json.JSONDecodeError) as exc:
        print(f"ybx: invalid document: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotASolution as exc:
        print(f"ybx: not a solution: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ReversingBudgetError, TheoremViolation) as exc:
        print(f"ybx: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
