"""Command-line interface: ``ap3 {count,enumerate,verify,hasse,realize}``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 refused
by a resource guard or checks skipped by the time budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, TextIO

from . import formulas, verify
from .errors import BudgetExceeded, DomainError
from .poset import FinitePoset, order_ideals
from .tableaux import (
    Tableau, UClass, enumerate_Kn, enumerate_KnL, enumerate_KnR, enumerate_Mn, tableau_poset, un_elements,
)
from .triple_posets import build_Phin, build_Pn, build_Qn
from .triples import TripleSystem, count_valid, enumerate_valid, realize

#: refuse enumerations predicted to produce more items than this without --force
ITEM_BUDGET = 10**7
#: refuse to materialize Hasse diagrams with more elements than this without --force
HASSE_BUDGET = 10**4

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _predicted(obj: str, n: int) -> int:
    """Item counts used only by the guard, taken from the closed forms."""
    m = n // 2
    return {
        "valid": formulas.f_closed(n),
        "Pn-ideals": formulas.f_closed(n),
        "Mn": formulas.f_closed(n),
        "Kn": formulas.g_closed(n),
        "KnL": formulas.f_closed(m + 1),
        "KnR1": formulas.f_closed(m + 1),
        "KnR2": formulas.f_closed(m + 1),
        "Un": 2 * formulas.count_Qn(m + 1),
        "Qn": formulas.count_Qn(n),
        "Pn": formulas.count_Qn(n),
        "Phin": formulas.count_Qn(n),
    }[obj]


def _guard(obj: str, n: int, force: bool, limit: int = ITEM_BUDGET):
    if not force and _predicted(obj, n) > limit:
        raise BudgetExceeded(f"{obj} for n={n} is predicted at {_predicted(obj, n)} items; pass --force")


# count -----------------------------------------------------------------------


def _count(obj: str, n: int) -> int:
    if obj == "valid":
        return count_valid(n, force=True)
    if obj == "Pn-ideals":
        return len(order_ideals(build_Pn(n)))
    if obj == "Mn":
        return sum(1 for _ in enumerate_Mn(n, force=True))
    if obj == "Kn":
        return len(enumerate_Kn(n))
    if obj == "Qn":
        return build_Qn(n).size
    raise DomainError(f"unknown object {obj}")


# enumerate -------------------------------------------------------------------


def _tableau_items(obj: str, n: int) -> Iterable[tuple[Tableau, str | None]]:
    if obj == "Mn":
        return ((t, None) for t in enumerate_Mn(n, force=True))
    if obj == "Kn":
        return ((t, None) for t in enumerate_Kn(n))
    if obj == "KnL":
        return ((t, None) for t in enumerate_KnL(n))
    if obj in ("KnR1", "KnR2"):
        return ((t, None) for t in enumerate_KnR(n, int(obj[-1])))
    if obj == "Un":
        groups = un_elements(n)
        return ((t, u.value) for u in UClass for t in groups[u])
    raise DomainError(f"unknown object {obj}")


def _write_enumeration(obj: str, n: int, fmt: str, out: TextIO):
    if obj == "valid":
        for s in enumerate_valid(n, force=True):
            out.write((json.dumps(s.to_json()) if fmt == "json" else (str(s) or "{}")) + "\n")
        return
    first = True
    for t, tag in _tableau_items(obj, n):
        if fmt == "json":
            data = t.to_json()
            if tag is not None:
                data["class"] = tag
            out.write(json.dumps(data) + "\n")
        else:
            if not first:
                out.write("\n")
            if tag is not None:
                out.write(f"# {tag}\n")
            out.write(str(t) + "\n")
            first = False


# hasse -----------------------------------------------------------------------


def _hasse_poset(name: str, n: int) -> FinitePoset:
    if name == "Pn":
        return build_Pn(n)
    if name == "Phin":
        return build_Phin(n)
    if name == "Qn":
        return build_Qn(n)
    if name == "Mn":
        return tableau_poset(list(enumerate_Mn(n, force=True)))
    if name == "Kn":
        return tableau_poset(enumerate_Kn(n))
    if name == "Un":
        groups = un_elements(n)
        return tableau_poset([t for u in UClass for t in groups[u]])
    raise DomainError(f"unknown poset {name}")


def _dot_label(x) -> str:
    if isinstance(x, Tableau):
        return str(x)
    return ",".join(str(v) for v in x)


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ap3",
        description="Count, enumerate and cross-check valid triple systems and their lattices.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print a count obtained by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--object", required=True, choices=["valid", "Mn", "Kn", "Pn-ideals", "Qn"])
    p.add_argument("--force", action="store_true", help="ignore the size guard")

    p = sub.add_parser("enumerate", help="stream objects in canonical order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--object", required=True, choices=["valid", "Mn", "Kn", "KnL", "KnR1", "KnR2", "Un"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--force", action="store_true", help="ignore the size guard")

    p = sub.add_parser("verify", help="compare closed forms with exhaustive enumeration")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--budget", type=float, default=None,
                   help=f"seconds (default: $AP3_BUDGET_SECS or {verify.DEFAULT_BUDGET_SECS:g})")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--only", nargs="+", metavar="CHECK", choices=[c.name for c in verify.CHECKS],
                   help="run only these checks")

    p = sub.add_parser("hasse", help="write a Hasse diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poset", required=True, choices=["Pn", "Phin", "Qn", "Mn", "Kn", "Un"])
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--force", action="store_true", help="ignore the size guard")

    p = sub.add_parser("realize", help="find a sequence carrying the given triples as progressions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triples", required=True, help='e.g. "1,2,3;1,3,4"')
    return parser


def run(args: argparse.Namespace, out: TextIO) -> int:
    if getattr(args, "n", 2) < 2 and args.command != "realize":
        raise DomainError("n must be at least 2")
    if args.command == "count":
        _guard(args.object, args.n, args.force)
        out.write(f"{_count(args.object, args.n)}\n")
    elif args.command == "enumerate":
        _guard(args.object, args.n, args.force)
        _write_enumeration(args.object, args.n, args.format, out)
    elif args.command == "verify":
        if args.n_max < 2:
            raise DomainError("--n-max must be at least 2")
        reports = verify.verify_all(args.n_max, budget=args.budget, jobs=args.jobs, only=args.only)
        out.write((verify.format_jsonl(reports) if args.format == "json" else verify.format_table(reports)) + "\n")
        return verify.exit_status(reports)
    elif args.command == "hasse":
        obj = {"Mn": "Mn", "Kn": "Kn", "Un": "Un"}.get(args.poset, "Pn")
        _guard(obj, args.n, args.force, HASSE_BUDGET)
        p = _hasse_poset(args.poset, args.n)
        if args.format == "json":
            out.write(json.dumps(p.to_json()) + "\n")
        else:
            out.write(p.to_dot(name=f"{args.poset}_{args.n}", label=_dot_label))
    elif args.command == "realize":
        try:
            system = TripleSystem.parse(args.triples, args.n)
        except ValueError as exc:
            raise DomainError(f"cannot parse triples: {exc}") from exc
        witness = realize(system)
        out.write(("infeasible" if witness is None else str(witness)) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"ap3: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"ap3: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:  # e.g. piped into head
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
