"""
Command-line front end.

    rothe-tableaux compute 132 --family grothendieck-double --method oracle
    rothe-tableaux enumerate 426315 --kind svrt
    rothe-tableaux verify --n 4 theorem11
    rothe-tableaux count 132 --kind lsvrt
    rothe-tableaux count --n 5

Structured output is one JSON object per line with a fixed field order.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import oracle
from .balanced import enumerate_csbl, fgrs_schubert
from .complex import build_rothe_complex, faces
from .errors import GroundSetTooLarge, InvalidPermutation, MethodNotApplicable, RotheError
from .perm import P321, P1432, P2143, Permutation, all_permutations, avoids, is_1432_avoiding, is_321_avoiding
from .poly import Polynomial, set_y_zero
from .tableaux import (
    DEFAULT_MAX_GROUND_SET,
    enumerate_lsvrt,
    enumerate_srt,
    enumerate_svrt,
    formula_corollary12,
    formula_corollary13_double,
    formula_corollary13_single,
    formula_matsumura_321,
    formula_theorem11,
    formula_theorem14_limit,
    formula_theorem14_srt,
)
from .verify import SUITES, ResourceCap, run_suite

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_NOT_APPLICABLE = 3
EXIT_VERIFY_FAILED = 4
EXIT_RESOURCE_CAP = 5

FAMILIES = ("grothendieck-double", "grothendieck-single", "schubert-double", "schubert-single")
METHODS = ("oracle", "theorem11", "theorem14-limit", "theorem14-srt", "matsumura321", "fgrs", "corollary12", "corollary13")
KINDS = ("svrt", "srt", "lsvrt", "csbl", "faces")

# methods whose value equals the oracle only on 1432-avoiding permutations
RESTRICTED_TO_1432_AVOIDING = {"theorem11", "theorem14-limit", "theorem14-srt", "corollary12", "corollary13"}
OUTSIDE_CLASS_WARNING = "not-equal-to-oracle-class"


# -- polynomial documents -----------------------------------------------------


def _trim(exps) -> list[int]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return exps


@dataclass
class PolynomialDocument:
    permutation: str
    family: str
    method: str
    terms: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @classmethod
    def build(cls, w: Permutation, family: str, method: str, poly: Polynomial, warnings=()) -> "PolynomialDocument":
        terms = [
            {"coefficient": c, "xExponents": _trim(xe), "yExponents": _trim(ye)}
            for c, xe, ye in poly.sorted_terms()
        ]
        return cls(str(w), family, method, terms, list(warnings))

    def to_json(self) -> dict:
        return {
            "permutation": self.permutation,
            "family": self.family,
            "method": self.method,
            "terms": self.terms,
            "warnings": self.warnings,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolynomialDocument":
        return cls(data["permutation"], data["family"], data["method"], list(data["terms"]), list(data.get("warnings", [])))

    def polynomial(self) -> Polynomial:
        R = oracle.ring_for(Permutation.parse(self.permutation).n)
        return R.from_terms((t["coefficient"], t["xExponents"], t["yExponents"]) for t in self.terms)


def parse_document(line: str) -> Polynomial:
    return PolynomialDocument.from_json(json.loads(line)).polynomial()


# -- compute --------------------------------------------------------------------


def _oracle(family: str) -> Callable[[Permutation], Polynomial]:
    return {
        "grothendieck-double": oracle.double_grothendieck,
        "grothendieck-single": oracle.single_grothendieck,
        "schubert-double": oracle.double_schubert,
        "schubert-single": oracle.single_schubert,
    }[family]


def _grothendieck(formula: Callable[[Permutation], Polynomial]) -> dict[str, Callable[[Permutation], Polynomial]]:
    return {
        "grothendieck-double": formula,
        "grothendieck-single": lambda w: set_y_zero(formula(w)),
    }


def _method_table(max_ground_set: int) -> dict[str, dict[str, Callable[[Permutation], Polynomial]]]:
    return {
        "theorem11": _grothendieck(formula_theorem11),
        "theorem14-limit": _grothendieck(lambda w: formula_theorem14_limit(w, max_ground_set)),
        "theorem14-srt": _grothendieck(formula_theorem14_srt),
        "matsumura321": _grothendieck(formula_matsumura_321),
        "corollary12": {"grothendieck-single": formula_corollary12},
        "corollary13": {"schubert-double": formula_corollary13_double, "schubert-single": formula_corollary13_single},
        "fgrs": {"schubert-single": fgrs_schubert},
    }


def cmd_compute(
    w: Permutation, family: str, method: str, max_ground_set: int = DEFAULT_MAX_GROUND_SET
) -> PolynomialDocument:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    warnings = []
    if method == "oracle":
        poly = _oracle(family)(w)
    else:
        table = _method_table(max_ground_set)[method]
        if family not in table:
            raise MethodNotApplicable(f"method {method} computes {' or '.join(table)}, not {family}")
        if method == "matsumura321" and not is_321_avoiding(w):
            raise MethodNotApplicable(f"method matsumura321 needs a 321-avoiding permutation; {w} contains 321")
        if method in RESTRICTED_TO_1432_AVOIDING and not is_1432_avoiding(w):
            warnings.append(OUTSIDE_CLASS_WARNING)
        poly = table[family](w)
    return PolynomialDocument.build(w, family, method, poly, warnings)


# -- enumerate ------------------------------------------------------------------


def cmd_enumerate(w: Permutation, kind: str, max_ground_set: int = DEFAULT_MAX_GROUND_SET) -> list[dict]:
    if kind == "svrt":
        objects = enumerate_svrt(w)
    elif kind == "srt":
        objects = enumerate_srt(w)
    elif kind == "lsvrt":
        objects = enumerate_lsvrt(w, max_ground_set)
    elif kind == "faces":
        objects = faces(build_rothe_complex(w, max_ground_set))
    elif kind == "csbl":
        return [{"permutation": str(w), "kind": kind, "entries": L.to_record()} for L in enumerate_csbl(w)]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    records = [{"permutation": str(w), "kind": kind, "entries": T.to_record()} for T in objects]
    return sorted(records, key=lambda r: r["entries"])


def _pretty_entries(entries: list) -> str:
    if not entries:
        return "(empty)"
    parts = []
    for i, j, v in entries:
        val = "{" + ",".join(map(str, v)) + "}" if isinstance(v, list) else str(v)
        parts.append(f"({i},{j}):{val}")
    return " ".join(parts)


# -- count ----------------------------------------------------------------------


def cmd_count_pattern(n: int) -> dict:
    perms = list(all_permutations(n))
    return {
        "n": n,
        "total": len(perms),
        "avoiding1432": sum(avoids(w, P1432) for w in perms),
        "avoiding2143": sum(avoids(w, P2143) for w in perms),
        "avoiding321": sum(avoids(w, P321) for w in perms),
    }


# -- argument handling ------------------------------------------------------------


def _emit(out, fmt: str, record: dict, pretty: str) -> None:
    if fmt == "json-lines":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(pretty + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rothe-tableaux", description="Grothendieck and Schubert polynomials via Rothe tableaux.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json-lines", "pretty"), default="json-lines")
    common.add_argument("--max-ground-set", type=int, default=DEFAULT_MAX_GROUND_SET)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="compute one polynomial")
    c.add_argument("permutation")
    c.add_argument("--family", choices=FAMILIES, default="grothendieck-double")
    c.add_argument("--method", choices=METHODS, default="oracle")

    e = sub.add_parser("enumerate", parents=[common], help="list tableaux, labelings or faces")
    e.add_argument("permutation")
    e.add_argument("--kind", choices=KINDS, default="svrt")

    v = sub.add_parser("verify", parents=[common], help="exhaustive check over S_n")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)

    k = sub.add_parser("count", parents=[common], help="count objects of a permutation, or pattern avoiders in S_n")
    k.add_argument("permutation", nargs="?")
    k.add_argument("--kind", choices=KINDS, default="svrt")
    k.add_argument("--n", type=int)
    return p


def _run(args, out) -> int:
    fmt = args.format
    if args.command == "compute":
        doc = cmd_compute(Permutation.parse(args.permutation), args.family, args.method, args.max_ground_set)
        poly = doc.polynomial()
        note = f"  [{', '.join(doc.warnings)}]" if doc.warnings else ""
        _emit(out, fmt, doc.to_json(), f"{doc.family}({doc.permutation}) by {doc.method} = {poly}{note}")
        return EXIT_OK

    if args.command == "enumerate":
        records = cmd_enumerate(Permutation.parse(args.permutation), args.kind, args.max_ground_set)
        for rec in records:
            _emit(out, fmt, rec, _pretty_entries(rec["entries"]))
        _emit(out, fmt, {"count": len(records)}, f"count: {len(records)}")
        return EXIT_OK

    if args.command == "verify":
        records, summary = run_suite(args.suite, args.n, jobs=args.jobs, max_ground_set=args.max_ground_set)
        for rec in records:
            detail = f"  {rec.detail}" if rec.detail else ""
            _emit(out, fmt, rec.to_json(), f"{rec.case:<12} {rec.status}{detail}")
        s = summary.to_json()
        _emit(out, fmt, s, f"{s['suite']} n={s['n']}: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip -> {s['result']}")
        return EXIT_OK if summary.ok else EXIT_VERIFY_FAILED

    if args.command == "count":
        if args.permutation is not None:
            n = len(cmd_enumerate(Permutation.parse(args.permutation), args.kind, args.max_ground_set))
            _emit(out, fmt, {"permutation": args.permutation, "kind": args.kind, "count": n}, str(n))
        elif args.n is not None:
            rec = cmd_count_pattern(args.n)
            pretty = ", ".join(f"{k} {v}" for k, v in rec.items())
            _emit(out, fmt, rec, pretty)
        else:
            raise ValueError("count needs a permutation or --n")
        return EXIT_OK

    raise ValueError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        return _run(args, out)
    except MethodNotApplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (GroundSetTooLarge, ResourceCap) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (InvalidPermutation, ValueError, RotheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
