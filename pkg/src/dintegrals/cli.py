"""Command-line front end.

Exit codes: 0 ok, 1 law or validation failure, 2 I/O or parse error,
3 capacity exceeded, 4 closure condition violated, 5 not integrable.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .core import FiniteSemiring, validate_semiring
from .corpus import CORPUS, CORPUS_CAP, corpus_entries, resolve
from .derivations import DEFAULT_ENUMERATION_CAP, Derivation, enumerate_derivations
from .errors import (
    BoundTooSmall,
    CapacityExceeded,
    ClosureViolated,
    InvalidDerivation,
    MalformedMap,
    MalformedTable,
    NotIntegrable,
)
from .integral_semiring import (
    build_integral_semiring,
    check_closure_condition,
    validate_nonunitary_semiring,
)
from .integrals import IntegralTable, check_all_laws, law_names
from .matrix import build_matrix_semiring
from .poly import (
    DEFAULT_DEGREE_BOUND,
    Polynomial,
    closure_condition_poly,
    poly_derivative,
    poly_integrate,
    render,
    render_closure_witness,
)

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_CAPACITY, EXIT_CLOSURE, EXIT_NOT_INTEGRABLE = range(6)


class UsageError(Exception):
    """Bad input that should exit with code 2."""


def _emit(doc, pretty_text: Optional[str], args) -> None:
    if args.pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(doc, ensure_ascii=False))


def _load(source: str) -> FiniteSemiring:
    try:
        return resolve(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror or exc}") from None


def _pick_derivation(s: FiniteSemiring, choice: str, cap: int) -> Derivation:
    choice = choice.strip()
    if choice.startswith("[") or "," in choice:
        try:
            values = json.loads(choice if choice.startswith("[") else f"[{choice}]")
        except json.JSONDecodeError:
            raise UsageError(f"cannot parse derivation map {choice!r}") from None
        return Derivation(s, values)
    try:
        k = int(choice)
    except ValueError:
        raise UsageError(f"--derivation takes an index or a map, got {choice!r}") from None
    ds = enumerate_derivations(s, cap=cap)
    if not 0 <= k < len(ds):
        raise UsageError(f"derivation index {k} out of range (Der S has {len(ds)} elements)")
    return ds[k]


def _table_text(labels: Sequence[str], table, title: str) -> str:
    width = max(len(x) for x in labels)
    head = f"{title:>{width}} | " + " ".join(f"{x:>{width}}" for x in labels)
    lines = [head, "-" * len(head)]
    for lab, row in zip(labels, table):
        lines.append(f"{lab:>{width}} | " + " ".join(f"{labels[v]:>{width}}" for v in row))
    return "\n".join(lines)


def _set_text(xs) -> str:
    xs = list(xs)
    return "{" + ", ".join(map(str, xs)) + "}" if xs else "∅"


def cmd_validate(args) -> int:
    s = _load(args.semiring)
    report = validate_semiring(s)
    doc = report.to_dict()
    doc["semiring"] = s.name
    text = "passed" if report.passed else "\n".join(
        f"{v.axiom}: witness {list(v.witness)}" for v in report.violations
    )
    _emit(doc, text, args)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_derivations(args) -> int:
    s = _load(args.semiring)
    ds = enumerate_derivations(s, cap=args.cap)
    shown = ds if args.limit is None else ds[: args.limit]
    doc = {"semiring": s.name, "count": len(ds), "derivations": [list(d.map) for d in shown]}
    text = "\n".join(f"{k}: {list(d.map)}" for k, d in enumerate(shown)) + f"\ncount: {len(ds)}"
    _emit(doc, text, args)
    return EXIT_OK


def cmd_integrals(args) -> int:
    s = _load(args.semiring)
    d = _pick_derivation(s, args.derivation, args.cap)
    T = IntegralTable(d)
    doc = {"semiring": s.name, "derivation": list(d.map), **T.to_dict()}
    lines = [f"I({b}) = {_set_text(T[b])}" for b in s.elements]
    lines.append(f"Const = {_set_text(T.constants)}")
    lines.append(f"Int = {_set_text(T.integrables)}")
    _emit(doc, "\n".join(lines), args)
    return EXIT_OK


def cmd_laws(args) -> int:
    s = _load(args.semiring)
    d = _pick_derivation(s, args.derivation, args.cap)
    report = check_all_laws(d)
    for r in report:
        print(json.dumps(r.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_thm2(args) -> int:
    s = _load(args.semiring)
    d = _pick_derivation(s, args.derivation, args.cap)
    ok, witness = check_closure_condition(d)
    if not ok:
        doc = {"closure": False, "witness": list(witness)}
        a, b = witness
        _emit(doc, f"closure fails: {a} * {b} = {s.mul(a, b)} is not integrable", args)
        return EXIT_CLOSURE
    fam = build_integral_semiring(d)
    report = validate_nonunitary_semiring(fam)
    doc = {"closure": True, **fam.to_dict(), "axioms": report.to_dict()}
    labels = fam.labels()
    text = "\n\n".join([
        "closure holds",
        _table_text(labels, fam.add_table, "⊕"),
        _table_text(labels, fam.mul_table, "⊙"),
        "axioms: " + ("passed" if report.passed else str(report.to_dict()["violations"])),
    ])
    _emit(doc, text, args)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_matrix(args) -> int:
    base = _load(args.base)
    ext = build_matrix_semiring(base)
    if args.output:
        ext.save(args.output)
    else:
        print(ext.dumps(2))
    return EXIT_OK


def cmd_poly(args) -> int:
    char = args.char
    if args.action == "closure":
        ok, witness = closure_condition_poly(char, args.bound)
        doc = {"char": char, "closure": ok}
        if ok:
            text = "holds"
        else:
            doc["witness"] = list(witness)
            text = f"fails: witness {render_closure_witness(witness)}"
        doc["text"] = text
        _emit(doc, text, args)
        return EXIT_OK
    p = Polynomial.parse(args.polynomial, char)
    if args.action == "diff":
        q = poly_derivative(p)
        doc = {"char": char, "derivative": q.to_text(), "text": render(q)}
        _emit(doc, render(q), args)
        return EXIT_OK
    desc = poly_integrate(p)
    text = desc.render()
    doc = {
        "char": char,
        "particular": desc.particular.to_text(),
        "constant_space": desc.constant_space.describe(),
        "text": text,
    }
    _emit(doc, text, args)
    return EXIT_OK


def run_corpus(names: Optional[Sequence[str]] = None) -> dict:
    """Run every law family over every corpus pair and tally the outcomes."""
    entries = corpus_entries(None if names is None else list(names))
    tally: dict[str, dict] = {}
    failures = []
    pairs = 0
    for entry in entries:
        s = entry.build()
        for k, d in enumerate(enumerate_derivations(s, cap=CORPUS_CAP)):
            pairs += 1
            for r in check_all_laws(d):
                row = tally.setdefault(r.law, {"passed": 0, "failed": 0, "vacuous": 0, "qualifying": 0})
                row["qualifying"] += r.qualifying_count
                if not r.passed:
                    row["failed"] += 1
                    failures.append({"semiring": entry.name, "derivation": k, **r.to_dict()})
                elif r.vacuous:
                    row["vacuous"] += 1
                else:
                    row["passed"] += 1
    if not tally:
        tally = {law: {"passed": 0, "failed": 0, "vacuous": 0, "qualifying": 0} for law in law_names()}
    uncovered = sorted(law for law, row in tally.items() if row["passed"] + row["failed"] == 0)
    return {
        "pairs": pairs,
        "laws": tally,
        "failures": failures,
        "uncovered": uncovered,
        "ok": not failures and not uncovered and pairs > 0,
    }


def cmd_corpus(args) -> int:
    names = None
    if args.only is not None:
        names = [n for n in args.only if n]
        unknown = set(names) - {e.name for e in CORPUS}
        if unknown:
            raise UsageError(f"not in corpus: {', '.join(sorted(unknown))}")
    result = run_corpus(names)
    width = max((len(x) for x in result["laws"]), default=4)
    lines = [f"{'law':<{width}}  passed failed vacuous"]
    for law, row in result["laws"].items():
        lines.append(f"{law:<{width}}  {row['passed']:>6} {row['failed']:>6} {row['vacuous']:>7}")
    lines.append(f"pairs: {result['pairs']}  uncovered: {', '.join(result['uncovered']) or '-'}")
    _emit(result, "\n".join(lines), args)
    return EXIT_OK if result["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dintegrals", description="Derivations and d-integrals on semirings."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                        help="largest order for derivation enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the semiring axioms")
    p.add_argument("semiring", help="JSON file or built-in name (B2, Z2, M(B2), ...)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("derivations", parents=[common], help="enumerate Der S")
    p.add_argument("semiring")
    p.add_argument("--limit", type=int, help="print at most this many maps")
    p.set_defaults(func=cmd_derivations)

    for name, func, helptext in (
        ("integrals", cmd_integrals, "print I_d(b), Const_d and Int_d"),
        ("laws", cmd_laws, "check every integration law, one JSON object per law"),
        ("thm2", cmd_thm2, "build the semiring of integral sets"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("semiring")
        p.add_argument("--derivation", default="0",
                       help="index into the enumeration, or a map such as 0,1")
        p.set_defaults(func=func)

    p = sub.add_parser("matrix", parents=[common], help="emit the [[x,y],[0,x]] extension")
    p.add_argument("base")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("poly", help="polynomial derivative, integral, closure")
    poly_sub = p.add_subparsers(dest="action", required=True)
    poly_common = argparse.ArgumentParser(add_help=False, parents=[common])
    poly_common.add_argument("--char", type=int, default=0, help="0 or a prime")
    for action, helptext in (("diff", "formal derivative"), ("int", "antiderivative and constant space")):
        q = poly_sub.add_parser(action, parents=[poly_common], help=helptext)
        q.add_argument("polynomial", help='coefficients low degree first, e.g. "0 1/2 3"')
        q.set_defaults(func=cmd_poly)
    q = poly_sub.add_parser("closure", parents=[poly_common], help="is Int_d closed under products?")
    q.add_argument("--bound", type=int, default=DEFAULT_DEGREE_BOUND, help="degree bound of the probe")
    q.set_defaults(func=cmd_poly)

    p = sub.add_parser("corpus", parents=[common], help="run all laws over the built-in corpus")
    p.add_argument("--all", action="store_true", help="the whole corpus (default)")
    p.add_argument("--only", nargs="*", help="restrict to these corpus names")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MalformedTable, MalformedMap, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvalidDerivation as exc:
        print(json.dumps({"error": "invalid derivation", "identity": exc.identity,
                          "witness": list(exc.witness)}))
        return EXIT_FAIL
    except ClosureViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLOSURE
    except NotIntegrable as exc:
        print(json.dumps({"error": "not integrable", "index": exc.index, "char": exc.char}))
        return EXIT_NOT_INTEGRABLE
    except BoundTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
