"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (a violated
precondition), 3 step cap exceeded, 4 a verification reported a failure.
With ``--json`` exactly one JSON document is written to standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional

from . import anthyphairesis as anth
from . import angles, book2, harmonics, pell
from .errors import DomainError, StepCapExceeded
from .exact_core import MagnitudeSyntaxError, QuadraticSurd, decimal_string, format_magnitude, parse_magnitude

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_STEP_CAP, EXIT_FAILED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _count(minimum: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise ValueError(f"must be at least {minimum}")
        return value

    parse.__name__ = f"integer >= {minimum}"
    return parse


def dumps(doc) -> str:
    """The one serialization used for every JSON document (stable, compact)."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def _mag(text: str) -> QuadraticSurd:
    try:
        return parse_magnitude(text)
    except MagnitudeSyntaxError as exc:
        raise UsageError(f"malformed magnitude {text!r}: {exc}") from None


class Output:
    def __init__(self, as_json: bool, out):
        self.as_json = as_json
        self.out = out
        self.lines: list[str] = []
        self.doc = None

    def line(self, text: str = ""):
        self.lines.append(text)

    def flush(self):
        if self.as_json:
            self.out.write(dumps(self.doc) + "\n")
        elif self.lines:
            self.out.write("\n".join(self.lines) + "\n")


# -- handlers -----------------------------------------------------------------


def _expansion_text(o: Output, e: anth.AnthExpansion):
    period = list(e.period) if e.period is not None else "none"
    o.line(f"prefix {list(e.prefix)} period {period}")
    o.line(f"status {e.status.value}")
    if e.common_measure is not None:
        o.line(f"common measure {format_magnitude(e.common_measure)}")


def cmd_anth(args, o: Output):
    e = anth.anth_pair(_mag(args.a), _mag(args.b), args.max_steps)
    o.doc = e.to_json()
    _expansion_text(o, e)
    o.line("remainders " + ", ".join(format_magnitude(c) for c in e.remainders))


def cmd_cf(args, o: Output):
    x = _mag(args.x)
    e = anth.euclid_anth(x, 1) if x.is_rational else anth.surd_anth(x, args.max_steps)
    o.doc = e.to_json()
    period = list(e.period) if e.period is not None else "none"
    o.line(f"prefix {list(e.prefix)} period {period}")


def cmd_cert(args, o: Output):
    e = anth.anth_pair(_mag(args.a), _mag(args.b), args.max_steps)
    cert = anth.incomm_certificate(e)
    o.doc = {"expansion": e.to_json(), "certificate": cert.to_json()}
    o.line(f"{cert.verdict.value} ({cert.reason.value})")
    if cert.verdict is anth.Verdict.COMMENSURABLE:
        o.line(f"common measure {format_magnitude(cert.witness)}")
    else:
        prefix, period = cert.witness
        o.line(f"prefix {list(prefix)} period {list(period)}")


def cmd_pell(args, o: Output):
    if args.verify:
        report = pell.pell_induction_verify(args.n)
        o.doc = {
            "N": report.N,
            "base": report.base,
            "identity": list(report.identity),
            "step": list(report.step),
            "pell": list(report.pell),
            "first_failure": report.first_failure,
        }
        o.line(f"induction to n = {report.N}: " + ("ok" if report.ok else f"fails at n = {report.first_failure}"))
        return EXIT_OK if report.ok else EXIT_FAILED
    rows = pell.pell_table(args.n, args.digits)
    o.doc = {"rows": rows}
    o.line(f"{'n':>4}  {'p_n':>12}  {'q_n':>12}  defect  q_n/p_n")
    for row in rows:
        o.line(f"{row['n']:>4}  {row['p']:>12}  {row['q']:>12}  {row['defect']:>+6}  {row['ratio']['value']}")


def cmd_elegant(args, o: Output):
    a, b = _mag(args.a), _mag(args.b)
    step = pell.subtractive_step if args.subtractive else pell.elegant_step
    c, d = step(a, b)
    relation = c * c == 2 * d * d
    o.doc = {
        "input": [format_magnitude(a), format_magnitude(b)],
        "output": [format_magnitude(c), format_magnitude(d)],
        "defect_in": format_magnitude(a * a - 2 * b * b),
        "defect_out": format_magnitude(c * c - 2 * d * d),
        "relation_holds": relation,
    }
    o.line(f"({format_magnitude(c)}, {format_magnitude(d)})")
    o.line(f"defect {format_magnitude(a * a - 2 * b * b)} -> {format_magnitude(c * c - 2 * d * d)}")


def cmd_descent(args, o: Output):
    if args.kind == "surd":
        trace = pell.surd_descent(args.steps)
        o.doc = {
            "steps": [
                {
                    "n": st.n,
                    "d": format_magnitude(st.d),
                    "s": format_magnitude(st.s),
                    "relation": st.relation,
                    "decreasing": st.decreasing,
                }
                for st in trace.steps
            ],
            "quotients": list(trace.quotients),
            "ok": trace.ok,
        }
        for st in trace.steps:
            o.line(f"{st.n:>3}  d = {format_magnitude(st.d)}  s = {format_magnitude(st.s)}  "
                   f"d^2 = 2s^2: {st.relation}")
        o.line(f"quotients {list(trace.quotients)}")
        return EXIT_OK if trace.ok else EXIT_FAILED
    if args.m is None or args.n is None:
        raise UsageError("descent int needs M and N")
    m, n = _integer(args.m), _integer(args.n)
    chain = [(m, n)]
    while True:
        try:
            chain.append(pell.integer_descent(*chain[-1]))
        except DomainError:
            break
    if len(chain) == 1:
        pell.integer_descent(m, n)  # re-raise the range violation
    o.doc = {"chain": [{"m": a, "n": b, "defect": b * b - 2 * a * a} for a, b in chain]}
    for a, b in chain:
        o.line(f"(m, n) = ({a}, {b})  n^2 - 2m^2 = {b * b - 2 * a * a}")


def _integer(text: str) -> int:
    v = _mag(text)
    if not v.is_rational or v.r != 1:
        raise UsageError(f"{text!r} is not an integer")
    return v.p


def cmd_book2(args, o: Output):
    if args.action == "gnomon":
        steps = book2.gnomon_chain(args.k)
        o.doc = {
            "steps": [
                {"n": s.n, "previous": format_magnitude(s.previous), "remainder": format_magnitude(s.remainder),
                 "holds": s.holds, "form": list(s.form)}
                for s in steps
            ]
        }
        for s in steps:
            o.line(f"c{s.n} = {format_magnitude(s.remainder)}  gnomon form (1,2,1): {'ok' if s.holds else 'FAIL'}")
        return EXIT_OK if all(s.holds for s in steps) else EXIT_FAILED
    if args.all or not args.ids:
        ids = list(book2.PropositionId)
    else:
        ids = args.ids
    results = []
    for pid in ids:
        ident = book2.lookup(pid)
        results.append((ident, book2.verify_identity(ident.pid)))
    o.doc = {
        "results": [
            {"id": ident.pid.value, "statement": ident.statement, "conditional": ident.conditional, "pass": ok}
            for ident, ok in results
        ]
    }
    for ident, ok in results:
        o.line(f"{'PASS' if ok else 'FAIL'}  {ident.pid.value:<20} {ident.statement}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAILED


def cmd_areas(args, o: Output):
    vals = [_mag(v) for v in args.values]
    need = {"excess": 2, "defect": 2, "mean-extreme": 1, "mean-proportional": 2}[args.kind]
    if len(vals) != need:
        raise UsageError(f"areas {args.kind} takes {need} argument(s)")
    if args.kind == "excess":
        roots = [book2.apply_areas_excess(*vals)]
        name = "x"
    elif args.kind == "defect":
        roots = list(book2.apply_areas_defect(*vals))
        name = "x"
    elif args.kind == "mean-extreme":
        roots = [book2.mean_extreme(*vals)]
        name = "b"
    else:
        roots = [book2.mean_proportional(*vals)]
        name = "m"
    o.doc = {
        "kind": args.kind,
        "roots": [format_magnitude(r) for r in roots],
        "decimal": {"values": [decimal_string(r, args.digits) for r in roots], "display_only": True},
    }
    for r in roots:
        o.line(f"{name} = {format_magnitude(r)}")


def cmd_music(args, o: Output):
    trace = harmonics.musical_anth(harmonics.OCTAVE, harmonics.FIFTH, args.steps)
    o.doc = {
        "quotients": [st.quotient for st in trace],
        "remainders": [st.remainder.to_json() for st in trace],
    }
    for st in trace:
        r = st.remainder
        ratio = r.ratio_string()
        if ratio is None or len(ratio) > 60:
            ratio = f"2^{r.e2} * 3^{r.e3}"
        o.line(f"{st.n:>3}  k = {st.quotient:<4} remainder ({r.e2}, {r.e3}) = {ratio}")


def cmd_angle(args, o: Output):
    if args.action == "classify":
        if len(args.values) != 2:
            raise UsageError("angle classify takes a and c")
        a, c = (_mag(v) for v in args.values)
        kind = angles.classify_isosceles(a, c)
        doc = {"kind": kind.value, "cosine": format_magnitude(angles.apex_cosine(a, c))}
        if kind is not angles.AngleKind.RIGHT:
            doc["witness_index"] = angles.pythagorean_angle_definition(a, c, strict=not args.non_strict).witness_index
        else:
            doc["witness_index"] = None
        o.doc = doc
        o.line(f"{kind.value}  cos = {doc['cosine']}  witness {doc['witness_index']}")
    elif args.action == "omega":
        if len(args.values) != 1:
            raise UsageError("angle omega takes n")
        n = _integer(args.values[0])
        kind = angles.omega_kind(n)
        pair = pell.side_diameter(n)
        o.doc = {"n": n, "p": pair.p, "q": pair.q, "kind": kind.value,
                 "cosine": format_magnitude(angles.omega_cosine(n)), "witness_index": n}
        o.line(f"omega_{n} of ({pair.p}, {pair.p}, {pair.q}): {kind.value}, cos = {o.doc['cosine']}")
    else:
        if not args.pairs:
            raise UsageError("angle postulate4 needs --pairs FILE")
        pairs = _read_pairs(args.pairs)
        ok = angles.postulate4_check(pairs, args.max_steps)
        o.doc = {"pairs": [[format_magnitude(a), format_magnitude(b)] for a, b in pairs], "pass": ok}
        o.line(f"{len(pairs)} pair(s): all [1, period(2)]: {ok}")
        return EXIT_OK if ok else EXIT_FAILED


def _read_pairs(path: str) -> list[tuple[QuadraticSurd, QuadraticSurd]]:
    """One pair per line, ``a, b``; blank lines and ``#`` comments ignored."""
    try:
        fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    pairs = []
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise UsageError(f"{path}:{lineno}: expected 'a, b'")
            pairs.append((_mag(parts[0]), _mag(parts[1])))
    if not pairs:
        raise UsageError(f"{path}: no pairs")
    return pairs


def cmd_verify_all(args, o: Output):
    from .verification import run_all

    results = run_all()
    o.doc = {
        "checks": [r.to_json() for r in results],
        "pass": all(r.ok for r in results),
    }
    for r in results:
        o.line(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  [{r.reference}]" + (f"  {r.detail}" if r.detail else ""))
    failed = [r for r in results if not r.ok]
    if failed:
        o.line(f"first failure: {failed[0].name}: {failed[0].detail}")
        return EXIT_FAILED
    o.line(f"all {len(results)} checks passed")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--max-steps", type=int, default=None,
                        help="step cap for periodic expansions (default $ANTH_MAX_STEPS or 256)")
    common.add_argument("--digits", type=_count(0), default=12, help="decimal digits for display")

    parser = _Parser(prog="pythagorean", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn: Callable, help_text: str):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=fn)
        return p

    p = add("anth", cmd_anth, "anthyphairesis of two magnitudes")
    p.add_argument("a")
    p.add_argument("b")
    p = add("cf", cmd_cf, "anthyphairesis of one magnitude against the unit")
    p.add_argument("x")
    p = add("cert", cmd_cert, "commensurability certificate for two magnitudes")
    p.add_argument("a")
    p.add_argument("b")
    p = add("pell", cmd_pell, "side and diameter numbers")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--verify", action="store_true", help="run the inductive Pell check to n")
    p = add("elegant", cmd_elegant, "elegant step (a+2b, a+b) or its inverse")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--subtractive", action="store_true", help="apply (2b-a, a-b) instead")
    p = add("descent", cmd_descent, "surd or integer descent")
    p.add_argument("kind", choices=["surd", "int"])
    p.add_argument("m", nargs="?")
    p.add_argument("n", nargs="?")
    p.add_argument("--steps", type=int, default=20)
    p = add("book2", cmd_book2, "verify Book II identities or the gnomon chain")
    p.add_argument("action", choices=["verify", "gnomon"])
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--k", type=int, default=20)
    p = add("areas", cmd_areas, "application of areas and related constructions")
    p.add_argument("kind", choices=["excess", "defect", "mean-extreme", "mean-proportional"])
    p.add_argument("values", nargs="+")
    p = add("music", cmd_music, "musical anthyphairesis of the octave by the fifth")
    p.add_argument("--steps", type=int, default=7)
    p = add("angle", cmd_angle, "isosceles apex angles")
    p.add_argument("action", choices=["classify", "omega", "postulate4"])
    p.add_argument("values", nargs="*")
    p.add_argument("--pairs")
    p.add_argument("--non-strict", action="store_true", help="count equality with omega_m as a witness")
    add("verify-all", cmd_verify_all, "run the whole verification suite")
    return parser


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    o = Output(args.json, stdout)
    try:
        code = args.handler(args, o)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except StepCapExceeded as exc:
        stderr.write(f"step cap exceeded: {exc}\n")
        if args.json:
            partial = exc.expansion.to_json() if exc.expansion is not None else None
            stdout.write(dumps({"error": "StepCapExceeded", "message": str(exc), "partial": partial}) + "\n")
        return EXIT_STEP_CAP
    except DomainError as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        if args.json:
            stdout.write(dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_DOMAIN
    o.flush()
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run())
