"""The full verification suite behind ``pythagorean verify-all``.

Each check is a named callable returning ``(ok, detail)``. Results come back
sorted by name so the report is stable from run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import angles, book2, harmonics, pell
from .anthyphairesis import anth_pair, remainders, theaetetus_trace
from .exact_core import QuadraticSurd, format_magnitude


@dataclass(frozen=True)
class CheckResult:
    name: str
    reference: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "reference": self.reference, "pass": self.ok, "detail": self.detail}


_REFERENCES = {
    "Elegant": "Theon of Smyrna, side and diameter numbers",
    "SubtractiveElegant": "inverse of the side/diameter step",
    "Chrystal-9.1.2": "Chrystal, Algebra, side/diameter descent",
    "Fowler-9.3.2": "Fowler, side/diameter ascent",
    "Step2-11": "Theaetetus, first division step",
    "Step3-11": "Theaetetus, second division step",
    "CrossProduct-9.4.1": "Topics 158b, same antanairesis",
}


def _identity_check(pid: book2.PropositionId) -> Callable[[], tuple[bool, str]]:
    def run():
        ident = book2.lookup(pid)
        return book2.verify_identity(pid), ident.statement

    return run


def _pell():
    report = pell.pell_induction_verify(256)
    return report.ok, "" if report.ok else f"fails at n = {report.first_failure}"


def _convergents():
    bad = [n for n in range(1, 33) if not pell.convergent_anth_check(n)]
    return not bad, f"fails at n = {bad[0]}" if bad else ""


def _gnomon():
    bad = [s.n for s in book2.gnomon_chain(20) if not s.holds]
    return not bad, f"fails at n = {bad[0]}" if bad else ""


def _remainders():
    root2 = QuadraticSurd.sqrt(2)
    rs = remainders(root2, 1, 20)
    for pair, c in zip(pell.side_diameter_pairs(20), rs):
        if c != abs(pair.p * root2 - pair.q):
            return False, f"c_{pair.n} = {format_magnitude(c)}"
    return True, ""


def _music():
    quotients = [st.quotient for st in harmonics.musical_anth(harmonics.OCTAVE, harmonics.FIFTH, 7)]
    return quotients == [1, 1, 2, 2, 3, 1, 5], f"quotients {quotients}"


def _philolaus():
    rows = harmonics.philolaus_table()
    bad = [r["relation"] for r in rows if not r["verified"]]
    return not bad, f"fails: {bad[0]}" if bad else ""


def _never_unison():
    return harmonics.never_unison_check(30), ""


def _angle_parity():
    for n in range(1, 65):
        want = angles.AngleKind.ACUTE if n % 2 else angles.AngleKind.OBTUSE
        if angles.omega_kind(n) is not want:
            return False, f"omega_{n} is {angles.omega_kind(n).value}"
    return True, ""


def _angle_convergence():
    return angles.omega_convergence_check(64), ""


def _postulate4():
    root2 = QuadraticSurd.sqrt(2)
    samples = [(root2, 1), (3 * root2 / 7, QuadraticSurd(3, 0, 0, 7)), (2 + root2, 1 + root2), (10 * root2, 10)]
    return angles.postulate4_check(samples), f"{len(samples)} samples"


def _no_integer_solution():
    return pell.no_integer_solution(10_000), ""


def _theaetetus():
    trace = theaetetus_trace()
    bad = [k for k, v in trace.checks.items() if not v]
    return trace.ok, trace.chain if not bad else f"fails: {bad[0]}"


def _surd_descent():
    trace = pell.surd_descent(20)
    ok = trace.ok and trace.quotients == (1,) + (2,) * 20
    return ok, ""


def _areas():
    x = book2.apply_areas_excess(2, 1)
    return x == QuadraticSurd.sqrt(2) - 1, f"x = {format_magnitude(x)}"


def _cross_product():
    root2 = QuadraticSurd.sqrt(2)
    a, b = root2, QuadraticSurd(1)
    c, d = 5 * a, 5 * b
    same = anth_pair(a, b).key() == anth_pair(c, d).key()
    return same, ""


def checks() -> list[tuple[str, str, Callable[[], tuple[bool, str]]]]:
    out = []
    for pid in book2.PropositionId:
        ref = f"Euclid, Elements {pid.value}" if pid.value.startswith("II.") else _REFERENCES[pid.value]
        out.append((f"{pid.value} identity", ref, _identity_check(pid)))
    out += [
        ("Pell n≤256", "Proclus, In Rempublicam II 27-29", _pell),
        ("convergents q_n/p_n n≤32", "Theon of Smyrna, Expositio I.31", _convergents),
        ("gnomon chain k≤20", "Euclid, Elements II.6", _gnomon),
        ("remainders |p_k sqrt2 - q_k| k≤20", "anthyphairesis of sqrt(2) : 1", _remainders),
        ("music octave:fifth 7 steps", "Philolaus Fr. 6, Boethius III.5", _music),
        ("music divisions", "Philolaus Fr. 6a", _philolaus),
        ("music never unison 30 steps", "2^u = 3^v only for u = v = 0", _never_unison),
        ("angle parity n≤64", "side/diameter apex angles", _angle_parity),
        ("angle convergence n≤64", "side/diameter apex angles", _angle_convergence),
        ("postulate 4 samples", "Euclid, Elements I Post. 4", _postulate4),
        ("no integer solution ≤10^4", "Aristotle, Prior Analytics 41a26", _no_integer_solution),
        ("Theaetetus trace", "Plato, Theaetetus 147d", _theaetetus),
        ("surd descent 20 steps", "Euclid, Elements X.2", _surd_descent),
        ("areas excess x(2+x)=1", "Euclid, Elements VI.29", _areas),
        ("cross product sqrt2:1 = 5sqrt2:5", "Aristotle, Topics 158b", _cross_product),
    ]
    return out


def run_all() -> list[CheckResult]:
    results = []
    for name, reference, fn in checks():
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, reference, bool(ok), detail))
    return sorted(results, key=lambda r: r.name)
