"""Exact evaluator for the truncated subspace-type inequality on concrete
points, plus the two-variable linear-relation special case.

Verdicts are per-point data: the inequality under test is asymptotic, so a
single violated point never decides anything; the evaluator only ever reports
exact comparisons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arith import SContext, non_s_ord_profile, rational_str
from .exactlinalg import det
from .heights import Magnitude, ScaledLog, cmp_scaled, counting_trunc, height

HOLDS = "holds"
VIOLATED = "violated"
SKIPPED = "skipped"
ERROR = "error"


@dataclass(frozen=True)
class LinearFormSystem:
    """q linear forms in r+1 variables, rows of rational coefficients."""

    r: int
    forms: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("need r >= 1")
        if len(self.forms) < self.r + 1:
            raise ValueError("need at least r+1 forms")
        for row in self.forms:
            if len(row) != self.r + 1:
                raise ValueError(f"every form needs {self.r + 1} coefficients")

    @classmethod
    def of(cls, r: int, rows) -> "LinearFormSystem":
        return cls(r, tuple(tuple(Fraction(c) for c in row) for row in rows))

    @property
    def q(self) -> int:
        return len(self.forms)

    def apply(self, index: int, coords) -> Fraction:
        return sum(
            (c * v for c, v in zip(self.forms[index], coords)), Fraction(0)
        )

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "forms": [[rational_str(c) for c in row] for row in self.forms],
        }


@dataclass(frozen=True)
class GeneralPositionResult:
    ok: bool
    witness: tuple[int, ...] | None  # offending index set when not ok

    def __bool__(self):
        return self.ok


def general_position_check(sys: LinearFormSystem) -> GeneralPositionResult:
    """Every (r+1)-subset of forms must be linearly independent."""
    for subset in itertools.combinations(range(sys.q), sys.r + 1):
        rows = [list(sys.forms[i]) for i in subset]
        if det(rows) == 0:
            return GeneralPositionResult(False, subset)
    return GeneralPositionResult(True, None)


@dataclass(frozen=True)
class ProjPoint:
    """Primitive S-integer coordinates: min non-S valuation 0 in every prime."""

    coords: tuple[Fraction, ...]

    def to_json_list(self) -> list[str]:
        return [rational_str(c) for c in self.coords]


def normalize_point(S: SContext, coords) -> ProjPoint:
    """Scale away the non-S content so the point becomes primitive.

    Clears denominators outside S and divides by the common non-S content;
    the S-supported scaling freedom is deliberately left untouched.
    """
    cs = [Fraction(c) for c in coords]
    if all(c == 0 for c in cs):
        raise ValueError("cannot normalize the zero tuple")
    profiles = [non_s_ord_profile(S, c) for c in cs if c != 0]
    primes = sorted(set().union(*(set(pr) for pr in profiles)))
    scale = Fraction(1)
    for p in primes:
        # absent primes have valuation 0 at that coordinate
        low = min(pr.get(p, 0) for pr in profiles)
        if low != 0:
            scale *= Fraction(p) ** (-low)
    return ProjPoint(tuple(c * scale for c in cs))


def check_primitive(S: SContext, coords) -> None:
    """Strict mode: raise unless the tuple is already normalized."""
    point = normalize_point(S, coords)
    if tuple(Fraction(c) for c in coords) != point.coords:
        raise ValueError(
            "point is not primitive for S = "
            f"{S}: expected {point.to_json_list()}"
        )


@dataclass(frozen=True)
class DefectReport:
    """Per-point outcome of the truncated inequality evaluation."""

    coords: tuple[Fraction, ...]
    coord_heights: tuple[Magnitude, ...]
    max_height: Magnitude
    form_values: tuple[Fraction, ...]
    form_counts: tuple[Magnitude | None, ...]  # None where the form vanishes
    rhs: Magnitude | None
    lhs_coefficient: Fraction  # q - r - 1 - eps; may be negative
    verdict: str
    reason: str | None = None

    def lhs_scaled(self) -> ScaledLog | None:
        if self.lhs_coefficient < 0:
            return None
        return ScaledLog(self.lhs_coefficient, self.max_height)

    def to_json_dict(self, digits: int = 6) -> dict:
        from .report import magnitude_json, scaled_log_json

        lhs = self.lhs_scaled()
        return {
            "point": [rational_str(c) for c in self.coords],
            "coord_heights": [magnitude_json(h, digits) for h in self.coord_heights],
            "max_height": magnitude_json(self.max_height, digits),
            "form_values": [rational_str(v) for v in self.form_values],
            "form_counts": [
                None if c is None else magnitude_json(c, digits)
                for c in self.form_counts
            ],
            "rhs": None if self.rhs is None else magnitude_json(self.rhs, digits),
            "lhs_coefficient": rational_str(self.lhs_coefficient),
            "lhs": None if lhs is None else scaled_log_json(lhs, digits),
            "verdict": self.verdict,
            "reason": self.reason,
        }


def evaluate_conjecture(
    S: SContext,
    sys: LinearFormSystem,
    eps: Fraction,
    points,
    strict: bool = False,
) -> list[DefectReport]:
    """Exact per-point comparison of (q-r-1-eps)*max h(coord) against the sum
    of r-truncated counting functions of the form values.

    Points with a vanishing form are reported as skipped, matching the
    requirement that no form vanishes along the sequence under test.
    """
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("epsilon must be nonnegative")
    gp = general_position_check(sys)
    if not gp.ok:
        raise ValueError(f"degenerate system: forms {gp.witness} are dependent")
    reports = []
    coeff = Fraction(sys.q - sys.r - 1) - eps
    for raw in points:
        if strict:
            check_primitive(S, raw)
            point = ProjPoint(tuple(Fraction(c) for c in raw))
        else:
            point = normalize_point(S, raw)
        coords = point.coords
        hs = tuple(height(c) for c in coords)
        hmax = max(hs)
        values = tuple(sys.apply(i, coords) for i in range(sys.q))
        counts: list[Magnitude | None] = []
        for v in values:
            counts.append(None if v == 0 else counting_trunc(S, sys.r, v))
        if any(c is None for c in counts):
            reports.append(
                DefectReport(
                    coords, hs, hmax, values, tuple(counts), None, coeff,
                    SKIPPED, "form vanishes at the point",
                )
            )
            continue
        rhs = Magnitude(1)
        for c in counts:
            rhs = rhs * c
        if coeff <= 0:
            verdict = HOLDS  # nonpositive left side against a nonnegative sum
        else:
            cmp = cmp_scaled(ScaledLog(coeff, hmax), ScaledLog(Fraction(1), rhs))
            verdict = HOLDS if cmp <= 0 else VIOLATED
        reports.append(
            DefectReport(coords, hs, hmax, values, tuple(counts), rhs, coeff, verdict)
        )
    return reports


@dataclass(frozen=True)
class DefectSummary:
    """Aggregate statistics; the inequality under test stays undecided."""

    points: int
    holds: int
    violated: int
    skipped: int
    max_violating_height: Magnitude | None

    note = (
        "per-point evidence only: the inequality is asymptotic and a finite "
        "evaluation never decides it"
    )

    def to_json_dict(self, digits: int = 6) -> dict:
        from .report import magnitude_json

        return {
            "points": self.points,
            "holds": self.holds,
            "violated": self.violated,
            "skipped": self.skipped,
            "max_violating_height": None
            if self.max_violating_height is None
            else magnitude_json(self.max_violating_height, digits),
            "note": self.note,
        }


def summarize_defects(reports) -> DefectSummary:
    verdicts = [r.verdict for r in reports]
    violating = [r.max_height for r in reports if r.verdict == VIOLATED]
    return DefectSummary(
        points=len(reports),
        holds=verdicts.count(HOLDS),
        violated=verdicts.count(VIOLATED),
        skipped=verdicts.count(SKIPPED),
        max_violating_height=max(violating) if violating else None,
    )


@dataclass(frozen=True)
class CorollaryRow:
    """One pair under the relation A*x + B*y = C, evaluated two ways.

    `delegated` is the subspace evaluation of the point (1, x) under the three
    forms (x0, x1, C*x0 - A*x1); the direct side restates the two-variable
    inequality (1-eps)*h(x) <= N1(x) + N1(y).  Both are exact; they coincide
    whenever B is an S-unit (the delegated third form value is B*y).
    """

    x: Fraction
    y: Fraction
    constraint_ok: bool
    delegated: DefectReport | None
    direct_lhs_coefficient: Fraction
    direct_lhs_base: Magnitude | None
    direct_rhs: Magnitude | None
    direct_verdict: str
    verdict: str
    agree: bool | None
    reason: str | None = None

    def to_json_dict(self, digits: int = 6) -> dict:
        from .report import magnitude_json

        return {
            "x": rational_str(self.x),
            "y": rational_str(self.y),
            "constraint_ok": self.constraint_ok,
            "delegated": None
            if self.delegated is None
            else self.delegated.to_json_dict(digits),
            "direct_lhs_coefficient": rational_str(self.direct_lhs_coefficient),
            "direct_lhs_base": None
            if self.direct_lhs_base is None
            else magnitude_json(self.direct_lhs_base, digits),
            "direct_rhs": None
            if self.direct_rhs is None
            else magnitude_json(self.direct_rhs, digits),
            "direct_verdict": self.direct_verdict,
            "verdict": self.verdict,
            "agree": self.agree,
            "reason": self.reason,
        }


def corollary_eval(
    S: SContext,
    A: Fraction,
    B: Fraction,
    C: Fraction,
    eps: Fraction,
    pairs,
) -> list[CorollaryRow]:
    """Evaluate the two-variable consequence on pairs satisfying A*x+B*y=C."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    eps = Fraction(eps)
    if A == 0 or B == 0 or C == 0:
        raise ValueError("A, B, C must all be nonzero")
    sys = LinearFormSystem.of(1, [[1, 0], [0, 1], [C, -A]])
    rows = []
    for raw_x, raw_y in pairs:
        x, y = Fraction(raw_x), Fraction(raw_y)
        if A * x + B * y != C:
            rows.append(
                CorollaryRow(
                    x, y, False, None, Fraction(1) - eps, None, None, ERROR,
                    ERROR, None, "pair does not satisfy A*x + B*y = C",
                )
            )
            continue
        delegated = evaluate_conjecture(S, sys, eps, [(Fraction(1), x)])[0]
        lhs_base = height(x)
        coeff = Fraction(1) - eps
        if x == 0 or y == 0:
            direct_rhs = None
        else:
            direct_rhs = counting_trunc(S, 1, x) * counting_trunc(S, 1, y)
        if coeff <= 0 or lhs_base.is_zero_quantity:
            direct_verdict = HOLDS
        elif direct_rhs is None:
            direct_verdict = SKIPPED
        else:
            cmp = cmp_scaled(
                ScaledLog(coeff, lhs_base), ScaledLog(Fraction(1), direct_rhs)
            )
            direct_verdict = HOLDS if cmp <= 0 else VIOLATED
        if delegated.verdict == SKIPPED:
            agree = None
            verdict = direct_verdict
        else:
            agree = (
                delegated.verdict == direct_verdict
                and delegated.rhs == direct_rhs
                and delegated.max_height == lhs_base
            )
            verdict = delegated.verdict
        rows.append(
            CorollaryRow(
                x, y, True, delegated, coeff, lhs_base, direct_rhs,
                direct_verdict, verdict, agree,
            )
        )
    return rows
