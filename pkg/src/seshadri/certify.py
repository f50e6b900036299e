"""Dissection certificates for multi-point Seshadri lower bounds.

A dissection peels convex polygons off the standard simplex by affine
cuts; each peeled piece must admit, for the target ratio m, a projection
interval longer than m together with a rearranged chord profile dominating
the identity up to m.  The same data yields finite-scale certificates: the
integer points of each scaled piece host a parallel-lines witness whose
non-specialty the rank oracle can confirm independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __about__
from .geometry import (AffineForm, Axis, ConvexPolygon, Point,
                       height_profile, make_polygon, parse_rational,
                       point, polygon_area, x_projection)
from .lattice import (Direction, LatticeSet, WitnessSelection, column_profile,
                      expected_dimension, max_parallel_witness, scaled_points,
                      select_witness_subset, split_by_affine)
from .oracle import OracleVerdict, system_dimension_exact, system_dimension_modp
from .reorder import PiecewiseLinear, monotone_reorder, sup_admissible


class InvalidDissection(ValueError):
    """Dissection fails its structural validation."""


class EmptyPolygonAtScale(ValueError):
    """Some piece contains no lattice points at the requested scale."""


@dataclass(frozen=True)
class CutStep:
    """One peeling step: the cut and the piece on its negative side.

    The cut must be negative on the peeled piece's interior and
    nonnegative on everything peeled later (dimension -1 role).
    """

    cut: AffineForm
    peeled: ConvexPolygon


@dataclass(frozen=True)
class Dissection:
    """Ordered peeling of a region into r pieces by r - 1 affine cuts."""

    name: str
    region: ConvexPolygon
    steps: Tuple[CutStep, ...]
    final: ConvexPolygon

    @property
    def r(self) -> int:
        return len(self.steps) + 1

    def polygons(self) -> List[ConvexPolygon]:
        return [s.peeled for s in self.steps] + [self.final]


@dataclass(frozen=True)
class DissectionValidation:
    ok: bool
    violations: Tuple[str, ...]

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": list(self.violations)}


def validate_dissection(dis: Dissection) -> DissectionValidation:
    """Check cut signs, the exact area partition and containment.

    Every violation is reported; an empty list means the dissection
    satisfies the hypotheses the verification pipeline relies on.
    """
    v: List[str] = []
    polys = dis.polygons()
    if not dis.region.in_first_quadrant():
        v.append("region leaves the first quadrant")
    for idx, poly in enumerate(polys, start=1):
        if not poly.in_first_quadrant():
            v.append(f"P{idx} leaves the first quadrant")
        for vert in poly.vertices:
            if not dis.region.contains(vert):
                v.append(f"P{idx} vertex {vert} lies outside the region")
    total = sum((polygon_area(p) for p in polys), Fraction(0))
    if total != polygon_area(dis.region):
        v.append(f"areas sum to {total}, region has {polygon_area(dis.region)}")
    for i, step in enumerate(dis.steps, start=1):
        vals = [step.cut(vert) for vert in step.peeled.vertices]
        if any(val > 0 for val in vals) or all(val == 0 for val in vals):
            v.append(f"cut {i} is not negative on the interior of P{i}")
        for j in range(i, len(polys)):
            later = polys[j]
            lvals = [step.cut(vert) for vert in later.vertices]
            if any(val < 0 for val in lvals) or all(val == 0 for val in lvals):
                v.append(f"cut {i} is not positive on the interior of P{j + 1}")
    return DissectionValidation(not v, tuple(v))


# --- builtin ten-piece dissection -----------------------------------------

_T = Fraction(1, 13)

BUILTIN_POINT_TABLE: Dict[str, Point] = {
    "O": point(0, 0), "A": point(1, 0), "B": point(0, 1),
    "C": point(9 * _T, 0), "D": point(0, 9 * _T),
    "E": point(9 * _T, 4 * _T), "F": point(4 * _T, 9 * _T),
    "G": point(5 * _T, 0), "H": point(0, 5 * _T),
    "I": point(4 * _T, 0), "J": point(0, 4 * _T),
    "K": point(7 * _T, 6 * _T), "L": point(6 * _T, 7 * _T),
    "M": point(6 * _T, 3 * _T), "N": point(3 * _T, 6 * _T),
    "P": point(Fraction(9, 26), Fraction(9, 26)),
    "Q": point(2 * _T, 2 * _T),
    "R": point(7 * _T, 2 * _T),
    "S": point(Fraction(9, 26), 0),
}


def builtin_dissection_eckl10() -> Dissection:
    """The builtin ten-piece dissection of the simplex certifying 4/13.

    Vertex membership of the pieces is read off a drawing, so the result
    is validated structurally at construction time instead of trusted.
    """
    table = BUILTIN_POINT_TABLE

    def piece(*names):
        return make_polygon([table[n] for n in names])

    steps = (
        CutStep(AffineForm(-4 * _T, 1, 1), piece("O", "I", "J")),
        CutStep(AffineForm(9 * _T, -1, 0), piece("C", "A", "E")),
        CutStep(AffineForm(9 * _T, 0, -1), piece("D", "B", "F")),
        CutStep(AffineForm(5 * _T, -1, 1), piece("G", "C", "E")),
        CutStep(AffineForm(5 * _T, 1, -1), piece("H", "D", "F")),
        CutStep(AffineForm(15 * _T, -3, 1), piece("G", "K", "E")),
        CutStep(AffineForm(15 * _T, 1, -3), piece("H", "L", "F")),
        CutStep(AffineForm(9 * _T, -1, -1), piece("N", "M", "K", "L")),
        CutStep(AffineForm(0, -1, 1), piece("Q", "I", "G", "M", "P")),
    )
    dis = Dissection("eckl10", piece("O", "A", "B"), steps,
                     piece("Q", "P", "N", "H", "J"))
    check = validate_dissection(dis)
    if not check.ok:
        raise AssertionError(f"builtin dissection invalid: {check.violations}")
    return dis


# --- asymptotic verification -----------------------------------------------

@dataclass(frozen=True)
class PolygonCheck:
    """Per-piece outcome of the projection-width and domination checks."""

    polygon: int          # 1-based index in dissection order
    axis: Axis
    width: Fraction
    sup_admissible: Fraction
    passed: bool
    profile: PiecewiseLinear
    reordered: PiecewiseLinear

    def to_json(self) -> dict:
        return {"polygon": self.polygon, "axis": self.axis.value,
                "width": str(self.width),
                "sup_admissible": str(self.sup_admissible),
                "pass": self.passed,
                "profile": self.profile.to_json(),
                "reordered": self.reordered.to_json()}


@dataclass(frozen=True)
class AsymptoticReport:
    m: Fraction
    per_polygon: Tuple[PolygonCheck, ...]
    overall: bool

    def failing(self) -> List[int]:
        return [c.polygon for c in self.per_polygon if not c.passed]

    def to_json(self) -> dict:
        return {"m": str(self.m), "overall": self.overall,
                "per_polygon": [c.to_json() for c in self.per_polygon],
                "note": "bounds are strict: the certified ratio is a supremum, "
                        "not an attained maximum"}


def _axis_data(poly: ConvexPolygon, axis: Axis):
    profile = height_profile(poly, axis)
    return profile, x_projection(poly, axis).length, sup_admissible(profile)


def _check_polygon(idx: int, poly: ConvexPolygon, m: Fraction) -> PolygonCheck:
    """Try the x-axis first, then the y-axis; keep the better failure."""
    candidates = []
    for axis in (Axis.X, Axis.Y):
        profile, width, sup = _axis_data(poly, axis)
        passed = m < width and m < sup
        check = PolygonCheck(idx, axis, width, sup, passed, profile,
                             monotone_reorder(profile))
        if passed:
            return check
        candidates.append((min(width, sup), check))
    return max(candidates, key=lambda c: c[0])[1]


def verify_asymptotic(dis: Dissection, m) -> AsymptoticReport:
    """Strict per-piece verification of the target ratio m.

    A piece passes on an axis when m is strictly below both the projection
    width and the first crossing of the rearranged profile under the
    identity; the y-axis is consulted when the x-axis fails.
    """
    m = Fraction(m)
    if m <= 0:
        raise ValueError("m must be positive")
    check = validate_dissection(dis)
    if not check.ok:
        raise InvalidDissection("; ".join(check.violations))
    rows = tuple(_check_polygon(i, p, m)
                 for i, p in enumerate(dis.polygons(), start=1))
    return AsymptoticReport(m, rows, all(r.passed for r in rows))


def certified_bound(dis: Dissection) -> Fraction:
    """Supremum of the ratios accepted by :func:`verify_asymptotic`.

    Per piece the best axis contributes min(projection width, first
    identity crossing of the rearranged profile); the bound is the minimum
    over pieces and is approached but not attained.
    """
    check = validate_dissection(dis)
    if not check.ok:
        raise InvalidDissection("; ".join(check.violations))
    best = None
    for poly in dis.polygons():
        scores = []
        for axis in (Axis.X, Axis.Y):
            _profile, width, sup = _axis_data(poly, axis)
            scores.append(min(width, sup))
        best = max(scores) if best is None else min(best, max(scores))
    return best


# --- finite certificates -----------------------------------------------------

@dataclass(frozen=True)
class PolygonWitness:
    """Scale-n record for one piece: its lattice set size and witness."""

    polygon: int
    role: str                 # "dim-minus-one" | "final"
    lattice_count: int
    m: int
    witness: WitnessSelection
    deviation: Fraction       # |m - n*target| / (n*target)
    padding_ok: Optional[bool] = None   # final piece only
    oracle: Optional[OracleVerdict] = None

    def to_json(self) -> dict:
        return {"polygon": self.polygon, "role": self.role,
                "lattice_count": self.lattice_count, "m": self.m,
                "witness": self.witness.to_json(),
                "deviation": str(self.deviation),
                "padding_ok": self.padding_ok,
                "oracle": self.oracle.to_json() if self.oracle else None}

    @classmethod
    def from_json(cls, data: dict) -> "PolygonWitness":
        return cls(int(data["polygon"]), data["role"], int(data["lattice_count"]),
                   int(data["m"]), WitnessSelection.from_json(data["witness"]),
                   parse_rational(data["deviation"]), data.get("padding_ok"),
                   OracleVerdict.from_json(data["oracle"]) if data.get("oracle") else None)


@dataclass(frozen=True)
class FiniteCertificate:
    """Machine-checkable record of a scale-n reduction run."""

    dissection: str
    scale: int
    degree: int
    oracle_mode: str
    seed: int
    per_polygon: Tuple[PolygonWitness, ...]
    min_ratio: Fraction
    tool_version: str = __about__.__version__

    @property
    def statement(self) -> str:
        """The claim the cut-order assembly plus final-piece padding yields."""
        ms = ", ".join(str(p.m) for p in self.per_polygon)
        return (f"the degree-{self.degree} plane system with multiplicities "
                f"({ms}) at {len(self.per_polygon)} very general points is "
                f"non-special of dimension >= 0")

    def to_json(self) -> dict:
        return {"tool_version": self.tool_version, "dissection": self.dissection,
                "scale": self.scale, "degree": self.degree,
                "oracle_mode": self.oracle_mode, "seed": self.seed,
                "min_ratio": str(self.min_ratio),
                "statement": self.statement,
                "per_polygon": [p.to_json() for p in self.per_polygon]}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteCertificate":
        return cls(data["dissection"], int(data["scale"]), int(data["degree"]),
                   data["oracle_mode"], int(data["seed"]),
                   tuple(PolygonWitness.from_json(p) for p in data["per_polygon"]),
                   parse_rational(data["min_ratio"]),
                   data["tool_version"])


def finite_certificate(dis: Dissection, n: int, oracle_mode: str = "none",
                       seed: int = 0,
                       directions: Sequence[Direction] = (Direction.VERTICAL,
                                                          Direction.HORIZONTAL)
                       ) -> FiniteCertificate:
    """Instantiate the dissection at scale n and certify every piece.

    The integer points of the scaled region are consumed cut by cut (ties
    stay with the remainder), each piece gets its best parallel-lines
    witness over the configured directions, and optionally an oracle
    verdict on the witness system.  The final piece additionally records
    whether its full lattice set pads the witness to expected dimension
    at least 0.
    """
    if n < 1:
        raise ValueError("scale must be a positive integer")
    if oracle_mode not in ("none", "modular", "exact"):
        raise ValueError(f"unknown oracle mode {oracle_mode!r}")
    check = validate_dissection(dis)
    if not check.ok:
        raise InvalidDissection("; ".join(check.violations))
    target = certified_bound(dis)
    remaining = scaled_points(dis.region, n)
    pieces: List[Tuple[int, str, LatticeSet]] = []
    for i, step in enumerate(dis.steps, start=1):
        mine, remaining = split_by_affine(remaining, step.cut, n)
        pieces.append((i, "dim-minus-one", mine))
    pieces.append((dis.r, "final", remaining))

    rows: List[PolygonWitness] = []
    for idx, role, pts in pieces:
        if len(pts) == 0:
            raise EmptyPolygonAtScale(f"P{idx} holds no lattice points at scale {n}")
        best_m, best_dir = 0, directions[0]
        for d in directions:
            m_d = max_parallel_witness(column_profile(pts, d))
            if m_d > best_m:
                best_m, best_dir = m_d, d
        if best_m == 0:
            raise EmptyPolygonAtScale(f"P{idx} hosts no witness at scale {n}")
        witness = select_witness_subset(pts, best_dir, best_m)
        verdict = None
        if oracle_mode == "exact":
            verdict = system_dimension_exact(witness.subset, (best_m,),
                                             seed=seed + idx)
        elif oracle_mode == "modular":
            verdict = system_dimension_modp(witness.subset, (best_m,),
                                            seed=seed + idx)
        padding = None
        if role == "final":
            padding = (witness.subset.issubset(pts)
                       and expected_dimension((best_m,), count=len(pts)) >= 0)
        deviation = (abs(Fraction(best_m) - n * target) / (n * target)
                     if target > 0 else Fraction(0))
        rows.append(PolygonWitness(idx, role, len(pts), best_m, witness,
                                   deviation, padding, verdict))
    min_ratio = Fraction(min(r.m for r in rows), n)
    return FiniteCertificate(dis.name, n, n, oracle_mode, seed,
                             tuple(rows), min_ratio)


@dataclass(frozen=True)
class CertificateBound:
    """Degree/multiplicity reading of a finite certificate."""

    d: int
    m_min: int
    ratio: Fraction
    sequence_pair: Tuple[int, int]   # (d, m_min - 1) for the sequence criterion

    def to_json(self) -> dict:
        return {"d": self.d, "m_min": self.m_min, "ratio": str(self.ratio),
                "sequence_pair": list(self.sequence_pair)}


def bound_from_certificate(cert: FiniteCertificate) -> CertificateBound:
    m_min = min(p.m for p in cert.per_polygon)
    return CertificateBound(cert.scale, m_min, Fraction(m_min, cert.scale),
                            (cert.scale, m_min - 1))


# --- sequence criterion and bound reporting ---------------------------------

@dataclass(frozen=True)
class EcklSequenceReport:
    """Expected-dimension checks along a (d, m) sequence for r points."""

    r: int
    pairs: Tuple[Tuple[int, int], ...]
    checks: Tuple[bool, ...]
    ratios: Tuple[Fraction, ...]     # d^2 / (m^2 r)
    limit_estimate: Fraction
    warning: Optional[str] = None

    def to_json(self) -> dict:
        return {"r": self.r, "pairs": [list(p) for p in self.pairs],
                "checks": list(self.checks),
                "ratios": [str(q) for q in self.ratios],
                "limit_estimate": str(self.limit_estimate),
                "warning": self.warning}


def eckl_sequence_check(pairs: Sequence[Tuple[int, int]], r: int) -> EcklSequenceReport:
    """Check that each system of degree d with r-fold multiplicity m + 1
    has expected dimension >= 0, and report the exact ratios d^2/(m^2 r)."""
    if r < 1:
        raise ValueError("r must be positive")
    norm = []
    for d, m in pairs:
        d, m = int(d), int(m)
        if m < 1:
            raise ValueError("multiplicities in the sequence must be >= 1")
        if d < 1:
            raise ValueError("degrees in the sequence must be >= 1")
        norm.append((d, m))
    if not norm:
        raise ValueError("need at least one (d, m) pair")
    checks = tuple(expected_dimension((m + 1,) * r, degree=d) >= 0
                   for d, m in norm)
    ratios = tuple(Fraction(d * d, m * m * r) for d, m in norm)
    warning = None if r > 9 else (
        f"r = {r} <= 9: the bound target 1/sqrt(r) is not in the interesting range")
    return EcklSequenceReport(r, tuple(norm), checks, ratios, ratios[-1], warning)


@dataclass(frozen=True)
class NagataReport:
    """Exact comparison of a certified ratio against 1/sqrt(r)."""

    r: int
    bound: Fraction
    nagata_target: str
    comparison: str        # "below" | "equal" | "above"
    nef_statement: str

    def to_json(self) -> dict:
        return {"r": self.r, "bound": str(self.bound),
                "nagata_target": self.nagata_target,
                "comparison": self.comparison,
                "nef_statement": self.nef_statement}


def nagata_report(r: int, bound) -> NagataReport:
    """Render the nef statement for the certified ratio and compare it
    with 1/sqrt(r) by exact cross-multiplied squares."""
    bound = Fraction(bound)
    if r < 1:
        raise ValueError("r must be positive")
    if bound <= 0:
        raise ValueError("bound must be positive")
    square = bound * bound * r
    comparison = "below" if square < 1 else ("equal" if square == 1 else "above")
    statement = (f"H - {bound} * (E_1 + ... + E_{r}) is nef on the blow-up of "
                 f"the projective plane at {r} very general points")
    return NagataReport(r, bound, f"1/sqrt({r})", comparison, statement)


def ten_point_bound_ladder() -> Tuple[Tuple[str, Fraction], ...]:
    """Published lower bounds for ten very general points, as squared
    rationals so that irrational entries compare exactly."""
    return (
        ("40/132", Fraction(40, 132) ** 2),
        ("4/13", Fraction(4, 13) ** 2),
        ("2*sqrt(3)/11", Fraction(12, 121)),
        ("6/19", Fraction(6, 19) ** 2),
        ("177/560", Fraction(177, 560) ** 2),
        ("1/sqrt(10)", Fraction(1, 10)),
    )


# --- file formats -------------------------------------------------------------

def dissection_to_json(dis: Dissection) -> dict:
    return {"name": dis.name,
            "region": dis.region.to_json(),
            "steps": [{"polygon": s.peeled.to_json(), "cut": s.cut.to_json()}
                      for s in dis.steps],
            "final": dis.final.to_json()}


def dissection_from_json(data: dict) -> Dissection:
    steps = tuple(CutStep(AffineForm.from_json(s["cut"]),
                          ConvexPolygon.from_json(s["polygon"]))
                  for s in data["steps"])
    return Dissection(data["name"], ConvexPolygon.from_json(data["region"]),
                      steps, ConvexPolygon.from_json(data["final"]))


def dump_json(data: dict) -> str:
    """Canonical serialization used for all machine output."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
