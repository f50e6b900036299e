"""Brute-force (non-)specialty verification by interpolation-matrix rank.

A linear system restricted to monomial exponents D with multiplicities
m1, ..., mr at chosen points is non-special exactly when its vanishing
conditions are independent to the expected extent; this module builds the
condition matrix and computes its rank, either exactly over the rationals
(fraction-free elimination) or over a prime field at seeded random points.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, perm
from typing import List, Optional, Sequence, Tuple

from ._kernels import modrank
from .geometry import Point
from .lattice import LatticeSet, _coerce_spec

Matrix = List[List[Fraction]]

MODULAR_DEFAULT_PRIME = 2**61 - 1
EXACT_CELL_CAP = 4_000_000
_SEED_NUMERATOR_MAX = 2**16
_SEED_DENOMINATOR = 2**16 + 1


class ArityMismatch(ValueError):
    """Point count and multiplicity count disagree."""


class PrimeTooSmall(ValueError):
    """Prime cannot represent the derivative coefficients faithfully."""


class SizeGuardrail(RuntimeError):
    """Exact-mode matrix exceeds the desk-scale cell cap."""


@dataclass(frozen=True)
class GenericPointSet:
    """Plane points standing in for points in general position."""

    points: Tuple[Point, ...]
    source: str = "explicit"
    seed: Optional[int] = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")

    def __len__(self):
        return len(self.points)

    @classmethod
    def explicit(cls, pts: Sequence) -> "GenericPointSet":
        for x, y in pts:
            if isinstance(x, float) or isinstance(y, float):
                raise TypeError("floating-point coordinates rejected; "
                                "pass Fraction, int or 'p/q'")
        return cls(tuple(Point(Fraction(x), Fraction(y)) for x, y in pts))

    @classmethod
    def seeded(cls, r: int, seed: int) -> "GenericPointSet":
        """r distinct points with 16-bit numerators over a fixed prime-ish
        denominator; the same seed always reproduces the same set."""
        rng = random.Random(seed)
        pts = []
        seen = set()
        while len(pts) < r:
            p = Point(Fraction(rng.randint(1, _SEED_NUMERATOR_MAX), _SEED_DENOMINATOR),
                      Fraction(rng.randint(1, _SEED_NUMERATOR_MAX), _SEED_DENOMINATOR))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        return cls(tuple(pts), source="seeded-random", seed=seed)

    def to_json(self) -> list:
        return [[str(p.x), str(p.y)] for p in self.points]


@dataclass(frozen=True)
class OracleVerdict:
    """Dimension count of a system together with how it was obtained."""

    actual_dimension: int
    expected_dimension: int
    non_special: bool
    method: str  # "exact-rational" | "modular"
    prime: Optional[int] = None
    caveat: Optional[str] = None
    rank: int = 0
    seed: Optional[int] = None

    def to_json(self) -> dict:
        return {"actual_dimension": self.actual_dimension,
                "expected_dimension": self.expected_dimension,
                "non_special": self.non_special,
                "method": self.method,
                "prime": self.prime,
                "caveat": self.caveat,
                "rank": self.rank,
                "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "OracleVerdict":
        return cls(int(data["actual_dimension"]), int(data["expected_dimension"]),
                   bool(data["non_special"]), data["method"],
                   data.get("prime"), data.get("caveat"),
                   int(data.get("rank", 0)), data.get("seed"))


def _derivative_orders(m: int):
    """All (a, b) with a + b < m, ordered by total order, then by a."""
    for order in range(m):
        for a in range(order + 1):
            yield (a, order - a)


def interpolation_matrix(D: LatticeSet, points: GenericPointSet, spec) -> Matrix:
    """Condition matrix of the system: one row per point and derivative
    order below its multiplicity, one column per exponent in D.

    The row for point (x, y) and order (a, b) holds the (a, b)-partial of
    each monomial: perm(alpha, a) * perm(beta, b) * x^(alpha-a) * y^(beta-b),
    zero whenever a > alpha or b > beta.
    """
    spec = _coerce_spec(spec)
    if len(points) != len(spec):
        raise ArityMismatch(f"{len(points)} points for {len(spec)} multiplicities")
    cols = list(D)
    rows: Matrix = []
    for pt, m in zip(points.points, spec):
        for a, b in _derivative_orders(m):
            row = []
            for alpha, beta in cols:
                if a > alpha or b > beta:
                    row.append(Fraction(0))
                else:
                    row.append(perm(alpha, a) * perm(beta, b)
                               * pt.x ** (alpha - a) * pt.y ** (beta - b))
            rows.append(row)
    return rows


def fraction_free_rank(rows: Matrix) -> int:
    """Exact rank over Q by one-step fraction-free elimination.

    Rows are first scaled to integers; the elimination keeps every
    intermediate entry an exact minor of the integer matrix, so divisions
    are exact and there is no rational blow-up mid-run.
    """
    m = []
    for row in rows:
        den = lcm(*(e.denominator for e in row)) if row else 1
        m.append([int(e * den) for e in row])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        for r in range(rank + 1, nrows):
            head = m[r][col]
            row, prow = m[r], m[rank]
            for j in range(col, ncols):
                row[j] = (piv * row[j] - head * prow[j]) // prev
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def _cell_cap() -> int:
    env = os.environ.get("SESHADRI_MAX_CELLS")
    return int(env) if env else EXACT_CELL_CAP


def system_dimension_exact(D: LatticeSet, spec,
                           points: Optional[GenericPointSet] = None,
                           seed: int = 0, force: bool = False) -> OracleVerdict:
    """Projective dimension of the system over Q, |D| - 1 - rank.

    With no explicit points, a seeded sample is used; if the sampled rank
    falls short of making the system non-special, one retry with a fresh
    seed guards against an unlucky (non-generic) sample, and a differing
    outcome is recorded in the caveat.
    """
    spec = _coerce_spec(spec)
    if points is None:
        points = GenericPointSet.seeded(len(spec), seed)
    cells = spec.conditions() * len(D)
    if cells > _cell_cap() and not force:
        raise SizeGuardrail(
            f"{spec.conditions()}x{len(D)} exact matrix exceeds the cell cap; "
            "set SESHADRI_MAX_CELLS or pass force=True")
    expected = max(-1, len(D) - 1 - spec.conditions())

    def run(ps: GenericPointSet):
        rank = fraction_free_rank(interpolation_matrix(D, ps, spec))
        return rank, len(D) - 1 - rank

    rank, actual = run(points)
    caveat = None
    used_seed = points.seed
    if actual > expected and points.source == "seeded-random":
        retry_seed = (points.seed or 0) + 1
        rank2, actual2 = run(GenericPointSet.seeded(len(spec), retry_seed))
        if actual2 != actual:
            caveat = (f"seed {points.seed} sampled a non-generic configuration "
                      f"(dimension {actual}); seed {retry_seed} gives {actual2}")
            if actual2 < actual:
                rank, actual, used_seed = rank2, actual2, retry_seed
    return OracleVerdict(actual, expected, actual == expected,
                         "exact-rational", None, caveat, rank, used_seed)


def system_dimension_modp(D: LatticeSet, spec, seed: int = 0,
                          prime: int = MODULAR_DEFAULT_PRIME) -> OracleVerdict:
    """Dimension via rank over GF(prime) at seeded random points.

    Specialization can only lower the rank, so the reported dimension is
    an upper bound for the generic one: a non-special verdict is a genuine
    certificate, while a special verdict may just mean an unlucky sample
    (Schwartz-Zippel).  The caveat field records this asymmetry.
    """
    spec = _coerce_spec(spec)
    max_exp = max((max(a, b) for a, b in D), default=0)
    if prime <= max(max_exp, 2):
        raise PrimeTooSmall(
            f"prime {prime} must exceed every derivative factor (max exponent {max_exp})")
    rng = random.Random(seed)
    pts = []
    seen = set()
    while len(pts) < len(spec):
        p = (rng.randint(1, prime - 1), rng.randint(1, prime - 1))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    cols = list(D)
    rows = []
    for (x, y), m in zip(pts, spec):
        for a, b in _derivative_orders(m):
            row = []
            for alpha, beta in cols:
                if a > alpha or b > beta:
                    row.append(0)
                else:
                    coeff = _perm_mod(alpha, a, prime) * _perm_mod(beta, b, prime) % prime
                    row.append(coeff * pow(x, alpha - a, prime)
                               * pow(y, beta - b, prime) % prime)
            rows.append(row)
    rank = modrank(rows, prime) if rows else 0
    actual = len(D) - 1 - rank
    expected = max(-1, len(D) - 1 - spec.conditions())
    non_special = actual == expected
    caveat = ("rank over a prime field at random points never exceeds the generic rank: "
              "a non-special verdict is a certificate; a special verdict is inconclusive")
    return OracleVerdict(actual, expected, non_special, "modular", prime,
                         caveat, rank, seed)


def _perm_mod(n: int, k: int, p: int) -> int:
    r = 1
    for i in range(k):
        r = r * ((n - i) % p) % p
    return r


def monomials_up_to(degree: int):
    """Exponent pairs (i, j) with i + j <= degree, lexicographic."""
    return [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]


def points_on_curve(D: LatticeSet, degree: int) -> bool:
    """Whether all exponent points of D satisfy a nonzero polynomial of
    total degree at most ``degree`` (exact rank of the evaluation matrix)."""
    mons = monomials_up_to(degree)
    rows = [[Fraction(alpha**i * beta**j) for i, j in mons] for alpha, beta in D]
    return fraction_free_rank(rows) < len(mons)
