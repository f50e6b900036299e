"""Exact monotone (increasing) rearrangement of piecewise-linear functions.

A function is stored as breakpoints with linear interpolation in between,
over exact rationals.  Rearrangements, sublevel measures and the
identity-domination check therefore involve no tolerances at all: every
comparison is an exact rational comparison, and crossings are isolated as
exact roots of linear pieces.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class OutOfRange(ValueError):
    """A parameter lies outside the function's domain."""


def _rat(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating-point input rejected; pass Fraction, int or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function given by breakpoint ordinates.

    ``breakpoints`` are strictly increasing rationals t0 < ... < tk with
    k >= 1; the function on [t0, tk] is the linear interpolation of the
    pairs (ti, values[i]).
    """

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        bps = tuple(_rat(t) for t in self.breakpoints)
        vals = tuple(_rat(v) for v in self.values)
        if len(bps) < 2:
            raise ValueError("need at least two breakpoints")
        if len(bps) != len(vals):
            raise ValueError("breakpoints and values differ in length")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @property
    def domain(self) -> tuple:
        return (self.breakpoints[0], self.breakpoints[-1])

    @property
    def width(self) -> Fraction:
        return self.breakpoints[-1] - self.breakpoints[0]

    def __call__(self, t: RationalLike) -> Fraction:
        t = _rat(t)
        a, b = self.domain
        if t < a or t > b:
            raise OutOfRange(f"{t} outside domain [{a}, {b}]")
        i = bisect_right(self.breakpoints, t) - 1
        if i == len(self.breakpoints) - 1:
            return self.values[-1]
        t0, t1 = self.breakpoints[i], self.breakpoints[i + 1]
        v0, v1 = self.values[i], self.values[i + 1]
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def segments(self):
        """Yield (t0, t1, v0, v1) for each linear piece."""
        for i in range(len(self.breakpoints) - 1):
            yield (self.breakpoints[i], self.breakpoints[i + 1],
                   self.values[i], self.values[i + 1])

    def min_value(self) -> Fraction:
        return min(self.values)

    def max_value(self) -> Fraction:
        return max(self.values)

    def argmax(self) -> tuple:
        """Leftmost breakpoint attaining the maximum, as (t, value)."""
        m = self.max_value()
        for t, v in zip(self.breakpoints, self.values):
            if v == m:
                return (t, v)
        raise AssertionError("unreachable")

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def integral(self) -> Fraction:
        total = Fraction(0)
        for t0, t1, v0, v1 in self.segments():
            total += (t1 - t0) * (v0 + v1) / 2
        return total

    def translate(self, dt: RationalLike) -> "PiecewiseLinear":
        dt = _rat(dt)
        return PiecewiseLinear(tuple(t + dt for t in self.breakpoints), self.values)

    def restrict(self, lo: RationalLike, hi: RationalLike) -> "PiecewiseLinear":
        lo, hi = _rat(lo), _rat(hi)
        a, b = self.domain
        if lo < a or hi > b or lo >= hi:
            raise OutOfRange(f"[{lo}, {hi}] is not a sub-interval of [{a}, {b}]")
        bps = [lo]
        vals = [self(lo)]
        for t, v in zip(self.breakpoints, self.values):
            if lo < t < hi:
                bps.append(t)
                vals.append(v)
        bps.append(hi)
        vals.append(self(hi))
        return PiecewiseLinear(tuple(bps), tuple(vals))

    def canonical(self) -> "PiecewiseLinear":
        """Drop interior breakpoints where the slope does not change."""
        bps = [self.breakpoints[0]]
        vals = [self.values[0]]
        for i in range(1, len(self.breakpoints) - 1):
            t0, t1, t2 = bps[-1], self.breakpoints[i], self.breakpoints[i + 1]
            v0, v1, v2 = vals[-1], self.values[i], self.values[i + 1]
            # collinear iff (v1-v0)/(t1-t0) == (v2-v1)/(t2-t1)
            if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
                bps.append(t1)
                vals.append(v1)
        bps.append(self.breakpoints[-1])
        vals.append(self.values[-1])
        return PiecewiseLinear(tuple(bps), tuple(vals))

    def equivalent(self, other: "PiecewiseLinear") -> bool:
        """True when both represent the same function (domains included)."""
        if self.domain != other.domain:
            return False
        grid = sorted(set(self.breakpoints) | set(other.breakpoints))
        return all(self(t) == other(t) for t in grid)

    def to_json(self) -> dict:
        return {"breakpoints": [str(t) for t in self.breakpoints],
                "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: dict) -> "PiecewiseLinear":
        return cls(tuple(Fraction(t) for t in data["breakpoints"]),
                   tuple(Fraction(v) for v in data["values"]))


@dataclass(frozen=True)
class PointMassDistribution:
    """Sublevel-measure law of a function with flat pieces.

    Flat pieces of the input concentrate measure at single levels, so the
    distribution jumps there and cannot be written as a continuous
    piecewise-linear function of the level.  ``levels`` are the attained
    breakpoint values, ``masses[i]`` the measure concentrated exactly at
    ``levels[i]`` and ``densities[j]`` the constant rate of the absolutely
    continuous part on (levels[j], levels[j+1]).  A constant function is
    the extreme case: one level carrying the whole domain length.
    """

    levels: tuple
    masses: tuple
    densities: tuple

    @property
    def total(self) -> Fraction:
        t = sum(self.masses, Fraction(0))
        for j, d in enumerate(self.densities):
            t += d * (self.levels[j + 1] - self.levels[j])
        return t

    def __call__(self, s: RationalLike) -> Fraction:
        """Measure of the sublevel set at level s."""
        s = _rat(s)
        acc = Fraction(0)
        for i, lev in enumerate(self.levels):
            if lev <= s:
                acc += self.masses[i]
            if i < len(self.densities):
                hi = min(s, self.levels[i + 1])
                if hi > lev:
                    acc += self.densities[i] * (hi - lev)
        return acc


def _level_decomposition(f: PiecewiseLinear):
    """Split f's pieces into point masses at levels and densities between them.

    Returns (levels, masses, densities): ``levels`` is the increasing tuple
    of distinct breakpoint values; ``masses[i]`` sums the widths of flat
    pieces sitting at levels[i]; ``densities[j]`` sums width/|value span|
    over the sloped pieces covering the gap (levels[j], levels[j+1]).
    """
    levels = sorted({v for v in f.values})
    index = {v: i for i, v in enumerate(levels)}
    masses = [Fraction(0)] * len(levels)
    densities = [Fraction(0)] * (len(levels) - 1)
    for t0, t1, v0, v1 in f.segments():
        w = t1 - t0
        if v0 == v1:
            masses[index[v0]] += w
        else:
            lo, hi = (v0, v1) if v0 < v1 else (v1, v0)
            rate = w / (hi - lo)
            for j in range(index[lo], index[hi]):
                densities[j] += rate
    return tuple(levels), tuple(masses), tuple(densities)


def sublevel_measure(f: PiecewiseLinear, s: RationalLike) -> Fraction:
    """Exact length of {t in dom(f) : f(t) <= s}."""
    s = _rat(s)
    acc = Fraction(0)
    for t0, t1, v0, v1 in f.segments():
        w = t1 - t0
        if v0 == v1:
            if v0 <= s:
                acc += w
        else:
            lo, hi = (v0, v1) if v0 < v1 else (v1, v0)
            if s >= hi:
                acc += w
            elif s > lo:
                acc += w * (s - lo) / (hi - lo)
    return acc


def distribution(f: PiecewiseLinear):
    """Sublevel-measure function s -> length{f <= s} on [min f, max f].

    Returns a nondecreasing :class:`PiecewiseLinear` whenever that law is
    continuous, i.e. when f has no flat pieces.  Flat pieces put positive
    measure on single levels; those inputs (constants included) get the
    flagged :class:`PointMassDistribution` instead of a broken
    interpolation.
    """
    levels, masses, densities = _level_decomposition(f)
    if len(levels) == 1 or any(m > 0 for m in masses):
        return PointMassDistribution(levels, masses, densities)
    vals = [Fraction(0)]
    for j, d in enumerate(densities):
        vals.append(vals[-1] + d * (levels[j + 1] - levels[j]))
    return PiecewiseLinear(levels, tuple(vals))


def monotone_reorder(f: PiecewiseLinear) -> PiecewiseLinear:
    """Increasing rearrangement of f, as a function on [0, width of dom(f)].

    The rearrangement is the generalized inverse of the sublevel-measure
    law: sweeping the attained levels upward, a point mass of size w at
    level v contributes a flat piece of length w at height v, and the
    absolutely continuous part between consecutive levels contributes a
    sloped piece whose length is the measure picked up in that gap.  The
    half-open left end is closed up by continuity, so the result starts at
    (0, min f).
    """
    levels, masses, densities = _level_decomposition(f)
    bps = [Fraction(0)]
    vals = [levels[0]]
    t = Fraction(0)
    if masses[0] > 0:
        t += masses[0]
        bps.append(t)
        vals.append(levels[0])
    for j in range(len(levels) - 1):
        dt = densities[j] * (levels[j + 1] - levels[j])
        # continuity of f forces every value gap to be crossed by a sloped piece
        assert dt > 0
        t += dt
        bps.append(t)
        vals.append(levels[j + 1])
        if masses[j + 1] > 0:
            t += masses[j + 1]
            bps.append(t)
            vals.append(levels[j + 1])
    if len(bps) == 1:
        # constant function: single level carrying the whole width
        t += masses[0]
        bps.append(t)
        vals.append(levels[0])
    assert t == f.width
    return PiecewiseLinear(tuple(bps), tuple(vals))


@dataclass(frozen=True)
class ReorderCriterion:
    """Outcome of the f#(t) >= t check on (0, m]."""

    m: Fraction
    width: Fraction
    verdict: bool
    failure_t: Optional[Fraction] = None


def dominates_identity(fsharp: PiecewiseLinear, m: RationalLike) -> ReorderCriterion:
    """Decide exactly whether fsharp(t) >= t for every t in (0, m].

    ``fsharp`` is expected on a domain starting at 0 (the rearrangement
    convention); a shifted domain is handled by measuring t from its left
    end.  Linearity makes breakpoint checks complete: the difference from
    the identity is itself piecewise linear, so a sign change inside a
    piece is excluded once both piece ends are nonnegative.
    """
    m = _rat(m)
    if m <= 0:
        raise ValueError("m must be positive")
    a = fsharp.breakpoints[0]
    width = fsharp.width
    if m > width:
        raise OutOfRange(f"m = {m} exceeds domain length {width}")

    def g(t):
        return fsharp(a + t) - t

    ts = sorted({bp - a for bp in fsharp.breakpoints if 0 < bp - a <= m} | {m})
    if g(Fraction(0)) < 0:
        # negative already at the left end: by continuity some t in (0, m]
        # violates too; isolate the first root to exhibit one.
        root = m
        prev_t, prev_g = Fraction(0), g(Fraction(0))
        for t in ts:
            gt = g(t)
            if gt >= 0:
                root = prev_t + (t - prev_t) * prev_g / (prev_g - gt)
                break
            prev_t, prev_g = t, gt
        witness = root / 2 if root > 0 else m
        return ReorderCriterion(m, width, False, witness)
    for t in ts:
        if g(t) < 0:
            return ReorderCriterion(m, width, False, t)
    return ReorderCriterion(m, width, True, None)


def sup_admissible(f: PiecewiseLinear) -> Fraction:
    """Largest t* with f#(t) >= t on (0, t*], capped at the domain width.

    Computed as the first exact crossing of the rearrangement strictly
    below the identity; when no such crossing exists the cap b - a is
    returned.  Can be 0 when the rearrangement drops below the identity
    immediately.
    """
    if f.min_value() < 0:
        raise ValueError("profile must be nonnegative")
    fs = monotone_reorder(f)
    for t0, t1, v0, v1 in fs.segments():
        g0, g1 = v0 - t0, v1 - t1
        if g1 >= 0:
            continue
        if g0 < 0:
            return t0
        return t0 + (t1 - t0) * g0 / (g0 - g1)
    return fs.width


def max_norm_distance(f: PiecewiseLinear, g: PiecewiseLinear) -> Fraction:
    """Exact sup-norm of f - g on their common domain."""
    if f.domain != g.domain:
        raise ValueError("functions must share a domain")
    grid = sorted(set(f.breakpoints) | set(g.breakpoints))
    return max(abs(f(t) - g(t)) for t in grid)
