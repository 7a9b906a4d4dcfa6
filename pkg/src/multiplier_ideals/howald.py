"""Multiplier ideals of monomial ideals via Howald's theorem.

``x^v`` lies in ``J(I^c)`` exactly when ``v + 1`` is in the interior (relative
to the nonnegative orthant) of ``c * Newt(I)``. With ``c = p/q`` the interior
lattice points are the solutions of ``qAv >= b'`` and the multiplier ideal is
the colon of that monomial ideal by ``x^1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import MonomialIdeal, ExponentVector, power, product, quotient_by_monomial
from .polyhedra import (
    Facet,
    NewtonPolyhedron,
    minimal_lattice_generators,
    newton_polyhedron,
    scale_system,
)

__all__ = [
    "InfiniteThresholdError",
    "Interval",
    "JumpingReport",
    "ThresholdResult",
    "in_multiplier_ideal",
    "jumping_numbers",
    "lct",
    "multiplier_ideal",
    "skoda_extend",
    "threshold_of_monomial",
]


class InfiniteThresholdError(ValueError):
    """The unit ideal: no monomial ever leaves ``J(I^c)``."""


@dataclass(frozen=True)
class ThresholdResult:
    value: Fraction
    witnesses: tuple[Facet, ...]


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = True
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo < 0:
            raise ValueError(f"interval must lie in [0, oo), got lo = {self.lo}")
        if self.lo >= self.hi:
            raise ValueError(f"empty interval {self}")

    def __contains__(self, c) -> bool:
        above = c > self.lo if self.lo_open else c >= self.lo
        below = c < self.hi if self.hi_open else c <= self.hi
        return above and below

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class JumpingReport:
    numbers: tuple[Fraction, ...]
    ideals: tuple[MonomialIdeal, ...]

    def __iter__(self):
        return iter(zip(self.numbers, self.ideals))

    def __len__(self) -> int:
        return len(self.numbers)


@lru_cache(maxsize=256)
def _newton(gens: tuple[ExponentVector, ...]) -> NewtonPolyhedron:
    return newton_polyhedron(gens)


def _check_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ValueError("multiplier ideals of the zero ideal are undefined")


def _exponent(c) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"exponent must be nonnegative, got {c}")
    return c


def _bounded_facets(I: MonomialIdeal) -> list[Facet]:
    _check_nonzero(I)
    facets = [f for f in _newton(I.generators).facets if f.offset]
    if not facets:
        raise InfiniteThresholdError("the unit ideal has infinite thresholds")
    return facets


@lru_cache(maxsize=4096)
def _multiplier_ideal(I: MonomialIdeal, c: Fraction) -> MonomialIdeal:
    if I.is_unit() or c == 0:
        return MonomialIdeal.unit(I.variables)
    S = scale_system(_newton(I.generators), c)
    interior = MonomialIdeal(I.variables, tuple(minimal_lattice_generators(S)))
    return quotient_by_monomial(interior, (1,) * I.dim)


def multiplier_ideal(I: MonomialIdeal, c) -> MonomialIdeal:
    """The multiplier ideal ``J(I^c)`` of a nonzero monomial ideal.

    >>> I = MonomialIdeal.parse("xyzw", ["x*y", "x*z", "y*z", "y*w", "z*w^2"])
    >>> print(multiplier_ideal(I, Fraction(7, 3)))
    ideal(y, z*w, z^2, x*z)
    """
    _check_nonzero(I)
    return _multiplier_ideal(I, _exponent(c))


def in_multiplier_ideal(I: MonomialIdeal, v: Sequence[int], c) -> bool:
    """Test ``x^v in J(I^c)`` straight from the facet inequalities."""
    _check_nonzero(I)
    c = _exponent(c)
    if len(v) != I.dim:
        raise ValueError(f"vector of dimension {len(v)} for ideal in {I.dim} variables")
    shifted = [x + 1 for x in v]
    for f in _newton(I.generators).facets:
        lhs = f.value(shifted)
        if f.offset and not lhs > c * f.offset:
            return False
        if not f.offset and lhs < 0:
            return False
    return True


def threshold_of_monomial(I: MonomialIdeal, v: Sequence[int]) -> ThresholdResult:
    """Least ``c`` with ``x^v`` outside ``J(I^c)``, and the facets responsible.

    Raises :class:`InfiniteThresholdError` for the unit ideal.
    """
    if len(v) != I.dim:
        raise ValueError(f"vector of dimension {len(v)} for ideal in {I.dim} variables")
    shifted = [x + 1 for x in v]
    ratios = [(Fraction(f.value(shifted), f.offset), f) for f in _bounded_facets(I)]
    value = min(r for r, _ in ratios)
    return ThresholdResult(value, tuple(f for r, f in ratios if r == value))


def lct(I: MonomialIdeal) -> Fraction:
    """Log canonical threshold, the threshold of the monomial ``1``."""
    return threshold_of_monomial(I, (0,) * I.dim).value


def _semigroup_values(weights: list[int], base: int, limit: int) -> list[int]:
    """All ``base + sum(k_j * w_j)`` with ``k_j >= 0`` not exceeding ``limit``."""
    if limit < base:
        return []
    reach = [False] * (limit - base + 1)
    reach[0] = True
    for s in range(1, len(reach)):
        reach[s] = any(w <= s and reach[s - w] for w in weights)
    return [base + s for s, ok in enumerate(reach) if ok]


def jumping_candidates(I: MonomialIdeal, hi) -> list[Fraction]:
    """Values ``normal . w / offset`` with ``w >= 1`` up to ``hi``, sorted."""
    hi = Fraction(hi)
    values = set()
    for f in _bounded_facets(I):
        weights = sorted({a for a in f.normal if a})
        limit = math.floor(hi * f.offset)
        for k in _semigroup_values(weights, sum(f.normal), limit):
            values.add(Fraction(k, f.offset))
    return sorted(values)


def jumping_numbers(I: MonomialIdeal, interval: Interval | None = None) -> JumpingReport:
    """Jumping numbers of ``I`` in ``interval`` with their multiplier ideals.

    The default interval is ``(0, n]`` for ``n`` variables. Every candidate is
    confirmed by comparing the multiplier ideal at it with the one halfway
    back to the previous candidate.

    >>> I = MonomialIdeal.parse("xy", ["x^2", "y^3"])
    >>> [str(c) for c in jumping_numbers(I, Interval(0, 1)).numbers]
    ['5/6']
    """
    if interval is None:
        interval = Interval(0, I.dim)
    candidates = jumping_candidates(I, interval.hi)
    numbers, ideals = [], []
    prev = Fraction(0)
    for c in candidates:
        here = multiplier_ideal(I, c)
        if here != multiplier_ideal(I, (prev + c) / 2) and c in interval:
            numbers.append(c)
            ideals.append(here)
        prev = c
    return JumpingReport(tuple(numbers), tuple(ideals))


def skoda_extend(I: MonomialIdeal, c, base) -> MonomialIdeal:
    """``J(I^c)`` from Skoda's theorem, ``J(I^c) = I * J(I^(c-1))`` for ``c >= n``.

    Peels off ``k = ceil(c - base)`` factors of ``I`` so the remaining exponent
    lands in ``(base - 1, base]`` and is computed directly.
    """
    c, base = _exponent(c), Fraction(base)
    if base < I.dim:
        raise ValueError(f"Skoda base {base} is below the number of variables {I.dim}")
    if c < base:
        raise ValueError(f"exponent {c} is below the Skoda base {base}")
    k = math.ceil(c - base)
    return product(power(I, k), multiplier_ideal(I, c - k))
