"""Multiplier ideals of generic determinantal ideals.

For the ideal ``I_r`` of ``r x r`` minors of a generic ``m x n`` matrix,

    J(I_r^c) = intersection over i = 1..r of I_i^(a_i),
    a_i = floor(c (r + 1 - i)) + 1 - (n - i + 1)(m - i + 1).

Results are kept as formal intersections of symbolic powers. Deciding
equality between different presentations would need Groebner bases and is
not attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

from .howald import Interval

__all__ = [
    "DeterminantalShape",
    "FormalExpansion",
    "MinorTermList",
    "SymbolicIntersection",
    "det_exponents",
    "det_jumping_candidates",
    "det_lct",
    "det_multiplier_ideal",
    "minor_generators",
    "partitions",
    "symbolic_power_expansion",
]


@dataclass(frozen=True)
class DeterminantalShape:
    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"matrix must be at least 1x1, got {self.m}x{self.n}")
        if not 1 <= self.r <= min(self.m, self.n):
            raise ValueError(
                f"minor size {self.r} out of range for a {self.m}x{self.n} matrix"
            )

    def codim(self, i: int) -> int:
        """Codimension of ``I_i``, i.e. ``(n - i + 1)(m - i + 1)``."""
        return (self.n - i + 1) * (self.m - i + 1)

    def variable(self, i: int, j: int) -> str:
        return f"x_{i}_{j}"

    def variables(self) -> list[str]:
        return [self.variable(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]


@dataclass(frozen=True)
class SymbolicIntersection:
    """Formal intersection of symbolic powers ``I_i^(a)``; empty means ``(1)``."""

    factors: tuple[tuple[int, int], ...]

    def is_unit(self) -> bool:
        return not self.factors

    def containment_note(self) -> str | None:
        """What the chain ``I_r c ... c I_1`` says about this presentation."""
        if len(self.factors) == 1 and self.factors[0][0] == 1:
            a = self.factors[0][1]
            return f"I_1^({a}) = I_1^{a}: symbolic and ordinary powers of the maximal ideal agree"
        if len(self.factors) > 1 and all(a == 1 for _, a in self.factors):
            top = self.factors[-1][0]
            return f"equals I_{top}, since I_{top} is contained in every other factor"
        return None

    def __str__(self) -> str:
        if not self.factors:
            return "(1)"
        return " ∩ ".join(f"I_{i}^({a})" for i, a in self.factors)


@dataclass(frozen=True)
class FormalExpansion:
    """``I_i^(a)`` as a sum of products of minor ideals, one term per partition."""

    minor_size: int
    exponent: int
    terms: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return " + ".join("*".join(f"I_{s}" for s in term) for term in self.terms) or "(0)"


@dataclass(frozen=True)
class MinorTermList:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    terms: tuple[tuple[int, tuple[int, ...]], ...]

    def format(self, shape: DeterminantalShape) -> str:
        names = shape.variables()
        out = []
        for k, (sign, v) in enumerate(self.terms):
            mono = "*".join(names[t] for t, e in enumerate(v) if e)
            if k == 0:
                out.append(mono if sign > 0 else f"-{mono}")
            else:
                out.append(("+ " if sign > 0 else "- ") + mono)
        return " ".join(out)


def _exponent(c) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"exponent must be nonnegative, got {c}")
    return c


def det_exponents(shape: DeterminantalShape, c) -> list[int]:
    c = _exponent(c)
    r = shape.r
    return [math.floor(c * (r + 1 - i)) + 1 - shape.codim(i) for i in range(1, r + 1)]


def det_multiplier_ideal(shape: DeterminantalShape, c) -> SymbolicIntersection:
    """``J(I_r^c)`` as the intersection of the ``I_i^(a_i)`` with ``a_i >= 1``.

    >>> print(det_multiplier_ideal(DeterminantalShape(4, 5, 3), 6))
    I_2^(1) ∩ I_3^(1)
    """
    exps = det_exponents(shape, c)
    return SymbolicIntersection(tuple((i, a) for i, a in enumerate(exps, 1) if a >= 1))


def det_lct(shape: DeterminantalShape) -> Fraction:
    r = shape.r
    return min(Fraction(shape.codim(i), r + 1 - i) for i in range(1, r + 1))


def det_jumping_candidates(
    shape: DeterminantalShape, interval: Interval | None = None
) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Values where some exponent ``a_i`` increases while already ``>= 1``.

    These are the ``c = s / (r + 1 - i)`` with integer ``s >= codim(I_i)``.
    Each is paired with the indices ``i`` that increment there. A candidate is
    a true jumping number unless every incrementing factor is redundant in the
    intersection, which is not decided here.
    """
    if interval is None:
        interval = Interval(0, shape.m * shape.n)
    r = shape.r
    found: dict[Fraction, set[int]] = {}
    for i in range(1, r + 1):
        k = r + 1 - i
        s = max(shape.codim(i), math.floor(interval.lo * k))
        while Fraction(s, k) <= interval.hi:
            c = Fraction(s, k)
            if c in interval:
                found.setdefault(c, set()).add(i)
            s += 1
    return [(c, tuple(sorted(found[c]))) for c in sorted(found)]


def partitions(a: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``a`` as weakly decreasing tuples, in reverse lex order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if largest is None:
        largest = a
    if a == 0:
        yield ()
        return
    for first in range(min(a, largest), 0, -1):
        for rest in partitions(a - first, first):
            yield (first,) + rest


def symbolic_power_expansion(shape: DeterminantalShape, i: int, a: int) -> FormalExpansion:
    """Expand ``I_i^(a)`` as the sum over partitions ``k`` of ``a`` of ``prod I_(i-1+k_j)``.

    Terms involving minors larger than ``min(m, n)`` vanish and are dropped.
    """
    if not 1 <= i <= min(shape.m, shape.n):
        raise ValueError(f"minor size {i} out of range for shape {shape}")
    if a < 1:
        raise ValueError(f"symbolic power exponent must be positive, got {a}")
    top = min(shape.m, shape.n)
    terms = []
    for kappa in partitions(a):
        sizes = tuple(i - 1 + k for k in kappa)
        if sizes[0] <= top:
            terms.append(sizes)
    return FormalExpansion(i, a, tuple(terms))


def _sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for x in range(len(perm)) for y in range(x + 1, len(perm)) if perm[x] > perm[y]
    )
    return -1 if inversions % 2 else 1


def minor_generators(shape: DeterminantalShape) -> list[MinorTermList]:
    """Determinant expansions of all ``r x r`` minors of the generic matrix.

    Variables are ordered row by row; ``x_{i,j}`` has index ``(i-1)*n + (j-1)``.
    """
    m, n, r = shape.m, shape.n, shape.r
    perms = [(p, _sign(p)) for p in permutations(range(r))]
    out = []
    for rows in combinations(range(1, m + 1), r):
        for cols in combinations(range(1, n + 1), r):
            terms = []
            for p, sign in perms:
                v = [0] * (m * n)
                for k in range(r):
                    v[(rows[k] - 1) * n + cols[p[k]] - 1] = 1
                terms.append((sign, tuple(v)))
            out.append(MinorTermList(rows, cols, tuple(terms)))
    return out
