"""Newton polyhedra of monomial ideals and their scaled interiors.

The facet system of ``conv(gens) + R^n_{>=0}`` is obtained with an exact
integer double description run on the homogenized cone spanned by the
points ``(v, 1)`` and the recession directions ``(e_j, 0)``. Everything is
integer or :class:`~fractions.Fraction` arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .core import ExponentVector, exponent_vector, minimalize

__all__ = [
    "Facet",
    "NewtonPolyhedron",
    "ScaledSystem",
    "minimal_lattice_generators",
    "newton_polyhedron",
    "satisfies",
    "scale_system",
    "violation_witness",
]


@dataclass(frozen=True)
class Facet:
    """The halfspace ``normal . v >= offset``."""

    normal: tuple[int, ...]
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("facet normal must be nonzero")
        if min(self.normal) < 0 or self.offset < 0:
            raise ValueError(f"facet {self} has negative entries")
        if math.gcd(*self.normal) != 1:
            raise ValueError(f"facet normal {self.normal} is not primitive")

    def value(self, v: Sequence[int]):
        return sum(a * x for a, x in zip(self.normal, v))

    def is_coordinate(self) -> bool:
        return self.offset == 0

    def format(self, variables: Sequence[str]) -> str:
        terms = []
        for a, name in zip(self.normal, variables):
            if a == 1:
                terms.append(name)
            elif a:
                terms.append(f"{a}*{name}")
        return " + ".join(terms) + f" >= {self.offset}"

    def as_row(self) -> list[int]:
        """Normal entries followed by ``-offset``, the layout Macaulay2 prints."""
        return [*self.normal, -self.offset]


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    facets: tuple[Facet, ...]
    source_generators: tuple[ExponentVector, ...]

    def contains(self, point: Sequence) -> bool:
        return all(f.value(point) >= f.offset for f in self.facets)

    def tight_generators(self, facet: Facet) -> list[ExponentVector]:
        return [v for v in self.source_generators if facet.value(v) == facet.offset]


@dataclass(frozen=True)
class ScaledSystem:
    """Integer system ``rows[i] . v >= offsets[i]`` cutting out ``Int(c Newt)``."""

    rows: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    c: Fraction

    @property
    def dimension(self) -> int:
        return len(self.rows[0])


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _extreme_rays(constraints: list[tuple[int, ...]], rays, zero_sets, start: int):
    """Double description: intersect the cone with each remaining constraint.

    ``rays`` must already be the extreme rays of the cone cut out by
    ``constraints[:start]``, with ``zero_sets`` holding the tight indices.
    """
    d = len(rays[0])
    for k in range(start, len(constraints)):
        g = constraints[k]
        vals = [_dot(g, r) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        zer = [i for i, s in enumerate(vals) if s == 0]
        if not neg:
            zero_sets = [z | {k} if vals[i] == 0 else z for i, z in enumerate(zero_sets)]
            continue
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_zero = [zero_sets[i] for i in pos] + [zero_sets[i] | {k} for i in zer]
        for i in pos:
            for j in neg:
                common = zero_sets[i] & zero_sets[j]
                if len(common) < d - 2:
                    continue
                # combinatorial adjacency test
                if any(
                    common <= zero_sets[t]
                    for t in range(len(rays))
                    if t != i and t != j
                ):
                    continue
                r = tuple(vals[i] * b - vals[j] * a for a, b in zip(rays[i], rays[j]))
                new_rays.append(_primitive(r))
                new_zero.append(common | {k})
        rays, zero_sets = new_rays, new_zero
    return rays, zero_sets


def _facet_order(f: Facet):
    return (f.offset == 0, tuple(-a for a in f.normal), f.offset)


def newton_polyhedron(gens: Iterable[Sequence[int]]) -> NewtonPolyhedron:
    """Irredundant facet system of the Newton polyhedron of ``gens``.

    >>> P = newton_polyhedron([(2, 0), (0, 3)])
    >>> [(f.normal, f.offset) for f in P.facets]
    [((3, 2), 6), ((1, 0), 0), ((0, 1), 0)]
    """
    points = sorted({exponent_vector(v) for v in gens})
    if not points:
        raise ValueError("the zero ideal has no Newton polyhedron")
    n = len(points[0])
    if any(len(v) != n for v in points):
        raise ValueError("generators of mixed dimension")
    if n == 0:
        raise ValueError("need at least one variable")

    # interior generators only produce redundant constraints; dropping the
    # non-minimal ones keeps the run short without changing the polyhedron
    verts = minimalize(points)
    units = [tuple(int(i == j) for i in range(n)) + (0,) for j in range(n)]
    constraints = units + [v + (1,) for v in verts]

    # dual cone of the basis {(e_j, 0)} u {(v0, 1)} is simplicial: its rays are
    # the columns of the inverse basis matrix
    v0 = verts[0]
    rays = [tuple(int(i == j) for i in range(n)) + (-v0[j],) for j in range(n)]
    rays.append((0,) * n + (1,))
    zero_sets = []
    for j in range(n):
        zero_sets.append(frozenset(set(range(n)) - {j} | {n}))
    zero_sets.append(frozenset(range(n)))
    rays, zero_sets = _extreme_rays(constraints, rays, zero_sets, n + 1)

    facets = []
    for r in rays:
        normal, a0 = r[:n], r[n]
        if not any(normal):
            continue  # the hyperplane at infinity
        g = math.gcd(*normal)
        if a0 % g:
            raise ArithmeticError(f"non-integral facet offset from ray {r}")
        facets.append(Facet(tuple(a // g for a in normal), -a0 // g))
    facets.sort(key=_facet_order)
    P = NewtonPolyhedron(n, tuple(facets), tuple(points))
    for k in range(len(P.facets)):
        if violation_witness(P, k) is None:
            raise ArithmeticError(f"redundant facet {P.facets[k]} survived")
    return P


def violation_witness(P: NewtonPolyhedron, index: int) -> tuple[Fraction, ...] | None:
    """A rational point violating facet ``index`` and satisfying all others.

    Returns ``None`` when no such point is found, i.e. the facet is redundant.
    The point is pushed off a relative-interior point of the facet along the
    inward normal.
    """
    f = P.facets[index]
    n = P.dimension
    tight = P.tight_generators(f)
    if not tight:
        return None
    base = [Fraction(sum(col), len(tight)) for col in zip(*tight)]
    for j in range(n):
        if f.normal[j] == 0:
            base[j] += 1  # recession directions lying in the facet
    others = [g for i, g in enumerate(P.facets) if i != index]
    slacks = [g.value(base) - g.offset for g in others]
    if any(s <= 0 for s in slacks):
        return None
    eps = Fraction(1)
    for g, s in zip(others, slacks):
        drift = g.value(f.normal)
        if drift > 0:
            eps = min(eps, s / (2 * drift))
    point = tuple(b - eps * a for a, b in zip(f.normal, base))
    if f.value(point) >= f.offset or any(g.value(point) < g.offset for g in others):
        return None
    return point


def scale_system(P: NewtonPolyhedron, c) -> ScaledSystem:
    """Integer system whose solutions are the lattice points of ``Int(c Newt)``.

    For ``c = p/q`` each facet row becomes ``q*A_i`` with offset ``p*b_i + 1``
    when ``b_i != 0`` and ``0`` otherwise.
    """
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"exponent must be nonnegative, got {c}")
    p, q = c.numerator, c.denominator
    rows = tuple(tuple(q * a for a in f.normal) for f in P.facets)
    offsets = tuple(p * f.offset + 1 if f.offset else 0 for f in P.facets)
    return ScaledSystem(rows, offsets, c)


def satisfies(S: ScaledSystem, v: Sequence[int]) -> bool:
    if len(v) != S.dimension:
        raise ValueError(f"vector of dimension {len(v)} for system in {S.dimension} variables")
    return all(_dot(row, v) >= b for row, b in zip(S.rows, S.offsets))


def coordinate_bounds(S: ScaledSystem) -> list[int]:
    """Per-coordinate upper bound on entries of minimal solutions."""
    bounds = []
    for j in range(S.dimension):
        cands = [-(-b // row[j]) for row, b in zip(S.rows, S.offsets) if row[j] > 0]
        bounds.append(max(cands, default=0))
    return bounds


@lru_cache(maxsize=4096)
def _minimal_solutions(rows: tuple[tuple[int, ...], ...], offsets: tuple[int, ...]):
    """Minimal points of ``{w >= 0 : rows . w >= offsets}``, as a list.

    Slices on the first coordinate: a minimal ``(t, u)`` has ``u`` minimal in
    the slice at ``t``, and ``t`` never exceeds the first coordinate bound.
    """
    live = [(row, b) for row, b in zip(rows, offsets) if b > 0]
    dim = len(rows[0]) if rows else 0
    if not live:
        return [(0,) * dim]
    if dim == 0:
        return []
    if any(not any(row) for row, _ in live):
        return []
    top = max((-(-b // row[0]) for row, b in live if row[0] > 0), default=0)
    found = []
    for t in range(top + 1):
        sub_rows = tuple(row[1:] for row, _ in live)
        sub_offsets = tuple(b - row[0] * t for row, b in live)
        for u in _minimal_solutions(sub_rows, sub_offsets):
            found.append((t,) + u)
    return minimalize(found)


def minimal_lattice_generators(S: ScaledSystem) -> list[ExponentVector]:
    """Minimal nonnegative integer solutions of ``S``, in canonical order.

    >>> S = scale_system(newton_polyhedron([(2, 0), (0, 3)]), 1)
    >>> minimal_lattice_generators(S)
    [(1, 2), (2, 1), (3, 0), (0, 4)]
    """
    return list(_minimal_solutions(S.rows, S.offsets))
