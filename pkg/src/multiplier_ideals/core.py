"""Exact arithmetic helpers, exponent vectors and monomial ideals.

Monomials are represented by their exponent vectors, plain tuples of
nonnegative integers. A :class:`MonomialIdeal` stores the variable names and
its minimal generators in canonical order, so two ideals compare equal exactly
when they have the same monomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ExponentVector = tuple[int, ...]

__all__ = [
    "ExponentVector",
    "MonomialIdeal",
    "ParseError",
    "contains_monomial",
    "exponent_vector",
    "format_monomial",
    "format_rational",
    "minimalize",
    "parse_monomial",
    "parse_rational",
    "power",
    "product",
    "quotient_by_monomial",
]


class ParseError(ValueError):
    """Raised for malformed monomial or rational input."""


_FACTOR = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")
_RATIONAL = re.compile(r"(-?\d+)(?:/(\d+))?")


def exponent_vector(entries: Iterable[int]) -> ExponentVector:
    v = tuple(entries)
    for e in v:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"exponent entries must be nonnegative integers, got {v}")
    return v


def parse_rational(text: str) -> Fraction:
    """Parse ``P/Q`` or an integer into a :class:`~fractions.Fraction`."""
    m = _RATIONAL.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(c: Fraction | int) -> str:
    return str(Fraction(c))


def parse_monomial(text: str, variables: Sequence[str]) -> ExponentVector:
    """Read a power product such as ``"z*w^2"`` as an exponent vector.

    Factors are ``name`` or ``name^k`` with ``k >= 1``, joined by ``*``; the
    literal ``1`` is the empty product. Repeated names accumulate.

    >>> parse_monomial("x^2*x", ["x", "y"])
    (3, 0)
    """
    index = {name: i for i, name in enumerate(variables)}
    v = [0] * len(variables)
    body = text.strip()
    if body == "1":
        return tuple(v)
    if not body:
        raise ParseError("empty monomial")
    for token in body.split("*"):
        token = token.strip()
        m = _FACTOR.fullmatch(token)
        if m is None:
            raise ParseError(f"malformed factor {token!r}")
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r} in factor {token!r}")
        k = 1 if power is None else int(power)
        if k < 1:
            raise ParseError(f"exponent must be positive in factor {token!r}")
        v[index[name]] += k
    return tuple(v)


def format_monomial(v: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, v):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _canonical_key(v: ExponentVector) -> tuple[int, ExponentVector]:
    return (sum(v), v)


def _divides(g: ExponentVector, v: ExponentVector) -> bool:
    return all(a <= b for a, b in zip(g, v))


def minimalize(gens: Iterable[Sequence[int]]) -> list[ExponentVector]:
    """Return the minimal elements of ``gens`` in canonical order.

    >>> minimalize([(2, 0), (3, 0), (0, 1)])
    [(0, 1), (2, 0)]
    """
    vecs = sorted({tuple(g) for g in gens}, key=_canonical_key)
    if vecs and len({len(g) for g in vecs}) != 1:
        raise ValueError("exponent vectors of mixed dimension")
    kept: list[ExponentVector] = []
    # a divisor always has total degree <= the multiple, so it is seen first
    for v in vecs:
        if not any(_divides(g, v) for g in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by minimal generators.

    The generators are minimalized and sorted on construction. ``(1)`` is the
    single zero vector, ``(0)`` the empty generator list.
    """

    variables: tuple[str, ...]
    generators: tuple[ExponentVector, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        gens = [exponent_vector(g) for g in self.generators]
        for g in gens:
            if len(g) != len(variables):
                raise ValueError(
                    f"generator {g} has dimension {len(g)}, expected {len(variables)}"
                )
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "generators", tuple(minimalize(gens)))

    @classmethod
    def parse(cls, variables: Sequence[str], gens: Iterable[str]) -> MonomialIdeal:
        return cls(tuple(variables), tuple(parse_monomial(g, variables) for g in gens))

    @classmethod
    def unit(cls, variables: Sequence[str]) -> MonomialIdeal:
        return cls(tuple(variables), ((0,) * len(variables),))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def dim(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    def __contains__(self, v) -> bool:
        return contains_monomial(self, v)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def issubset(self, other: MonomialIdeal) -> bool:
        return all(contains_monomial(other, g) for g in self.generators)

    def monomial_strings(self) -> list[str]:
        return [format_monomial(g, self.variables) for g in self.generators]

    def __str__(self) -> str:
        if self.is_zero():
            return "ideal()"
        return "ideal(" + ", ".join(self.monomial_strings()) + ")"


def _check_dim(I: MonomialIdeal, v: Sequence[int]) -> None:
    if len(v) != I.dim:
        raise ValueError(f"vector of dimension {len(v)} used with ideal in {I.dim} variables")


def contains_monomial(I: MonomialIdeal, v: Sequence[int]) -> bool:
    _check_dim(I, v)
    v = tuple(v)
    return any(_divides(g, v) for g in I.generators)


def quotient_by_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """The colon ideal ``(I : x^m)``."""
    _check_dim(I, m)
    gens = (tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.generators)
    return MonomialIdeal(I.variables, tuple(gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.variables != J.variables:
        raise ValueError("ideals live in different rings")
    gens = (tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators)
    return MonomialIdeal(I.variables, tuple(gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative ideal power")
    result = MonomialIdeal.unit(I.variables)
    for _ in range(k):
        result = product(result, I)
    return result
