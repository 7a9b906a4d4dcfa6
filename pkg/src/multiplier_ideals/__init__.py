"""Multiplier ideals, log canonical thresholds and jumping numbers.

Monomial ideals are handled through their Newton polyhedra, generic
determinantal ideals through intersections of symbolic powers of minor
ideals. All arithmetic is exact.
"""

from .core import (
    MonomialIdeal,
    ParseError,
    contains_monomial,
    format_monomial,
    format_rational,
    minimalize,
    parse_monomial,
    parse_rational,
    power,
    product,
    quotient_by_monomial,
)
from .polyhedra import (
    Facet,
    NewtonPolyhedron,
    ScaledSystem,
    minimal_lattice_generators,
    newton_polyhedron,
    satisfies,
    scale_system,
)
from .howald import (
    InfiniteThresholdError,
    Interval,
    JumpingReport,
    ThresholdResult,
    in_multiplier_ideal,
    jumping_numbers,
    lct,
    multiplier_ideal,
    skoda_extend,
    threshold_of_monomial,
)
from .johnson import (
    DeterminantalShape,
    SymbolicIntersection,
    det_exponents,
    det_jumping_candidates,
    det_lct,
    det_multiplier_ideal,
    minor_generators,
    symbolic_power_expansion,
)

__version__ = "0.1.0"
