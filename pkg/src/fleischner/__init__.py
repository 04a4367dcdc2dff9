"""Hamilton cycles in squares of cubic plane graphs.

Given a cubic, 2-connected, loopless plane multigraph G and a 2-factor X,
:func:`construct` adds two chords per connecting matching edge, producing a
plane graph J inside the square of G together with a Hamilton cycle of J
that uses no edge of G outside X.
"""

from .construction import Color, ConstructionResult, construct
from .corpus import NAMES, named, random_class_G
from .drawing import export_drawing
from .errors import FleischnerError
from .oracle import bonds_via_dual_cycles, cross_check, hamilton_search
from .planar_map import PlaneMultigraph, build_map, check_class_G
from .pmg import emit_cycle, emit_pmg, parse_cycle, parse_pmg
from .report import emit_report
from .two_factor import (
    TwoFactor,
    default_two_factor,
    first_matching_two_factor,
    min_component_two_factor,
)
from .verify import VerificationReport, check_hamilton, verify, verify_certificate

__all__ = [
    "Color",
    "ConstructionResult",
    "construct",
    "NAMES",
    "named",
    "random_class_G",
    "export_drawing",
    "FleischnerError",
    "bonds_via_dual_cycles",
    "cross_check",
    "hamilton_search",
    "PlaneMultigraph",
    "build_map",
    "check_class_G",
    "emit_cycle",
    "emit_pmg",
    "parse_cycle",
    "parse_pmg",
    "emit_report",
    "TwoFactor",
    "default_two_factor",
    "first_matching_two_factor",
    "min_component_two_factor",
    "VerificationReport",
    "check_hamilton",
    "verify",
    "verify_certificate",
]
