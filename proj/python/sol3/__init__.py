"""Mod-2 cohomology rings and Borsuk-Ulam indices of Sol^3-manifold groups.

Matrix entries are in action order: for a mapping torus, t x t^-1 = x^a y^b
and t y t^-1 = x^c y^d.
"""

import json

from ._sol3 import (
    Sol3Error,
    abelianization,
    bu_indices,
    case_label,
    double_cover_factorization,
    fixtures,
    induced_monodromy,
    is_valid,
    smith_diagonal,
)
from . import _sol3

__all__ = [
    "Sol3Error",
    "abelianization",
    "analyze",
    "bu_indices",
    "case_label",
    "double_cover_factorization",
    "fixtures",
    "induced_monodromy",
    "is_valid",
    "smith_diagonal",
]


def analyze(family, a, b, c, d, verify=False):
    """Full analysis document as a dict (same layout as the CLI's JSON)."""
    return json.loads(_sol3.analyze_json(family, a, b, c, d, verify))
