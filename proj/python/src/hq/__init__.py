"""Hypergraph quasirandomness measures, constructions, and checks.

The heavy lifting lives in the compiled extension ``hq._core``; this
package re-exports it and adds a couple of pure-Python conveniences.
"""

from fractions import Fraction

from ._core import (
    CdResult,
    CensusReport,
    Construction,
    CountResult,
    DevResult,
    DiscResult,
    Hypergraph,
    Pattern,
    Rat,
    SubsetFamily,
    binom,
    build_cycle,
    cd_threshold_defect,
    cd_witness,
    color_class_graph,
    count_labeled,
    deviation,
    disc_defect,
    expand_witness,
    expansion_count,
    expansion_defect,
    ksubsets,
    parity_census,
    pi_linear_certificate_json,
    poset_dot,
    poset_json,
    sample_a,
    sample_b,
    sample_d,
)

__version__ = "0.1.0"


def to_fraction(r: Rat) -> Fraction:
    """Exact value of a :class:`Rat` as a :class:`fractions.Fraction`."""
    return Fraction(r.num, r.den)


__all__ = [
    "CdResult",
    "CensusReport",
    "Construction",
    "CountResult",
    "DevResult",
    "DiscResult",
    "Hypergraph",
    "Pattern",
    "Rat",
    "SubsetFamily",
    "binom",
    "build_cycle",
    "cd_threshold_defect",
    "cd_witness",
    "color_class_graph",
    "count_labeled",
    "deviation",
    "disc_defect",
    "expand_witness",
    "expansion_count",
    "expansion_defect",
    "ksubsets",
    "parity_census",
    "pi_linear_certificate_json",
    "poset_dot",
    "poset_json",
    "sample_a",
    "sample_b",
    "sample_d",
    "to_fraction",
]
