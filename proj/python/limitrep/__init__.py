"""Exact workbench for induced modules of finite groups of Lie type.

The heavy lifting happens in the C++ core; this package re-exports the
bound entry points.
"""

from ._limitrep import (  # noqa: F401
    BoundError,
    InputError,
    bruhat_decompose,
    borel_report,
    cells,
    certify,
    cli,
    conway_polynomial,
    criterion_count,
    ej_report,
    field_order,
    gelfand_graev_report,
    group_order,
    kl_polynomial,
    mtheta_report,
    steinberg_report,
    tower_report,
)

__all__ = [
    "BoundError",
    "InputError",
    "bruhat_decompose",
    "borel_report",
    "cells",
    "certify",
    "cli",
    "conway_polynomial",
    "criterion_count",
    "ej_report",
    "field_order",
    "gelfand_graev_report",
    "group_order",
    "kl_polynomial",
    "mtheta_report",
    "steinberg_report",
    "tower_report",
]
