"""Square-tiled surfaces (origamis): cylinders, homology, affine multitwists,
Zariski density of monodromy groups, spin parity and square-handle surgery."""

from ._squaretile import (
    InputError,
    InvariantViolation,
    Origami,
    bubble,
    catalog,
    catalog_names,
    cylinders,
    hyperelliptic,
    intersection_form,
    is_dense,
    monodromy,
    run_cli,
    spin_parity,
    stratum,
)

__all__ = [
    "InputError",
    "InvariantViolation",
    "Origami",
    "bubble",
    "catalog",
    "catalog_names",
    "cylinders",
    "hyperelliptic",
    "intersection_form",
    "is_dense",
    "monodromy",
    "run_cli",
    "spin_parity",
    "stratum",
]
