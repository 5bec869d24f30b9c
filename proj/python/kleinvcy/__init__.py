"""Klein bottle group computations: group law, isotropy of lines,
commensurability classes, classifying-space models and their homology."""

from ._kleinvcy import (
    ParseError,
    PreconditionError,
    act_on_kn,
    act_point,
    canonicalize,
    circle_klein_product_homology,
    comm_class,
    commensurable,
    commensurator,
    conj,
    contains,
    fixed_set,
    inv,
    isotropy,
    map_f,
    model_homology,
    mul,
    pow,
    pushout_report,
    run_cli,
    stabilizes,
    verify_i_complex,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "act_on_kn",
    "act_point",
    "canonicalize",
    "circle_klein_product_homology",
    "comm_class",
    "commensurable",
    "commensurator",
    "conj",
    "contains",
    "fixed_set",
    "inv",
    "isotropy",
    "map_f",
    "model_homology",
    "mul",
    "pow",
    "pushout_report",
    "run_cli",
    "stabilizes",
    "verify_i_complex",
]
