from .words import Generator, GenKind, Word, commutator, gamma  # noqa
from .presentation import (  # noqa
    Abelianization,
    Presentation,
    Provenance,
    Relator,
    abelianization,
    build_presentation,
    export_text,
    replace_elliptic,
    simplify_genus,
)
from .intalg import IntMatrix, SnfResult, char_poly, rational_sum_eq, smith_normal_form  # noqa
