from .orders import Order, OrderKind, TraceStep  # noqa
from .chain import ChainData, chain_sequence, gamma_order_in_chain, order_growth_check  # noqa
from .comb import (  # noqa
    CombParams,
    CombVerdict,
    ExceptionalKind,
    classify,
    comb_params_from_graph,
    gcd_reduce,
    homology_gamma_order,
    dihedral_matrix_check,
)
