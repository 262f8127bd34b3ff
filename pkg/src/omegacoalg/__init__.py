"""Final coalgebras of containers as omega-chain limits.

Depth-bounded approximation semantics, the unique unfold, bisimulation
witnesses and a bisimilarity decision procedure, and the indexed-container
generalization.
"""

from .container import (
    Container,
    PValue,
    enumerate_w,
    make_node,
    make_trunc,
    pmap,
    tree_equal,
    truncate,
    truncate_to,
)
from .chain import (
    Chain,
    Cone,
    LimitElement,
    check_compat,
    cone_to_map,
    iterate_cochain,
    map_to_cone,
    poly_limit_from,
    poly_limit_to,
    shift_back,
    shift_forward,
)
from .mtype import (
    Coalgebra,
    FinalCoalgebra,
    MElement,
    MorphismCandidate,
    approximate,
    final_coalgebra,
    into,
    out,
    out_coalgebra,
    unfold,
    uniqueness_probe,
    verify_morphism,
    w_chain,
)
from .bisim import (
    BisimWitness,
    Partition,
    bounded_bisim,
    coinduction_transfer,
    diagonal_bisim,
    first_divergence_depth,
    minimize,
    partition_refine,
    verify_bisim,
    witness_from_partition,
)
from .indexed import (
    IndexedCoalgebra,
    IndexedContainer,
    SortedApproxTree,
    SortedMElement,
    i_into,
    i_out,
    iapproximate,
    ibounded_bisim,
    iunfold,
    well_sorted,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
