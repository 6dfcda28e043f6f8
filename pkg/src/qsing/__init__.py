"""Exact combinatorics of minimal resolutions of C^2/Gamma, Gamma in U(2) finite,
and the dimension of the local moduli of scalar-flat Kahler ALE metrics."""
from .group import (
    Cyclic, Factor, Index2Dihedral, Index3Tetrahedral, PhiProduct,
    classify, format_descriptor, order, parse_descriptor, validate,
)
from .hj import dual_expand, embedding_dimension, hj_expand, riemenschneider_check
from .toric import (
    chart_atlas, derivation_change_of_frame, invariant_monomials, lattice_chain,
    verify_transitions,
)
from .divisor import counts, cyclic_divisor, dihedral_embedding_dimension, load_divisor
from .moduli import (
    full_report, moduli_dimension_cyclic, moduli_dimension_hyperkahler,
    moduli_dimension_noncyclic, table3_consistency,
)

__version__ = "0.1.0"
