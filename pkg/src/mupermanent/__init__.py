"""Exact mu-permanents, mu-labelings of trees, and path-labeling counts."""

from .algebra import MuPolynomial, inversions, transposition_inversions
from .labeling import (
    LabeledGraph,
    UnlabeledTree,
    count_path_labelings,
    enumerate_path_labelings,
    exists_mu_labeling,
    find_crossing,
    free_trees,
    is_mu_labeling,
    label_tree,
)
from .matrix import (
    ResourceLimitError,
    SquareMatrix,
    determinant_oracle,
    diagonal_product,
    mu_permanent_brute,
    permanent_oracle,
)
from .sequences import (
    a001792_closed_form,
    a001792_det_3diag,
    a001792_det_toeplitz,
    a001792_recurrence,
    cross_validate,
)
from .trees import (
    PreconditionError,
    acyclic_matchings,
    check_derivative_identity,
    check_expansion_identity,
    mask,
    mu_permanent_tree_fast,
)

__version__ = "0.1.0"
