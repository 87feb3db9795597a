"""Planar reduced rooted trees, planar binomial coefficients and planar power series."""

from ._core import (
    ParseError,
    ResourceError,
    Series,
    Tree,
    arity_profile,
    binom1,
    binom1_oracle,
    binom2,
    binom2_oracle,
    catalan,
    catalan_aggregate,
    classical_binom,
    coaddition,
    coaddition_structural,
    contract,
    corona_root_coeff,
    enumerate_profile,
    enumerate_trees,
    exp_t,
    gamma_sets,
    generalized_root,
    graft,
    log_t,
    mul,
    parse_tree,
    profiles_of_degree,
    render_tree,
    root,
    run_cli,
    substitute,
    tree_power,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
