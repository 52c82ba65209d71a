"""Finite-relation significance toolkit.

Non-dominated ("significant") subsets of finite universes under arbitrary
binary relations and systems of key-induced orders, with layer
decompositions, a planar dependence-direction coefficient, collective
subset comparison, geometric skylines and a measure-driven valuation
evolution.
"""

__version__ = "0.1.0"

from .collective import (
    SubsetFamily,
    ValuedGroundSet,
    collective_altiset,
    pairwise_elimination,
    rh_dominates,
    threshold_profile,
)
from .dependence import (
    PointSet2D,
    decreasingness_index,
    epsilon,
    increasing_decomposition,
    increasingness_index,
)
from .domains import GridMeasure, ValuationTrace, evolve, inverse_altiset_measure, voronoi_mu
from .errors import AltisetError
from .geoalt import (
    SummitField,
    geo_altiset_oracle,
    record_events,
    skyline_circular,
    skyline_contour,
    skyline_recursive,
)
from .layers import LayerDecomposition, chain_coloring, eval_chain, upper_layers
from .orders import KeyedOrder, OrderSystem, altiset_of_system, decompose_altiset, quotient
from .relation import FiniteRelation, Universe, union

__all__ = [
    "AltisetError",
    "FiniteRelation",
    "GridMeasure",
    "KeyedOrder",
    "LayerDecomposition",
    "OrderSystem",
    "PointSet2D",
    "SubsetFamily",
    "SummitField",
    "Universe",
    "ValuationTrace",
    "ValuedGroundSet",
    "altiset_of_system",
    "chain_coloring",
    "collective_altiset",
    "decompose_altiset",
    "decreasingness_index",
    "epsilon",
    "eval_chain",
    "evolve",
    "geo_altiset_oracle",
    "increasing_decomposition",
    "increasingness_index",
    "inverse_altiset_measure",
    "pairwise_elimination",
    "quotient",
    "record_events",
    "rh_dominates",
    "skyline_circular",
    "skyline_contour",
    "skyline_recursive",
    "threshold_profile",
    "union",
    "upper_layers",
    "voronoi_mu",
]
