"""Radio numbers of trees: level bounds, ordering certificates, exact values
and center-identifying compositions."""

from .compositions import (CompositionError, CompositionSpec, Family, PredictionReport,
                           compose, compose_dk, compose_sk, compose_wk, make_kdoublestar,
                           make_kstar, predicted_rn, reconcile)
from .labeling import (RadioLabeling, Verdict, VertexOrdering, label_from_ordering,
                       ordering_valid, span, verify_radio)
from .solvers import ExactResult, SearchOutcome, Status, exact_rn, search_ordering
from .tree_core import Tree, diameter, from_edges, parse_tree, path_tree, star_tree
from .tree_metrics import TreeProfile, bantva_lower_bound, liu_lower_bound, profile

__version__ = "0.1.0"
