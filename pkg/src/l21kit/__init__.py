"""L(2,1)- and (G,H)-labelings with span guarantees, verification and exact search."""

from .equitable import Coloring, equitable_coloring
from .errors import CapabilityError, InputError, ParseError, PreconditionError
from .exact import INFEASIBLE_WITHIN_BUDGET, ExactResult, exact_lambda, exact_span
from .graph import INFINITY, Graph, complement, diameter, distance, max_degree, square
from .hamilton import hamilton_cycle, hamilton_path, posa_cycle_condition, posa_path_condition
from .labeling import Instance, Verdict, l21_as_instance, span_of, verify_instance, verify_l21
from .pipeline import (BoundReport, ColorAdjacencyGraph, bound_M, build_cgh, chang_kuo,
                       first_fit, injective_labeling, label_with_budget)

__version__ = "0.1.0"
