"""Gröbner bases, growth and dimensions of generalized Temperley-Lieb algebras."""

from .coeffs import ParamScalar, format_scalar, parse_scalar
from .coxeter import INF, CoxGraph, GraphError, Params, load_graph, loads_graph, relations
from .freealg import DEGLEX, MonomialOrder, NCPoly, format_poly, parse_poly, parse_word
from .groebner import GroebnerBasis, complete
from .growth import (
    Exponential,
    FiniteDimensional,
    Inconclusive,
    PolynomialGrowth,
    build_automaton,
    classify,
    graded_counts,
    growth_graph,
    total_dimension,
)
from .presets import parse_preset, preset

__version__ = "0.1.0"
