"""Shared, cached pipeline pieces for the test modules."""

from functools import lru_cache

from tlgrowth.coxeter import SYMBOLIC, relations
from tlgrowth.groebner import complete
from tlgrowth.growth import build_automaton
from tlgrowth.presets import parse_preset


@lru_cache(maxsize=None)
def basis_for(name: str, cap: int | None = None):
    """Completed basis of a preset, shared across test modules."""
    g = parse_preset(name)
    return g, complete(relations(g, SYMBOLIC), degree_cap=cap)


@lru_cache(maxsize=None)
def automaton_for(name: str):
    g, gb = basis_for(name)
    return build_automaton(gb.leading_words(), g.n)
