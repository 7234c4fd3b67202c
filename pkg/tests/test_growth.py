import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import automaton_for, basis_for
from oracles import brute_counts, brute_normal_words
from tlgrowth.freealg import parse_word, word
from tlgrowth.growth import (
    INFINITE,
    Exponential,
    FiniteDimensional,
    GrowthError,
    Inconclusive,
    PolynomialGrowth,
    build_automaton,
    class_to_json,
    classify,
    counts_csv,
    graded_counts,
    growth_graph,
    normal_words_of_length,
    total_dimension,
)

# every fixture whose basis completes in well under a second
FIXTURES = [
    "A 4", "B 3", "D 4", "E 6", "H 3", "F 4", "l2 7", "tilde-G2",
    "tilde-A 3", "tilde-A 4", "tilde-C 2", "tilde-B 4", "tilde-D 4", "tilde-A1", "l3 6",
    "star 6", "fig 4.6", "fig 4.13", "fig 4.14", "fig 4.17", "fig 4.21",
]


@pytest.mark.parametrize("name", FIXTURES)
def test_counts_match_brute_force(name):
    g, gb = basis_for(name)
    auto = automaton_for(name)
    assert graded_counts(auto, 8) == brute_counts(gb.leading_words(), g.n, 8)


def test_tilde_a3_counts():
    assert graded_counts(automaton_for("tilde-A 3"), 10) == [1, 3, 6] + [6] * 8


def test_star6_super_linear():
    c = graded_counts(automaton_for("star 6"), 30)
    assert all(b >= a for a, b in zip(c[10:], c[11:]))
    # doubling in far fewer than 30 steps rules out any polynomial with these values
    assert c[30] > 4 * c[15] > 16 * c[8]


def test_small_examples():
    a2 = build_automaton([word(1, 1), word(2, 2), word(1, 2, 1), word(2, 1, 2)], 2)
    assert graded_counts(a2, 4) == [1, 2, 2, 0, 0]
    assert total_dimension(a2) == 5
    l25 = automaton_for("l2 5")
    assert graded_counts(l25, 6) == [1, 2, 2, 2, 2, 0, 0]
    everything = build_automaton([word(1), word(2)], 2)
    assert graded_counts(everything, 3) == [1, 0, 0, 0]
    assert classify(everything) == FiniteDimensional(1)


def test_automaton_run():
    auto = automaton_for("A 3")
    assert auto.accepts(word(1, 2, 3))
    assert not auto.accepts(word(1, 2, 1))
    with pytest.raises(GrowthError):
        auto.run(word(4))


def test_bad_leading_sets():
    with pytest.raises(GrowthError):
        build_automaton([], 2)
    with pytest.raises(GrowthError):
        build_automaton([word(3)], 2)
    with pytest.raises(GrowthError):
        build_automaton([b""], 2)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("A 3", FiniteDimensional(14)),
        ("B 3", FiniteDimensional(24)),
        ("H 3", FiniteDimensional(44)),
        ("tilde-G2", FiniteDimensional(11)),
        ("tilde-A 3", PolynomialGrowth(1)),
        ("tilde-C 2", PolynomialGrowth(1)),
        ("tilde-A1", PolynomialGrowth(1)),
        ("star 6", Exponential()),
        ("fig 4.14", Exponential()),
    ],
)
def test_classify_examples(name, expected):
    assert classify(automaton_for(name)) == expected


def test_total_dimension_infinite():
    assert total_dimension(automaton_for("tilde-A 3")) == INFINITE


def test_quadratic_growth():
    # free commutative monoid on two letters: forbid 21 only
    auto = build_automaton([word(2, 1)], 2)
    assert classify(auto) == PolynomialGrowth(2)
    assert graded_counts(auto, 5) == [1, 2, 3, 4, 5, 6]


def test_exponential_fibonacci():
    auto = build_automaton([word(1, 1)], 2)
    assert classify(auto) == Exponential()
    c = graded_counts(auto, 40)
    phi = (1 + 5 ** 0.5) / 2
    assert c[:8] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert abs(c[40] / c[39] - phi) < 1e-12


def test_describe_and_json():
    assert PolynomialGrowth(1).describe() == "polynomial degree 1 (linear)"
    assert PolynomialGrowth(2).describe() == "polynomial degree 2"
    assert FiniteDimensional(83).describe() == "finite-dimensional, dim 83"
    assert Exponential().describe() == "exponential"
    assert "inconclusive" in Inconclusive(12).describe()
    assert class_to_json(FiniteDimensional(5)) == {"kind": "finite", "dim": 5}
    assert class_to_json(PolynomialGrowth(1))["degree"] == 1


def test_counts_csv():
    assert counts_csv([1, 2, 2]) == "degree,count\n0,1\n1,2\n2,2\n"


# -- growth graphs -----------------------------------------------------------------

def test_tilde_a3_growth_graph():
    g, gb = basis_for("tilde-A 3")
    gg = growth_graph(gb.leading_words(), g.n)
    assert gg.ell == 3
    assert len(gg.vertices) == 6
    cyc = gg.cycles()
    assert [len(c) for c in cyc] == [3, 3]
    assert not set(cyc[0]) & set(cyc[1])
    # each vertex has exactly one successor: the cycles are all there is
    assert sorted(len(a) for a in gg.adjacency()) == [1] * 6
    assert "1,2 -> 2,3" in gg.export().splitlines()


def test_tilde_c2_growth_graph():
    g, gb = basis_for("tilde-C 2")
    gg = growth_graph(gb.leading_words(), g.n)
    assert len(gg.vertices) == 9
    assert classify(automaton_for("tilde-C 2")) == PolynomialGrowth(1)


@pytest.mark.parametrize("name", ["tilde-A 3", "tilde-C 2", "tilde-D 4", "B 3", "fig 4.6", "l3 6"])
def test_path_counts_match_graded_counts(name):
    g, gb = basis_for(name)
    gg = growth_graph(gb.leading_words(), g.n)
    counts = graded_counts(automaton_for(name), gg.ell + 6)
    assert gg.path_counts(7) == counts[gg.ell - 1:]


def test_normal_words_of_length():
    g, gb = basis_for("B 3")
    auto = automaton_for("B 3")
    assert normal_words_of_length(auto, 3) == brute_normal_words(gb.leading_words(), 3, 3)
    with pytest.raises(GrowthError):
        normal_words_of_length(automaton_for("star 6"), 8, limit=10)


forbidden_sets = st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=4).map(bytes), min_size=1, max_size=6)


@given(forbidden_sets)
def test_counts_property(forb):
    auto = build_automaton(forb, 3)
    assert graded_counts(auto, 7) == brute_counts(forb, 3, 7)


@given(forbidden_sets)
def test_class_consistent_with_counts(forb):
    auto = build_automaton(forb, 3)
    cls = classify(auto)
    c = graded_counts(auto, 24)
    if isinstance(cls, FiniteDimensional):
        assert c[-1] == 0 and sum(c) == cls.dim
    else:
        assert all(x > 0 for x in c)
    if isinstance(cls, PolynomialGrowth) and cls.degree == 1:
        assert max(c[12:]) <= max(c[:12]) * 3 + 27


@given(forbidden_sets)
def test_path_counts_property(forb):
    gg = growth_graph(forb, 3)
    auto = build_automaton(forb, 3)
    counts = graded_counts(auto, gg.ell + 4)
    assert gg.path_counts(5) == counts[gg.ell - 1:]


def test_parse_word_in_growth_graph_names():
    g, gb = basis_for("tilde-A 3")
    gg = growth_graph(gb.leading_words(), g.n)
    names = {parse_word(line.split(" -> ")[0]) for line in gg.export().splitlines()}
    assert names == set(gg.vertices)
    assert isinstance(np.asarray(gg.edges).shape, tuple)
