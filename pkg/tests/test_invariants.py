import itertools
import random

import pytest
from conftest import random_knot_braids
from oracles import fox_alexander, normalize_knot, torus_alexander

from posknots.braid import BraidWord, closure_info
from posknots.errors import ContractError, NotAKnotError
from posknots.factoring import factorize
from posknots.invariants import (
    alexander,
    alexander_unit_normal,
    cut_crossings,
    diagram_graph,
    is_reducible_diagram,
    knot_determinant,
)
from posknots.laurent import LaurentPoly


def coeffs(p):
    return dict(p.coefficients)


class TestAlexanderExamples:
    def test_unknot(self):
        assert alexander(BraidWord(1, ())) == LaurentPoly.one()

    def test_trefoil(self):
        assert str(alexander(BraidWord(2, (1, 1, 1)))) == "t^-1 - 1 + t"

    def test_cinquefoil(self):
        assert str(alexander(BraidWord(2, (1,) * 5))) == "t^-2 - t^-1 + 1 - t + t^2"

    def test_link_rejected(self):
        with pytest.raises(NotAKnotError):
            alexander(BraidWord(2, (1, 1)))

    def test_hopf_up_to_units(self):
        assert alexander_unit_normal(BraidWord(2, (1, 1))) == LaurentPoly({0: 1, 1: -1})


class TestOracles:
    @pytest.mark.parametrize("p,q", [(2, 3), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
    def test_torus_formula(self, p, q):
        b = BraidWord(p, tuple(range(1, p)) * q)
        assert coeffs(alexander(b)) == torus_alexander(p, q)

    def test_fox_calculus(self):
        for b in random_knot_braids(60, max_strands=5, max_length=11, seed=31):
            assert coeffs(alexander(b)) == normalize_knot(fox_alexander(b.strands, b.letters))

    @pytest.mark.parametrize("backend", ["numba", "numpy"])
    def test_backends(self, backend):
        from posknots._accel import HAVE_NUMBA

        if backend == "numba" and not HAVE_NUMBA:
            pytest.skip("numba unavailable or disabled")
        for b in random_knot_braids(50, seed=2):
            assert alexander(b, backend=backend) == alexander(b, backend="numpy")


class TestProperties:
    def test_normalisation_and_parity(self):
        for b in random_knot_braids(300, seed=12):
            d = alexander(b)
            assert d(1) == 1 and d.is_palindromic()
            assert knot_determinant(d) % 2 == 1

    def test_multiplicativity_random(self):
        for b in random_knot_braids(200, max_strands=8, max_length=20, seed=13):
            f = factorize(b)
            prod = LaurentPoly.one()
            for p in f.prime_factors:
                prod = prod * alexander(p)
            assert alexander(b) == prod

    def test_stabilization_and_rotation(self):
        for b in random_knot_braids(100, seed=14):
            d = alexander(b)
            assert alexander(b.stabilize()) == d
            assert alexander(b.rotate(5)) == d

    def test_connected_sum_of_links_up_to_units(self):
        hopf = alexander_unit_normal(BraidWord(2, (1, 1)))
        trefoil = alexander_unit_normal(BraidWord(2, (1, 1, 1)))
        assert alexander_unit_normal(BraidWord(3, (1, 1, 2, 2, 2))) == hopf * trefoil


class TestReducibility:
    @pytest.mark.parametrize(
        "word,expected",
        [((2, (1, 1, 1)), False), ((2, (1,)), True), ((4, (1, 1, 1, 2, 3, 3, 3)), True)],
    )
    def test_examples(self, word, expected):
        assert is_reducible_diagram(BraidWord(*word)) is expected

    def test_lone_generator_is_the_cut(self):
        assert cut_crossings(BraidWord(4, (1, 1, 1, 2, 3, 3, 3))) == [3]

    def test_unknot_and_missing_generator(self):
        assert is_reducible_diagram(BraidWord(1, ())) is False
        with pytest.raises(ContractError):
            diagram_graph(BraidWord(3, (1, 1)))

    def test_graph_is_four_valent(self):
        for b in random_knot_braids(50, seed=15):
            g = diagram_graph(b)
            deg = [0] * g.vertices
            for u, v in g.edges:
                deg[u] += 1
                deg[v] += 1
            assert set(deg) <= {4}

    def test_random_larger_equivalence(self):
        rng = random.Random(16)
        seen = 0
        while seen < 500:
            n = rng.randint(3, 8)
            b = BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(n, 24))))
            counts = b.generator_counts()
            if min(counts) == 0 or not closure_info(b).is_knot:
                continue
            assert is_reducible_diagram(b) == (1 in counts)
            seen += 1


def exhaustive_words(max_strands=4, max_length=7):
    for n in range(2, max_strands + 1):
        for length in range(n - 1, max_length + 1):
            for w in itertools.product(range(1, n), repeat=length):
                b = BraidWord(n, w)
                if min(b.generator_counts()) > 0 and closure_info(b).is_knot:
                    yield b


def test_reducibility_exhaustive():
    count = 0
    for b in exhaustive_words():
        assert is_reducible_diagram(b) == (1 in b.generator_counts())
        count += 1
    assert count > 500
