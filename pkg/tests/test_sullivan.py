import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tricode.hypergraph import base_hypergraph, degree_report
from tricode.mcg import is_symplectic
from tricode.snf import identity, matmul
from tricode.sullivan import (
    ThreeForm,
    genus13_tree_form,
    matrix_power,
    roundtrip_check,
    sigma_block,
    synthesize,
)


def test_sigma_block_matches_stated_rows():
    s = sigma_block(1, 2, 3, 3)
    assert s[0] == [1, 0, 0, 0, 1, 1]
    assert s[1] == [0, 1, 0, 1, 0, 1]
    assert s[2] == [0, 0, 1, 1, 1, 0]
    # starred lower-left block is forced to zero
    for r in range(3, 6):
        assert s[r][:3] == [0, 0, 0]


def test_sigma_block_symplectic_and_fixes_kernel():
    for m in (3, 5, 8):
        s = sigma_block(1, 2, m, m)
        assert is_symplectic(s, m)
        for c in range(m):
            col = [s[r][c] for r in range(2 * m)]
            assert col == [1 if r == c else 0 for r in range(2 * m)]


def test_sigma_block_bad_indices():
    with pytest.raises(ValueError):
        sigma_block(2, 1, 3, 3)
    with pytest.raises(ValueError):
        sigma_block(1, 2, 5, 4)


def test_matrix_power_inverse():
    s = sigma_block(1, 2, 3, 4)
    p = matmul(matrix_power(s, 3, 4), matrix_power(s, -3, 4))
    assert p == identity(8)


def test_synthesize_t3():
    mu = ThreeForm(3, {(1, 2, 3): 1})
    res = synthesize(mu)
    assert res.h2_rank() == 3
    assert res.predicted_form.known_unit_triples() == [(0, 1, 2)]
    assert roundtrip_check(mu).passed


def test_synthesize_shared_pair():
    mu = ThreeForm(4, {(1, 2, 3): 1, (2, 3, 4): 1})
    res = synthesize(mu)
    h = base_hypergraph(res.predicted_form)
    assert len(h.hyperedges) == 2
    shared = set(h.hyperedges[0]) & set(h.hyperedges[1])
    assert shared == {"G2", "G3"}
    assert roundtrip_check(mu).passed


def test_two_prong_tree():
    mu = ThreeForm(5, {(1, 2, 3): 1, (1, 4, 5): 1})
    res = synthesize(mu)
    rep = degree_report(base_hypergraph(res.predicted_form))
    assert rep.max_degree == 2
    assert rep.degrees["G1"] == 2
    assert roundtrip_check(mu).passed


def test_genus13_six_factor_tree():
    mu = genus13_tree_form()
    rep = roundtrip_check(mu)
    assert rep.passed, rep.failures
    h = base_hypergraph(synthesize(mu).predicted_form)
    assert len(h.hyperedges) == 6
    dr = degree_report(h)
    assert dr.max_degree == 2
    assert not dr.star_like
    degree2 = {v for v, d in dr.degrees.items() if d == 2}
    assert degree2 == {"G1", "G2", "G3", "G4", "G5", "G12"}


def test_zero_form_trivial_tau():
    mu = ThreeForm(4, {})
    res = synthesize(mu)
    assert res.tau == identity(8)
    assert roundtrip_check(mu).passed


def test_even_coefficients_vanish_mod2():
    mu = ThreeForm(3, {(1, 2, 3): 2})
    res = synthesize(mu)
    assert res.predicted_form.known_unit_triples() == []
    assert roundtrip_check(mu).passed


def rand_form(rng, m):
    triples = list(itertools.combinations(range(1, m + 1), 3))
    coeffs = {}
    for t in rng.sample(triples, min(rng.randint(1, 5), len(triples))):
        coeffs[t] = rng.randint(-4, 4)
    return ThreeForm(m, coeffs)


def test_roundtrip_random_forms():
    rng = random.Random(2024)
    count = 0
    for _ in range(100):
        m = rng.randint(3, 8)
        mu = rand_form(rng, m)
        assert roundtrip_check(mu).passed
        count += 1
    assert count == 100


def test_multilinearity_mod2():
    rng = random.Random(55)
    for _ in range(30):
        m = rng.randint(3, 7)
        f1, f2 = rand_form(rng, m), rand_form(rng, m)
        combined = synthesize(f1.plus(f2)).predicted_form
        u1 = set(synthesize(f1).predicted_form.known_unit_triples())
        u2 = set(synthesize(f2).predicted_form.known_unit_triples())
        assert set(combined.known_unit_triples()) == u1 ^ u2


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(1, 2), st.integers(3, 4), st.integers(5, 6)),
    st.integers(-3, 3), max_size=4))
def test_roundtrip_hypothesis(coeffs):
    mu = ThreeForm(6, dict(coeffs))
    assert roundtrip_check(mu).passed


def test_form_index_validation():
    with pytest.raises(ValueError):
        ThreeForm(3, {(1, 3, 2): 1})
    with pytest.raises(ValueError):
        ThreeForm(3, {(1, 2, 4): 1})
