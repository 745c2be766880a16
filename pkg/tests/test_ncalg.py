import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab.models import get_model
from hopflab.ncalg import confluence_probe
from hopflab.suites import random_element

MODELS = ["uq_su2", "cq_su2", "double_q", "bicross_q", "u_su2", "bicross_0"]


@pytest.mark.parametrize("name", MODELS)
@given(seed=st.integers(0, 10_000))
def test_product_is_associative(name, seed):
    P = get_model(name)
    rng = random.Random(seed)
    words = P.normal_words(2)
    x, y, z = (random_element(P, words, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("name", MODELS)
@given(seed=st.integers(0, 10_000))
def test_products_are_in_normal_form(name, seed):
    P = get_model(name)
    rng = random.Random(seed)
    words = P.normal_words(2)
    x = random_element(P, words, rng) * random_element(P, words, rng)
    assert all(P.is_normal(w) for w in x.terms)


@pytest.mark.parametrize("name", ["uq_su2", "double_q", "bicross_q", "double_0", "bicross_0",
                                  "spacetime_spin", "spacetime_bicross"])
def test_rules_are_confluent(name):
    assert confluence_probe(get_model(name)).ok


def test_inverse_letters_cancel():
    H = get_model("uq_su2")
    assert H.word("K K^-1") == H.one() == H.word("K^-1 K")
