import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab.models import MODEL_MODES, get_model
from hopflab.parser import ParseError, UnknownIdentifier, parse
from hopflab.suites import random_element

SERIES_AND_EXACT = [(m, mode) for m, modes in MODEL_MODES.items() for mode in modes if mode != "rep"]


def test_uq_su2_commutator_closed_form():
    H = get_model("uq_su2")
    assert parse("X_+*X_- - X_-*X_+", H) == parse("(K^2 - K^-2)*(q - q^-1)^-1", H)


def test_cq_su2_ba_relation_and_unit_tensor():
    C = get_model("cq_su2")
    assert parse("b*a - q*a*b", C).is_zero()
    H = get_model("uq_su2")
    one = parse("tensor(1,1)", H)
    assert one == one * one


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse("X_+ * (X_- + ", get_model("uq_su2"))
    assert "column" in str(err.value)


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifier):
        parse("Y*X_+", get_model("uq_su2"))


@pytest.mark.parametrize("model,mode", SERIES_AND_EXACT)
@given(seed=st.integers(0, 10_000))
def test_parse_render_roundtrip(model, mode, seed):
    P = get_model(model, mode, 2)
    x = random_element(P, P.normal_words(3), random.Random(seed))
    assert parse(str(x), P) == x


@given(seed=st.integers(0, 10_000))
def test_tensor_roundtrip(seed):
    rng = random.Random(seed)
    H = get_model("uq_su2")
    words = H.normal_words(2)
    x = random_element(H, words, rng)
    y = random_element(H, words, rng)
    from hopflab.ncalg import TensorElement

    t = TensorElement.pure(x, y)
    if t.is_zero():
        return
    assert parse(str(t), H) == t
