import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab.coeffs import ExactRing
from hopflab.hopf import HopfAlgebra, verify_hopf_axioms, verify_pairing, verify_star
from hopflab.models import HOPF_MODELS, get_model
from hopflab.ncalg import TensorElement
from hopflab.suites import random_element


def group_algebra_z2() -> HopfAlgebra:
    P = HopfAlgebra("C[Z2]", ExactRing(), ["g"])
    P.add_rule("g g", P.one())
    P.set_group_like("g")
    return P


def test_trivial_group_algebra_passes_axioms():
    assert verify_hopf_axioms(group_algebra_z2(), 3).ok


def test_broken_antipode_is_caught():
    P = HopfAlgebra("broken", ExactRing(), ["x"])
    P.set_primitive("x")
    P.set_antipode("x", P.gen("x"))
    rep = verify_hopf_axioms(P, 2)
    assert not rep.ok
    assert any("antipode" in c.name.lower() or "S" in c.name for c in rep.failures)


@pytest.mark.parametrize("name", ["uq_su2", "cq_su2", "u_su2", "c_su2_star_cop"])
def test_small_models_pass_axioms_at_degree_two(name):
    assert verify_hopf_axioms(get_model(name), 2).ok


@pytest.mark.parametrize("name", ["uq_su2", "cq_su2", "bicross_q", "double_0"])
@given(seed=st.integers(0, 10_000))
def test_coproduct_is_multiplicative(name, seed):
    P = get_model(name)
    rng = random.Random(seed)
    words = P.normal_words(2)
    x, y = random_element(P, words, rng), random_element(P, words, rng)
    assert P.coproduct(x * y) == P.coproduct(x) * P.coproduct(y)


@pytest.mark.parametrize("name", ["uq_su2", "cq_su2", "double_q", "bicross_0"])
@given(seed=st.integers(0, 10_000))
def test_antipode_is_antimultiplicative(name, seed):
    P = get_model(name)
    rng = random.Random(seed)
    words = P.normal_words(2)
    x, y = random_element(P, words, rng), random_element(P, words, rng)
    assert P.antipode(x * y) == P.antipode(y) * P.antipode(x)
    assert P.antipode_inverse(P.antipode(x)) == x


def test_counit_of_unit_tensor():
    H = get_model("uq_su2")
    assert TensorElement.unit((H, H)) == TensorElement.pure(H.one(), H.one())
    assert H.counit(H.gen("K")) == 1


def test_pairings_and_stars():
    assert verify_pairing(get_model("double_q").pairing, 2).ok
    assert verify_pairing(get_model("double_0").pairing, 2).ok
    assert verify_star(get_model("uq_su2"), 2).ok


def test_every_hopf_model_is_registered_in_its_modes():
    assert len(HOPF_MODELS) == 12
