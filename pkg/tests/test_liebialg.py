import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab.coeffs import GaussianRational
from hopflab import liebialg as L
from hopflab.liebialg import LinComb

small = st.integers(-3, 3)


def vec(g, coeffs):
    out = LinComb()
    for name, c in zip(g.basis, coeffs):
        out = out + LinComb.basis(name).scale(c)
    return out


ALGEBRAS = [L.su2(), L.su2_pair(), L.bicross_su2_limit(), L.double_su2_ds(), L.double_su2_limit()]


@pytest.mark.parametrize("g", ALGEBRAS, ids=lambda g: g.name)
@given(data=st.data())
def test_bracket_is_antisymmetric_and_satisfies_jacobi(g, data):
    n = len(g.basis)
    x, y, z = (vec(g, data.draw(st.lists(small, min_size=n, max_size=n))) for _ in range(3))
    assert (g.br(x, y) + g.br(y, x)).is_zero()
    assert (g.br(x, g.br(y, z)) + g.br(y, g.br(z, x)) + g.br(z, g.br(x, y))).is_zero()


@given(st.lists(small, min_size=6, max_size=6), st.lists(small, min_size=6, max_size=6))
def test_schouten_is_bilinear(u, v):
    g = L.su2_pair()
    _, a = L.r_matrix("r_BD")
    b = vec(g, u).tensor(vec(g, v))
    assert L.schouten(a + b, a, g) == L.schouten(a, a, g) + L.schouten(b, a, g)


@given(st.lists(small, min_size=3, max_size=3))
def test_cobracket_of_ds_is_a_cocycle(coeffs):
    g = L.su2_ds()
    x = vec(g, coeffs)
    for b in g.basis:
        y = g.gen(b)
        assert g.delta(g.br(x, y)) == g.ad(x, g.delta(y)) - g.ad(y, g.delta(x))


def test_ds_r_matrix_solves_cybe_and_a_random_one_does_not():
    g = L.su2()
    assert L.cybe(g.element("1/4*tensor(H, H) + tensor(X_+, X_-)"), g).is_zero()
    assert not L.cybe(g.element("tensor(H, X_+) + tensor(X_-, X_-)"), g).is_zero()


def test_classical_double_of_zero_cobracket_has_canonical_r():
    D = L.double_su2_limit()
    assert D.r == D.element("tensor(P_0, J_0) + tensor(P_1, J_1) + tensor(P_2, J_2)")
    assert L.verify_lie_bialgebra(D).ok


def test_dual_of_ds_matches_table():
    dual = L.dual_lie_algebra(L.su2_ds(), L.DUAL_NAMES)
    half = GaussianRational(1) / 2
    assert dual.br_names("psi_+", "phi") == LinComb.basis("psi_+").scale(half)
    assert dual.br_names("psi_+", "psi_-").is_zero()


def test_lie_twist_rejects_a_non_twist():
    g, r = L.r_matrix("r_BD")
    with pytest.raises(L.TwistConditionFailed):
        L.lie_twist(g, r, g.element("tensor(H, X_+)"))


def test_semiclassical_extract_requires_unit():
    from hopflab.models import get_model
    from hopflab.parser import parse

    H = get_model("uq_su2", "t-adic", 2)
    with pytest.raises(L.NotUnital):
        L.semiclassical_extract(parse("2*tensor(1, 1) + t*tensor(H, H)", H))
    assert L.semiclassical_extract(parse("tensor(1, 1) + t*tensor(H, X_+)", H)) == \
        LinComb.basis("H", "X_+")


def test_json_roundtrip():
    for make in (L.su2_ds, L.double_su2_ds, L.bicross_su2_limit):
        g = make()
        h = L.LieBialgebraData.from_json(g.to_json())
        assert h.to_json() == g.to_json()


def test_r_B0_vector_convention():
    assert L.r_B0_vector((1, 0, 0)) == L.r_B0()
    assert L.r_B0_vector((0, 0, 0)) == L.r_B0() - (L.r_B0() - L.r_B0().flip()).scale(GaussianRational(1) / 2)


@pytest.mark.parametrize("report", [L.structure_report, L.theta_c_report, L.cybe_report])
def test_reports_pass(report):
    rep = report()
    assert rep.ok, [c.name for c in rep.failures]
