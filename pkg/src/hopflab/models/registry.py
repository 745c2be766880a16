"""Named constructors for every shipped model, cached per (mode, order, kappa).

Modes: ``exact-q`` (rational functions in s), ``t-adic`` (q = exp(kappa t)),
``exact-lambda`` (q = 1, lam a free parameter), ``lambda-adic`` (series in
lam) and ``rep`` (the spin-1/2 representation, used by the Yang-Baxter suite).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..coeffs import ExactRing, SeriesRing
from ..constructions import AlgebraMap, build_double, build_mirror
from ..hopf import PairingTable
from ..parser import parse
from . import classical, quantum

__all__ = ["MODES", "MODEL_MODES", "HOPF_MODELS", "ALGEBRA_MODELS", "UnknownModel",
           "IncompatibleMode", "get_model", "ring_for", "killing_chart", "model_names"]

MODES = ("exact-q", "exact-lambda", "t-adic", "lambda-adic", "rep")

# first entry is the default mode of the model
MODEL_MODES = {
    "uq_su2": ("exact-q", "t-adic", "rep"),
    "cq_su2": ("exact-q", "t-adic"),
    "uq_su2_star": ("exact-q",),
    "cq_su2_star_cop": ("exact-q",),
    "double_q": ("exact-q", "t-adic"),
    "bicross_q": ("exact-q", "t-adic"),
    "u_su2": ("exact-lambda",),
    "c_su2": ("exact-lambda",),
    "u_su2_star": ("exact-lambda",),
    "c_su2_star_cop": ("exact-lambda",),
    "double_0": ("exact-lambda",),
    "bicross_0": ("exact-lambda", "lambda-adic"),
    "spacetime_spin": ("exact-lambda",),
    "spacetime_bicross": ("exact-lambda",),
}
ALGEBRA_MODELS = ("spacetime_spin", "spacetime_bicross")
HOPF_MODELS = tuple(m for m in MODEL_MODES if m not in ALGEBRA_MODELS)


class UnknownModel(KeyError):
    """No model registered under this name."""


class IncompatibleMode(ValueError):
    """The model (or suite) cannot run in the requested mode."""


def model_names() -> list[str]:
    return list(MODEL_MODES)


def normalize_mode(mode: str | None) -> str | None:
    if mode is None:
        return None
    aliases = {"exact-λ": "exact-lambda", "λ-adic": "lambda-adic", "exact": None}
    return aliases.get(mode, mode)


def ring_for(mode: str, order: int = 4, kappa=Fraction(1, 2)):
    if mode in ("exact-q", "rep"):
        return ExactRing()
    if mode == "exact-lambda":
        return ExactRing(classical=True)
    if mode == "t-adic":
        return SeriesRing("t", order, kappa)
    if mode == "lambda-adic":
        return SeriesRing("lam", order)
    raise IncompatibleMode(f"unknown mode {mode!r}")


def get_model(name: str, mode: str | None = None, order: int = 4, kappa=Fraction(1, 2)):
    """The presentation registered as ``name`` in ``mode`` (default: the
    model's first mode)."""
    if name not in MODEL_MODES:
        raise UnknownModel(name)
    mode = normalize_mode(mode) or MODEL_MODES[name][0]
    if mode not in MODEL_MODES[name]:
        raise IncompatibleMode(f"{name} has no {mode} form (available: {', '.join(MODEL_MODES[name])})")
    if mode == "rep":
        mode = "exact-q"
    series = mode in ("t-adic", "lambda-adic")
    return _build(name, mode, order if series else 0, Fraction(kappa) if mode == "t-adic" else Fraction(1, 2))


@lru_cache(maxsize=None)
def _build(name: str, mode: str, order: int, kappa: Fraction):
    ring = ring_for(mode, order, kappa)
    if name in _SIMPLE:
        P = _SIMPLE[name](ring)
    else:
        P = _COMPOSITE[name](ring, mode, order, kappa)
    P.mode = mode
    return P


_SIMPLE = {
    "uq_su2": quantum.uq_su2,
    "cq_su2": quantum.cq_su2,
    "uq_su2_star": quantum.uq_su2_star,
    "cq_su2_star_cop": quantum.cq_su2_star_cop,
    "u_su2": classical.u_su2,
    "c_su2": classical.c_su2,
    "u_su2_star": classical.u_su2_star,
    "c_su2_star_cop": classical.c_su2_star_cop,
}


def tadic_pairing(H, D) -> PairingTable:
    """The spin-1/2 duality with ``H`` as a letter: ``<H, a> = 1 = -<H, d>``."""
    return PairingTable(H, D, {("H", "a"): 1, ("H", "d"): -1, ("X_+", "b"): 1, ("X_-", "c"): 1})


def killing_chart(A, H) -> AlgebraMap:
    """``C_q[SU2*]^cop -> U_q(su2)``: ``alpha -> K^2``,
    ``gamma -> q^-1/2 (q - q^-1) X_+ K``, ``beta -> q^-1/2 (q - q^-1) K X_-``."""
    return AlgebraMap(A, H, {
        "alpha": parse("K^2", H),
        "alpha^-1": parse("K^-2", H),
        "gamma": parse("s^-1*(q - q^-1)*X_+*K", H),
        "beta": parse("s^-1*(q - q^-1)*K*X_-", H),
    }, "Q")


def _double_q(ring, mode, order, kappa):
    H = _build("uq_su2", mode, order, kappa)
    C = _build("cq_su2", mode, order, kappa)
    pairing = quantum.quantum_pairing(H, C) if mode == "exact-q" else tadic_pairing(H, C)
    D = build_double(pairing, "double_q")
    D.pairing = pairing
    return D


def _bicross_q(ring, mode, order, kappa):
    H = _build("uq_su2", mode, order, kappa)
    if mode == "t-adic":
        # first factor as a tilde copy of U_q(su2)^cop (letters Ht, Xt_+, Xt_-)
        return build_mirror(H, name="bicross_q")
    A = quantum.cq_su2_star_cop(ring)
    return build_mirror(H, A, killing_chart(A, H), "bicross_q")


def _double_0(ring, mode, order, kappa):
    H = classical.u_su2(ring)
    C = classical.c_su2(ring)
    pairing = classical.classical_pairing(H, C)
    D = build_double(pairing, "double_0")
    D.pairing = pairing
    return D


def _bicross_0(ring, mode, order, kappa):
    if mode == "lambda-adic":
        return classical.bicross_0_momentum(ring)
    return classical.bicross_0_matrix(ring)


def _spacetime(kind):
    def build(ring, mode, order, kappa):
        from .spacetime import spacetime_bicross, spacetime_spin

        return (spacetime_spin if kind == "spin" else spacetime_bicross)(ring)
    return build


_COMPOSITE = {
    "double_q": _double_q,
    "bicross_q": _bicross_q,
    "double_0": _double_0,
    "bicross_0": _bicross_0,
    "spacetime_spin": _spacetime("spin"),
    "spacetime_bicross": _spacetime("bicross"),
}
