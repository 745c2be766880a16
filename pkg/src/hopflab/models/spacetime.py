"""Noncommutative spacetimes and the coordinate charts between named bases
and the registered presentations."""

from __future__ import annotations

from ..coeffs import ExactRing
from ..constructions import AlgebraMap
from ..ncalg import Algebra, NCElement
from ..parser import parse
from ._build import Presenter

__all__ = ["spacetime_spin", "spacetime_bicross", "CHARTS", "UnknownChart", "get_chart",
           "basis_change"]


class UnknownChart(KeyError):
    """No chart registered under this name."""


def spacetime_spin(ring=None) -> Algebra:
    """``[x_mu, x_nu] = i lam eps_{mu nu rho} x_rho`` on ``x_0 < x_1 < x_2``."""
    ring = ring or ExactRing(classical=True)
    A = Algebra("spacetime_spin", ring, ["x_0", "x_1", "x_2"])
    Presenter(A).rules({
        "x_1 x_0": "x_0*x_1 - i*lam*x_2",
        "x_2 x_0": "x_0*x_2 + i*lam*x_1",
        "x_2 x_1": "x_1*x_2 - i*lam*x_0",
    })
    return A


def spacetime_bicross(ring=None) -> Algebra:
    """``[x_i, x_0] = i lam x_i`` and ``[x_1, x_2] = 0``."""
    ring = ring or ExactRing(classical=True)
    A = Algebra("spacetime_bicross", ring, ["x_0", "x_1", "x_2"])
    Presenter(A).rules({
        "x_1 x_0": "x_0*x_1 + i*lam*x_1",
        "x_2 x_0": "x_0*x_2 + i*lam*x_2",
        "x_2 x_1": "x_1*x_2",
    })
    return A


class Chart:
    """Named coordinates on a model: each chart letter is sent to an element
    of the model algebra.  ``source`` is the free algebra on the chart
    letters, so charts are applied to any expression in them."""

    def __init__(self, name: str, model: str, mode: str, letters, images: dict, doc: str = ""):
        self.name = name
        self.model = model
        self.mode = mode
        self.letters = list(letters)
        self.images = images
        self.doc = doc
        self._map = None

    def map(self) -> AlgebraMap:
        if self._map is None:
            from .registry import get_model

            P = get_model(self.model, self.mode)
            src = Algebra(f"{self.name} letters", P.ring, self.letters)
            imgs = {k: parse(v, P) for k, v in self.images.items()}
            self._map = AlgebraMap(src, P, imgs, self.name)
        return self._map

    def __call__(self, x) -> NCElement:
        f = self.map()
        if isinstance(x, str):
            x = parse(x, f.source)
        return f(x)


CHARTS = {
    "identity": None,
    # H = 2 J_0, X_+- = J_1 +- i J_2; a, b, c, d from the P_a of the matrix t^i_j
    "J/P": Chart("J/P", "double_0", "exact-lambda",
                 ["J_0", "J_1", "J_2", "P_0", "P_1", "P_2"],
                 {"J_0": "1/2*H", "J_1": "1/2*(X_+ + X_-)", "J_2": "-1/2*i*(X_+ - X_-)",
                  "P_0": "-i*lam^-1*(a - d)", "P_1": "-i*lam^-1*(b + c)", "P_2": "lam^-1*(b - c)"}),
    # alpha = e^{lam p_0} kept as the group-like alias exp_lp0 in the exact-lambda form
    "M/N/p": Chart("M/N/p", "bicross_0", "exact-lambda",
                   ["M", "N_1", "N_2", "p_1", "p_2", "exp_lp0", "exp_mlp0"],
                   {"M": "1/2*H", "N_1": "1/2*i*(X_+ - X_-)", "N_2": "1/2*(X_+ + X_-)",
                    "p_1": "-1/2*i*lam^-1*(beta - gamma)", "p_2": "1/2*lam^-1*(beta + gamma)",
                    "exp_lp0": "alpha", "exp_mlp0": "alpha^-1"}),
    # lam H = 2 x_0, lam X_+- = x_1 +- i x_2
    "x_mu": Chart("x_mu", "u_su2", "exact-lambda", ["x_0", "x_1", "x_2"],
                  {"x_0": "1/2*lam*H", "x_1": "1/2*lam*(X_+ + X_-)", "x_2": "-1/2*i*lam*(X_+ - X_-)"}),
    # x_0 = i lam z, x_1 = -i lam (x_+ + x_-), x_2 = lam (x_+ - x_-)
    "x_i/x_0": Chart("x_i/x_0", "u_su2_star", "exact-lambda", ["x_0", "x_1", "x_2"],
                     {"x_0": "i*lam*z", "x_1": "-i*lam*(x_+ + x_-)", "x_2": "lam*(x_+ - x_-)"}),
}


def get_chart(name: str) -> Chart | None:
    try:
        return CHARTS[name]
    except KeyError:
        raise UnknownChart(name) from None


def basis_change(element, chart: str):
    """Rewrite an expression in chart letters as an element of the chart's
    model.  ``identity`` returns the element unchanged."""
    c = get_chart(chart)
    if c is None:
        return element
    return c(element)
