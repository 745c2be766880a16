"""Small helpers for entering presentations as text."""

from __future__ import annotations

from fractions import Fraction

from ..coeffs import SeriesRing, TruncSeries
from ..hopf import HopfAlgebra
from ..ncalg import NCElement, TensorElement
from ..parser import parse


class Presenter:
    """Wraps a :class:`HopfAlgebra` with text-based registration."""

    def __init__(self, P: HopfAlgebra):
        self.P = P
        if not hasattr(P, "abbreviations"):
            P.abbreviations = {}

    def __call__(self, text: str):
        return parse(text, self.P)

    def rules(self, table: dict[str, str]):
        for lhs, rhs in table.items():
            self.P.add_rule(lhs, self._elem(rhs), doc=f"{lhs} = {rhs}")

    def _elem(self, rhs):
        if isinstance(rhs, (NCElement,)):
            return rhs
        return self(rhs)

    def coproducts(self, table: dict[str, str]):
        for name, rhs in table.items():
            v = rhs if isinstance(rhs, TensorElement) else self(rhs)
            if isinstance(v, NCElement):
                v = TensorElement.unit((self.P, self.P)).scale(v.scalar_part())
            self.P.set_coproduct(name, v)

    def counits(self, table: dict[str, object]):
        for name, v in table.items():
            self.P.set_counit(name, v)

    def antipodes(self, table: dict[str, str]):
        for name, rhs in table.items():
            self.P.set_antipode(name, self._elem(rhs))

    def antipode_inverses(self, table: dict[str, str]):
        for name, rhs in table.items():
            self.P.set_antipode_inverse(name, self._elem(rhs))

    def stars(self, table: dict[str, str]):
        for name, rhs in table.items():
            self.P.set_star(name, self._elem(rhs))

    def abbreviate(self, name: str, value, inverse=None):
        """Register ``name`` as a parser alias; ``inverse`` enables ``name^-n``."""
        self.P.abbreviations[name] = self._elem(value)
        if inverse is not None:
            if not hasattr(self.P, "abbreviation_inverses"):
                self.P.abbreviation_inverses = {}
            self.P.abbreviation_inverses[name] = self._elem(inverse)


def exp_element(P, letter_elem: NCElement, rate) -> NCElement:
    """``exp(rate * var * x)`` in a series ring (``var`` the ring variable)."""
    ring = P.ring
    out = P.one()
    power = P.one()
    coeffs = ring.exp(Fraction(rate)).coeffs
    for n in range(1, ring.N + 1):
        power = power * letter_elem
        c = TruncSeries(ring.var, [0] * n + [coeffs[n]], ring.N)
        out = out + power.scale(c)
    return out


def series_quotient(ring: SeriesRing, num_fn, den_fn):
    """``num/den`` for scalars defined by functions of a series ring, computed
    with enough extra precision that the quotient is known to order N."""
    big = SeriesRing(ring.var, ring.N + 2 * ring.N + 2, ring.kappa)
    num, den = num_fn(big), den_fn(big)
    return (num / den).truncate(ring.N)
