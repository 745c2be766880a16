"""The spin-1/2 representation of U_q(su2), its extension to the mirror
product through ``H^cop (x) H``, L-matrices and the representation-mode
Yang-Baxter check.  Entries are exact rational functions in ``s``."""

from __future__ import annotations

from ..coeffs import ExactRing, RationalFunction
from ..hopf import HopfAlgebra
from ..ncalg import NCElement, TensorElement

__all__ = ["RepMatrix", "SpinHalf", "MirrorSpinHalf", "rho", "rho_tensor",
           "l_matrices", "RepR"]


class RepMatrix:
    """A square matrix over :class:`RationalFunction`."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [[RationalFunction._coerce(x) for x in r] for r in rows]

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "RepMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "RepMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries) -> "RepMatrix":
        n = len(entries)
        m = cls.zeros(n)
        for i, e in enumerate(entries):
            m.rows[i][i] = RationalFunction._coerce(e)
        return m

    def __add__(self, other):
        return RepMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return RepMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return RepMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "RepMatrix":
        c = RationalFunction._coerce(c)
        return RepMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, RepMatrix):
            return self.scale(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in cols:
                acc = RationalFunction._coerce(0)
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RepMatrix(out)

    def kron(self, other: "RepMatrix") -> "RepMatrix":
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([a * b for a in r for b in s])
        return RepMatrix(out)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def __eq__(self, other):
        return isinstance(other, RepMatrix) and (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        return "[" + "; ".join(", ".join(str(a) for a in r) for r in self.rows) + "]"


def _kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


class _WordRep:
    """A representation given on letters, extended to words by products."""

    dim = 2

    def __init__(self, alg, letters):
        self.alg = alg
        self.letter_mats = {alg.letter_index(k): v for k, v in letters.items()}
        self._memo: dict = {}

    def word(self, w) -> RepMatrix:
        hit = self._memo.get(w)
        if hit is None:
            if not w:
                hit = RepMatrix.identity(self.dim)
            elif len(w) == 1:
                hit = self.letter_mats[w[0]]
            else:
                hit = self.word(w[:-1]) * self.word(w[-1:])
            self._memo[w] = hit
        return hit

    def __call__(self, x: NCElement) -> RepMatrix:
        out = RepMatrix.zeros(self.dim)
        for w, c in x.terms.items():
            out = out + self.word(w).scale(c)
        return out

    def tensor(self, X: TensorElement) -> RepMatrix:
        n = len(X.legs)
        out = RepMatrix.zeros(self.dim**n)
        for key, c in X.terms.items():
            out = out + _kron_all([self.word(w) for w in key]).scale(c)
        return out

    def check_relations(self, label: str = "Hpairing"):
        """Every rewrite rule holds for the matrices."""
        from ..report import Report

        A = self.alg
        rep = Report("representation", A.name, "rep")
        for (x, y), rhs in sorted(A.rules.items()):
            lhs = self.word((x, y))
            rep.compare(f"rho({A.letters[x].name}*{A.letters[y].name})", label,
                        lhs, self(A.raw(rhs)))
        return rep


class SpinHalf(_WordRep):
    """``rho(K) = diag(s, s^-1)``, ``rho(X_+) = E12``, ``rho(X_-) = E21``:
    the matrix of ``h`` has entries ``<h, t^i_j>``."""

    def __init__(self, H: HopfAlgebra):
        s = RationalFunction.s()
        si = s.inverse()
        letters = {
            "K": RepMatrix.diag([s, si]),
            "K^-1": RepMatrix.diag([si, s]),
            "X_+": RepMatrix([[0, 1], [0, 0]]),
            "X_-": RepMatrix([[0, 0], [1, 0]]),
        }
        super().__init__(H, letters)


class MirrorSpinHalf(_WordRep):
    """The mirror product acting on ``C^2 (x) C^2`` through ``H^cop (x) H``:
    first-factor letters act as ``rho(Q phi) (x) 1`` and ``h`` acts by
    ``(rho (x) rho) Delta h``."""

    dim = 4

    def __init__(self, M: HopfAlgebra, H: HopfAlgebra):
        base = SpinHalf(H)
        one = RepMatrix.identity(2)
        A, _ = M.factors["first"]
        letters = {}
        for l in A.letters:
            img = M.chart(A.gen(l.name))
            letters[l.name] = base(img).kron(one)
        for l in H.letters:
            letters[l.name] = base.tensor(H.coproduct(H.gen(l.name)))
        super().__init__(M, letters)
        self.base = base


def rho(x: NCElement) -> RepMatrix:
    return SpinHalf(x.alg)(x)


def rho_tensor(X: TensorElement) -> RepMatrix:
    return SpinHalf(X.legs[0]).tensor(X)


def l_matrices(H: HopfAlgebra):
    """``L+ = (id (x) rho) R`` and ``L- = (rho (x) id) R^-1`` as 2x2 arrays of
    elements of ``H``.

    Only the first two terms of the q-exponential in ``R`` survive because
    ``rho(X_-)`` and ``rho(X_+)`` square to zero; ``q^{H (x) H / 2}`` becomes
    ``diag(K, K^-1)`` on the represented leg.
    """
    r = SpinHalf(H)
    K, Ki = H.gen("K"), H.gen("K^-1")
    mu = H.ring.mu
    e_plus = H.word("K X_+").scale(mu)
    diag = [[K, H.zero()], [H.zero(), Ki]]
    diag_inv = [[Ki, H.zero()], [H.zero(), K]]

    def entrywise(elem_mat_pairs):
        out = [[H.zero(), H.zero()], [H.zero(), H.zero()]]
        for elem, mat in elem_mat_pairs:
            for i in range(2):
                for j in range(2):
                    c = mat.rows[i][j]
                    if c:
                        out[i][j] = out[i][j] + elem.scale(c)
        return out

    # (id (x) rho)(1 + mu K X_+ (x) K^-1 X_-)
    tail_plus = entrywise([(H.one(), RepMatrix.identity(2)), (e_plus, r(H.word("K^-1 X_-")))])
    # (rho (x) id)(1 - mu K X_+ (x) K^-1 X_-): matrix on the first leg
    head_minus = entrywise([(H.one(), RepMatrix.identity(2)),
                            (H.word("K^-1 X_-").scale(-mu), r(H.word("K X_+")))])
    Lp = _matmul(diag, tail_plus)
    Lm = _matmul(head_minus, diag_inv)
    return Lp, Lm


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), a[0][0].alg.zero()) for j in range(n)]
            for i in range(n)]


def antipode_matrix(H: HopfAlgebra, L):
    """``S`` applied entrywise."""
    return [[H.antipode(x) for x in row] for row in L]


class RepR:
    """The universal R-matrix of U_q(su2) evaluated in ``rho (x) rho``:
    ``diag(q^{ab/2}) (1 + q mu E12 (x) E21)`` with the exponential series
    stopping after the linear term."""

    model = "uq_su2"

    def __init__(self, H: HopfAlgebra | None = None):
        from .quantum import uq_su2

        H = H or uq_su2(ExactRing())
        self.H = H
        r = SpinHalf(H)
        ring = H.ring
        weights = [1, -1]
        diag = RepMatrix.diag([_q_half(a * b) for a in weights for b in weights])
        e = r.tensor(TensorElement.pure(H.word("K X_+"), H.word("K^-1 X_-")))
        self.matrix = diag * (RepMatrix.identity(4) + e.scale(ring.mu))
        e_inv = RepMatrix.identity(4) - e.scale(ring.mu)
        diag_inv = RepMatrix.diag([_q_half(-a * b) for a in weights for b in weights])
        self.inverse = e_inv * diag_inv

    def legs(self, i: int, j: int) -> RepMatrix:
        """``R_ij`` on ``(C^2)^{(x)3}``."""
        n = 3
        R = self.matrix
        out = RepMatrix.zeros(8)
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    for d in range(2):
                        v = R.rows[2 * a + b][2 * c + d]
                        if not v:
                            continue
                        for e in range(2):
                            src = [None] * n
                            dst = [None] * n
                            src[i], src[j] = a, b
                            dst[i], dst[j] = c, d
                            k = 3 - i - j
                            src[k] = dst[k] = e
                            r_ = 4 * src[0] + 2 * src[1] + src[2]
                            c_ = 4 * dst[0] + 2 * dst[1] + dst[2]
                            out.rows[r_][c_] = out.rows[r_][c_] + v
        return out

    def qybe_sides(self):
        r12, r13, r23 = self.legs(0, 1), self.legs(0, 2), self.legs(1, 2)
        return r12 * r13 * r23, r23 * r13 * r12


def _q_half(k: int) -> RationalFunction:
    """``q^{k/2} = s^k``."""
    s = RationalFunction.s()
    return s**k if k >= 0 else s.inverse() ** (-k)
