"""JSON form of a presentation: alphabet, rewrite rules, structure maps on
letters and parser abbreviations.  Terms are stored as ``[coefficient,
word, ...]`` with words as lists of letter names, so reading a file back
never runs the rewriting system on partially registered rules."""

from __future__ import annotations

import json
from fractions import Fraction

from ..hopf import HopfAlgebra
from ..ncalg import Algebra, NCElement, TensorElement
from ..parser import parse
from .registry import ring_for

__all__ = ["presentation_to_dict", "presentation_from_dict", "presentation_to_json",
           "presentation_from_json", "same_presentation"]

FORMAT = "hopflab-presentation/1"


def _word(A: Algebra, w) -> list[str]:
    return [A.letters[i].name for i in w]


def _terms(A: Algebra, terms: dict, tensor: bool = False) -> list:
    rows = []
    for key, c in terms.items():
        words = key if tensor else (key,)
        rows.append([str(c)] + [_word(A, w) for w in words])
    return sorted(rows, key=lambda r: (r[1:], r[0]))


def _scalar(A: Algebra, text: str):
    x = parse(f"({text})", A)
    if any(w for w in x.terms):
        raise ValueError(f"coefficient {text!r} is not a scalar")
    return x.scalar_part()


def _read_terms(A: Algebra, rows, tensor: bool = False) -> dict:
    out = {}
    for c, *words in rows:
        key = tuple(A.parse_word(w) for w in words)
        out[key if tensor else key[0]] = _scalar(A, c)
    return out


def _ring_info(A: Algebra) -> dict:
    ring = A.ring
    info = {"name": ring.name}
    if ring.is_series:
        info["order"] = ring.N
        if ring.var == "t":
            info["kappa"] = str(ring.kappa)
    return info


def _stems(A: Algebra) -> tuple[list[str], list[str]]:
    stems, inv = [], []
    for l in A.letters:
        if l.stem not in stems:
            stems.append(l.stem)
        if l.inverse_of is not None and l.power == 1:
            inv.append(l.stem)
    return stems, inv


def presentation_to_dict(A: Algebra) -> dict:
    stems, invertible = _stems(A)
    inverse_pairs = set(A.inverse.items())
    rules = []
    for (i, j), rhs in sorted(A.rules.items()):
        if (i, j) in inverse_pairs:
            continue
        rules.append({"lhs": _word(A, (i, j)), "rhs": _terms(A, rhs)})
    data = {
        "format": FORMAT,
        "name": A.name,
        "mode": getattr(A, "mode", A.ring.name),
        "ring": _ring_info(A),
        "letters": stems,
        "invertible": invertible,
        "rules": rules,
        "abbreviations": {k: str(v) for k, v in sorted(getattr(A, "abbreviations", {}).items())},
        "abbreviation_inverses": {k: str(v) for k, v in
                                  sorted(getattr(A, "abbreviation_inverses", {}).items())},
    }
    if isinstance(A, HopfAlgebra):
        name = lambda i: A.letters[i].name  # noqa: E731
        data["hopf"] = {
            "coproduct": {name(i): _terms(A, v, tensor=True) for i, v in sorted(A.delta_gen.items())},
            "counit": {name(i): str(v) for i, v in sorted(A.eps_gen.items())},
            "antipode": {name(i): _terms(A, v) for i, v in sorted(A.S_gen.items())},
            "antipode_inverse": {name(i): _terms(A, v) for i, v in sorted(A.Sinv_gen.items())},
            "star": {name(i): _terms(A, v) for i, v in sorted(A.star_gen.items())},
        }
    return data


def presentation_from_dict(data: dict) -> Algebra:
    if data.get("format") != FORMAT:
        raise ValueError(f"not a {FORMAT} file")
    info = data["ring"]
    mode = data["mode"]
    ring = ring_for(mode, info.get("order", 4), Fraction(info.get("kappa", "1/2")))
    cls = HopfAlgebra if "hopf" in data else Algebra
    A = cls(data["name"], ring, data["letters"], data["invertible"])
    A.mode = mode
    for rule in data["rules"]:
        A.rules[A.parse_word(rule["lhs"])] = _read_terms(A, rule["rhs"])
    A._invalidate()
    if "hopf" in data:
        h = data["hopf"]
        for n, rows in h["coproduct"].items():
            A.set_coproduct(n, TensorElement((A, A), _read_terms(A, rows, tensor=True)))
        for n, v in h["counit"].items():
            A.set_counit(n, _scalar(A, v))
        for n, rows in h["antipode"].items():
            A.set_antipode(n, NCElement(A, _read_terms(A, rows)))
        for n, rows in h["antipode_inverse"].items():
            A.set_antipode_inverse(n, NCElement(A, _read_terms(A, rows)))
        for n, rows in h["star"].items():
            A.set_star(n, NCElement(A, _read_terms(A, rows)))
    A.abbreviations = {}
    for k, v in data["abbreviations"].items():
        A.abbreviations[k] = parse(v, A)
    if data["abbreviation_inverses"]:
        A.abbreviation_inverses = {k: parse(v, A) for k, v in data["abbreviation_inverses"].items()}
    return A


def presentation_to_json(A: Algebra) -> str:
    return json.dumps(presentation_to_dict(A), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def presentation_from_json(text: str) -> Algebra:
    return presentation_from_dict(json.loads(text))


def same_presentation(A: Algebra, B: Algebra) -> bool:
    """Structural equality: identical serialized form."""
    return presentation_to_dict(A) == presentation_to_dict(B)
