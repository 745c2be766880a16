"""Named verification suites.  Each runner returns one :class:`Report`;
``run_suite`` checks the model and mode against the suite first."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .report import Report

__all__ = ["SUITES", "Suite", "run_suite", "run_all", "roundtrip_report"]


@dataclass(frozen=True)
class Options:
    model: str | None = None
    mode: str | None = None
    order: int = 4
    max_degree: int = 3
    kappa: Fraction = Fraction(1, 2)


@dataclass(frozen=True)
class Suite:
    name: str
    runner: Callable[[Options], Report]
    models: tuple[str, ...]
    modes: tuple[str, ...]
    doc: str


def _merge(suite: str, reports, model="all", mode="all", order=None) -> Report:
    out = Report(suite, model, mode, order)
    for r in reports:
        out.extend(r)
    return out


def _models_for(opts: Options, candidates):
    if opts.model is None:
        return list(candidates)
    return [opts.model]


def _mode_for(opts: Options, model: str):
    from .models import MODEL_MODES, IncompatibleMode

    if opts.mode is None:
        return MODEL_MODES[model][0]
    if opts.mode not in MODEL_MODES[model]:
        raise IncompatibleMode(f"{model} has no {opts.mode} mode")
    return opts.mode


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------


def _hopf_axioms(opts: Options) -> Report:
    from .hopf import verify_hopf_axioms
    from .models import HOPF_MODELS, get_model

    reps = []
    for m in _models_for(opts, HOPF_MODELS):
        mode = _mode_for(opts, m)
        reps.append(verify_hopf_axioms(get_model(m, mode, opts.order, opts.kappa), opts.max_degree))
    return _merge("hopf-axioms", reps, opts.model or "all", opts.mode or "default")


def _confluence(opts: Options) -> Report:
    from .models import MODEL_MODES, get_model
    from .ncalg import confluence_probe

    rep = Report("confluence", opts.model or "all", opts.mode or "default")
    for m in _models_for(opts, MODEL_MODES):
        modes = [_mode_for(opts, m)] if opts.mode else [x for x in MODEL_MODES[m] if x != "rep"]
        for mode in modes:
            P = get_model(m, mode, opts.order, opts.kappa)
            probe = confluence_probe(P, opts.max_degree)
            rep.assert_zero(f"{m} ({mode}): {probe.probed} overlaps resolve", "normal form",
                            len(probe.failures), rhs="0")
            for w, left, right in probe.failures:
                rep.compare(f"{m} ({mode}) overlap {w}", "normal form", left, right)
    return rep


def _pairing(opts: Options) -> Report:
    from .hopf import verify_pairing
    from .models import get_model

    reps = []
    for m, mode in (("double_q", "exact-q"), ("double_q", "t-adic"), ("double_0", "exact-lambda")):
        if opts.mode and opts.mode != mode:
            continue
        D = get_model(m, mode, opts.order, opts.kappa)
        label = "qpairing" if m == "double_q" else "pairing"
        reps.append(verify_pairing(D.pairing, min(opts.max_degree, 2), label))
    return _merge("pairing", reps, "double_q, double_0", opts.mode or "all")


def _actions(opts: Options) -> Report:
    from .models.actions import action_report

    return action_report()


def _module_algebra(opts: Options) -> Report:
    from .models.actions import module_algebra_report

    return module_algebra_report(opts.max_degree)


def _golden(suite: str, labels) -> Callable[[Options], Report]:
    def run(opts: Options) -> Report:
        from .golden import relation_report

        return _merge(suite, [relation_report(l) for l in labels])
    return run


def _theta(opts: Options) -> Report:
    from .constructions import verify_hom
    from .models import get_model
    from .models.maps import (killing_matrix_report, l_matrix_report, theta_0_map,
                              theta_q_from_l_matrices, theta_q_map)

    rep = Report("isomorphism-theta", "double_q, double_0", "exact")
    rep.extend(verify_hom(theta_q_map(), "theta"))
    rep.extend(verify_hom(theta_0_map(), "thetaiso0"))
    rep.extend(l_matrix_report())
    rep.extend(killing_matrix_report())
    th = theta_q_map()
    D = get_model("double_q")
    for name, value in theta_q_from_l_matrices().items():
        rep.compare(f"theta({name}) from L-matrices = typed image", "theta", value, th(D.gen(name)))
    return rep


def _twist_cocycle(opts: Options) -> Report:
    from .constructions import verify_cocycle
    from .models.actions import bicross_0_action
    from .models.twists import chi_B, chi_B0, chi_B0_series

    rep = Report("twist-cocycle", "bicross_q, bicross_0", "t-adic, exact-lambda", opts.order)
    rep.extend(verify_cocycle(chi_B(opts.order), "qtwist2"))
    # the printed limit twist, by its action on U(su2*); it already fails in degree 1
    rep.extend(verify_cocycle(chi_B0(), "qto1twist", action=bicross_0_action(),
                              max_degree=min(opts.max_degree, 1)))
    lam = min(opts.order, 3)
    for log in (False, True):
        sub = verify_cocycle(chi_B0_series(lam, log), "qto1twist")
        for c in sub.checks:
            c.name += " (ln alpha in place of alpha - 1)" if log else " (lambda-adic)"
        rep.extend(sub)
    return rep


def _twisted_coproduct(opts: Options) -> Report:
    from .models.maps import twisted_coproduct_report

    return twisted_coproduct_report()


def _twisted_spacetime(opts: Options) -> Report:
    from .models.actions import covariance_report, twisted_relations_report

    return _merge("twisted-spacetime", [twisted_relations_report(), covariance_report()],
                  "u_su2_star", "exact-lambda")


def _qybe(opts: Options) -> Report:
    from .constructions import verify_qybe
    from .models.rep import RepR
    from .models.twists import R_B0, R_BD, R_BL, uq_R

    mode = opts.mode
    rep = Report("qybe", opts.model or "all", mode or "all", opts.order)
    if mode in (None, "rep"):
        rep.extend(verify_qybe(RepR(), "Rexpantion", "rep", "R"))
    if mode in (None, "t-adic"):
        rep.extend(verify_qybe(uq_R(opts.order)[0], "Rexpantion", name="R"))
        for name, fn, label in (("R_BD", R_BD, "RBD"), ("R_BL", R_BL, "RBL")):
            rep.extend(verify_qybe(fn(opts.order), label, name=name))
            rep.compare(f"{name} along both routes", label, fn(opts.order),
                        fn(opts.order, "antipode"))
    if mode in (None, "lambda-adic"):
        lam = min(opts.order, 3)
        rep.extend(verify_qybe(R_B0(lam), "qto1RBD", name="R_B0"))
        sub = verify_qybe(R_B0(lam, True), "qto1RBD", name="R_B0")
        for c in sub.checks:
            c.name += " (ln alpha in place of alpha - 1)"
        rep.extend(sub)
    return rep


def _quasitriangular(opts: Options) -> Report:
    from .constructions import verify_quasitriangular
    from .models import get_model
    from .models.twists import R_BD, R_BL, uq_R

    R, Ri = uq_R(opts.order)
    rep = Report("quasitriangular", "uq_su2, bicross_q", "t-adic", opts.order)
    rep.extend(verify_quasitriangular(R, get_model("uq_su2", "t-adic", opts.order), Ri,
                                      "Rexpantion"))
    low = min(opts.order, 3)
    M = get_model("bicross_q", "t-adic", low)
    rep.extend(verify_quasitriangular(R_BD(low), M, label="RBD", name="R_BD"))
    rep.extend(verify_quasitriangular(R_BL(low), M, label="RBL", name="R_BL"))
    return rep


def _star(opts: Options) -> Report:
    from .hopf import verify_star
    from .models import HOPF_MODELS, get_model

    reps = []
    for m in _models_for(opts, HOPF_MODELS):
        P = get_model(m, _mode_for(opts, m), opts.order, opts.kappa)
        if P.star_gen:
            reps.append(verify_star(P, min(opts.max_degree, 2)))
    return _merge("star", reps, opts.model or "all", opts.mode or "default")


def _lie(fn_name: str) -> Callable[[Options], Report]:
    def run(opts: Options) -> Report:
        from . import liebialg

        return getattr(liebialg, fn_name)()
    return run


def _semiclassical(opts: Options) -> Report:
    from .liebialg import semiclassical_report

    return semiclassical_report(min(opts.order, 2))


def roundtrip_report(samples: int = 100, seed: int = 0, opts: Options | None = None) -> Report:
    """``parse(render(x)) == x`` for random normal-form elements of every
    model, and ``import(export(P))`` for every presentation."""
    from .models import MODEL_MODES, get_model
    from .models.serialize import presentation_from_json, presentation_to_json, same_presentation
    from .parser import parse

    rng = random.Random(seed)
    rep = Report("parser", "all", "all")
    for m, modes in MODEL_MODES.items():
        for mode in modes:
            if mode == "rep":
                continue
            P = get_model(m, mode, 2)
            words = P.normal_words(3)
            bad = []
            for _ in range(samples):
                x = random_element(P, words, rng)
                if parse(str(x), P) != x:
                    bad.append(str(x))
            rep.assert_zero(f"{m} ({mode}): parse(render(x)) = x on {samples} samples",
                            "round trip", len(bad), lhs="; ".join(bad[:3]))
            Q = presentation_from_json(presentation_to_json(P))
            ok = same_presentation(P, Q)
            rep.assert_zero(f"{m} ({mode}): import(export(P)) = P", "round trip", int(not ok))
    return rep


def random_element(P, words, rng: random.Random):
    """A sum of up to four normal words with small coefficients in the ring of ``P``."""
    from .coeffs import GaussianRational

    ring = P.ring
    x = P.zero()
    for w in rng.sample(words, min(len(words), rng.randint(1, 4))):
        c = GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.choice([0, 0, 1, -2]))
        if not c:
            continue
        coef = ring.coerce(c) if not ring.is_series else ring.coerce(c)
        if not ring.is_series and rng.random() < 0.4:
            coef = coef * (ring.s if not ring.classical else ring.lam)
        x = x + P.raw({w: coef})
    return x


def _parser(opts: Options) -> Report:
    return roundtrip_report()


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("hopf-axioms", _hopf_axioms, (), (), "coassociativity, counit and antipode on normal words"),
    Suite("confluence", _confluence, (), (), "overlap resolution of the rewrite rules"),
    Suite("pairing", _pairing, ("double_q", "double_0"), ("exact-q", "t-adic", "exact-lambda"),
          "duality pairings of the doubles"),
    Suite("actions", _actions, (), ("exact-q", "exact-lambda"), "action tables against closed forms"),
    Suite("module-algebra", _module_algebra, (), ("exact-q", "exact-lambda"),
          "module-algebra law for every action table"),
    Suite("double-relations", _golden("double-relations", ("qdoublerelations", "doublerelations")),
          ("double_q", "double_0"), ("exact-q", "exact-lambda"), "cross relations of the doubles"),
    Suite("bicross-relations",
          _golden("bicross-relations", ("qbicrossrelations", "limitbicrossrelations")),
          ("bicross_q", "bicross_0"), ("exact-q", "exact-lambda"),
          "cross relations of the bicrossproducts"),
    Suite("isomorphism-theta", _theta, ("double_q", "double_0"), ("exact-q", "exact-lambda"),
          "theta as algebra maps, L-matrices and the Killing form"),
    Suite("twist-cocycle", _twist_cocycle, ("bicross_q", "bicross_0"),
          ("t-adic", "exact-lambda", "lambda-adic"), "2-cocycle identity for the twists"),
    Suite("twisted-coproduct", _twisted_coproduct, ("bicross_q",), ("exact-q", "rep"),
          "twisted coproduct of the image of the double"),
    Suite("twisted-spacetime", _twisted_spacetime, ("u_su2_star", "bicross_0"), ("exact-lambda",),
          "twisted U(su2*) and covariance"),
    Suite("qybe", _qybe, ("uq_su2", "bicross_q", "bicross_0"), ("rep", "t-adic", "lambda-adic"),
          "quantum Yang-Baxter equation"),
    Suite("quasitriangular", _quasitriangular, ("uq_su2", "bicross_q"), ("t-adic",),
          "quasitriangularity axioms"),
    Suite("star", _star, (), (), "star structures"),
    Suite("lie-bialgebra", _lie("structure_report"), (), ("exact",), "Lie bialgebra axioms"),
    Suite("cybe", _lie("cybe_report"), (), ("exact",), "classical Yang-Baxter equation"),
    Suite("semiclassical", _semiclassical, (), ("t-adic", "lambda-adic"),
          "order-1 parts of the series R-matrices and twists"),
    Suite("lie-twist", _lie("theta_c_report"), (), ("exact",), "theta^c and Lie bialgebra twists"),
    Suite("parser", _parser, (), (), "parse/render and export/import round trips"),
]}


def run_suite(name: str, model: str | None = None, mode: str | None = None, order: int = 4,
              max_degree: int = 3, kappa=Fraction(1, 2)) -> Report:
    from .models import MODEL_MODES, IncompatibleMode, UnknownModel
    from .models.registry import normalize_mode

    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}") from None
    mode = normalize_mode(mode)
    if model is not None and model not in MODEL_MODES:
        raise UnknownModel(model)
    if model is not None and suite.models and model not in suite.models:
        raise IncompatibleMode(f"suite {name} does not run on {model}")
    if mode is not None and suite.modes and mode not in suite.modes:
        raise IncompatibleMode(f"suite {name} does not run in {mode} mode")
    if order < 1:
        raise IncompatibleMode("order must be at least 1")
    opts = Options(model, mode, order, max_degree, Fraction(kappa))
    rep = suite.runner(opts)
    rep.suite = name
    return rep


def _run_named(args):
    return run_suite(*args)


def run_all(order: int = 4, max_degree: int = 3, kappa=Fraction(1, 2), jobs: int = 1) -> list[Report]:
    """Every suite with default model and mode, in suite order."""
    names = list(SUITES)
    args = [(n, None, None, order, max_degree, kappa) for n in names]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run_named, args))
    return [_run_named(a) for a in args]
