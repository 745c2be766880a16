"""One test per acceptance criterion; each records a PASS/FAIL line that is
printed in the terminal summary."""

import shutil
import subprocess
import sys

from hopflab import liebialg as L
from hopflab.constructions import verify_cocycle, verify_hom, verify_qybe
from hopflab.golden import relation_report
from hopflab.models import HOPF_MODELS
from hopflab.report import Report
from hopflab.suites import roundtrip_report, run_suite


def _summary(reps) -> str:
    total = sum(len(r.checks) for r in reps)
    bad = sum(len(r.failures) for r in reps)
    names = "; ".join(f"{c.paper_label}: {c.name}" for r in reps for c in r.failures[:2])
    return f"{total - bad}/{total} checks pass" + (f" (failing: {names})" if bad else "")


def test_01_hopf_axioms(record):
    rep = run_suite("hopf-axioms", max_degree=3)
    ok = rep.ok and len(HOPF_MODELS) == 12
    record(1, ok, f"Hopf axioms, 12 presentations, degree 3: {_summary([rep])}")
    assert ok, rep.failures[:3]


def test_02_golden_relations(record):
    reps = [relation_report(l) for l in ("qdoublerelations", "qbicrossrelations",
                                         "doublerelations", "limitbicrossrelations")]
    ok = all(r.ok for r in reps)
    record(2, ok, f"relation golden files: {_summary(reps)}")
    assert ok


def test_03_theta_homomorphisms(record):
    from hopflab.models.maps import theta_0_map, theta_q_map

    reps = [verify_hom(theta_q_map(), "theta"), verify_hom(theta_0_map(), "thetaiso0")]
    ok = all(r.ok for r in reps) and all(r.checks for r in reps)
    record(3, ok, f"theta_q and theta_0 are algebra maps: {_summary(reps)}")
    assert ok


def test_04_twisted_coproduct(record):
    from hopflab.models.maps import twisted_coproduct_report

    rep = twisted_coproduct_report()
    exact = [c for c in rep.checks if "q-exponential conjugation" in c.name]
    ok = rep.ok and len(exact) == 1 and len(rep.checks) == 5
    record(4, ok, f"twisted coproduct on a, b, c, d: {_summary([rep])}")
    assert ok


def test_05_cocycles(record):
    from hopflab.models.actions import bicross_0_action
    from hopflab.models.twists import chi_B, chi_B0

    limit = verify_cocycle(chi_B0(), "qto1twist", action=bicross_0_action(), max_degree=1)
    series = verify_cocycle(chi_B(4), "qtwist2")
    ok = limit.ok and series.ok
    record(5, ok, f"chi_B0 exact by action, chi_B t-adic order 4: {_summary([limit, series])}")
    assert ok


def test_06_qybe(record):
    from hopflab.models.rep import RepR
    from hopflab.models.twists import R_B0, R_BD, R_BL

    reps = [verify_qybe(RepR(), "Rexpantion", "rep"), verify_qybe(R_BD(4), "RBD", name="R_BD"),
            verify_qybe(R_BL(4), "RBL", name="R_BL"), verify_qybe(R_B0(3), "qto1RBD", name="R_B0")]
    ok = all(r.ok for r in reps)
    record(6, ok, f"QYBE spin-1/2, R_BD/R_BL t^4, R_B0 lam^3: {_summary(reps)}")
    assert ok


def test_07_twisted_spacetime(record):
    from hopflab.models.actions import covariance_report, twisted_relations_report

    reps = [twisted_relations_report(), covariance_report()]
    closed = [c for c in reps[1].checks if "closed form" in c.name]
    ok = all(r.ok for r in reps) and len(closed) == 3
    record(7, ok, f"twisted U(su2*), Phi and covariance: {_summary(reps)}")
    assert ok


def test_08_cybe(record):
    rep = L.cybe_report()
    cybe = Report("cybe", checks=[c for c in rep.checks if c.name.startswith("CYBE")])
    ok = cybe.ok and len(cybe.checks) == 7
    record(8, ok, f"CYBE for seven r-matrices: {_summary([cybe])}")
    assert ok


def test_09_semiclassical(record):
    rep = L.semiclassical_report(2)
    twist = L.theta_c_report()
    limit = Report("lie-twist", checks=[c for c in twist.checks if c.paper_label == "r_D0"])
    ok = rep.ok and limit.ok and limit.checks
    record(9, bool(ok), f"semiclassical limits and the twist of r_B0: {_summary([rep, limit])}")
    assert ok


def test_10_theta_c(record):
    rep = L.theta_c_report()
    brackets = [c for c in rep.checks if c.paper_label == "theta^c"]
    image = [c for c in rep.checks if c.name == "(theta^c (x) theta^c)(f^a (x) e_a) = r_D"]
    sub = Report("theta-c", checks=brackets + image)
    ok = sub.ok and len(brackets) == 15 and len(image) == 1
    record(10, ok, f"theta^c on 15 brackets and the canonical r: {_summary([sub])}")
    assert ok


def test_11_roundtrip_and_verify_all(record):
    rep = roundtrip_report(100)
    exe = shutil.which("hopflab")
    cmd = [exe] if exe else [sys.executable, "-m", "hopflab.cli"]
    proc = subprocess.run(cmd + ["verify", "all", "--quiet"], capture_output=True, text=True)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    ok = rep.ok and proc.returncode == 0
    record(11, ok, f"round trips: {_summary([rep])}; 'hopflab verify all' exit {proc.returncode} "
                   f"({tail})")
    assert ok
