import json
import random

import pytest

from hopflab.golden import golden_labels, load_golden, relation_report
from hopflab.models import MODEL_MODES, get_model
from hopflab.models.serialize import presentation_from_json, presentation_to_json, same_presentation
from hopflab.suites import random_element

PAIRS = [(m, mode) for m, modes in MODEL_MODES.items() for mode in modes if mode != "rep"]


@pytest.mark.parametrize("model,mode", PAIRS)
def test_export_import_roundtrip(model, mode):
    P = get_model(model, mode, 2)
    text = presentation_to_json(P)
    Q = presentation_from_json(text)
    assert same_presentation(P, Q)
    assert presentation_to_json(Q) == text
    rng = random.Random(1)
    for _ in range(5):
        x = random_element(P, P.normal_words(2), rng)
        y = random_element(P, P.normal_words(2), rng)
        assert {w: c for w, c in (x * y).terms.items()} == \
            (Q.raw(dict(x.terms)) * Q.raw(dict(y.terms))).terms


def test_u_su2_export_has_three_rules():
    data = json.loads(presentation_to_json(get_model("u_su2")))
    assert len(data["rules"]) == 3


def test_golden_labels_and_override(tmp_path, monkeypatch):
    assert golden_labels() == ["doublerelations", "limitbicrossrelations", "qbicrossrelations",
                               "qdoublerelations"]
    data = load_golden("doublerelations")
    data["relations"] = data["relations"][:2]
    (tmp_path / "doublerelations.json").write_text(json.dumps(data))
    monkeypatch.setenv("HOPFLAB_GOLDEN_DIR", str(tmp_path))
    assert golden_labels() == ["doublerelations"]
    assert len(relation_report("doublerelations").checks) == 2


def test_limit_double_h_b_bracket_is_minus_two_b():
    from hopflab.parser import parse

    D = get_model("double_0")
    H, b = parse("H", D), parse("b", D)
    assert H * b - b * H == parse("-2*b", D)
    assert H * b - b * H != parse("-b", D)


def test_printed_action_tables_fail_module_algebra_law():
    from hopflab.models.actions import printed_table_report

    rep = printed_table_report(1)
    assert not rep.ok


def test_twisted_spacetime_brackets():
    from hopflab.models.actions import twisted_relations_report

    assert twisted_relations_report().ok


def test_theta_images_from_l_matrices_agree():
    from hopflab.models.maps import theta_q_from_l_matrices, theta_q_map

    th = theta_q_map()
    D = get_model("double_q")
    for name, value in theta_q_from_l_matrices().items():
        assert value == th(D.gen(name))
