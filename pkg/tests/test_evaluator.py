import pytest

from oracletree.evaluator import (
    Budget,
    NeedQuestion,
    Output,
    Timeout,
    delta,
    extract_modulus,
    run_core,
    run_outcome_json,
)
from oracletree.partiality import eval_steps, ret, undef
from oracletree.trees import Transcript, threshold_tree

all_true = lambda q: ret(True)


def test_budget_rejects_negative():
    with pytest.raises(ValueError):
        Budget(-1, 5)
    with pytest.raises(ValueError):
        Budget(1, -5)


def test_delta_output():
    out = delta(threshold_tree().at(3), all_true, Budget(8, 50))
    assert out == Output(True, Transcript((0, 1, 2), (True, True, True)))


def test_delta_needs_question():
    out = delta(threshold_tree().at(3), all_true, Budget(1, 50))
    assert isinstance(out, NeedQuestion)
    assert out.question == 1
    assert out.transcript == Transcript((0,), (True,))
    # zero questions allowed: stuck before the very first one
    out = delta(threshold_tree().at(3), all_true, Budget(0, 50))
    assert out.question == 0 and len(out.transcript) == 0


def test_delta_timeout_on_diverging_node():
    out = delta(threshold_tree().at(3), lambda q: ret(False), Budget(8, 50))
    assert isinstance(out, Timeout)
    assert out.transcript == Transcript((0,), (False,))


def test_delta_timeout_on_slow_oracle():
    out = delta(threshold_tree().at(3), lambda q: undef(), Budget(8, 50))
    assert isinstance(out, Timeout)
    assert len(out.transcript) == 0


def test_delta_outcome_is_stable_under_bigger_budgets():
    small = delta(threshold_tree().at(2), all_true, Budget(4, 30))
    for extra in (1, 5, 50):
        again = delta(threshold_tree().at(2), all_true, Budget(4 + extra, 30 + extra))
        assert again == small


def test_run_core_diagonal():
    x = run_core(threshold_tree(), all_true, 2)
    assert eval_steps(x, 1) is None
    assert eval_steps(x, 50) is True
    diverging = run_core(threshold_tree(), lambda q: ret(False), 2)
    assert eval_steps(diverging, 500) is None


def test_extract_modulus():
    assert extract_modulus(threshold_tree().at(3), all_true, Budget(8, 50)) == (0, 1, 2)
    assert extract_modulus(threshold_tree().at(0), all_true, Budget(8, 50)) == ()
    assert extract_modulus(threshold_tree().at(3), lambda q: ret(False), Budget(8, 50)) is None


def test_run_outcome_json_all_three():
    b = Budget(2, 9)
    t = Transcript((0,), (True,))
    assert run_outcome_json(Output(True, t), b) == {
        "result": "out",
        "value": True,
        "qs": [0],
        "ans": [True],
        "budget": {"questions": 2, "steps": 9},
    }
    assert run_outcome_json(NeedQuestion(4, t), b)["result"] == "ask"
    assert run_outcome_json(NeedQuestion(4, t), b)["value"] == 4
    assert run_outcome_json(Timeout(t), b) == {
        "result": "timeout",
        "value": None,
        "qs": [0],
        "ans": [True],
        "budget": {"questions": 2, "steps": 9},
    }
