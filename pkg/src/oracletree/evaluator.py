"""Budgeted interrogation of a computation tree against an oracle.

The runner walks question nodes one at a time, consulting a partial answer
function for each, until an output appears or a budget runs out. The budget
is two-dimensional: how many oracle consultations are allowed and how much
fuel every single partial value gets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .partiality import Partial, eval_steps
from .trees import Out, PathFn, Transcript, Tree, json_value


@dataclass(frozen=True)
class Budget:
    questions: int
    steps: int

    def __post_init__(self):
        if self.questions < 0 or self.steps < 0:
            raise ValueError("budget components must be >= 0")


@dataclass(frozen=True)
class Output:
    """The run finished with a value."""

    value: Any
    transcript: Transcript


@dataclass(frozen=True)
class NeedQuestion:
    """The tree wants one more answer than the budget allowed."""

    question: Any
    transcript: Transcript


@dataclass(frozen=True)
class Timeout:
    """Some partial value failed to converge within the step fuel."""

    transcript: Transcript


RunOutcome = Any  # Output | NeedQuestion | Timeout

AnswerFn = Callable[[Any], Partial]


def delta(sigma: PathFn, answer: AnswerFn, budget: Budget) -> RunOutcome:
    """Drive one interrogation to an outcome.

    Every produced Output comes with a transcript that is valid by
    construction, and outcomes are stable as either budget component grows.
    """
    qs: list = []
    ans: list = []
    remaining = budget.questions
    while True:
        node = eval_steps(sigma(tuple(ans)), budget.steps)
        if node is None:
            return Timeout(Transcript(qs, ans))
        if isinstance(node, Out):
            return Output(node.output, Transcript(qs, ans))
        if remaining == 0:
            return NeedQuestion(node.question, Transcript(qs, ans))
        a = eval_steps(answer(node.question), budget.steps)
        if a is None:
            return Timeout(Transcript(qs, ans))
        qs.append(node.question)
        ans.append(a)
        remaining -= 1


def run_core(tree: Tree, answer: AnswerFn, i: Any) -> Partial:
    """The whole run as one partial value.

    Fuel n is spent as the diagonal budget (n, n). Output outcomes survive
    any budget growth, which is exactly the monotonicity the Partial
    interface demands, and the value converges to o iff some budget makes
    delta produce Output(o).
    """

    def step(fuel: int) -> Any:
        outcome = delta(tree.at(i), answer, Budget(fuel, fuel))
        if isinstance(outcome, Output):
            return outcome.value
        return None

    return Partial(step)


def extract_modulus(sigma: PathFn, answer: AnswerFn, budget: Budget) -> tuple | None:
    """Questions a converging run actually consulted, or None without one.

    Oracles agreeing on these questions drive the run to the same output;
    answers elsewhere cannot matter because they are never seen.
    """
    outcome = delta(sigma, answer, budget)
    if isinstance(outcome, Output):
        return outcome.transcript.qs
    return None


def run_outcome_json(outcome: RunOutcome, budget: Budget) -> dict:
    """Wire format for one run outcome."""
    if isinstance(outcome, Output):
        result, value = "out", outcome.value
    elif isinstance(outcome, NeedQuestion):
        result, value = "ask", outcome.question
    else:
        result, value = "timeout", None
    t = outcome.transcript
    return {
        "result": result,
        "value": json_value(value),
        "qs": [json_value(q) for q in t.qs],
        "ans": [json_value(a) for a in t.ans],
        "budget": {"questions": budget.questions, "steps": budget.steps},
    }
