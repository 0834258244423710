"""Turing reductions and oracle semi-deciders as computation trees.

A reduction from p to q is a boolean-output tree whose questions go to a
q-oracle; running it against the characteristic oracle of q decides p. A
semi-decider is the same thing with unit output: convergence itself is the
positive answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .combinators import compose_trees, ident, of_partial_fn, precompose
from .evaluator import Budget, Output, delta, run_core
from .partiality import STAR, Partial, bind, eval_steps, mu, ret, undef
from .trees import Ask, FnOracle, Out, Tree


@dataclass(frozen=True)
class Inl:
    """Left summand of a disjoint union."""

    value: Any

    def to_json_value(self) -> dict:
        from .trees import json_value

        return {"inl": json_value(self.value)}


@dataclass(frozen=True)
class Inr:
    """Right summand of a disjoint union."""

    value: Any

    def to_json_value(self) -> dict:
        from .trees import json_value

        return {"inr": json_value(self.value)}


@dataclass(frozen=True)
class CharOracle:
    """Oracle of a decidable predicate: relates x to pred(x) and nothing else."""

    pred: Callable[[Any], bool]

    def answer(self, q: Any) -> Partial:
        return ret(bool(self.pred(q)))

    def as_fn_oracle(self) -> FnOracle:
        return FnOracle(self.answer)


@dataclass(frozen=True)
class TuringReduction:
    """Boolean-question, boolean-output tree reducing one predicate to another."""

    tree: Tree


@dataclass(frozen=True)
class OracleSemiDecider:
    """Unit-output tree: reaching any output at all is acceptance."""

    tree: Tree


def reduce_refl() -> TuringReduction:
    """Every predicate reduces to itself by relaying the one question."""
    return TuringReduction(ident())


def reduce_trans(first: TuringReduction, second: TuringReduction) -> TuringReduction:
    """Chain reductions: first's questions are answered by runs of second."""
    return TuringReduction(compose_trees(second.tree, first.tree))


def join(left: TuringReduction, right: TuringReduction) -> TuringReduction:
    """Reduce a tagged union pointwise, dispatching on the tag."""

    def node(z: Any, answers: tuple) -> Partial:
        if isinstance(z, Inl):
            return left.tree.apply(z.value, answers)
        if isinstance(z, Inr):
            return right.tree.apply(z.value, answers)
        raise TypeError("join input must be Inl or Inr")

    return TuringReduction(Tree(node))


def inject_left() -> TuringReduction:
    """A predicate reduces to any union it is the left part of."""
    return TuringReduction(precompose(Inl, ident()))


def inject_right() -> TuringReduction:
    return TuringReduction(precompose(Inr, ident()))


def manyone_to_turing(f: Callable[[Any], Any]) -> TuringReduction:
    """A many-one map becomes the reduction asking f(x) and relaying."""
    return TuringReduction(precompose(f, ident()))


def complement_reduction() -> TuringReduction:
    """Ask the input, negate the answer."""

    def node(x: Any, answers: tuple) -> Partial:
        if not answers:
            return ret(Ask(x))
        return ret(Out(not answers[0]))

    return TuringReduction(Tree(node))


def turing_to_sdec(r: TuringReduction) -> tuple[OracleSemiDecider, OracleSemiDecider]:
    """Split a reduction into semi-deciders for the predicate and its complement.

    Each half relays the questions and accepts exactly on its own verdict;
    the other verdict is turned into divergence.
    """

    def accepting(wanted: bool) -> Tree:
        def node(x: Any, answers: tuple) -> Partial:
            def conv(v: Any) -> Partial:
                if isinstance(v, Ask):
                    return ret(v)
                if v.output == wanted:
                    return ret(Out(STAR))
                return undef()

            return bind(r.tree.apply(x, answers), conv)

        return Tree(node)

    return OracleSemiDecider(accepting(True)), OracleSemiDecider(accepting(False))


def sdec_from_plain(f: Callable[[Any], Partial]) -> OracleSemiDecider:
    """A plain partial-unit function is a semi-decider that never asks."""
    return OracleSemiDecider(of_partial_fn(f))


def sdec_to_plain(s: OracleSemiDecider, decider: Callable[[Any], bool]) -> Callable[[Any], Partial]:
    """Run a semi-decider against a decidable oracle, yielding a plain
    partial-unit function."""
    return lambda x: run_core(s.tree, lambda y: ret(bool(decider(y))), x)


def sdec_transport_turing(s: OracleSemiDecider, r: TuringReduction) -> OracleSemiDecider:
    """Swap the oracle of a semi-decider along a reduction of its oracle."""
    return OracleSemiDecider(compose_trees(r.tree, s.tree))


def sdec_transport_manyone(s: OracleSemiDecider, f: Callable[[Any], Any]) -> OracleSemiDecider:
    """Precompose the input of a semi-decider with a many-one map."""
    return OracleSemiDecider(precompose(f, s.tree))


def step_semidecider_to_partial(fire: Callable[[Any, int], bool]) -> Callable[[Any], Partial]:
    """Turn a step-indexed acceptor into a partial unit function."""
    return lambda x: bind(mu(lambda n: ret(bool(fire(x, n)))), lambda _n: ret(STAR))


def partial_to_step_semidecider(f: Callable[[Any], Partial]) -> Callable[[Any, int], bool]:
    """The other direction: probe the partial value at the step index."""
    return lambda x, n: eval_steps(f(x), n) is not None


def bisemidec_to_turing(
    accept: Callable[[Any, int], bool], reject: Callable[[Any, int], bool]
) -> TuringReduction:
    """Two step-indexed halves that together cover every input make a
    reduction that needs no oracle: find the first index where either half
    fires and report which one it was."""

    def node(x: Any, answers: tuple) -> Partial:
        fires = mu(lambda n: ret(bool(accept(x, n) or reject(x, n))))
        return bind(fires, lambda n: ret(Out(bool(accept(x, n)))))

    return TuringReduction(Tree(node))


def decide_via_reduction(
    r: TuringReduction,
    decider: Callable[[Any], bool],
    inputs: Iterable[Any],
    budget: Budget,
) -> list[tuple[Any, Any]]:
    """Budgeted verdicts for a batch of inputs.

    Each verdict is the run's boolean output, or None when either budget
    component ran out first.
    """

    def answer(y: Any) -> Partial:
        return ret(bool(decider(y)))

    verdicts: list[tuple[Any, Any]] = []
    for x in inputs:
        outcome = delta(r.tree.at(x), answer, budget)
        verdicts.append((x, outcome.value if isinstance(outcome, Output) else None))
    return verdicts
