"""Combinators over computation trees.

Plain trees compose awkwardly, so the composite constructions here first
move to richer tree forms. An extended tree threads a state through the
run and never pauses; a stalling tree may additionally take pure state
steps without asking anything. Translations connect all three forms, and
the composite combinators are built as stalling trees and then collapsed
back to plain ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .partiality import Partial, bind, mu, ret, undef
from .trees import Ask, Out, Tree


@dataclass(frozen=True)
class ExtAsk:
    """Extended-tree node: move to this state and ask this question."""

    state: Any
    question: Any


@dataclass(frozen=True)
class Step:
    """Stalling-tree node: move to this state; question None is a stall."""

    state: Any
    question: Any = None


class _StatefulTree:
    """Shared plumbing: a pure node function over (input, state, answers),
    memoised when the key is hashable."""

    def __init__(self, node: Callable[[Any, Any, tuple], Partial], start: Any):
        self._node = node
        self.start = start
        self._memo: dict[Any, Partial] = {}

    def apply(self, i: Any, state: Any, answers) -> Partial:
        answers = tuple(answers)
        try:
            key = (i, state, answers)
            hit = self._memo.get(key)
        except TypeError:
            return self._node(i, state, answers)
        if hit is None:
            hit = self._node(i, state, answers)
            self._memo[key] = hit
        return hit


class ExtTree(_StatefulTree):
    """Stateful tree without stalls; nodes are ExtAsk or Out."""


class StallTree(_StatefulTree):
    """Stateful tree that may stall; nodes are Step or Out."""


def precompose(g: Callable[[Any], Any], tree: Tree) -> Tree:
    """Reindex the input before running the tree."""
    return Tree(lambda i, answers: tree.apply(g(i), answers))


def of_partial_fn(f: Callable[[Any], Partial]) -> Tree:
    """A tree that never asks: it just waits for f on the input."""
    return Tree(lambda i, answers: bind(f(i), lambda o: ret(Out(o))))


def of_total_fn(f: Callable[[Any], Any]) -> Tree:
    return of_partial_fn(lambda i: ret(f(i)))


def const_tree(value: Any) -> Tree:
    return of_total_fn(lambda i: value)


def never_tree() -> Tree:
    return of_partial_fn(lambda i: undef())


def ident() -> Tree:
    """Ask the input itself as the one question, return the first answer."""

    def node(q: Any, answers: tuple) -> Partial:
        if not answers:
            return ret(Ask(q))
        return ret(Out(answers[0]))

    return Tree(node)


def ite(test: Callable[[Any], bool], when_true: Tree, when_false: Tree) -> Tree:
    """Branch on a decidable test of the input."""

    def node(i: Any, answers: tuple) -> Partial:
        chosen = when_true if test(i) else when_false
        return chosen.apply(i, answers)

    return Tree(node)


def seq_bind(first: Tree, second: Tree) -> Tree:
    """Run first to an output o, then second on (input, o).

    The state records o together with how many answers first consumed;
    second then sees the answer list with that prefix dropped.
    """

    def node(i: Any, state: Any, answers: tuple) -> Partial:
        if state is None:

            def after(x: Any) -> Partial:
                if isinstance(x, Ask):
                    return ret(Step(None, x.question))
                return ret(Step((x.output, len(answers)), None))

            return bind(first.apply(i, answers), after)

        o1, consumed = state

        def then(x: Any) -> Partial:
            if isinstance(x, Ask):
                return ret(Step(state, x.question))
            return ret(Out(x.output))

        return bind(second.apply((i, o1), answers[consumed:]), then)

    return stall_to_plain(StallTree(node, start=None))


def compose_trees(inner: Tree, outer: Tree) -> Tree:
    """Answer every question of outer by a full run of inner at it.

    The state keeps the list of outer questions already answered, plus the
    question currently being worked on with the number of answers its inner
    run has received. An active inner run always sits at the end of the
    global answer list, so it sees exactly the last n answers.
    """

    def node(i: Any, state: Any, answers: tuple) -> Partial:
        history, active = state
        if active is None:
            answered = tuple(y for _x, y in history)

            def after(x: Any) -> Partial:
                if isinstance(x, Out):
                    return ret(x)
                return ret(Step((history, (x.question, 0)), None))

            return bind(outer.apply(i, answered), after)

        x, used = active

        def then(sub: Any) -> Partial:
            if isinstance(sub, Ask):
                return ret(Step((history, (x, used + 1)), sub.question))
            return ret(Step((history + ((x, sub.output),), None), None))

        return bind(inner.apply(x, answers[len(answers) - used:]), then)

    return stall_to_plain(StallTree(node, start=((), None)))


def search() -> Tree:
    """Ask (input, 0), (input, 1), ... and output the first true index."""

    def node(i: Any, answers: tuple) -> Partial:
        for idx, a in enumerate(answers):
            if a:
                return ret(Out(idx))
        return ret(Ask((i, len(answers))))

    return Tree(node)


def plain_to_ext(tree: Tree) -> ExtTree:
    """Give a plain tree a vacuous state."""

    def node(i: Any, state: Any, answers: tuple) -> Partial:
        def conv(x: Any) -> Partial:
            if isinstance(x, Ask):
                return ret(ExtAsk(state, x.question))
            return ret(x)

        return bind(tree.apply(i, answers), conv)

    return ExtTree(node, start=None)


def ext_to_plain(ext: ExtTree) -> Tree:
    """Drop the state by replaying it over every answer prefix.

    An output reached mid-prefix wins regardless of the leftover answers.
    """

    def node(i: Any, answers: tuple) -> Partial:
        def go(state: Any, position: int) -> Partial:
            current = ext.apply(i, state, answers[:position])
            if position == len(answers):

                def finish(x: Any) -> Partial:
                    if isinstance(x, ExtAsk):
                        return ret(Ask(x.question))
                    return ret(x)

                return bind(current, finish)

            def advance(x: Any) -> Partial:
                if isinstance(x, ExtAsk):
                    return go(x.state, position + 1)
                return ret(x)

            return bind(current, advance)

        return go(ext.start, 0)

    return Tree(node)


def ext_to_stall(ext: ExtTree) -> StallTree:
    """An extended tree is a stalling tree that never stalls."""

    def node(i: Any, state: Any, answers: tuple) -> Partial:
        def conv(x: Any) -> Partial:
            if isinstance(x, ExtAsk):
                return ret(Step(x.state, x.question))
            return ret(x)

        return bind(ext.apply(i, state, answers), conv)

    return StallTree(node, start=ext.start)


def _is_stall(x: Any) -> bool:
    return isinstance(x, Step) and x.question is None


def stall_to_ext(stall: StallTree) -> ExtTree:
    """Eliminate stalls.

    The node searches for the number of pure state hops before the next
    question or output, then replays the chain to that point. An endless
    stall chain, or a diverging node on it, leaves the search without a
    witness, so the resulting node diverges as it must.
    """

    def node(i: Any, state: Any, answers: tuple) -> Partial:
        def exits_within(hops: int) -> Partial:
            def go(s: Any, left: int) -> Partial:
                def check(x: Any) -> Partial:
                    if _is_stall(x):
                        if left == 0:
                            return ret(False)
                        return go(x.state, left - 1)
                    return ret(True)

                return bind(stall.apply(i, s, answers), check)

            return go(state, hops)

        def land(hops: int) -> Partial:
            def go(s: Any, left: int) -> Partial:
                def check(x: Any) -> Partial:
                    if _is_stall(x):
                        if left == 0:
                            return undef()
                        return go(x.state, left - 1)
                    if isinstance(x, Step):
                        return ret(ExtAsk(x.state, x.question))
                    return ret(x)

                return bind(stall.apply(i, s, answers), check)

            return go(state, hops)

        return bind(mu(lambda k: exits_within(k)), land)

    return ExtTree(node, start=stall.start)


def stall_to_plain(stall: StallTree) -> Tree:
    return ext_to_plain(stall_to_ext(stall))
