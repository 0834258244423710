"""Dovetailed composition of two oracle semi-deciders into one reduction.

Given a semi-decider for a predicate and one for its complement over the
same oracle, running both fairly in parallel decides the predicate: the
half that converges tells the verdict. The interleaving is a stalling tree
whose state remembers which tree owns each asked question, a question owed
to the second tree, and a step index that grows round by round so both
halves eventually get all the fuel they need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .combinators import StallTree, Step, stall_to_plain
from .partiality import Partial, eval_steps, ret
from .reducibility import OracleSemiDecider, TuringReduction
from .trees import Ask, Out, Tree


@dataclass(frozen=True)
class DovetailState:
    pending: Any = None
    step_index: int = 0
    tags: tuple = ()


def getas(which: bool, tags: tuple, answers: tuple) -> tuple:
    """Answers whose recorded owner matches which; True owns the first tree."""
    return tuple(a for (owner, _q), a in zip(tags, answers) if owner == which)


def pt_tree(accept_tree: Tree, reject_tree: Tree) -> StallTree:
    """One fair round-robin over the two trees.

    Each round evaluates both trees, on the answers tagged as theirs, with
    fuel equal to the current step index. An output on the first tree wins
    true, on the second false, ties go to the first. When both ask in the
    same round, the first tree's question goes out now and the second's is
    parked and flushed, tagged for its owner, on the very next node. A round
    where neither tree is ready stalls with a bigger step index.
    """

    def node(x: Any, state: DovetailState, answers: tuple) -> Partial:
        if state.pending is not None:
            q = state.pending
            parked = DovetailState(None, state.step_index, state.tags + ((False, q),))
            return ret(Step(parked, q))
        n = state.step_index
        first = eval_steps(accept_tree.apply(x, getas(True, state.tags, answers)), n)
        second = eval_steps(reject_tree.apply(x, getas(False, state.tags, answers)), n)
        if isinstance(first, Out):
            return ret(Out(True))
        if isinstance(second, Out):
            return ret(Out(False))
        if isinstance(first, Ask) and isinstance(second, Ask):
            nxt = DovetailState(second.question, n + 1, state.tags + ((True, first.question),))
            return ret(Step(nxt, first.question))
        if isinstance(first, Ask):
            nxt = DovetailState(None, n + 1, state.tags + ((True, first.question),))
            return ret(Step(nxt, first.question))
        if isinstance(second, Ask):
            nxt = DovetailState(None, n + 1, state.tags + ((False, second.question),))
            return ret(Step(nxt, second.question))
        return ret(Step(DovetailState(None, n + 1, state.tags), None))

    return StallTree(node, start=DovetailState())


def pt_reduce(member: OracleSemiDecider, complement: OracleSemiDecider) -> TuringReduction:
    """Collapse the dovetail into a plain boolean-output reduction."""
    return TuringReduction(stall_to_plain(pt_tree(member.tree, complement.tree)))
