"""Truth-table reductions and deficiency sets of enumerators.

A truth-table reduction fixes, per input, the full list of questions and a
table saying which answer combinations count as yes. The deficiency side
supports the classic construction reducing membership in an enumerated set
to the set of indices that still have a smaller value coming.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .partiality import Partial, ret
from .reducibility import TuringReduction
from .trees import Ask, Out, Tree


@dataclass(frozen=True)
class TruthTable:
    """Per-input question list and answer table with 2**len(questions) rows."""

    queries: Callable[[Any], Sequence[Any]]
    table: Callable[[Any], Sequence[bool]]


def tt_eval(answers: Sequence[bool], table: Sequence[bool]) -> bool:
    """Look up an answer combination in a table.

    The answer list is read as a big-endian binary index: first answer most
    significant, true is 1. A length mismatch is an error, never silently
    truncated.
    """
    if len(table) != 2 ** len(answers):
        raise ValueError(
            f"table with {len(table)} rows cannot index {len(answers)} answers"
        )
    index = 0
    for a in answers:
        index = (index << 1) | (1 if a else 0)
    return bool(table[index])


def forall2(rel: Callable[[Any, Any], bool], xs: Sequence, ys: Sequence) -> bool:
    """Pointwise lifting of a binary relation to equal-length lists."""
    return len(xs) == len(ys) and all(rel(x, y) for x, y in zip(xs, ys))


def tt_to_turing(tt: TruthTable) -> TuringReduction:
    """Ask the fixed questions in order, then read the verdict off the table."""

    def node(x: Any, answers: tuple) -> Partial:
        qs = tuple(tt.queries(x))
        if len(answers) < len(qs):
            return ret(Ask(qs[len(answers)]))
        return ret(Out(tt_eval(answers[: len(qs)], tuple(tt.table(x)))))

    return TuringReduction(Tree(node))


@dataclass(frozen=True)
class Enumerator:
    """A total listing of a set of naturals, possibly with repetitions."""

    fn: Callable[[int], int]


def deficiency(e: Enumerator, x: int, bound: int) -> bool:
    """Does some later index up to the bound enumerate a smaller value?

    True is a definite witness; False only certifies the searched window,
    so callers must pick a bound they can argue about.
    """
    ex = e.fn(x)
    return any(e.fn(x0) < ex for x0 in range(x + 1, bound + 1))


def window_membership(e: Enumerator, z: int, x: int) -> bool:
    """Is z among the first x+2 enumerated values?"""
    return any(e.fn(j) == z for j in range(x + 2))


def deficiency_reduction(e: Enumerator) -> TuringReduction:
    """Reduce membership in the enumerated set to the deficiency predicate.

    For input z the tree asks 0, 1, 2, ... of the deficiency oracle. Once
    some index has answered false while enumerating past z, the least such
    index bounds where z can still appear: every earlier index either
    answered true or stayed at or below z, so a finite window decides
    membership.
    """

    def node(z: Any, answers: tuple) -> Partial:
        for idx, a in enumerate(answers):
            if not a and e.fn(idx) > z:
                return ret(Out(window_membership(e, z, idx)))
        return ret(Ask(len(answers)))

    return TuringReduction(Tree(node))


@dataclass(frozen=True)
class DeficiencyFixture:
    """An enumerator whose deficiency set is known in closed form.

    member and deficient are the ground truths; witness_bound(x) is a search
    bound making the brute-force deficiency check agree with deficient(x).
    """

    name: str
    enum: Enumerator
    member: Callable[[int], bool]
    deficient: Callable[[int], bool]
    witness_bound: Callable[[int], int]


def fixture_double() -> DeficiencyFixture:
    """Strictly increasing listing of the even numbers; nothing is deficient."""
    return DeficiencyFixture(
        name="double",
        enum=Enumerator(lambda n: 2 * n),
        member=lambda z: z % 2 == 0,
        deficient=lambda x: False,
        witness_bound=lambda x: x + 1,
    )


def fixture_xor1() -> DeficiencyFixture:
    """Listing that swaps adjacent pairs; exactly the even indices are
    deficient, and every natural is enumerated."""
    return DeficiencyFixture(
        name="xor1",
        enum=Enumerator(lambda n: n ^ 1),
        member=lambda z: True,
        deficient=lambda x: x % 2 == 0,
        witness_bound=lambda x: x + 2,
    )


FIXTURES: dict[str, Callable[[], DeficiencyFixture]] = {
    "double": fixture_double,
    "xor1": fixture_xor1,
}
