"""Computation trees, oracles, transcripts, and interrogation checking.

A computation tree maps an input and the answers received so far to a
partial node: either a question for the oracle or a final output. Running a
tree against an oracle produces transcripts, pairing each asked question
with the oracle's answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Mapping, Sequence

from .partiality import Partial, Unit, eval_steps, ret, undef


@dataclass(frozen=True)
class Ask:
    """Tree node: put this question to the oracle."""

    question: Any


@dataclass(frozen=True)
class Out:
    """Tree node: finish with this output."""

    output: Any


Node = Any  # Ask | Out
PathFn = Callable[[Sequence[Any]], Partial]


class Tree:
    """An oracle algorithm: (input, answer history) to the next node.

    The node function must be pure. Results are memoised per (input,
    answers) when both are hashable; since the function is pure the cache is
    idempotent and thread-safe without locks.
    """

    def __init__(self, node: Callable[[Any, tuple], Partial]):
        self._node = node
        self._memo: dict[Any, Partial] = {}

    def apply(self, i: Any, answers: Sequence[Any]) -> Partial:
        answers = tuple(answers)
        try:
            key = (i, answers)
            hit = self._memo.get(key)
        except TypeError:
            return self._node(i, answers)
        if hit is None:
            hit = self._node(i, answers)
            self._memo[key] = hit
        return hit

    def at(self, i: Any) -> PathFn:
        """Fix the input, giving a path function ready for interrogation."""
        return lambda answers: self.apply(i, answers)


def subtree_at(sigma: PathFn, prefix: Sequence[Any]) -> PathFn:
    """The tree reached after the answers in prefix have arrived."""
    prefix = tuple(prefix)
    return lambda answers: sigma(prefix + tuple(answers))


def threshold_tree(threshold: int | None = None) -> Tree:
    """Ask questions 0, 1, 2, ... and output true once enough answers are in.

    The bound is the input unless fixed here. Any false answer diverges, so
    the tree converges exactly when the oracle affirms every index below the
    bound.
    """

    def node(i: Any, answers: tuple) -> Partial:
        bound = i if threshold is None else threshold
        if False in answers:
            return undef()
        if len(answers) < bound:
            return ret(Ask(len(answers)))
        return ret(Out(True))

    return Tree(node)


@dataclass(frozen=True)
class Transcript:
    """Questions paired one-to-one with the answers they received."""

    qs: tuple = ()
    ans: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "qs", tuple(self.qs))
        object.__setattr__(self, "ans", tuple(self.ans))
        if len(self.qs) != len(self.ans):
            raise ValueError("every question needs exactly one answer")

    def __len__(self) -> int:
        return len(self.qs)


@dataclass(frozen=True)
class FnOracle:
    """Functional oracle: a partial function from questions to answers."""

    fn: Callable[[Any], Partial]


class TableOracle:
    """Finite, possibly relational oracle given by explicit entries."""

    def __init__(self, entries: Mapping[Any, Sequence[Any]] | Sequence[tuple]):
        if isinstance(entries, Mapping):
            entries = entries.items()
        self.entries: tuple = tuple((q, tuple(answers)) for q, answers in entries)
        self._by_question: dict[Any, tuple] = {}
        for q, answers in self.entries:
            seen = self._by_question.get(q, ())
            self._by_question[q] = seen + tuple(a for a in answers if a not in seen)

    def answers_for(self, q: Any) -> tuple:
        return self._by_question.get(q, ())

    def is_functional(self) -> bool:
        return all(len(a) <= 1 for a in self._by_question.values())

    def __repr__(self) -> str:
        return f"TableOracle({dict(self.entries)!r})"


Oracle = Any  # FnOracle | TableOracle


def to_answer_fn(oracle: Oracle) -> Callable[[Any], Partial]:
    """View an oracle as a partial answer function.

    A table must be functional for this; a question with no row diverges.
    """
    if isinstance(oracle, FnOracle):
        return oracle.fn
    if not oracle.is_functional():
        raise ValueError("a relational table has no single answer function")

    def fn(q: Any) -> Partial:
        answers = oracle.answers_for(q)
        return ret(answers[0]) if answers else undef()

    return fn


def oracle_relates(oracle: Oracle, q: Any, a: Any, step_fuel: int):
    """Does the oracle relate question q to answer a? None when undecided."""
    if isinstance(oracle, TableOracle):
        return a in oracle.answers_for(q)
    v = eval_steps(oracle.fn(q), step_fuel)
    if v is None:
        return None
    return v == a


class Verdict(Enum):
    VALID = "valid"
    INVALID = "invalid"
    UNKNOWN = "unknown"


def check_transcript(sigma: PathFn, oracle: Oracle, t: Transcript, step_fuel: int) -> Verdict:
    """Replay a transcript step by step against tree and oracle.

    Invalid needs a provable mismatch; a node or oracle call that merely ran
    out of fuel can only downgrade the verdict to Unknown, never to Invalid.
    """
    undecided = False
    for k in range(len(t)):
        node = eval_steps(sigma(t.ans[:k]), step_fuel)
        if node is None:
            undecided = True
        elif not isinstance(node, Ask) or node.question != t.qs[k]:
            return Verdict.INVALID
        related = oracle_relates(oracle, t.qs[k], t.ans[k], step_fuel)
        if related is None:
            undecided = True
        elif not related:
            return Verdict.INVALID
    return Verdict.UNKNOWN if undecided else Verdict.VALID


@dataclass(frozen=True)
class TranscriptRecord:
    """One valid transcript plus what its final node did.

    output is None unless the node produced one; unresolved marks a node
    that failed to converge within the step fuel, so the enumeration is
    exhaustive only relative to that fuel.
    """

    transcript: Transcript
    output: Any = None
    unresolved: bool = False


def enumerate_transcripts(
    sigma: PathFn, oracle: TableOracle, max_len: int, step_fuel: int
) -> list[TranscriptRecord]:
    """All valid transcripts of sigma against a finite oracle, shortest first."""
    if not isinstance(oracle, TableOracle):
        raise TypeError("enumeration needs a finite table oracle")
    records: list[TranscriptRecord] = []

    def walk(qs: tuple, ans: tuple) -> None:
        node = eval_steps(sigma(ans), step_fuel)
        if node is None:
            records.append(TranscriptRecord(Transcript(qs, ans), None, True))
            return
        if isinstance(node, Out):
            records.append(TranscriptRecord(Transcript(qs, ans), node.output, False))
            return
        records.append(TranscriptRecord(Transcript(qs, ans), None, False))
        if len(ans) < max_len:
            for a in oracle.answers_for(node.question):
                walk(qs + (node.question,), ans + (a,))

    walk((), ())
    return records


def output_set(records: list[TranscriptRecord]) -> set:
    return {r.output for r in records if r.output is not None}


def json_value(v: Any) -> Any:
    """Make a payload JSON-ready. Unit becomes the string "star"."""
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Unit):
        return "star"
    if hasattr(v, "to_json_value"):
        return v.to_json_value()
    if isinstance(v, (tuple, list)):
        return [json_value(x) for x in v]
    return repr(v)


def transcript_json(t: Transcript, out: Any = None, verdict: Verdict | None = None) -> dict:
    """Wire format for one checked transcript."""
    return {
        "qs": [json_value(q) for q in t.qs],
        "ans": [json_value(a) for a in t.ans],
        "out": json_value(out),
        "verdict": (verdict or Verdict.UNKNOWN).value,
    }
