"""Step-indexed partial values.

A partial value is a monotone step function from a fuel budget to an optional
result: once a value appears at some fuel, every larger fuel yields the same
value. Divergence is simply "no value at any fuel", so at every finite fuel it
is indistinguishable from "needs more fuel". The constructors below (ret,
bind, mu, undef) are the only supported way to build partial values, which
keeps the monotonicity invariant out of user hands.

Payload values must never be None; None is reserved for "no value yet".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class Unit:
    """The one-element type. Its only value is STAR."""

    def __repr__(self) -> str:
        return "star"


STAR = Unit()


class Partial:
    """A possibly-diverging value, probed by fuel.

    Results are cached per fuel. The step function must be pure, so a cache
    write is idempotent and sharing a Partial between threads needs no locks:
    a race recomputes the same value.
    """

    __slots__ = ("_step", "_memo")

    def __init__(self, step: Callable[[int], Any]):
        self._step = step
        self._memo: dict[int, Any] = {}

    def step(self, fuel: int) -> Any:
        memo = self._memo
        if fuel in memo:
            return memo[fuel]
        value = self._step(fuel)
        memo[fuel] = value
        return value


def ret(value: Any) -> Partial:
    """Always-defined partial value, present from fuel 0 on."""
    if value is None:
        raise ValueError("None is not a payload value")
    return Partial(lambda fuel: value)


def undef() -> Partial:
    """The diverging partial value."""
    return Partial(lambda fuel: None)


def bind(x: Partial, f: Callable[[Any], Partial]) -> Partial:
    """Sequence x before f, splitting the fuel between the two sides.

    Present at fuel n iff x is present at some n1 <= n and f(value) is
    present at n - n1. Monotonicity of x makes the first present n1 the
    least one, so the scan below is deterministic.
    """

    def step(fuel: int) -> Any:
        for used in range(fuel + 1):
            v = x.step(used)
            if v is not None:
                return f(v).step(fuel - used)
        return None

    return Partial(step)


def mu(f: Callable[[int], Partial]) -> Partial:
    """Least index whose partial boolean comes out true.

    At fuel n the scan inspects candidates 0..n-1, each evaluated with fuel
    n. A row that has not converged blocks the scan, since least-ness cannot
    be concluded past it; a diverging row at or below the least true index
    therefore makes the whole search diverge.
    """

    def step(fuel: int) -> Any:
        for k in range(fuel):
            v = f(k).step(fuel)
            if v is None:
                return None
            if v:
                return k
        return None

    return Partial(step)


def eval_steps(x: Partial, fuel: int) -> Any:
    """Probe x with the given fuel. None means no value yet."""
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    return x.step(fuel)
