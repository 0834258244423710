"""Seeded property suites, shared by the test suite and the selftest command.

Every suite draws its cases from its own deterministically derived RNG, so a
fixed seed reproduces the exact corpus. Reference results come from
independent brute-force evaluators, never from the engine under test.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .combinators import (
    StallTree,
    Step,
    compose_trees,
    const_tree,
    ident,
    ite,
    never_tree,
    of_partial_fn,
    of_total_fn,
    precompose,
    search,
    seq_bind,
    stall_to_plain,
)
from .dovetail import pt_reduce
from .evaluator import Budget, NeedQuestion, Output, delta, extract_modulus
from .partiality import Partial, bind, eval_steps, mu, ret, undef
from .reducibility import (
    OracleSemiDecider,
    complement_reduction,
    decide_via_reduction,
    manyone_to_turing,
    reduce_refl,
    sdec_from_plain,
    step_semidecider_to_partial,
    turing_to_sdec,
)
from .trees import (
    Ask,
    Out,
    TableOracle,
    Transcript,
    Tree,
    Verdict,
    check_transcript,
    enumerate_transcripts,
    output_set,
    subtree_at,
    threshold_tree,
)
from .truthtable import TruthTable, deficiency, deficiency_reduction, fixture_double, fixture_xor1, tt_eval, tt_to_turing

_UNDEF = undef()

QUESTIONS = (0, 1, 2, 3)
ANSWERS = (0, 1, 2, 3)
OUTPUTS = (0, 1, 2, 3)
DEPTH = 4

TRANSPORT_BUDGETS = {
    "refl": Budget(2, 20),
    "manyone": Budget(2, 20),
    "complement": Budget(2, 20),
    "tt": Budget(4, 20),
    "pt": Budget(3, 200),
}
PT_PARITY_BUDGET = Budget(2, 400)
PT_PASSTHROUGH_BUDGET = Budget(3, 200)


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


# ---------------------------------------------------------------- generators


def random_sigma(rng: random.Random, questions=QUESTIONS, answers=ANSWERS,
                 outputs=OUTPUTS, depth=DEPTH, p_undef=0.12, p_out=0.30):
    """A random finite path function, nodes prebuilt as partial values."""
    table: dict[tuple, Partial] = {}

    def fill(prefix: tuple) -> None:
        roll = rng.random()
        if roll < p_undef:
            table[prefix] = _UNDEF
            return
        if roll < p_undef + p_out or len(prefix) >= depth:
            table[prefix] = ret(Out(rng.choice(outputs)))
            return
        table[prefix] = ret(Ask(rng.choice(questions)))
        for a in answers:
            fill(prefix + (a,))

    fill(())
    return lambda ans: table.get(tuple(ans), _UNDEF)


def random_tree(rng: random.Random, inputs: Iterable, **kwargs) -> Tree:
    """An input-dependent random tree: one random path function per input."""
    sigmas = {i: random_sigma(rng, **kwargs) for i in inputs}
    return Tree(lambda i, ans: sigmas[i](ans))


def functional_oracles(questions=QUESTIONS, answers=ANSWERS):
    """Every total map question -> answer, in three usable shapes."""
    combos = []
    for assignment in itertools.product(answers, repeat=len(questions)):
        amap = dict(zip(questions, assignment))
        table = TableOracle({q: (a,) for q, a in amap.items()})

        def answer_fn(q: Any, amap=amap) -> Partial:
            return ret(amap[q]) if q in amap else _UNDEF

        combos.append((amap, table, answer_fn))
    return combos


def random_relational_oracle(rng: random.Random, questions, answers) -> TableOracle:
    entries = {}
    for q in questions:
        entries[q] = tuple(a for a in answers if rng.random() < 0.6)
    return TableOracle(entries)


def random_stall_tree(rng: random.Random, states=5, questions=(0, 1),
                      answers=(0, 1), outputs=(0, 1), depth=3) -> StallTree:
    """Random stalling tree whose stall hops strictly increase the state,
    bounding every stall chain by the state count."""
    table: dict[tuple, Partial] = {}
    for s in range(states):
        prefixes = [()]
        for d in range(depth):
            prefixes += [p + (a,) for p in list(prefixes) if len(p) == d for a in answers]
        for prefix in prefixes:
            roll = rng.random()
            if roll < 0.15:
                node = _UNDEF
            elif roll < 0.45 or (roll < 0.70 and s == states - 1):
                node = ret(Out(rng.choice(outputs)))
            elif roll < 0.70:
                node = ret(Step(rng.randrange(s + 1, states), None))
            else:
                node = ret(Step(rng.randrange(states), rng.choice(questions)))
            table[(s, prefix)] = node
    return StallTree(lambda i, s, ans: table.get((s, tuple(ans)), _UNDEF), start=0)


def stall_output_set(stall: StallTree, i: Any, oracle: TableOracle,
                     max_questions: int, max_stalls: int, step_fuel: int) -> set:
    """Reference executor: walk the stalling interrogation rules directly."""
    outputs: set = set()

    def walk(s: Any, asked: int, stalls: int, ans: tuple) -> None:
        node = eval_steps(stall.apply(i, s, ans), step_fuel)
        if node is None:
            return
        if isinstance(node, Out):
            outputs.add(node.output)
            return
        if node.question is None:
            if stalls < max_stalls:
                walk(node.state, asked, stalls + 1, ans)
            return
        if asked < max_questions:
            for a in oracle.answers_for(node.question):
                walk(node.state, asked + 1, 0, ans + (a,))

    walk(stall.start, 0, 0, ())
    return outputs


# ------------------------------------------------------- partial value suites


def _gen_fun(rng: random.Random, depth: int):
    """A random continuation together with its denotation."""
    roll = rng.random()
    if depth == 0 or roll < 0.5:
        if rng.random() < 0.2:
            return (lambda v: _UNDEF), (lambda v: None)
        c = rng.randrange(5)
        return (lambda v, c=c: ret(v + c)), (lambda v, c=c: v + c)
    g, dg = _gen_fun(rng, depth - 1)
    h, dh = _gen_fun(rng, depth - 1)

    def f(v: Any) -> Partial:
        return bind(g(v), h)

    def d(v: Any):
        m = dg(v)
        return None if m is None else dh(m)

    return f, d


def _gen_expr(rng: random.Random, depth: int):
    """A random partial value together with its denotation."""
    roll = rng.random()
    if depth == 0 or roll < 0.35:
        if rng.random() < 0.22:
            return _UNDEF, None
        v = rng.randrange(8)
        return ret(v), v
    if roll < 0.8:
        sub, d1 = _gen_expr(rng, depth - 1)
        f, df = _gen_fun(rng, depth - 1)
        return bind(sub, f), (None if d1 is None else df(d1))
    rows = [rng.choice("tfu") for _ in range(6)]
    den = None
    for idx, row in enumerate(rows):
        if row == "u":
            break
        if row == "t":
            den = idx
            break

    def row_partial(n: int) -> Partial:
        if n >= len(rows) or rows[n] == "f":
            return ret(False)
        if rows[n] == "t":
            return ret(True)
        return _UNDEF

    return mu(row_partial), den


def run_partial_laws(seed: int, cases: int = 200) -> list[SuiteResult]:
    """Monotonicity and determinacy over random expression trees."""
    result = SuiteResult("partial-laws", max(cases, 0))
    rng = _rng(seed, "partial-laws")
    for case in range(max(cases, 0)):
        expr, den = _gen_expr(rng, 5)
        seen = None
        for fuel in range(51):
            v = eval_steps(expr, fuel)
            if seen is not None and v != seen:
                result.fail(f"case {case}: value changed from {seen} to {v} at fuel {fuel}")
                break
            if v is not None:
                seen = v
        else:
            if seen != den:
                result.fail(f"case {case}: settled on {seen}, denotation says {den}")
    return [result]


def run_partial_monad(seed: int, cases: int = 200) -> list[SuiteResult]:
    """Unit and associativity laws, compared fuel by fuel."""
    result = SuiteResult("partial-monad", max(cases, 0))
    rng = _rng(seed, "partial-monad")
    for case in range(max(cases, 0)):
        a, _ = _gen_expr(rng, 3)
        f, _ = _gen_fun(rng, 2)
        g, _ = _gen_fun(rng, 2)
        v = rng.randrange(8)
        lhs, rhs = bind(ret(v), f), f(v)
        pairs = [(lhs, rhs, "left unit")]
        pairs.append((bind(a, ret), a, "right unit"))
        pairs.append((bind(bind(a, f), g), bind(a, lambda x: bind(f(x), g)), "assoc"))
        for left, right, law in pairs:
            for fuel in range(41):
                lv, rv = eval_steps(left, fuel), eval_steps(right, fuel)
                if lv != rv:
                    result.fail(f"case {case}: {law} differs at fuel {fuel}: {lv} vs {rv}")
                    break
    return [result]


def run_mu_least_index(seed: int, cases: int = 1) -> list[SuiteResult]:
    """mu against a brute-force least-index scan, all 512 tables over 0..8."""
    result = SuiteResult("mu-least-index", 512 if cases > 0 else 0)
    if cases <= 0:
        return [result]
    for bits in itertools.product((False, True), repeat=9):
        def row(n: int, bits=bits) -> Partial:
            return ret(bits[n]) if n < 9 else ret(False)

        expected = next((i for i, b in enumerate(bits) if b), None)
        got = eval_steps(mu(row), 12)
        if got != expected:
            result.fail(f"table {bits}: mu gave {got}, scan gives {expected}")
        if expected is None and any(eval_steps(mu(row), fuel) is not None for fuel in range(0, 40, 7)):
            result.fail(f"table {bits}: diverging search produced a value")
    return [result]


# ----------------------------------------------------- interrogation corpus


def run_interrogation(seed: int, trees: int = 500) -> list[SuiteResult]:
    """One corpus pass checking runner-vs-enumeration agreement, prefix
    determinacy, and the transcript concatenation law."""
    equiv = SuiteResult("delta-vs-enumeration", max(trees, 0))
    prefix = SuiteResult("prefix-determinacy", max(trees, 0))
    concat = SuiteResult("transcript-concatenation", max(trees, 0))
    if trees <= 0:
        return [equiv, prefix, concat]
    rng = _rng(seed, "interrogation")
    oracles = functional_oracles()
    step_fuel = 2
    for case in range(trees):
        sigma = random_sigma(rng)
        seen_chains: set[tuple] = set()
        for amap, table, answer_fn in oracles:
            records = enumerate_transcripts(sigma, table, DEPTH, step_fuel)
            enum_outputs = output_set(records)
            delta_outputs = set()
            for qfuel in range(DEPTH + 1):
                outcome = delta(sigma, answer_fn, Budget(qfuel, step_fuel))
                if isinstance(outcome, Output):
                    delta_outputs.add(outcome.value)
            if delta_outputs != enum_outputs:
                equiv.fail(
                    f"tree {case} oracle {amap}: runner {sorted(delta_outputs)} "
                    f"vs enumeration {sorted(enum_outputs)}"
                )
            chain = tuple(r.transcript.ans for r in records)
            if chain in seen_chains:
                continue
            seen_chains.add(chain)
            ordered = sorted(records, key=lambda r: len(r.transcript))
            for shorter, longer in zip(ordered, ordered[1:]):
                a, b = shorter.transcript, longer.transcript
                if b.qs[: len(a)] != a.qs or b.ans[: len(a)] != a.ans:
                    prefix.fail(f"tree {case} oracle {amap}: {a} not a prefix of {b}")
            with_output = [r for r in records if r.output is not None]
            if len(with_output) > 1:
                prefix.fail(f"tree {case} oracle {amap}: two full runs {with_output}")
            for record in records:
                t = record.transcript
                for cut in range(len(t) + 1):
                    front = Transcript(t.qs[:cut], t.ans[:cut])
                    back = Transcript(t.qs[cut:], t.ans[cut:])
                    ok_front = check_transcript(sigma, table, front, step_fuel)
                    ok_back = check_transcript(
                        subtree_at(sigma, front.ans), table, back, step_fuel
                    )
                    if ok_front is not Verdict.VALID or ok_back is not Verdict.VALID:
                        concat.fail(
                            f"tree {case} oracle {amap} split {cut} of {t}: "
                            f"{ok_front.value}/{ok_back.value}"
                        )
                    whole = check_transcript(sigma, table, t, step_fuel)
                    if whole is not Verdict.VALID:
                        concat.fail(f"tree {case} oracle {amap}: {t} not valid whole")
    return [equiv, prefix, concat]


# ------------------------------------------------------- combinator corpus


def _enum_outputs(tree: Tree, i: Any, oracle: TableOracle, max_len: int, step_fuel: int) -> set:
    return output_set(enumerate_transcripts(tree.at(i), oracle, max_len, step_fuel))


def run_combinator_reference(seed: int, per_combinator: int = 200) -> list[SuiteResult]:
    """Each combinator against a direct relational reference evaluator."""
    result = SuiteResult("combinator-reference", max(per_combinator, 0))
    if per_combinator <= 0:
        return [result]
    rng = _rng(seed, "combinator-reference")
    bool_answers = (False, True)
    small = dict(questions=(0, 1), answers=bool_answers, outputs=(0, 1), depth=2)
    small_oracles = functional_oracles((0, 1), bool_answers)

    for case in range(per_combinator):
        # precompose over the threshold tree: shifting the input shifts the bound
        shift, i = rng.randrange(4), rng.randrange(4)
        bound = i + shift
        oracle = random_relational_oracle(rng, range(bound + 1), bool_answers)
        shifted = precompose(lambda x, s=shift: x + s, threshold_tree())
        got = _enum_outputs(shifted, i, oracle, bound + 1, 2)
        want = {True} if all(True in oracle.answers_for(j) for j in range(bound)) else set()
        if got != want:
            result.fail(f"case {case} precompose: {got} vs {want}")

        # lifted partial functions never ask and mirror the function exactly
        kind = rng.random()
        if kind < 0.4:
            value = rng.randrange(5)
            lifted, want_out = of_total_fn(lambda x, v=value: (x, v)), {(i, value)}
        elif kind < 0.6:
            value = rng.randrange(5)
            lifted, want_out = const_tree(value), {value}
        elif kind < 0.8:
            lifted, want_out = never_tree(), set()
        else:
            fuel_needed = rng.randrange(4)
            lifted = of_partial_fn(
                lambda x, k=fuel_needed: bind(mu(lambda n, k=k: ret(n >= k)), lambda _: ret(x))
            )
            want_out = {i}
        outcome = delta(lifted.at(i), lambda q: _UNDEF, Budget(0, 30))
        got = {outcome.value} if isinstance(outcome, Output) else set()
        if isinstance(outcome, NeedQuestion):
            result.fail(f"case {case} lift: asked {outcome.question}")
        elif got != want_out:
            result.fail(f"case {case} lift: {got} vs {want_out}")

        # ident relays the oracle's relation at the input
        oracle = random_relational_oracle(rng, (i,), (0, 1, 2))
        got = _enum_outputs(ident(), i, oracle, 1, 2)
        if got != set(oracle.answers_for(i)):
            result.fail(f"case {case} ident: {got} vs {set(oracle.answers_for(i))}")

        # ite picks the branch the test picks
        mask = tuple(rng.random() < 0.5 for _ in range(4))
        t_true = random_tree(rng, range(4), **small)
        t_false = random_tree(rng, range(4), **small)
        branchy = ite(lambda x, m=mask: m[x], t_true, t_false)
        amap, table, _fn = small_oracles[rng.randrange(len(small_oracles))]
        picked = t_true if mask[i % 4] else t_false
        got = _enum_outputs(branchy, i % 4, table, DEPTH, 2)
        want = _enum_outputs(picked, i % 4, table, DEPTH, 2)
        if got != want:
            result.fail(f"case {case} ite: {got} vs {want}")

        # seq_bind: relational composition through the first tree's output
        first = random_tree(rng, (0, 1), **small)
        second = random_tree(rng, [(x, o) for x in (0, 1) for o in (0, 1)], **small)
        composite = seq_bind(first, second)
        x = rng.randrange(2)
        tables = [t for _a, t, _f in small_oracles]
        tables.append(random_relational_oracle(rng, (0, 1), bool_answers))
        for table in tables:
            want = set()
            for o1 in _enum_outputs(first, x, table, DEPTH, 2):
                want |= _enum_outputs(second, (x, o1), table, DEPTH, 2)
            got = _enum_outputs(composite, x, table, 2 * DEPTH, 300)
            if got != want:
                result.fail(f"case {case} seq_bind: {got} vs {want}")
                break

        # compose_trees: outer questions answered by full inner runs
        inner = random_tree(rng, (0, 1), **small)
        outer = random_tree(
            rng, (0, 1), questions=(0, 1), answers=bool_answers, outputs=(0, 1), depth=2
        )
        composite = compose_trees(inner, outer)
        x = rng.randrange(2)
        for table in tables:
            derived = TableOracle(
                {q: tuple(_enum_outputs(inner, q, table, DEPTH, 2)) for q in (0, 1)}
            )
            want = _enum_outputs(outer, x, derived, DEPTH, 2)
            got = _enum_outputs(composite, x, table, 3 * DEPTH, 400)
            if got != want:
                result.fail(f"case {case} compose: {got} vs {want}")
                break

        # search: least index the oracle can affirm, all earlier deniable
        x = rng.randrange(3)
        questions = tuple((x, n) for n in range(6))
        oracle = random_relational_oracle(rng, questions, bool_answers)
        want = set()
        for n in range(6):
            if True in oracle.answers_for((x, n)) and all(
                False in oracle.answers_for((x, m)) for m in range(n)
            ):
                want.add(n)
        got = _enum_outputs(search(), x, oracle, 6, 2)
        if got != want:
            result.fail(f"case {case} search: {got} vs {want}")
    return [result]


# ------------------------------------------------------------- elaboration


def run_elaboration(seed: int, trees: int = 200) -> list[SuiteResult]:
    """Collapsing a stalling tree preserves its outputs exactly."""
    result = SuiteResult("stall-elaboration", max(trees, 0))
    if trees <= 0:
        return [result]
    rng = _rng(seed, "stall-elaboration")
    oracles = functional_oracles((0, 1), (0, 1))
    for case in range(trees):
        stall = random_stall_tree(rng)
        plain = stall_to_plain(stall)
        tables = [t for _a, t, _f in oracles]
        if rng.random() < 0.3:
            tables.append(random_relational_oracle(rng, (0, 1), (0, 1)))
        for table in tables:
            want = stall_output_set(stall, 0, table, max_questions=3, max_stalls=5, step_fuel=2)
            got = _enum_outputs(plain, 0, table, 3, 300)
            if got != want:
                result.fail(f"tree {case} oracle {table!r}: plain {got} vs stalling {want}")
                break
    return [result]


# ---------------------------------------------------------------- dovetail


def _parity_sdec_pair():
    acc = step_semidecider_to_partial(lambda x, n: x % 2 == 0 and n >= x)
    rej = step_semidecider_to_partial(lambda x, n: x % 2 == 1 and n >= x)
    return sdec_from_plain(acc), sdec_from_plain(rej)


def _pad_tree(tree: Tree, fuel_cost: int) -> Tree:
    """Uniformly slow a tree down without changing what it converges to."""
    return Tree(
        lambda i, ans: bind(
            mu(lambda n, k=fuel_cost: ret(n >= k)), lambda _n: tree.apply(i, ans)
        )
    )


def _padded(s: OracleSemiDecider, fuel_cost: int) -> OracleSemiDecider:
    return OracleSemiDecider(_pad_tree(s.tree, fuel_cost))


def run_dovetail(seed: int, cases: int = 1) -> list[SuiteResult]:
    """Dovetailed semi-decider pairs decide, fairly, what they should."""
    result = SuiteResult("dovetail-end-to-end", 0)
    if cases <= 0:
        return [result]

    checks = 0
    member, complement = _parity_sdec_pair()
    parity = pt_reduce(member, complement)
    for x, verdict in decide_via_reduction(
        parity, lambda y: True, range(51), PT_PARITY_BUDGET
    ):
        checks += 1
        if verdict != (x % 2 == 0):
            result.fail(f"parity at {x}: {verdict}")

    mem, comp = turing_to_sdec(reduce_refl())
    passthrough = pt_reduce(mem, comp)
    refl = reduce_refl()
    for x in range(11):
        for bit in (False, True):
            checks += 1
            answer = lambda q, b=bit: ret(b)
            got = delta(passthrough.tree.at(x), answer, PT_PASSTHROUGH_BUDGET)
            want = delta(refl.tree.at(x), answer, PT_PASSTHROUGH_BUDGET)
            if not isinstance(got, Output) or not isinstance(want, Output) or got.value != want.value:
                result.fail(f"passthrough at {x} oracle {bit}: {got} vs {want}")

    rng = _rng(seed, "dovetail")
    for _ in range(20):
        pad_member, pad_complement = rng.randrange(6), rng.randrange(6)
        padded = pt_reduce(_padded(mem, pad_member), _padded(comp, pad_complement))
        x, bit = rng.randrange(8), rng.random() < 0.5
        checks += 1
        got = delta(padded.tree.at(x), lambda q, b=bit: ret(b), Budget(3, 600))
        if not isinstance(got, Output) or got.value != bit:
            result.fail(f"padding {pad_member}/{pad_complement} at {x} oracle {bit}: {got}")

    result.cases = checks
    return [result]


# -------------------------------------------------------------- truth tables


def tt_eval_little_endian(answers, table) -> bool:
    """Deliberately wrong indexing, kept as a negative control."""
    return tt_eval(list(reversed(list(answers))), table)


def run_truthtable(seed: int, tables: int = 1000, evaluator: Callable = tt_eval) -> list[SuiteResult]:
    """Truth-table reductions agree with direct table evaluation."""
    result = SuiteResult("truthtable-agreement", max(tables, 0))
    if tables <= 0:
        return [result]
    rng = _rng(seed, "truthtable")
    mask = tuple(rng.random() < 0.5 for _ in range(26))
    predicates = [
        lambda y: y % 2 == 0,
        lambda y: y % 2 == 1,
        lambda y: y < 13,
        lambda y: mask[y],
    ]
    inputs = range(21)
    for case in range(tables):
        k = rng.randrange(4)
        rows_by_x = {}
        for x in inputs:
            qs = tuple(rng.sample(range(26), k))
            rows = tuple(rng.random() < 0.5 for _ in range(2 ** k))
            rows_by_x[x] = (qs, rows)
        tt = TruthTable(lambda x: rows_by_x[x][0], lambda x: rows_by_x[x][1])
        pred = predicates[case % len(predicates)]
        reduction = tt_to_turing(tt)
        for x, verdict in decide_via_reduction(reduction, pred, inputs, TRANSPORT_BUDGETS["tt"]):
            qs, rows = rows_by_x[x]
            want = evaluator([pred(y) for y in qs], rows)
            if verdict != want:
                result.fail(f"table {case} input {x}: {verdict} vs {want}")
    return [result]


# ---------------------------------------------------------------- deficiency


def run_deficiency(seed: int, cases: int = 1) -> list[SuiteResult]:
    """The deficiency reduction decides membership for both fixtures."""
    result = SuiteResult("deficiency-reduction", 0)
    if cases <= 0:
        return [result]
    checks = 0
    for fixture in (fixture_double(), fixture_xor1()):
        for x in range(61):
            checks += 1
            brute = deficiency(fixture.enum, x, fixture.witness_bound(x))
            if brute != fixture.deficient(x):
                result.fail(f"{fixture.name}: closed form wrong at {x}")
        reduction = deficiency_reduction(fixture.enum)
        brute_oracle = lambda q, f=fixture: deficiency(f.enum, q, f.witness_bound(q))
        for x, verdict in decide_via_reduction(
            reduction, brute_oracle, range(51), Budget(200, 20)
        ):
            checks += 1
            if verdict != fixture.member(x):
                result.fail(f"{fixture.name} at {x}: {verdict} vs {fixture.member(x)}")
    result.cases = checks
    return [result]


# ------------------------------------------------------------------- modulus


def run_modulus(seed: int, runs: int = 100) -> list[SuiteResult]:
    """Answers outside the extracted modulus never matter."""
    result = SuiteResult("modulus-stability", max(runs, 0))
    if runs <= 0:
        return [result]
    rng = _rng(seed, "modulus")
    for case in range(runs):
        bound = rng.randrange(9)
        answers = {q: True for q in range(bound)}
        for q in range(bound, 21):
            answers[q] = rng.random() < 0.5
        answer_fn = lambda q, a=answers: ret(a.get(q, False))
        sigma = threshold_tree().at(bound)
        budget = Budget(bound + 2, 5)
        modulus = extract_modulus(sigma, answer_fn, budget)
        if modulus != tuple(range(bound)):
            result.fail(f"case {case}: modulus {modulus} for bound {bound}")
            continue
        base = delta(sigma, answer_fn, budget)
        for q in range(bound, 21):
            flipped = dict(answers)
            flipped[q] = not flipped[q]
            rerun = delta(sigma, lambda p, a=flipped: ret(a.get(p, False)), budget)
            if not isinstance(rerun, Output) or rerun.value != base.value:
                result.fail(f"case {case}: flip at {q} changed {base} to {rerun}")
                break
    return [result]


# ----------------------------------------------------------------- transport


def run_transport(seed: int, cases: int = 1) -> list[SuiteResult]:
    """Every reduction kind yields timeout-free, correct verdicts on 0..100."""
    result = SuiteResult("decidability-transport", 0)
    if cases <= 0:
        return [result]
    evens = lambda y: y % 2 == 0
    mem, comp = turing_to_sdec(reduce_refl())
    tt = TruthTable(lambda x: (x, x + 1), lambda x: (False, True, True, False))
    setups = [
        ("refl", reduce_refl(), evens, lambda x: evens(x)),
        ("manyone", manyone_to_turing(lambda x: x + 1), evens, lambda x: evens(x + 1)),
        ("complement", complement_reduction(), evens, lambda x: not evens(x)),
        ("tt", tt_to_turing(tt), evens, lambda x: evens(x) != evens(x + 1)),
        ("pt", pt_reduce(mem, comp), evens, lambda x: evens(x)),
    ]
    checks = 0
    for name, reduction, oracle_pred, expected in setups:
        budget = TRANSPORT_BUDGETS[name]
        for x, verdict in decide_via_reduction(reduction, oracle_pred, range(101), budget):
            checks += 1
            if verdict is None:
                result.fail(f"{name} at {x}: timeout under {budget}")
            elif verdict != expected(x):
                result.fail(f"{name} at {x}: {verdict} vs {expected(x)}")
    result.cases = checks
    return [result]


# -------------------------------------------------------------------- runner


def run_all(seed: int = 0, cases: int = 200, evaluator: Callable = tt_eval) -> list[SuiteResult]:
    results: list[SuiteResult] = []
    results += run_partial_laws(seed, cases)
    results += run_partial_monad(seed, cases)
    results += run_mu_least_index(seed, 1 if cases else 0)
    results += run_interrogation(seed, cases)
    results += run_combinator_reference(seed, cases)
    results += run_elaboration(seed, cases)
    results += run_dovetail(seed, 1 if cases else 0)
    results += run_truthtable(seed, cases, evaluator)
    results += run_deficiency(seed, 1 if cases else 0)
    results += run_modulus(seed, min(cases, 100))
    results += run_transport(seed, 1 if cases else 0)
    return results
