"""Combinator layer: plain trees, the stateful forms, stall elimination."""

from oracletree.combinators import (
    ExtAsk,
    ExtTree,
    StallTree,
    Step,
    compose_trees,
    const_tree,
    ext_to_plain,
    ext_to_stall,
    ident,
    ite,
    never_tree,
    of_partial_fn,
    of_total_fn,
    plain_to_ext,
    precompose,
    search,
    seq_bind,
    stall_to_ext,
    stall_to_plain,
)
from oracletree.evaluator import Budget, NeedQuestion, Output, Timeout, delta
from oracletree.partiality import eval_steps, ret, undef
from oracletree.trees import Ask, Out, TableOracle, Transcript, enumerate_transcripts, output_set, threshold_tree

times_ten = lambda q: ret(q * 10)


def run(tree, i, answer, qfuel=8, sfuel=200):
    return delta(tree.at(i), answer, Budget(qfuel, sfuel))


def test_ident_relays_one_question():
    out = run(ident(), 4, times_ten)
    assert out == Output(40, Transcript((4,), (40,)))


def test_const_and_never():
    assert run(const_tree("k"), 123, times_ten).value == "k"
    assert isinstance(run(never_tree(), 0, times_ten), Timeout)


def test_of_total_fn_asks_nothing():
    out = run(of_total_fn(lambda x: x * x), 6, times_ten)
    assert out == Output(36, Transcript((), ()))


def test_of_partial_fn_charges_fuel():
    tree = of_partial_fn(lambda x: undef() if x == 0 else ret(x))
    assert isinstance(run(tree, 0, times_ten), Timeout)
    assert run(tree, 3, times_ten).value == 3


def test_precompose_maps_the_input():
    out = run(precompose(lambda x: x + 1, of_total_fn(lambda x: x * x)), 3, times_ten)
    assert out.value == 16


def test_ite_picks_branch_by_input():
    tree = ite(lambda x: x % 2 == 0, const_tree("even"), const_tree("odd"))
    assert run(tree, 4, times_ten).value == "even"
    assert run(tree, 5, times_ten).value == "odd"


def test_seq_bind_feeds_pair_to_second():
    # second receives (original input, first output)
    tree = seq_bind(ident(), of_total_fn(lambda pair: pair[0] + pair[1]))
    out = run(tree, 4, times_ten)
    assert out == Output(44, Transcript((4,), (40,)))


def test_seq_bind_second_may_ask_too():
    def answer(q):
        return ret(q * 10 if isinstance(q, int) else sum(q))

    out = run(seq_bind(ident(), ident()), 4, answer)
    assert out == Output(44, Transcript((4, (4, 40)), (40, 44)))


def test_seq_bind_stuck_first_stays_stuck():
    assert isinstance(run(seq_bind(never_tree(), ident()), 1, times_ten), Timeout)


def test_compose_inner_answers_outer():
    out = run(compose_trees(ident(), ident()), 7, lambda q: ret(q + 100))
    assert out == Output(107, Transcript((7,), (107,)))


def test_compose_multi_question_outer():
    # outer needs two oracle answers; each comes from a full inner run
    out = run(compose_trees(ident(), threshold_tree()), 2, lambda q: ret(True))
    assert out.value is True
    assert out.transcript.qs == (0, 1)
    assert out.transcript.ans == (True, True)


def test_search_finds_least_hit():
    evens = lambda q: ret(q[-1] % 2 == 0)
    out = run(search(), 9, evens)
    assert out == Output(0, Transcript(((9, 0),), (True,)))
    odds_only = lambda q: ret(q[-1] == 3)
    out = run(search(), 9, odds_only)
    assert out.value == 3
    assert [q[-1] for q in out.transcript.qs] == [0, 1, 2, 3]


def test_plain_ext_roundtrip_agrees():
    table = TableOracle([(q, (False, True)) for q in range(5)])
    plain = threshold_tree()
    back = ext_to_plain(plain_to_ext(plain))
    for i in range(4):
        a = enumerate_transcripts(plain.at(i), table, 5, 60)
        b = enumerate_transcripts(back.at(i), table, 5, 600)
        assert output_set(a) == output_set(b)


def test_stall_tree_runs_after_elimination():
    # stall twice, then relay question 0
    def node(i, state, answers):
        if state < 2:
            return ret(Step(state + 1))
        if len(answers) == 0:
            return ret(Step(state, 0))
        return ret(Out(answers[0]))

    plain = stall_to_plain(StallTree(node, start=0))
    out = run(plain, None, lambda q: ret(q + 41), qfuel=2)
    assert out == Output(41, Transcript((0,), (41,)))


def test_stall_only_tree_diverges():
    forever = StallTree(lambda i, s, a: ret(Step(s + 1)), start=0)
    assert isinstance(run(stall_to_plain(forever), 0, times_ten, sfuel=120), Timeout)


def test_ext_tree_direct_shape():
    # one stateful hop: remember the doubled input, then report it
    def node(i, state, answers):
        if state is None:
            return ret(ExtAsk(i * 2, i))
        return ret(Out((state, answers[-1])))

    ext = ExtTree(node, start=None)
    out = run(ext_to_plain(ext), 3, times_ten)
    assert out.value == (6, 30)
    assert out.transcript.qs == (3,)


def test_stall_to_ext_then_back():
    def node(i, state, answers):
        if state == 0:
            return ret(Step(1))
        if not answers:
            return ret(Step(1, i))
        return ret(Out(answers[0]))

    stall = StallTree(node, start=0)
    via_ext = ext_to_plain(stall_to_ext(stall))
    direct = stall_to_plain(stall)
    for i in range(3):
        a = run(via_ext, i, times_ten)
        b = run(direct, i, times_ten)
        assert a == b == Output(i * 10, Transcript((i,), (i * 10,)))


def test_ext_to_stall_preserves_behaviour():
    ext = plain_to_ext(threshold_tree())
    again = stall_to_plain(ext_to_stall(ext))
    out = run(again, 2, lambda q: ret(True))
    assert out.value is True
    assert out.transcript.qs == (0, 1)


def test_budget_still_gates_questions():
    out = run(ident(), 4, times_ten, qfuel=0)
    assert isinstance(out, NeedQuestion)
    assert out.question == 4
