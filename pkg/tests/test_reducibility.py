import unittest

from oracletree.evaluator import Budget, Output, Timeout, delta
from oracletree.partiality import STAR, eval_steps, ret
from oracletree.reducibility import (
    CharOracle,
    Inl,
    Inr,
    bisemidec_to_turing,
    complement_reduction,
    decide_via_reduction,
    inject_left,
    inject_right,
    join,
    manyone_to_turing,
    partial_to_step_semidecider,
    reduce_refl,
    reduce_trans,
    sdec_from_plain,
    sdec_to_plain,
    sdec_transport_manyone,
    sdec_transport_turing,
    step_semidecider_to_partial,
    turing_to_sdec,
)

EVENS = lambda q: ret(q % 2 == 0)


class ReductionOps(unittest.TestCase):
    def run_at(self, reduction, x, answer=EVENS, qfuel=4, sfuel=120):
        return delta(reduction.tree.at(x), answer, Budget(qfuel, sfuel))

    def test_refl_passes_the_question_through(self):
        out = self.run_at(reduce_refl(), 6)
        self.assertEqual(out.value, True)
        self.assertEqual(out.transcript.qs, (6,))
        self.assertEqual(self.run_at(reduce_refl(), 7).value, False)

    def test_manyone_shifts_before_asking(self):
        r = manyone_to_turing(lambda x: x + 1)
        out = self.run_at(r, 6)
        self.assertEqual(out.transcript.qs, (7,))
        self.assertEqual(out.value, False)

    def test_complement_negates_the_answer(self):
        out = self.run_at(complement_reduction(), 6)
        self.assertEqual(out.transcript.qs, (6,))
        self.assertEqual(out.value, False)

    def test_trans_chains_the_maps(self):
        r = reduce_trans(manyone_to_turing(lambda x: x + 1), manyone_to_turing(lambda x: 2 * x))
        out = self.run_at(r, 3, answer=lambda q: ret(q == 8))
        self.assertEqual(out.transcript.qs, (8,))
        self.assertEqual(out.value, True)

    def test_join_dispatches_on_the_tag(self):
        j = join(reduce_refl(), complement_reduction())
        self.assertEqual(self.run_at(j, Inl(6)).value, True)
        self.assertEqual(self.run_at(j, Inr(6)).value, False)
        self.assertEqual(self.run_at(j, Inl(6)).transcript.qs, (6,))

    def test_injections_tag_the_question(self):
        is_left = lambda q: ret(isinstance(q, Inl))
        out = self.run_at(inject_left(), 5, answer=is_left)
        self.assertEqual(out.value, True)
        self.assertEqual(out.transcript.qs, (Inl(5),))
        out = self.run_at(inject_right(), 5, answer=is_left)
        self.assertEqual(out.value, False)
        self.assertEqual(out.transcript.qs, (Inr(5),))

    def test_sum_tags_serialize(self):
        self.assertEqual(Inl(3).to_json_value(), {"inl": 3})
        self.assertEqual(Inr(STAR).to_json_value(), {"inr": "star"})


class SemiDeciders(unittest.TestCase):
    def test_turing_to_sdec_split(self):
        acc, rej = turing_to_sdec(reduce_refl())
        hit = delta(acc.tree.at(4), EVENS, Budget(2, 60))
        self.assertIsInstance(hit, Output)
        self.assertEqual(hit.value, STAR)
        # the accepting half diverges off its side, it never answers no
        self.assertIsInstance(delta(acc.tree.at(5), EVENS, Budget(2, 120)), Timeout)
        self.assertIsInstance(delta(rej.tree.at(5), EVENS, Budget(2, 60)), Output)
        self.assertIsInstance(delta(rej.tree.at(4), EVENS, Budget(2, 120)), Timeout)

    def test_step_semidecider_roundtrip(self):
        fire = lambda x, n: x % 2 == 0 and n >= x
        f = step_semidecider_to_partial(fire)
        self.assertEqual(eval_steps(f(4), 50), STAR)
        self.assertIsNone(eval_steps(f(5), 400))
        back = partial_to_step_semidecider(f)
        self.assertFalse(back(4, 0))
        self.assertTrue(back(4, 200))

    def test_sdec_plain_roundtrip(self):
        s = sdec_from_plain(step_semidecider_to_partial(lambda x, n: x % 2 == 0 and n >= x))
        f = sdec_to_plain(s, lambda q: True)
        self.assertEqual(eval_steps(f(4), 50), STAR)
        self.assertIsNone(eval_steps(f(5), 400))

    def test_sdec_transports(self):
        s = sdec_from_plain(step_semidecider_to_partial(lambda x, n: x % 2 == 0 and n >= x))
        via_turing = sdec_transport_turing(s, manyone_to_turing(lambda x: x + 2))
        out = delta(via_turing.tree.at(6), lambda q: ret(True), Budget(2, 400))
        self.assertEqual(out.value, STAR)
        via_map = sdec_transport_manyone(s, lambda x: x * 2)
        out = delta(via_map.tree.at(3), lambda q: ret(True), Budget(2, 400))
        self.assertEqual(out.value, STAR)
        self.assertIsInstance(
            delta(via_map.tree.at(0), lambda q: ret(True), Budget(2, 30)), Output
        )

    def test_bisemidec_needs_no_oracle(self):
        acc = lambda x, n: x % 2 == 0 and n >= x
        rej = lambda x, n: x % 2 == 1 and n >= x
        dec = bisemidec_to_turing(acc, rej)
        for x, want in ((0, True), (4, True), (7, False)):
            out = delta(dec.tree.at(x), EVENS, Budget(0, 60))
            self.assertEqual(out.value, want)
            self.assertEqual(out.transcript.qs, ())


class Verdicts(unittest.TestCase):
    def test_char_oracle(self):
        o = CharOracle(lambda x: x > 2)
        self.assertIs(eval_steps(o.answer(5), 1), True)
        self.assertIs(eval_steps(o.as_fn_oracle().fn(1), 1), False)

    def test_decide_via_reduction_batch(self):
        got = decide_via_reduction(reduce_refl(), lambda y: y % 2 == 0, range(4), Budget(2, 20))
        self.assertEqual(got, [(0, True), (1, False), (2, True), (3, False)])

    def test_decide_reports_timeouts_as_none(self):
        acc, _rej = turing_to_sdec(reduce_refl())
        r = sdec_transport_turing(acc, reduce_refl())
        got = decide_via_reduction(r, lambda y: y % 2 == 0, [1], Budget(2, 80))
        self.assertEqual(got, [(1, None)])


if __name__ == "__main__":
    unittest.main()
