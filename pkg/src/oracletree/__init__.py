"""Computation-tree engine for oracle algorithms."""

from .partiality import STAR, Partial, Unit, bind, eval_steps, mu, ret, undef
from .trees import (
    Ask,
    FnOracle,
    Out,
    TableOracle,
    Transcript,
    TranscriptRecord,
    Tree,
    Verdict,
    check_transcript,
    enumerate_transcripts,
    oracle_relates,
    output_set,
    subtree_at,
    threshold_tree,
    to_answer_fn,
    transcript_json,
)
from .evaluator import (
    Budget,
    NeedQuestion,
    Output,
    Timeout,
    delta,
    extract_modulus,
    run_core,
    run_outcome_json,
)
from .combinators import (
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
from .reducibility import (
    CharOracle,
    Inl,
    Inr,
    OracleSemiDecider,
    TuringReduction,
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
from .truthtable import (
    FIXTURES,
    DeficiencyFixture,
    Enumerator,
    TruthTable,
    deficiency,
    deficiency_reduction,
    fixture_double,
    fixture_xor1,
    forall2,
    tt_eval,
    tt_to_turing,
    window_membership,
)
from .dovetail import DovetailState, getas, pt_reduce, pt_tree
