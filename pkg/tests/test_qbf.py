import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcontrol.errors import ContractError, FormulaParseError
from seqcontrol.game import solve_forced_win
from seqcontrol.qbf import (
    QbfInstance,
    canonical_variable_names,
    decode_candidate,
    encode_candidate,
    eval_formula,
    parse_formula,
    qbf_truth,
    reduce_qbf,
    sample_four_variable_matrices,
    two_variable_corpus,
    winners_qbf_system,
)

TARGETS = ("CCAC", "CCDC", "DCDC-NHT", "DCDC-HT", "DCAC")


def test_parse_three_variables():
    f = parse_formula("(x1 | ~x2) <-> (x3 & ~x3 & x3)")
    assert f.num_variables == 3
    assert f.variables == ("x1", "x2", "x3")


def test_parse_error_position():
    with pytest.raises(FormulaParseError) as err:
        parse_formula("x1 &")
    assert err.value.position == 4


def test_parse_double_negation():
    f = parse_formula("~~v")
    assert f.num_variables == 1
    assert f.serialize() == "(~(~v))"


def test_parse_trailing_garbage():
    with pytest.raises(FormulaParseError):
        parse_formula("x1 x2")


def test_precedence():
    f = parse_formula("a | b & c <-> ~d")
    assert f.serialize() == "((a | (b & c)) <-> (~d))"


@given(st.recursive(
    st.sampled_from(["p", "q", "rXY", "z9"]),
    lambda inner: st.one_of(
        st.tuples(inner).map(lambda t: f"~({t[0]})"),
        st.tuples(inner, st.sampled_from(["&", "|", "<->"]), inner).map(
            lambda t: f"({t[0]} {t[1]} {t[2]})"
        ),
    ),
    max_leaves=10,
))
def test_serialize_round_trip(text):
    f = parse_formula(text)
    again = parse_formula(f.serialize())
    assert again.root == f.root
    assert again.serialize() == f.serialize()


def test_eval_examples():
    f = parse_formula("w1 & ~w2")
    assert eval_formula(f, {"w1": True, "w2": False})
    assert not eval_formula(f, {"w1": True, "w2": True})
    taut = parse_formula("x | ~x")
    for value in (True, False):
        assert eval_formula(taut, {"x": value})


def test_eval_missing_variable():
    with pytest.raises(ContractError):
        eval_formula(parse_formula("a & b"), {"a": True})


def test_qbf_truth_examples():
    assert qbf_truth(QbfInstance(parse_formula("w1 | w2")))
    assert not qbf_truth(QbfInstance(parse_formula("w1 & w2")))
    assert qbf_truth(QbfInstance(parse_formula("(w1 & w2) | w3"), j=2))


def test_qbf_instance_guards():
    with pytest.raises(ContractError):
        QbfInstance(parse_formula("w1 & w2 & w3"))
    with pytest.raises(ContractError):
        QbfInstance(parse_formula("x1 | x2"), j=1)  # names outside w1..w2


def test_qbf_cap():
    from seqcontrol.errors import SizeLimitError

    q = QbfInstance(parse_formula("w1 | w2"), j=1)
    with pytest.raises(SizeLimitError):
        qbf_truth(q, cap=1)


def test_candidate_encoding_round_trip():
    text = parse_formula("w1 & ~w2").serialize()
    cid = encode_candidate(text, 12)
    assert decode_candidate(cid) == (text, 12)
    assert decode_candidate("nohash") is None
    assert decode_candidate("f#") is None
    assert decode_candidate("#3") is None
    assert decode_candidate("f#03") is None
    assert decode_candidate("f#x") is None


FHAT = parse_formula("w1 & ~w2").serialize()


def cand(i: int) -> str:
    return encode_candidate(FHAT, i)


def test_system_e_true_assignment():
    # v1 true by presence of index 1, v2 false since index 0 precedes index 2
    cands = (cand(0), cand(1), cand(2))
    vote = [cand(1), cand(0), cand(2)]
    assert winners_qbf_system(cands, [vote], "E") == set(cands)
    assert winners_qbf_system(cands, [vote], "E-prime") == frozenset()


def test_system_e_false_assignment():
    # index 2 preferred to index 0 makes v2 true, falsifying w1 & ~w2
    cands = (cand(0), cand(1), cand(2))
    vote = [cand(2), cand(1), cand(0)]
    assert winners_qbf_system(cands, [vote], "E") == frozenset()
    assert winners_qbf_system(cands, [vote], "E-prime") == set(cands)


def test_system_e_two_voters_lose():
    cands = (cand(0), cand(1), cand(2))
    vote = list(cands)
    assert winners_qbf_system(cands, [vote, vote], "E") == frozenset()


def test_system_e_missing_even_index():
    cands = (cand(0), cand(1))
    assert winners_qbf_system(cands, [list(cands)], "E") == frozenset()


def test_system_e_distinct_formulas():
    other = encode_candidate(parse_formula("w1 | ~w2").serialize(), 0)
    cands = (cand(0), other)
    assert winners_qbf_system(cands, [list(cands)], "E") == frozenset()


def test_system_e_odd_variable_count():
    text = parse_formula("a & b & c").serialize()
    cands = tuple(encode_candidate(text, i) for i in (0, 1, 2))
    assert winners_qbf_system(cands, [list(cands)], "E") == frozenset()


def test_system_e_syntactic_garbage():
    cands = ("not a pair", cand(0))
    assert winners_qbf_system(cands, [list(cands)], "E") == frozenset()
    assert winners_qbf_system(cands, [list(cands)], "E-prime") == set(cands)


@given(
    ids=st.lists(
        st.one_of(
            st.text(min_size=1, max_size=12),
            st.sampled_from([cand(i) for i in range(4)]),
        ),
        min_size=1,
        max_size=5,
        unique=True,
    ),
    flavor=st.sampled_from(["E", "E-prime"]),
    data=st.data(),
)
@settings(max_examples=300)
def test_all_or_nothing_and_complementarity(ids, flavor, data):
    n_votes = data.draw(st.integers(0, 2))
    votes = [data.draw(st.permutations(ids)) for _ in range(n_votes)]
    winners = winners_qbf_system(ids, votes, flavor)
    assert winners in (frozenset(), frozenset(ids))
    e = winners_qbf_system(ids, votes, "E")
    ep = winners_qbf_system(ids, votes, "E-prime")
    assert (e == frozenset(ids)) == (ep == frozenset())


def test_reduction_shape_ccac():
    q = QbfInstance(parse_formula("w1 | w2"))
    inst = reduce_qbf(q, "CCAC")
    text = parse_formula("w1 | w2").serialize()
    ids = [encode_candidate(text, i) for i in range(3)]
    assert list(inst.candidates) == ids
    assert inst.spoilers == {ids[1]}
    assert inst.budget == 1
    assert list(inst.sigma) == list(reversed(ids))
    assert inst.d == ids[0]
    assert list(inst.presentation) == ids
    assert inst.current_candidate == ids[1]
    assert inst.votes == ((ids[0], ids[1]),)
    assert inst.num_voters == 1
    assert inst.system == "qbf-E"
    assert inst.decisions == ("in",)


def test_reduction_shape_ccdc():
    q = QbfInstance(parse_formula("w1 | w2"))
    inst = reduce_qbf(q, "CCDC")
    assert inst.spoilers is None
    assert inst.budget == 1
    assert inst.decisions == ("kept",)
    assert inst.system == "qbf-E"


def test_reduction_renames_variables():
    q = QbfInstance(parse_formula("zz | aa"))
    inst = reduce_qbf(q, "CCDC")
    text, idx = decode_candidate(inst.candidates[0])
    assert idx == 0
    assert parse_formula(text).variables == ("w1", "w2")


def test_reduction_destructive_system():
    q = QbfInstance(parse_formula("w1 | w2"))
    for target in ("DCDC-NHT", "DCDC-HT", "DCAC"):
        inst = reduce_qbf(q, target)
        assert inst.system == "qbf-Eprime"


def test_reduction_soundness_j1_all_targets():
    for q in two_variable_corpus():
        truth = qbf_truth(q)
        for target in TARGETS:
            inst = reduce_qbf(q, target)
            got = solve_forced_win(inst, engine="pure").forced_win
            assert got == truth, (q, target)


def test_reduction_soundness_j2_sample():
    for q in sample_four_variable_matrices(12):
        truth = qbf_truth(q)
        for target in TARGETS:
            got = solve_forced_win(reduce_qbf(q, target), engine="pure").forced_win
            assert got == truth, (q, target)


def test_reduction_pads_unused_prefix_variables():
    q = QbfInstance(parse_formula("(w1 & w2) | w3"), j=2)
    inst = reduce_qbf(q, "CCAC")
    assert len(inst.candidates) == 5
    text, _ = decode_candidate(inst.candidates[0])
    assert parse_formula(text).variables == ("w1", "w2", "w3", "w4")
    assert solve_forced_win(inst, engine="pure").forced_win == qbf_truth(q)


def test_canonical_names_sort_numerically():
    names = canonical_variable_names(12)
    assert list(names) == sorted(names)
    assert names[0] == "w01" and names[-1] == "w12"


def test_corpus_sizes():
    assert len(two_variable_corpus()) == 24
    assert len(sample_four_variable_matrices(7)) == 7
