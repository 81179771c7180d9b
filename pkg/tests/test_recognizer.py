import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import W, rotations
from quasipos.factorizer import factor_qp, verify_factorization
from quasipos.recognizer import (
    Leaf,
    Node,
    Verdict,
    check_witness,
    format_witness,
    good_matches,
    split_at_pair,
    test_qp,
)
from quasipos.words import Letter, abelianize, conjugate, free_reduce

EXAMPLE = "babaBAbabAA"
words = st.text(alphabet="abAB", max_size=9).map(lambda s: str(free_reduce(W(s))))


@pytest.mark.parametrize("i,j,left,right", [(5, 2, "A", "abAAbaba"), (5, 4, "Aba", "AAbaba")])
def test_split_at_pair_trace(i, j, left, right):
    wl, wr = split_at_pair(W(EXAMPLE), i, j)
    assert (str(wl), str(wr)) == (left, right)


def test_split_at_pair_minimal():
    wl, wr = split_at_pair(W("Bab"), 1, 2)
    assert (str(wl), str(wr)) == ("a", "")


def test_split_at_pair_lengths_and_wraparound():
    # the matching b sits before the negative letter, reached through the doubled word
    wl, wr = split_at_pair(W(EXAMPLE), 5, 7)
    assert len(wl) + len(wr) == len(EXAMPLE) - 2
    assert str(wl) == "AbabAA" and str(wr) == "aba"


@pytest.mark.parametrize("i,j,exc", [(0, 1, IndexError), (12, 1, IndexError), (5, 0, IndexError),
                                     (5, 11, IndexError), (1, 1, ValueError), (5, 1, ValueError)])
def test_split_at_pair_errors(i, j, exc):
    with pytest.raises(exc):
        split_at_pair(W(EXAMPLE), i, j)


@pytest.mark.parametrize("strategy", ["naive", "pruned"])
@pytest.mark.parametrize("word,expected", [
    (EXAMPLE, True), ("ababAbaB", True), ("ABabb", False), ("", True),
    ("ABabABabbbb", False), ("abABabABab", False), ("abABab", True), ("b", True), ("B", False),
])
def test_verdict_examples(word, expected, strategy):
    v = test_qp(W(word), strategy)
    assert v.is_qp is expected
    assert bool(v) is expected
    assert v.witness is None
    assert v.calls >= 1


def test_input_is_freely_reduced_at_entry():
    assert test_qp(W("bAa")).is_qp
    assert not test_qp(W("ABabbBb")).is_qp


def test_witness_presence():
    for strategy in ("naive", "pruned"):
        assert test_qp(W(EXAMPLE), strategy, record_witness=True).witness is not None
        assert test_qp(W("ABabb"), strategy, record_witness=True).witness is None


def test_example_witness_shape():
    t = test_qp(W(EXAMPLE), "naive", record_witness=True).witness
    assert isinstance(t, Node)
    assert t.base == Letter(1, 1)
    assert (t.neg_pos, t.match_pos) == (5, 9)
    assert str(t.left.word) == "Aba" and t.left.base == Letter(0, 1)
    assert str(t.right.word) == "AAbaba"
    assert (t.left.neg_pos, t.left.match_pos) == (1, 3)
    assert (t.right.neg_pos, t.right.match_pos) == (1, 6)
    rr = t.right.right
    assert str(rr.word) == "" and isinstance(rr, Leaf)
    assert str(t.right.left.word) == "Abab"


def test_example_trace_tries_failed_pairs_first():
    # offsets 2 and 4 do not give good pairs, 4 -> position 9 does
    assert good_matches(W(EXAMPLE), "naive") == [4]


def test_unknown_strategy():
    with pytest.raises(ValueError):
        test_qp(W("ab"), "greedy")


def test_pruned_rejects_by_abelianization_in_one_call():
    assert test_qp(W("ABabABabB"), "pruned").calls == 1


def test_pruned_cheaper_on_uk():
    from quasipos.workbench import make_uk
    for k in range(2, 7):
        w = make_uk(k)
        assert test_qp(w, "pruned").calls < test_qp(w, "naive").calls


def test_format_witness():
    t = test_qp(W("Bab"), "naive", record_witness=True).witness
    assert format_witness(t) == "Bab, b (pair 1,3)\n  a\n  1"


def test_check_witness_rejects_tampering():
    t = test_qp(W(EXAMPLE), "naive", record_witness=True).witness
    assert check_witness(t)
    bad = Node(t.word, t.base, t.neg_pos, t.match_pos, t.right, t.left)
    assert not check_witness(bad)
    assert not check_witness(Leaf(W("aB")))


@given(words)
def test_rotation_invariance(s):
    expected = test_qp(W(s), "naive").is_qp
    for r in rotations(s):
        assert test_qp(W(r), "pruned").is_qp is expected


@given(words, st.text(alphabet="abAB", max_size=5))
def test_conjugation_invariance(s, c):
    w = W(s)
    assert test_qp(conjugate(w, W(c)), "pruned").is_qp == test_qp(w, "pruned").is_qp


@given(words, words)
def test_closure_under_products(s, t):
    u, v = W(s), W(t)
    if test_qp(u, "pruned").is_qp and test_qp(v, "pruned").is_qp:
        assert test_qp(free_reduce(u * v), "pruned").is_qp


@given(words)
def test_prune_soundness(s):
    if test_qp(W(s), "naive").is_qp:
        assert abelianize(W(s)).is_nonnegative()


@given(words)
def test_witness_identity(s):
    for strategy in ("naive", "pruned"):
        v = test_qp(W(s), strategy, record_witness=True)
        if v.is_qp:
            assert check_witness(v.witness)
            assert v.witness.word == free_reduce(W(s))


@pytest.mark.slow
def test_strategy_agreement_exhaustive(words_upto_10, naive_table):
    disagreements = [w for w in words_upto_10 if test_qp(w, "pruned").is_qp != naive_table[w].is_qp]
    assert disagreements == []
    assert len(words_upto_10) == 118097


@pytest.mark.slow
def test_witness_validity_exhaustive(qp_words_upto_10, naive_table):
    for w in qp_words_upto_10:
        t = naive_table[w].witness
        assert check_witness(t)
        assert verify_factorization(w, factor_qp(t)), str(w)


@pytest.mark.slow
def test_good_pair_exists_for_every_negative_letter(qp_words_upto_10):
    for w in qp_words_upto_10:
        letters = w.letters
        n = len(letters)
        for i, x in enumerate(letters):
            if x.sign > 0:
                continue
            ok = False
            for j in range(1, n):
                if letters[(i + j) % n] == x.inverse():
                    wl, wr = split_at_pair(w, i + 1, j)
                    if test_qp(wl, "pruned").is_qp and test_qp(wr, "pruned").is_qp:
                        ok = True
                        break
            assert ok, (str(w), i + 1)


def test_verdict_defaults():
    v = Verdict(True)
    assert v.witness is None and v.calls == 0
