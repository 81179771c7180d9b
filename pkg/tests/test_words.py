import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import W, reduced_strings, sanov
from quasipos.words import (
    AbelianImage,
    Letter,
    Word,
    abelianize,
    conjugate,
    cyclic_reduce,
    find_cyclic_conjugator,
    format_word,
    free_reduce,
    kmp_find,
    least_rotation,
    parse_word,
    product,
)

words = st.text(alphabet="abAB", max_size=14)
reduced = words.map(lambda s: str(free_reduce(W(s))))


def test_parse_examples():
    assert W("abA").letters == (Letter(0, 1), Letter(1, 1), Letter(0, -1))
    assert len(W("")) == 0
    w = W("babaBAbabAA")
    assert len(w) == 11 and str(w) == "babaBAbabAA"


def test_parse_keeps_letters_unreduced_and_ignores_whitespace():
    assert str(W("a A b")) == "aAb"


@pytest.mark.parametrize("text,rank", [("abc", 2), ("a1", 2), ("a-b", 2), ("é", 3)])
def test_parse_rejects_bad_characters(text, rank):
    with pytest.raises(ValueError):
        parse_word(text, rank)


@pytest.mark.parametrize("rank", [0, -1, 27])
def test_parse_rejects_bad_rank(rank):
    with pytest.raises(ValueError):
        parse_word("a", rank)


def test_word_validates_letters():
    with pytest.raises(ValueError):
        Word((Letter(2, 1),), 2)
    with pytest.raises(ValueError):
        Word((Letter(0, 0),), 2)


@given(st.text(alphabet="abcdeABCDE", max_size=20))
def test_format_inverts_parse(s):
    assert format_word(parse_word(s, 5)) == s


def test_free_reduce_examples():
    assert str(free_reduce(W("abBA"))) == ""
    assert str(free_reduce(W("abAB"))) == "abAB"
    unreduced = W("b") * W("abA") * W("aaBAbabAA")
    assert str(free_reduce(unreduced)) == "babaBAbabAA"


@given(words)
def test_free_reduce_idempotent_and_shorter_by_even(s):
    w = W(s)
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w) and (len(w) - len(r)) % 2 == 0
    assert all(r[i] != r[i + 1].inverse() for i in range(len(r) - 1))


@given(words)
def test_free_reduce_preserves_group_element(s):
    assert sanov(free_reduce(W(s))) == sanov(s)


@given(words, words)
def test_equal_in_group_iff_reductions_identical(s, t):
    assert (sanov(s) == sanov(t)) == (free_reduce(W(s)) == free_reduce(W(t)))


def test_cyclic_reduce_examples():
    v, core = cyclic_reduce(W("Bab"))
    assert (str(v), str(core)) == ("b", "a")
    v, core = cyclic_reduce(W("abAB"))
    assert (str(v), str(core)) == ("", "abAB")


def test_cyclic_reduce_conjugated_rotation():
    # frozen from the contract: one conjugation layer peeled
    w = W("AbabaBAbaba")
    v, core = cyclic_reduce(w)
    assert (str(v), str(core)) == ("a", "babaBAbab")
    assert 2 * len(v) + len(core) == len(w)
    assert free_reduce(v.inverse() * core * v) == free_reduce(w)


@given(reduced)
def test_cyclic_reduce_contract(s):
    w = W(s)
    v, core = cyclic_reduce(w)
    assert free_reduce(v.inverse() * core * v) == w
    assert 2 * len(v) + len(core) == len(w)
    if len(core) > 1:
        assert core[0] != core[-1].inverse()


def test_conjugate_examples():
    assert str(conjugate(W("b"), W("A"))) == "abA"
    assert str(conjugate(W("b"), W(""))) == "b"
    assert str(conjugate(W("b"), W("aa"))) == "AAbaa"


def test_abelianize_examples():
    assert abelianize(W("babaBAbabAA")).counts == (0, 3)
    assert abelianize(W("ababAbaB")).counts == (2, 2)
    assert abelianize(W("")).counts == (0, 0)


@given(words, words)
def test_abelianize_is_homomorphism(s, t):
    assert abelianize(W(s) * W(t)) == abelianize(W(s)) + abelianize(W(t))


@given(words, words)
def test_abelianize_conjugation_invariant(a, b):
    assert abelianize(conjugate(W(a), W(b))) == abelianize(W(a))


def test_abelian_image_arithmetic():
    x = AbelianImage((1, -2))
    assert x.total == -1 and not x.is_nonnegative()
    with pytest.raises(ValueError):
        x + AbelianImage((1, 2, 3))


def test_kmp_find():
    assert kmp_find("abcabcababcabcababcabc", "abcababcabc") == 3
    assert kmp_find("aaa", "b") == -1
    assert kmp_find("xyz", "") == 0


def test_find_cyclic_conjugator_examples():
    # (ba)^b = B.ba.b = ab
    u = find_cyclic_conjugator(W("ab"), W("ba"))
    assert str(u) == "b"
    assert conjugate(W("ba"), u) == W("ab")
    assert str(find_cyclic_conjugator(W("ab"), W("ab"))) == ""
    assert find_cyclic_conjugator(W("ab"), W("aB")) is None
    assert find_cyclic_conjugator(W("ab"), W("abb")) is None


def test_find_cyclic_conjugator_cycling_step():
    target = W("babaBAbabAA")
    source = free_reduce(W("B") * W("Aba") * W("b") * W("AAbaa") * W("Aba"))
    u = find_cyclic_conjugator(target, source)
    assert u is not None
    assert conjugate(source, u) == target


@given(reduced, words)
def test_find_cyclic_conjugator_on_conjugates(s, c):
    _, core = cyclic_reduce(W(s))
    source = conjugate(W(s), W(c))
    u = find_cyclic_conjugator(core, source)
    assert u is not None
    assert conjugate(source, u) == core


@given(reduced, reduced)
def test_find_cyclic_conjugator_iff_rotation(s, t):
    _, core = cyclic_reduce(W(s))
    _, z = cyclic_reduce(W(t))
    cs, zs = str(core), str(z)
    is_rotation = len(cs) == len(zs) and cs in zs + zs
    assert (find_cyclic_conjugator(core, W(t)) is not None) == is_rotation


@given(st.text(alphabet="abAB", max_size=12))
def test_least_rotation_matches_brute_force(s):
    w = W(s).letters
    brute = min((w[i:] + w[:i] for i in range(len(w))), default=())
    assert least_rotation(w) == brute


def test_product_and_inverse():
    w = W("abAAb")
    assert len(product(w, w.inverse())) == 0
    assert str(w.inverse()) == "BaaBA"


def test_reduced_strings_helper_counts():
    # 4 * 3^(n-1) reduced words of each positive length
    counts = [0] * 6
    for s in reduced_strings(5):
        counts[len(s)] += 1
    assert counts == [1, 4, 12, 36, 108, 324]
