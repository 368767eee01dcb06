import pytest

from bisetkit.algebra import (
    INFINITE,
    FpGroup,
    Homomorphism,
    are_conjugate,
    conj_canonical,
    coset_representative,
    cyclic_reduction,
    enumerate_words,
    is_power_of,
    reduce_exponent,
    word_order,
)


def _free(rank: int = 2) -> FpGroup:
    return FpGroup.free_product([INFINITE] * rank)


def _modular() -> FpGroup:
    return FpGroup.free_product([2, 3])


def test_reduce_exponent_picks_symmetric_range():
    assert reduce_exponent(3, 4) == -1
    assert reduce_exponent(2, 4) == 2
    assert reduce_exponent(5, 2) == 1
    assert reduce_exponent(-7, INFINITE) == -7


def test_normal_form_merges_and_cancels_syllables():
    group = _free()
    a, b = group.generators()
    assert (a * b * b.inverse() * a).syllables == ((0, 2),)
    assert (a * a.inverse()).is_identity()
    assert str(a * b**-1) == "a*b^-1"
    assert str(group.identity()) == "1"


def test_finite_factors_reduce_powers():
    group = _modular()
    a, b = group.generators()
    assert (a * a).is_identity()
    assert b**3 == group.identity()
    assert str(b * b) == "b^-1"


def test_words_from_different_groups_do_not_multiply():
    with pytest.raises(ValueError):
        _free().generator(0) * _modular().generator(0)


def test_unknown_generator_is_rejected():
    with pytest.raises(ValueError):
        _free().generator("z")


def test_group_equality_ignores_name():
    assert FpGroup.free_product([2], ["a"], name="first") == FpGroup.free_product([2], ["a"])


def test_cyclic_reduction_and_conjugacy_classes():
    group = _free()
    a, b = group.generators()
    conj, core = cyclic_reduction(a * b * a.inverse())
    assert conj == a
    assert core == b
    assert conj_canonical(a * b * a.inverse()) == conj_canonical(b)
    assert conj_canonical(b * a) == conj_canonical(a * b)
    assert are_conjugate(a * b * a * b.inverse(), b.inverse() * a * b * a)
    assert not are_conjugate(a, b)
    assert conj_canonical(group.identity()).is_trivial()


def test_word_order():
    group = _modular()
    a, b = group.generators()
    assert word_order(group.identity()) == 1
    assert word_order(a) == 2
    assert word_order(b * a * b.inverse()) == 2
    assert word_order(b) == 3
    assert word_order(a * b) == INFINITE


def test_is_power_of():
    group = _free()
    a, b = group.generators()
    assert is_power_of((a * b) ** 3, a * b) == 3
    assert is_power_of((a * b) ** -2, a * b) == -2
    assert is_power_of(b * a, a * b) is None
    assert is_power_of(a**6, a**2) == 3
    assert is_power_of(a**5, a**2) is None
    with pytest.raises(ValueError):
        is_power_of(a, group.identity())


def test_enumerate_words_is_shortlex_and_complete():
    group = FpGroup.free_product([2, 2])
    words = [str(w) for w in enumerate_words(group, 2)]
    assert words == ["1", "a", "b", "a*b", "b*a"]
    free_words = list(enumerate_words(_free(1), 2))
    assert [str(w) for w in free_words] == ["1", "a", "a^-1", "a^2", "a^-2"]
    with pytest.raises(ValueError):
        list(enumerate_words(group, -1))


def test_coset_representative_prefers_shortlex_least():
    group = _free(1)
    a = group.generator(0)
    representative, k = coset_representative(a**2, a)
    assert representative.is_identity()
    assert k == -2
    representative, k = coset_representative(a**3, a**2)
    assert representative == a
    assert k == -1


def test_homomorphism_composition_and_inverse():
    group = _free()
    a, b = group.generators()
    swap = Homomorphism(group, group, (b, a))
    assert swap(a * b**2) == b * a**2
    assert swap.then(swap).is_identity()
    inverse = swap.invert()
    assert inverse is not None
    assert inverse.then(swap).is_identity()
    doubling = Homomorphism(group, group, (a**2, b))
    assert doubling.invert() is None


def test_homomorphism_relations_and_mapping():
    source = FpGroup.free_product([2], ["a"])
    target = _free(1)
    bad = Homomorphism(source, target, (target.generator(0),))
    assert bad.violations()
    trivial = Homomorphism.trivial(source, target)
    assert trivial.violations() == []
    mapped = Homomorphism.from_mapping(_free(), target, {"b": target.generator(0)})
    assert mapped.images[0].is_identity()
    with pytest.raises(ValueError):
        Homomorphism.from_mapping(_free(), target, {"z": target.identity()})
    with pytest.raises(ValueError):
        Homomorphism(source, target, ())
