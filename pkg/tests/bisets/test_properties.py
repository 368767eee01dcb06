import random

from bisetkit.algebra import INFINITE, FpGroup, Homomorphism, Word, conj_canonical
from bisetkit.analysis import level_actions
from bisetkit.bisets import (
    DecoratedPermutation,
    WreathBiset,
    change_basis,
    contragredient,
    lift_conjugacy,
    tensor_wreath,
)

CASES = 100


def _group() -> FpGroup:
    return FpGroup.free_product([INFINITE, INFINITE], ["a", "b"])


def _word(rng: random.Random, group: FpGroup, length: int) -> Word:
    word = group.identity()
    for _ in range(rng.randint(0, length)):
        word = word * group.generator(rng.randrange(group.rank)) ** rng.choice((1, -1))
    return word


def _entry(rng: random.Random, group: FpGroup, degree: int) -> DecoratedPermutation:
    perm = list(range(degree))
    rng.shuffle(perm)
    decorations = tuple(_word(rng, group, 2) for _ in range(degree))
    return DecoratedPermutation(decorations, tuple(perm))


def _biset(rng: random.Random, group: FpGroup, max_degree: int = 2) -> WreathBiset:
    degree = rng.randint(1, max_degree)
    recursion = tuple(_entry(rng, group, degree) for _ in range(group.rank))
    return WreathBiset(group, group, degree, recursion)


def _signed_permutation(rng: random.Random, group: FpGroup) -> Homomorphism:
    generators = list(group.generators())
    rng.shuffle(generators)
    return Homomorphism(group, group, tuple(g ** rng.choice((1, -1)) for g in generators))


def test_tensor_is_associative():
    rng = random.Random(1)
    group = _group()
    for _ in range(CASES):
        a, b, c = (_biset(rng, group) for _ in range(3))
        left = tensor_wreath(tensor_wreath(a, b), c)
        right = tensor_wreath(a, tensor_wreath(b, c))
        assert left == right


def test_identity_biset_is_neutral():
    rng = random.Random(2)
    group = _group()
    identity = WreathBiset.identity(group)
    for _ in range(CASES):
        biset = _biset(rng, group, max_degree=3)
        assert tensor_wreath(identity, biset) == biset
        assert tensor_wreath(biset, identity) == biset


def test_contragredient_is_an_involution_on_principal_bisets():
    rng = random.Random(3)
    group = FpGroup.free_product([INFINITE] * 3)
    for _ in range(CASES):
        phi = _signed_permutation(rng, group)
        biset = WreathBiset.from_homomorphism(phi)
        dual = contragredient(biset)
        assert contragredient(dual) == biset
        assert tensor_wreath(biset, dual).homomorphism().is_identity()


def test_contragredient_reverses_tensor_products():
    rng = random.Random(4)
    group = FpGroup.free_product([INFINITE] * 3)
    for _ in range(CASES):
        first = WreathBiset.from_homomorphism(_signed_permutation(rng, group))
        second = WreathBiset.from_homomorphism(_signed_permutation(rng, group))
        product = contragredient(tensor_wreath(first, second))
        assert product == tensor_wreath(contragredient(second), contragredient(first))


def test_change_basis_preserves_level_cycle_types():
    rng = random.Random(5)
    group = _group()
    for _ in range(CASES):
        biset = _biset(rng, group)
        w = _entry(rng, group, biset.degree)
        changed = change_basis(biset, w)
        for before, after in zip(level_actions(biset, 4), level_actions(changed, 4)):
            assert before.cycle_types() == after.cycle_types()


def test_lifts_are_basis_invariant_and_conserve_degree():
    rng = random.Random(6)
    group = _group()
    for _ in range(CASES):
        biset = _biset(rng, group, max_degree=3)
        w = _entry(rng, group, biset.degree)
        word = _word(rng, group, 4)
        if word.is_identity():
            continue
        conj_class = conj_canonical(word)
        lifted = lift_conjugacy(biset, conj_class)
        assert sum(term.degree for term in lifted) == biset.degree
        assert lift_conjugacy(change_basis(biset, w), conj_class) == lifted
