import numpy as np
import pytest

from bisetkit.algebra import FpGroup, Homomorphism
from bisetkit.analysis import (
    approx_kernel,
    conj_classes_bounded,
    cycle_type,
    equivalent_upto,
    level_action,
    level_actions,
    permutation_isomorphic,
    quotient_order,
    verify_certificate,
)
from bisetkit.bisets import (
    CyclicBiset,
    DecoratedPermutation,
    WreathBiset,
    as_wreath,
    change_basis,
    tensor_wreath,
)
from bisetkit.config import Budget
from bisetkit.dynamics.fixtures import basilica_hubbard_fb, basilica_lamination_fb
from bisetkit.errors import BudgetExceededError, StructureError
from bisetkit.models import CertificateKind, VerdictOutcome


def _odometer() -> WreathBiset:
    return as_wreath(CyclicBiset.regular(2))


def _lamination() -> WreathBiset:
    return basilica_lamination_fb().biset


def test_cycle_type_counts_fixed_points():
    assert cycle_type(np.array([1, 0, 2, 3])) == (2, 1, 1)
    assert cycle_type(np.array([1, 2, 0])) == (3,)


def test_odometer_is_transitive_on_every_level():
    levels = level_actions(_odometer(), 3)
    assert [level.points for level in levels] == [1, 2, 4, 8]
    t = _odometer().right_group.generator(0)
    assert levels[3].cycle_type(t) == (8,)
    assert levels[3].orbit_sizes() == (8,)
    assert levels[3].projects_to(levels[2])
    assert levels[2].projects_to(levels[1])


def test_lamination_biset_level_two_cycle_types():
    action = level_action(_lamination(), 2)
    assert action.cycle_types() == {"t": [4], "u": [2, 2]}
    summary = action.summary()
    assert summary.points == 4
    assert summary.orbit_sizes == [4]


def test_level_actions_need_a_self_biset():
    left = FpGroup.free_product([2], ["a"])
    right = FpGroup.free_product([3], ["b"])
    biset = WreathBiset(left, right, 1, (DecoratedPermutation.identity(left, 1),))
    with pytest.raises(StructureError):
        level_actions(biset, 1)
    with pytest.raises(ValueError):
        level_actions(_odometer(), -1)


def test_level_actions_respect_budget():
    with pytest.raises(BudgetExceededError) as excinfo:
        level_actions(_odometer(), 5, Budget(max_depth=4))
    assert excinfo.value.budget == "max_depth"
    with pytest.raises(BudgetExceededError) as excinfo:
        level_actions(_odometer(), 4, Budget(max_points=10))
    assert excinfo.value.requested == 16


def test_parallel_level_actions_match_serial():
    serial = level_actions(_lamination(), 3)
    parallel = level_actions(_lamination(), 3, jobs=2)
    for first, second in zip(serial, parallel):
        assert all(np.array_equal(a, b) for a, b in zip(first.perms, second.perms))


def test_approx_kernel_of_odometer_is_trivial():
    t = _odometer().right_group.generator(0)
    assert approx_kernel(_odometer(), 6, 3) == [t.group.identity()]
    assert [str(w) for w in approx_kernel(_odometer(), 0, 1)] == ["1", "t", "t^-1"]


def test_approx_kernel_of_trivial_action():
    group = FpGroup.free_product([2], ["a"])
    biset = WreathBiset.from_mapping(group, group, {"a": DecoratedPermutation.identity(group, 2)})
    assert [str(w) for w in approx_kernel(biset, 1, 1)] == ["1", "a"]


def test_approx_kernel_respects_word_budget():
    with pytest.raises(BudgetExceededError):
        approx_kernel(_odometer(), 2, 4, Budget(max_word_length=3))


def test_conjugacy_classes_of_odometer_merge_the_ball():
    classes = conj_classes_bounded(_odometer(), 1)
    assert classes.elements == 6
    assert classes.sizes == [6]
    assert classes.representatives == ["0"]


def test_conjugacy_classes_of_identity_biset():
    group = FpGroup.free_product([2], ["a"])
    classes = conj_classes_bounded(WreathBiset.identity(group), 1)
    assert classes.representatives == ["1", "a*1"]
    assert classes.sizes == [1, 1]


def test_quotient_orders_of_odometer_and_basilica():
    assert quotient_order(level_action(_odometer(), 2)) == 4
    assert quotient_order(level_action(_lamination(), 2)) == 8


def test_permutation_isomorphism_is_simultaneous_conjugacy():
    swap = np.array([1, 0, 2])
    other = np.array([0, 2, 1])
    assert permutation_isomorphic([swap], [other])
    assert not permutation_isomorphic([swap, swap], [swap, other])


def test_equivalence_distinguishes_doubling_from_basilica():
    verdict = equivalent_upto(_odometer(), _lamination(), 3, 2)
    assert verdict.outcome is VerdictOutcome.DISTINGUISHED
    certificate = verdict.certificate
    assert certificate is not None
    assert certificate.kind is CertificateKind.QUOTIENT_ORDER
    assert (certificate.level, certificate.left, certificate.right) == (2, "4", "8")
    assert verify_certificate(_odometer(), _lamination(), certificate)
    assert not verify_certificate(_lamination(), _odometer(), certificate)


def test_equivalence_certificate_for_degree_mismatch():
    cubic = as_wreath(CyclicBiset.regular(3))
    verdict = equivalent_upto(_odometer(), cubic, 2, 1)
    assert verdict.certificate is not None
    assert verdict.certificate.kind is CertificateKind.DEGREE
    assert verdict.summary() == "Distinguished: degree at level 0 (2 vs 3)"
    assert verify_certificate(_odometer(), cubic, verdict.certificate)


def test_equivalence_is_reflexive_and_basis_independent():
    verdict = equivalent_upto(_lamination(), _lamination(), 3, 1)
    assert verdict.outcome is VerdictOutcome.CONSISTENT
    assert verdict.summary() == "ConsistentUpTo(3, 1)"
    odometer = _odometer()
    t = odometer.left_group.generator(0)
    changed = change_basis(odometer, DecoratedPermutation((t, t.group.identity()), (0, 1)))
    assert not equivalent_upto(odometer, changed, 4, 1).distinguished


def _conjugated_by_automorphism(biset: WreathBiset, k: int) -> WreathBiset:
    group = biset.right_group
    x0, x1 = group.generators()
    phi = WreathBiset.from_homomorphism(Homomorphism(group, group, (x0, x1 * x0**k)))
    psi = WreathBiset.from_homomorphism(Homomorphism(group, group, (x0, x1 * x0**-k)))
    return tensor_wreath(tensor_wreath(psi, biset), phi)


def test_failed_matching_search_is_inconclusive():
    verdict = equivalent_upto(_lamination(), _lamination(), 3, 0)
    assert verdict.outcome is VerdictOutcome.INCONCLUSIVE
    assert not verdict.distinguished
    assert verdict.certificate is None
    assert verdict.search is not None
    assert not verdict.search.forward_found
    assert not verdict.search.backward_found
    assert verdict.search.candidates == {
        "forward:t": 0,
        "forward:u": 0,
        "backward:t": 0,
        "backward:u": 0,
    }
    assert verdict.summary() == "InconclusiveUpTo(3, 0): no forward and backward generator match"


def test_short_words_never_distinguish_conjugate_bisets():
    basilica = basilica_hubbard_fb().biset
    for k in (1, 2):
        conjugate = _conjugated_by_automorphism(basilica, k)
        short = equivalent_upto(basilica, conjugate, 4, 1)
        assert not short.distinguished
        assert short.certificate is None
        assert equivalent_upto(basilica, conjugate, 4, 2).outcome is VerdictOutcome.CONSISTENT


def test_equivalence_respects_word_budget():
    with pytest.raises(BudgetExceededError):
        equivalent_upto(_odometer(), _odometer(), 2, 3, Budget(max_word_length=2))


@pytest.mark.slow
def test_lamination_and_hubbard_tree_bisets_are_consistent():
    verdict = equivalent_upto(_lamination(), basilica_hubbard_fb().biset, 8, 3)
    assert verdict.summary() == "ConsistentUpTo(8, 3)"
    assert set(verdict.forward) == {"t", "u"}
    assert set(verdict.backward) == {"x0", "x1"}
