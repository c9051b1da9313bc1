"""Radical extensions, saturation, the grading action and classification."""

import itertools
import random

import pytest
from conftest import (c2_in_c4_action, c2_in_c6_action, c3_in_c6_action, e1_action,
                      e2_action, global_regular_action, induced_rotation)

from pkummer import (Character, FinAbGroup, KummerData, NotSaturatedError,
                     PhiNotLinearError, RankNotOneError, SplitAlgebra, Subspace,
                     build_radical, i_radical, i_radical_to_radical, is_saturated,
                     mu_action, parametrize, verify_lambda_iso)
from pkummer.radical import mu_invariants_are_base


def free_extension(modulus, phi=1, n=4):
    algebra = SplitAlgebra(n, 1)
    base = Subspace.full(algebra)
    return build_radical(base, base, modulus, phi)


def two_block_extension(modulus):
    algebra = SplitAlgebra(4, 4)
    base = Subspace.span(algebra, [algebra.element([1, 1, 0, 0]),
                                   algebra.element([0, 0, 1, 1])])
    return build_radical(base, base, modulus, algebra.one())


# -- construction ---------------------------------------------------------------------

def test_free_rank_one_power_algebra():
    # phi(u^4) = 1 gives the K[x]/(x^4 - 1) multiplication table
    ext = free_extension(4)
    one = ext.algebra.one()
    q = [ext.homogeneous(i, one) for i in range(4)]
    assert q[3] * q[1] == ext.one()
    assert q[1] * q[1] == q[2]


def test_nontrivial_contraction_scales_the_wraparound():
    ext = free_extension(4, phi=3)
    one = ext.algebra.one()
    wrapped = ext.homogeneous(3, one) * ext.homogeneous(1, one)
    assert wrapped == ext.homogeneous(0, ext.algebra.scalar(3))


def test_two_block_extension_is_blockwise_free():
    ext = two_block_extension(5)
    left = ext.algebra.indicator({0, 1})
    right = ext.algebra.indicator({2, 3})
    x = ext.homogeneous(3, left) * ext.homogeneous(2, left)
    assert x == ext.homogeneous(0, left)
    assert (ext.homogeneous(3, left) * ext.homogeneous(2, right)).is_zero()


def test_axioms_checked_exhaustively():
    for m in range(2, 7):
        assert free_extension(m).check_algebra_axioms()
    assert two_block_extension(6).check_algebra_axioms()


def test_rank_error_for_partial_support_module():
    algebra = SplitAlgebra(4, 2)
    base = Subspace.span(algebra, [algebra.one()])
    q = Subspace.span(algebra, [algebra.idempotent(0)])
    with pytest.raises(RankNotOneError):
        build_radical(base, q, 3, 1)


def test_phi_must_land_in_the_base():
    algebra = SplitAlgebra(4, 2)
    base = Subspace.span(algebra, [algebra.one()])
    with pytest.raises(PhiNotLinearError):
        build_radical(base, base, 3, algebra.idempotent(0))


# -- the graded product ------------------------------------------------------------------

def test_one_is_neutral():
    ext = free_extension(4)
    x = ext.homogeneous(2, ext.algebra.scalar(7))
    assert ext.one() * x == x


def test_wraparound_degree():
    ext = free_extension(4)
    one = ext.algebra.one()
    # 2 + 3 = 5 = 4 + 1
    assert ext.homogeneous(2, one) * ext.homogeneous(3, one) == ext.homogeneous(1, one)


def test_distributivity_on_random_elements():
    rng = random.Random(19)
    ext = two_block_extension(4)
    algebra = ext.algebra

    def rand_elem():
        out = ext.zero()
        for i in range(4):
            coeff = (algebra.indicator({0, 1}) * rng.randint(-2, 2)
                     + algebra.indicator({2, 3}) * rng.randint(-2, 2))
            out = out + ext.homogeneous(i, coeff)
        return out

    for _ in range(10):
        x, y, z = rand_elem(), rand_elem(), rand_elem()
        assert x * (y + z) == x * y + x * z


# -- saturation -------------------------------------------------------------------------------

def test_saturation_examples():
    assert is_saturated({0}, 4)
    assert is_saturated(set(range(4)), 4)
    assert is_saturated({0, 2}, 4)
    assert not is_saturated({0, 1, 3}, 4)  # 1 + 1 = 2 is missing
    assert not is_saturated({1, 2}, 4)
    assert not is_saturated(set(), 4)


def test_saturation_iff_subalgebra_exhaustive():
    for m in range(2, 7):
        ext = free_extension(m)
        for size in range(0, m + 1):
            for subset in itertools.combinations(range(m), size):
                ir = i_radical(ext, subset)
                basis = ir.carrier_basis()
                closed = bool(subset) and all(
                    ir.contains(x * y) for x in basis for y in basis)
                has_unit = 0 in subset
                assert ir.is_subalgebra == (closed and has_unit) == \
                    is_saturated(subset, m)


def test_saturation_iff_subalgebra_with_blocks():
    ext = two_block_extension(6)
    for size in range(0, 7):
        for subset in itertools.combinations(range(6), size):
            ir = i_radical(ext, subset)
            basis = ir.carrier_basis()
            closed = bool(subset) and all(
                ir.contains(x * y) for x in basis for y in basis)
            assert ir.is_subalgebra == (closed and 0 in subset)


def test_even_part_is_a_square_root_algebra():
    # degrees {0, 2} of the m = 4 free extension: s = u^2, s * s = 1
    ext = free_extension(4)
    ir = i_radical(ext, {0, 2})
    assert ir.is_subalgebra
    s = ext.homogeneous(2, ext.algebra.one())
    assert s * s == ext.one()


def test_non_saturated_carrier_is_only_a_module():
    ext = free_extension(4)
    ir = i_radical(ext, {1, 2})
    assert not ir.is_subalgebra


def test_full_carrier_is_everything():
    ext = free_extension(4)
    ir = i_radical(ext, range(4))
    assert ir.is_subalgebra and len(ir.carrier_basis()) == 4


# -- re-expressing saturated carriers ------------------------------------------------------------

def test_degree_zero_reduces_to_the_base():
    ext = free_extension(4)
    der = i_radical_to_radical(ext, {0})
    assert der.modulus == 1
    assert der.one() * der.one() == der.one()


def test_even_part_becomes_modulus_two():
    ext = free_extension(4)
    der = i_radical_to_radical(ext, {0, 2})
    assert der.modulus == 2
    assert der.contraction == ext.contraction
    assert der.gen == ext.gen * ext.gen


def test_full_set_reproduces_the_extension():
    ext = free_extension(4)
    der = i_radical_to_radical(ext, range(4))
    assert der.modulus == 4 and der.contraction == ext.contraction


def test_non_saturated_rejected():
    with pytest.raises(NotSaturatedError):
        i_radical_to_radical(free_extension(4), {1, 2})


# -- the grading action -----------------------------------------------------------------------------

def test_identity_acts_trivially():
    ext = free_extension(4)
    chi = Character.from_generator_exponent(FinAbGroup.cyclic(4), 4, 1)
    x = ext.homogeneous(1, ext.algebra.one())
    assert mu_action(ext, chi, (0,), x) == x


def test_degree_zero_is_fixed():
    ext = free_extension(4)
    chi = Character.from_generator_exponent(FinAbGroup.cyclic(4), 4, 1)
    x = ext.homogeneous(0, ext.algebra.scalar(5))
    assert mu_action(ext, chi, (1,), x) == x


def test_generator_scales_degree_one():
    ext = free_extension(4)
    chi = Character.from_generator_exponent(FinAbGroup.cyclic(4), 4, 1)
    q = ext.homogeneous(1, ext.algebra.one())
    assert mu_action(ext, chi, (1,), q) == q * ext.algebra.omega()
    assert mu_invariants_are_base(ext, chi)


# -- multiplication map onto S ------------------------------------------------------------------------

def test_lambda_iso_on_extension_by_zero_fixtures():
    kd = KummerData.build(c3_in_c6_action())
    assert verify_lambda_iso(kd, (0, 2, 4))
    kd2 = KummerData.build(c2_in_c6_action())
    assert verify_lambda_iso(kd2, (0, 3))


def test_lambda_iso_on_global_instance():
    kd = KummerData.build(global_regular_action(4))
    assert verify_lambda_iso(kd, (0, 1, 2, 3))


def test_lambda_fails_on_non_spanning_subset():
    kd = KummerData.build(c3_in_c6_action())
    assert not verify_lambda_iso(kd, (0,))


# -- classification ----------------------------------------------------------------------------------

def test_e1_not_parametrizable():
    record = parametrize(KummerData.build(e1_action()))
    assert record.verdict == "not parametrizable by any I-radical extension"
    assert record.direct_subsets == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    assert record.saturated_reports == ()
    assert record.ext_by_zero_subgroup is None


def test_e2_not_parametrizable():
    record = parametrize(KummerData.build(e2_action()))
    assert record.verdict == "not parametrizable by any I-radical extension"
    assert len(record.direct_subsets) == 10
    assert record.saturated_reports == ()


def test_c2_in_c4_is_global_2_kummerian():
    record = parametrize(KummerData.build(c2_in_c4_action()))
    assert record.verdict == "global 2-kummerian via H = <g^2>"
    assert record.ext_by_zero_subgroup == ((0,), (2,))
    checks = record.theorem_checks
    assert checks.invariants_chain and checks.rank_equals_order and checks.extension_by_zero
    # the subgroup {0, 2} of exponents is never a direct subset here: the
    # modules of the trivial character and its square coincide
    assert (0, 2) not in record.direct_subsets


def test_c3_in_c6_has_a_saturated_direct_subset():
    record = parametrize(KummerData.build(c3_in_c6_action()))
    assert record.verdict == "global 3-kummerian via H = <g^2>"
    assert len(record.saturated_reports) == 1
    report = record.saturated_reports[0]
    assert report.subset == (0, 2, 4)
    assert report.subgroup == ((0,), (2,), (4,))
    assert report.matches_extension_by_zero
    assert report.lambda_is_graded_algebra_iso


def test_global_action_classifies_as_global():
    record = parametrize(KummerData.build(global_regular_action(4)))
    assert record.verdict == "global 4-kummerian via H = <g>"
    assert record.saturated_reports[0].subset == (0, 1, 2, 3)
    assert record.saturated_reports[0].lambda_is_graded_algebra_iso


def test_saturated_direct_subset_without_extension_by_zero():
    # the induced C4 action on two components decomposes S directly over the
    # exponents {0, 2} although its nonzero domains {e, g, g^3} are not a
    # subgroup: the subset-level and action-level classifications genuinely
    # diverge, and the record keeps both facts
    act = induced_rotation(4, (0, 1))
    record = parametrize(KummerData.build(act))
    assert act.is_extension_by_zero() is None
    assert record.verdict == "not parametrizable by any I-radical extension"
    saturated = [r for r in record.saturated_reports if r.subset == (0, 2)]
    assert len(saturated) == 1
    assert saturated[0].lambda_is_graded_algebra_iso
    assert not saturated[0].matches_extension_by_zero
