import itertools
import math

import numpy as np
import pytest

from mixvol.errors import CapacityError, DimensionMismatchError, ParameterError
from mixvol.schemas.reports import EqualityCase
from mixvol.services.matrix_core import SymMatrix, psd_from_rng, random_invertible
from mixvol.services.mixed_discriminant import (
    MatArgs,
    md_incl_excl,
    md_perm,
    md_reduced_pattern,
    mixed_discriminant_of_arrays,
    thm1_check,
)


class TestMatArgs:
    """Tests for the argument multiset"""

    def test_multiplicities_must_sum_to_dim(self, identity3):
        with pytest.raises(ParameterError):
            MatArgs(((identity3, 2),))

    def test_zero_multiplicities_are_dropped(self, identity3):
        args = MatArgs(((identity3, 3), (SymMatrix.zeros(3), 0)))
        assert len(args.items) == 1
        assert len(args.expanded()) == 3

    def test_negative_multiplicity(self, identity3):
        with pytest.raises(ParameterError):
            MatArgs(((identity3, 4), (identity3, -1)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            MatArgs.of(SymMatrix.identity(2), SymMatrix.identity(3))


class TestMixedDiscriminant:
    """Tests for both discriminant algorithms"""

    def test_determinant_of_repeated_matrix(self):
        m = SymMatrix([[2.0, 1.0], [1.0, 3.0]])
        args = MatArgs(((m, 2),))
        assert md_perm(args) == pytest.approx(5.0)
        assert md_incl_excl(args) == pytest.approx(5.0)
        assert md_incl_excl(args, grouped=True) == pytest.approx(5.0)

    def test_diagonal_pair(self):
        args = MatArgs.of(SymMatrix.diag([1.0, 2.0]), SymMatrix.diag([3.0, 5.0]))
        # (a1·b2 + a2·b1)/2
        assert md_perm(args) == pytest.approx((5.0 + 6.0) / 2.0)

    def test_identity_slots_give_trace(self, rng):
        x = psd_from_rng(rng, 4, 4)
        args = MatArgs(((x, 1), (SymMatrix.identity(4), 3)))
        assert md_incl_excl(args) == pytest.approx(np.trace(x.entries) / 4.0)

    def test_algorithms_agree(self, rng):
        for n in range(2, 6):
            ranks = rng.integers(1, n + 1, size=n)
            mats = [psd_from_rng(rng, n, int(k)) for k in ranks]
            args = MatArgs.of(*mats)
            perm = md_perm(args)
            assert md_incl_excl(args) == pytest.approx(perm, rel=1e-9, abs=1e-9)
            assert md_incl_excl(args, grouped=True) == pytest.approx(
                perm, rel=1e-9, abs=1e-9
            )

    def test_psd_arguments_give_non_negative_values(self, rng):
        mats = [psd_from_rng(rng, 4, 2) for _ in range(4)]
        assert md_incl_excl(MatArgs.of(*mats)) >= -1e-12

    def test_multilinear_in_each_slot(self, rng):
        a, b, c = (psd_from_rng(rng, 3, 3) for _ in range(3))
        left = md_perm(MatArgs.of(a + b, c, c))
        right = md_perm(MatArgs.of(a, c, c)) + md_perm(MatArgs.of(b, c, c))
        assert left == pytest.approx(right)

    def test_permutation_capacity(self):
        args = MatArgs(((SymMatrix.identity(9), 9),))
        with pytest.raises(CapacityError):
            md_perm(args)
        assert md_incl_excl(args) == pytest.approx(1.0)

    def test_arrays_non_symmetric(self):
        mats = [np.array([[1.0, 2.0], [0.0, 1.0]]), np.eye(2)]
        value = mixed_discriminant_of_arrays(mats, method="incl_excl")
        assert value == pytest.approx(mixed_discriminant_of_arrays(mats))

    @pytest.mark.parametrize("method", ["perm", "incl_excl"])
    def test_left_multiplication_scales_by_det(self, rng, method):
        mats = [rng.standard_normal((4, 4)) for _ in range(4)]
        b = random_invertible(rng, 4)

        moved = mixed_discriminant_of_arrays([b @ a for a in mats], method=method)
        expected = np.linalg.det(b) * mixed_discriminant_of_arrays(mats, method=method)
        assert moved == pytest.approx(expected, rel=1e-9, abs=1e-9)

    def test_symmetric_in_its_slots(self, rng):
        mats = [rng.standard_normal((4, 4)) for _ in range(4)]
        reference = mixed_discriminant_of_arrays(mats)
        for order in itertools.permutations(range(4)):
            value = mixed_discriminant_of_arrays([mats[i] for i in order])
            assert value == pytest.approx(reference, rel=1e-9, abs=1e-12)

    def test_arrays_unknown_method(self):
        with pytest.raises(ParameterError):
            mixed_discriminant_of_arrays([np.eye(2), np.eye(2)], method="lu")

    def test_reduced_pattern(self):
        x, y = SymMatrix.diag([1.0, 2.0, 3.0]), SymMatrix.diag([1.0, 0.0, 0.0])
        dx, dy, dxy = md_reduced_pattern(x, y)
        assert dx == pytest.approx(2.0)
        assert dy == pytest.approx(1.0 / 3.0)
        expected = md_perm(MatArgs(((x, 1), (y, 1), (SymMatrix.identity(3), 1))))
        assert dxy == pytest.approx(expected)


class TestThm1Check:
    """Tests for the mixed-discriminant inequality"""

    def test_strict_instance(self, identity3):
        report = thm1_check(identity3, identity3, identity3)

        assert report.lhs == pytest.approx(1.0)
        assert report.rhs == pytest.approx(2.0 / 3.0)
        assert not report.equality
        assert report.equality_case == EqualityCase.strict
        assert report.consistent
        assert report.trace_identity_residual == pytest.approx(0.0, abs=1e-12)

    def test_case_i(self):
        report = thm1_check(
            SymMatrix.diag([1.0, 0.0]),
            SymMatrix.diag([0.0, 1.0]),
            SymMatrix.identity(2),
        )
        assert report.lhs == pytest.approx(0.25)
        assert report.equality
        assert report.equality_case == EqualityCase.case_i

    def test_case_ii(self, identity3):
        report = thm1_check(identity3, identity3, SymMatrix.diag([1.0, 0.0, 0.0]))
        assert report.equality
        assert report.equality_case == EqualityCase.case_ii
        assert report.trace_identity_residual is None

    def test_case_iii(self, identity3):
        report = thm1_check(
            SymMatrix.diag([1.0, 0.0, 0.0]),
            identity3,
            SymMatrix.diag([1.0, 1.0, 0.0]),
        )
        assert report.equality
        assert report.equality_case == EqualityCase.case_iii
        assert report.rank_a3 == 2

    def test_random_triples_hold(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 6))
            a1, a2, a3 = (psd_from_rng(rng, n, n) for _ in range(3))
            report = thm1_check(a1, a2, a3)
            assert report.gap >= -1e-8 * max(1.0, abs(report.lhs))
            assert report.consistent
            residual = report.trace_identity_residual
            assert residual <= 1e-6 * max(1.0, abs(report.lhs), abs(report.rhs))

    def test_requires_n_at_least_two(self):
        one = SymMatrix.identity(1)
        with pytest.raises(ParameterError):
            thm1_check(one, one, one)

    def test_constant_is_sharp(self):
        # (n-1)/n reached by case (i) for every n
        for n in range(2, 6):
            e1 = np.zeros(n)
            e1[0] = 1.0
            e2 = np.zeros(n)
            e2[1] = 1.0
            report = thm1_check(
                SymMatrix.diag(e1), SymMatrix.diag(e2), SymMatrix.identity(n)
            )
            assert report.lhs == pytest.approx(1.0 / n**2)
            assert report.rhs == pytest.approx((n - 1) / n * 1.0 / (n * (n - 1)))
            assert math.isclose(report.gap, 0.0, abs_tol=1e-12)
