from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sobranch import (
    GroupTag,
    InfChar,
    Weight,
    enumerate_interlacing,
    infchar_finite_dim,
    infchar_principal_series,
    interlaces,
    validate_weight,
    weyl_dim,
)
from sobranch.errors import (
    NotMonotoneError,
    NotSelfDualError,
    OutOfRangeError,
    RankMismatchError,
    SingularInfCharError,
    WrongRankError,
)
from sobranch.weights import count_interlacing

from conftest import brute_interlacing, recursive_so_dim, so3_dim, so4_dim, so5_dim


def W(*entries):
    return Weight(tuple(entries))


class TestGroupTag:
    def test_parse_and_str(self):
        g = GroupTag.parse("SO(5,1)")
        assert g.N == 5 and str(g) == "SO(5,1)"

    def test_derived_quantities(self):
        g = GroupTag(5)
        assert (g.n, g.rank, g.top_height, g.algebra_type) == (4, 3, 2, "D")
        g = GroupTag(4)
        assert (g.n, g.rank, g.top_height, g.algebra_type) == (3, 2, 2, "B")

    def test_rejects_small_n(self):
        with pytest.raises(OutOfRangeError):
            GroupTag(1)
        with pytest.raises(OutOfRangeError):
            GroupTag.parse("SO(2,2)")


class TestValidateWeight:
    def test_zero_weight(self):
        assert validate_weight((0, 0, 0), GroupTag(5)) == W(0, 0, 0)

    def test_self_dual_ok(self):
        assert validate_weight((1, 1, 0), GroupTag(5)) == W(1, 1, 0)

    def test_not_self_dual(self):
        with pytest.raises(NotSelfDualError):
            validate_weight((1, 1, 1), GroupTag(5))

    def test_assumption_a_optional(self):
        w = validate_weight((1, 1, 1), GroupTag(5), assumption_a=False)
        assert w == W(1, 1, 1)

    def test_even_group_free_last_entry(self):
        assert validate_weight((2, 1), GroupTag(4)) == W(2, 1)

    def test_rejects_bad_shapes(self):
        with pytest.raises(WrongRankError):
            validate_weight((1, 0), GroupTag(5))
        with pytest.raises(NotMonotoneError):
            validate_weight((0, 1, 0), GroupTag(5))
        with pytest.raises(NotMonotoneError):
            validate_weight((1, 0, -1), GroupTag(5))


class TestInfChar:
    def test_rho_so51(self):
        assert infchar_finite_dim(GroupTag(5), W(0, 0, 0)).entries() == (2, 1, 0)

    def test_rho_so41(self):
        got = infchar_finite_dim(GroupTag(4), W(0, 0))
        assert got.entries() == (Fraction(3, 2), Fraction(1, 2))
        assert got.half_odd

    def test_shifted(self):
        assert infchar_finite_dim(GroupTag(5), W(1, 1, 0)).entries() == (3, 2, 0)

    def test_rho_matches_halved_ladder_up_to_20(self):
        # rho = (n/2, n/2 - 1, ..., n/2 - floor(n/2)) for every group
        for N in range(2, 21):
            g = GroupTag(N)
            rho = infchar_finite_dim(g, Weight((0,) * g.rank))
            n = g.n
            expected = tuple(Fraction(n, 2) - j for j in range(n // 2 + 1))
            assert rho.entries() == expected

    def test_principal_series_examples(self):
        g = GroupTag(5)
        assert infchar_principal_series(g, W(1, 0), 1).entries() == (2, 1, 0)
        assert infchar_principal_series(g, W(0, 0), 0).entries() == (2, 1, 0)
        assert infchar_principal_series(g, W(2, 0), 0).entries() == (3, 2, 0)

    def test_principal_series_singular_wall(self):
        # lam = k - sigma_k gives a repeated entry
        with pytest.raises(SingularInfCharError):
            infchar_principal_series(GroupTag(5), W(1, 0), 0)

    def test_sigma_rank_checked(self):
        with pytest.raises(WrongRankError):
            infchar_principal_series(GroupTag(5), W(1, 0, 0), 1)

    def test_json_roundtrip(self):
        c = infchar_finite_dim(GroupTag(4), W(2, 1))
        assert InfChar.from_json(c.to_json()) == c


class TestInterlaces:
    def test_examples(self):
        assert interlaces(W(1, 0), W(1)) is True
        assert interlaces(W(0, 0), W(0)) is True
        assert interlaces(W(1, 0), W(2)) is False

    def test_equal_rank_chain(self):
        assert interlaces(W(3, 1), W(2, 0)) is True
        assert interlaces(W(3, 1), W(2, 2)) is False  # nu_2 > mu_2

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            interlaces(W(1, 0), W(1, 0, 0))


class TestEnumerateInterlacing:
    def test_examples(self):
        assert [w.entries for w in enumerate_interlacing(W(1, 0), 1)] == [(1,), (0,)]
        assert [w.entries for w in enumerate_interlacing(W(0, 0, 0), 2)] == [(0, 0)]
        assert [w.entries for w in enumerate_interlacing(W(1, 1, 0), 2)] == [(1, 1), (1, 0)]

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            list(enumerate_interlacing(W(1, 0), 3))

    @given(
        mu=st.lists(st.integers(0, 4), min_size=1, max_size=4),
        drop=st.booleans(),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_brute_force(self, mu, drop):
        mu = Weight(tuple(sorted(mu, reverse=True)))
        target = mu.rank - 1 if drop else mu.rank
        if target == 0:
            got = [w.entries for w in enumerate_interlacing(mu, 0)]
            assert got == [()]
            return
        got = [w.entries for w in enumerate_interlacing(mu, target)]
        assert got == brute_interlacing(mu.entries, target)
        # stream/decision agreement and the closed-form count
        assert all(interlaces(mu, Weight(nu)) for nu in got)
        assert len(got) == count_interlacing(mu, target)
        # lexicographically decreasing, no repeats
        assert got == sorted(set(got), reverse=True)


class TestWeylDim:
    def test_spot_values(self):
        assert weyl_dim(5, (1, 0)) == 5
        assert weyl_dim(5, (1, 1)) == 10
        assert weyl_dim(4, (1, 1), "+") == 3

    def test_small_rank_closed_forms(self):
        for a in range(5):
            assert weyl_dim(3, (a,)) == so3_dim(a)
        for a in range(4):
            for b in range(-a, a + 1):
                assert weyl_dim(4, (a, b)) == so4_dim(a, abs(b))
        for a in range(4):
            for b in range(a + 1):
                assert weyl_dim(5, (a, b)) == so5_dim(a, b)

    def test_fundamental_exterior_powers(self):
        from math import comb

        for N in range(2, 13):
            for k in range(1, (N - 1) // 2 + 1):
                lam = (1,) * k + (0,) * (N // 2 - k)
                assert weyl_dim(N, lam) == comb(N, k)

    def test_chirality_independent(self):
        assert weyl_dim(8, (2, 2, 1, 1)) == weyl_dim(8, (2, 2, 1, -1))
        assert weyl_dim(6, (3, 1, 1), "+") == weyl_dim(6, (3, 1, -1))

    def test_against_recursive_restriction(self):
        cases = [
            (5, (2, 1)),
            (6, (2, 1, 1)),
            (6, (2, 1, -1)),
            (7, (2, 2, 1)),
            (8, (1, 1, 1, 1)),
            (9, (2, 1, 1, 0)),
        ]
        for N, lam in cases:
            assert weyl_dim(N, lam) == recursive_so_dim(N, lam)

    def test_trivial_groups(self):
        assert weyl_dim(1, ()) == 1
        assert weyl_dim(2, (5,)) == 1

    def test_validation(self):
        with pytest.raises(WrongRankError):
            weyl_dim(5, (1, 0, 0))
        with pytest.raises(NotMonotoneError):
            weyl_dim(5, (0, 1))
        with pytest.raises(OutOfRangeError):
            weyl_dim(5, (1, 0), "+")  # chirality on odd N

    @given(
        n_half=st.integers(1, 4),
        entries=st.lists(st.integers(0, 3), min_size=4, max_size=4),
    )
    @settings(max_examples=60, deadline=None)
    def test_positive_integer(self, n_half, entries):
        lam = tuple(sorted(entries, reverse=True))[:n_half]
        for N in (2 * n_half, 2 * n_half + 1):
            assert weyl_dim(N, lam) >= 1
