"""Shared brute-force oracles, independent of the package's code paths.

These deliberately re-derive answers by exhaustive enumeration or classical
closed forms so that test failures localize bugs: the library computes one
way, the oracle another.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial

from sobranch import GroupTag, Weight


def brute_interlacing(mu: tuple[int, ...], target_rank: int) -> list[tuple[int, ...]]:
    """All nu of the given rank with mu_1 >= nu_1 >= mu_2 >= ... by raw filtering."""
    bound = mu[0] if mu else 0
    out = []
    for nu in product(range(bound, -1, -1), repeat=target_rank):
        ok = True
        for k in range(target_rank):
            if nu[k] > mu[k]:
                ok = False
                break
            if k + 1 < len(mu) and nu[k] < mu[k + 1]:
                ok = False
                break
        if ok:
            out.append(nu)
    return out


def so3_dim(a: int) -> int:
    return 2 * a + 1


def so4_dim(a: int, b: int) -> int:
    # so(4) = sl(2) x sl(2); highest weight (a, b) with a >= |b|
    return (a + b + 1) * (a - b + 1)


def so5_dim(a: int, b: int) -> int:
    return (a - b + 1) * (a + b + 2) * (2 * a + 3) * (2 * b + 1) // 6


def recursive_so_dim(N: int, lam: tuple[int, ...]) -> int:
    """Dimension of the SO(N) module by restricting all the way down to SO(2).

    Uses the classical one-step rule re-implemented here by brute filtering,
    so it shares no code with the package's product formula.
    """
    k = N // 2
    assert len(lam) == k
    if N <= 2:
        return 1
    if N % 2 == 1:
        # nu_i in [mu_{i+1}, mu_i], last entry signed within [-mu_k, mu_k]
        ranges = [range(lam[i], lam[i + 1] - 1, -1) for i in range(k - 1)]
        ranges.append(range(lam[k - 1], -lam[k - 1] - 1, -1))
    else:
        body = lam[:-1] + (abs(lam[-1]),)
        ranges = [range(body[i], body[i + 1] - 1, -1) for i in range(k - 1)]
    return sum(recursive_so_dim(N - 1, nu) for nu in product(*ranges))


def period_formula(n: int, i: int) -> tuple[int, Fraction, int]:
    """(sign, rational, quarter power) by direct substitution in the closed form."""
    quarters = i * (2 * n - i - 1)
    lead = Fraction(1, factorial(n - i) ** (i - 1)) if i >= 1 else Fraction(factorial(n))
    if 2 * i < n + 1:
        value = lead / factorial(n - 2 * i)
        sign = 1
    else:
        value = lead * factorial(2 * i - n - 1)
        sign = (-1) ** (n + 1)
    return sign, abs(value), quarters


def theta_weights(group: GroupTag, max_entry: int) -> list[Weight]:
    """Exhaustive theta-weight grid, independent of the package's generator."""
    free = group.rank if group.is_even else group.rank - 1
    out = []
    for combo in product(range(max_entry, -1, -1), repeat=free):
        if all(combo[i] >= combo[i + 1] for i in range(free - 1)):
            entries = combo if group.is_even else combo + (0,)
            out.append(Weight(entries))
    return out
