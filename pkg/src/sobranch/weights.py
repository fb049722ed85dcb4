"""Exact weight vectors, infinitesimal characters, and interlacing.

This is the arithmetic substrate for the whole package.  Half-integers are
stored doubled, so every value in this module is a plain Python integer and
every computation is exact; no floats appear anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .errors import (
    NotMonotoneError,
    NotSelfDualError,
    OutOfRangeError,
    RankMismatchError,
    SingularInfCharError,
    WrongRankError,
)

_GROUP_RE = re.compile(r"SO\(\s*(\d+)\s*,\s*1\s*\)")


@dataclass(frozen=True, order=True)
class GroupTag:
    """The Lorentz group SO(N,1); its rank-one subgroup is SO(N-1,1)."""

    N: int

    def __post_init__(self) -> None:
        if self.N < 2:
            raise OutOfRangeError(f"SO({self.N},1) not supported; need N >= 2")

    @property
    def n(self) -> int:
        """Dimension parameter of the maximal compact part, n = N - 1."""
        return self.N - 1

    @property
    def rank(self) -> int:
        """Number of entries of a highest weight / theta-weight for SO(N,1)."""
        return (self.N + 1) // 2

    @property
    def top_height(self) -> int:
        """Largest height, attained exactly by the tempered parameters."""
        return self.N // 2

    @property
    def is_even(self) -> bool:
        return self.N % 2 == 0

    @property
    def algebra_type(self) -> str:
        """Type of the complexified algebra so(N+1,C): D for N odd, B for N even."""
        return "D" if self.N % 2 == 1 else "B"

    @property
    def subgroup(self) -> "GroupTag":
        return GroupTag(self.N - 1)

    @staticmethod
    def parse(text: str) -> "GroupTag":
        m = _GROUP_RE.fullmatch(text.strip())
        if m is None:
            raise OutOfRangeError(f"cannot parse group {text!r}; expected 'SO(N,1)'")
        return GroupTag(int(m.group(1)))

    def __str__(self) -> str:
        return f"SO({self.N},1)"


@dataclass(frozen=True, order=True)
class Weight:
    """Weakly decreasing vector of nonnegative integers."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        e = self.entries
        if any(not isinstance(x, int) for x in e):
            raise NotMonotoneError(f"weight entries must be integers: {e}")
        if any(x < 0 for x in e):
            raise NotMonotoneError(f"weight entries must be nonnegative: {e}")
        if any(e[k] < e[k + 1] for k in range(len(e) - 1)):
            raise NotMonotoneError(f"weight entries must be weakly decreasing: {e}")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)

    @staticmethod
    def from_json(data: Sequence[int]) -> "Weight":
        return Weight(tuple(int(x) for x in data))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def zero_weight(rank: int) -> Weight:
    return Weight((0,) * rank)


@dataclass(frozen=True)
class InfChar:
    """Regular integral infinitesimal character, stored as doubled entries.

    ``doubled`` holds twice the Harish-Chandra parameter entries, sorted
    strictly decreasing; ``half_odd`` records whether the true entries are
    half-odd-integers (doubled entries odd) or integers (doubled even).
    """

    doubled: tuple[int, ...]
    half_odd: bool

    def __post_init__(self) -> None:
        d = self.doubled
        if any(d[k] <= d[k + 1] for k in range(len(d) - 1)):
            raise SingularInfCharError(f"entries must be strictly decreasing: {d}")
        want = 1 if self.half_odd else 0
        if any(x % 2 != want for x in d):
            raise SingularInfCharError(f"entries must share one parity: {d}")

    @staticmethod
    def from_doubled(values: Sequence[int]) -> "InfChar":
        ordered = tuple(sorted(values, reverse=True))
        for k in range(len(ordered) - 1):
            if ordered[k] == ordered[k + 1]:
                raise SingularInfCharError(
                    f"infinitesimal character is singular: repeated entry {ordered[k]}/2"
                )
        half_odd = bool(ordered and ordered[0] % 2)
        return InfChar(ordered, half_odd)

    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def to_json(self) -> dict:
        return {"doubled": list(self.doubled), "half_odd": self.half_odd}

    @staticmethod
    def from_json(data: dict) -> "InfChar":
        return InfChar(tuple(int(x) for x in data["doubled"]), bool(data["half_odd"]))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries()) + ")"


def validate_weight(
    entries: Sequence[int], group: GroupTag, assumption_a: bool = True
) -> Weight:
    """Check a weight vector against the conventions for SO(N,1).

    The vector must have rank (N+1)//2 and be weakly decreasing and
    nonnegative.  With ``assumption_a`` set and N odd, the trailing entry
    must vanish (self-duality of the finite-dimensional anchor); for N even
    there is no extra constraint.
    """
    w = Weight(tuple(int(x) for x in entries))
    if w.rank != group.rank:
        raise WrongRankError(
            f"weight {w} has rank {w.rank}, but {group} needs rank {group.rank}"
        )
    if assumption_a and not group.is_even and w.entries[-1] != 0:
        raise NotSelfDualError(
            f"weight {w} for {group}: trailing entry must vanish when N is odd"
        )
    return w


def infchar_finite_dim(group: GroupTag, s: Weight) -> InfChar:
    """Infinitesimal character of the finite-dimensional module with weight s.

    Entry j (1-based) is s_j + n/2 + 1 - j.  Regularity is automatic for a
    weakly decreasing weight, and asserted.
    """
    s = validate_weight(s.entries, group)
    n = group.n
    doubled = [2 * s.entries[j] + n + 2 - 2 * (j + 1) for j in range(group.rank)]
    return InfChar.from_doubled(doubled)


def infchar_principal_series(group: GroupTag, sigma: Weight, lam: int) -> InfChar:
    """Infinitesimal character of the principal series induced from (sigma, lam).

    The multiset is {sigma_k + n/2 - k : k = 1..floor(n/2)} together with
    |lam - n/2|, taken modulo the Weyl group (sign changes and permutations).
    A coincidence raises SingularInfCharError: such lam sit on a
    reducibility wall and are excluded from the classification.
    """
    n = group.n
    if sigma.rank != n // 2:
        raise WrongRankError(
            f"sigma {sigma} has rank {sigma.rank}; {group} needs rank {n // 2}"
        )
    doubled = [2 * sigma.entries[k] + n - 2 * (k + 1) for k in range(sigma.rank)]
    doubled.append(abs(2 * lam - n))
    return InfChar.from_doubled(doubled)


def interlaces(mu: Weight, nu: Weight) -> bool:
    """Alternating chain mu_1 >= nu_1 >= mu_2 >= nu_2 >= ... to the end.

    Ranks must satisfy rank(nu) in {rank(mu), rank(mu)-1}.  With equal ranks
    the chain ends ... >= mu_p >= nu_p (>= 0 automatically); with
    rank(nu) = rank(mu)-1 it ends ... >= nu_{p-1} >= mu_p.
    """
    p = mu.rank
    q = nu.rank
    if q not in (p, p - 1):
        raise RankMismatchError(
            f"rank(nu)={q} must be rank(mu)={p} or {p - 1} for interlacing"
        )
    for k in range(q):
        if nu.entries[k] > mu.entries[k]:
            return False
        if k + 1 < p and nu.entries[k] < mu.entries[k + 1]:
            return False
    return True


def enumerate_interlacing(mu: Weight, target_rank: int) -> Iterator[Weight]:
    """Yield every nu of the given rank interlacing mu, lexicographically decreasing.

    Entry k ranges independently over [lower_k, upper_k] with upper_k = mu_k
    and lower_k = mu_{k+1} (0 beyond the end of mu), so the stream has
    exactly prod_k (upper_k - lower_k + 1) elements.
    """
    p = mu.rank
    if target_rank not in (p, p - 1):
        raise RankMismatchError(
            f"target rank {target_rank} must be {p} or {p - 1} for mu of rank {p}"
        )
    ranges = []
    for k in range(target_rank):
        upper = mu.entries[k]
        lower = mu.entries[k + 1] if k + 1 < p else 0
        ranges.append(range(upper, lower - 1, -1))
    for combo in product(*ranges):
        yield Weight(combo)


def count_interlacing(mu: Weight, target_rank: int) -> int:
    """Closed-form size of the enumerate_interlacing stream."""
    p = mu.rank
    if target_rank not in (p, p - 1):
        raise RankMismatchError(
            f"target rank {target_rank} must be {p} or {p - 1} for mu of rank {p}"
        )
    total = 1
    for k in range(target_rank):
        lower = mu.entries[k + 1] if k + 1 < p else 0
        total *= mu.entries[k] - lower + 1
    return total


def weyl_dim(N: int, lam: Sequence[int], chirality: str | None = None) -> int:
    """Exact dimension of the irreducible SO(N) module with highest weight lam.

    Product formula over the positive roots of types B (N odd) and D (N even),
    evaluated in big-integer rational arithmetic.  For N even the last entry
    may be negative, or a chirality sign may be passed alongside a nonnegative
    vector; the two mirror-image modules have equal dimension.
    """
    if N < 1:
        raise OutOfRangeError(f"weyl_dim needs N >= 1, got {N}")
    if chirality not in (None, "+", "-"):
        raise OutOfRangeError(f"chirality must be '+' or '-', got {chirality!r}")
    if chirality is not None and N % 2 == 1:
        raise OutOfRangeError("chirality flag only applies to even N")
    rank = N // 2
    lam = tuple(int(x) for x in lam)
    if len(lam) != rank:
        raise WrongRankError(f"SO({N}) weight needs rank {rank}, got {len(lam)}")
    if rank == 0:
        return 1
    body, last = lam[:-1], abs(lam[-1])
    lam = body + (last,)
    if any(x < 0 for x in body) or any(
        lam[k] < lam[k + 1] for k in range(rank - 1)
    ):
        raise NotMonotoneError(f"SO({N}) weight must be weakly decreasing: {lam}")

    if N % 2 == 1:
        # Type B: doubled coordinates l_i = 2(lam_i + rank - i) + 1 stay integral.
        ell = [2 * (lam[i] + rank - 1 - i) + 1 for i in range(rank)]
        rho = [2 * (rank - 1 - i) + 1 for i in range(rank)]
        dim = Fraction(1)
        for i in range(rank):
            dim *= Fraction(ell[i], rho[i])
            for j in range(i + 1, rank):
                dim *= Fraction(ell[i] ** 2 - ell[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    else:
        # Type D: l_i = lam_i + rank - i; short-root factor absent.
        ell = [lam[i] + rank - 1 - i for i in range(rank)]
        rho = [rank - 1 - i for i in range(rank)]
        dim = Fraction(1)
        for i in range(rank):
            for j in range(i + 1, rank):
                dim *= Fraction(ell[i] ** 2 - ell[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)
