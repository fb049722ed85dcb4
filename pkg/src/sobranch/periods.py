"""Periods, distinguished representations, and exact period values.

A pair (big, small) over adjacent groups carries a nonzero invariant
functional exactly when the branching decision accepts it.  Parameters with
an all-zero tail behind the bar are the cohomologically induced modules;
they are distinguished for a smaller Lorentz subgroup, witnessed here by an
explicit chain of one-step branchings.  For the family with most regular
behaviour the exact value of the period on the canonical vector of the
minimal K-type is a sign times a rational times a quarter-power of pi, and
is computed in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .branching import branch_enumerate, multiplicity
from .errors import BadTargetError, NotAqLambdaError, OutOfRangeError
from .reps import EnhancedParam, Signature
from .weights import GroupTag, Weight, binomial


@dataclass(frozen=True)
class AqDescriptor:
    """Cohomological induction data behind a parameter with all-zero tail.

    The parabolic index equals the height ``i``; the inducing degree is
    i(n-i), and the Levi factor is SO(2)^i x SO(n-2i+1,1).
    """

    group: GroupTag
    i: int
    lambda_part: Weight

    @property
    def inducing_degree(self) -> int:
        return self.i * (self.group.n - self.i)

    @property
    def levi(self) -> tuple[int, int]:
        """(number of SO(2) factors, M of the residual SO(M,1) factor)."""
        return (self.i, self.group.n - 2 * self.i + 1)

    def to_json(self) -> dict:
        so2, rest = self.levi
        return {
            "group": str(self.group),
            "i": self.i,
            "lambda": self.lambda_part.to_json(),
            "inducing_degree": self.inducing_degree,
            "levi": f"SO(2)^{so2} x SO({rest},1)",
        }


@dataclass(frozen=True)
class PeriodValue:
    """Exact value sign * rational * pi^(pi_quarters/4)."""

    sign: int
    rational: Fraction
    pi_quarters: int

    def __post_init__(self) -> None:
        assert self.sign in (1, -1)
        assert self.rational > 0

    def pretty(self) -> str:
        parts = []
        if self.rational != 1 or self.pi_quarters == 0:
            parts.append(str(self.rational))
        if self.pi_quarters != 0:
            q = Fraction(self.pi_quarters, 4)
            if q == 1:
                parts.append("π")
            elif q.denominator == 1:
                parts.append(f"π^{q.numerator}")
            else:
                parts.append(f"π^{{{q.numerator}/{q.denominator}}}")
        text = "·".join(parts)
        return f"-{text}" if self.sign < 0 else text

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "num": str(self.rational.numerator),
            "den": str(self.rational.denominator),
            "pi_quarters": self.pi_quarters,
            "pretty": self.pretty(),
        }


@dataclass(frozen=True)
class KTypeLabel:
    """Minimal K-type: the degree-``degree`` exterior power of C^ambient, trivial O(1) part."""

    degree: int
    ambient: int

    @property
    def dimension(self) -> int:
        return binomial(self.ambient, self.degree)

    def pretty(self) -> str:
        return f"Λ^{self.degree}(C^{self.ambient}) ⊠ 1"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "ambient": self.ambient,
            "dimension": self.dimension,
            "pretty": self.pretty(),
        }


def has_period(big: EnhancedParam, small: EnhancedParam) -> bool:
    """Whether the outer tensor product carries a nonzero invariant functional.

    At the parameter level this is the branching decision: same signature,
    height drop 0 or 1, interlacing theta-weights.
    """
    return multiplicity(big, small) == 1


def is_aq_lambda(e: EnhancedParam) -> Optional[AqDescriptor]:
    """Recognize parameters whose theta-weight vanishes behind the bar."""
    if any(x != 0 for x in e.s.entries[e.height :]):
        return None
    return AqDescriptor(e.group, e.height, Weight(e.s.entries[: e.height]))


def distinguished_subgroup(e: EnhancedParam) -> GroupTag:
    """The subgroup SO(n+1-height, 1) for which an all-zero-tail parameter is distinguished."""
    if is_aq_lambda(e) is None:
        raise NotAqLambdaError(f"{e} has nonzero entries behind the bar")
    return GroupTag(e.group.n + 1 - e.height)


def distinguishing_chain(
    big: EnhancedParam, target: GroupTag, psi: Signature
) -> Optional[list[EnhancedParam]]:
    """Depth-first search for a chain big -> ... -> chi_psi of the target group.

    Returns the full node path (starting at ``big``, ending at the
    one-dimensional parameter of sign ``psi`` on the target) with every
    consecutive multiplicity equal to 1, or None.  The search memoizes on
    the visited parameters and explores lexicographically largest weights
    first, so the witness is deterministic.  A chain certifies stepwise
    nonvanishing of each factor, not of the composed functional.
    """
    if psi is Signature.BOTH:
        raise BadTargetError("psi must be a definite sign")
    if target.N > big.group.N:
        raise BadTargetError(f"{target} is not a subgroup of {big.group}")
    memo: dict[EnhancedParam, Optional[tuple[EnhancedParam, ...]]] = {}

    def is_chi_psi(node: EnhancedParam) -> bool:
        return node.height == 0 and node.s.is_zero() and node.sig is psi

    def search(node: EnhancedParam) -> Optional[tuple[EnhancedParam, ...]]:
        if node.group.N == target.N:
            return (node,) if is_chi_psi(node) else None
        if node in memo:
            return memo[node]
        result = None
        for nxt in branch_enumerate(node):
            tail = search(nxt)
            if tail is not None:
                result = (node,) + tail
                break
        memo[node] = result
        return result

    found = search(big)
    return None if found is None else list(found)


def period_value(n: int, i: int) -> PeriodValue:
    """Exact period value on the canonical minimal K-type vector.

    For the height-i member over SO(n+1,1) with sign +, the SO(n+1-i,1)
    period of the canonical vector equals
    pi^(i(2n-i-1)/4) / ((n-i)!)^(i-1) times 1/(n-2i)! below the middle
    (2i < n+1) and times (-1)^(n+1) (2i-n-1)! at or above it.
    """
    if not 0 <= i <= n:
        raise OutOfRangeError(f"period_value needs 0 <= i <= n, got i={i}, n={n}")
    quarters = i * (2 * n - i - 1)
    base = Fraction(math.factorial(n - i)) ** (1 - i)
    if 2 * i < n + 1:
        return PeriodValue(1, base / math.factorial(n - 2 * i), quarters)
    sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)
    return PeriodValue(sign, base * math.factorial(2 * i - n - 1), quarters)


def minimal_k_type_trivial_rho(n: int, i: int) -> KTypeLabel:
    """Minimal K-type of the height-i, sign-+ member over SO(n+1,1): Λ^i(C^(n+1))."""
    if not 0 <= i <= n + 1:
        raise OutOfRangeError(
            f"minimal_k_type_trivial_rho needs 0 <= i <= n+1, got i={i}, n={n}"
        )
    return KTypeLabel(i, n + 1)
