"""Branching decisions for the restriction from SO(N,1) to SO(N-1,1).

The multiplicity of one irreducible in the restriction of another is always
0 or 1, and equals 1 exactly when three conditions hold on the enhanced
parameters: equal signatures (with the discrete-series wildcard matching
either sign), the target height drops by at most one, and the theta-weights
interlace.  Everything else in this module (enumeration, diagrams, the
tempered pairing check) is derived from that single decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import GroupMismatchError, NotInterlacingError, NotTemperedError
from .reps import (
    DiscreteSeries,
    EnhancedParam,
    Signature,
    TemperedPS,
    enhanced_from_langlands,
    standard_sequence,
    theta_param_str,
)
from .weights import GroupTag, Weight, enumerate_interlacing, interlaces, validate_weight


@dataclass(frozen=True)
class Arrow:
    """One nonzero symmetry-breaking direction between sequence members."""

    from_height: int
    to_height: int
    source: EnhancedParam
    target: EnhancedParam

    def __post_init__(self) -> None:
        assert self.to_height in (self.from_height, self.from_height - 1)


@dataclass(frozen=True)
class FiniteDimComponent:
    """One summand of a restricted finite-dimensional module.

    ``self_dual`` is False when the summand falls outside the self-dual
    family for the subgroup (possible only when N-1 is odd and the last
    entry of nu is positive); such components are listed but flagged.
    """

    nu: Weight
    sig: Signature
    self_dual: bool


def finite_dim_branch(
    group: GroupTag, lam: Weight, delta: Signature
) -> list[FiniteDimComponent]:
    """Restriction of the finite-dimensional module (lam, delta) to SO(N-1,1).

    The sum is multiplicity-free over the interlacing weights nu: for N even
    the chain is lam_1 >= nu_1 >= ... >= lam_m >= nu_m >= 0 with equal ranks,
    for N odd it ends nu_m >= lam_{m+1} with nu one entry shorter.  The sign
    label delta is inherited by every component.
    """
    lam = validate_weight(lam.entries, group)
    sub = group.subgroup
    flag_needed = not sub.is_even  # subgroup weights need a trailing zero
    out = []
    for nu in enumerate_interlacing(lam, sub.rank):
        self_dual = not flag_needed or nu.entries[-1] == 0
        out.append(FiniteDimComponent(nu, delta, self_dual))
    return out


def multiplicity(big: EnhancedParam, small: EnhancedParam) -> int:
    """Multiplicity (0 or 1) of ``small`` in the restriction of ``big``.

    Equals 1 iff the signatures match (BOTH is a wildcard), the height drops
    by 0 or 1, and the theta-weights interlace.
    """
    if small.group.N != big.group.N - 1:
        raise GroupMismatchError(
            f"{small.group} is not the rank-one subgroup of {big.group}"
        )
    if not big.sig.matches(small.sig):
        return 0
    if small.height not in (big.height, big.height - 1):
        return 0
    return 1 if interlaces(big.s, small.s) else 0


def _candidate_signatures(sub: GroupTag, height: int) -> tuple[Signature, ...]:
    if sub.is_even and height == sub.top_height:
        return (Signature.BOTH,)
    return (Signature.PLUS, Signature.MINUS)


def branch_enumerate(big: EnhancedParam) -> Iterator[EnhancedParam]:
    """All subgroup parameters occurring in the restriction of ``big``.

    Streams the cross product of the interlacing weights (lexicographically
    decreasing) with the admissible heights, keeping the signatures that
    match; discrete-series targets appear once, with the wildcard signature.
    """
    sub = big.group.subgroup
    heights = [h for h in (big.height - 1, big.height) if 0 <= h <= sub.top_height]
    heights.sort()
    for nu in enumerate_interlacing(big.s, sub.rank):
        if not sub.is_even and nu.entries[-1] != 0:
            continue  # outside the self-dual family for the subgroup
        for h in heights:
            for sig in _candidate_signatures(sub, h):
                if sig.matches(big.sig):
                    yield EnhancedParam(sub, nu, h, sig)


def sb_diagram(
    group: GroupTag, s: Weight, s_sub: Weight, sig: Signature
) -> list[Arrow]:
    """All nonzero symmetry-breaking arrows between two standard sequences.

    Both sequences start with signature ``sig``; arrows are exactly the pairs
    the decision procedure accepts.  The weights must interlace, otherwise
    already the finite-dimensional members admit no nonzero map and the
    request is rejected.
    """
    sub = group.subgroup
    s = validate_weight(s.entries, group)
    s_sub = validate_weight(s_sub.entries, sub)
    if not interlaces(s, s_sub):
        raise NotInterlacingError(
            f"weights {s} and {s_sub} do not interlace; the diagram is empty"
        )
    seq_g = standard_sequence(group, s, sig)
    seq_h = standard_sequence(sub, s_sub, sig)
    arrows = []
    for i, top in enumerate(seq_g):
        for j, bottom in enumerate(seq_h):
            if multiplicity(top, bottom) == 1:
                arrows.append(Arrow(i, j, top, bottom))
    return arrows


def diagram_to_json(
    group: GroupTag, s: Weight, s_sub: Weight, sig: Signature
) -> dict:
    arrows = sb_diagram(group, s, s_sub, sig)
    return {
        "group": str(group),
        "subgroup": str(group.subgroup),
        "top": [e.to_json() for e in standard_sequence(group, s, sig)],
        "bottom": [e.to_json() for e in standard_sequence(group.subgroup, s_sub, sig)],
        "arrows": [[a.from_height, a.to_height] for a in arrows],
    }


def render_diagram(
    group: GroupTag, s: Weight, s_sub: Weight, sig: Signature
) -> str:
    """Aligned ASCII view of the two standard sequences and their arrows."""
    seq_g = standard_sequence(group, s, sig)
    seq_h = standard_sequence(group.subgroup, s_sub, sig)
    arrows = {(a.from_height, a.to_height) for a in sb_diagram(group, s, s_sub, sig)}
    labels_g = [theta_param_str(e) for e in seq_g]
    labels_h = [theta_param_str(e) for e in seq_h]
    width = max(len(t) for t in labels_g + labels_h) + 2
    top = "".join(t.ljust(width) for t in labels_g).rstrip()
    bottom = "".join(t.ljust(width) for t in labels_h).rstrip()
    marks = [" "] * (width * len(labels_g))
    for i, j in arrows:
        if j == i:
            marks[i * width] = "|"
        else:  # j == i - 1: arrow drops one column to the left
            marks[i * width - width // 2] = "/"
    return "\n".join([top, "".join(marks).rstrip(), bottom])


def gp_tempered_check(big: TemperedPS, small: DiscreteSeries) -> bool:
    """Nonvanishing test for a tempered pair at top height.

    ``big`` must be a tempered principal series of SO(2m+1,1) and ``small``
    a discrete series of SO(2m,1); the answer is the interlacing of their
    theta-weights, as produced by the general decision procedure.  Whether
    the pair is nontrivial on the centers is the caller's responsibility.
    """
    if not isinstance(big, TemperedPS):
        raise NotTemperedError(f"expected a tempered principal series, got {big!r}")
    if not isinstance(small, DiscreteSeries):
        raise NotTemperedError(f"expected a discrete series, got {small!r}")
    if small.group.N != big.group.N - 1:
        raise GroupMismatchError(
            f"{small.group} is not the rank-one subgroup of {big.group}"
        )
    return multiplicity(enhanced_from_langlands(big), enhanced_from_langlands(small)) == 1
