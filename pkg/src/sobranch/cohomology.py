"""Nonvanishing decisions for bilinear forms on relative Lie algebra cohomology.

A symmetry breaking operator between coefficient-matched representations
induces, degree by degree, a pairing between the cohomology of the big group
and the complementary-degree cohomology of the subgroup.  This module only
decides when such pairings are nonzero; it never computes cohomology
dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .branching import multiplicity
from .errors import GroupMismatchError, OutOfRangeError
from .reps import EnhancedParam, Signature
from .weights import GroupTag, Weight, interlaces, zero_weight


@dataclass(frozen=True)
class PairingDescriptor:
    """One induced bilinear form between cohomology groups in complementary degrees.

    The left factor is the height-i member over SO(n+1,1) in degree j; the
    right factor lives on SO(n,1) in degree n-j and is recorded by its
    sequence label (index, sign), which is how the pairing statement names
    it.  ``rendering`` records which of the two published conventions
    produced the right-hand label.
    """

    n: int
    degree_j: int
    left: EnhancedParam
    left_coeff: Weight
    right_group: GroupTag
    right_index: int
    right_sig: Signature
    right_coeff: Weight
    nonzero: bool
    rendering: str

    @property
    def right_degree(self) -> int:
        return self.n - self.degree_j

    def to_json(self) -> dict:
        return {
            "degree": self.degree_j,
            "left": {
                "group": str(self.left.group),
                "param": self.left.to_json(),
                "coefficient": self.left_coeff.to_json(),
            },
            "right": {
                "group": str(self.right_group),
                "degree": self.right_degree,
                "label_index": self.right_index,
                "label_signature": self.right_sig.value,
                "coefficient": self.right_coeff.to_json(),
            },
            "nonzero": self.nonzero,
            "rendering": self.rendering,
        }


def coefficient_weight(e: EnhancedParam) -> Weight:
    """Highest weight of the finite-dimensional coefficient module.

    Nonvanishing cohomology forces the coefficient system to share the
    representation's infinitesimal character, which pins its highest weight
    to the theta-weight; any additional character twist is outside the scope
    of the decision procedures here.
    """
    return e.s


def bilinear_nonzero_trivial_rho(n: int, i: int, delta: Signature, j: int) -> bool:
    """Whether the induced pairing in degree j is nonzero for the height-i pair.

    True exactly when j equals i and delta equals (-1)^i.
    """
    if not 0 <= 2 * i <= n:
        raise OutOfRangeError(f"need 0 <= i <= n/2, got i={i}, n={n}")
    if not 0 <= j <= n:
        raise OutOfRangeError(f"need 0 <= j <= n, got j={j}")
    if delta is Signature.BOTH:
        raise OutOfRangeError("delta must be a definite sign")
    wanted = Signature.PLUS if i % 2 == 0 else Signature.MINUS
    return j == i and delta is wanted


def pairing_trivial_rho(
    n: int, i: int, delta: Signature, j: int, intro_rendering: bool = False
) -> PairingDescriptor:
    """Describe the pairing attached to the degree-j form for the height-i pair.

    Two published statements label the right-hand partner differently: the
    default uses index n-i with sign (-1)^n * delta, the alternate uses
    index i with sign (-1)^(n-1) * delta.  Both are exposed; the
    nonvanishing answer does not depend on the choice.
    """
    nonzero = bilinear_nonzero_trivial_rho(n, i, delta, j)
    group = GroupTag(n + 1)
    sub = GroupTag(n)
    if intro_rendering:
        right_index = i
        right_sig = delta.times_sign(n - 1)
        rendering = "intro"
    else:
        right_index = n - i
        right_sig = delta.times_sign(n)
        rendering = "section6"
    left = EnhancedParam(group, zero_weight(group.rank), i, delta)
    return PairingDescriptor(
        n=n,
        degree_j=j,
        left=left,
        left_coeff=zero_weight(group.rank),
        right_group=sub,
        right_index=right_index,
        right_sig=right_sig,
        right_coeff=zero_weight(sub.rank),
        nonzero=nonzero,
        rendering=rendering,
    )


def bilinear_gate(
    big: EnhancedParam, small: EnhancedParam, coeff_big: Weight, coeff_small: Weight
) -> Optional[int]:
    """Degree in which a symmetry breaking operator induces a nonzero pairing.

    Returns the common height when all five gate conditions hold: both
    coefficient systems match the parameters, the coefficients themselves
    admit a nonzero restriction map (interlacing), the heights agree, the
    signatures agree, and the branching multiplicity is 1.  Otherwise None.
    """
    if small.group.N != big.group.N - 1:
        raise GroupMismatchError(
            f"{small.group} is not the rank-one subgroup of {big.group}"
        )
    if coeff_big != coefficient_weight(big):
        return None
    if coeff_small != coefficient_weight(small):
        return None
    if not interlaces(coeff_big, coeff_small):
        return None
    if big.height != small.height:
        return None
    if not big.sig.matches(small.sig):
        return None
    if multiplicity(big, small) != 1:
        return None
    return big.height
