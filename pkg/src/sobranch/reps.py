"""Representation descriptors and enhanced parameters for SO(N,1).

An irreducible representation with regular integral infinitesimal character
matching a self-dual finite-dimensional module is carried here in one of two
coordinate systems:

* a Langlands-style descriptor: finite-dimensional, nontempered (sigma,
  delta, lambda), tempered principal series (N odd), or discrete series
  (N even);
* an enhanced parameter (theta-weight, height, signature), where the height
  marks the bar position of the underlying cohomologically induced module
  and the signature flips under twisting by the nontrivial character.

The two are related by sorting the infinitesimal-character multiset: the
theta-weight is the sorted multiset minus the rho-shift, and the height is
the slot where the continuous parameter lands.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import (
    InvalidDescriptorError,
    InvalidEnhancedError,
    NotMonotoneError,
    SingularInfCharError,
    WrongRankError,
)
from .weights import (
    GroupTag,
    InfChar,
    Weight,
    infchar_finite_dim,
    infchar_principal_series,
    validate_weight,
)


class Signature(Enum):
    """Sign invariant of a representation; BOTH is the discrete-series wildcard."""

    PLUS = "+"
    MINUS = "-"
    BOTH = "pm"

    def flipped(self) -> "Signature":
        """Effect of tensoring with the nontrivial character (fixes BOTH)."""
        if self is Signature.PLUS:
            return Signature.MINUS
        if self is Signature.MINUS:
            return Signature.PLUS
        return Signature.BOTH

    def times_sign(self, exponent: int) -> "Signature":
        """Multiply by (-1)**exponent (fixes BOTH)."""
        return self.flipped() if exponent % 2 else self

    def matches(self, other: "Signature") -> bool:
        """Equality with BOTH matching either definite sign."""
        return self is other or Signature.BOTH in (self, other)

    @staticmethod
    def parse(text: str) -> "Signature":
        table = {"+": Signature.PLUS, "-": Signature.MINUS, "pm": Signature.BOTH,
                 "+-": Signature.BOTH, "plus": Signature.PLUS, "minus": Signature.MINUS}
        key = text.strip()
        if key not in table:
            raise InvalidDescriptorError(f"cannot parse signature {text!r}")
        return table[key]

    def __str__(self) -> str:
        return self.value


def _require_definite(sig: Signature, what: str) -> None:
    if sig is Signature.BOTH:
        raise InvalidDescriptorError(f"{what} must be '+' or '-', not 'pm'")


def _validate_sigma(group: GroupTag, sigma: Weight) -> None:
    half_n = group.n // 2
    if sigma.rank != half_n:
        raise WrongRankError(
            f"sigma {sigma} has rank {sigma.rank}; {group} needs rank {half_n}"
        )


@dataclass(frozen=True)
class FiniteDim:
    """Finite-dimensional module with highest weight s and sign label sig."""

    group: GroupTag
    s: Weight
    sig: Signature

    def __post_init__(self) -> None:
        validate_weight(self.s.entries, self.group)
        _require_definite(self.sig, "finite-dimensional signature")


@dataclass(frozen=True)
class Nontempered:
    """Unique subrepresentation of the induced module I_delta(sigma, lam).

    lam is integral, lies below the tempered wall 2*lam < n, and avoids the
    reducibility walls lam = k - sigma_k; for N odd, sigma must in addition
    be self-dual (last entry zero).
    """

    group: GroupTag
    sigma: Weight
    delta: Signature
    lam: int

    def __post_init__(self) -> None:
        _validate_sigma(self.group, self.sigma)
        _require_definite(self.delta, "delta")
        n = self.group.n
        sig_e = self.sigma.entries
        if not self.group.is_even and sig_e and sig_e[-1] != 0:
            raise InvalidDescriptorError(
                f"sigma {self.sigma} must be self-dual (last entry 0) for {self.group}"
            )
        if 2 * self.lam >= n:
            raise InvalidDescriptorError(
                f"lam={self.lam} is not below the tempered wall n/2={n}/2"
            )
        excluded = {k + 1 - sig_e[k] for k in range(len(sig_e))}
        if self.lam in excluded:
            raise SingularInfCharError(
                f"lam={self.lam} hits a reducibility wall for sigma {self.sigma}"
            )


@dataclass(frozen=True)
class TemperedPS:
    """Tempered principal series of SO(N,1), N odd, at lam = n/2.

    sigma is stored with positive last entry, the canonical member of the
    mirror pair sigma <-> sigma^vee that induces isomorphic modules.
    """

    group: GroupTag
    sigma: Weight
    delta: Signature

    def __post_init__(self) -> None:
        if self.group.is_even:
            raise InvalidDescriptorError(
                f"tempered principal series requires N odd, got {self.group}"
            )
        _validate_sigma(self.group, self.sigma)
        _require_definite(self.delta, "delta")
        if self.sigma.entries[-1] <= 0:
            raise InvalidDescriptorError(
                f"tempered sigma must have positive last entry, got {self.sigma}"
            )


@dataclass(frozen=True)
class DiscreteSeries:
    """Discrete series of SO(N,1), N even, with m <= lam <= m - 1 + sigma_{m-1}.

    The two square-integrable halves are isomorphic as modules for the
    two-component group, so a single descriptor represents the pair and its
    signature is the wildcard BOTH.
    """

    group: GroupTag
    sigma: Weight
    lam: int

    def __post_init__(self) -> None:
        if not self.group.is_even:
            raise InvalidDescriptorError(
                f"discrete series requires N even, got {self.group}"
            )
        _validate_sigma(self.group, self.sigma)
        m = self.group.N // 2
        if self.lam < m:
            raise InvalidDescriptorError(f"discrete series needs lam >= {m}, got {self.lam}")
        if self.sigma.rank >= 1 and self.lam > m - 1 + self.sigma.entries[-1]:
            raise InvalidDescriptorError(
                f"lam={self.lam} exceeds m-1+sigma_(m-1)={m - 1 + self.sigma.entries[-1]}"
            )


RepDescriptor = Union[FiniteDim, Nontempered, TemperedPS, DiscreteSeries]


@dataclass(frozen=True)
class EnhancedParam:
    """Enhanced parameter (theta-weight, height, signature) of a representation.

    Invariants: 0 <= height <= floor(N/2); the signature is BOTH exactly when
    the parameter is the top-height discrete series of an even-N group;
    height 0 corresponds to the finite-dimensional members.
    """

    group: GroupTag
    s: Weight
    height: int
    sig: Signature

    def __post_init__(self) -> None:
        validate_weight(self.s.entries, self.group)
        top = self.group.top_height
        if not 0 <= self.height <= top:
            raise InvalidEnhancedError(
                f"height {self.height} outside [0, {top}] for {self.group}"
            )
        is_ds_slot = self.group.is_even and self.height == top
        if is_ds_slot and self.sig is not Signature.BOTH:
            raise InvalidEnhancedError(
                f"top height {top} of {self.group} is the discrete series; signature must be 'pm'"
            )
        if not is_ds_slot and self.sig is Signature.BOTH:
            raise InvalidEnhancedError(
                f"signature 'pm' only allowed at top height of an even-N group"
            )

    def to_json(self) -> dict:
        return {
            "weight": self.s.to_json(),
            "height": self.height,
            "signature": self.sig.value,
        }

    @staticmethod
    def from_json(group: GroupTag, data: dict) -> "EnhancedParam":
        return EnhancedParam(
            group,
            Weight.from_json(data["weight"]),
            int(data["height"]),
            Signature.parse(data["signature"]),
        )

    def __str__(self) -> str:
        return theta_param_str(self)


def theta_param_str(e: EnhancedParam) -> str:
    """Bar notation (s_1,...,s_i || s_{i+1},...)_sig with the bar at the height."""
    head = ",".join(str(x) for x in e.s.entries[: e.height])
    tail = ",".join(str(x) for x in e.s.entries[e.height :])
    return f"({head}||{tail}){e.sig.value}"


def _doubled_rho_shift(group: GroupTag, j: int) -> int:
    # doubled value of n/2 + 1 - j at 1-based position j
    return group.n + 2 - 2 * j


def _char_slots(d: RepDescriptor) -> tuple[list[int], int]:
    """Doubled infinitesimal-character entries sorted decreasing, plus the
    0-based slot occupied by the continuous parameter."""
    group = d.group
    n = group.n
    if isinstance(d, (Nontempered, TemperedPS, DiscreteSeries)):
        sigma = d.sigma
        if isinstance(d, TemperedPS):
            lam2 = n  # doubled lam = n means |2 lam - n| = 0
        else:
            lam2 = 2 * d.lam
        sig_part = [2 * sigma.entries[k] + n - 2 * (k + 1) for k in range(sigma.rank)]
        lam_entry = abs(lam2 - n)
        if lam_entry in sig_part:
            raise SingularInfCharError(
                f"parameter hits a reducibility wall: repeated entry {lam_entry}/2"
            )
        tagged = sorted(
            [(v, 0) for v in sig_part] + [(lam_entry, 1)], reverse=True
        )
        slot = next(i for i, (_, tag) in enumerate(tagged) if tag == 1)
        return [v for v, _ in tagged], slot
    raise TypeError(f"no character slots for {type(d).__name__}")


def _height_by_insertion(d: RepDescriptor) -> int:
    """Height read off from the sorted position of the continuous parameter."""
    if isinstance(d, FiniteDim):
        return 0
    if isinstance(d, DiscreteSeries):
        return d.group.top_height
    _, slot = _char_slots(d)
    return slot


def _height_by_intervals(d: RepDescriptor) -> int:
    """Height from the defining inequalities i - sigma_i < lam < i+1 - sigma_{i+1}.

    sigma_0 is treated as +infinity and sigma_k = 0 beyond the stored rank,
    which subsumes the top nontempered interval for N even.
    """
    if isinstance(d, FiniteDim):
        return 0
    if isinstance(d, (TemperedPS, DiscreteSeries)):
        return d.group.top_height
    sig_e = d.sigma.entries

    def sigma_at(k: int) -> int:
        return sig_e[k - 1] if 1 <= k <= len(sig_e) else 0

    hits = []
    for i in range(d.group.top_height):
        below = True if i == 0 else d.lam > i - sigma_at(i)
        above = d.lam < i + 1 - sigma_at(i + 1)
        if below and above:
            hits.append(i)
    if len(hits) != 1:
        raise InvalidDescriptorError(
            f"height intervals select {hits} for lam={d.lam}, sigma={d.sigma}"
        )
    return hits[0]


def height(d: RepDescriptor) -> int:
    """Height of the descriptor, computed two ways and cross-checked.

    The interval criterion and the sorted-insertion position must agree; a
    disagreement would mean the parameter data is inconsistent.
    """
    h_ins = _height_by_insertion(d)
    h_int = _height_by_intervals(d)
    assert h_ins == h_int, f"height methods disagree on {d}: {h_ins} vs {h_int}"
    return h_ins


def signature(d: RepDescriptor) -> Signature:
    if isinstance(d, FiniteDim):
        return d.sig
    if isinstance(d, TemperedPS):
        return d.delta
    if isinstance(d, DiscreteSeries):
        return Signature.BOTH
    return d.delta.times_sign(_height_by_insertion(d) - d.lam)


def enhanced_from_langlands(d: RepDescriptor) -> EnhancedParam:
    """Enhanced parameter (theta-weight, height, signature) of a descriptor.

    The sorted infinitesimal-character multiset minus the rho-shift gives the
    theta-weight; the slot of the continuous parameter gives the height
    (pushed to the top for the discrete series, whose entry always sorts
    last); the signature follows the twist rule delta * (-1)^(height - lam).
    """
    group = d.group
    if isinstance(d, FiniteDim):
        return EnhancedParam(group, d.s, 0, d.sig)
    doubled, slot = _char_slots(d)
    ent = []
    for j in range(group.rank):
        v = doubled[j] - _doubled_rho_shift(group, j + 1)
        if v < 0 or v % 2:
            raise InvalidDescriptorError(
                f"{d} does not match a self-dual finite-dimensional character"
            )
        ent.append(v // 2)
    try:
        weight = validate_weight(ent, group)
    except NotMonotoneError as exc:  # pragma: no cover - blocked by construction
        raise InvalidDescriptorError(str(exc)) from exc
    if isinstance(d, DiscreteSeries):
        return EnhancedParam(group, weight, group.top_height, Signature.BOTH)
    if isinstance(d, TemperedPS):
        return EnhancedParam(group, weight, group.top_height, d.delta)
    return EnhancedParam(group, weight, slot, d.delta.times_sign(slot - d.lam))


def langlands_from_enhanced(e: EnhancedParam) -> RepDescriptor:
    """Invert enhanced_from_langlands; the unique descriptor with this parameter.

    Height 0 returns the finite-dimensional form.  Otherwise the rho-shifted
    weight entries are split around the height slot: the skipped entry a
    recovers lam (n/2 - a for nontempered and tempered parameters, a + n/2
    for the discrete series, whose slot is the last), and the rest recover
    sigma.
    """
    group = e.group
    n = group.n
    top = group.top_height
    if e.height == 0:
        return FiniteDim(group, e.s, e.sig)
    a_doubled = [
        2 * e.s.entries[j] + _doubled_rho_shift(group, j + 1) for j in range(group.rank)
    ]

    def sigma_from(skip: int) -> Weight:
        vals = []
        for k in range(group.rank):
            if k == skip:
                continue
            pos = len(vals)  # 0-based sigma index
            v = a_doubled[k] - n + 2 * (pos + 1)
            assert v >= 0 and v % 2 == 0
            vals.append(v // 2)
        return Weight(tuple(vals))

    if group.is_even and e.height == top:
        lam = (a_doubled[-1] + n) // 2
        return DiscreteSeries(group, sigma_from(group.rank - 1), lam)
    lam2 = n - a_doubled[e.height]
    if lam2 % 2:  # pragma: no cover - parity is fixed by the group
        raise InvalidEnhancedError(f"non-integral lam for {e}")
    lam = lam2 // 2
    sigma = sigma_from(e.height)
    if e.height == top:
        # N odd tempered slot: the skipped entry is forced to 0, so lam = n/2.
        assert a_doubled[e.height] == 0
        return TemperedPS(group, sigma, e.sig)
    return Nontempered(group, sigma, e.sig.times_sign(e.height - lam), lam)


def twist_chi_minus(e: EnhancedParam) -> EnhancedParam:
    """Tensor with the nontrivial character: flips the signature, fixes BOTH."""
    return EnhancedParam(e.group, e.s, e.height, e.sig.flipped())


def hasse_sequence(group: GroupTag, s: Weight, sig0: Signature) -> list[EnhancedParam]:
    """Chain U_0, ..., U_top of parameters starting at the finite-dimensional one.

    Member i sits at height i with signature sig0 * (-1)^(i - s_{i+1} + s_1),
    normalized so that U_0 carries sig0; the top member is tempered (for N
    even it is the discrete series and carries the wildcard signature).
    """
    _require_definite(sig0, "sig0")
    s = validate_weight(s.entries, group)
    out = []
    for i in range(group.top_height + 1):
        if group.is_even and i == group.top_height:
            out.append(EnhancedParam(group, s, i, Signature.BOTH))
        else:
            eps = sig0.times_sign(i - s.entries[i] + s.entries[0])
            out.append(EnhancedParam(group, s, i, eps))
    return out


def standard_sequence(group: GroupTag, s: Weight, sig0: Signature) -> list[EnhancedParam]:
    """Hasse sequence with member i twisted by the i-th power of the sign character."""
    out = []
    for i, u in enumerate(hasse_sequence(group, s, sig0)):
        out.append(EnhancedParam(group, u.s, u.height, u.sig.times_sign(i)))
    return out


def classify(group: GroupTag, s: Weight) -> list[RepDescriptor]:
    """All irreducibles sharing the infinitesimal character of the weight s.

    There are exactly n + 2 of them: every height below the top with both
    signatures, plus the tempered top (two principal series members for N
    odd, one discrete series for N even).  Parameters are recovered by
    infinitesimal-character multiset matching via langlands_from_enhanced.
    """
    s = validate_weight(s.entries, group)
    out: list[RepDescriptor] = []
    for i in range(group.top_height + 1):
        if group.is_even and i == group.top_height:
            out.append(
                langlands_from_enhanced(EnhancedParam(group, s, i, Signature.BOTH))
            )
        else:
            for sig in (Signature.PLUS, Signature.MINUS):
                out.append(langlands_from_enhanced(EnhancedParam(group, s, i, sig)))
    assert len(out) == group.n + 2
    return out


def infinitesimal_character(d: RepDescriptor) -> InfChar:
    if isinstance(d, FiniteDim):
        return infchar_finite_dim(d.group, d.s)
    if isinstance(d, TemperedPS):
        return infchar_principal_series(d.group, d.sigma, d.group.n // 2)
    return infchar_principal_series(d.group, d.sigma, d.lam)


def descriptor_to_json(d: RepDescriptor) -> dict:
    if isinstance(d, FiniteDim):
        return {
            "group": str(d.group),
            "variant": "finite",
            "weight": d.s.to_json(),
            "signature": d.sig.value,
        }
    if isinstance(d, Nontempered):
        return {
            "group": str(d.group),
            "variant": "nontempered",
            "sigma": d.sigma.to_json(),
            "delta": d.delta.value,
            "lambda": d.lam,
        }
    if isinstance(d, TemperedPS):
        return {
            "group": str(d.group),
            "variant": "tempered",
            "sigma": d.sigma.to_json(),
            "delta": d.delta.value,
        }
    return {
        "group": str(d.group),
        "variant": "discrete",
        "sigma": d.sigma.to_json(),
        "lambda": d.lam,
    }


def descriptor_from_json(data: dict) -> RepDescriptor:
    group = GroupTag.parse(data["group"])
    variant = data["variant"]
    if variant == "finite":
        return FiniteDim(group, Weight.from_json(data["weight"]),
                         Signature.parse(data["signature"]))
    if variant == "nontempered":
        return Nontempered(group, Weight.from_json(data["sigma"]),
                           Signature.parse(data["delta"]), int(data["lambda"]))
    if variant == "tempered":
        return TemperedPS(group, Weight.from_json(data["sigma"]),
                          Signature.parse(data["delta"]))
    if variant == "discrete":
        return DiscreteSeries(group, Weight.from_json(data["sigma"]),
                              int(data["lambda"]))
    raise InvalidDescriptorError(f"unknown descriptor variant {variant!r}")
