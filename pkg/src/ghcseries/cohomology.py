"""Cohomology shadows of k-characters for k isomorphic to sl(2).

The n_k-cohomology of a k-type V(delta) sits in degrees 0 and 1 at
t-weights delta and -delta-2, so the cohomology of a whole k-character
is again a weight multiset.  On top of that the first page of the
n-cohomology spectral sequence and the mu-regimes in which its top
degree collapses are computed.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    InvalidInput,
    VirtualNotAllowed,
    WindowTooNarrow,
)
from .parabolic import CompatibleParabolic, invariants


class KCharacter:
    """Map delta -> multiplicity of the k-type V(delta).

    cutoff None means the character is finite and completely known;
    otherwise entries are trusted exactly for delta <= cutoff and
    lookups beyond raise WindowTooNarrow.  Negative multiplicities
    require virtual=True.
    """

    def __init__(self, mults, cutoff: int | None = None, virtual: bool = False):
        clean: dict[int, int] = {}
        for delta, c in mults.items():
            delta, c = int(delta), int(c)
            if delta < 0:
                raise InvalidInput("k-types are labeled by nonnegative integers")
            if c == 0:
                continue
            if c < 0 and not virtual:
                raise InvalidInput("negative multiplicity in a non-virtual character")
            if cutoff is not None and delta > cutoff:
                raise InvalidInput(f"entry at {delta} beyond cutoff {cutoff}")
            clean[delta] = c
        self.mults = clean
        self.cutoff = cutoff
        self.virtual = bool(virtual)

    def mult(self, delta: int) -> int:
        if delta < 0:
            raise InvalidInput("k-types are labeled by nonnegative integers")
        if self.cutoff is not None and delta > self.cutoff:
            raise WindowTooNarrow(
                f"multiplicity at {delta} is beyond the trusted cutoff {self.cutoff}"
            )
        return self.mults.get(delta, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.mults.items())

    def support_min(self) -> int | None:
        return min(self.mults) if self.mults else None

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.mults.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KCharacter)
            and self.mults == other.mults
            and self.cutoff == other.cutoff
            and self.virtual == other.virtual
        )

    def __repr__(self) -> str:
        return (
            f"KCharacter({dict(self.items())}, cutoff={self.cutoff}, "
            f"virtual={self.virtual})"
        )


class TruncatedTCharacter:
    """Map integer t-weight -> multiplicity, trusted on a window (lo, hi).

    A None endpoint means the character is exactly known arbitrarily far
    on that side; lookups outside the trusted window raise
    WindowTooNarrow so truncation can never masquerade as vanishing.
    """

    def __init__(self, mults, window=(None, None), virtual: bool = False):
        lo, hi = window
        clean: dict[int, int] = {}
        for w, c in mults.items():
            w, c = int(w), int(c)
            if c == 0:
                continue
            if c < 0 and not virtual:
                raise InvalidInput("negative multiplicity in a non-virtual character")
            if (lo is not None and w < lo) or (hi is not None and w > hi):
                raise InvalidInput(f"entry at {w} outside the trusted window {window}")
            clean[w] = c
        self.mults = clean
        self.window = (lo, hi)
        self.virtual = bool(virtual)

    def mult(self, x: int) -> int:
        lo, hi = self.window
        if lo is not None and x < lo:
            raise WindowTooNarrow(f"weight {x} below the trusted window {self.window}")
        if hi is not None and x > hi:
            raise WindowTooNarrow(f"weight {x} above the trusted window {self.window}")
        return self.mults.get(x, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.mults.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedTCharacter)
            and self.mults == other.mults
            and self.window == other.window
            and self.virtual == other.virtual
        )

    def __repr__(self) -> str:
        return (
            f"TruncatedTCharacter({dict(self.items())}, window={self.window}, "
            f"virtual={self.virtual})"
        )


def nk_cohomology(M: KCharacter) -> tuple[TruncatedTCharacter, TruncatedTCharacter]:
    """Degree 0 at delta and degree 1 at -delta-2, per k-type V(delta).

    This is the rank-1 case of Kostant's theorem: n_k is the line
    through e, and the Koszul complex 0 -> V -> Hom(n_k, V) -> 0 leaves
    the extreme weight spaces delta and -delta-2.
    """
    if M.virtual:
        raise VirtualNotAllowed("n_k-cohomology needs a genuine character")
    h0 = dict(M.mults)
    h1 = {-delta - 2: c for delta, c in M.mults.items()}
    cut = M.cutoff
    window0 = (None, cut)
    window1 = (None if cut is None else -cut - 2, None)
    return (
        TruncatedTCharacter(h0, window=window0),
        TruncatedTCharacter(h1, window=window1),
    )


def exterior_weights(weights, j: int) -> dict[int, int]:
    """Weight multiplicities of the j-th exterior power of a sum of lines.

    Coefficient of q^j in the product of (1 + q x^w) over the multiset,
    each line its own factor.
    """
    if j < 0:
        return {}
    layers: list[dict[int, int]] = [{} for _ in range(j + 1)]
    layers[0] = {0: 1}
    for w in weights:
        for deg in range(j, 0, -1):
            for wt, c in layers[deg - 1].items():
                layers[deg][wt + w] = layers[deg].get(wt + w, 0) + c
    return layers[j]


def e1_page_dimension(
    M: KCharacter, p: CompatibleParabolic, j: int, kappa: int
) -> int:
    """Dimension of the weight-kappa space of the j-th first-page term.

    The term is H0 tensor the j-th exterior power of the dual of the
    complement of the e-line in n, plus H1 tensor the (j-1)-st; dual
    exterior weights are negated sub-multiset sums, so H-lookups happen
    at kappa plus the positive sums.
    """
    r = p.r
    if j < 0 or j > r + 1:
        raise IndexOutOfRange(f"degree {j} outside [0, {r + 1}]")
    h0, h1 = nk_cohomology(M)
    perp = p.n_perp_weights()
    total = 0
    for wt, c in exterior_weights(perp, j).items():
        total += c * h0.mult(kappa + wt)
    for wt, c in exterior_weights(perp, j - 1).items():
        total += c * h1.mult(kappa + wt)
    return total


def top_n_vanishing(M: KCharacter, p: CompatibleParabolic, kappa: int) -> bool:
    """Sufficient condition for the top n-cohomology to vanish at kappa.

    True iff the degree-1 n_k-cohomology vanishes at kappa shifted by
    the weight of the top exterior power of the complement of e in n.
    """
    shift = sum(p.n_weights) - 2
    _, h1 = nk_cohomology(M)
    return h1.mult(kappa + shift) == 0


class Regime(Enum):
    EQUALITY = "equality"
    UPPER_BOUND = "upper_bound"
    NONE = "none"


def top_degree_regime(
    p: CompatibleParabolic, mu: int, convention: str = "n"
) -> Regime:
    """Regime for reading the top-degree n-cohomology off H0(n_k, .) at mu.

    EQUALITY: mu >= (lambda1 + lambda2)/2, the two dimensions agree.
    UPPER_BOUND: lambda1/2 <= mu below that; H0 only bounds from above.
    NONE: below both thresholds.
    """
    if mu < 0:
        raise InvalidInput("the regime is defined for mu >= 0")
    l1, l2 = invariants(p).lambdas(convention)
    if Fraction(mu) >= Fraction(l1 + l2, 2):
        return Regime.EQUALITY
    if Fraction(mu) >= Fraction(l1, 2):
        return Regime.UPPER_BOUND
    return Regime.NONE
