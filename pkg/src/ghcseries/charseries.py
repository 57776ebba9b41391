"""Vector partition counts and the characters of the series modules.

The produced module N_p(E) has t-character dim E times the colored
partition count of the n-weights, shifted to start at mu + 2; the
degree-one functor image F1(p, E) has k-character given by first
differences of the same table.  The alternating-sum (Euler) character
of the derived functors is computed from a four-term window identity
that the test suite validates against an independent Koszul-complex
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidInput, OutOfRegime, WindowTooNarrow
from .cohomology import KCharacter, TruncatedTCharacter
from .parabolic import CompatibleParabolic
from .rootsys import Weight


@dataclass(frozen=True)
class ModuleDatumE:
    """Simple finite-dimensional p-module datum; t acts via omega."""

    omega: int
    dim_e: int = 1
    nu: Weight | None = None

    def __post_init__(self):
        if self.dim_e < 1:
            raise InvalidInput("dim E must be a positive integer")


class PartitionTable:
    """Colored vector partition counts over a fixed positive multiset.

    value(x) counts multisets drawn from the weights, each entry of the
    defining multiset its own unbounded color, summing to x.
    """

    def __init__(self, weights):
        ws = tuple(sorted(int(w) for w in weights))
        if any(w <= 0 for w in ws):
            raise InvalidInput("partition weights must be positive")
        self.weights = ws
        self._values = [1]

    def value(self, x: int) -> int:
        if x < 0:
            return 0
        if x >= len(self._values):
            self._extend(x)
        return self._values[x]

    def _extend(self, x: int) -> None:
        values = [0] * (x + 1)
        values[0] = 1
        for w in self.weights:
            for y in range(w, x + 1):
                values[y] += values[y - w]
        self._values = values


def partition_function(weights, x: int) -> int:
    """Colored partition count of x over the given positive multiset."""
    return PartitionTable(weights).value(x)


def _minimal_k_type(p: CompatibleParabolic, E: ModuleDatumE) -> int:
    return E.omega + (sum(p.n_weights) - 2)


def t_character_N(
    p: CompatibleParabolic, E: ModuleDatumE, cutoff: int
) -> TruncatedTCharacter:
    """t-character of the produced module, trusted through cutoff.

    The minimum t-weight is mu + 2 with multiplicity dim E; above it the
    multiplicity at x is dim E times the partition count of x - mu - 2.
    """
    mu = _minimal_k_type(p, E)
    table = PartitionTable(p.n_weights)
    mults = {
        x: E.dim_e * table.value(x - mu - 2) for x in range(mu + 2, cutoff + 1)
    }
    return TruncatedTCharacter(mults, window=(None, cutoff))


def euler_k_character(N: TruncatedTCharacter, cutoff: int) -> KCharacter:
    """Alternating-sum character of the derived functors, as virtual.

    The coefficient of V(delta) is
        m(delta) + m(-delta) - m(delta+2) - m(-delta-2)   for delta >= 1,
        2 m(0) - m(2) - m(-2)                              for delta = 0,
    which is the Euler characteristic of the two-step relative Koszul
    complex of k over t with coefficients in N.
    """
    lo, hi = N.window
    if hi is not None and hi < cutoff + 2:
        raise WindowTooNarrow(
            f"need t-weights through {cutoff + 2}, trusted only to {hi}"
        )
    if lo is not None and lo > -cutoff - 2:
        raise WindowTooNarrow(
            f"need t-weights down to {-cutoff - 2}, trusted only from {lo}"
        )
    mults: dict[int, int] = {}
    for delta in range(0, cutoff + 1):
        if delta == 0:
            c = 2 * N.mult(0) - N.mult(2) - N.mult(-2)
        else:
            c = N.mult(delta) + N.mult(-delta) - N.mult(delta + 2) - N.mult(-delta - 2)
        if c:
            mults[delta] = c
    return KCharacter(mults, cutoff=cutoff, virtual=True)


def f1_k_character(
    p: CompatibleParabolic, E: ModuleDatumE, cutoff: int
) -> KCharacter:
    """k-character of the degree-one functor image, valid for mu >= 0.

    In that regime the degree-0 and degree-2 images vanish, so the Euler
    character is minus this one; the multiplicity of V(delta) is dim E
    times the first difference of the partition table at delta - mu.
    """
    mu = _minimal_k_type(p, E)
    if mu < 0:
        raise OutOfRegime(
            f"mu = {mu} < 0: lower and upper degrees need not vanish there"
        )
    table = PartitionTable(p.n_weights)
    mults: dict[int, int] = {}
    for delta in range(0, cutoff + 1):
        c = E.dim_e * (table.value(delta - mu) - table.value(delta - mu - 2))
        if c < 0:
            raise InternalInconsistency("negative multiplicity in a genuine character")
        if c:
            mults[delta] = c
    return KCharacter(mults, cutoff=cutoff, virtual=False)
