"""sl(2)-subalgebras given by a defining semisimple element.

An embedding k = span{e, h, f} in g is recorded through the evaluation
functional alpha -> alpha(h) on roots, represented by the epsilon-basis
coordinate vector of h.  The induced integer grading of g and its
decomposition into irreducible sl(2)-summands are derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalInconsistency,
    InvalidInput,
    NoSl2Triple,
    NonIntegralGrading,
    NotARoot,
    NotIntegrable,
)
from .linalg import solve_unique
from .rootsys import (
    RootSystem,
    TRACE_ZERO_FAMILIES,
    Weight,
    coroot_pairing,
    evaluate,
)


@dataclass(frozen=True)
class Sl2Embedding:
    rs: RootSystem
    h_vector: Weight
    kind: str  # "principal" | "root" | "vector"
    beta: Weight | None = None

    def root_value(self, alpha: Weight) -> int:
        v = evaluate(alpha, self.h_vector)
        if v.denominator != 1:
            raise InternalInconsistency("root evaluation became non-integral")
        return int(v)


class FiniteTCharacter:
    """Finite map from integer t-weights to nonnegative multiplicities."""

    def __init__(self, mults: dict[int, int]):
        self.mults = {int(w): int(c) for w, c in mults.items() if c != 0}
        if any(c < 0 for c in self.mults.values()):
            raise InvalidInput("finite t-characters have nonnegative multiplicities")

    def mult(self, x: int) -> int:
        return self.mults.get(x, 0)

    def total(self) -> int:
        return sum(self.mults.values())

    def is_symmetric(self) -> bool:
        return all(self.mult(-w) == c for w, c in self.mults.items())

    def items(self):
        return sorted(self.mults.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteTCharacter) and self.mults == other.mults

    def __repr__(self) -> str:
        return f"FiniteTCharacter({dict(self.items())})"


@dataclass(frozen=True)
class Sl2Decomposition:
    """counts[m] = number of irreducible summands of highest weight m."""

    counts: tuple[tuple[int, int], ...]

    def count(self, m: int) -> int:
        return dict(self.counts).get(m, 0)

    def dimension(self) -> int:
        return sum(c * (m + 1) for m, c in self.counts)


def from_defining_vector(rs: RootSystem, h) -> Sl2Embedding:
    """Validate and wrap an explicit defining vector.

    Necessary conditions only: integral grading, nonzero weight-2 space,
    nonnegative weight-string peeling.
    """
    h_vec = h if isinstance(h, Weight) else Weight.of(*h)
    if len(h_vec.coords) != rs.ambient:
        raise InvalidInput(
            f"defining vector has length {len(h_vec.coords)}, ambient is {rs.ambient}"
        )
    return _validated(rs, h_vec, kind="vector")


def _validated(
    rs: RootSystem, h_vec: Weight, kind: str, beta: Weight | None = None
) -> Sl2Embedding:
    values = []
    for alpha in rs.roots:
        v = evaluate(alpha, h_vec)
        if v.denominator != 1:
            raise NonIntegralGrading(
                f"root {tuple(alpha.coords)} evaluates to non-integer {v}"
            )
        values.append(int(v))
    e = Sl2Embedding(rs=rs, h_vector=h_vec, kind=kind, beta=beta)
    ch = t_character_of_g(e)
    if ch.mult(2) < 1:
        raise NoSl2Triple("the weight-2 space of the grading is zero")
    sl2_decomposition(ch)  # raises NotIntegrable on negative peeling
    return e


def from_principal(rs: RootSystem) -> Sl2Embedding:
    """Defining vector with alpha_i(h) = 2 on every simple root.

    Trace-zero factor blocks additionally get a zero-sum constraint to
    pin the otherwise shift-ambiguous coordinates.
    """
    rows = [list(a.coords) for a in rs.simple_roots]
    rhs = [Fraction(2)] * len(rows)
    for (fam, _), (lo, hi) in zip(rs.type_label, rs.factor_slices):
        if fam in TRACE_ZERO_FAMILIES:
            row = [Fraction(0)] * rs.ambient
            for i in range(lo, hi):
                row[i] = Fraction(1)
            rows.append(row)
            rhs.append(Fraction(0))
    solution = solve_unique(rows, rhs)
    return _validated(rs, Weight(tuple(solution)), kind="principal")


def from_root(rs: RootSystem, beta) -> Sl2Embedding:
    """Embedding generated by the root spaces of +-beta; h is the coroot."""
    beta_w = beta if isinstance(beta, Weight) else Weight.of(*beta)
    if not rs.is_root(beta_w):
        raise NotARoot(f"{tuple(beta_w.coords)} is not a root")
    h_vec = beta_w.scaled(Fraction(2) / _norm(beta_w))
    emb = _validated(rs, h_vec, kind="root", beta=beta_w)
    if emb.root_value(beta_w) != 2:
        raise InternalInconsistency("coroot normalization failed")
    return emb


def _norm(w: Weight) -> Fraction:
    return sum((c * c for c in w.coords), Fraction(0))


def t_character_of_g(e: Sl2Embedding) -> FiniteTCharacter:
    """Each root contributes at alpha(h); the Cartan contributes rank at 0."""
    mults: dict[int, int] = {0: e.rs.rank}
    for alpha in e.rs.roots:
        v = e.root_value(alpha)
        mults[v] = mults.get(v, 0) + 1
    return FiniteTCharacter(mults)


def sl2_decomposition(ch: FiniteTCharacter) -> Sl2Decomposition:
    """Weight-string peeling: counts(m) = ch(m) - ch(m+2), all >= 0."""
    if not ch.is_symmetric():
        raise InvalidInput("t-character must be symmetric to peel")
    top = max(ch.mults) if ch.mults else 0
    counts = []
    for m in range(top, -1, -1):
        c = ch.mult(m) - ch.mult(m + 2)
        if c < 0:
            raise NotIntegrable(
                f"peeling failed: multiplicity drop {c} at weight {m}"
            )
        if c:
            counts.append((m, c))
    dec = Sl2Decomposition(counts=tuple(sorted(counts)))
    if dec.dimension() != ch.total():
        raise InternalInconsistency("peeling lost or gained dimension")
    return dec


def expand_decomposition(dec: Sl2Decomposition) -> FiniteTCharacter:
    """Inverse of peeling; used as a round-trip check."""
    mults: dict[int, int] = {}
    for m, c in dec.counts:
        for w in range(-m, m + 1, 2):
            mults[w] = mults.get(w, 0) + c
    return FiniteTCharacter(mults)


def is_regular(e: Sl2Embedding) -> bool:
    """True iff no root vanishes on h, i.e. the centralizer of t is a Cartan."""
    return all(e.root_value(alpha) != 0 for alpha in e.rs.roots)
