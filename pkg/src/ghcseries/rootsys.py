"""Exact root-system, Weyl-group and weight arithmetic.

Simple and semisimple algebras of types A, B, C, D, G2 and direct sums,
total rank at most 4, realized in the standard orthonormal coordinates
with the form <e_i, e_j> = delta_ij.  All arithmetic is over Fraction;
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    GroupMismatch,
    InternalInconsistency,
    InvalidInput,
    UnsupportedAlgebra,
    UnsupportedRank,
)

MAX_TOTAL_RANK = 4

# Families realized in the trace-zero subspace of their ambient block;
# only these need the mean-zero projection when weights are canonicalized.
TRACE_ZERO_FAMILIES = ("A", "G")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Weight:
    """Exact rational coordinate vector in the epsilon-basis."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(*values) -> "Weight":
        return Weight(tuple(_frac(v) for v in values))

    def __add__(self, other: "Weight") -> "Weight":
        _check_dim(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_dim(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scaled(self, c) -> "Weight":
        c = _frac(c)
        return Weight(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __len__(self) -> int:
        return len(self.coords)


def _check_dim(a: Weight, b: Weight) -> None:
    if len(a.coords) != len(b.coords):
        raise DimensionMismatch(
            f"ambient ranks differ: {len(a.coords)} vs {len(b.coords)}"
        )


def inner_product(a: Weight, b: Weight) -> Fraction:
    """Symmetric bilinear form; the epsilon-basis is orthonormal."""
    _check_dim(a, b)
    return sum((x * y for x, y in zip(a.coords, b.coords)), Fraction(0))


def evaluate(alpha: Weight, h_vector: Weight) -> Fraction:
    """Value alpha(h) for h given by its epsilon-coordinates."""
    return inner_product(alpha, h_vector)


def coroot_pairing(lam: Weight, alpha: Weight) -> Fraction:
    """<lam, alpha^vee> = 2<lam, alpha>/<alpha, alpha>."""
    norm = inner_product(alpha, alpha)
    if norm == 0:
        raise InvalidInput("coroot pairing against the zero vector")
    return 2 * inner_product(lam, alpha) / norm


def lex_positive(w: Weight) -> bool:
    for c in w.coords:
        if c != 0:
            return c > 0
    return False


def _unit(n: int, i: int) -> Weight:
    return Weight(tuple(Fraction(1 if j == i else 0) for j in range(n)))


def _embed(block: Sequence[Fraction], offset: int, ambient: int) -> Weight:
    coords = [Fraction(0)] * ambient
    for i, c in enumerate(block):
        coords[offset + i] = _frac(c)
    return Weight(tuple(coords))


def _factor_data(family: str, rank: int):
    """Simple roots and full root set of one irreducible factor.

    Returned in local block coordinates.  Positive roots are exactly the
    lexicographically positive ones in every realization used here.
    """
    f = Fraction
    if family == "A":
        dim = rank + 1
        simples = [[f(0)] * dim for _ in range(rank)]
        for i in range(rank):
            simples[i][i], simples[i][i + 1] = f(1), f(-1)
        roots = []
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = [f(0)] * dim
                    v[i], v[j] = f(1), f(-1)
                    roots.append(v)
        return dim, simples, roots
    if family in ("B", "C"):
        dim = rank
        simples = [[f(0)] * dim for _ in range(rank)]
        for i in range(rank - 1):
            simples[i][i], simples[i][i + 1] = f(1), f(-1)
        simples[rank - 1][rank - 1] = f(1) if family == "B" else f(2)
        roots = []
        for i in range(dim):
            for j in range(i + 1, dim):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [f(0)] * dim
                        v[i], v[j] = f(si), f(sj)
                        roots.append(v)
        scale = 1 if family == "B" else 2
        for i in range(dim):
            for s in (1, -1):
                v = [f(0)] * dim
                v[i] = f(s * scale)
                roots.append(v)
        return dim, simples, roots
    if family == "D":
        dim = rank
        simples = [[f(0)] * dim for _ in range(rank)]
        for i in range(rank - 1):
            simples[i][i], simples[i][i + 1] = f(1), f(-1)
        simples[rank - 1][rank - 2] = f(1)
        simples[rank - 1][rank - 1] = f(1)
        roots = []
        for i in range(dim):
            for j in range(i + 1, dim):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [f(0)] * dim
                        v[i], v[j] = f(si), f(sj)
                        roots.append(v)
        return dim, simples, roots
    if family == "G":
        # Trace-zero realization in Q^3, coordinates ordered so that the
        # classical positive system is the lexicographically positive one.
        simples = [[f(0), f(1), f(-1)], [f(1), f(-2), f(1)]]
        positives = [
            [f(0), f(1), f(-1)],
            [f(1), f(-2), f(1)],
            [f(1), f(-1), f(0)],
            [f(1), f(0), f(-1)],
            [f(1), f(1), f(-2)],
            [f(2), f(-1), f(-1)],
        ]
        roots = positives + [[-c for c in v] for v in positives]
        return 3, simples, roots
    raise UnsupportedAlgebra(f"family {family!r} not supported")


@dataclass(frozen=True)
class RootSystem:
    """Root data of a semisimple algebra in a fixed exact realization."""

    type_label: tuple[tuple[str, int], ...]
    ambient: int
    roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    rho_tilde: Weight
    factor_slices: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.type_label)

    @property
    def dim(self) -> int:
        return len(self.roots) + self.rank

    def is_root(self, w: Weight) -> bool:
        return w.coords in {r.coords for r in self.roots}


def build_root_system(spec: Iterable[tuple[str, int]]) -> RootSystem:
    """Build the direct sum of the listed (family, rank) factors."""
    spec = tuple((str(fam).upper(), int(rank)) for fam, rank in spec)
    if not spec:
        raise UnsupportedAlgebra("empty algebra specification")
    for fam, rank in spec:
        if fam not in ("A", "B", "C", "D", "G"):
            raise UnsupportedAlgebra(f"family {fam!r} not in A, B, C, D, G")
        if rank < 1:
            raise UnsupportedAlgebra(f"rank {rank} must be positive")
        if fam == "D" and rank < 2:
            raise UnsupportedAlgebra("type D requires rank >= 2")
        if fam == "G" and rank != 2:
            raise UnsupportedAlgebra("type G exists only in rank 2")
    total_rank = sum(r for _, r in spec)
    if total_rank > MAX_TOTAL_RANK:
        raise UnsupportedAlgebra(
            f"total rank {total_rank} exceeds ceiling {MAX_TOTAL_RANK}"
        )

    blocks = [_factor_data(fam, rank) for fam, rank in spec]
    ambient = sum(b[0] for b in blocks)
    slices = []
    offset = 0
    simple_roots: list[Weight] = []
    roots: list[Weight] = []
    for dim, simples, factor_roots in blocks:
        slices.append((offset, offset + dim))
        simple_roots += [_embed(v, offset, ambient) for v in simples]
        roots += [_embed(v, offset, ambient) for v in factor_roots]
        offset += dim

    positive = tuple(r for r in roots if lex_positive(r))
    if 2 * len(positive) != len(roots):
        raise InternalInconsistency("positive roots are not half of all roots")
    rho_tilde = _half_sum(positive, ambient)
    return RootSystem(
        type_label=spec,
        ambient=ambient,
        roots=tuple(roots),
        positive_roots=positive,
        simple_roots=tuple(simple_roots),
        rho_tilde=rho_tilde,
        factor_slices=tuple(slices),
    )


def _half_sum(weights: Sequence[Weight], ambient: int) -> Weight:
    total = Weight(tuple(Fraction(0) for _ in range(ambient)))
    for w in weights:
        total = total + w
    return total.scaled(Fraction(1, 2))


@dataclass(frozen=True)
class WeylElement:
    """Orthogonal matrix acting on epsilon-coordinates, with a length."""

    matrix: tuple[tuple[Fraction, ...], ...]
    length: int

    def apply(self, w: Weight) -> Weight:
        if len(w.coords) != len(self.matrix):
            raise DimensionMismatch(
                f"element acts on dimension {len(self.matrix)}, got {len(w.coords)}"
            )
        return Weight(
            tuple(
                sum((row[j] * w.coords[j] for j in range(len(row))), Fraction(0))
                for row in self.matrix
            )
        )

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )


def identity_element(ambient: int) -> WeylElement:
    m = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(ambient))
        for i in range(ambient)
    )
    return WeylElement(matrix=m, length=0)


def reflection_matrix(alpha: Weight) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of s_alpha: v -> v - <v, alpha^vee> alpha."""
    n = len(alpha.coords)
    norm = inner_product(alpha, alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = Fraction(1 if i == j else 0)
            val -= 2 * alpha.coords[i] * alpha.coords[j] / norm
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0))
            for j in range(n)
        )
        for i in range(n)
    )


def _apply_matrix(m, w: Weight) -> Weight:
    return WeylElement(matrix=m, length=0).apply(w)


def length_of(matrix, positive_roots: Sequence[Weight]) -> int:
    """Number of given positive roots sent outside the positive set."""
    positive_set = {r.coords for r in positive_roots}
    count = 0
    for r in positive_roots:
        if _apply_matrix(matrix, r).coords not in positive_set:
            count += 1
    return count


def generate_group(
    generators: Sequence[Weight], positive_roots: Sequence[Weight], ambient: int
) -> tuple[WeylElement, ...]:
    """Closure of the reflections in the given roots, lengths re-derived.

    Elements are returned sorted by (length, matrix) so the order is
    deterministic and independent of generator order.
    """
    gen_mats = [reflection_matrix(a) for a in generators]
    ident = identity_element(ambient).matrix
    seen = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for m in frontier:
            for g in gen_mats:
                prod = _mat_mul(g, m)
                if prod not in seen:
                    seen.add(prod)
                    new_frontier.append(prod)
        frontier = new_frontier
    elements = [
        WeylElement(matrix=m, length=length_of(m, positive_roots)) for m in seen
    ]
    elements.sort(key=lambda e: (e.length, e.matrix))
    return tuple(elements)


def weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    """The full Weyl group, enumerated by closure under simple reflections."""
    return generate_group(rs.simple_roots, rs.positive_roots, rs.ambient)


def _orthogonality_components(
    positive_roots: Sequence[Weight],
) -> tuple[tuple[Weight, ...], ...]:
    """Partition positive roots into mutually orthogonal components."""
    n = len(positive_roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if inner_product(positive_roots[i], positive_roots[j]) != 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[Weight]] = {}
    for i, r in enumerate(positive_roots):
        groups.setdefault(find(i), []).append(r)
    comps = [tuple(g) for g in groups.values()]
    comps.sort(key=lambda c: tuple(r.coords for r in c))
    return tuple(comps)


def _span_rank(weights: Sequence[Weight]) -> int:
    rows = [list(w.coords) for w in weights]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                factor = rows[r][c] / rows[rank][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def bruhat_leq_over(
    x: WeylElement, y: WeylElement, positive_roots: Sequence[Weight]
) -> bool:
    """Bruhat comparison componentwise over orthogonality components.

    Within each component the closed rule for rank <= 2 reflection groups
    applies: u <= w iff u = w or the component length of u is strictly
    smaller.  Components of rank >= 3 are rejected.
    """
    for comp in _orthogonality_components(positive_roots):
        if _span_rank(comp) > 2:
            raise UnsupportedRank(
                "Bruhat order implemented only for rank <= 2 components"
            )
        same = all(x.apply(r) == y.apply(r) for r in comp)
        if same:
            continue
        positive_set = {r.coords for r in comp}
        lx = sum(1 for r in comp if x.apply(r).coords not in positive_set)
        ly = sum(1 for r in comp if y.apply(r).coords not in positive_set)
        if lx >= ly:
            return False
    return True


def bruhat_leq(x: WeylElement, y: WeylElement, rs: RootSystem) -> bool:
    """Bruhat order on the full Weyl group of rs."""
    root_set = {r.coords for r in rs.roots}
    for e in (x, y):
        if len(e.matrix) != rs.ambient:
            raise GroupMismatch("element dimension does not match the root system")
        if any(e.apply(r).coords not in root_set for r in rs.roots):
            raise GroupMismatch("element does not permute the root set")
    return bruhat_leq_over(x, y, rs.positive_roots)


def dot_orbit(kappa: Weight, rs: RootSystem) -> list[tuple[WeylElement, Weight]]:
    """All pairs (w, w(kappa)) over the Weyl group, in group order."""
    return [(w, w.apply(kappa)) for w in weyl_group(rs)]


def project_trace_zero(w: Weight, rs: RootSystem) -> Weight:
    """Subtract the block mean on every trace-zero factor block.

    Evaluations against roots are invariant under this shift; it is used
    to compare weights that are only defined modulo (1, ..., 1) per block.
    """
    coords = list(w.coords)
    for (fam, _), (lo, hi) in zip(rs.type_label, rs.factor_slices):
        if fam in TRACE_ZERO_FAMILIES:
            mean = sum(coords[lo:hi], Fraction(0)) / (hi - lo)
            for i in range(lo, hi):
                coords[i] -= mean
    return Weight(tuple(coords))
