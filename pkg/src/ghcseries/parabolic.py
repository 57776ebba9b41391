"""Minimal compatible parabolic p = m + n and its numerical invariants.

The defining vector h grades g; n is spanned by the root spaces with
alpha(h) > 0 and m is the centralizer of t, so p is minimal by
construction.  Everything downstream (genericity, reconstruction
thresholds, block parameters) is a function of the multiset of values
alpha(h) over n together with the adapted positive system.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency, InvalidInput
from .linalg import solve_unique
from .rootsys import Weight, inner_product, lex_positive
from .sl2embed import Sl2Embedding


@dataclass(frozen=True)
class CompatibleParabolic:
    """p = m + n attached to the grading by the defining vector."""

    embedding: Sl2Embedding
    n_roots: tuple[Weight, ...]
    m_roots: tuple[Weight, ...]
    n_weights: tuple[int, ...]
    m_positive_roots: tuple[Weight, ...]
    adapted_positive_roots: tuple[Weight, ...]
    rho_tilde_n: Weight
    rho_tilde_adapted: Weight

    @property
    def s(self) -> int:
        # n meets k exactly in the line through e.
        return 1

    @property
    def r(self) -> int:
        return len(self.n_roots) - 1

    def n_perp_weights(self) -> tuple[int, ...]:
        """t-weights on the complement of the e-line inside n."""
        weights = list(self.n_weights)
        try:
            weights.remove(2)
        except ValueError:
            raise InternalInconsistency("n carries no weight-2 root") from None
        return tuple(weights)


def minimal_parabolic(e: Sl2Embedding) -> CompatibleParabolic:
    """Split the roots by the sign of alpha(h); m is the zero part."""
    rs = e.rs
    graded: list[tuple[int, Weight]] = []
    m_roots: list[Weight] = []
    for alpha in rs.roots:
        v = e.root_value(alpha)
        if v > 0:
            graded.append((v, alpha))
        elif v == 0:
            m_roots.append(alpha)
    graded.sort(key=lambda pair: (pair[0], pair[1].coords))
    m_roots.sort(key=lambda a: a.coords)
    n_roots = tuple(alpha for _, alpha in graded)
    n_weights = tuple(v for v, _ in graded)
    if not n_roots:
        raise InternalInconsistency("validated embeddings grade at least one root positively")
    if 2 * len(n_roots) + len(m_roots) + rs.rank != rs.dim:
        raise InternalInconsistency("root grading lost dimensions")
    m_positive = tuple(a for a in m_roots if lex_positive(a))
    rho_tilde_n = _half_sum(n_roots, rs.ambient)
    rho_tilde_adapted = rho_tilde_n + _half_sum(m_positive, rs.ambient)
    return CompatibleParabolic(
        embedding=e,
        n_roots=n_roots,
        m_roots=tuple(m_roots),
        n_weights=n_weights,
        m_positive_roots=m_positive,
        adapted_positive_roots=n_roots + m_positive,
        rho_tilde_n=rho_tilde_n,
        rho_tilde_adapted=rho_tilde_adapted,
    )


def _half_sum(weights: Sequence[Weight], ambient: int) -> Weight:
    total = Weight(tuple(Fraction(0) for _ in range(ambient)))
    for w in weights:
        total = total + w
    return total.scaled(Fraction(1, 2))


@dataclass(frozen=True)
class ParabolicInvariants:
    """Scalar invariants of p; lambda pairs carried in both conventions."""

    rho_n: Fraction
    rho: int
    two_rho_n_perp: int
    rho_tilde_n: Weight
    lambda1_n: int
    lambda2_n: int
    lambda1_perp: int
    lambda2_perp: int
    lambda2_n_defaulted: bool
    lambda1_perp_defaulted: bool
    lambda2_perp_defaulted: bool

    def lambdas(self, convention: str = "n") -> tuple[int, int]:
        if convention == "n":
            return (self.lambda1_n, self.lambda2_n)
        if convention == "perp":
            return (self.lambda1_perp, self.lambda2_perp)
        raise InvalidInput(f"unknown lambda convention {convention!r}")


def _max_submax(weights: Sequence[int], fallback: int) -> tuple[int, int, bool, bool]:
    """(max, submax, max_defaulted, submax_defaulted) with multiplicity.

    An empty multiset falls back for the maximum; a singleton repeats the
    maximum as the submaximum.  Both degenerate cases are flagged.
    """
    ordered = sorted(weights, reverse=True)
    if not ordered:
        return fallback, fallback, True, True
    if len(ordered) == 1:
        return ordered[0], ordered[0], False, True
    return ordered[0], ordered[1], False, False


def invariants(p: CompatibleParabolic) -> ParabolicInvariants:
    total = sum(p.n_weights)
    rho_n = Fraction(total, 2)
    two_rho_n_perp = total - 2
    perp = p.n_perp_weights()
    if sum(perp) != two_rho_n_perp:
        raise InternalInconsistency("weight of the top exterior power drifted")
    l1n, l2n, _, l2n_def = _max_submax(p.n_weights, 0)
    l1p, l2p, l1p_def, l2p_def = _max_submax(perp, 0)
    if l1n < l1p:
        raise InternalInconsistency("dropping the e-line increased the maximum weight")
    return ParabolicInvariants(
        rho_n=rho_n,
        rho=1,
        two_rho_n_perp=two_rho_n_perp,
        rho_tilde_n=p.rho_tilde_n,
        lambda1_n=l1n,
        lambda2_n=l2n,
        lambda1_perp=l1p,
        lambda2_perp=l2p,
        lambda2_n_defaulted=l2n_def,
        lambda1_perp_defaulted=l1p_def,
        lambda2_perp_defaulted=l2p_def,
    )


@dataclass(frozen=True)
class GenericityResult:
    mu: int
    generic: bool
    witness: tuple[int, ...] | None
    rho_n: Fraction
    closed_form_threshold: Fraction
    closed_form_generic: bool
    rho_n_integral: bool


def genericity_scan(n_weights: Sequence[int], mu: int) -> tuple[bool, tuple[int, ...] | None]:
    """Definitional genericity test over submultisets of the n-weights.

    Checks (mu + 2 - rho_S) * rho_S > 0 for every nonempty submultiset S
    (the empty S is excluded: rho_S = 0 makes the product vacuously
    nonpositive), then the scalar comparison of mu + 2 against rho_n for
    the weight-2 line.  Returns a violating S as witness on failure.
    """
    distinct = sorted(set(n_weights))
    counts = [list(n_weights).count(v) for v in distinct]
    for combo in itertools.product(*(range(c + 1) for c in counts)):
        if not any(combo):
            continue
        rho_s = Fraction(sum(v * k for v, k in zip(distinct, combo)), 2)
        if (Fraction(mu) + 2 - rho_s) * rho_s <= 0:
            witness = tuple(
                v for v, k in zip(distinct, combo) for _ in range(k)
            )
            return False, witness
    if Fraction(mu) + 2 - Fraction(sum(n_weights), 2) < 0:
        return False, tuple(sorted(n_weights))
    return True, None


def genericity_check(p: CompatibleParabolic, mu: int) -> GenericityResult:
    """Run the submultiset scan and compare it with mu >= rho_n - 1.

    The two are provably equivalent when rho_n is an integer, so a
    disagreement there is an internal error.  Half-integral rho_n (possible
    for gradings that pass the necessary embedding checks without coming
    from a genuine sl(2)) keeps the scan as the verdict, unasserted.
    """
    if mu < 0:
        raise InvalidInput("genericity is evaluated for mu >= 0")
    rho_n = Fraction(sum(p.n_weights), 2)
    generic, witness = genericity_scan(p.n_weights, mu)
    threshold = rho_n - 1
    closed = Fraction(mu) >= threshold
    integral = rho_n.denominator == 1
    if integral and generic != closed:
        raise InternalInconsistency(
            "submultiset scan disagrees with the closed-form threshold"
        )
    return GenericityResult(
        mu=mu,
        generic=generic,
        witness=witness,
        rho_n=rho_n,
        closed_form_threshold=threshold,
        closed_form_generic=closed,
        rho_n_integral=integral,
    )


@dataclass(frozen=True)
class Threshold:
    """Exact bound together with the least integer mu satisfying it."""

    exact: Fraction
    smallest_mu: int


def _threshold(value) -> Threshold:
    exact = Fraction(value)
    return Threshold(exact=exact, smallest_mu=math.ceil(exact))


@dataclass(frozen=True)
class BoundsReport:
    weak: Threshold
    socle_simplicity_n: Threshold
    strong_n: Threshold
    socle_simplicity_perp: Threshold
    strong_perp: Threshold
    genericity: Threshold
    prior_work: Threshold | None
    prior_work_coefficients: tuple[Fraction, ...] | None

    def socle_simplicity(self, convention: str = "n") -> Threshold:
        return self.socle_simplicity_n if convention == "n" else self.socle_simplicity_perp

    def strong(self, convention: str = "n") -> Threshold:
        return self.strong_n if convention == "n" else self.strong_perp


def bounds_report(p: CompatibleParabolic) -> BoundsReport:
    """Reconstruction thresholds on mu, in both lambda conventions.

    For principal embeddings the earlier classification bound
    2*(sum r_i) - 1 is added, with the r_i read off from the expansion of
    rho_tilde in half simple roots.
    """
    inv = invariants(p)
    prior = None
    coefficients = None
    if p.embedding.kind == "principal":
        rs = p.embedding.rs
        rows = [
            [alpha.coords[i] for alpha in rs.simple_roots]
            for i in range(rs.ambient)
        ]
        rhs = [2 * c for c in rs.rho_tilde.coords]
        coefficients = tuple(solve_unique(rows, rhs))
        prior = _threshold(2 * sum(coefficients) - 1)
    return BoundsReport(
        weak=_threshold(0),
        socle_simplicity_n=_threshold(Fraction(inv.lambda1_n, 2)),
        strong_n=_threshold(Fraction(inv.lambda1_n + inv.lambda2_n, 2)),
        socle_simplicity_perp=_threshold(Fraction(inv.lambda1_perp, 2)),
        strong_perp=_threshold(Fraction(inv.lambda1_perp + inv.lambda2_perp, 2)),
        genericity=_threshold(inv.rho_n - 1),
        prior_work=prior,
        prior_work_coefficients=coefficients,
    )


def mu_omega(p: CompatibleParabolic, value: int, direction: str) -> int:
    """Translate between the minimal k-type mu and the t-weight omega of E."""
    shift = sum(p.n_weights) - 2
    if direction == "omega_to_mu":
        return value + shift
    if direction == "mu_to_omega":
        return value - shift
    raise InvalidInput(f"direction must be mu_to_omega or omega_to_mu, got {direction!r}")


def b_dominant(p: CompatibleParabolic, kappa: Weight) -> bool:
    """True iff kappa pairs nonnegatively with every adapted positive root."""
    return all(inner_product(kappa, g) >= 0 for g in p.adapted_positive_roots)
