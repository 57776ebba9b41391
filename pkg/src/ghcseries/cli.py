"""Command-line surface: analyze, character, block, socle, iwasawa.

Exit codes: 0 success, 2 invalid input, 3 declared-unsupported regime,
4 internal inconsistency.  Output goes to stdout as JSON (default) or
an aligned table; identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from .blocks import (
    central_character_from_kappa,
    iwasawa_sl3_support,
    multiplicity_matrix,
    socle_k_character,
)
from .charseries import ModuleDatumE, euler_k_character, f1_k_character, t_character_N
from .errors import GhcseriesError, InvalidInput, OutOfRegime
from .fixtures import FixturePair, get_fixture
from .parabolic import bounds_report, invariants, minimal_parabolic, mu_omega
from .report import character_pairs, rational, render_json, render_table, weight_coords
from .rootsys import Weight, build_root_system, weyl_group
from .sl2embed import (
    from_defining_vector,
    from_principal,
    from_root,
    is_regular,
    sl2_decomposition,
    t_character_of_g,
)

DEFAULT_CUTOFF = 60

_ALGEBRA_PART = re.compile(r"([A-Za-z])([0-9]+)")


def parse_algebra(text: str) -> tuple[tuple[str, int], ...]:
    parts = []
    for chunk in text.split("+"):
        m = _ALGEBRA_PART.fullmatch(chunk.strip())
        if not m:
            raise InvalidInput(
                f"cannot parse algebra component {chunk!r}; expected e.g. C2 or A1+A1"
            )
        parts.append((m.group(1).upper(), int(m.group(2))))
    return tuple(parts)


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    values = []
    for chunk in text.split(","):
        try:
            values.append(Fraction(chunk.strip()))
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"cannot parse rational {chunk!r}") from None
    return tuple(values)


def parse_embedding(text: str, rs):
    if text == "principal":
        return from_principal(rs)
    if text.startswith("root:"):
        return from_root(rs, Weight(parse_rationals(text[len("root:"):])))
    if text.startswith("vector:"):
        return from_defining_vector(rs, Weight(parse_rationals(text[len("vector:"):])))
    raise InvalidInput(
        f"cannot parse embedding {text!r}; expected principal, root:..., or vector:..."
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghcseries",
        description=(
            "Exact invariants, characters and multiplicity matrices for "
            "series of (g, sl(2))-modules attached to minimal parabolics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair_options(sp):
        sp.add_argument("--fixture", help="name of a built-in example pair")
        sp.add_argument("--algebra", help="e.g. C2, A2, A1+A1")
        sp.add_argument(
            "--embedding", help="principal, root:COORDS, or vector:COORDS"
        )
        sp.add_argument(
            "--lambda-convention",
            choices=("n", "perp"),
            default="n",
            dest="lambda_convention",
            help="read the lambda pair off n (default) or off n minus the e-line",
        )

    def add_output_options(sp):
        sp.add_argument("--cutoff", type=int, default=None)
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("analyze", help="invariants, bounds and regularity")
    add_pair_options(sp)
    add_output_options(sp)

    sp = sub.add_parser("character", help="t-character of N and k-character of F1")
    add_pair_options(sp)
    add_output_options(sp)
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--dim-e", type=int, default=1, dest="dim_e")
    sp.add_argument(
        "--allow-virtual",
        action="store_true",
        dest="allow_virtual",
        help="permit mu < 0 and report the negated Euler character instead",
    )

    sp = sub.add_parser("block", help="central-character block and matrices")
    add_pair_options(sp)
    add_output_options(sp)
    sp.add_argument("--kappa", required=True, help="e.g. 3/2,1/2")

    sp = sub.add_parser("socle", help="socle k-character of one block element")
    add_pair_options(sp)
    add_output_options(sp)
    sp.add_argument("--kappa", required=True)
    sp.add_argument("--mu", type=int, required=True, help="minimal k-type selector")

    sp = sub.add_parser("iwasawa", help="support of V(a) across a principal-series family")
    add_output_options(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--c", default="0", help="exact rational character parameter")

    return parser


def _cutoff(args) -> int:
    if args.cutoff is not None:
        value = args.cutoff
    else:
        raw = os.environ.get("GHCSERIES_CUTOFF", str(DEFAULT_CUTOFF))
        try:
            value = int(raw)
        except ValueError:
            raise InvalidInput(
                f"GHCSERIES_CUTOFF must be an integer, got {raw!r}"
            ) from None
    if value < 0:
        raise InvalidInput("cutoff must be nonnegative")
    return value


def _resolve_pair(args):
    if args.fixture:
        if args.algebra or args.embedding:
            raise InvalidInput("give either --fixture or --algebra/--embedding, not both")
        fixture = get_fixture(args.fixture)
        emb = fixture.build_embedding()
        label = fixture.algebra_label()
        emb_label = (
            "principal"
            if fixture.embedding == "principal"
            else "root:" + ",".join(str(c) for c in fixture.beta)
        )
        pair = {"fixture": fixture.name, "summary": fixture.summary}
    else:
        if not args.algebra or not args.embedding:
            raise InvalidInput("provide --fixture NAME, or both --algebra and --embedding")
        spec = parse_algebra(args.algebra)
        rs = build_root_system(spec)
        emb = parse_embedding(args.embedding, rs)
        label = "+".join(f"{fam}{rank}" for fam, rank in spec)
        emb_label = args.embedding
        pair = {"fixture": None, "summary": None}
    pair.update(
        {
            "algebra": label,
            "embedding": emb_label,
            "kind": emb.kind,
            "defining_vector": weight_coords(emb.h_vector),
            "regular": is_regular(emb),
        }
    )
    return pair, emb, minimal_parabolic(emb)


def _threshold_doc(threshold):
    if threshold is None:
        return None
    return {"exact": rational(threshold.exact), "smallest_mu": threshold.smallest_mu}


def cmd_analyze(args) -> dict:
    pair, emb, p = _resolve_pair(args)
    rs = emb.rs
    inv = invariants(p)
    bounds = bounds_report(p)
    conv = args.lambda_convention
    other = "perp" if conv == "n" else "n"
    decomposition = sl2_decomposition(t_character_of_g(emb))
    return {
        "command": "analyze",
        "pair": pair,
        "algebra": {
            "rank": rs.rank,
            "dimension": rs.dim,
            "root_count": len(rs.roots),
            "weyl_order": len(weyl_group(rs)),
            "adjoint_k_types": [[m, c] for m, c in decomposition.counts],
        },
        "parabolic": {
            "n_weights": list(p.n_weights),
            "r": p.r,
            "s": p.s,
            "m_root_count": len(p.m_roots),
            "rho_tilde_n": weight_coords(p.rho_tilde_n),
            "rho_tilde_adapted": weight_coords(p.rho_tilde_adapted),
        },
        "invariants": {
            "rho_n": rational(inv.rho_n),
            "rho": inv.rho,
            "two_rho_n_perp": inv.two_rho_n_perp,
            "lambda1_n": inv.lambda1_n,
            "lambda2_n": inv.lambda2_n,
            "lambda2_n_defaulted": inv.lambda2_n_defaulted,
            "lambda1_perp": inv.lambda1_perp,
            "lambda2_perp": inv.lambda2_perp,
            "lambda1_perp_defaulted": inv.lambda1_perp_defaulted,
            "lambda2_perp_defaulted": inv.lambda2_perp_defaulted,
        },
        "bounds": {
            "convention": conv,
            "weak": _threshold_doc(bounds.weak),
            "socle_simplicity": _threshold_doc(bounds.socle_simplicity(conv)),
            "strong": _threshold_doc(bounds.strong(conv)),
            "genericity": _threshold_doc(bounds.genericity),
            "prior_work": _threshold_doc(bounds.prior_work),
            "prior_work_coefficients": (
                None
                if bounds.prior_work_coefficients is None
                else [rational(c) for c in bounds.prior_work_coefficients]
            ),
            "other_convention": {
                "name": other,
                "socle_simplicity": _threshold_doc(bounds.socle_simplicity(other)),
                "strong": _threshold_doc(bounds.strong(other)),
            },
        },
    }


def cmd_character(args) -> dict:
    pair, emb, p = _resolve_pair(args)
    cutoff = _cutoff(args)
    mu = args.mu
    omega = mu_omega(p, mu, "mu_to_omega")
    datum = ModuleDatumE(omega=omega, dim_e=args.dim_e)
    n_char = t_character_N(p, datum, cutoff)
    if mu >= 0:
        k_char = f1_k_character(p, datum, cutoff)
        virtual = False
    elif args.allow_virtual:
        wide = t_character_N(p, datum, cutoff + 2)
        theta = euler_k_character(wide, cutoff)
        k_char = type(theta)(
            {d: -c for d, c in theta.mults.items()}, cutoff=cutoff, virtual=True
        )
        virtual = True
    else:
        raise OutOfRegime(
            f"mu = {mu} < 0 has no vanishing guarantee; pass --allow-virtual"
        )
    return {
        "command": "character",
        "pair": pair,
        "mu": mu,
        "omega": omega,
        "dim_e": args.dim_e,
        "cutoff": cutoff,
        "t_character_N": {
            "min_weight": mu + 2,
            "window_hi": cutoff,
            "mults": character_pairs(n_char.mults),
        },
        "k_character_F1": {
            "virtual": virtual,
            "mults": character_pairs(k_char.mults),
        },
    }


def _element_doc(element, orbit_id=None) -> dict:
    doc = {
        "mu": rational(element.mu),
        "omega": rational(element.omega),
        "nu": weight_coords(element.nu),
        "w_length": element.w.length,
        "dim_e": element.dim_e,
        "merged_count": element.merged_count,
    }
    if orbit_id is not None:
        doc["orbit_id"] = orbit_id
    return doc


def cmd_block(args) -> dict:
    pair, emb, p = _resolve_pair(args)
    kappa = central_character_from_kappa(Weight(parse_rationals(args.kappa)), emb.rs)
    matrix = multiplicity_matrix(kappa, p)
    return {
        "command": "block",
        "pair": pair,
        "kappa": [rational(c) for c in parse_rationals(args.kappa)],
        "central_character": {
            "representative": weight_coords(kappa.representative),
            "regular": kappa.regular,
            "integral": kappa.integral,
            "orbit_size": kappa.orbit_size,
        },
        "integral_group_order": matrix.integral_group_order,
        "elements": [
            _element_doc(e, oid) for e, oid in zip(matrix.elements, matrix.orbit_ids)
        ],
        "m_matrix": [list(row) for row in matrix.m_matrix],
        "p_matrix": [list(row) for row in matrix.p_matrix],
    }


def cmd_socle(args) -> dict:
    pair, emb, p = _resolve_pair(args)
    cutoff = _cutoff(args)
    kappa = central_character_from_kappa(Weight(parse_rationals(args.kappa)), emb.rs)
    matrix = multiplicity_matrix(kappa, p)
    hits = [e for e in matrix.elements if e.mu == args.mu]
    if not hits:
        mus = ", ".join(str(rational(e.mu)) for e in matrix.elements)
        raise InvalidInput(f"no block element with mu = {args.mu}; present: {mus}")
    if len(hits) > 1:
        raise InvalidInput(f"mu = {args.mu} is shared by {len(hits)} block elements")
    result = socle_k_character(p, matrix, hits[0], cutoff)
    character = result.character
    return {
        "command": "socle",
        "pair": pair,
        "kappa": [rational(c) for c in parse_rationals(args.kappa)],
        "mu": args.mu,
        "cutoff": cutoff,
        "element": _element_doc(result.element),
        "genuine_socle": result.genuine_socle,
        "regime": (
            "socle of the series module"
            if result.genuine_socle
            else "derived-functor character of the simple submodule"
        ),
        "character": {
            "mults": character_pairs(character.mults),
            "multiplicity_free": character.is_multiplicity_free(),
            "lowest_k_type": character.support_min(),
        },
    }


def cmd_iwasawa(args) -> dict:
    try:
        c = Fraction(args.c)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"cannot parse rational {args.c!r}") from None
    support = iwasawa_sl3_support(args.a, c)
    return {
        "command": "iwasawa",
        "a": support.a,
        "c": rational(support.c),
        "b_values": [rational(b) for b in support.b_values],
        "k_multiplicity": support.k_multiplicity,
    }


_DISPATCH = {
    "analyze": cmd_analyze,
    "character": cmd_character,
    "block": cmd_block,
    "socle": cmd_socle,
    "iwasawa": cmd_iwasawa,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _DISPATCH[args.command](args)
        text = render_json(doc) if args.format == "json" else render_table(doc)
    except GhcseriesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(text)
    return 0
