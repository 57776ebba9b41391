"""Named example pairs (g, k) used by the command line and the tests."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .parabolic import CompatibleParabolic, minimal_parabolic
from .rootsys import Weight, build_root_system
from .sl2embed import Sl2Embedding, from_principal, from_root


@dataclass(frozen=True)
class FixturePair:
    name: str
    algebra: tuple[tuple[str, int], ...]
    embedding: str  # "principal" | "root"
    beta: tuple[int, ...] | None
    summary: str

    def build_embedding(self) -> Sl2Embedding:
        rs = build_root_system(self.algebra)
        if self.embedding == "principal":
            return from_principal(rs)
        return from_root(rs, Weight.of(*self.beta))

    def build_parabolic(self) -> CompatibleParabolic:
        return minimal_parabolic(self.build_embedding())

    def algebra_label(self) -> str:
        return "+".join(f"{fam}{rank}" for fam, rank in self.algebra)


FIXTURES: dict[str, FixturePair] = {
    pair.name: pair
    for pair in (
        FixturePair(
            name="sl2xsl2-diagonal",
            algebra=(("A", 1), ("A", 1)),
            embedding="principal",
            beta=None,
            summary="diagonal sl(2) in sl(2) x sl(2)",
        ),
        FixturePair(
            name="sl3-root",
            algebra=(("A", 2),),
            embedding="root",
            beta=(1, -1, 0),
            summary="root sl(2) in sl(3)",
        ),
        FixturePair(
            name="sl3-principal",
            algebra=(("A", 2),),
            embedding="principal",
            beta=None,
            summary="principal sl(2) in sl(3)",
        ),
        FixturePair(
            name="sp4-long",
            algebra=(("C", 2),),
            embedding="root",
            beta=(2, 0),
            summary="long-root sl(2) in sp(4)",
        ),
        FixturePair(
            name="sp4-short",
            algebra=(("C", 2),),
            embedding="root",
            beta=(1, -1),
            summary="short-root sl(2) in sp(4)",
        ),
        FixturePair(
            name="sp4-principal",
            algebra=(("C", 2),),
            embedding="principal",
            beta=None,
            summary="principal sl(2) in sp(4)",
        ),
    )
}


def get_fixture(name: str) -> FixturePair:
    try:
        return FIXTURES[name]
    except KeyError:
        known = ", ".join(sorted(FIXTURES))
        raise InvalidInput(f"unknown fixture {name!r}; available: {known}") from None
