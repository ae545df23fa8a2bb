"""The geometric lattice of flats of a matroid.

Flats are enumerated level by level: the rank-0 flat is cl(empty), and the
flats covering a flat F are exactly the closures cl(F u {e}) for e outside F.
This avoids closing all 2^n subsets; the exhaustive version lives in the test
suite as an independent oracle.
"""
from __future__ import annotations

from typing import Dict, Iterator, Tuple

from .errors import ConstructionError, InputError
from .sets import ElementSet


class FlatLattice:
    """All flats of a matroid, grouped by rank, with cover (Hasse) structure."""

    def __init__(self, owner, flats_by_rank: Tuple[Tuple[ElementSet, ...], ...],
                 covers: Dict[ElementSet, frozenset]):
        self.owner = owner
        self.flats_by_rank = flats_by_rank
        self.covers = covers
        self._rank_of = {
            f: k for k, layer in enumerate(flats_by_rank) for f in layer
        }

    @classmethod
    def build(cls, M) -> "FlatLattice":
        bottom = M.closure(ElementSet.empty(M.n))
        layers = [(bottom,)]
        covers: Dict[ElementSet, frozenset] = {}
        current = [bottom]
        for _ in range(M.full_rank):
            nxt = set()
            for F in current:
                cov = set()
                for e in range(M.n):
                    if e not in F:
                        cov.add(M.closure(F.add(e)))
                covers[F] = frozenset(cov)
                nxt |= cov
            current = sorted(nxt, key=lambda f: f.key)
            layers.append(tuple(current))
        # top layer is the single rank-r flat (the ground set's closure)
        if len(layers[-1]) != 1:
            raise ConstructionError("expected a unique top flat")
        covers[layers[-1][0]] = frozenset()
        return cls(M, tuple(layers), covers)

    # -- queries ------------------------------------------------------------

    def layer(self, k: int) -> Tuple[ElementSet, ...]:
        if k < 0 or k >= len(self.flats_by_rank):
            raise InputError(f"no rank-{k} layer in a rank-{len(self.flats_by_rank) - 1} lattice")
        return self.flats_by_rank[k]

    def all_flats(self) -> Iterator[ElementSet]:
        for layer in self.flats_by_rank:
            yield from layer

    def flat_count(self) -> int:
        return sum(len(layer) for layer in self.flats_by_rank)

    def is_flat(self, F: ElementSet) -> bool:
        return F in self._rank_of

    def rank_of(self, F: ElementSet) -> int:
        try:
            return self._rank_of[F]
        except KeyError:
            raise InputError(f"{F!r} is not a flat") from None

    def cover_count(self) -> int:
        return sum(len(c) for c in self.covers.values())


def hyperplane_chain(M, X: ElementSet) -> list:
    """Hyperplanes H_1, ..., H_{r-k} through the rank-k flat X, intersecting to X.

    The running intersections strictly decrease.  Greedy with lexicographic
    tie-breaking: each step takes the least hyperplane containing X that
    shrinks the running intersection, which drops the rank by exactly one.
    For X the ground set the chain is empty.
    """
    lattice = M.flats()
    if not lattice.is_flat(X):
        raise InputError(f"{X!r} is not a flat of {M!r}")
    k = lattice.rank_of(X)
    if k == M.full_rank:
        return []
    hyperplanes = M.hyperplanes()
    chain = []
    running = M.groundset()
    while running != X:
        for H in hyperplanes:
            if X <= H and not running <= H:
                chain.append(H)
                running = running & H
                break
        else:
            raise ConstructionError(f"no hyperplane separates {running!r} from {X!r}")
    if len(chain) != M.full_rank - k:
        raise ConstructionError("hyperplane chain has the wrong length")
    return chain
