"""Named fixture matroids with exchange-verified bases and representations.

The catalog is the desk-scale test bed: small uniform matroids, the graphic
matroid of K4, the Fano plane over GF(2), and the non-Fano matroid over the
rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple

from .errors import InputError
from .matroid import Matroid
from .search import Representation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Matroid
    representation: Optional[Representation]


def uniform(r: int, n: int, name: Optional[str] = None) -> Matroid:
    """U_{r,n}: every r-subset is a basis."""
    if r < 0 or r > n:
        raise InputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(
        n,
        combinations(range(n), r),
        provenance={"op": "named", "name": name or f"U_{r}_{n}"},
    )


def _vandermonde(r: int, n: int) -> Representation:
    cols = tuple(tuple(Fraction(t) ** k for k in range(r)) for t in range(n))
    return Representation("rational", cols, r)


def _fano_columns() -> Tuple[tuple, ...]:
    # columns are the binary digits of 1..7; the first three are collinear
    return tuple(tuple((v >> k) & 1 for k in (2, 1, 0)) for v in range(1, 8))


def _k4_columns() -> Tuple[tuple, ...]:
    # edges of K4 as e_u - e_v, coordinate of vertex 3 dropped
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    cols = []
    for u, v in edges:
        w = [Fraction(0)] * 3
        if u < 3:
            w[u] = Fraction(1)
        if v < 3:
            w[v] = Fraction(-1)
        cols.append(tuple(w))
    return tuple(cols)


@lru_cache(maxsize=1)
def catalog() -> Tuple[CatalogEntry, ...]:
    entries = []

    def add(name: str, matroid: Matroid, rep: Representation):
        if rep.matroid() != matroid:
            raise InputError(f"catalog entry {name}: representation does not match bases")
        entries.append(CatalogEntry(name, matroid, rep))

    add("U_1_1", uniform(1, 1), _vandermonde(1, 1))
    add(
        "U_1_2",
        uniform(1, 2),
        Representation("rational", ((Fraction(1),), (Fraction(1),)), 1),
    )
    add("U_2_3", uniform(2, 3), Representation(2, ((1, 0), (0, 1), (1, 1)), 2))
    add("U_2_4", uniform(2, 4), _vandermonde(2, 4))
    add("U_2_5", uniform(2, 5), _vandermonde(2, 5))
    add("U_3_4", uniform(3, 4), _vandermonde(3, 4))
    add("U_3_5", uniform(3, 5), _vandermonde(3, 5))
    add("U_3_6", uniform(3, 6), _vandermonde(3, 6))

    k4_rep = Representation("rational", _k4_columns(), 3)
    add("M_K4", k4_rep.matroid(provenance={"op": "named", "name": "M_K4"}), k4_rep)

    fano_rep = Representation(2, _fano_columns(), 3)
    add("fano", fano_rep.matroid(provenance={"op": "named", "name": "fano"}), fano_rep)

    nonfano_cols = tuple(tuple(Fraction(x) for x in col) for col in _fano_columns())
    nonfano_rep = Representation("rational", nonfano_cols, 3)
    add(
        "nonfano",
        nonfano_rep.matroid(provenance={"op": "named", "name": "nonfano"}),
        nonfano_rep,
    )
    return tuple(entries)


def by_name(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise InputError(f"no catalog matroid named {name!r}")
