"""Adjoint fixtures: construction from matrix representations, and exhaustive search.

Two independent routes to an adjoint:

* ``adjoint_from_representation`` builds the classical covector adjoint of a
  representable matroid: each hyperplane's covector is the (1-dimensional)
  space of linear functionals vanishing on its columns, and the target is
  the matroid of those covectors.
* ``search_adjoint`` enumerates simple rank-r candidate targets on the
  hyperplane label set, in a fixed deterministic order, and returns the
  first one whose induced map verifies.  A budget refusal is reported as
  not-exhausted, never as a negative answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Tuple

from .adjoint import AdjointMap, induced_map, verify_adjoint
from .errors import ConstructionError, InputError
from .linalg import field_for, matrix_rank, normalize_covector, nullspace, rref
from .matroid import Matroid
from .sets import ElementSet


@dataclass(frozen=True)
class Representation:
    """Columns over GF(p) (``field`` an int) or the rationals (``field='rational'``)."""

    field: object
    columns: Tuple[tuple, ...]
    dim: int

    def __post_init__(self):
        for col in self.columns:
            if len(col) != self.dim:
                raise InputError(f"column {col!r} does not have dimension {self.dim}")

    @property
    def n(self) -> int:
        return len(self.columns)

    def _fld(self):
        return field_for(self.field)

    def rank_of(self, indices) -> int:
        rows = [self.columns[i] for i in indices]
        if not rows:
            return 0
        return matrix_rank(rows, self._fld())

    def matroid(self, provenance: Optional[dict] = None) -> Matroid:
        r = self.rank_of(range(self.n))
        bases = [c for c in combinations(range(self.n), r) if self.rank_of(c) == r]
        return Matroid(self.n, bases, provenance=provenance)

    def covector(self, H: ElementSet) -> tuple:
        """The canonical linear functional vanishing on the columns of H.

        The solution space must be 1-dimensional, which holds exactly when H
        spans a hyperplane of the column space.
        """
        fld = self._fld()
        rows = [self.columns[e] for e in H]
        if not rows:
            if self.dim != 1:
                raise InputError("covector space of the empty set is not 1-dimensional")
            return normalize_covector((fld.one,), fld)
        basis = nullspace(rows, fld)
        if len(basis) != 1:
            raise InputError(
                f"covector space of {H!r} has dimension {len(basis)}, expected 1"
            )
        return normalize_covector(basis[0], fld)

    # -- minors of representations ------------------------------------------

    def _contract_one(self, cols, label_index):
        fld = self._fld()
        col = cols[label_index]
        pivot = next((i for i, x in enumerate(col) if x != fld.zero), None)
        rest = [c for i, c in enumerate(cols) if i != label_index]
        if pivot is None:  # a loop: contraction equals deletion
            return rest
        out = []
        inv = fld.inv(col[pivot])
        for v in rest:
            factor = fld.mul(inv, v[pivot])
            w = [fld.sub(x, fld.mul(factor, y)) for x, y in zip(v, col)]
            del w[pivot]
            out.append(tuple(w))
        return out

    def minor(self, C: ElementSet, D: ElementSet) -> "Representation":
        """Representation of M/C\\D with the same dense relabeling as Matroid minors."""
        if not C.isdisjoint(D):
            raise InputError("contract and delete sets overlap")
        fld = self._fld()
        cols = [tuple(map(fld.coerce, c)) for c in self.columns]
        labels = list(range(self.n))
        for e in sorted(C.members):
            idx = labels.index(e)
            cols = self._contract_one(cols, idx)
            del labels[idx]
        for e in sorted(D.members):
            idx = labels.index(e)
            del cols[idx]
            del labels[idx]
        # drop dependent rows so the dimension equals the rank again
        if cols:
            dim = len(cols[0])
            rows = [tuple(c[i] for c in cols) for i in range(dim)]
            reduced, pivots = rref(rows, fld)
            kept = reduced[: len(pivots)]
            cols = [tuple(row[j] for row in kept) for j in range(len(cols))]
            new_dim = len(pivots)
        else:
            new_dim = 0
        return Representation(self.field, tuple(cols), new_dim)


def adjoint_from_representation(M: Matroid, rep: Representation) -> AdjointMap:
    """The covector adjoint of a represented matroid; verified before returning."""
    if M.full_rank < 1:
        raise InputError("adjoint construction needs rank at least 1")
    if rep.matroid() != M:
        raise InputError("representation does not match the matroid's bases")
    hyperplanes = M.hyperplanes()
    covectors = [rep.covector(H) for H in hyperplanes]
    target_rep = Representation(rep.field, tuple(covectors), rep.dim)
    target = target_rep.matroid(provenance={"op": "covector-adjoint"})
    bij = {H: i for i, H in enumerate(hyperplanes)}
    phi = induced_map(M, target, bij)
    report = verify_adjoint(phi)
    if not report.valid:
        raise ConstructionError(
            f"covector construction failed verification:\n{report.summary()}"
        )
    return phi


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    max_hyperplanes: int = 6
    max_candidates: int = 200_000
    deterministic: bool = True  # enumeration order is always fixed


@dataclass(frozen=True)
class SearchResult:
    found: Optional[AdjointMap]
    exhausted: bool
    candidates_examined: int
    diagnostic: Optional[str] = None


def _family_is_simple(family, m: int, r: int) -> bool:
    """Every element, and (for r >= 2) every pair, lies in some member."""
    covered = set()
    for b in family:
        covered.update(b)
    if len(covered) != m:
        return False
    if r >= 2:
        pair_cover = {p for b in family for p in combinations(b, 2)}
        if len(pair_cover) != m * (m - 1) // 2:
            return False
    elif m != 1:
        return False  # a simple rank-1 matroid has exactly one point
    return True


def _isomorphic(fam_a, fam_b, m: int) -> bool:
    if len(fam_a) != len(fam_b):
        return False
    set_b = set(fam_b)
    for perm in permutations(range(m)):
        if all(frozenset(perm[e] for e in b) in set_b for b in fam_a):
            return True
    return False


def search_adjoint(M: Matroid, budget: SearchBudget = SearchBudget(),
                   isomorphism_dedup: bool = False) -> SearchResult:
    """Find an adjoint of M by exhausting candidate targets.

    Candidates are simple rank-r matroids on the hyperplane labels, ordered
    by number of bases descending and then lexicographically; for each, all
    hyperplane bijections in lexicographic order.  ``exhausted`` is True only
    when the whole space was covered, so a budget refusal can never be read
    as non-existence.  Dedup by isomorphism is an optional optimization and
    never affects which map is returned first.
    """
    r = M.full_rank
    if r == 0:
        target = Matroid(0, [()])
        phi = AdjointMap(M, target, {M.closure(M.groundset()): ElementSet.empty(0)})
        return SearchResult(phi, True, 1)

    hyperplanes = M.hyperplanes()
    m = len(hyperplanes)
    if m > budget.max_hyperplanes:
        return SearchResult(
            None, False, 0,
            f"{m} hyperplanes exceeds the budget cap of {budget.max_hyperplanes}",
        )

    flat_info = []
    for F in M.flats().all_flats():
        hidx = frozenset(i for i, H in enumerate(hyperplanes) if F <= H)
        flat_info.append((M.rank(F), hidx))
    flat_info.sort(key=lambda t: -t[0])

    all_subsets = sorted(combinations(range(m), r))
    examined = 0
    seen_families = []
    for size in range(len(all_subsets), 0, -1):
        for chosen in combinations(all_subsets, size):
            family = [frozenset(b) for b in chosen]
            if not _family_is_simple(family, m, r):
                continue
            try:
                candidate = Matroid(m, family)
            except InputError:
                continue
            if isomorphism_dedup:
                if any(_isomorphic(family, f, m) for f in seen_families):
                    continue
                seen_families.append(family)
            examined += 1
            if examined > budget.max_candidates:
                return SearchResult(
                    None, False, examined - 1,
                    f"candidate budget of {budget.max_candidates} exhausted",
                )
            rank_cache: dict = {}

            def cand_rank(pts: frozenset) -> int:
                v = rank_cache.get(pts)
                if v is None:
                    v = max(len(pts & b) for b in candidate.bases)
                    rank_cache[pts] = v
                return v

            for perm in permutations(range(m)):
                ok = True
                for k, hidx in flat_info:
                    pts = frozenset(perm[i] for i in hidx)
                    if cand_rank(pts) != r - k:
                        ok = False
                        break
                if not ok:
                    continue
                bij = {H: perm[i] for i, H in enumerate(hyperplanes)}
                phi = induced_map(M, candidate, bij)
                if verify_adjoint(phi).valid:
                    return SearchResult(phi, False, examined)
    return SearchResult(None, True, examined)
