"""Adjoint maps: representation, verification, and minor constructions.

An adjoint of a matroid M is a simple matroid M' of the same rank together
with an injective, inclusion-reversing map of flats that sends the
hyperplanes of M bijectively onto the points of M'.  This module verifies
candidate maps check by check (every violation comes with a concrete
witness) and constructs adjoints of minors from an adjoint of the parent:

* contraction:  phi_C(F) = phi(F u C), target restricted to phi(cl(C));
* deletion (coindependent D):  phi_D(F) = phi(cl(F)) minus the points of the
  hyperplanes that vanish when D is removed;
* general minors: normalize the minor spec, contract, then delete.

Constructed maps are re-verified before being returned; a verification
failure there is a ConstructionError (an implementation bug), never a
silently wrong map.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Mapping, Optional, Tuple

from .errors import ConstructionError, InputError, PreconditionError, StructureError
from .lattice import hyperplane_chain
from .matroid import Matroid, MinorSpec, minor_normal_form
from .sets import ElementSet


@dataclass(frozen=True)
class Violation:
    check: str
    witness: tuple
    expected: str
    actual: str

    def __str__(self) -> str:
        w = ", ".join(repr(x) for x in self.witness)
        return f"[{self.check}] witness ({w}): expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class VerificationReport:
    checks_run: Tuple[str, ...]
    violations: Tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.checks_run + tuple(c for c in other.checks_run if c not in self.checks_run),
            self.violations + other.violations,
        )

    def summary(self) -> str:
        if self.valid:
            return f"valid ({len(self.checks_run)} checks: {', '.join(self.checks_run)})"
        lines = [f"INVALID: {len(self.violations)} violation(s)"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


@dataclass(frozen=True, eq=True)
class AdjointMap:
    """A total flat-to-flat table from a source matroid into a simple target.

    ``hyperplane_order`` lists the source hyperplanes in target-point order:
    entry i is the hyperplane mapped to point {i}.  It is None when the table
    is not point-bijective on hyperplanes (e.g. a failed candidate).
    """

    source: Matroid
    target: Matroid
    table: Dict[ElementSet, ElementSet]
    hyperplane_order: Optional[Tuple[ElementSet, ...]] = None

    def __post_init__(self):
        if self.hyperplane_order is None:
            object.__setattr__(self, "hyperplane_order", derive_hyperplane_order(self))

    def image(self, F: ElementSet) -> ElementSet:
        try:
            return self.table[F]
        except KeyError:
            raise StructureError(f"table has no entry for flat {F!r}") from None

    def pairs(self):
        """Table entries in canonical (lexicographic-by-flat) order."""
        return sorted(self.table.items(), key=lambda kv: (len(kv[0]), kv[0].key))


def derive_hyperplane_order(phi: AdjointMap) -> Optional[Tuple[ElementSet, ...]]:
    if phi.source.full_rank == 0:
        return ()
    by_point: dict = {}
    for H in phi.source.hyperplanes():
        img = phi.table.get(H)
        if img is None or len(img) != 1:
            return None
        (pt,) = img.members
        if pt in by_point:
            return None
        by_point[pt] = H
    if set(by_point) != set(range(phi.target.n)):
        return None
    return tuple(by_point[i] for i in range(phi.target.n))


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

DEFINITION_CHECKS = (
    "target_simple",
    "rank_match",
    "injectivity",
    "inclusion_reversal",
    "hyperplane_bijection",
    "ground_to_empty",
)


def _structural_check(phi: AdjointMap) -> list:
    """Raise StructureError unless the table is total on source flats with flat values."""
    src_flats = list(phi.source.flats().all_flats())
    missing = [F for F in src_flats if F not in phi.table]
    if missing:
        raise StructureError(f"table is not total: missing flats {missing[:3]}...")
    extra = set(phi.table) - set(src_flats)
    if extra:
        raise StructureError(f"table has keys that are not flats of the source: {sorted(extra, key=lambda f: f.key)[:3]}")
    tgt = phi.target.flats()
    for F, img in phi.table.items():
        if img.universe != phi.target.n or not tgt.is_flat(img):
            raise StructureError(f"image of {F!r} is {img!r}, which is not a flat of the target")
    return src_flats


def verify_adjoint(phi: AdjointMap) -> VerificationReport:
    """Run the definitional checks; report every violation with a witness.

    Checks run in a fixed order without short-circuiting, so reports are
    reproducible.  A table that is not even total (or maps to a non-flat) is
    a StructureError, not a failed check.
    """
    src_flats = _structural_check(phi)
    M, Mp = phi.source, phi.target
    violations = []

    # target simplicity
    for e in range(Mp.n):
        if Mp.rank(ElementSet.of([e], Mp.n)) == 0:
            violations.append(Violation("target_simple", (e,), "no loops", f"element {e} is a loop"))
    for e, f in combinations(range(Mp.n), 2):
        pair = ElementSet.of([e, f], Mp.n)
        if (Mp.rank(pair) == 1 and Mp.rank(ElementSet.of([e], Mp.n)) == 1
                and Mp.rank(ElementSet.of([f], Mp.n)) == 1):
            violations.append(Violation("target_simple", (e, f), "no parallel pairs", f"{{{e},{f}}} has rank 1"))

    # rank equality
    if M.full_rank != Mp.full_rank:
        violations.append(Violation("rank_match", (), f"target rank {M.full_rank}", str(Mp.full_rank)))

    # injectivity
    seen: dict = {}
    for F in sorted(src_flats, key=lambda f: (len(f), f.key)):
        img = phi.table[F]
        if img in seen:
            violations.append(Violation("injectivity", (seen[img], F), "distinct images", f"both map to {img!r}"))
        else:
            seen[img] = F

    # inclusion reversal
    for F1 in src_flats:
        for F2 in src_flats:
            if F1 != F2 and F1 <= F2 and not phi.table[F2] <= phi.table[F1]:
                violations.append(Violation(
                    "inclusion_reversal", (F1, F2),
                    f"phi({F2!r}) within phi({F1!r})",
                    f"{phi.table[F2]!r} is not within {phi.table[F1]!r}",
                ))

    # hyperplanes -> points bijectively
    points = set(Mp.flats().layer(1)) if Mp.full_rank >= 1 else set()
    hyperplanes = M.hyperplanes() if M.full_rank >= 1 else ()
    images = []
    for H in hyperplanes:
        img = phi.table[H]
        if img not in points:
            violations.append(Violation("hyperplane_bijection", (H,), "a point of the target", repr(img)))
        images.append(img)
    img_set = set(images)
    if len(img_set) != len(images):
        seen_pts: dict = {}
        for H, img in zip(hyperplanes, images):
            if img in seen_pts:
                violations.append(Violation(
                    "hyperplane_bijection", (seen_pts[img], H),
                    "distinct point images", f"both map to {img!r}",
                ))
            else:
                seen_pts[img] = H
    uncovered = points - img_set
    if uncovered:
        violations.append(Violation(
            "hyperplane_bijection", tuple(sorted(uncovered, key=lambda f: f.key)),
            "every point covered by a hyperplane image", "uncovered points remain",
        ))

    # phi(E) = cl'(empty) (forced for valid maps; checked explicitly)
    top = M.closure(M.groundset())
    want = Mp.closure(ElementSet.empty(Mp.n))
    if phi.table[top] != want:
        violations.append(Violation("ground_to_empty", (top,), repr(want), repr(phi.table[top])))

    return VerificationReport(DEFINITION_CHECKS, tuple(violations))


def check_rank_complement(phi: AdjointMap) -> VerificationReport:
    """r'(phi(F)) = r - r(F) for every flat F.

    On a map that passed verify_adjoint this is a theorem; any violation
    reported here indicates an implementation bug, not a bad input, and the
    violation text says so.
    """
    _structural_check(phi)
    r = phi.source.full_rank
    violations = []
    for F in phi.source.flats().all_flats():
        k = phi.source.rank(F)
        got = phi.target.rank(phi.table[F])
        if got != r - k:
            violations.append(Violation(
                "rank_complement", (F,), f"target rank {r - k}",
                f"{got} (a theorem violation: implementation bug, not bad input)",
            ))
    return VerificationReport(("rank_complement",), tuple(violations))


def check_chain_independence(phi: AdjointMap, chain) -> VerificationReport:
    """Images of a strictly-decreasing hyperplane chain are independent in the target."""
    _structural_check(phi)
    hp = set(phi.source.hyperplanes()) if phi.source.full_rank >= 1 else set()
    running = phi.source.groundset()
    for H in chain:
        if H not in hp:
            raise PreconditionError(f"{H!r} is not a hyperplane of the source")
        nxt = running & H
        if nxt == running:
            raise PreconditionError("chain violates the strict running-intersection condition")
        running = nxt
    violations = []
    images = []
    for H in chain:
        img = phi.table[H]
        if len(img) != 1:
            violations.append(Violation("chain_independence", (H,), "a point image", repr(img)))
        images.append(img)
    pts = set()
    for img in images:
        pts |= img.members
    union = ElementSet.of(pts, phi.target.n)
    distinct = len(set(images))
    if not violations and phi.target.rank(union) != distinct:
        violations.append(Violation(
            "chain_independence", tuple(chain),
            f"independent image set of size {distinct}",
            f"rank {phi.target.rank(union)}",
        ))
    return VerificationReport(("chain_independence",), tuple(violations))


def check_modular_pairs(phi: AdjointMap) -> VerificationReport:
    """phi(X), phi(Y) form a modular pair in the target, for all flats X, Y."""
    _structural_check(phi)
    Mp = phi.target
    flats = sorted(phi.source.flats().all_flats(), key=lambda f: (len(f), f.key))
    violations = []
    for i, X in enumerate(flats):
        for Y in flats[i:]:
            a, b = phi.table[X], phi.table[Y]
            join = Mp.closure(a | b)
            meet = a & b
            if Mp.rank(a) + Mp.rank(b) != Mp.rank(join) + Mp.rank(meet):
                violations.append(Violation(
                    "modular_pairs", (X, Y),
                    "r(phi X) + r(phi Y) = r(join) + r(meet)",
                    f"{Mp.rank(a)}+{Mp.rank(b)} != {Mp.rank(join)}+{Mp.rank(meet)}",
                ))
    return VerificationReport(("modular_pairs",), tuple(violations))


def full_verification(phi: AdjointMap) -> Dict[str, VerificationReport]:
    """Definition checks, rank complement, chain independence for every flat's
    canonical chain, and modular pairs.  Keys in a fixed order."""
    reports = {
        "definition": verify_adjoint(phi),
        "rank_complement": check_rank_complement(phi),
    }
    chain_report = VerificationReport(("chain_independence",), ())
    for X in phi.source.flats().all_flats():
        chain_report = chain_report.merged(
            check_chain_independence(phi, hyperplane_chain(phi.source, X))
        )
    reports["chain_independence"] = chain_report
    reports["modular_pairs"] = check_modular_pairs(phi)
    return reports


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def induced_map(M: Matroid, Mp: Matroid, bij: Mapping[ElementSet, int]) -> AdjointMap:
    """Extend a hyperplane -> point bijection to a candidate flat map.

    Each flat goes to the target closure of the points of the hyperplanes
    containing it.  For a valid adjoint this formula is forced; the result
    here is only a candidate and callers must run verify_adjoint.
    """
    if M.full_rank != Mp.full_rank:
        raise InputError(f"rank mismatch: source {M.full_rank}, target {Mp.full_rank}")
    if not Mp.is_simple():
        raise InputError("target matroid is not simple")
    hyperplanes = M.hyperplanes() if M.full_rank >= 1 else ()
    if set(bij) != set(hyperplanes):
        raise InputError("bijection is not total on the source hyperplanes")
    if sorted(bij.values()) != list(range(Mp.n)):
        raise InputError("bijection is not onto the points of the target")
    table = {}
    for F in M.flats().all_flats():
        pts = {bij[H] for H in hyperplanes if F <= H}
        table[F] = Mp.closure(ElementSet.of(pts, Mp.n))
    order = tuple(sorted(bij, key=bij.__getitem__))
    return AdjointMap(M, Mp, table, order)


def _relabeled_image(img: ElementSet, relabel: Mapping[int, int], new_n: int) -> ElementSet:
    return ElementSet.of((relabel[e] for e in img.members), new_n)


def contract_adjoint(phi: AdjointMap, C: ElementSet) -> AdjointMap:
    """Adjoint of M/C: F maps to phi(F u C); target restricted to phi(cl(C))."""
    M, Mp = phi.source, phi.target
    keep = phi.image(M.closure(C))
    new_source = M.contract(C)
    src_relabel = new_source.provenance["relabel"]
    src_inverse = {v: k for k, v in src_relabel.items()}
    new_target = Mp.restrict(keep)
    tgt_relabel = new_target.provenance["relabel"]
    table = {}
    for F in new_source.flats().all_flats():
        F_old = ElementSet.of((src_inverse[e] for e in F.members), M.n)
        img = phi.image(M.closure(F_old | C))  # F_old u C is already a flat; closure is a no-op
        table[F] = _relabeled_image(img, tgt_relabel, new_target.n)
    result = AdjointMap(new_source, new_target, table)
    report = verify_adjoint(result)
    if not report.valid:
        raise ConstructionError(f"contraction adjoint failed verification:\n{report.summary()}")
    return result


def vanishing_hyperplanes(M: Matroid, D: ElementSet) -> tuple:
    """Hyperplanes whose rank drops when D is removed, in canonical order.

    Both characterizations are computed and must agree: the rank drop
    r(H - D) < r(H), and H n D being codependent in the restriction M|H
    (checked through the dual of the restriction).
    """
    M._members(D)
    if M.full_rank == 0:
        return ()
    by_rank_drop = tuple(H for H in M.hyperplanes() if M.rank(H - D) < M.rank(H))
    by_codependence = []
    for H in M.hyperplanes():
        sub = M.restrict(H)
        relabel = sub.provenance["relabel"]
        inside = ElementSet.of((relabel[e] for e in (H & D).members), sub.n)
        if not sub.dual().is_independent(inside):
            by_codependence.append(H)
    if by_rank_drop != tuple(by_codependence):
        raise ConstructionError("the two characterizations of vanishing hyperplanes disagree")
    return by_rank_drop


def delete_adjoint(phi: AdjointMap, D: ElementSet) -> AdjointMap:
    """Adjoint of M\\D for coindependent D.

    F maps to phi(cl(F)) minus the points of the vanishing hyperplanes; the
    target is the old target minus those points.
    """
    M, Mp = phi.source, phi.target
    if not M.is_coindependent(D):
        raise PreconditionError(
            f"deletion set {D!r} is not coindependent; use minor_adjoint for general minors"
        )
    vanished = vanishing_hyperplanes(M, D)
    removed_points: set = set()
    for H in vanished:
        removed_points |= phi.image(H).members
    removed = ElementSet.of(removed_points, Mp.n)
    new_source = M.delete(D)
    src_inverse = {v: k for k, v in new_source.provenance["relabel"].items()}
    new_target = Mp.delete(removed)
    tgt_relabel = new_target.provenance["relabel"]
    table = {}
    for F in new_source.flats().all_flats():
        F_old = ElementSet.of((src_inverse[e] for e in F.members), M.n)
        img = phi.image(M.closure(F_old)) - removed
        table[F] = _relabeled_image(img, tgt_relabel, new_target.n)
    result = AdjointMap(new_source, new_target, table)
    report = verify_adjoint(result)
    if not report.valid:
        raise ConstructionError(f"deletion adjoint failed verification:\n{report.summary()}")
    return result


def minor_adjoint(phi: AdjointMap, spec: MinorSpec) -> AdjointMap:
    """Adjoint of M/C\\D for any disjoint C, D: normalize, contract, delete."""
    nf = minor_normal_form(phi.source, spec)
    after_contract = contract_adjoint(phi, nf.contract)
    relabel = after_contract.source.provenance["relabel"]
    D_new = nf.delete.relabel(relabel, after_contract.source.n)
    if not after_contract.source.is_coindependent(D_new):
        # contraction of a disjoint set preserves coindependence; reaching this is a bug
        raise ConstructionError(f"{D_new!r} lost coindependence under contraction")
    return delete_adjoint(after_contract, D_new)
