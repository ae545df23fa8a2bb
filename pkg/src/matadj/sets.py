"""Subsets of a fixed ground set {0, ..., n-1}.

ElementSet is the universal currency of the package: flats, bases, contraction
and deletion sets are all ElementSets.  Instances are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InputError


@dataclass(frozen=True)
class ElementSet:
    members: frozenset
    universe: int

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if self.universe < 0:
            raise InputError(f"universe size must be non-negative, got {self.universe}")
        for e in self.members:
            if not isinstance(e, int) or e < 0 or e >= self.universe:
                raise InputError(
                    f"element {e!r} out of range for ground set of size {self.universe}"
                )

    @classmethod
    def of(cls, members: Iterable[int], universe: int) -> "ElementSet":
        return cls(frozenset(members), universe)

    @classmethod
    def empty(cls, universe: int) -> "ElementSet":
        return cls(frozenset(), universe)

    @classmethod
    def full(cls, universe: int) -> "ElementSet":
        return cls(frozenset(range(universe)), universe)

    # -- container protocol -------------------------------------------------

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __bool__(self) -> bool:
        return bool(self.members)

    # -- set algebra (same universe required) -------------------------------

    def _coerce(self, other: "ElementSet") -> frozenset:
        if not isinstance(other, ElementSet):
            raise InputError(f"expected ElementSet, got {type(other).__name__}")
        if other.universe != self.universe:
            raise InputError(
                f"universe mismatch: {self.universe} vs {other.universe}"
            )
        return other.members

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members | self._coerce(other), self.universe)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members & self._coerce(other), self.universe)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members - self._coerce(other), self.universe)

    def __le__(self, other: "ElementSet") -> bool:
        """Subset test."""
        return self.members <= self._coerce(other)

    def issubset(self, other: "ElementSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "ElementSet") -> bool:
        return self.members.isdisjoint(self._coerce(other))

    def complement(self) -> "ElementSet":
        return ElementSet(frozenset(range(self.universe)) - self.members, self.universe)

    def add(self, e: int) -> "ElementSet":
        return ElementSet.of(self.members | {e}, self.universe)

    def remove(self, e: int) -> "ElementSet":
        return ElementSet(self.members - {e}, self.universe)

    # -- ordering and relabeling --------------------------------------------

    @property
    def key(self) -> tuple:
        """Canonical sort key: the sorted member tuple (lexicographic order)."""
        return tuple(sorted(self.members))

    def sorted(self) -> list:
        return sorted(self.members)

    def relabel(self, mapping: Mapping[int, int], new_universe: int) -> "ElementSet":
        """Push the set through an element relabeling (must be defined on all members)."""
        try:
            return ElementSet(frozenset(mapping[e] for e in self.members), new_universe)
        except KeyError as exc:
            raise InputError(f"relabeling undefined on element {exc.args[0]}") from exc

    def __repr__(self) -> str:
        inner = ",".join(str(e) for e in sorted(self.members))
        return f"{{{inner}}}/{self.universe}"
