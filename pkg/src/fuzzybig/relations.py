"""Finite fuzzy relations and fuzzy sets over a frame.

Both types keep a normal form: pairs (or elements) at degree bottom are
never stored, so structural equality of the entry maps is exactly equality
of the relations.  Elements come in three sorts -- site/root numbers,
identifier strings, and ``(node, index)`` port pairs -- and
:func:`element_sort_key` gives them one total order for canonical output.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .errors import FrameMismatchError
from .lattice import Frame, FrameValue

Element = object
Port = tuple  # (node identifier, port index)


def element_sort_key(element):
    """Total order over mixed element sorts, for deterministic output."""
    if isinstance(element, bool):
        raise TypeError("booleans are not model elements")
    if isinstance(element, int):
        return (0, "", element, 0)
    if isinstance(element, str):
        return (1, element, 0, 0)
    if isinstance(element, tuple) and len(element) == 2:
        return (2, element[0], 0, element[1])
    raise TypeError(f"unsupported element {element!r}")


def _as_entries(entries) -> Iterable[tuple]:
    if isinstance(entries, Mapping):
        return entries.items()
    return entries


class FuzzyRelation:
    """A degree-valued map on ``domain x codomain`` with finite support.

    Absent pairs have degree bottom; stored entries are always strictly
    above bottom.
    """

    __slots__ = ("frame", "domain", "codomain", "_entries")

    def __init__(self, frame: Frame, domain, codomain, entries=()):
        self.frame = frame
        self.domain = frozenset(domain)
        self.codomain = frozenset(codomain)
        store: dict = {}
        for (a, b), degree in _as_entries(entries):
            frame.check_value(degree)
            if a not in self.domain or b not in self.codomain:
                raise ValueError(
                    f"relation entry ({a!r}, {b!r}) lies outside its domain/codomain"
                )
            if degree.is_bottom():
                continue
            if (a, b) in store:
                raise ValueError(f"duplicate relation entry for ({a!r}, {b!r})")
            store[(a, b)] = degree
        self._entries = store

    def __len__(self) -> int:
        return len(self._entries)

    def degree(self, a, b) -> FrameValue:
        return self._entries.get((a, b), self.frame.bottom)

    def items(self):
        """Iterate ``((a, b), degree)`` over the stored (positive) entries."""
        return iter(self._entries.items())

    def sorted_items(self):
        return sorted(
            self._entries.items(),
            key=lambda kv: (element_sort_key(kv[0][0]), element_sort_key(kv[0][1])),
        )

    def entry_dict(self) -> dict:
        return dict(self._entries)

    def then(self, other: "FuzzyRelation") -> "FuzzyRelation":
        """Relational composition ``self ; other`` (sup-min over the middle).

        Middle elements are matched by equality between this relation's
        codomain and the other's domain; the result relates ``self.domain``
        to ``other.codomain``.
        """
        if self.frame != other.frame:
            raise FrameMismatchError(
                f"cannot compose relations over {self.frame.name} and {other.frame.name}"
            )
        by_mid: dict = {}
        for (b, c), d in other._entries.items():
            by_mid.setdefault(b, []).append((c, d))
        out: dict = {}
        for (a, b), d1 in self._entries.items():
            for c, d2 in by_mid.get(b, ()):
                deg = d1.meet(d2)
                if deg.is_bottom():
                    continue
                prev = out.get((a, c))
                out[(a, c)] = deg if prev is None else prev.join(deg)
        return FuzzyRelation(self.frame, self.domain, other.codomain, out)

    def union(self, other: "FuzzyRelation") -> "FuzzyRelation":
        """Disjoint union: domains must not overlap, entries are merged."""
        if self.frame != other.frame:
            raise FrameMismatchError("cannot union relations over different frames")
        shared = self.domain & other.domain
        if shared:
            raise ValueError(f"relation domains overlap on {sorted(map(repr, shared))}")
        merged = dict(self._entries)
        merged.update(other._entries)
        return FuzzyRelation(
            self.frame,
            self.domain | other.domain,
            self.codomain | other.codomain,
            merged,
        )

    def leq(self, other: "FuzzyRelation") -> bool:
        """Pointwise order: every degree of ``self`` lies below ``other``'s."""
        if self.frame != other.frame:
            raise FrameMismatchError("cannot compare relations over different frames")
        return all(d.leq(other.degree(a, b)) for (a, b), d in self._entries.items())

    def translate(
        self,
        dom_map: Callable | None = None,
        cod_map: Callable | None = None,
    ) -> "FuzzyRelation":
        """Rename elements through the given callables (identity if None)."""
        dm = dom_map or (lambda e: e)
        cm = cod_map or (lambda e: e)
        return FuzzyRelation(
            self.frame,
            {dm(e) for e in self.domain},
            {cm(e) for e in self.codomain},
            {(dm(a), cm(b)): d for (a, b), d in self._entries.items()},
        )

    def with_entry(self, a, b, degree: FrameValue) -> "FuzzyRelation":
        """Copy with one entry replaced (bottom removes the entry)."""
        self.frame.check_value(degree)
        entries = dict(self._entries)
        entries.pop((a, b), None)
        if not degree.is_bottom():
            entries[(a, b)] = degree
        return FuzzyRelation(self.frame, self.domain, self.codomain, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FuzzyRelation)
            and self.frame == other.frame
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self._entries == other._entries
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"FuzzyRelation({len(self._entries)} entries, "
            f"{len(self.domain)}x{len(self.codomain)}, {self.frame.name})"
        )


def identity_relation(frame: Frame, elements) -> FuzzyRelation:
    """The fuzzy identity: degree top on equal pairs, bottom elsewhere."""
    elements = frozenset(elements)
    top = frame.top
    return FuzzyRelation(frame, elements, elements, {(e, e): top for e in elements})


def relation_from_function(frame: Frame, mapping: Mapping, domain, codomain) -> FuzzyRelation:
    """The crisp graph of a function, at degree top."""
    top = frame.top
    return FuzzyRelation(
        frame, domain, codomain, {(a, b): top for a, b in mapping.items()}
    )


class FuzzySet:
    """A degree-valued set with finite support (absent elements at bottom)."""

    __slots__ = ("frame", "_entries")

    def __init__(self, frame: Frame, entries=()):
        self.frame = frame
        store: dict = {}
        seen_pairs = (
            entries.items() if isinstance(entries, Mapping) else entries
        )
        for element, degree in seen_pairs:
            frame.check_value(degree)
            if degree.is_bottom():
                continue
            if element in store:
                raise ValueError(f"duplicate fuzzy-set entry for {element!r}")
            store[element] = degree
        self._entries = store

    def __len__(self) -> int:
        return len(self._entries)

    def membership(self, element) -> FrameValue:
        return self._entries.get(element, self.frame.bottom)

    @property
    def support(self) -> frozenset:
        return frozenset(self._entries)

    def items(self):
        return iter(self._entries.items())

    def sorted_items(self):
        return sorted(self._entries.items(), key=lambda kv: element_sort_key(kv[0]))

    def union(self, other: "FuzzySet") -> "FuzzySet":
        if self.frame != other.frame:
            raise FrameMismatchError("cannot union fuzzy sets over different frames")
        shared = self.support & other.support
        if shared:
            raise ValueError(f"fuzzy-set supports overlap on {sorted(map(repr, shared))}")
        merged = dict(self._entries)
        merged.update(other._entries)
        return FuzzySet(self.frame, merged)

    def translate(self, mapping: Mapping) -> "FuzzySet":
        return FuzzySet(
            self.frame, {mapping.get(e, e): d for e, d in self._entries.items()}
        )

    def with_membership(self, element, degree: FrameValue) -> "FuzzySet":
        self.frame.check_value(degree)
        entries = dict(self._entries)
        entries.pop(element, None)
        if not degree.is_bottom():
            entries[element] = degree
        return FuzzySet(self.frame, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FuzzySet)
            and self.frame == other.frame
            and self._entries == other._entries
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FuzzySet({len(self._entries)} elements, {self.frame.name})"
