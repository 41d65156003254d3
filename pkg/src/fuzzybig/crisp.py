"""Crisp (Milner-style) bigraphs: the baseline the fuzzy algebra must match.

A bigraph pairs a place graph (a forest over the nodes, with numbered sites
as inner interface and numbered roots as outer interface) and a link graph
(a hypergraph-like structure wiring ports and inner names to edges and
outer names).  Sites and roots are plain natural numbers; node and edge
identifiers are opaque strings, so the two sorts never collide.

Composition and tensor product are realised through the two-point frame:
a crisp bigraph is lifted to a fuzzy one, combined there, and lowered back.
The test suite keeps this path honest with an independent hand-rolled
composition oracle.

Constructors are deliberately permissive; :func:`validate_bigraph` and
friends report every violated invariant instead of refusing to build the
value, so that broken models read from files can be diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import ValidationReport

Port = tuple  # (node identifier, port index)


@dataclass(frozen=True, eq=False)
class Signature:
    """Control names with their port arities."""

    arity: Mapping[str, int]

    def __post_init__(self):
        table = dict(self.arity)
        for control, ar in table.items():
            if not isinstance(control, str):
                raise TypeError(f"control names are strings, got {control!r}")
            if not isinstance(ar, int) or isinstance(ar, bool) or ar < 0:
                raise ValueError(f"arity of {control!r} must be a natural number")
        object.__setattr__(self, "arity", MappingProxyType(table))

    @property
    def controls(self) -> frozenset[str]:
        return frozenset(self.arity)

    def arity_of(self, control: str) -> int:
        try:
            return self.arity[control]
        except KeyError:
            raise ValueError(f"unknown control {control!r}") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, Signature) and dict(self.arity) == dict(other.arity)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Interface:
    """A bigraph interface: a width and a finite set of names."""

    width: int = 0
    names: frozenset[str] = frozenset()

    def __post_init__(self):
        if not isinstance(self.width, int) or isinstance(self.width, bool) or self.width < 0:
            raise ValueError("interface width must be a natural number")
        object.__setattr__(self, "names", frozenset(self.names))

    def __str__(self) -> str:
        if not self.names:
            return f"⟨{self.width},∅⟩"
        return f"⟨{self.width},{{{','.join(sorted(self.names))}}}⟩"


UNIT_INTERFACE = Interface(0, frozenset())  # the tensor unit ⟨0,∅⟩


def _freeze_ids(ids: Iterable[str], what: str) -> frozenset[str]:
    out = frozenset(ids)
    for ident in out:
        if not isinstance(ident, str):
            raise TypeError(f"{what} identifiers are strings, got {ident!r}")
    return out


@dataclass(frozen=True, eq=False)
class PlaceGraph:
    """A forest over the nodes: ``prnt`` sends sites and nodes to nodes and roots."""

    signature: Signature
    inner: int
    outer: int
    nodes: frozenset[str]
    ctrl: Mapping[str, str]
    prnt: Mapping[object, object]

    def __post_init__(self):
        object.__setattr__(self, "nodes", _freeze_ids(self.nodes, "node"))
        object.__setattr__(self, "ctrl", MappingProxyType(dict(self.ctrl)))
        object.__setattr__(self, "prnt", MappingProxyType(dict(self.prnt)))

    @property
    def sites(self) -> range:
        return range(self.inner)

    @property
    def roots(self) -> range:
        return range(self.outer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaceGraph)
            and self.signature == other.signature
            and self.inner == other.inner
            and self.outer == other.outer
            and self.nodes == other.nodes
            and dict(self.ctrl) == dict(other.ctrl)
            and dict(self.prnt) == dict(other.prnt)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class LinkGraph:
    """A hypergraph over the nodes: ``link`` sends points to edges and outer names."""

    signature: Signature
    inner: frozenset[str]
    outer: frozenset[str]
    nodes: frozenset[str]
    edges: frozenset[str]
    ctrl: Mapping[str, str]
    link: Mapping[object, str]

    def __post_init__(self):
        object.__setattr__(self, "inner", _freeze_ids(self.inner, "inner name"))
        object.__setattr__(self, "outer", _freeze_ids(self.outer, "outer name"))
        object.__setattr__(self, "nodes", _freeze_ids(self.nodes, "node"))
        object.__setattr__(self, "edges", _freeze_ids(self.edges, "edge"))
        object.__setattr__(self, "ctrl", MappingProxyType(dict(self.ctrl)))
        object.__setattr__(self, "link", MappingProxyType(dict(self.link)))

    @property
    def ports(self) -> frozenset[Port]:
        """Ports of the well-controlled nodes; unknown controls contribute none."""
        out = set()
        for v in self.nodes:
            control = self.ctrl.get(v)
            if control in self.signature.arity:
                out.update((v, i) for i in range(self.signature.arity[control]))
        return frozenset(out)

    @property
    def points(self) -> frozenset:
        return self.inner | self.ports

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinkGraph)
            and self.signature == other.signature
            and self.inner == other.inner
            and self.outer == other.outer
            and self.nodes == other.nodes
            and self.edges == other.edges
            and dict(self.ctrl) == dict(other.ctrl)
            and dict(self.link) == dict(other.link)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Bigraph:
    """A place graph and a link graph over one shared node set."""

    place: PlaceGraph
    link: LinkGraph

    @property
    def signature(self) -> Signature:
        return self.place.signature

    @property
    def nodes(self) -> frozenset[str]:
        return self.place.nodes

    @property
    def edges(self) -> frozenset[str]:
        return self.link.edges

    @property
    def inner(self) -> Interface:
        return Interface(self.place.inner, self.link.inner)

    @property
    def outer(self) -> Interface:
        return Interface(self.place.outer, self.link.outer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bigraph)
            and self.place == other.place
            and self.link == other.link
        )

    __hash__ = None  # type: ignore[assignment]


def is_hypergraph(vertices: Iterable, edge_family: Iterable[Iterable]) -> bool:
    """True iff every family member is nonempty and their union is the vertex set."""
    vs = set(vertices)
    union: set = set()
    for edge in edge_family:
        members = set(edge)
        if not members:
            return False
        union |= members
    return union == vs


def _walk_to_root(prnt: Mapping, start, nodes: frozenset, limit: int):
    """Follow a functional parent map from a node; None means a cycle/dead end."""
    current = start
    for _ in range(limit + 1):
        if current not in prnt:
            return None
        current = prnt[current]
        if not isinstance(current, str) or current not in nodes:
            return current
    return None


def validate_place_graph(p: PlaceGraph, subject: str = "place graph") -> ValidationReport:
    report = ValidationReport(subject)
    if p.inner < 0 or p.outer < 0:
        report.add("interface widths must be natural numbers")
    for v in sorted(p.nodes):
        control = p.ctrl.get(v)
        if control is None:
            report.add(f"control map is not total: node {v!r} has no control")
        elif control not in p.signature.arity:
            report.add(f"node {v!r} has unknown control {control!r}")
    for v in p.ctrl:
        if v not in p.nodes:
            report.add(f"control map mentions undeclared node {v!r}")
    domain = set(p.sites) | set(p.nodes)
    for child in sorted(domain, key=repr):
        if child not in p.prnt:
            report.add(f"parent map is not total: {child!r} has no parent")
    for child, parent in p.prnt.items():
        if child not in domain:
            report.add(f"parent map mentions unknown child {child!r}")
        if isinstance(parent, str):
            if parent not in p.nodes:
                report.add(f"parent of {child!r} is an undeclared node {parent!r}")
        elif isinstance(parent, int) and not isinstance(parent, bool):
            if not 0 <= parent < p.outer:
                report.add(f"parent of {child!r} is an out-of-range root {parent}")
        else:
            report.add(f"parent of {child!r} has unsupported sort: {parent!r}")
    for v in sorted(p.nodes):
        if v in p.prnt and _walk_to_root(p.prnt, v, p.nodes, len(p.nodes)) is None:
            report.add(f"parent map is cyclic at node {v!r}")
    return report


def validate_link_graph(l: LinkGraph, subject: str = "link graph") -> ValidationReport:
    report = ValidationReport(subject)
    for v in sorted(l.nodes):
        control = l.ctrl.get(v)
        if control is None:
            report.add(f"control map is not total: node {v!r} has no control")
        elif control not in l.signature.arity:
            report.add(f"node {v!r} has unknown control {control!r}")
    overlap = l.edges & l.outer
    if overlap:
        report.add(f"edge identifiers collide with outer names: {sorted(overlap)}")
    overlap = l.nodes & l.edges
    if overlap:
        report.add(f"node and edge identifiers overlap: {sorted(overlap)}")
    points = l.points
    for point in sorted(points, key=repr):
        if point not in l.link:
            report.add(f"link map is not total: point {point!r} is unlinked")
    links = l.edges | l.outer
    for point, target in l.link.items():
        if isinstance(point, tuple) and len(point) == 2:
            v, index = point
            if v not in l.nodes:
                report.add(f"link map mentions a port of undeclared node {v!r}")
            else:
                control = l.ctrl.get(v)
                bound = l.signature.arity.get(control, 0) if control else 0
                if not isinstance(index, int) or not 0 <= index < bound:
                    report.add(
                        f"port ({v!r}, {index}) violates the arity bound of control "
                        f"{control!r} ({bound} port(s))"
                    )
        elif isinstance(point, str):
            if point not in l.inner:
                report.add(f"link map mentions undeclared inner name {point!r}")
        else:
            report.add(f"link map has a point of unsupported sort: {point!r}")
        if target not in links:
            report.add(f"link target {target!r} is neither an edge nor an outer name")
    return report


def validate_bigraph(b: Bigraph, subject: str = "bigraph") -> ValidationReport:
    """Aggregate validity report: place, link, and the shared-structure glue."""
    report = ValidationReport(subject)
    report.extend(validate_place_graph(b.place), prefix="place: ")
    report.extend(validate_link_graph(b.link), prefix="link: ")
    if b.place.signature != b.link.signature:
        report.add("place and link graphs use different signatures")
    if b.place.nodes != b.link.nodes:
        report.add("place and link graphs disagree on the node set")
    elif dict(b.place.ctrl) != dict(b.link.ctrl):
        report.add("place and link graphs disagree on the control map")
    return report


def compose_crisp(g: Bigraph, f: Bigraph) -> Bigraph:
    """Composite ``g . f`` where f's outer interface meets g's inner one.

    Realised as the two-point specialisation of fuzzy composition.
    """
    from .fuzzy import compose_fuzzy, defuzzify, fuzzify

    return defuzzify(compose_fuzzy(fuzzify(g), fuzzify(f)))


def tensor_crisp(f: Bigraph, g: Bigraph) -> Bigraph:
    """Tensor product ``f ⊗ g``: widths add, name sets union disjointly."""
    from .fuzzy import defuzzify, fuzzify, tensor_fuzzy

    return defuzzify(tensor_fuzzy(fuzzify(f), fuzzify(g)))


def identity_crisp(interface: Interface, signature: Signature) -> Bigraph:
    """The crisp identity bigraph at an interface."""
    place = PlaceGraph(
        signature,
        interface.width,
        interface.width,
        frozenset(),
        {},
        {i: i for i in range(interface.width)},
    )
    link = LinkGraph(
        signature,
        interface.names,
        interface.names,
        frozenset(),
        frozenset(),
        {},
        {x: x for x in interface.names},
    )
    return Bigraph(place, link)


def _check_renaming(mapping: Mapping[str, str], domain: frozenset[str], what: str):
    extra = set(mapping) - domain
    if extra:
        raise ValueError(f"renaming mentions unknown {what}s: {sorted(extra)}")
    images = [mapping.get(x, x) for x in domain]
    if len(set(images)) != len(images):
        raise ValueError(f"renaming is not injective on {what}s")


def rename_crisp(
    b: Bigraph,
    node_map: Mapping[str, str] | None = None,
    edge_map: Mapping[str, str] | None = None,
) -> Bigraph:
    """Support translation for crisp bigraphs: explicit, never silent."""
    node_map = dict(node_map or {})
    edge_map = dict(edge_map or {})
    _check_renaming(node_map, b.nodes, "node")
    _check_renaming(edge_map, b.edges, "edge")

    def nm(v):
        return node_map.get(v, v)

    def place_elem(e):
        return nm(e) if isinstance(e, str) else e

    place = PlaceGraph(
        b.signature,
        b.place.inner,
        b.place.outer,
        {nm(v) for v in b.nodes},
        {nm(v): k for v, k in b.place.ctrl.items()},
        {place_elem(c): place_elem(p) for c, p in b.place.prnt.items()},
    )

    def point_elem(q):
        return (nm(q[0]), q[1]) if isinstance(q, tuple) else q

    def target_elem(t):
        return edge_map.get(t, t) if t in b.edges else t

    link = LinkGraph(
        b.signature,
        b.link.inner,
        b.link.outer,
        {nm(v) for v in b.nodes},
        {edge_map.get(e, e) for e in b.edges},
        {nm(v): k for v, k in b.link.ctrl.items()},
        {point_elem(q): target_elem(t) for q, t in b.link.link.items()},
    )
    return Bigraph(place, link)
