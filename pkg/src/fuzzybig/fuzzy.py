"""Fuzzy bigraphs over a frame of degrees.

The control, parent and link maps of a crisp bigraph become fuzzy
relations: every pair carries a degree in the ambient frame, and absent
pairs sit at bottom.  Composition routes degrees through the shared
interface with the sup-min rule (join over middle positions of the meet of
the two legs), which is exactly what makes composition associative, and
tensor product shifts sites and roots of the right operand.

Crisp bigraphs embed at degree top (:func:`fuzzify`) and come back out of
relations that are functional at top (:func:`defuzzify`); composing over
the two-point frame therefore reproduces the crisp algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .crisp import Bigraph, Interface, LinkGraph, PlaceGraph, Port, Signature
from .errors import (
    InterfaceMismatchError,
    NameClashError,
    NotCrispError,
    SignatureMismatchError,
    SupportOverlapError,
    ValidationReport,
)
from .lattice import TWO_POINT, Frame
from .relations import FuzzyRelation, identity_relation


def derive_ports(signature: Signature, ctrl: FuzzyRelation) -> frozenset[Port]:
    """Ports owned by each node: the union of the port ranges of every
    control the node holds with positive degree.

    With several positive controls the widest arity wins, so the port set
    is the smallest one safe for all positive possibilities.
    """
    widest: dict[str, int] = {}
    for (v, control), _degree in ctrl.items():
        ar = signature.arity_of(control)
        if ar > widest.get(v, -1):
            widest[v] = ar
    ports = set()
    for v, ar in widest.items():
        ports.update((v, i) for i in range(ar))
    return frozenset(ports)


def _as_relation(frame: Frame, entries, domain, codomain) -> FuzzyRelation:
    if isinstance(entries, FuzzyRelation):
        entries = entries.entry_dict()
    return FuzzyRelation(frame, domain, codomain, entries)


def _check_ids(ids, what: str) -> frozenset[str]:
    out = frozenset(ids)
    for ident in out:
        if not isinstance(ident, str):
            raise TypeError(f"{what} identifiers are strings, got {ident!r}")
    return out


class FuzzyPlaceGraph:
    """A fuzzy forest: ``ctrl`` grades node/control pairs, ``prnt`` grades
    child/parent pairs over sites, nodes and roots."""

    __slots__ = ("frame", "signature", "inner", "outer", "nodes", "ctrl", "prnt")

    def __init__(self, frame, signature, inner, outer, nodes, ctrl, prnt):
        self.frame = frame
        self.signature = signature
        self.inner = int(inner)
        self.outer = int(outer)
        if self.inner < 0 or self.outer < 0:
            raise ValueError("interface widths must be natural numbers")
        self.nodes = _check_ids(nodes, "node")
        self.ctrl = _as_relation(frame, ctrl, self.nodes, signature.controls)
        self.prnt = _as_relation(
            frame,
            prnt,
            frozenset(range(self.inner)) | self.nodes,
            self.nodes | frozenset(range(self.outer)),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FuzzyPlaceGraph)
            and self.frame == other.frame
            and self.signature == other.signature
            and (self.inner, self.outer) == (other.inner, other.outer)
            and self.nodes == other.nodes
            and self.ctrl == other.ctrl
            and self.prnt == other.prnt
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"FuzzyPlaceGraph({self.inner}->{self.outer}, "
            f"{len(self.nodes)} nodes, {self.frame.name})"
        )


class FuzzyLinkGraph:
    """A fuzzy hypergraph: ``link`` grades point/link pairs, where points
    are inner names and ports, and links are edges and outer names."""

    __slots__ = (
        "frame",
        "signature",
        "inner",
        "outer",
        "nodes",
        "edges",
        "ctrl",
        "link",
        "ports",
    )

    def __init__(self, frame, signature, inner, outer, nodes, edges, ctrl, link):
        self.frame = frame
        self.signature = signature
        self.inner = _check_ids(inner, "inner name")
        self.outer = _check_ids(outer, "outer name")
        self.nodes = _check_ids(nodes, "node")
        self.edges = _check_ids(edges, "edge")
        shared = self.nodes & self.edges
        if shared:
            raise ValueError(f"node and edge identifiers overlap: {sorted(shared)}")
        shared = self.edges & self.outer
        if shared:
            raise ValueError(
                f"edge identifiers collide with outer names: {sorted(shared)}"
            )
        self.ctrl = _as_relation(frame, ctrl, self.nodes, signature.controls)
        self.ports = derive_ports(signature, self.ctrl)
        self.link = _as_relation(
            frame, link, self.inner | self.ports, self.edges | self.outer
        )

    @property
    def points(self) -> frozenset:
        return self.inner | self.ports

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FuzzyLinkGraph)
            and self.frame == other.frame
            and self.signature == other.signature
            and self.inner == other.inner
            and self.outer == other.outer
            and self.nodes == other.nodes
            and self.edges == other.edges
            and self.ctrl == other.ctrl
            and self.link == other.link
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"FuzzyLinkGraph({sorted(self.inner)}->{sorted(self.outer)}, "
            f"{len(self.nodes)} nodes, {len(self.edges)} edges, {self.frame.name})"
        )


class FuzzyBigraph:
    """A fuzzy place graph and a fuzzy link graph sharing nodes and controls."""

    __slots__ = ("place", "link")

    def __init__(self, place: FuzzyPlaceGraph, link: FuzzyLinkGraph):
        if place.frame != link.frame:
            raise ValueError("place and link parts use different frames")
        if place.signature != link.signature:
            raise ValueError("place and link parts use different signatures")
        if place.nodes != link.nodes:
            raise ValueError("place and link parts disagree on the node set")
        if place.ctrl != link.ctrl:
            raise ValueError("place and link parts disagree on the control relation")
        self.place = place
        self.link = link

    @property
    def frame(self) -> Frame:
        return self.place.frame

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
    def ctrl(self) -> FuzzyRelation:
        return self.place.ctrl

    @property
    def prnt(self) -> FuzzyRelation:
        return self.place.prnt

    @property
    def inner(self) -> Interface:
        return Interface(self.place.inner, self.link.inner)

    @property
    def outer(self) -> Interface:
        return Interface(self.place.outer, self.link.outer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FuzzyBigraph)
            and self.place == other.place
            and self.link == other.link
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FuzzyBigraph({self.inner}->{self.outer}, {self.frame.name})"


# --- shared precondition helpers ------------------------------------------


def _require_compatible(g, f) -> None:
    if f.frame != g.frame:
        raise SignatureMismatchError(
            f"frames differ: {f.frame.name} vs {g.frame.name}"
        )
    if f.signature != g.signature:
        raise SignatureMismatchError("signatures differ")


def _require_disjoint_nodes(f_nodes, g_nodes) -> None:
    shared = f_nodes & g_nodes
    if shared:
        raise SupportOverlapError(f"supports overlap on nodes {sorted(shared)}")


def _require_disjoint_support(f_sup, g_sup) -> None:
    shared = f_sup & g_sup
    if shared:
        raise SupportOverlapError(f"supports overlap on {sorted(shared)}")


# --- composition ------------------------------------------------------------


def compose_fuzzy_place(g: FuzzyPlaceGraph, f: FuzzyPlaceGraph) -> FuzzyPlaceGraph:
    """Composite ``g . f`` of fuzzy place graphs f: k->m and g: m->n.

    f-internal and g-internal parent entries are copied; a child of f whose
    parent mass sits on a root j of f is routed into g through site j, at
    the join over j of the meet of the two legs.
    """
    _require_compatible(g, f)
    if f.outer != g.inner:
        raise InterfaceMismatchError(
            f"place interface mismatch: expected inner width {f.outer}, got {g.inner}"
        )
    _require_disjoint_nodes(f.nodes, g.nodes)
    entries: dict = {}
    for (child, parent), degree in f.prnt.items():
        if parent in f.nodes:
            entries[(child, parent)] = degree
    for pair, degree in f.prnt.then(g.prnt).items():
        entries[pair] = degree
    for (child, parent), degree in g.prnt.items():
        if child in g.nodes:
            entries[(child, parent)] = degree
    return FuzzyPlaceGraph(
        f.frame,
        f.signature,
        f.inner,
        g.outer,
        f.nodes | g.nodes,
        f.ctrl.union(g.ctrl),
        entries,
    )


def compose_fuzzy_link(g: FuzzyLinkGraph, f: FuzzyLinkGraph) -> FuzzyLinkGraph:
    """Composite ``g . f`` of fuzzy link graphs f: X->Y and g: Y->Z."""
    _require_compatible(g, f)
    if f.outer != g.inner:
        raise InterfaceMismatchError(
            "link interface mismatch: expected inner names "
            f"{{{','.join(sorted(f.outer))}}}, got {{{','.join(sorted(g.inner))}}}"
        )
    _require_disjoint_support(f.nodes | f.edges, g.nodes | g.edges)
    clash = f.edges & g.outer
    if clash:
        raise NameClashError(
            f"edge identifiers collide with outer names: {sorted(clash)}"
        )
    entries: dict = {}
    for (point, target), degree in f.link.items():
        if target in f.edges:
            entries[(point, target)] = degree
    for pair, degree in f.link.then(g.link).items():
        entries[pair] = degree
    for (point, target), degree in g.link.items():
        if point in g.ports:
            entries[(point, target)] = degree
    return FuzzyLinkGraph(
        f.frame,
        f.signature,
        f.inner,
        g.outer,
        f.nodes | g.nodes,
        f.edges | g.edges,
        f.ctrl.union(g.ctrl),
        entries,
    )


def compose_fuzzy(g: FuzzyBigraph, f: FuzzyBigraph) -> FuzzyBigraph:
    """Componentwise composite of fuzzy bigraphs f: I->J and g: J->K."""
    if f.outer != g.inner:
        raise InterfaceMismatchError(
            f"interface mismatch: expected {f.outer}, got {g.inner}"
        )
    _require_disjoint_support(f.nodes | f.edges, g.nodes | g.edges)
    return FuzzyBigraph(
        compose_fuzzy_place(g.place, f.place),
        compose_fuzzy_link(g.link, f.link),
    )


# --- tensor product ----------------------------------------------------------


def tensor_fuzzy_place(f: FuzzyPlaceGraph, g: FuzzyPlaceGraph) -> FuzzyPlaceGraph:
    """Tensor ``f ⊗ g``: widths add; g's sites shift by f's inner width and
    g's roots by f's outer width; node entries are unshifted."""
    _require_compatible(g, f)
    _require_disjoint_nodes(f.nodes, g.nodes)
    k, l = f.inner, f.outer
    entries = f.prnt.entry_dict()
    for (child, parent), degree in g.prnt.items():
        child2 = child + k if isinstance(child, int) else child
        parent2 = parent + l if isinstance(parent, int) else parent
        entries[(child2, parent2)] = degree
    return FuzzyPlaceGraph(
        f.frame,
        f.signature,
        k + g.inner,
        l + g.outer,
        f.nodes | g.nodes,
        f.ctrl.union(g.ctrl),
        entries,
    )


def tensor_fuzzy_link(f: FuzzyLinkGraph, g: FuzzyLinkGraph) -> FuzzyLinkGraph:
    """Tensor ``f ⊗ g``: disjoint union of every component."""
    _require_compatible(g, f)
    _require_disjoint_support(f.nodes | f.edges, g.nodes | g.edges)
    clash = f.inner & g.inner
    if clash:
        raise NameClashError(f"inner names clash: {sorted(clash)}")
    clash = f.outer & g.outer
    if clash:
        raise NameClashError(f"outer names clash: {sorted(clash)}")
    clash = (f.edges & g.outer) | (g.edges & f.outer)
    if clash:
        raise NameClashError(
            f"edge identifiers collide with outer names: {sorted(clash)}"
        )
    entries = f.link.entry_dict()
    entries.update(g.link.entry_dict())
    return FuzzyLinkGraph(
        f.frame,
        f.signature,
        f.inner | g.inner,
        f.outer | g.outer,
        f.nodes | g.nodes,
        f.edges | g.edges,
        f.ctrl.union(g.ctrl),
        entries,
    )


def tensor_fuzzy(f: FuzzyBigraph, g: FuzzyBigraph) -> FuzzyBigraph:
    """Tensor product of fuzzy bigraphs; its unit is the empty interface ⟨0,∅⟩."""
    return FuzzyBigraph(
        tensor_fuzzy_place(f.place, g.place),
        tensor_fuzzy_link(f.link, g.link),
    )


# --- identities --------------------------------------------------------------


def identity_place(width: int, frame: Frame, signature: Signature) -> FuzzyPlaceGraph:
    ident = identity_relation(frame, range(width))
    return FuzzyPlaceGraph(frame, signature, width, width, (), {}, ident)


def identity_link(names, frame: Frame, signature: Signature) -> FuzzyLinkGraph:
    names = frozenset(names)
    ident = identity_relation(frame, names)
    return FuzzyLinkGraph(frame, signature, names, names, (), (), {}, ident)


def identity_bigraph(
    interface: Interface, frame: Frame, signature: Signature
) -> FuzzyBigraph:
    return FuzzyBigraph(
        identity_place(interface.width, frame, signature),
        identity_link(interface.names, frame, signature),
    )


# --- support and support translation ----------------------------------------


@dataclass(frozen=True)
class Support:
    """The identity-bearing sets of a graph: its nodes, and its edges."""

    nodes: frozenset[str]
    edges: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))


def support(g) -> Support:
    """Support of a fuzzy place graph (its nodes) or of a link graph or
    bigraph (nodes together with edges)."""
    if isinstance(g, FuzzyPlaceGraph):
        return Support(g.nodes)
    if isinstance(g, (FuzzyLinkGraph, FuzzyBigraph)):
        return Support(g.nodes, g.edges)
    raise TypeError(f"no support for {type(g).__name__}")


@dataclass(frozen=True, eq=False)
class SupportTranslation:
    """A pair of bijections renaming nodes and edges."""

    node_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def __post_init__(self):
        node_map = dict(self.node_map)
        edge_map = dict(self.edge_map)
        for name, table in (("node", node_map), ("edge", edge_map)):
            if len(set(table.values())) != len(table):
                raise ValueError(f"the {name} renaming is not a bijection")
        object.__setattr__(self, "node_map", node_map)
        object.__setattr__(self, "edge_map", edge_map)

    def node_image(self, v: str) -> str:
        return self.node_map[v]

    def edge_image(self, e: str) -> str:
        return self.edge_map[e]

    def port_image(self, port: Port) -> Port:
        return (self.node_map[port[0]], port[1])


def identity_translation(f: FuzzyBigraph) -> SupportTranslation:
    return SupportTranslation({v: v for v in f.nodes}, {e: e for e in f.edges})


def translate_fuzzy(f: FuzzyBigraph, rho: SupportTranslation) -> FuzzyBigraph:
    """Apply a support translation, copying every degree across."""
    if set(rho.node_map) != set(f.nodes):
        raise ValueError("node renaming does not cover exactly the node set")
    if set(rho.edge_map) != set(f.edges):
        raise ValueError("edge renaming does not cover exactly the edge set")
    nm = rho.node_map

    def place_elem(e):
        return nm[e] if isinstance(e, str) else e

    place = FuzzyPlaceGraph(
        f.frame,
        f.signature,
        f.place.inner,
        f.place.outer,
        {nm[v] for v in f.nodes},
        {(nm[v], k): d for (v, k), d in f.ctrl.items()},
        {(place_elem(c), place_elem(p)): d for (c, p), d in f.prnt.items()},
    )

    def point_elem(q):
        return (nm[q[0]], q[1]) if isinstance(q, tuple) else q

    def target_elem(t):
        return rho.edge_map[t] if t in f.edges else t

    link = FuzzyLinkGraph(
        f.frame,
        f.signature,
        f.link.inner,
        f.link.outer,
        {nm[v] for v in f.nodes},
        {rho.edge_map[e] for e in f.edges},
        {(nm[v], k): d for (v, k), d in f.ctrl.items()},
        {(point_elem(q), target_elem(t)): d for (q, t), d in f.link.link.items()},
    )
    return FuzzyBigraph(place, link)


@dataclass
class TranslationCheck:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class TranslationReport:
    checks: list[TranslationCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> TranslationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self) -> str:
        head = "support translation: " + ("pass" if self.ok else "FAIL")
        return "\n".join([head] + [f"  {c}" for c in self.checks])


def check_support_translation(
    rho: SupportTranslation, f: FuzzyBigraph, g: FuzzyBigraph
) -> TranslationReport:
    """Verify that ``rho`` is a support translation from f to g.

    Builds the induced crisp-valued relations on nodes, edges and ports and
    checks control preservation, port well-definedness, and the two
    inequalities tying the translated parent and link relations of f to
    those of g.
    """
    if f.inner != g.inner or f.outer != g.outer:
        raise InterfaceMismatchError(
            f"interface mismatch: {f.inner}->{f.outer} vs {g.inner}->{g.outer}"
        )
    if set(rho.node_map) != set(f.nodes) or set(rho.node_map.values()) != set(g.nodes):
        raise ValueError("node renaming is not a bijection from f's nodes to g's")
    if set(rho.edge_map) != set(f.edges) or set(rho.edge_map.values()) != set(g.edges):
        raise ValueError("edge renaming is not a bijection from f's edges to g's")

    frame = f.frame
    top = frame.top
    rho_nodes = FuzzyRelation(
        frame, f.nodes, g.nodes, {(v, w): top for v, w in rho.node_map.items()}
    )
    rho_edges = FuzzyRelation(
        frame, f.edges, g.edges, {(e, d): top for e, d in rho.edge_map.items()}
    )

    checks: list[TranslationCheck] = []

    # 1. control preservation: every translated control degree of f is
    #    dominated by g's.
    pulled = rho_nodes.then(g.ctrl)
    bad = [
        (v, k)
        for (v, k), d in f.ctrl.items()
        if not d.leq(pulled.degree(v, k))
    ]
    checks.append(
        TranslationCheck(
            "control preservation",
            not bad,
            "" if not bad else f"degree drops at {sorted(bad)}",
        )
    )

    # 2. the port bijection (v, i) -> (rho(v), i) lands exactly on g's ports.
    f_ports = f.link.ports
    g_ports = g.link.ports
    mapped = {rho.port_image(p) for p in f_ports}
    ok_ports = mapped == g_ports
    checks.append(
        TranslationCheck(
            "port bijection",
            ok_ports,
            ""
            if ok_ports
            else f"image {sorted(mapped)} differs from {sorted(g_ports)}",
        )
    )
    rho_ports = FuzzyRelation(
        frame,
        f_ports,
        g_ports,
        {(p, rho.port_image(p)): top for p in f_ports if rho.port_image(p) in g_ports},
    )

    # 3a. parent inequality: g's parents, pulled back along rho, dominate f's.
    id_sites = identity_relation(frame, range(f.place.inner))
    id_roots = identity_relation(frame, range(f.place.outer))
    lhs = id_sites.union(rho_nodes).then(g.prnt)
    rhs = f.prnt.then(rho_nodes.union(id_roots))
    ok_prnt = rhs.leq(lhs)
    checks.append(
        TranslationCheck(
            "parent relation",
            ok_prnt,
            "" if ok_prnt else "translated parent degrees are not dominated",
        )
    )

    # 3b. link inequality, same shape on points and links.
    id_inner = identity_relation(frame, f.link.inner)
    id_outer = identity_relation(frame, f.link.outer)
    lhs = id_inner.union(rho_ports).then(g.link.link)
    rhs = f.link.link.then(rho_edges.union(id_outer))
    ok_link = rhs.leq(lhs)
    checks.append(
        TranslationCheck(
            "link relation",
            ok_link,
            "" if ok_link else "translated link degrees are not dominated",
        )
    )
    return TranslationReport(checks)


# --- the crisp bridge ---------------------------------------------------------


def fuzzify_place(p: PlaceGraph, frame: Frame = TWO_POINT) -> FuzzyPlaceGraph:
    top = frame.top
    return FuzzyPlaceGraph(
        frame,
        p.signature,
        p.inner,
        p.outer,
        p.nodes,
        {(v, k): top for v, k in p.ctrl.items()},
        {(c, t): top for c, t in p.prnt.items()},
    )


def fuzzify_link(l: LinkGraph, frame: Frame = TWO_POINT) -> FuzzyLinkGraph:
    top = frame.top
    return FuzzyLinkGraph(
        frame,
        l.signature,
        l.inner,
        l.outer,
        l.nodes,
        l.edges,
        {(v, k): top for v, k in l.ctrl.items()},
        {(q, t): top for q, t in l.link.items()},
    )


def fuzzify(b: Bigraph, frame: Frame = TWO_POINT) -> FuzzyBigraph:
    """Embed a crisp bigraph: every map entry becomes a top-degree pair."""
    return FuzzyBigraph(fuzzify_place(b.place, frame), fuzzify_link(b.link, frame))


def _functional_at_top(rel: FuzzyRelation, domain, what: str) -> dict:
    out: dict = {}
    for (a, b), degree in rel.items():
        if not degree.is_top():
            raise NotCrispError(
                f"{what} entry ({a!r}, {b!r}) has degree "
                f"{rel.frame.format_degree(degree)}, not top"
            )
        if a in out:
            raise NotCrispError(f"{what} has two top-degree targets for {a!r}")
        out[a] = b
    missing = set(domain) - set(out)
    if missing:
        raise NotCrispError(f"{what} is not total at top: {sorted(map(repr, missing))}")
    return out


def defuzzify_place(p: FuzzyPlaceGraph) -> PlaceGraph:
    ctrl = _functional_at_top(p.ctrl, p.nodes, "control relation")
    prnt = _functional_at_top(
        p.prnt, set(range(p.inner)) | set(p.nodes), "parent relation"
    )
    return PlaceGraph(p.signature, p.inner, p.outer, p.nodes, ctrl, prnt)


def defuzzify_link(l: FuzzyLinkGraph) -> LinkGraph:
    ctrl = _functional_at_top(l.ctrl, l.nodes, "control relation")
    link = _functional_at_top(l.link, l.points, "link relation")
    return LinkGraph(l.signature, l.inner, l.outer, l.nodes, l.edges, ctrl, link)


def defuzzify(f: FuzzyBigraph) -> Bigraph:
    """Lower a fuzzy bigraph whose relations are functional at degree top."""
    return Bigraph(defuzzify_place(f.place), defuzzify_link(f.link))


# --- validation ----------------------------------------------------------------


def skeleton_pairs(prnt: FuzzyRelation, nodes: frozenset[str]) -> set[tuple[str, str]]:
    """Node-to-node pairs holding a positive parent degree."""
    return {
        (c, p) for (c, p), _d in prnt.items() if c in nodes and p in nodes
    }


def skeleton_is_acyclic(prnt: FuzzyRelation, nodes: frozenset[str]) -> bool:
    """Depth-first cycle check of the positive node-to-node parent pairs."""
    succ: dict[str, list[str]] = {}
    for c, p in skeleton_pairs(prnt, nodes):
        succ.setdefault(c, []).append(p)
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(v: str) -> bool:
        state[v] = 1
        for w in succ.get(v, ()):
            mark = state.get(w)
            if mark == 1:
                return False
            if mark is None and not visit(w):
                return False
        state[v] = 2
        return True

    return all(state.get(v) == 2 or visit(v) for v in sorted(succ))


def validate_fuzzy_place(
    p: FuzzyPlaceGraph, subject: str = "fuzzy place graph"
) -> ValidationReport:
    report = ValidationReport(subject)
    if not skeleton_is_acyclic(p.prnt, p.nodes):
        report.add("the positive part of the parent relation has a cycle")
    parented = {c for (c, _t), _d in p.prnt.items()}
    for site in range(p.inner):
        if site not in parented:
            report.add(f"site {site} has no parent of positive degree")
    for v in sorted(p.nodes):
        if v not in parented:
            report.add(f"node {v!r} has no parent of positive degree")
    return report


def validate_fuzzy_link(
    l: FuzzyLinkGraph, subject: str = "fuzzy link graph"
) -> ValidationReport:
    report = ValidationReport(subject)
    linked = {q for (q, _t), _d in l.link.items()}
    for point in sorted(l.points, key=repr):
        if point not in linked:
            report.add(f"point {point!r} has no link of positive degree")
    return report


def validate_fuzzy_bigraph(
    b: FuzzyBigraph, subject: str = "fuzzy bigraph"
) -> ValidationReport:
    report = ValidationReport(subject)
    report.extend(validate_fuzzy_place(b.place), prefix="place: ")
    report.extend(validate_fuzzy_link(b.link), prefix="link: ")
    return report
