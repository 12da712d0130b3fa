"""Simple connected graphs, their structural classification and even closed walks.

Edges are numbered from 1 in the order given; edge ``i`` becomes generator
``e_i`` of the edge ideal.  Vertices are numbered from 0 internally (vertex
``k`` is the variable ``x_{k+1}``) and keep their external names for display.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Input violates a structural requirement (loop, duplicate edge, disconnected...)."""


class NotApplicable(ValueError):
    """A construction was asked of a graph or candidate it is not defined for."""


class Graph:
    __slots__ = ("vertices", "edges", "_index", "_adj", "_edge_id")

    def __init__(self, vertices, edges):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex names")
        n = len(self.vertices)
        clean = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise GraphError(f"loop at vertex {self.vertices[u]}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {self.vertices[u]}-{self.vertices[v]}")
            seen.add(key)
            clean.append((u, v))
        if not clean:
            raise GraphError("graph has no edges")
        self.edges = tuple(clean)
        self._index = {name: i for i, name in enumerate(self.vertices)}
        self._adj = [[] for _ in range(n)]
        self._edge_id = {}
        for i, (u, v) in enumerate(self.edges, start=1):
            self._adj[u].append(v)
            self._adj[v].append(u)
            self._edge_id[frozenset((u, v))] = i
        if any(not a for a in self._adj):
            raise GraphError("graph has isolated vertices")
        if not self._connected():
            raise GraphError("graph is disconnected")

    @classmethod
    def from_names(cls, pairs) -> "Graph":
        """Build from name pairs; vertices are numbered by first appearance."""
        names: dict[str, int] = {}
        edges = []
        for a, b in pairs:
            for x in (a, b):
                if x not in names:
                    names[x] = len(names)
            edges.append((names[a], names[b]))
        return cls(list(names), edges)

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def s(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return list(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge(self, i: int) -> tuple[int, int]:
        """Endpoints of edge ``i`` (1-based)."""
        return self.edges[i - 1]

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_id[frozenset((u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_id

    def index_of(self, name: str) -> int:
        return self._index[name]

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.vertices[u], self.vertices[v]) for u, v in self.edges]

    def edge_set(self) -> frozenset:
        """Edges as unordered name pairs (labelling-independent comparison)."""
        return frozenset(frozenset(p) for p in self.edge_names())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and [frozenset(e) for e in self.edges] == [
            frozenset(e) for e in other.edges]

    def __hash__(self):
        return hash((self.vertices, tuple(frozenset(e) for e in self.edges)))

    def __repr__(self):
        es = ", ".join(f"{a}-{b}" for a, b in self.edge_names())
        return f"Graph({es})"

    def to_text(self) -> str:
        return "".join(f"{a} {b}\n" for a, b in self.edge_names())


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: one ``u v`` pair per line, ``#`` comments."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex names, got {line!r}")
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise GraphError("empty graph file")
    return Graph.from_names(pairs)


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# --- catalog of named graphs ---------------------------------------------------

def cycle_graph(d: int) -> Graph:
    """C_d with e_i = x_i x_{i+1} for i < d and e_d = x_1 x_d."""
    if d < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph([f"x{i}" for i in range(1, d + 1)],
                 [(i, i + 1) for i in range(d - 1)] + [(0, d - 1)])


def whiskered_cycle(d: int, attachments) -> Graph:
    """C_d plus one leaf per entry of ``attachments`` (1-based cycle vertices).

    The whisker on attachment ``i_j`` becomes edge e_j = x_{i_j} x_j, j > d.
    """
    attachments = list(attachments)
    if any(not 1 <= a <= d for a in attachments):
        raise GraphError("whisker attachment outside the cycle")
    s = d + len(attachments)
    edges = [(i, i + 1) for i in range(d - 1)] + [(0, d - 1)]
    edges += [(a - 1, d + k) for k, a in enumerate(attachments)]
    return Graph([f"x{i}" for i in range(1, s + 1)], edges)


def counterexample_graph() -> Graph:
    """Square x1..x4 with the pendant path x4 - x5 - x6."""
    return Graph.from_names([("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4"),
                             ("x4", "x5"), ("x5", "x6")])


BUILTINS = {
    "c4": lambda: cycle_graph(4),
    "c6": lambda: cycle_graph(6),
    "c8": lambda: cycle_graph(8),
    "counterexample": counterexample_graph,
    "whiskered-c4": lambda: whiskered_cycle(4, [1]),
    "whiskered-c4-113": lambda: whiskered_cycle(4, [1, 1, 3]),
}


def builtin_graph(name: str) -> Graph:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise GraphError(f"unknown builtin graph {name!r}; choose from {sorted(BUILTINS)}") from None


# --- classification ---------------------------------------------------------------

class Kind(str, enum.Enum):
    TREE = "Tree"
    UNIQUE_ODD_CYCLE = "UniqueOddCycle"
    UNIQUE_EVEN_CYCLE = "UniqueEvenCycle"
    WHISKERED_EVEN_CYCLE = "WhiskeredEvenCycle"
    GENERAL = "GeneralNonLinearType"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    kind: Kind
    s: int
    n: int
    d: int | None = None
    cycle_edges: tuple[int, ...] = ()
    analytic_spread: int | None = None
    is_basic: bool = False
    unicyclic: bool = False

    @property
    def has_unique_even_cycle(self) -> bool:
        return self.unicyclic and self.d is not None and self.d % 2 == 0

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "s": self.s,
            "n": self.n,
            "d": self.d,
            "ell": self.analytic_spread,
            "is_basic": self.is_basic,
            "cycle_edges": list(self.cycle_edges),
        }


@dataclass(frozen=True)
class EvenClosedWalk:
    """Closed walk given by 1-based edge indices and the vertices it passes.

    ``vertex_sequence`` has one more entry than ``edge_sequence`` and starts
    and ends at the same vertex.
    """

    edge_sequence: tuple[int, ...]
    vertex_sequence: tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.edge_sequence)

    def is_irreducible(self) -> bool:
        # a repeated edge may only recur at positions of the same parity
        first_parity: dict[int, int] = {}
        for pos, e in enumerate(self.edge_sequence):
            par = pos % 2
            if first_parity.setdefault(e, par) != par:
                return False
        return True


def check_walk(g: Graph, walk: EvenClosedWalk) -> bool:
    """True iff ``walk`` is an even closed walk of ``g`` passing the parity check."""
    es, vs = walk.edge_sequence, walk.vertex_sequence
    if not es or len(es) % 2 or len(vs) != len(es) + 1 or vs[0] != vs[-1]:
        return False
    for k, e in enumerate(es):
        if not 1 <= e <= g.s or frozenset(g.edge(e)) != frozenset((vs[k], vs[k + 1])):
            return False
    return walk.is_irreducible()


def _core_vertices(g: Graph) -> set[int]:
    """Vertices left after repeatedly stripping leaves (the 2-core)."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    queue = deque(v for v in alive if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return alive


def _order_cycle(g: Graph, cycle_edges: set[int]) -> tuple[int, ...]:
    """Canonical traversal order of a cycle given as an edge set.

    Starts at the lowest-numbered edge and heads towards its lower-numbered
    neighbour.
    """
    start = min(cycle_edges)
    a, b = g.edge(start)

    def other_edge(v, e):
        return next(f for f in cycle_edges if f != e and v in g.edge(f))

    cur = b if other_edge(b, start) < other_edge(a, start) else a
    edges = [start]
    while len(edges) < len(cycle_edges):
        nxt = other_edge(cur, edges[-1])
        edges.append(nxt)
        u, v = g.edge(nxt)
        cur = v if u == cur else u
    return tuple(edges)


def _cycle_vertex_sequence(g: Graph, edges: tuple[int, ...]) -> tuple[int, ...]:
    """Vertices x_1..x_d with edges[i] = x_{i+1} x_{i+2} and edges[-1] = x_1 x_d."""
    last = set(g.edge(edges[-1]))
    first = set(g.edge(edges[0]))
    x1 = (last & first).pop()
    verts = [x1]
    for e in edges[:-1]:
        u, v = g.edge(e)
        verts.append(v if u == verts[-1] else u)
    return tuple(verts)


def simple_cycles(g: Graph):
    """Yield every simple cycle once, as a tuple of 1-based edge indices."""
    n = g.n
    for start in range(n):
        # cycles whose smallest vertex is `start`; each found in both directions,
        # keep the one whose second vertex is smaller than its last
        path = [start]
        on_path = {start}

        def extend():
            u = path[-1]
            for w in g.neighbors(u):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    vs = path + [start]
                    yield tuple(g.edge_index(vs[k], vs[k + 1]) for k in range(len(path)))
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def _is_whiskered(g: Graph, cycle_vertices) -> bool:
    cyc = set(cycle_vertices)
    for v in range(g.n):
        if v in cyc:
            continue
        if g.degree(v) != 1 or g.neighbors(v)[0] not in cyc:
            return False
    return True


def classify(g: Graph) -> Classification:
    s, n = g.s, g.n
    rank = s - n + 1
    if rank == 0:
        return Classification(Kind.TREE, s, n, analytic_spread=s, is_basic=True)
    if rank == 1:
        core = _core_vertices(g)
        cyc = {i for i, (u, v) in enumerate(g.edges, start=1) if u in core and v in core}
        edges = _order_cycle(g, cyc)
        d = len(edges)
        if d % 2:
            return Classification(Kind.UNIQUE_ODD_CYCLE, s, n, d, edges, s, True, True)
        if s == d:
            kind = Kind.UNIQUE_EVEN_CYCLE
        elif _is_whiskered(g, core):
            kind = Kind.WHISKERED_EVEN_CYCLE
        else:
            kind = Kind.GENERAL
        # unicyclic: the even cycle is the only irreducible even closed walk
        return Classification(kind, s, n, d, edges, s - 1, False, True)
    walk = find_even_closed_walk(g)
    return Classification(Kind.GENERAL, s, n, len(walk), (), None, False, False)


def is_whiskered(g: Graph, cls: Classification | None = None) -> bool:
    """Every vertex off the (unique, even) cycle is a leaf hanging on the cycle."""
    cls = classify(g) if cls is None else cls
    if not cls.has_unique_even_cycle:
        return False
    return _is_whiskered(g, _cycle_vertex_sequence(g, cls.cycle_edges))


def _walk_from_cycle(g: Graph, edges: tuple[int, ...]) -> EvenClosedWalk:
    verts = _cycle_vertex_sequence(g, edges)
    return EvenClosedWalk(tuple(edges), verts + (verts[0],))


def _bfs_path(g: Graph, sources: set[int], targets: set[int]) -> list[int]:
    """Shortest vertex path from the set ``sources`` to the set ``targets``."""
    prev = {v: None for v in sources}
    queue = deque(sorted(sources))
    while queue:
        u = queue.popleft()
        if u in targets:
            path = [u]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in sorted(g.neighbors(u)):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    raise GraphError("no path between vertex sets")


def find_even_closed_walk(g: Graph) -> EvenClosedWalk | None:
    """An irreducible even closed walk, or None when the edge ideal is of linear type.

    Uses an even cycle when one exists; otherwise two odd cycles joined by a
    shortest path, traversed cycle, path, cycle, path back.
    """
    rank = g.s - g.n + 1
    if rank == 0:
        return None
    if rank == 1:
        core = _core_vertices(g)
        cyc = {i for i, (u, v) in enumerate(g.edges, start=1) if u in core and v in core}
        edges = _order_cycle(g, cyc)
        if len(edges) % 2:
            return None
        return _walk_from_cycle(g, edges)
    cycles = sorted(simple_cycles(g), key=lambda c: (len(c), sorted(c)))
    for c in cycles:
        if len(c) % 2 == 0:
            walk = _walk_from_cycle(g, _order_cycle(g, set(c)))
            assert check_walk(g, walk)
            return walk
    odd = [c for c in cycles if len(c) % 2]
    c1 = odd[0]
    v1 = set(_cycle_vertex_sequence(g, _order_cycle(g, set(c1))))
    best = None
    for c2 in odd[1:]:
        v2 = set(_cycle_vertex_sequence(g, _order_cycle(g, set(c2))))
        path = _bfs_path(g, v1, v2)
        if best is None or len(path) < len(best[1]):
            best = (c2, path)
    c2, path = best
    u, w = path[0], path[-1]
    first = _cycle_from(g, c1, u)
    second = _cycle_from(g, c2, w)
    path_edges = [g.edge_index(path[k], path[k + 1]) for k in range(len(path) - 1)]
    edges = first[0] + path_edges + second[0] + path_edges[::-1]
    verts = first[1][:-1] + path[:-1] + second[1][:-1] + path[::-1]
    walk = EvenClosedWalk(tuple(edges), tuple(verts))
    assert check_walk(g, walk), walk
    return walk


def _cycle_from(g: Graph, cycle, v) -> tuple[list[int], list[int]]:
    """Edges and closed vertex list of ``cycle`` traversed from vertex ``v``."""
    edges = list(_order_cycle(g, set(cycle)))
    verts = list(_cycle_vertex_sequence(g, edges))
    k = verts.index(v)
    edges = edges[k:] + edges[:k]
    verts = verts[k:] + verts[:k]
    return edges, verts + [v]


def cyclic_reorder(g: Graph, cls: Classification, target_edge: int) -> tuple[Graph, Classification]:
    """Relabel so the cycle reads e_i = x_i x_{i+1}, e_d = x_1 x_d with ``target_edge`` as e_d.

    Off-cycle edges follow in their original order; off-cycle vertices are
    numbered by first appearance along those edges, so a whisker leaf x_j
    lands on its own edge e_j.
    """
    if not cls.cycle_edges or cls.d is None or cls.d % 2:
        raise NotApplicable("cyclic reordering needs a distinguished even cycle")
    if target_edge not in cls.cycle_edges:
        raise NotApplicable(f"edge e{target_edge} is not on the cycle {list(cls.cycle_edges)}")
    k = cls.cycle_edges.index(target_edge)
    rot = cls.cycle_edges[k + 1:] + cls.cycle_edges[:k + 1]
    cyc_verts = _cycle_vertex_sequence(g, rot)
    order = list(cyc_verts)
    seen = set(order)
    rest = [i for i in range(1, g.s + 1) if i not in set(rot)]
    for i in rest:
        for v in sorted(g.edge(i), key=lambda v: (v not in seen, v)):
            if v not in seen:
                seen.add(v)
                order.append(v)
    for v in range(g.n):
        if v not in seen:
            order.append(v)
    new_index = {old: new for new, old in enumerate(order)}
    d = len(rot)
    new_edges = [(j, j + 1) for j in range(d - 1)] + [(0, d - 1)]
    for i in rest:
        u, v = g.edge(i)
        a, b = sorted((new_index[u], new_index[v]))
        new_edges.append((a, b))
    g2 = Graph([g.vertices[v] for v in order], new_edges)
    return g2, classify(g2)


def whiskered_normal_form(g: Graph) -> tuple[Graph, Classification]:
    """Relabel a whiskered even cycle into the standard numbering (cycle first)."""
    cls = classify(g)
    if not is_whiskered(g, cls):
        raise NotApplicable("graph is not an even cycle with whiskers")
    return cyclic_reorder(g, cls, cls.cycle_edges[-1])


def in_cycle_normal_form(g: Graph, cls: Classification) -> bool:
    """Cycle occupies edges 1..d as x_i x_{i+1} with e_d = x_1 x_d."""
    d = cls.d
    if not cls.cycle_edges or d is None:
        return False
    for i in range(1, d):
        if frozenset(g.edge(i)) != frozenset((i - 1, i)):
            return False
    return frozenset(g.edge(d)) == frozenset((0, d - 1))
