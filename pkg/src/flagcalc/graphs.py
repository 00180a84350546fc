"""Finite simple undirected graphs with stable string labels.

Graphs are immutable values: every mutation-like operation returns a new
graph, so they can be hashed, memoized and shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable


class GraphError(ValueError):
    """Structurally invalid graph data or an unknown label."""


class UnknownVertexError(GraphError):
    pass


class UnknownEdgeError(GraphError):
    pass


class BudgetExceededError(RuntimeError):
    """An enumeration or search outgrew its configured cap."""


DEFAULT_CLIQUE_CAP = 1_000_000
DEFAULT_ISO_CAP = 256


def edge_key(a: str, b: str) -> frozenset[str]:
    if a == b:
        raise GraphError(f"self-loop on {a!r}")
    return frozenset((a, b))


def sorted_pair(e: Iterable[str]) -> tuple[str, str]:
    a, b = sorted(e)
    return a, b


def subset_label(members: Iterable[str]) -> str:
    """Deterministic label for a set of labels: sorted, comma-joined, bracketed."""
    return "[" + ",".join(sorted(members)) + "]"


def fresh_labels(taken: Iterable[str], count: int, stem: str = "_x") -> list[str]:
    """`count` labels of the form `<stem><n>` not colliding with `taken`."""
    seen = set(taken)
    out: list[str] = []
    i = 0
    while len(out) < count:
        i += 1
        cand = f"{stem}{i}"
        if cand not in seen:
            out.append(cand)
            seen.add(cand)
    return out


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]

    @staticmethod
    def make(vertices: Iterable[str] = (), edges: Iterable[Iterable[str]] = ()) -> "Graph":
        """Validated constructor; rejects loops and undeclared endpoints."""
        vs = frozenset(vertices)
        for v in vs:
            if not isinstance(v, str):
                raise GraphError(f"vertex label {v!r} is not a string")
        es: set[frozenset[str]] = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise GraphError(f"edge {pair!r} is not an unordered pair of distinct vertices")
            for end in pair:
                if end not in vs:
                    raise UnknownVertexError(f"edge endpoint {end!r} is not a declared vertex")
            es.add(frozenset(pair))
        return Graph(vs, frozenset(es))

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = e
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    def __contains__(self, v: str) -> bool:
        return v in self.vertices

    def _require(self, v: str) -> None:
        if v not in self.vertices:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def neighbors(self, v: str) -> frozenset[str]:
        self._require(v)
        return self.adjacency[v]

    def closed_neighborhood(self, v: str) -> frozenset[str]:
        return self.neighbors(v) | {v}

    def has_edge(self, a: str, b: str) -> bool:
        return edge_key(a, b) in self.edges

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(sorted_pair(e) for e in self.edges)

    def induced(self, subset: Iterable[str]) -> "Graph":
        sub = frozenset(subset)
        for v in sub:
            self._require(v)
        return Graph(sub, frozenset(e for e in self.edges if e <= sub))

    def open_neighborhood_subgraph(self, v: str) -> "Graph":
        return self.induced(self.neighbors(v))

    def without_vertices(self, subset: Iterable[str]) -> "Graph":
        gone = frozenset(subset)
        for v in gone:
            self._require(v)
        keep = self.vertices - gone
        return Graph(keep, frozenset(e for e in self.edges if e <= keep))

    def without_vertex(self, v: str) -> "Graph":
        return self.without_vertices((v,))

    def without_edge(self, a: str, b: str) -> "Graph":
        e = edge_key(a, b)
        if e not in self.edges:
            raise UnknownEdgeError(f"unknown edge {a!r}-{b!r}")
        return Graph(self.vertices, self.edges - {e})

    def with_vertex(self, v: str, attachment: Iterable[str] = ()) -> "Graph":
        if v in self.vertices:
            raise GraphError(f"vertex {v!r} already present")
        att = frozenset(attachment)
        for u in att:
            self._require(u)
        return Graph(self.vertices | {v}, self.edges | {edge_key(v, u) for u in att})

    def with_edge(self, a: str, b: str) -> "Graph":
        self._require(a)
        self._require(b)
        e = edge_key(a, b)
        if e in self.edges:
            raise GraphError(f"edge {a!r}-{b!r} already present")
        return Graph(self.vertices, self.edges | {e})

    def is_complete_set(self, subset: Iterable[str]) -> bool:
        sub = sorted(set(subset))
        for v in sub:
            self._require(v)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(sub, 2))

    def suspension(self) -> "Graph":
        """Two fresh non-adjacent apexes, each joined to every existing vertex."""
        x, y = fresh_labels(self.vertices, 2, stem="_apex")
        edges = set(self.edges)
        for v in self.vertices:
            edges.add(frozenset((x, v)))
            edges.add(frozenset((y, v)))
        return Graph(self.vertices | {x, y}, frozenset(edges))


def complete_graph(labels: Iterable[str]) -> Graph:
    ls = sorted(set(labels))
    return Graph.make(ls, itertools.combinations(ls, 2))


def cycle_graph(labels: Iterable[str]) -> Graph:
    ls = list(labels)
    if len(ls) < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.make(ls, [(ls[i], ls[(i + 1) % len(ls)]) for i in range(len(ls))])


def path_graph(labels: Iterable[str]) -> Graph:
    ls = list(labels)
    return Graph.make(ls, [(ls[i], ls[i + 1]) for i in range(len(ls) - 1)])


def edgeless_graph(labels: Iterable[str]) -> Graph:
    return Graph.make(labels, ())


# ---------------------------------------------------------------------------
# complete subgraph enumeration


@dataclass(frozen=True)
class CliqueFamily:
    parent: Graph
    mode: str  # "all" | "maximal"
    cliques: tuple[frozenset[str], ...]

    def validate(self) -> str | None:
        """Invariant check; returns a failure description or None."""
        for c in self.cliques:
            if not c:
                return "empty member set"
            if not self.parent.is_complete_set(c):
                return f"{subset_label(c)} is not complete"
        have = set(self.cliques)
        maximal = set(maximal_cliques(self.parent))
        if self.mode == "maximal":
            if have != maximal:
                return "maximal family does not match the inclusion-maximal complete subgraphs"
        elif self.mode == "all":
            for c in self.cliques:
                for v in c:
                    if len(c) > 1 and (c - {v}) not in have:
                        return f"not closed under subsets at {subset_label(c)}"
            for m in maximal:
                if m not in have:
                    return f"missing maximal member {subset_label(m)}"
        else:
            return f"unknown mode {self.mode!r}"
        return None


def maximal_cliques(g: Graph) -> list[frozenset[str]]:
    """All inclusion-maximal complete subgraphs (pivoting branch and bound)."""
    adj = g.adjacency
    out: list[frozenset[str]] = []

    def expand(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    if g.vertices:
        expand(set(), set(g.vertices), set())
    return sorted(out, key=lambda c: tuple(sorted(c)))


def complete_subgraphs(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> list[frozenset[str]]:
    """Every nonempty vertex set inducing a complete subgraph, lexicographic order."""
    seen: set[frozenset[str]] = set()
    for m in maximal_cliques(g):
        members = sorted(m)
        for k in range(1, len(members) + 1):
            for comb in itertools.combinations(members, k):
                seen.add(frozenset(comb))
                if len(seen) > cap:
                    raise BudgetExceededError(f"more than {cap} complete subgraphs")
    return sorted(seen, key=lambda c: tuple(sorted(c)))


def enumerate_complete_subgraphs(g: Graph, mode: str = "all",
                                 cap: int = DEFAULT_CLIQUE_CAP) -> CliqueFamily:
    if mode == "maximal":
        found = maximal_cliques(g)
        if len(found) > cap:
            raise BudgetExceededError(f"more than {cap} maximal complete subgraphs")
    elif mode == "all":
        found = complete_subgraphs(g, cap)
    else:
        raise GraphError(f"unknown enumeration mode {mode!r}")
    return CliqueFamily(g, mode, tuple(found))


def barycentric_graph(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> Graph:
    """Vertices are the complete subgraphs of g, edges the strict inclusions."""
    fam = complete_subgraphs(g, cap)
    labels = {c: subset_label(c) for c in fam}
    edges = []
    for c, d in itertools.combinations(fam, 2):
        if c < d or d < c:
            edges.append((labels[c], labels[d]))
    return Graph.make(labels.values(), edges)


# ---------------------------------------------------------------------------
# isomorphism via canonical labeling (refinement + backtracking)


@dataclass(frozen=True)
class IsoWitness:
    """Vertex bijection between two graphs, stored as sorted (first, second) pairs."""

    mapping: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def error(self, g1: Graph, g2: Graph) -> str | None:
        fwd = self.as_dict()
        if set(fwd) != set(g1.vertices) or set(fwd.values()) != set(g2.vertices):
            return "mapping is not a bijection between the vertex sets"
        if len(set(fwd.values())) != len(fwd):
            return "mapping is not injective"
        for a, b in itertools.combinations(sorted(g1.vertices), 2):
            if g1.has_edge(a, b) != g2.has_edge(fwd[a], fwd[b]):
                return f"adjacency of {a!r},{b!r} not preserved"
        return None


def _refine(adj: dict[str, frozenset[str]], colors: dict[str, int]) -> dict[str, int]:
    while True:
        sigs = {v: (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in adj}
        ranks = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[sigs[v]] for v in adj}
        if new == colors:
            return colors
        colors = new


def _canonical(adj: dict[str, frozenset[str]],
               colors: dict[str, int]) -> tuple[tuple, dict[str, int]]:
    colors = _refine(adj, colors)
    cells: dict[int, list[str]] = {}
    for v, c in colors.items():
        cells.setdefault(c, []).append(v)
    split = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
    if split is None:
        enc = tuple(sorted((colors[v], colors[u])
                           for v in adj for u in adj[v] if colors[v] < colors[u]))
        return (len(adj), enc), colors
    best_enc, best_perm = None, None
    for v in sorted(cells[split]):
        boosted = {u: (colors[u], 1 if u == v else 0) for u in adj}
        ranks = {s: i for i, s in enumerate(sorted(set(boosted.values())))}
        enc, perm = _canonical(adj, {u: ranks[boosted[u]] for u in adj})
        if best_enc is None or enc < best_enc:
            best_enc, best_perm = enc, perm
    return best_enc, best_perm


@lru_cache(maxsize=65536)
def _canonical_full(g: Graph) -> tuple[tuple, tuple[tuple[str, int], ...]]:
    if not g.vertices:
        return (0, ()), ()
    enc, perm = _canonical(g.adjacency, {v: 0 for v in g.vertices})
    return enc, tuple(sorted(perm.items()))


def canonical_form(g: Graph) -> tuple:
    """Hashable key shared by exactly the graphs isomorphic to g."""
    return _canonical_full(g)[0]


def are_isomorphic(g1: Graph, g2: Graph, cap: int = DEFAULT_ISO_CAP) -> IsoWitness | None:
    """A witness bijection if one exists, else None. Deterministic."""
    if max(len(g1.vertices), len(g2.vertices)) > cap:
        raise BudgetExceededError(f"isomorphism test capped at {cap} vertices")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    if sorted(len(g1.adjacency[v]) for v in g1.vertices) != \
            sorted(len(g2.adjacency[v]) for v in g2.vertices):
        return None
    enc1, perm1 = _canonical_full(g1)
    enc2, perm2 = _canonical_full(g2)
    if enc1 != enc2:
        return None
    inv2 = {i: v for v, i in perm2}
    return IsoWitness(tuple(sorted((v, inv2[i]) for v, i in perm1)))
