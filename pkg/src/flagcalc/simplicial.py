"""Finite abstract simplicial complexes and elementary collapse machinery.

Complexes store the full downward-closed simplex set so that coface queries
and free-pair detection stay cheap at the scale this library targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .graphs import (
    DEFAULT_CLIQUE_CAP,
    Graph,
    GraphError,
    complete_subgraphs,
    subset_label,
)
from .dismantling import (
    CheckReport,
    CertificateError,
    DEFAULT_SEARCH_BUDGET,
    DismantlingOrder,
    GraphMove,
    MoveKind,
    Outcome,
    SearchStats,
    SearchVerdict,
    cone_order,
    greedy_dismantling,
)


class ComplexError(ValueError):
    """Structurally invalid complex data or an unknown simplex."""


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: frozenset[frozenset[str]]

    @staticmethod
    def from_simplices(simplices: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Validated constructor; the family must be downward closed."""
        sims = frozenset(frozenset(s) for s in simplices)
        for s in sims:
            if not s:
                raise ComplexError("empty member set")
            for v in s:
                if len(s) > 1 and (s - {v}) not in sims:
                    raise ComplexError(f"family not closed under deletion at {subset_label(s)}")
        return SimplicialComplex(sims)

    @staticmethod
    def from_maximal(simplices: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Downward closure of the given simplices."""
        sims: set[frozenset[str]] = set()
        for s in simplices:
            top = frozenset(s)
            if not top:
                raise ComplexError("empty member set")
            members = sorted(top)
            for k in range(1, len(members) + 1):
                sims.update(frozenset(c) for c in itertools.combinations(members, k))
        return SimplicialComplex(frozenset(sims))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        out: set[str] = set()
        for s in self.simplices:
            out.update(s)
        return frozenset(out)

    def __contains__(self, simplex: Iterable[str]) -> bool:
        return frozenset(simplex) in self.simplices

    def sorted_simplices(self) -> list[frozenset[str]]:
        return sorted(self.simplices, key=lambda s: (len(s), tuple(sorted(s))))

    def maximal_simplices(self) -> list[frozenset[str]]:
        out = [s for s in self.simplices
               if not any(s < t for t in self.simplices)]
        return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))

    def dimension(self) -> int:
        if not self.simplices:
            return -1
        return max(len(s) for s in self.simplices) - 1

    def _require(self, sigma: Iterable[str]) -> frozenset[str]:
        s = frozenset(sigma)
        if s not in self.simplices:
            raise ComplexError(f"unknown simplex {subset_label(s)}")
        return s


def full_simplex(labels: Iterable[str]) -> SimplicialComplex:
    """The complex of all nonempty subsets of the given vertex set."""
    return SimplicialComplex.from_maximal([frozenset(labels)])


def clique_complex(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> SimplicialComplex:
    """The complex whose simplices are the complete subgraphs of g."""
    return SimplicialComplex(frozenset(complete_subgraphs(g, cap)))


def one_skeleton(k: SimplicialComplex) -> Graph:
    """The graph of 0- and 1-simplices."""
    return Graph.make(k.vertex_set, (s for s in k.simplices if len(s) == 2))


def is_flag(k: SimplicialComplex) -> tuple[bool, frozenset[str] | None]:
    """True iff every pairwise-joined vertex set is a simplex.

    On failure, returns a minimal non-simplex (>= 3 vertices, all proper
    subsets present).
    """
    skel = one_skeleton(k)
    for c in complete_subgraphs(skel):
        if c not in k.simplices:
            return False, c
    return True, None


def link(k: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    s = k._require(sigma)
    return SimplicialComplex(frozenset(
        t for t in k.simplices if not (t & s) and (t | s) in k.simplices))


def delete_open_star(k: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    s = k._require(sigma)
    return SimplicialComplex(frozenset(t for t in k.simplices if not (s <= t)))


# ---------------------------------------------------------------------------
# collapses


@dataclass(frozen=True)
class CollapsePair:
    sigma: frozenset[str]
    tau: frozenset[str]


def collapse_pair_error(k: SimplicialComplex, pair: CollapsePair) -> str | None:
    if pair.sigma not in k.simplices:
        return f"{subset_label(pair.sigma)} not in the complex"
    if pair.tau not in k.simplices:
        return f"{subset_label(pair.tau)} not in the complex"
    if not (pair.tau < pair.sigma and len(pair.sigma) == len(pair.tau) + 1):
        return f"{subset_label(pair.tau)} is not a proper maximal face of {subset_label(pair.sigma)}"
    for t in k.simplices:
        if t != pair.sigma and pair.tau < t:
            return f"{subset_label(pair.tau)} is also a face of {subset_label(t)}"
    return None


def free_pairs(k: SimplicialComplex) -> list[CollapsePair]:
    """All (sigma, tau) with tau a free face of sigma, deterministic order."""
    cofaces: dict[frozenset[str], list[frozenset[str]]] = {}
    for s in k.simplices:
        if len(s) >= 2:
            for v in s:
                cofaces.setdefault(s - {v}, []).append(s)
    out = []
    for tau, sup in cofaces.items():
        # a unique immediate coface rules out all deeper cofaces too
        if len(sup) == 1:
            out.append(CollapsePair(sup[0], tau))
    return sorted(out, key=lambda p: (tuple(sorted(p.tau)), tuple(sorted(p.sigma))))


def _anticollapse_error(k: SimplicialComplex, pair: CollapsePair) -> str | None:
    if pair.sigma in k.simplices or pair.tau in k.simplices:
        return "pair members already present"
    if not (pair.tau < pair.sigma and len(pair.sigma) == len(pair.tau) + 1):
        return "pair is not a facet pair"
    for v in pair.sigma:
        face = pair.sigma - {v}
        if face != pair.tau and face and face not in k.simplices:
            return f"facet {subset_label(face)} missing"
    for t in k.simplices:
        if pair.tau < t:
            return f"{subset_label(pair.tau)} would not be free ({subset_label(t)} present)"
    return None


COLLAPSE, ANTICOLLAPSE = "-", "+"


@dataclass(frozen=True)
class ComplexCertificate:
    start: SimplicialComplex
    moves: tuple[tuple[str, CollapsePair], ...]
    end: SimplicialComplex


def apply_pair_unchecked(k: SimplicialComplex, op: str,
                         pair: CollapsePair) -> SimplicialComplex:
    if op == COLLAPSE:
        return SimplicialComplex(k.simplices - {pair.sigma, pair.tau})
    return SimplicialComplex(k.simplices | {pair.sigma, pair.tau})


def check_complex_certificate(c: ComplexCertificate) -> CheckReport:
    cur = c.start
    for i, (op, pair) in enumerate(c.moves):
        if op == COLLAPSE:
            err = collapse_pair_error(cur, pair)
        elif op == ANTICOLLAPSE:
            err = _anticollapse_error(cur, pair)
        else:
            err = f"unknown operation {op!r}"
        if err:
            return CheckReport(False, i, err)
        cur = apply_pair_unchecked(cur, op, pair)
    if cur != c.end:
        return CheckReport(False, len(c.moves), "end complex mismatch")
    return CheckReport(True)


def collapse(k: SimplicialComplex, pair: CollapsePair) -> SimplicialComplex:
    err = collapse_pair_error(k, pair)
    if err:
        raise CertificateError(err)
    return apply_pair_unchecked(k, COLLAPSE, pair)


def star_collapse_certificate(k: SimplicialComplex, sigma: Iterable[str],
                              link_certificate: ComplexCertificate) -> ComplexCertificate:
    """Collapse away every simplex containing sigma, given a collapse of its link.

    Each link pair (alpha, beta) lifts to (sigma|alpha, sigma|beta); the final
    pair is (sigma plus the surviving link vertex, sigma).
    """
    s = k._require(sigma)
    lk = link(k, s)
    if link_certificate.start != lk:
        raise CertificateError("link certificate does not start at the link")
    if any(op != COLLAPSE for op, _ in link_certificate.moves):
        raise CertificateError("link certificate must be a pure collapse")
    if len(link_certificate.end.simplices) != 1:
        raise CertificateError("link certificate must end at a single vertex")
    rep = check_complex_certificate(link_certificate)
    if not rep:
        raise CertificateError(f"link certificate invalid at step {rep.failed_at}: {rep.reason}")

    moves = [(COLLAPSE, CollapsePair(s | p.sigma, s | p.tau))
             for _, p in link_certificate.moves]
    survivor = next(iter(link_certificate.end.simplices))
    moves.append((COLLAPSE, CollapsePair(s | survivor, s)))
    cert = ComplexCertificate(k, tuple(moves), delete_open_star(k, s))
    rep = check_complex_certificate(cert)
    if not rep:  # pragma: no cover - construction guarantees this
        raise CertificateError(f"star collapse invalid at step {rep.failed_at}: {rep.reason}")
    return cert


def domination_collapse(g: Graph, v: str, w: str,
                        cap: int = DEFAULT_CLIQUE_CAP) -> ComplexCertificate:
    """Collapse the clique complex of g onto that of g minus a dominated vertex.

    Pairs every complete subgraph through v avoiding the dominator w with its
    extension by w, processed in decreasing size.
    """
    if v == w or v not in g.vertices or w not in g.vertices:
        raise GraphError(f"bad domination pair ({v!r}, {w!r})")
    if not g.closed_neighborhood(v) <= g.closed_neighborhood(w):
        raise CertificateError(f"{w!r} does not dominate {v!r}")
    start = clique_complex(g, cap)
    carriers = sorted((s for s in start.simplices if v in s and w not in s),
                      key=lambda s: (-len(s), tuple(sorted(s))))
    moves = tuple((COLLAPSE, CollapsePair(s | {w}, s)) for s in carriers)
    end = clique_complex(g.without_vertex(v), cap)
    cert = ComplexCertificate(start, moves, end)
    rep = check_complex_certificate(cert)
    if not rep:  # pragma: no cover - construction guarantees this
        raise CertificateError(f"collapse invalid at step {rep.failed_at}: {rep.reason}")
    return cert


def collapse_certificate_for_dismantlable(g: Graph,
                                          cap: int = DEFAULT_CLIQUE_CAP) -> ComplexCertificate:
    """Collapse of the clique complex of a dismantlable graph down to a point."""
    order = greedy_dismantling(g)
    if order is None:
        raise CertificateError("graph is not greedily dismantlable")
    moves: list[tuple[str, CollapsePair]] = []
    cur = g
    for v, w in order.steps:
        moves.extend(domination_collapse(cur, v, w, cap).moves)
        cur = cur.without_vertex(v)
    return ComplexCertificate(clique_complex(g, cap), tuple(moves), clique_complex(cur, cap))


_FOUND_, _EXHAUSTED_, _CUTOFF_ = range(3)


def collapse_search(k: SimplicialComplex, target: SimplicialComplex | None = None,
                    budget: int = DEFAULT_SEARCH_BUDGET) -> SearchVerdict:
    """Backtracking over free pairs; memoizes failed simplex sets exactly."""
    if not k.simplices:
        raise ComplexError("empty complex")
    if target is not None and not (target.simplices <= k.simplices):
        return SearchVerdict(Outcome.NO, None, SearchStats(0, budget))

    nodes = 0
    failed: set[frozenset[frozenset[str]]] = set()
    path: list[tuple[str, CollapsePair]] = []

    def done(c: SimplicialComplex) -> bool:
        if target is None:
            return len(c.simplices) == 1
        return c.simplices == target.simplices

    def dfs(c: SimplicialComplex) -> int:
        nonlocal nodes
        if done(c):
            return _FOUND_
        if c.simplices in failed:
            return _EXHAUSTED_
        if nodes >= budget:
            return _CUTOFF_
        nodes += 1
        cut = False
        for pair in free_pairs(c):
            child = apply_pair_unchecked(c, COLLAPSE, pair)
            if target is not None and not (target.simplices <= child.simplices):
                continue
            path.append((COLLAPSE, pair))
            res = dfs(child)
            if res == _FOUND_:
                return _FOUND_
            path.pop()
            if res == _CUTOFF_:
                cut = True
        if cut:
            return _CUTOFF_
        failed.add(c.simplices)
        return _EXHAUSTED_

    res = dfs(k)
    stats = SearchStats(nodes, budget)
    if res == _FOUND_:
        end = k
        for op, pair in path:
            end = apply_pair_unchecked(end, op, pair)
        return SearchVerdict(Outcome.YES, ComplexCertificate(k, tuple(path), end), stats)
    if res == _EXHAUSTED_:
        return SearchVerdict(Outcome.NO, None, stats)
    return SearchVerdict(Outcome.UNKNOWN, None, stats)


# ---------------------------------------------------------------------------
# structure maps


def inclusion_graph(k: SimplicialComplex) -> Graph:
    """Graph on the simplices of k, joined when one strictly contains the other."""
    sims = k.sorted_simplices()
    labels = {s: subset_label(s) for s in sims}
    edges = [(labels[a], labels[b])
             for a, b in itertools.combinations(sims, 2) if a < b or b < a]
    return Graph.make(labels.values(), edges)


def _all_chains(sims: list[frozenset[str]]) -> Iterator[list[frozenset[str]]]:
    sups = {s: [t for t in sims if len(t) > len(s) and s < t] for s in sims}

    def extend(chain: list[frozenset[str]]) -> Iterator[list[frozenset[str]]]:
        yield chain
        for t in sups[chain[-1]]:
            yield from extend(chain + [t])

    for s in sims:
        yield from extend([s])


def barycentric_complex(k: SimplicialComplex) -> SimplicialComplex:
    """Simplices are the chains of simplices of k ordered by inclusion."""
    sims = k.sorted_simplices()
    chains = {frozenset(subset_label(s) for s in chain)
              for chain in _all_chains(sims)}
    return SimplicialComplex(frozenset(chains))


# ---------------------------------------------------------------------------
# how an elementary collapse acts on the two graph images


def skeleton_move_for_collapse(k: SimplicialComplex,
                               pair: CollapsePair) -> GraphMove | None:
    """The move induced on the 1-skeleton, or None when it is untouched.

    A free vertex is dominated by its unique edge-partner; a free edge has a
    single common neighbor, so it deletes as an s-dismantlable edge; higher
    pairs do not meet the skeleton.
    """
    err = collapse_pair_error(k, pair)
    if err:
        raise CertificateError(err)
    if len(pair.tau) == 1:
        return GraphMove(MoveKind.REMOVE_VERTEX, next(iter(pair.tau)),
                         witness=DismantlingOrder(()))  # single-vertex neighborhood
    if len(pair.tau) == 2:
        return GraphMove(MoveKind.REMOVE_EDGE, pair.tau,
                         witness=DismantlingOrder(()))  # common neighborhood is one vertex
    return None


def inclusion_graph_moves_for_collapse(k: SimplicialComplex,
                                       pair: CollapsePair) -> tuple[GraphMove, GraphMove]:
    """The two vertex moves an elementary collapse induces on the inclusion graph.

    The free face is dominated by its unique coface; once removed, that coface
    has a dismantlable neighborhood (the inclusion graph of the punctured
    boundary of the coface).
    """
    err = collapse_pair_error(k, pair)
    if err:
        raise CertificateError(err)
    gam = inclusion_graph(k)
    tl, sl = subset_label(pair.tau), subset_label(pair.sigma)
    first = GraphMove(MoveKind.REMOVE_VERTEX, tl,
                      witness=cone_order(gam.open_neighborhood_subgraph(tl), sl))
    reduced = gam.without_vertex(tl)
    order = greedy_dismantling(reduced.open_neighborhood_subgraph(sl))
    if order is None:
        raise CertificateError(
            f"neighborhood of {sl} did not dismantle after removing {tl}")
    second = GraphMove(MoveKind.REMOVE_VERTEX, sl, witness=order)
    return first, second
