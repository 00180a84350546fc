"""Cross-structure constructions and executable property oracles.

The two constructive workhorses here turn an arbitrary graph into its
barycentric subdivision by legal vertex moves, and rewrite edge moves in a
certificate into pairs of vertex moves.  run_property_suite exercises the
bridge results between graphs, complexes and posets on seeded random
instances and reports per-instance verdicts.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    DEFAULT_CLIQUE_CAP,
    Graph,
    IsoWitness,
    are_isomorphic,
    barycentric_graph,
    complete_subgraphs,
    fresh_labels,
    subset_label,
)
from .dismantling import (
    DEFAULT_SEARCH_BUDGET,
    CertificateError,
    DismantlingOrder,
    GraphMove,
    MoveCertificate,
    MoveKind,
    Outcome,
    apply_move,
    check_certificate,
    cone_order,
    greedy_dismantling,
    is_s_dismantlable_edge,
    is_s_dismantlable_vertex,
    realize_edge_deletion,
    s_collapse_search,
    s_dismantlable_vertices,
    IContractibility,
)
from .simplicial import (
    COLLAPSE,
    CollapsePair,
    SimplicialComplex,
    apply_pair_unchecked,
    check_complex_certificate,
    clique_complex,
    collapse_certificate_for_dismantlable,
    collapse_pair_error,
    free_pairs,
    inclusion_graph,
    inclusion_graph_moves_for_collapse,
    one_skeleton,
    skeleton_move_for_collapse,
    star_collapse_certificate,
)
from .posets import (
    Poset,
    check_poset_certificate,
    clique_poset,
    comparability_graph,
    weak_point_cascade,
    weak_points,
    weak_points_via_join,
)


# ---------------------------------------------------------------------------
# subdivision as vertex moves


def subdivision_certificate(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> MoveCertificate:
    """Vertex moves from g to its barycentric subdivision graph.

    First a hat vertex is added for every complete subgraph, in increasing
    cardinality: the hat of c attaches to the hats of the proper subsets of c,
    to the largest-labeled member of c, and to every later vertex extending c,
    which makes its neighborhood a cone.  Then the original vertices are
    removed in label order; the witness removes hats of subgraphs not peaking
    at the removed vertex (largest first, each dominated by its extension)
    and finishes on the cone over the removed vertex's singleton hat.
    """
    order = g.sorted_vertices()
    rank = {v: i for i, v in enumerate(order)}
    cliques = sorted(complete_subgraphs(g, cap), key=lambda c: (len(c), tuple(sorted(c))))
    clique_set = set(cliques)
    hats = {c: subset_label(c) for c in cliques}

    moves: list[GraphMove] = []
    cur = g
    for c in cliques:
        peak = max(c, key=rank.__getitem__)
        attach = {hats[d] for d in clique_set if d < c}
        attach.add(peak)
        attach.update(u for u in order
                      if rank[u] > rank[peak] and (c | {u}) in clique_set)
        move = GraphMove(MoveKind.ADD_VERTEX, hats[c],
                         witness=cone_order(cur.induced(attach), peak),
                         attachment=frozenset(attach))
        cur = apply_move(cur, move)
        moves.append(move)

    hat_members = {hats[c]: c for c in cliques}
    for v in order:
        i = rank[v]
        nbhd = cur.neighbors(v)
        shrinking = sorted(
            (u for u in nbhd
             if u in hat_members and rank[max(hat_members[u], key=rank.__getitem__)] < i),
            key=lambda u: (-len(hat_members[u]), u))
        steps = [(u, hats[frozenset(hat_members[u]) | {v}]) for u in shrinking]
        apex = hats[frozenset((v,))]
        steps.extend((u, apex) for u in sorted(nbhd - set(shrinking)) if u != apex)
        move = GraphMove(MoveKind.REMOVE_VERTEX, v,
                         witness=DismantlingOrder(tuple(steps)))
        cur = apply_move(cur, move)
        moves.append(move)

    expected = barycentric_graph(g, cap)
    if cur != expected:  # pragma: no cover - construction guarantees this
        raise CertificateError("subdivision moves did not end at the subdivision graph")
    return MoveCertificate(g, tuple(moves), cur)


# ---------------------------------------------------------------------------
# edge moves rewritten as vertex moves


def _map_order(order: DismantlingOrder, mu: dict[str, str]) -> DismantlingOrder:
    return DismantlingOrder(tuple((mu.get(a, a), mu.get(b, b)) for a, b in order.steps))


def rewrite_edge_moves(cert: MoveCertificate) -> tuple[MoveCertificate, IsoWitness]:
    """Replace every edge move in a valid certificate by two vertex moves.

    Deleting an edge clones one endpoint without it; adding an edge clones one
    endpoint with it.  Either way the endpoint is renamed, so the result ends
    at a graph isomorphic to the original end; the witness records the
    relabeling.
    """
    rep = check_certificate(cert)
    if not rep:
        raise CertificateError(f"input invalid at step {rep.failed_at}: {rep.reason}")

    mu: dict[str, str] = {v: v for v in cert.start.vertices}
    used = set(cert.start.vertices)
    cur = cert.start
    out: list[GraphMove] = []

    def emit(move: GraphMove) -> None:
        nonlocal cur
        cur = apply_move(cur, move)
        out.append(move)

    for m in cert.moves:
        if m.kind is MoveKind.REMOVE_VERTEX:
            emit(GraphMove(MoveKind.REMOVE_VERTEX, mu[m.target],
                           witness=_map_order(m.witness, mu)))
            del mu[m.target]
        elif m.kind is MoveKind.ADD_VERTEX:
            label = m.target if m.target not in used else fresh_labels(used, 1)[0]
            used.add(label)
            mu[m.target] = label
            emit(GraphMove(MoveKind.ADD_VERTEX, label,
                           witness=_map_order(m.witness, mu),
                           attachment=frozenset(mu[u] for u in m.attachment)))
        elif m.kind is MoveKind.REMOVE_EDGE:
            a, b = sorted(m.target)
            renamed = mu[a]
            ec = realize_edge_deletion(cur, frozenset((mu[a], mu[b])),
                                       renamed=renamed, avoid=used)
            for mv in ec.moves:
                emit(mv)
            mu[a] = ec.moves[0].target
            used.add(mu[a])
        else:  # ADD_EDGE: clone endpoint a with the new edge, then drop a
            a, b = sorted(m.target)
            ca, cb = mu[a], mu[b]
            attach = cur.closed_neighborhood(ca) | {cb}
            witness = greedy_dismantling(cur.induced(attach))
            if witness is None:  # pragma: no cover - guaranteed by the move's validity
                raise CertificateError(f"clone neighborhood for edge {a}-{b} not dismantlable")
            x = fresh_labels(used | cur.vertices, 1)[0]
            emit(GraphMove(MoveKind.ADD_VERTEX, x, witness=witness,
                           attachment=frozenset(attach)))
            emit(GraphMove(MoveKind.REMOVE_VERTEX, ca,
                           witness=cone_order(cur.open_neighborhood_subgraph(ca), x)))
            mu[a] = x
            used.add(x)

    mapping = IsoWitness(tuple(sorted((v, mu[v]) for v in cert.end.vertices)))
    err = mapping.error(cert.end, cur)
    if err:  # pragma: no cover - construction guarantees this
        raise CertificateError(f"relabeling is not an isomorphism: {err}")
    return MoveCertificate(cert.start, tuple(out), cur), mapping


# ---------------------------------------------------------------------------
# seeded random instances


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    labels = list(string.ascii_lowercase[:n])
    edges = [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]
             if rng.random() < p]
    return Graph.make(labels, edges)


def random_poset(rng: random.Random, n: int, p: float) -> Poset:
    labels = list(string.ascii_lowercase[:n])
    rels = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
            if rng.random() < p]
    return Poset.make(labels, rels)


def random_complex(rng: random.Random, n: int, p: float) -> SimplicialComplex:
    if rng.random() < 0.5:
        g = random_graph(rng, n, p)
        return clique_complex(g)
    labels = list(string.ascii_lowercase[:n])
    count = rng.randint(1, max(1, n))
    tops = []
    for _ in range(count):
        size = rng.randint(1, min(4, n))
        tops.append(rng.sample(labels, size))
    return SimplicialComplex.from_maximal(tops)


# ---------------------------------------------------------------------------
# property suite


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    instance: str
    verdict: str  # "pass" | "fail" | "skipped"
    detail: Optional[str] = None

    def line(self) -> str:
        head = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[self.verdict]
        tail = f" :: {self.detail}" if self.detail else ""
        return f"{head} {self.property_id} {self.instance}{tail}"


def _describe_graph(g: Graph) -> str:
    return f"graph<{len(g.vertices)}v,{len(g.edges)}e,{hash(g) & 0xffff:04x}>"


def _describe_poset(p: Poset) -> str:
    return f"poset<{len(p.elements)}el,{len(p.relation)}rel,{hash(p) & 0xffff:04x}>"


def _describe_complex(k: SimplicialComplex) -> str:
    return f"complex<{len(k.simplices)}s,{hash(k) & 0xffff:04x}>"


def _stuck_graph_fixture() -> tuple[Graph, Graph]:
    """Seven-vertex graph with no s-move whose clique complex still collapses."""
    from .corpus import stuck_graph, stuck_graph_reduced
    return stuck_graph(), stuck_graph_reduced()


def run_property_suite(seed: int = 0, max_size: int = 6,
                       budget: int = DEFAULT_SEARCH_BUDGET,
                       samples: int = 24) -> list[PropertyReport]:
    """Run the cross-structure oracles on seeded random instances.

    Returns one report per (property, instance), sorted by property id.
    """
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(2, max_size), rng.choice((0.3, 0.5, 0.7)))
              for _ in range(samples)]
    posets = [random_poset(rng, rng.randint(2, max_size), rng.choice((0.3, 0.5, 0.7)))
              for _ in range(samples)]
    complexes = [random_complex(rng, rng.randint(2, min(5, max_size)),
                                rng.choice((0.3, 0.5, 0.7)))
                 for _ in range(samples)]
    reports: list[PropertyReport] = []

    def record(pid: str, instance: str, ok: bool, detail: str | None = None) -> None:
        reports.append(PropertyReport(pid, instance, "pass" if ok else "fail", detail))

    pid = "clique-complex-collapses-when-vertex-s-removable"
    for g in graphs:
        name = _describe_graph(g)
        for v in s_dismantlable_vertices(g):
            kk = clique_complex(g)
            lc = collapse_certificate_for_dismantlable(g.open_neighborhood_subgraph(v))
            cert = star_collapse_certificate(kk, frozenset((v,)), lc)
            ok = bool(check_complex_certificate(cert)) and \
                cert.end == clique_complex(g.without_vertex(v))
            record(pid, f"{name}/{v}", ok)

    pid = "collapse-induces-two-inclusion-graph-moves"
    for k in complexes:
        name = _describe_complex(k)
        for pair in free_pairs(k):
            gam = inclusion_graph(k)
            first, second = inclusion_graph_moves_for_collapse(k, pair)
            try:
                after = apply_move(apply_move(gam, first), second)
                ok = after == inclusion_graph(apply_pair_unchecked(k, COLLAPSE, pair))
            except CertificateError as exc:
                record(pid, name, False, str(exc))
                continue
            record(pid, name, ok)

    pid = "collapse-induces-skeleton-move"
    for k in complexes:
        name = _describe_complex(k)
        for pair in free_pairs(k):
            skel = one_skeleton(k)
            move = skeleton_move_for_collapse(k, pair)
            after = one_skeleton(apply_pair_unchecked(k, COLLAPSE, pair))
            try:
                ok = (after == skel) if move is None else (apply_move(skel, move) == after)
            except CertificateError as exc:
                record(pid, name, False, str(exc))
                continue
            record(pid, name, ok)

    pid = "edge-removal-rewrites-to-vertex-moves"
    for g in graphs:
        name = _describe_graph(g)
        for a, b in g.sorted_edges():
            if not is_s_dismantlable_edge(g, (a, b)):
                continue
            cert = realize_edge_deletion(g, (a, b))
            ok = bool(check_certificate(cert)) and \
                are_isomorphic(cert.end, g.without_edge(a, b)) is not None
            record(pid, f"{name}/{a}-{b}", ok)

    pid = "s-collapse-transfers-to-complex-collapse"
    for g in graphs:
        name = _describe_graph(g)
        verdict = s_collapse_search(g, budget)
        if verdict.outcome is Outcome.UNKNOWN:
            reports.append(PropertyReport(pid, name, "skipped", "budget exhausted"))
            continue
        if verdict.outcome is Outcome.NO:
            continue
        cur_g = g
        ok = True
        for move in verdict.certificate.moves:
            kk = clique_complex(cur_g)
            lc = collapse_certificate_for_dismantlable(
                cur_g.open_neighborhood_subgraph(move.target))
            cert = star_collapse_certificate(kk, frozenset((move.target,)), lc)
            cur_g = cur_g.without_vertex(move.target)
            ok = ok and bool(check_complex_certificate(cert)) and \
                cert.end == clique_complex(cur_g)
        record(pid, name, ok)

    pid = "s-removable-vertex-is-i-removable"
    checker = IContractibility()
    for g in graphs:
        name = _describe_graph(g)
        for v in s_dismantlable_vertices(g):
            record(pid, f"{name}/{v}", checker.vertex(g, v) == "yes")

    pid = "weak-points-agree-three-ways"
    for p in posets:
        name = _describe_poset(p)
        direct = weak_points(p)
        via_join = weak_points_via_join(p)
        comp = comparability_graph(p)
        via_graph = [x for x in p.sorted_elements()
                     if is_s_dismantlable_vertex(comp, x)]
        record(pid, name, direct == via_join == via_graph)

    pid = "weak-point-cascade-reaches-reduced-clique-poset"
    for g in graphs:
        name = _describe_graph(g)
        for v in s_dismantlable_vertices(g):
            cert = weak_point_cascade(g, v)
            ok = bool(check_poset_certificate(cert)) and \
                cert.end == clique_poset(g.without_vertex(v))
            record(pid, f"{name}/{v}", ok)

    pid = "subdivision-is-reachable-by-vertex-moves"
    for g in graphs:
        name = _describe_graph(g)
        cert = subdivision_certificate(g)
        ok = bool(check_certificate(cert)) and cert.end == barycentric_graph(g)
        record(pid, name, ok)

    pid = "stuck-graph-still-collapses-as-complex"
    g, h = _stuck_graph_fixture()
    no_moves = not s_dismantlable_vertices(g)
    kk, ll = clique_complex(g), clique_complex(h)
    diff = sorted(kk.simplices - ll.simplices, key=len, reverse=True)
    pair = CollapsePair(diff[0], diff[1])
    ok = no_moves and len(diff) == 2 and collapse_pair_error(kk, pair) is None
    record(pid, "stuck-7-vertex", ok)

    return sorted(reports, key=lambda r: (r.property_id, r.instance))
