"""Finite strict partial orders, weak points and their reduction certificates.

Posets store the full transitively closed strict order; Hasse covers are
recomputed on demand.  All values are immutable.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import DEFAULT_CLIQUE_CAP, Graph, complete_subgraphs, subset_label
from .dismantling import CheckReport, CertificateError, greedy_dismantling
from .simplicial import SimplicialComplex


class PosetError(ValueError):
    """Structurally invalid order data or an unknown element."""


def _transitive_closure(elements: frozenset[str],
                        pairs: Iterable[tuple[str, str]]) -> frozenset[tuple[str, str]]:
    succ: dict[str, set[str]] = {x: set() for x in elements}
    for x, y in pairs:
        if x not in elements or y not in elements:
            raise PosetError(f"relation {x!r} < {y!r} uses an undeclared element")
        succ[x].add(y)
    closed: dict[str, set[str]] = {}
    for x in elements:
        seen: set[str] = set()
        stack = list(succ[x])
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            stack.extend(succ[y])
        if x in seen:
            raise PosetError(f"cycle through {x!r}")
        closed[x] = seen
    return frozenset((x, y) for x, ys in closed.items() for y in ys)


@dataclass(frozen=True)
class Poset:
    elements: frozenset[str]
    relation: frozenset[tuple[str, str]]  # (x, y) means x < y; transitively closed

    @staticmethod
    def make(elements: Iterable[str] = (),
             relations: Iterable[tuple[str, str]] = ()) -> "Poset":
        els = frozenset(elements)
        return Poset(els, _transitive_closure(els, relations))

    @cached_property
    def above_map(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {x: set() for x in self.elements}
        for x, y in self.relation:
            out[x].add(y)
        return {x: frozenset(s) for x, s in out.items()}

    @cached_property
    def below_map(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {x: set() for x in self.elements}
        for x, y in self.relation:
            out[y].add(x)
        return {x: frozenset(s) for x, s in out.items()}

    def __contains__(self, x: str) -> bool:
        return x in self.elements

    def _require(self, x: str) -> None:
        if x not in self.elements:
            raise PosetError(f"unknown element {x!r}")

    def less(self, x: str, y: str) -> bool:
        return (x, y) in self.relation

    def comparable(self, x: str, y: str) -> bool:
        return (x, y) in self.relation or (y, x) in self.relation

    def above(self, x: str) -> frozenset[str]:
        self._require(x)
        return self.above_map[x]

    def below(self, x: str) -> frozenset[str]:
        self._require(x)
        return self.below_map[x]

    def induced(self, subset: Iterable[str]) -> "Poset":
        sub = frozenset(subset)
        for x in sub:
            self._require(x)
        return Poset(sub, frozenset((x, y) for x, y in self.relation
                                    if x in sub and y in sub))

    def down_set(self, x: str) -> "Poset":
        return self.induced(self.below(x))

    def up_set(self, x: str) -> "Poset":
        return self.induced(self.above(x))

    def without(self, x: str) -> "Poset":
        self._require(x)
        return self.induced(self.elements - {x})

    def covers(self) -> list[tuple[str, str]]:
        """Hasse diagram: pairs x < y with nothing strictly between."""
        out = []
        for x, y in self.relation:
            if not any(self.less(x, z) and self.less(z, y) for z in self.elements):
                out.append((x, y))
        return sorted(out)

    def maximum(self) -> str | None:
        for m in self.elements:
            if self.below_map[m] == self.elements - {m}:
                return m
        return None

    def minimum(self) -> str | None:
        for m in self.elements:
            if self.above_map[m] == self.elements - {m}:
                return m
        return None

    def sorted_elements(self) -> list[str]:
        return sorted(self.elements)


def chain_poset(labels: Iterable[str]) -> Poset:
    ls = list(labels)
    return Poset.make(ls, [(ls[i], ls[i + 1]) for i in range(len(ls) - 1)])


def antichain_poset(labels: Iterable[str]) -> Poset:
    return Poset.make(labels, ())


# ---------------------------------------------------------------------------
# irreducible and weak points


def irreducible_points(p: Poset) -> list[str]:
    """Elements whose strict down-set has a maximum or strict up-set a minimum."""
    out = []
    for x in p.sorted_elements():
        if p.down_set(x).maximum() is not None or p.up_set(x).minimum() is not None:
            out.append(x)
    return out


class StepKind(enum.Enum):
    MAX_BELOW = "max-below"
    MIN_ABOVE = "min-above"


@dataclass(frozen=True)
class PosetStep:
    removed: str
    kind: StepKind
    pivot: str


@dataclass(frozen=True)
class PosetDismantlingOrder:
    steps: tuple[PosetStep, ...]


def poset_order_error(p: Poset, order: PosetDismantlingOrder,
                      require_single: bool = True) -> str | None:
    cur = p
    for i, step in enumerate(order.steps):
        if step.removed not in cur.elements:
            return f"step {i}: {step.removed!r} not present"
        if step.pivot not in cur.elements:
            return f"step {i}: pivot {step.pivot!r} not present"
        if step.kind is StepKind.MAX_BELOW:
            if cur.down_set(step.removed).maximum() != step.pivot:
                return f"step {i}: {step.pivot!r} is not the maximum below {step.removed!r}"
        else:
            if cur.up_set(step.removed).minimum() != step.pivot:
                return f"step {i}: {step.pivot!r} is not the minimum above {step.removed!r}"
        cur = cur.without(step.removed)
    if require_single and len(cur.elements) != 1:
        return f"{len(cur.elements)} elements remain after replay"
    return None


def _first_irreducible(p: Poset) -> PosetStep | None:
    for x in p.sorted_elements():
        m = p.down_set(x).maximum()
        if m is not None:
            return PosetStep(x, StepKind.MAX_BELOW, m)
        m = p.up_set(x).minimum()
        if m is not None:
            return PosetStep(x, StepKind.MIN_ABOVE, m)
    return None


def poset_dismantling_core(p: Poset) -> tuple[Poset, PosetDismantlingOrder]:
    """Greedily delete irreducible points until none remains."""
    if not p.elements:
        raise PosetError("empty poset has no dismantling core")
    steps: list[PosetStep] = []
    cur = p
    while True:
        step = _first_irreducible(cur)
        if step is None:
            return cur, PosetDismantlingOrder(tuple(steps))
        steps.append(step)
        cur = cur.without(step.removed)


def greedy_poset_dismantling(p: Poset) -> PosetDismantlingOrder | None:
    """Full greedy order to a single element, or None.

    Greedy suffices: deleting an irreducible point leaves a retract, which
    preserves dismantlability.
    """
    if not p.elements:
        return None
    residual, order = poset_dismantling_core(p)
    if len(residual.elements) == 1:
        return order
    return None


def is_dismantlable_poset(p: Poset) -> bool:
    if not p.elements:
        raise PosetError("dismantlability is defined for nonempty posets only")
    return greedy_poset_dismantling(p) is not None


def weak_point_witness(p: Poset, x: str) -> tuple[str, PosetDismantlingOrder] | None:
    """A ("below"|"above", order) pair dismantling the strict down- or up-set."""
    p._require(x)
    down = p.down_set(x)
    if down.elements:
        order = greedy_poset_dismantling(down)
        if order is not None:
            return "below", order
    up = p.up_set(x)
    if up.elements:
        order = greedy_poset_dismantling(up)
        if order is not None:
            return "above", order
    return None


def weak_points(p: Poset) -> list[str]:
    """Elements whose strict down-set or strict up-set is dismantlable."""
    return [x for x in p.sorted_elements() if weak_point_witness(p, x) is not None]


def weak_points_via_join(p: Poset) -> list[str]:
    """Same set computed through dismantlability of up-set joined over down-set."""
    out = []
    for x in p.sorted_elements():
        j = join(p.up_set(x), p.down_set(x))
        if j.elements and greedy_poset_dismantling(j) is not None:
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# constructions


def join(p: Poset, q: Poset) -> Poset:
    """Disjoint union with every element of p below every element of q.

    Colliding labels on the q side are suffixed with "'" until fresh.
    """
    rename = {}
    taken = set(p.elements)
    for x in q.sorted_elements():
        nx = x
        while nx in taken:
            nx = nx + "'"
        rename[x] = nx
        taken.add(nx)
    rel = set(p.relation)
    rel.update((rename[x], rename[y]) for x, y in q.relation)
    rel.update((a, rename[b]) for a in p.elements for b in q.elements)
    return Poset(frozenset(taken), frozenset(rel))


def product_with_two_chain(p: Poset) -> Poset:
    """Two stacked copies of p: (x,a) and (x,b) with (x,a) <= (y,b) iff x <= y."""
    lo = {x: f"({x},a)" for x in p.elements}
    hi = {x: f"({x},b)" for x in p.elements}
    rel = set()
    for x, y in p.relation:
        rel.add((lo[x], lo[y]))
        rel.add((hi[x], hi[y]))
        rel.add((lo[x], hi[y]))
    for x in p.elements:
        rel.add((lo[x], hi[x]))
    return Poset(frozenset(lo.values()) | frozenset(hi.values()), frozenset(rel))


def comparability_graph(p: Poset) -> Graph:
    return Graph.make(p.elements, ((x, y) for x, y in p.relation))


def clique_poset(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> Poset:
    """Complete subgraphs of g ordered by inclusion."""
    cliques = complete_subgraphs(g, cap)
    labels = {c: subset_label(c) for c in cliques}
    rel = [(labels[c], labels[d])
           for c, d in itertools.permutations(cliques, 2) if c < d]
    return Poset(frozenset(labels.values()), frozenset(rel))


def _poset_chains(p: Poset) -> list[list[str]]:
    order = p.sorted_elements()

    out: list[list[str]] = []

    def extend(chain: list[str]) -> None:
        out.append(chain)
        for y in order:
            if p.less(chain[-1], y):
                extend(chain + [y])

    for x in order:
        extend([x])
    return out


def order_complex(p: Poset) -> SimplicialComplex:
    """Chains of p as simplices over the element labels."""
    if not p.elements:
        return SimplicialComplex(frozenset())
    return SimplicialComplex(frozenset(frozenset(c) for c in _poset_chains(p)))


def face_poset(k: SimplicialComplex) -> Poset:
    """Simplices of k ordered by inclusion."""
    sims = k.sorted_simplices()
    labels = {s: subset_label(s) for s in sims}
    rel = [(labels[a], labels[b])
           for a, b in itertools.permutations(sims, 2) if a < b]
    return Poset(frozenset(labels.values()), frozenset(rel))


def barycentric_poset(p: Poset) -> Poset:
    """Nonempty chains of p ordered by inclusion of underlying sets."""
    chains = [frozenset(c) for c in _poset_chains(p)]
    labels = {c: subset_label(c) for c in chains}
    rel = [(labels[a], labels[b])
           for a, b in itertools.permutations(chains, 2) if a < b]
    return Poset(frozenset(labels.values()), frozenset(rel))


# ---------------------------------------------------------------------------
# weak point certificates


class PosetMoveKind(enum.Enum):
    REMOVE = "-p"
    ADD = "+p"


@dataclass(frozen=True)
class PosetMove:
    kind: PosetMoveKind
    element: str
    witness_side: str  # "below" | "above"
    witness: PosetDismantlingOrder
    lower: frozenset[str] = frozenset()  # for ADD: elements strictly below
    upper: frozenset[str] = frozenset()  # for ADD: elements strictly above


@dataclass(frozen=True)
class PosetCertificate:
    start: Poset
    moves: tuple[PosetMove, ...]
    end: Poset


def _poset_move_error(p: Poset, m: PosetMove) -> str | None:
    if m.kind is PosetMoveKind.REMOVE:
        if m.element not in p.elements:
            return f"element {m.element!r} not present"
        local = p.down_set(m.element) if m.witness_side == "below" else p.up_set(m.element)
    else:
        if m.element in p.elements:
            return f"element {m.element!r} already present"
        for u in m.lower | m.upper:
            if u not in p.elements:
                return f"relation endpoint {u!r} not present"
        for l in m.lower:
            if not p.below(l) <= m.lower:
                return f"lower set not downward closed at {l!r}"
        for u in m.upper:
            if not p.above(u) <= m.upper:
                return f"upper set not upward closed at {u!r}"
        for l in m.lower:
            for u in m.upper:
                if not p.less(l, u):
                    return f"{l!r} < {u!r} would be forced between old elements"
        local = p.induced(m.lower) if m.witness_side == "below" else p.induced(m.upper)
    if m.witness_side not in ("below", "above"):
        return f"unknown witness side {m.witness_side!r}"
    if not local.elements:
        return f"{m.element!r}: witness sub-poset is empty"
    err = poset_order_error(local, m.witness)
    if err:
        return f"{m.element!r}: witness invalid ({err})"
    return None


def apply_poset_move_unchecked(p: Poset, m: PosetMove) -> Poset:
    if m.kind is PosetMoveKind.REMOVE:
        return p.without(m.element)
    rel = set(p.relation)
    rel.update((l, m.element) for l in m.lower)
    rel.update((m.element, u) for u in m.upper)
    rel.update((l, u) for l in m.lower for u in m.upper)
    return Poset(p.elements | {m.element}, frozenset(rel))


def check_poset_certificate(c: PosetCertificate) -> CheckReport:
    cur = c.start
    for i, m in enumerate(c.moves):
        err = _poset_move_error(cur, m)
        if err:
            return CheckReport(False, i, err)
        cur = apply_poset_move_unchecked(cur, m)
    if cur != c.end:
        return CheckReport(False, len(c.moves), "end poset mismatch")
    return CheckReport(True)


def weak_point_cascade(g: Graph, v: str,
                       cap: int = DEFAULT_CLIQUE_CAP) -> PosetCertificate:
    """Weak point removals taking the clique poset of g to that of g minus v.

    Removes the singleton clique of v first, then every clique through v in the
    greedy dismantling order of the clique poset of its open neighborhood.
    """
    nb = g.open_neighborhood_subgraph(v)
    if not nb.vertices or greedy_dismantling(nb) is None:
        raise CertificateError(f"open neighborhood of {v!r} is not dismantlable")
    start = clique_poset(g, cap)
    nb_cliques = complete_subgraphs(nb, cap)
    order = greedy_poset_dismantling(clique_poset(nb, cap))
    assert order is not None  # clique posets of dismantlable graphs dismantle
    label_to_clique = {subset_label(c): c for c in nb_cliques}
    removed_labels = [s.removed for s in order.steps]
    survivor = next(l for l in map(subset_label, nb_cliques) if l not in removed_labels)

    targets = [subset_label({v})]
    targets.extend(subset_label(label_to_clique[l] | {v}) for l in removed_labels)
    targets.append(subset_label(label_to_clique[survivor] | {v}))

    moves = []
    cur = start
    for t in targets:
        wit = weak_point_witness(cur, t)
        if wit is None:  # pragma: no cover - the cascade order guarantees a witness
            raise CertificateError(f"{t!r} is not a weak point during the cascade")
        side, worder = wit
        move = PosetMove(PosetMoveKind.REMOVE, t, side, worder)
        err = _poset_move_error(cur, move)
        if err:  # pragma: no cover
            raise CertificateError(err)
        cur = apply_poset_move_unchecked(cur, move)
        moves.append(move)
    end = clique_poset(g.without_vertex(v), cap)
    if cur != end:  # pragma: no cover - construction guarantees this
        raise CertificateError("cascade did not end at the vertex-deleted clique poset")
    return PosetCertificate(start, tuple(moves), end)
