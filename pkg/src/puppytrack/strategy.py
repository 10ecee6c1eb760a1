"""Catching strategies from the attraction diagram.

The strategy graph's nodes are maximal stable arcs (chains of per-cell stable
pieces glued at junctions, ending at pivots) plus the main diagonal; its
edges are pivot drops resolved by the event simulator.  A strategy is an
alternating sequence of stable walks and pivot drops whose last run is a
capture; it is dexter when that last pivot is a backward pivot and sinister
when it is forward.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .diagram import (
    AttractionDiagram,
    DiagVert,
    EdgeArc,
    Pivot,
    VertArc,
    _pkey_static,
    criticals_in_column,
    implied_tag_between,
)
from .dynamics import HumanScript, RunTrace, Sim, puppy_run_exact, simulate
from .geom import cross, dot, sign
from .track import (
    Configuration,
    HPos,
    HumanParam,
    PEdge,
    PState,
    PuppyError,
    PVert,
    Tag,
    Track,
)


class NoSuchHandedStrategy(PuppyError):
    pass


class DiagramPrecondition(PuppyError):
    pass


class CoverageGap(PuppyError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"trapezoid with neither handedness: {witness}")


class NotOrthogonal(PuppyError):
    pass


class VerificationFailed(PuppyError):
    pass


# -- strategy graph -----------------------------------------------------------


@dataclass
class Node:
    idx: int
    arcs: list  # chain in CCW (increasing x) order
    closed: bool
    is_diagonal: bool
    cum: list  # cumulative arc-length x extents, len(arcs)+1
    pivot_start: Optional[int] = None  # pivot id at the chain's CW end
    pivot_end: Optional[int] = None  # pivot id at the chain's CCW end


@dataclass
class GraphEdge:
    idx: int
    src: int  # node id
    pivot: int  # pivot id
    run: RunTrace
    dst: Optional[int]  # landing node id; None when the run captures
    dst_pos: Optional[float]  # cumulative position on dst


@dataclass
class StrategyGraph:
    diagram: AttractionDiagram
    nodes: list
    edges: list
    out_edges: dict  # node id -> [edge ids]
    arc_node: dict  # id(arc) -> (node id, chain index)
    endpoint_pos: dict  # canonical endpoint key -> (node id, cum position)

    def node_of_arc(self, arc):
        return self.arc_node[id(arc)]


def _arc_xlen(track, arc):
    if isinstance(arc, DiagVert):
        return 0.0  # vertical piece of the main diagonal
    return abs(float(arc.f1 - arc.f0)) * track.edge_lengths[arc.j]


def _stable_endpoint_keys(track, arc):
    from .diagram import _arc_endpoints

    return _arc_endpoints(track, arc)


def build_strategy_graph(diagram: AttractionDiagram) -> StrategyGraph:
    track = diagram.track
    stable = diagram.stable_arcs()
    starts = {}
    ends = {}
    for arc in stable:
        k0, k1 = _stable_endpoint_keys(track, arc)
        starts[k0] = arc
        ends[k1] = arc
    pivot_keys = {}
    for pid, piv in enumerate(diagram.pivots):
        pivot_keys[(piv.hpos(), _pkey_static(track, piv.pstate(track)))] = pid

    nodes = []
    arc_node = {}
    assigned = set()

    def new_node(chain, closed, is_diag=False):
        cum = [0.0]
        for a in chain:
            cum.append(cum[-1] + _arc_xlen(track, a))
        node = Node(len(nodes), chain, closed, is_diag, cum)
        for ci, a in enumerate(chain):
            arc_node[id(a)] = (node.idx, ci)
        nodes.append(node)
        return node

    # the main diagonal as a single closed node
    diag_cycle = diagram.main_diagonal
    diag_chain = [a for a in diag_cycle.arcs]
    dnode = new_node(diag_chain, closed=True, is_diag=True)
    for a in diag_chain:
        assigned.add(id(a))

    for arc in stable:
        if id(arc) in assigned:
            continue
        # walk back to the chain head (a pivot or a closed loop)
        head = arc
        seen = {id(arc)}
        while True:
            k0, _ = _stable_endpoint_keys(track, head)
            if k0 in pivot_keys:
                break
            prev = ends.get(k0)
            if prev is None:
                raise PuppyError("stable chain end is neither pivot nor junction")
            if id(prev) in seen:
                head = arc  # closed all-stable cycle
                break
            head = prev
            seen.add(id(head))
        closed = False
        k0, _ = _stable_endpoint_keys(track, head)
        if k0 not in pivot_keys and ends.get(k0) is not None:
            closed = True
        chain = [head]
        assigned.add(id(head))
        cur = head
        while True:
            _, k1 = _stable_endpoint_keys(track, cur)
            if k1 in pivot_keys:
                break
            nxt = starts.get(k1)
            if nxt is None:
                raise PuppyError("stable chain end is neither pivot nor junction")
            if id(nxt) in assigned:
                break  # wrapped (closed)
            chain.append(nxt)
            assigned.add(id(nxt))
            cur = nxt
        node = new_node(chain, closed)
        if not closed:
            hk, _ = _stable_endpoint_keys(track, chain[0])
            _, tk = _stable_endpoint_keys(track, chain[-1])
            node.pivot_start = pivot_keys.get(hk)
            node.pivot_end = pivot_keys.get(tk)

    # endpoint position index for run-landing lookups
    endpoint_pos = {}
    for node in nodes:
        for ci, a in enumerate(node.arcs):
            k0, k1 = _stable_endpoint_keys(track, a) if not isinstance(a, DiagVert) else _stable_endpoint_keys(track, a)
            endpoint_pos.setdefault(k0, (node.idx, node.cum[ci]))
            endpoint_pos.setdefault(k1, (node.idx, node.cum[ci + 1]))

    graph = StrategyGraph(
        diagram=diagram,
        nodes=nodes,
        edges=[],
        out_edges={},
        arc_node=arc_node,
        endpoint_pos=endpoint_pos,
    )

    for pid, piv in enumerate(diagram.pivots):
        h = piv.hpos()
        p = piv.pstate(track)
        src = None
        key = (h, _pkey_static(track, p))
        loc = endpoint_pos.get(key)
        if loc is None:
            raise PuppyError(f"pivot {pid} is not an endpoint of any stable node")
        src = loc[0]
        run = puppy_run_exact(track, h, p)
        if run.captured:
            edge = GraphEdge(len(graph.edges), src, pid, run, None, None)
        else:
            dst, pos = locate_stable(graph, h, run.end_p)
            edge = GraphEdge(len(graph.edges), src, pid, run, dst, pos)
        graph.edges.append(edge)
        graph.out_edges.setdefault(src, []).append(edge.idx)
    return graph


def locate_stable(graph: StrategyGraph, h: HPos, p: PState):
    """(node id, cumulative position) of an exact stable configuration."""
    track = graph.diagram.track
    key = (track.canon_h(h), _pkey_static(track, p))
    hit = graph.endpoint_pos.get(key)
    if hit is not None:
        return hit
    p = track.canon_p(p)
    if isinstance(p, PEdge):
        cands = [
            a
            for a in graph.diagram.edge_arcs
            if a.i == p.i and a.j == h.j and a.f0 <= h.f <= a.f1
        ]
        for a in cands:
            if a.t_at(h.f) == p.t:
                nid, ci = graph.arc_node[id(a)]
                node = graph.nodes[nid]
                off = abs(float(h.f - a.f0)) * track.edge_lengths[a.j]
                return nid, node.cum[ci] + off
    else:
        cands = [
            a
            for a in graph.diagram.vert_arcs
            if a.kind == "stable" and a.k == p.i and a.j == h.j and a.f0 <= h.f <= a.f1
        ]
        for a in cands:
            w = a.w_at(track, h.f)
            if cross(w, p.w) == 0 and dot(w, p.w) > 0:
                nid, ci = graph.arc_node[id(a)]
                node = graph.nodes[nid]
                off = abs(float(h.f - a.f0)) * track.edge_lengths[a.j]
                return nid, node.cum[ci] + off
    raise PuppyError(f"stable configuration not on any node: h={h} p={p}")


# -- strategies ---------------------------------------------------------------


@dataclass
class StableWalk:
    node: int
    from_x: float
    to_x: float
    direction: str  # "ccw" | "cw"
    distance: float


@dataclass
class PivotDrop:
    pivot: int
    run: RunTrace


@dataclass
class Strategy:
    start: Configuration
    initial_run: Optional[RunTrace]
    steps: list
    handedness: str  # "dexter" | "sinister" | "trivial"
    predicted_walk: float
    pivot_count: int  # k of the diagram, for the walk bound

    def capture_run(self) -> Optional[RunTrace]:
        for st in reversed(self.steps):
            if isinstance(st, PivotDrop):
                return st.run
        return self.initial_run


HAND_OF_PIVOT = {"backward": "dexter", "forward": "sinister"}


def find_strategy(
    track: Track,
    diagram: AttractionDiagram,
    graph: StrategyGraph,
    start: Configuration,
    want: str = "any",
    unstable_sense: int = 1,
) -> Strategy:
    """Hop-count-shortest catching strategy from `start`.

    want: "any" | "dexter" | "sinister".  Raises NoSuchHandedStrategy when
    only the other handedness exists at this start, DiagramPrecondition when
    the diagram has more than two essential cycles and no strategy is found.
    """
    if want not in ("any", "dexter", "sinister"):
        raise ValueError(f"bad handedness {want!r}")
    h = track.human_pos(start.x.s)
    p = track.puppy_state(start.y)
    kcount = len(diagram.pivots)
    tag = track.classify_exact(h, p)
    initial = None
    if tag is Tag.FINAL:
        return Strategy(start, None, [], "trivial", 0.0, kcount)
    if tag is Tag.STABLE:
        nid, pos = locate_stable(graph, h, p)
    else:
        initial = puppy_run_exact(track, h, p, unstable_sense)
        if initial.captured:
            hand = HAND_OF_PIVOT["backward" if initial.direction == "backward" else "forward"]
            if want not in ("any", hand):
                raise NoSuchHandedStrategy(
                    f"forced initial run captures with {hand} approach"
                )
            return Strategy(start, initial, [], hand, 0.0, kcount)
        nid, pos = locate_stable(graph, h, initial.end_p)

    # BFS over nodes; a target is an edge whose run captured (filtered by hand)
    def hand_ok(edge):
        return want == "any" or HAND_OF_PIVOT[diagram.pivots[edge.pivot].direction] == want

    parent = {nid: None}  # node -> (prev node, edge id)
    order = deque([nid])
    target = None
    while order:
        cur = order.popleft()
        for eid in graph.out_edges.get(cur, []):
            edge = graph.edges[eid]
            if edge.dst is None:
                if hand_ok(edge):
                    target = (cur, eid)
                    order.clear()
                    break
                continue
            if edge.dst not in parent:
                parent[edge.dst] = (cur, eid)
                order.append(edge.dst)
    if target is None:
        if diagram.essential_count > 2:
            raise DiagramPrecondition(
                f"{diagram.essential_count} essential cycles: capture search failed"
            )
        raise NoSuchHandedStrategy(f"no {want} strategy from this start")

    # reconstruct edge sequence
    seq = []
    cur = target[0]
    seq.append(target[1])
    while parent[cur] is not None:
        prev, eid = parent[cur]
        seq.append(eid)
        cur = prev
    seq.reverse()

    steps = []
    walk = 0.0
    cur_node, cur_pos = nid, pos
    for eid in seq:
        edge = graph.edges[eid]
        piv = diagram.pivots[edge.pivot]
        node = graph.nodes[cur_node]
        if graph.nodes[edge.src].idx != cur_node:
            raise PuppyError("strategy reconstruction left the expected node")
        piv_pos = node.cum[0] if node.pivot_start == edge.pivot else node.cum[-1]
        dist = abs(piv_pos - cur_pos)
        steps.append(
            StableWalk(
                node=cur_node,
                from_x=cur_pos,
                to_x=piv_pos,
                direction="ccw" if piv_pos >= cur_pos else "cw",
                distance=dist,
            )
        )
        walk += dist
        steps.append(PivotDrop(pivot=edge.pivot, run=edge.run))
        if edge.dst is None:
            cur_node, cur_pos = None, None
        else:
            cur_node, cur_pos = edge.dst, edge.dst_pos
    hand = HAND_OF_PIVOT[diagram.pivots[graph.edges[seq[-1]].pivot].direction]
    return Strategy(start, initial, steps, hand, walk, kcount)


def compile_script(track: Track, strategy: Strategy) -> HumanScript:
    """Strategy -> replayable human script.  Each walk leg slightly overshoots
    its pivot so that event boundaries always fire under float leg budgets."""
    delta = 1e-9 * track.perimeter
    moves = []
    for st in strategy.steps:
        if isinstance(st, StableWalk) and st.distance > 0:
            moves.append((st.direction, st.distance + delta))
    return HumanScript(
        start_x=strategy.start.x.s,
        start_y_kind=strategy.start.y.kind,
        start_y_index=strategy.start.y.index,
        start_y_t=strategy.start.y.t,
        moves=moves,
    )


def verify_strategy(track: Track, start: Configuration, strategy: Strategy) -> dict:
    """Compile to a script, simulate, check capture and the walk bound."""
    script = compile_script(track, strategy)
    trace = simulate(track, script)
    if not trace.captured:
        raise VerificationFailed(
            f"strategy did not capture (walked {trace.total_human_walk:.6g})"
        )
    bound = track.perimeter * strategy.pivot_count / 2.0
    slack = 1e-6 * max(1.0, track.perimeter)
    return {
        "captured": True,
        "walk": trace.total_human_walk,
        "predicted_walk": strategy.predicted_walk,
        "pivot_count": strategy.pivot_count,
        "bound": bound,
        "bound_ok": strategy.pivot_count == 0
        and trace.total_human_walk <= slack
        or trace.total_human_walk <= bound + slack,
        "handedness": strategy.handedness,
    }


# -- dexter / sinister regions --------------------------------------------------


@dataclass
class Trapezoid:
    slab: int
    gap: int
    tag: Tag
    node: int
    dexter: bool
    sinister: bool
    lo_key: tuple
    hi_key: tuple


@dataclass
class RegionMap:
    trapezoids: list
    slab_breaks: list  # cyclic x breakpoints as (col, Fraction)
    node_dexter: set
    node_sinister: set


def _node_flags(graph: StrategyGraph):
    """Nodes from which a dexter / sinister capture is reachable."""
    rev = {}
    dex_seed, sin_seed = set(), set()
    for e in graph.edges:
        if e.dst is None:
            hand = HAND_OF_PIVOT[graph.diagram.pivots[e.pivot].direction]
            (dex_seed if hand == "dexter" else sin_seed).add(e.src)
        else:
            rev.setdefault(e.dst, set()).add(e.src)
    diag = next(n.idx for n in graph.nodes if n.is_diagonal)

    def closure(seed):
        out = set(seed)
        out.add(diag)
        work = deque(out)
        while work:
            cur = work.popleft()
            for prev in rev.get(cur, ()):
                if prev not in out:
                    out.add(prev)
                    work.append(prev)
        return out

    return closure(dex_seed), closure(sin_seed)


def _generic_slab_sample(diagram, s_lo, s_hi, attempts=32):
    """A generic human position strictly between arc endpoints inside the
    cyclic arc-length interval (s_lo, s_hi)."""
    track = diagram.track
    per = track.perimeter
    span = (s_hi - s_lo) % per
    if span == 0:
        span = per
    for a in range(attempts):
        frac = (2 * a + 1) / (2 * attempts)
        s = (s_lo + span * frac) % per
        h0 = track.human_pos(s)
        h = HPos(h0.j, Fraction(round(h0.f * (1 << 24)), 1 << 24))
        if h.f == 0 or h.f == 1:
            continue
        crit = criticals_in_column(diagram, h.j, h.f)
        keys = [c.ykey for c in crit]
        if len(set(keys)) != len(keys):
            continue
        bad = False
        for arc in diagram.edge_arcs + diagram.vert_arcs:
            if arc.j == h.j and (arc.f0 == h.f or arc.f1 == h.f):
                bad = True
                break
        if not bad:
            return h, crit
    raise PuppyError("no generic slab sample found")


def compute_regions(diagram: AttractionDiagram, graph: StrategyGraph) -> RegionMap:
    """Per-trapezoid dexter/sinister labeling with the structural checks:
    coverage, connectivity of each region, sampled single-interval property,
    and river containment."""
    track = diagram.track
    node_dex, node_sin = _node_flags(graph)
    arcnode = graph.arc_node

    # slab breakpoints: distinct pivot x positions, cyclically sorted
    breaks = sorted({(p.hj, p.hf) for p in diagram.pivots})
    if not breaks:
        breaks = [(0, Fraction(1, 2))]
    break_s = [track.human_s(HPos(j, f)) for (j, f) in breaks]

    slabs = []
    for a in range(len(breaks)):
        s_lo = break_s[a]
        s_hi = break_s[(a + 1) % len(breaks)]
        h, crit = _generic_slab_sample(diagram, s_lo, s_hi)
        slabs.append((h, crit))

    traps = []
    slab_traps = []
    for si, (h, crit) in enumerate(slabs):
        gaps = []
        for g in range(len(crit)):
            below = crit[g]
            above = crit[(g + 1) % len(crit)]
            tag = implied_tag_between(below, above)
            sigma = above if tag is Tag.FORWARD else below
            if sigma.kind == "unstable":
                raise PuppyError("region's resting boundary is unstable")
            nid, _ = arcnode[id(sigma.arc)]
            tz = Trapezoid(
                slab=si,
                gap=g,
                tag=tag,
                node=nid,
                dexter=nid in node_dex,
                sinister=nid in node_sin,
                lo_key=below.ykey,
                hi_key=above.ykey,
            )
            gaps.append(tz)
            traps.append(tz)
        slab_traps.append(gaps)

    for tz in traps:
        if not (tz.dexter or tz.sinister):
            raise CoverageGap((tz.slab, tz.gap, tz.tag.value))

    _check_connected(diagram, slab_traps, "dexter")
    _check_connected(diagram, slab_traps, "sinister")
    _check_river(diagram, graph, node_dex, node_sin)
    _check_monotone(diagram, slab_traps)
    return RegionMap(traps, breaks, node_dex, node_sin)


def _gap_contains(lo, hi, key):
    """Cyclic-open interval membership for sortable y keys."""
    if lo < hi:
        return lo < key < hi
    return key > lo or key < hi


def _check_connected(diagram, slab_traps, which):
    flag = (lambda t: t.dexter) if which == "dexter" else (lambda t: t.sinister)
    pieces = [t for gaps in slab_traps for t in gaps if flag(t)]
    if not pieces:
        raise PuppyError(f"{which} region is empty")
    index = {(t.slab, t.gap): t for gaps in slab_traps for t in gaps}
    ids = {id(t): n for n, t in enumerate(pieces)}
    parent = list(range(len(pieces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    nslab = len(slab_traps)
    for si, gaps in enumerate(slab_traps):
        m = len(gaps)
        for g, t in enumerate(gaps):
            if not flag(t):
                continue
            up = gaps[(g + 1) % m]
            if flag(up):
                union(ids[id(t)], ids[id(up)])
            # horizontal neighbors: overlap of cyclic gap intervals
            for t2 in slab_traps[(si + 1) % nslab]:
                if not flag(t2):
                    continue
                if (
                    _gap_contains(t.lo_key, t.hi_key, t2.lo_key)
                    or _gap_contains(t2.lo_key, t2.hi_key, t.lo_key)
                    or t.lo_key == t2.lo_key
                ):
                    union(ids[id(t)], ids[id(t2)])
    roots = {find(n) for n in range(len(pieces))}
    if len(roots) != 1:
        raise PuppyError(f"{which} region is disconnected ({len(roots)} parts)")


def _check_river(diagram, graph, node_dex, node_sin):
    if diagram.river is None:
        return
    for arc in diagram.river.arcs:
        if getattr(arc, "kind", None) == "stable":
            nid, _ = graph.arc_node[id(arc)]
            if nid not in node_dex or nid not in node_sin:
                raise PuppyError("river arc not contained in both regions")


def _check_monotone(diagram, slab_traps, samples=256):
    """Sampled single-interval property of the dexter set per x (and of the
    sinister set, by symmetry of the construction)."""
    for gaps in slab_traps:
        m = len(gaps)
        for which in ("dexter", "sinister"):
            flag = (lambda t: t.dexter) if which == "dexter" else (lambda t: t.sinister)
            flags = [flag(t) for t in gaps]
            if all(flags):
                continue
            runs = 0
            for g in range(m):
                if flags[g] and not flags[(g - 1) % m]:
                    runs += 1
            if runs != 1:
                raise PuppyError(
                    f"{which} set is not a single interval in slab"
                )


# -- orthogonal special case -----------------------------------------------------


def orthogonal_strategy(track: Track, start: Configuration) -> HumanScript:
    """Two-phase counterclockwise script for axis-parallel polygons: to the
    leftmost-topmost vertex, then one more turn to the previous vertex."""
    for e in track.E:
        if e.x != 0 and e.y != 0:
            raise NotOrthogonal("track has a non-axis-parallel edge")
    n = track.n
    u1 = max(range(n), key=lambda i: (track.vertices[i].y, -track.vertices[i].x))
    u2 = (u1 - 1) % n
    v1, v2 = track.vertices[u1], track.vertices[u2]
    if v1.y != v2.y or not v2.x > v1.x:
        raise PuppyError("topmost edge has unexpected orientation")
    per = track.perimeter
    s1 = track.cum_s[u1]
    s_start = start.x.s % per
    d1 = (s1 - s_start) % per
    d2 = (track.cum_s[u2] - s1) % per
    delta = 1e-9 * per
    moves = []
    if d1 > 0:
        moves.append(("ccw", d1 + delta))
    moves.append(("ccw", d2 + delta))
    return HumanScript(
        start_x=start.x.s,
        start_y_kind=start.y.kind,
        start_y_index=start.y.index,
        start_y_t=start.y.t,
        moves=moves,
    )


# -- conjecture lab ---------------------------------------------------------------


@dataclass
class DirectionalOutcome:
    captured: bool
    walk: float
    laps_completed: float
    periodic: bool
    period_signature: Optional[tuple]


def evaluate_directional(
    track: Track, start: Configuration, dirn: str, max_laps: int = 5
) -> DirectionalOutcome:
    """Single-direction walking with per-lap event-signature period detection:
    two identical consecutive lap signatures prove the pursuit never ends."""
    h = track.human_pos(start.x.s)
    p = track.puppy_state(start.y)
    sim = Sim(track, h, p, collect=False)
    sim.resolve_start()
    if sim.trace.captured:
        return DirectionalOutcome(True, 0.0, 0.0, False, None)
    # walk to the first column boundary, then whole columns per lap
    sim.advance_to_column_end(dirn)
    if sim.trace.captured:
        return DirectionalOutcome(True, sim.trace.total_human_walk, 0.0, False, None)
    prev_sig = None
    from .dynamics import _pstate_key

    for lap in range(max_laps):
        mark = len(sim.event_keys)
        for _ in range(track.n):
            sim.advance_to_column_end(dirn)
            if sim.trace.captured:
                return DirectionalOutcome(
                    True, sim.trace.total_human_walk, lap + 1, False, None
                )
        sig = (tuple(sim.event_keys[mark:]), _pstate_key(track, sim.p))
        if prev_sig is not None and sig == prev_sig:
            return DirectionalOutcome(
                False, sim.trace.total_human_walk, lap + 1, True, sig
            )
        prev_sig = sig
    return DirectionalOutcome(False, sim.trace.total_human_walk, max_laps, False, prev_sig)


@dataclass
class ObliviousOutcome:
    captured: bool
    walk: float
    phase: Optional[str]  # "first" | "second" when captured


def evaluate_oblivious(track: Track, start: Configuration) -> ObliviousOutcome:
    """The fixed two-phase script: twice around one way, twice around back."""
    per = track.perimeter
    delta = 1e-9 * per
    script = HumanScript(
        start_x=start.x.s,
        start_y_kind=start.y.kind,
        start_y_index=start.y.index,
        start_y_t=start.y.t,
        moves=[("ccw", 2 * per + delta), ("cw", 2 * per + delta)],
    )
    trace = simulate(track, script, collect=False)
    phase = None
    if trace.captured:
        phase = "first" if trace.total_human_walk <= 2 * per + delta else "second"
    return ObliviousOutcome(trace.captured, trace.total_human_walk, phase)


# -- export -----------------------------------------------------------------------


def strategy_to_json(track: Track, strategy: Strategy) -> dict:
    steps = []
    for st in strategy.steps:
        if isinstance(st, StableWalk):
            steps.append(
                {
                    "type": "walk",
                    "node": st.node,
                    "from_x": st.from_x,
                    "to_x": st.to_x,
                    "direction": st.direction,
                    "distance": st.distance,
                }
            )
        else:
            steps.append(
                {
                    "type": "pivot-drop",
                    "pivot": st.pivot,
                    "run_direction": st.run.direction,
                    "captured": st.run.captured,
                    "path": st.run.path,
                }
            )
    return {
        "start": {
            "x": strategy.start.x.s,
            "y": {
                "feature": strategy.start.y.kind,
                "index": strategy.start.y.index,
                "t": strategy.start.y.t,
            },
        },
        "handedness": strategy.handedness,
        "predicted_walk": strategy.predicted_walk,
        "pivot_count": strategy.pivot_count,
        "initial_run": None
        if strategy.initial_run is None
        else {
            "direction": strategy.initial_run.direction,
            "captured": strategy.initial_run.captured,
        },
        "steps": steps,
    }
