"""Attraction diagram construction over the 2n x n cell grid.

Critical configurations are organized per cell: edge-edge cells carry at most
one stable segment (the foot-of-perpendicular locus, linear in the human
fraction), vertex-edge cells carry at most one stable and one unstable branch
of the perpendicularity condition.  Arcs are stored with exact rational
endpoints; cycle assembly matches endpoint configurations exactly, so the
combinatorial structure never depends on rounding.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geom import V2, cross, dot, perp, primitive, sign, solve_linear, vlen
from .track import HPos, PEdge, PState, PuppyError, PVert, Tag, Track


class DegenerateInput(PuppyError):
    def __init__(self, witnesses):
        self.witnesses = witnesses
        super().__init__(
            "forbidden degeneracies present: "
            + "; ".join(d.describe() for d in witnesses)
        )


class NonGenericTestLine(PuppyError):
    pass


@dataclass(frozen=True)
class Degeneracy:
    dtype: str  # "type1" | "type2a" | "type2b" | "type3a" | "type3b"
    vertex: int  # puppy vertex of the degenerate pivot
    anchor_edge: int  # edge whose perpendicular line is involved
    partner: Optional[int] = None  # other vertex (type2) or edge (type3)
    detail: str = ""

    def forbidden(self):
        return self.dtype in ("type1", "type2a", "type3a")

    def describe(self):
        extra = f" partner={self.partner}" if self.partner is not None else ""
        return f"{self.dtype} at vertex {self.vertex} (edge {self.anchor_edge}{extra})"


@dataclass(frozen=True)
class EdgeArc:
    """Critical segment in cell (Edge(i), column j); kind 'final' on i == j."""

    i: int
    j: int
    f0: Fraction
    f1: Fraction
    t0: Fraction
    t1: Fraction
    kind: str  # "stable" | "final"

    def t_at(self, f):
        if self.f1 == self.f0:
            return self.t0
        return self.t0 + (self.t1 - self.t0) * (f - self.f0) / (self.f1 - self.f0)

    def row(self):
        return 2 * self.i + 1


@dataclass(frozen=True)
class VertArc:
    """Critical branch in cell (Vertex(k), column j): w(f) = sigma*perp(u(f))."""

    k: int
    j: int
    f0: Fraction
    f1: Fraction
    sigma: int
    kind: str  # "stable" | "unstable"

    def w_at(self, track, f):
        u = track.vertices[self.j] + track.E[self.j].scale(f) - track.vertices[self.k]
        w = perp(u)
        return w if self.sigma > 0 else -w

    def row(self):
        return 2 * self.k


@dataclass(frozen=True)
class DiagVert:
    """Vertical final segment: human at vertex i, puppy turning at vertex i."""

    i: int

    def row(self):
        return 2 * self.i


@dataclass(frozen=True)
class Pivot:
    k: int  # puppy vertex
    side: str  # "start" (dir along E_{k-1}) | "end" (dir along E_k)
    hj: int
    hf: Fraction
    direction: str  # "forward" | "backward"

    def pstate(self, track) -> PState:
        w = track.E[self.k - 1] if self.side == "start" else track.E[self.k]
        return track.canon_p(PVert(self.k, w))

    def hpos(self) -> HPos:
        return HPos(self.hj, self.hf)


@dataclass
class Cycle:
    arcs: list  # arc objects in cyclic order
    is_diagonal: bool = False
    essential: Optional[bool] = None
    crossings_alpha: int = 0
    crossings_beta: int = 0


@dataclass
class AttractionDiagram:
    track: Track
    edge_arcs: list = field(default_factory=list)
    vert_arcs: list = field(default_factory=list)
    diag_verts: list = field(default_factory=list)
    pivots: list = field(default_factory=list)
    degeneracies: list = field(default_factory=list)  # tolerated 2b/3b records
    cycles: list = field(default_factory=list)
    main_diagonal: Optional[Cycle] = None
    river: Optional[Cycle] = None

    @property
    def essential_count(self):
        return sum(1 for c in self.cycles if c.essential)

    def all_arcs(self):
        return list(self.edge_arcs) + list(self.vert_arcs) + list(self.diag_verts)

    def pivot_at(self, h: HPos, p: PState):
        key = (h, _pkey_static(self.track, p))
        return self._pivot_index.get(key)

    def stable_arcs(self):
        return [a for a in self.edge_arcs if a.kind == "stable"] + [
            a for a in self.vert_arcs if a.kind == "stable"
        ]


def _pkey_static(track, p: PState):
    p = track.canon_p(p)
    if isinstance(p, PEdge):
        return ("e", p.i, p.t)
    return ("v", p.i, primitive(p.w))


# -- degeneracy detection -----------------------------------------------------


def detect_degeneracies(track: Track):
    """Exhaustive exact scan for the five degenerate pivot patterns."""
    out = []
    n = track.n
    V, E = track.vertices, track.E
    for k in range(n):
        if dot(E[k - 1], E[k]) < 0:
            out.append(Degeneracy("type1", k, k, detail="sharp corner"))
    for m in range(n):
        for side in ("start", "end"):
            w_idx = m if side == "start" else (m + 1) % n
            wpt = V[w_idx]
            neighbor = V[m - 1] if side == "start" else V[(m + 2) % n]
            nb_side = sign(cross(E[m], neighbor - V[m]))
            edge_side = 1 if side == "start" else -1  # sign of dot(q-wpt, E_m) on e_m
            # type 2: another vertex exactly on the perpendicular line
            for j in range(n):
                if j == m or j == (m + 1) % n or V[j] == wpt:
                    continue
                if dot(V[j] - wpt, E[m]) != 0:
                    continue
                if nb_side == 0 or sign(cross(E[m], V[j] - V[m])) != nb_side:
                    continue
                s_prev = sign(dot(V[j - 1] - wpt, E[m]))
                s_next = sign(dot(V[(j + 1) % n] - wpt, E[m]))
                if s_prev == 0 or s_prev != s_next:
                    continue
                dtype = "type2a" if s_prev == edge_side else "type2b"
                out.append(Degeneracy(dtype, w_idx, m, partner=j))
            # type 3: another edge lying inside the perpendicular line
            for j in range(n):
                if j == m:
                    continue
                a, b = V[j], V[(j + 1) % n]
                if dot(a - wpt, E[m]) != 0 or dot(b - wpt, E[m]) != 0:
                    continue
                sides = {sign(cross(E[m], a - V[m])), sign(cross(E[m], b - V[m]))}
                sides.discard(0)
                if len(sides) != 1 or nb_side == 0 or sides.pop() != nb_side:
                    continue
                attached = False
                for endpoint, beyond in ((a, V[j - 1]), (b, V[(j + 2) % n])):
                    if endpoint == wpt:
                        attached = True  # touches the main diagonal
                        continue
                    if sign(dot(beyond - wpt, E[m])) == edge_side:
                        attached = True
                dtype = "type3a" if attached else "type3b"
                out.append(Degeneracy(dtype, w_idx, m, partner=j))
    return out


# -- arc extraction -----------------------------------------------------------


def _interval_and(lo1, hi1, lo2, hi2):
    return max(lo1, lo2), min(hi1, hi2)


def _halfline_interval(a, b):
    """f-interval of [0,1] where a + b*f >= 0; None for the identically-zero
    (boundary-riding) case."""
    if b == 0:
        if a > 0:
            return Fraction(0), Fraction(1)
        if a < 0:
            return Fraction(1), Fraction(0)  # empty
        return None
    r = -a / b
    if b > 0:
        return max(Fraction(0), r), Fraction(1)
    return Fraction(0), min(Fraction(1), r)


def _extract_edge_arcs(track: Track):
    arcs = []
    riding = []
    n = track.n
    V, E = track.vertices, track.E
    for i in range(n):
        c = track.len2[i]
        for j in range(n):
            a = dot(V[j] - V[i], E[i])
            b = dot(E[j], E[i])
            if i == j:
                arcs.append(
                    EdgeArc(i, j, Fraction(0), Fraction(1), Fraction(0), Fraction(1), "final")
                )
                continue
            if b == 0:
                t = a / c
                if t == 0 or t == 1:
                    riding.append((i, j))
                    continue
                if 0 < t < 1:
                    arcs.append(EdgeArc(i, j, Fraction(0), Fraction(1), t, t, "stable"))
                continue
            r0 = -a / b
            r1 = (c - a) / b
            lo, hi = min(r0, r1), max(r0, r1)
            f0, f1 = max(lo, Fraction(0)), min(hi, Fraction(1))
            if f0 >= f1:
                continue
            t0 = (a + b * f0) / c
            t1 = (a + b * f1) / c
            arcs.append(EdgeArc(i, j, f0, f1, t0, t1, "stable"))
    return arcs, riding


def _extract_vert_arcs(track: Track):
    arcs = []
    riding = []
    n = track.n
    V, E = track.vertices, track.E
    for k in range(n):
        s = track.turn_sign[k]
        A, B = E[k - 1], E[k]
        for j in range(n):
            u0 = V[j] - V[k]
            aA, bA = dot(A, u0), dot(A, E[j])
            aB, bB = dot(B, u0), dot(B, E[j])
            for sigma, kind in ((s, "stable"), (-s, "unstable")):
                # in-sweep conditions reduce to sign conditions on dot(A,u), dot(B,u)
                qA = 1 if sigma == s else -1  # want qA * dot(A, u) >= 0
                qB = -qA  # want qB * dot(B, u) >= 0
                ivA = _halfline_interval(qA * aA, qA * bA)
                ivB = _halfline_interval(qB * aB, qB * bB)
                if ivA is None or ivB is None:
                    # branch rides a sweep boundary: degenerate pivot segment
                    if (ivA is None and (aB != 0 or bB != 0)) or (
                        ivB is None and (aA != 0 or bA != 0)
                    ):
                        riding.append((k, j, kind))
                    continue
                f0, f1 = _interval_and(*ivA, *ivB)
                if f0 >= f1:
                    continue
                # exclude a final corner (u == 0) sitting at an interval end
                arcs.append(VertArc(k, j, f0, f1, sigma, kind))
    return arcs, riding


def _extract_pivots(track: Track):
    pivots = []
    seen = set()
    n = track.n
    V, E = track.vertices, track.E
    for k in range(n):
        s = track.turn_sign[k]
        for side, W in (("start", E[k - 1]), ("end", E[k])):
            direction = "forward" if side == "start" else "backward"
            for j in range(n):
                a = dot(V[j] - V[k], W)
                b = dot(E[j], W)
                f = solve_linear(a, b)
                if f is None or not (0 <= f <= 1):
                    continue
                h = track.canon_h(HPos(j, f))
                u = track.point_at(h) - V[k]
                if u.is_zero():
                    continue  # final corner, part of the main diagonal
                if s * sign(cross(W, u)) <= 0:
                    continue  # stable junction, not a pivot
                key = (k, side, h)
                if key in seen:
                    continue
                seen.add(key)
                pivots.append(Pivot(k, side, h.j, h.f, direction))
    return pivots


# -- assembly -----------------------------------------------------------------


def _arc_endpoints(track: Track, arc):
    """Canonical endpoint configurations (pairs of hashable keys)."""
    if isinstance(arc, EdgeArc):
        e0 = (track.canon_h(HPos(arc.j, arc.f0)), _pkey_static(track, PEdge(arc.i, arc.t0)))
        e1 = (track.canon_h(HPos(arc.j, arc.f1)), _pkey_static(track, PEdge(arc.i, arc.t1)))
        return e0, e1
    if isinstance(arc, VertArc):
        w0 = arc.w_at(track, arc.f0)
        w1 = arc.w_at(track, arc.f1)
        e0 = (track.canon_h(HPos(arc.j, arc.f0)), _pkey_static(track, PVert(arc.k, w0)))
        e1 = (track.canon_h(HPos(arc.j, arc.f1)), _pkey_static(track, PVert(arc.k, w1)))
        return e0, e1
    # DiagVert
    i = arc.i
    h = HPos(i, Fraction(0))
    e0 = (h, _pkey_static(track, PVert(i, track.E[i - 1])))
    e1 = (h, _pkey_static(track, PVert(i, track.E[i])))
    return e0, e1


def _assemble_cycles(track: Track, arcs):
    adj = {}
    ends = {}
    for idx, arc in enumerate(arcs):
        e0, e1 = _arc_endpoints(track, arc)
        ends[idx] = (e0, e1)
        adj.setdefault(e0, []).append(idx)
        adj.setdefault(e1, []).append(idx)
    bad = {k: v for k, v in adj.items() if len(v) != 2}
    if bad:
        sample = next(iter(bad.items()))
        raise PuppyError(
            f"arc endpoint degree != 2 during assembly ({len(bad)} nodes; "
            f"example {sample})"
        )
    cycles = []
    visited = set()
    for start in range(len(arcs)):
        if start in visited:
            continue
        chain = [start]
        visited.add(start)
        node = ends[start][1]
        cur = start
        while True:
            nxt = [a for a in adj[node] if a != cur]
            if not nxt:
                raise PuppyError("open chain in attraction diagram")
            cur = nxt[0]
            if cur == start:
                break
            if cur in visited:
                raise PuppyError("cycle walk revisited an arc")
            visited.add(cur)
            chain.append(cur)
            a, b = ends[cur]
            node = b if a == node else a
        cycles.append(Cycle(arcs=[arcs[i] for i in chain]))
    return cycles


# -- crossing parities --------------------------------------------------------


def _test_fraction(k: int) -> Fraction:
    num = (1597 + 2584 * k) % 4096
    return Fraction(2 * num + 1, 8192)


def _alpha_crossings(cycle: Cycle, row_edge: int, tstar: Fraction) -> int:
    """Transversal crossings with the horizontal circle through row
    Edge(row_edge) at puppy fraction tstar."""
    count = 0
    for arc in cycle.arcs:
        if isinstance(arc, EdgeArc) and arc.i == row_edge:
            s0 = sign(arc.t0 - tstar)
            s1 = sign(arc.t1 - tstar)
            if s0 == 0 or s1 == 0:
                raise NonGenericTestLine("arc endpoint on alpha line")
            if s0 * s1 < 0:
                count += 1
    return count


def _beta_crossings(track, cycle: Cycle, col: int, fstar: Fraction) -> int:
    count = 0
    for arc in cycle.arcs:
        if isinstance(arc, DiagVert):
            continue
        if arc.j != col:
            continue
        if arc.f0 == fstar or arc.f1 == fstar:
            raise NonGenericTestLine("arc endpoint on beta line")
        if arc.f0 < fstar < arc.f1:
            count += 1
    return count


def classify_cycles(diagram: AttractionDiagram) -> AttractionDiagram:
    """Set essential flags by crossing parity with generic test cycles."""
    track = diagram.track
    n = track.n
    row_edge = max(range(n), key=lambda i: track.edge_lengths[i])
    col = max(range(n), key=lambda i: track.edge_lengths[i])
    last_err = None
    for attempt in range(32):
        tstar = _test_fraction(7 * attempt + 1)
        fstar = _test_fraction(7 * attempt + 3)
        try:
            total_alpha = 0
            for cyc in diagram.cycles:
                ca = _alpha_crossings(cyc, row_edge, tstar)
                cb = _beta_crossings(track, cyc, col, fstar)
                if ca % 2 != cb % 2:
                    raise PuppyError(
                        f"crossing parity mismatch: alpha={ca} beta={cb}"
                    )
                cyc.crossings_alpha = ca
                cyc.crossings_beta = cb
                cyc.essential = ca % 2 == 1
                total_alpha += ca
            if total_alpha % 2 != 0:
                raise PuppyError("odd total crossing count with alpha")
            return diagram
        except NonGenericTestLine as e:
            last_err = e
            continue
    raise NonGenericTestLine(f"no generic test line found in 32 attempts: {last_err}")


# -- diagram construction -----------------------------------------------------


def build_diagram(track: Track) -> AttractionDiagram:
    """Construct the attraction diagram.

    The track must be free of type 1, 2a and 3a degeneracies (chamfer first);
    type 2b / 3b are recorded and their isolated pivots excluded from the
    cycle structure.
    """
    degs = detect_degeneracies(track)
    forbidden = [d for d in degs if d.forbidden()]
    if forbidden:
        raise DegenerateInput(forbidden)
    edge_arcs, edge_riding = _extract_edge_arcs(track)
    vert_arcs, vert_riding = _extract_vert_arcs(track)
    diag_verts = [DiagVert(i) for i in range(track.n)]
    pivots = _extract_pivots(track)

    dia = AttractionDiagram(
        track=track,
        edge_arcs=edge_arcs,
        vert_arcs=vert_arcs,
        diag_verts=diag_verts,
        pivots=pivots,
        degeneracies=degs,
    )
    arcs = dia.all_arcs()
    dia.cycles = _assemble_cycles(track, arcs)
    classify_cycles(dia)

    # identify the diagonal and (for the 2-essential case) the river
    for cyc in dia.cycles:
        if any(isinstance(a, EdgeArc) and a.kind == "final" for a in cyc.arcs):
            cyc.is_diagonal = True
            dia.main_diagonal = cyc
    others = [c for c in dia.cycles if c.essential and not c.is_diagonal]
    if dia.main_diagonal is None or not dia.main_diagonal.essential:
        raise PuppyError("main diagonal missing or inessential")
    if len(others) == 1:
        dia.river = others[0]

    # index pivots by configuration for fast lookup
    dia._pivot_index = {}
    for idx, p in enumerate(dia.pivots):
        dia._pivot_index[(p.hpos(), _pkey_static(track, p.pstate(track)))] = idx
    return dia


# -- per-column critical slices ------------------------------------------------


@dataclass
class ColumnCritical:
    """A critical configuration in a fixed human column."""

    arc: object
    ykey: tuple  # sortable exact position in the extended parameter order
    kind: str

    def puppy_state(self, track, col_f):
        a = self.arc
        if isinstance(a, EdgeArc):
            return PEdge(a.i, a.t_at(col_f))
        return PVert(a.k, a.w_at(track, col_f))


def _vertex_order_key(track, k, w):
    """Sortable exact key for direction w within the sweep at vertex k.

    Uses the (monotone) tangent half-angle of the rotation from the sweep
    start; exact because it is a ratio of rational cross/dot products."""
    A = track.E[k - 1]
    c = cross(A, w) * track.turn_sign[k]
    d = dot(A, w)
    # rotation angle from A in (−pi, pi); within the sweep it is in [0, |turn|]
    # order by angle: compare via atan2-like exact ordering of (d, c), c >= 0
    if c == 0 and d > 0:
        return (0, Fraction(0))
    if c > 0 and d > 0:
        return (1, c / d)
    if c > 0 and d == 0:
        return (2, Fraction(0))
    if c > 0 and d < 0:
        return (3, -d / c)
    raise AssertionError("direction outside vertex sweep")


def criticals_in_column(diagram: AttractionDiagram, col: int, f: Fraction):
    """All critical configurations at human position (col, f), sorted by the
    puppy's extended parameter.  f must avoid arc endpoints (generic)."""
    track = diagram.track
    out = []
    for arc in diagram.edge_arcs:
        if arc.j != col:
            continue
        if not (arc.f0 <= f <= arc.f1):
            continue
        t = arc.t_at(f)
        out.append(ColumnCritical(arc, (2 * arc.i + 1, (0, t)), arc.kind))
    for arc in diagram.vert_arcs:
        if arc.j != col:
            continue
        if not (arc.f0 <= f <= arc.f1):
            continue
        w = arc.w_at(track, f)
        out.append(
            ColumnCritical(arc, (2 * arc.k, _vertex_order_key(track, arc.k, w)), arc.kind)
        )
    out.sort(key=lambda cc: cc.ykey)
    return out


def implied_tag_between(below: ColumnCritical, above: ColumnCritical) -> Tag:
    """Region classification implied by the bracketing critical kinds."""
    implied_from_below = {
        "stable": Tag.BACKWARD,
        "final": Tag.BACKWARD,
        "unstable": Tag.FORWARD,
    }[below.kind]
    implied_from_above = {
        "stable": Tag.FORWARD,
        "final": Tag.FORWARD,
        "unstable": Tag.BACKWARD,
    }[above.kind]
    if implied_from_below is not implied_from_above:
        raise PuppyError("inconsistent arc kinds bracket a region")
    return implied_from_below


# -- signed tangent distance and the dual diagram -------------------------------


def tangent_signed_distance(track: Track, h: HPos, p: PState) -> float:
    """Signed distance from the human to the puppy's directed tangent line
    (positive when the human is to the left)."""
    w = track.puppy_dir_vec(track.canon_p(p))
    rel = track.point_at(h) - track.puppy_point(p)
    return float(cross(w, rel)) / vlen(w)


def tangent_cross_exact(track: Track, h: HPos, p: PState) -> Fraction:
    """Exact numerator of the signed tangent distance (same sign)."""
    w = track.puppy_dir_vec(track.canon_p(p))
    rel = track.point_at(h) - track.puppy_point(p)
    return cross(w, rel)


@dataclass
class DualCycle:
    image: list  # [(y_ext float, ell float)] sample points
    essential: bool
    crossings: int


@dataclass
class DualDiagram:
    cycles: list

    @property
    def essential_count(self):
        return sum(1 for c in self.cycles if c.essential)


def _arc_samples(track, arc, m=17):
    pts = []
    for q in range(m + 1):
        f = arc.f0 + (arc.f1 - arc.f0) * Fraction(q, m)
        h = HPos(arc.j, f)
        if isinstance(arc, EdgeArc):
            p = PEdge(arc.i, arc.t_at(f))
        else:
            p = PVert(arc.k, arc.w_at(track, f))
        pts.append((h, p))
    return pts


def build_dual_diagram(track: Track, diagram: AttractionDiagram) -> DualDiagram:
    """Image of the critical set under (x, y) -> (y, signed tangent distance),
    with essentiality recomputed independently by crossing parity against a
    vertical line of the cylinder."""
    row_edge = max(range(track.n), key=lambda i: track.edge_lengths[i])
    last = None
    for attempt in range(32):
        tstar = _test_fraction(11 * attempt + 5)
        try:
            out = []
            for cyc in diagram.cycles:
                crossings = _alpha_crossings(cyc, row_edge, tstar)
                image = []
                for arc in cyc.arcs:
                    if isinstance(arc, DiagVert):
                        k = arc.i
                        h = HPos(k, Fraction(0))
                        for q in range(9):
                            t = q / 8.0
                            w = track.vertex_dir(k, t)
                            image.append(
                                (track.puppy_ext(PVert(k, w)), 0.0)
                            )
                        continue
                    for h, p in _arc_samples(track, arc):
                        image.append(
                            (
                                track.puppy_ext(p),
                                tangent_signed_distance(track, h, p),
                            )
                        )
                out.append(DualCycle(image=image, essential=crossings % 2 == 1, crossings=crossings))
            dual = DualDiagram(cycles=out)
            for cyc, dcyc in zip(diagram.cycles, dual.cycles):
                if cyc.essential != dcyc.essential:
                    raise PuppyError("dual essentiality disagrees with diagram")
            return dual
        except NonGenericTestLine as e:
            last = e
            continue
    raise NonGenericTestLine(f"no generic dual test line in 32 attempts: {last}")


# -- export --------------------------------------------------------------------


def _fr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def diagram_to_json(diagram: AttractionDiagram) -> dict:
    track = diagram.track
    arcs = []
    index = {}
    for arc in diagram.all_arcs():
        index[id(arc)] = len(arcs)
        if isinstance(arc, EdgeArc):
            arcs.append(
                {
                    "cell": {"row": ["edge", arc.i], "col": arc.j},
                    "kind": arc.kind,
                    "f": [_fr(arc.f0), _fr(arc.f1)],
                    "t": [_fr(arc.t0), _fr(arc.t1)],
                }
            )
        elif isinstance(arc, VertArc):
            w0 = arc.w_at(track, arc.f0)
            w1 = arc.w_at(track, arc.f1)
            arcs.append(
                {
                    "cell": {"row": ["vertex", arc.k], "col": arc.j},
                    "kind": arc.kind,
                    "f": [_fr(arc.f0), _fr(arc.f1)],
                    "w": [[_fr(w0.x), _fr(w0.y)], [_fr(w1.x), _fr(w1.y)]],
                }
            )
        else:
            arcs.append({"cell": {"row": ["vertex", arc.i], "col": arc.i}, "kind": "final-vertical"})
    return {
        "track": {"n": track.n, "name": track.name},
        "arcs": arcs,
        "pivots": [
            {
                "vertex": p.k,
                "side": p.side,
                "direction": p.direction,
                "h": {"col": p.hj, "f": _fr(p.hf)},
            }
            for p in diagram.pivots
        ],
        "cycles": [
            {
                "arcs": [index[id(a)] for a in c.arcs],
                "essential": bool(c.essential),
                "is_diagonal": c.is_diagonal,
                "crossings_alpha": c.crossings_alpha,
                "crossings_beta": c.crossings_beta,
            }
            for c in diagram.cycles
        ],
        "degeneracies": [
            {
                "dtype": d.dtype,
                "vertex": d.vertex,
                "anchor_edge": d.anchor_edge,
                "partner": d.partner,
            }
            for d in diagram.degeneracies
        ],
        "essential_count": diagram.essential_count,
    }
