"""Event-driven pursuit dynamics.

The puppy's instantaneous runs and the stable sliding that happens while the
human walks are both resolved exactly: event locations (arc ends, pivots,
feature boundaries) are roots of linear equations in rational arithmetic,
so the combinatorial course of a simulation never depends on rounding.
Distances (leg budgets, reported walk lengths) are floats.

`dense_oracle` is an independent check: a brute-force discretized greedy
descent that never consults the classifier or the event machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geom import cross, dot, perp, primitive, sign, solve_linear
from .track import (
    Configuration,
    HPos,
    HumanParam,
    PEdge,
    PState,
    PuppyError,
    PuppyParam,
    PVert,
    Tag,
    Track,
)


class NoStablePoint(PuppyError):
    """Internal guard: a run or slide failed to terminate."""


class ArcEnded(PuppyError):
    """Stable slide reached a pivot; the caller must run the puppy."""


def same_dir(a, b) -> bool:
    return cross(a, b) == 0 and dot(a, b) > 0


@dataclass
class RunTrace:
    start_h: HPos
    start_p: PState
    direction: str  # "forward" | "backward"
    path: list  # [{feature, index, t_from, t_to}] in traversal order
    end_p: PState
    captured: bool

    def end_config(self, track: Track) -> Configuration:
        return Configuration(
            x=HumanParam(track.human_s(self.start_h)),
            y=track.puppy_param(self.end_p),
        )


@dataclass
class HumanScript:
    start_x: float
    start_y_kind: str
    start_y_index: int
    start_y_t: float
    moves: list  # [(dir: "ccw"|"cw", dist: float)]

    def start_config(self) -> Configuration:
        return Configuration(
            x=HumanParam(self.start_x),
            y=PuppyParam(self.start_y_kind, self.start_y_index, self.start_y_t),
        )


@dataclass
class SimTrace:
    events: list = field(default_factory=list)
    total_human_walk: float = 0.0
    captured: bool = False
    final_h: Optional[HPos] = None
    final_p: Optional[PState] = None


def _path_entry(kind, index, t_in, t_out):
    return {"feature": kind, "index": index, "t_from": float(t_in), "t_to": float(t_out)}


def puppy_run_exact(track: Track, h: HPos, p: PState, unstable_sense: int = 1) -> RunTrace:
    """Run the puppy from (h, p) to the first stable or final configuration.

    The configuration must not be Stable.  A Final start returns an immediate
    capture.  At an Unstable start the puppy runs in `unstable_sense`
    (+1 forward by default).
    """
    p = track.canon_p(p)
    tag = track.classify_exact(h, p)
    if tag is Tag.FINAL:
        return RunTrace(h, p, "forward", [], p, True)
    if tag is Tag.STABLE:
        raise ValueError("puppy_run precondition: configuration must not be stable")
    if tag in (Tag.FORWARD, Tag.PIVOT_FORWARD):
        sense = 1
    elif tag in (Tag.BACKWARD, Tag.PIVOT_BACKWARD):
        sense = -1
    else:
        sense = 1 if unstable_sense >= 0 else -1
    dname = "forward" if sense > 0 else "backward"
    hp = track.point_at(h)
    n = track.n
    path = []

    if isinstance(p, PEdge):
        cur = ("edge", p.i, p.t)
    else:
        cur = ("vertex", p.i, p.w)
    first = True

    for _ in range(2 * n + 3):
        if cur[0] == "edge":
            i, t0 = cur[1], cur[2]
            Ei = track.E[i]
            vi = track.vertices[i]
            tstar = dot(hp - vi, Ei) / track.len2[i]
            if sense > 0:
                if not first and not tstar > t0:
                    raise NoStablePoint("forward run entered a non-forward edge")
                if t0 < tstar < 1:
                    path.append(_path_entry("edge", i, t0, tstar))
                    pt = vi + Ei.scale(tstar)
                    return RunTrace(h, p, dname, path, PEdge(i, tstar), pt == hp)
                path.append(_path_entry("edge", i, t0, 1))
                cur = ("vertex", (i + 1) % n, Ei)
            else:
                if not first and not tstar < t0:
                    raise NoStablePoint("backward run entered a non-backward edge")
                if 0 < tstar < t0:
                    path.append(_path_entry("edge", i, t0, tstar))
                    pt = vi + Ei.scale(tstar)
                    return RunTrace(h, p, dname, path, PEdge(i, tstar), pt == hp)
                path.append(_path_entry("edge", i, t0, 0))
                cur = ("vertex", i, Ei)
            first = False
            continue

        k, w_in = cur[1], cur[2]
        u = hp - track.vertices[k]
        t_in = track.vertex_dir_t(k, w_in)
        if u.is_zero():
            path.append(_path_entry("vertex", k, t_in, t_in))
            return RunTrace(h, p, dname, path, PVert(k, w_in), True)
        if dot(u, w_in) == 0 and not first:
            tag_b = track.classify_exact(h, PVert(k, w_in))
            if tag_b is Tag.STABLE:
                path.append(_path_entry("vertex", k, t_in, t_in))
                return RunTrace(h, p, dname, path, PVert(k, w_in), False)
            if not (
                (tag_b is Tag.PIVOT_FORWARD and sense > 0)
                or (tag_b is Tag.PIVOT_BACKWARD and sense < 0)
            ):
                raise NoStablePoint(f"run blocked at vertex {k}: {tag_b}")
        s = track.turn_sign[k]
        target = track.E[k] if sense > 0 else track.E[k - 1]
        rotdir = s * sense
        w_stable = perp(u) if s > 0 else -perp(u)

        def inside(z):
            return (
                rotdir * sign(cross(w_in, z)) > 0
                and rotdir * sign(cross(z, target)) > 0
            )

        if inside(w_stable):
            t_out = track.vertex_dir_t(k, w_stable)
            path.append(_path_entry("vertex", k, t_in, t_out))
            return RunTrace(h, p, dname, path, PVert(k, w_stable), False)
        if inside(-w_stable) and not (first and dot(u, w_in) == 0):
            raise NoStablePoint(f"run crossed an unstable point at vertex {k}")
        g_t = dot(u, target)
        t_out = track.vertex_dir_t(k, target)
        path.append(_path_entry("vertex", k, t_in, t_out))
        nxt = ("edge", k, Fraction(0)) if sense > 0 else ("edge", (k - 1) % n, Fraction(1))
        if sense * g_t > 0:
            cur = nxt
            first = False
            continue
        if g_t == 0:
            tag_b = track.classify_exact(h, PVert(k, target))
            if tag_b is Tag.STABLE:
                return RunTrace(h, p, dname, path, PVert(k, target), False)
            if tag_b is Tag.FINAL:
                return RunTrace(h, p, dname, path, PVert(k, target), True)
            if (tag_b is Tag.PIVOT_FORWARD and sense > 0) or (
                tag_b is Tag.PIVOT_BACKWARD and sense < 0
            ):
                cur = nxt
                first = False
                continue
            raise NoStablePoint(f"run blocked at sweep boundary of vertex {k}: {tag_b}")
        raise NoStablePoint(f"sign inconsistency at vertex {k}")
    raise NoStablePoint("run exceeded one full loop")


def puppy_run(track: Track, c: Configuration, unstable_sense: int = 1) -> RunTrace:
    return puppy_run_exact(
        track, track.human_pos(c.x.s), track.puppy_state(c.y), unstable_sense
    )


# -- stable sliding ----------------------------------------------------------


def stable_position(track: Track, h: HPos, kind: str, idx: int) -> PState:
    """Exact stable puppy state on feature (kind, idx) for human at h."""
    if kind == "edge":
        vi, Ei = track.vertices[idx], track.E[idx]
        t = dot(track.point_at(h) - vi, Ei) / track.len2[idx]
        return PEdge(idx, t)
    u = track.point_at(h) - track.vertices[idx]
    s = track.turn_sign[idx]
    return PVert(idx, perp(u) if s > 0 else -perp(u))


def _resolve_feature(track: Track, h: HPos, p: PState, hdir: int):
    """Feature carrying the stable arc for the imminent motion direction.

    Junction states (puppy direction aligned with an incident edge) continue
    onto the side whose formula stays in its domain as the human advances.
    """
    if isinstance(p, PEdge):
        return ("edge", p.i)
    k = p.i
    Ej = track.E[h.j]
    if same_dir(p.w, track.E[k]):
        d = hdir * sign(dot(Ej, track.E[k]))
        return ("edge", k) if d > 0 else ("vertex", k)
    if same_dir(p.w, track.E[k - 1]):
        d = hdir * sign(dot(Ej, track.E[k - 1]))
        return ("edge", (k - 1) % track.n) if d < 0 else ("vertex", k)
    return ("vertex", k)


def _next_stable_event(track: Track, h: HPos, kind: str, idx: int, hdir: int):
    """First f in the current column, strictly beyond h.f in direction hdir,
    at which the stable arc on (kind, idx) can end.  The column boundary is
    always an event."""
    j = h.j
    vj, Ej = track.vertices[j], track.E[j]
    f_col = Fraction(1) if hdir > 0 else Fraction(0)
    roots = []
    if kind == "edge":
        vi, Ei = track.vertices[idx], track.E[idx]
        a = dot(vj - vi, Ei)
        b = dot(Ej, Ei)
        c = track.len2[idx]
        for bound in (Fraction(0), c):
            r = solve_linear(a - bound, b)
            if r is not None:
                roots.append(r)
    else:
        u0 = vj - track.vertices[idx]
        for A in (track.E[idx - 1], track.E[idx]):
            r = solve_linear(dot(A, u0), dot(A, Ej))
            if r is not None:
                roots.append(r)
    best = f_col
    for r in roots:
        if hdir > 0:
            if h.f < r < best:
                best = r
        else:
            if best < r < h.f:
                best = r
    return best


def _pstate_json(track, p: PState):
    pp = track.puppy_param(p)
    pos = track.puppy_point(p)
    return {
        "feature": pp.kind,
        "index": pp.index,
        "t": pp.t,
        "pos": [float(pos.x), float(pos.y)],
        "ext": track.puppy_ext(p),
    }


def _pstate_key(track, p: PState):
    p = track.canon_p(p)
    if isinstance(p, PEdge):
        return ("e", p.i, p.t)
    return ("v", p.i, primitive(p.w))


class Sim:
    """Shared engine for scripted simulation and exact lap walking."""

    def __init__(self, track: Track, h: HPos, p: PState, collect=True):
        self.track = track
        self.h = track.canon_h(h)
        self.p = track.canon_p(p)
        self.trace = SimTrace()
        self.collect = collect
        self.event_keys = []  # compact ids for period detection

    def _emit(self, ev):
        if self.collect:
            self.trace.events.append(ev)

    def _walk_event(self, j, f0, f1, p0, p1, dirn):
        if f0 == f1:
            return
        t = self.track
        self._emit(
            {
                "type": "walk",
                "dir": dirn,
                "from_x": t.human_s(HPos(j, f0)),
                "to_x": t.human_s(HPos(j, f1)),
                "dist": abs(float(f1 - f0)) * t.edge_lengths[j],
                "puppy_from": _pstate_json(t, p0),
                "puppy_to": _pstate_json(t, p1),
            }
        )

    def _run_event(self, tr: RunTrace):
        t = self.track
        self._emit(
            {
                "type": "run",
                "direction": tr.direction,
                "from": _pstate_json(t, tr.start_p),
                "to": _pstate_json(t, tr.end_p),
                "path": tr.path,
                "captured": tr.captured,
            }
        )
        self.event_keys.append(("run", _pstate_key(t, tr.end_p)))

    def resolve_start(self, unstable_sense=1):
        tag = self.track.classify_exact(self.h, self.p)
        if tag is Tag.FINAL:
            self.trace.captured = True
            return
        if tag is not Tag.STABLE:
            tr = puppy_run_exact(self.track, self.h, self.p, unstable_sense)
            self.p = self.track.canon_p(tr.end_p)
            self._run_event(tr)
            self.trace.captured = tr.captured

    def _normalize_for(self, hdir: int):
        if hdir < 0 and self.h.f == 0:
            j = (self.h.j - 1) % self.track.n
            self.h = HPos(j, Fraction(1))

    def _handle_event_config(self, stop_at_pivot: bool):
        """Classify the configuration reached at an event and act.

        Returns "stable", "pivot-stop", or "captured"."""
        t = self.track
        tag = t.classify_exact(self.h, self.p)
        if tag is Tag.FINAL:
            self.trace.captured = True
            return "captured"
        if tag is Tag.STABLE:
            return "stable"
        if tag.is_pivot():
            self.event_keys.append(("pivot", _pstate_key(t, self.p)))
            if stop_at_pivot:
                return "pivot-stop"
            tr = puppy_run_exact(t, self.h, self.p)
            self.p = t.canon_p(tr.end_p)
            self._run_event(tr)
            if tr.captured:
                self.trace.captured = True
                return "captured"
            return "stable"
        raise NoStablePoint(f"slide reached a non-critical configuration: {tag}")

    def advance_distance(self, dirn: str, dist: float, stop_at_pivot=False) -> bool:
        """Walk `dist` along the track, the puppy reacting.  Returns True if
        stopped early at a pivot (only when stop_at_pivot)."""
        t = self.track
        hdir = 1 if dirn == "ccw" else -1
        remaining = float(dist)
        min_step = 1e-13 * max(t.perimeter, 1.0)
        guard = 0
        guard_max = 256 + int((float(dist) / t.perimeter + 2) * 64 * t.n * t.n)
        while remaining > min_step and not self.trace.captured:
            guard += 1
            if guard > guard_max:
                raise NoStablePoint("slide failed to make progress")
            self._normalize_for(hdir)
            kind, idx = _resolve_feature(t, self.h, self.p, hdir)
            j = self.h.j
            f_ev = _next_stable_event(t, self.h, kind, idx, hdir)
            seg = abs(float(f_ev - self.h.f)) * t.edge_lengths[j]
            if seg >= remaining:
                df = Fraction(remaining / t.edge_lengths[j])
                f_new = self.h.f + (df if hdir > 0 else -df)
                f_new = min(f_new, f_ev) if hdir > 0 else max(f_new, f_ev)
                p_new = stable_position(t, HPos(j, f_new), kind, idx)
                self._walk_event(j, self.h.f, f_new, self.p, p_new, dirn)
                self.trace.total_human_walk += remaining
                self.h = t.canon_h(HPos(j, f_new))
                self.p = t.canon_p(p_new)
                if f_new != f_ev:
                    return False
                remaining = 0.0
            else:
                p_new = stable_position(t, HPos(j, f_ev), kind, idx)
                self._walk_event(j, self.h.f, f_ev, self.p, p_new, dirn)
                self.trace.total_human_walk += seg
                remaining -= seg
                self.h = t.canon_h(HPos(j, f_ev))
                self.p = t.canon_p(p_new)
            outcome = self._handle_event_config(stop_at_pivot)
            if outcome == "pivot-stop":
                return True
            if outcome == "captured":
                return False
        return False

    def advance_to_column_end(self, dirn: str):
        """Exact walk to the far end of the current human column; pivots fire
        along the way.  Used by lap-based protocols so that whole laps return
        to exactly the same parameter."""
        t = self.track
        hdir = 1 if dirn == "ccw" else -1
        self._normalize_for(hdir)
        start_col = self.h.j
        target = Fraction(1) if hdir > 0 else Fraction(0)
        guard = 0
        while not self.trace.captured:
            guard += 1
            if guard > 64 * t.n + 64:
                raise NoStablePoint("column walk failed to terminate")
            kind, idx = _resolve_feature(t, self.h, self.p, hdir)
            j = self.h.j
            f_ev = _next_stable_event(t, self.h, kind, idx, hdir)
            p_new = stable_position(t, HPos(j, f_ev), kind, idx)
            seg = abs(float(f_ev - self.h.f)) * t.edge_lengths[j]
            self._walk_event(j, self.h.f, f_ev, self.p, p_new, dirn)
            self.trace.total_human_walk += seg
            at_end = f_ev == target
            self.h = t.canon_h(HPos(j, f_ev))
            self.p = t.canon_p(p_new)
            if self._handle_event_config(False) == "captured":
                return
            if at_end:
                return

    def finish(self) -> SimTrace:
        self.trace.final_h = self.h
        self.trace.final_p = self.p
        return self.trace


def simulate(
    track: Track,
    script: HumanScript,
    collect=True,
    unstable_sense: int = 1,
) -> SimTrace:
    """Replay a human script; the puppy reacts per the attraction dynamics."""
    h = track.human_pos(script.start_x)
    p = track.puppy_state(
        PuppyParam(script.start_y_kind, script.start_y_index, script.start_y_t)
    )
    sim = Sim(track, h, p, collect=collect)
    sim.resolve_start(unstable_sense)
    for dirn, dist in script.moves:
        if sim.trace.captured:
            break
        if float(dist) < 0:
            raise ValueError("script distances must be positive")
        sim.advance_distance(dirn, float(dist))
    return sim.finish()


def slide_step(track: Track, c: Configuration, dirn: str, ds: float):
    """Advance the human by ds along a stable arc.

    Returns (configuration, arc_ended): when the arc ends at a pivot within
    ds, the configuration sits exactly at the pivot and arc_ended is True
    (the caller then invokes puppy_run)."""
    h = track.human_pos(c.x.s)
    p = track.puppy_state(c.y)
    if track.classify_exact(h, p) is not Tag.STABLE:
        raise ValueError("slide_step precondition: configuration must be stable")
    sim = Sim(track, h, p)
    ended = sim.advance_distance(dirn, ds, stop_at_pivot=True)
    cfg = Configuration(
        x=HumanParam(track.human_s(sim.h)), y=track.puppy_param(sim.p)
    )
    return cfg, ended


# -- independent oracle ------------------------------------------------------


def dense_oracle(track: Track, script: HumanScript, resolution: float = 1000.0):
    """Discrete greedy-descent simulation on an arc-length grid.

    Independent of the classifier and event machinery: only compares squared
    distances between sampled boundary points."""
    if resolution < 1000.0:
        raise ValueError("resolution must be at least 10^3 samples per unit")
    per = track.perimeter
    m = max(16, int(round(per * resolution)))
    step = per / m
    pts = [track.point_at(track.human_pos(i * step)).floats() for i in range(m)]

    def d2(i, hx, hy):
        px, py = pts[i]
        return (px - hx) ** 2 + (py - hy) ** 2

    def descend(i, hx, hy):
        cur = d2(i, hx, hy)
        while True:
            fwd = d2((i + 1) % m, hx, hy)
            if fwd < cur:
                i, cur = (i + 1) % m, fwd
                continue
            bwd = d2((i - 1) % m, hx, hy)
            if bwd < cur:
                i, cur = (i - 1) % m, bwd
                continue
            return i, cur

    h_s = script.start_x % per
    p_state = track.puppy_state(
        PuppyParam(script.start_y_kind, script.start_y_index, script.start_y_t)
    )
    px, py = track.puppy_point(p_state).floats()
    pi = min(range(m), key=lambda i: (pts[i][0] - px) ** 2 + (pts[i][1] - py) ** 2)

    capture_eps2 = (2.0 / resolution) ** 2
    hx, hy = track.point_at(track.human_pos(h_s)).floats()
    pi, cur = descend(pi, hx, hy)
    captured = cur <= capture_eps2
    total = 0.0
    for dirn, dist in script.moves:
        if captured:
            break
        sgn = 1.0 if dirn == "ccw" else -1.0
        todo = float(dist)
        while todo > 1e-15 and not captured:
            stepd = min(step, todo)
            h_s = (h_s + sgn * stepd) % per
            total += stepd
            todo -= stepd
            hx, hy = track.point_at(track.human_pos(h_s)).floats()
            pi, cur = descend(pi, hx, hy)
            captured = cur <= capture_eps2
    out = SimTrace()
    out.total_human_walk = total
    out.captured = captured
    out.final_h = track.human_pos(h_s)
    s_p = (pi * per / m) % per
    out.final_p = track.human_pos(s_p)  # puppy grid point as (edge, fraction)
    out.final_p = PEdge(out.final_p.j, out.final_p.f)
    return out
