"""Polygonal track, extended puppy parameterization, and the configuration
classifier.

A track is a simple polygon, counterclockwise, with exact rational vertices.
The puppy's extended parameter interleaves edge traversal (arc length) with
vertex turns (direction interpolation), so the direction function is
continuous around the whole loop.  The human parameter is plain arc length.

Internally every configuration is held exactly: human as (edge index,
rational fraction), puppy as either (edge index, rational fraction) or
(vertex index, rational direction vector).  All classification is done with
exact sign arithmetic; floats appear only in lengths, angles and rendering.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .geom import (
    V2,
    Q,
    cross,
    dot,
    norm2,
    perp,
    point_on_segment,
    polygon_area2,
    primitive,
    same_ray,
    seg_seg_d2,
    sign,
    vec,
    vlen,
)

TWO_PI = 2.0 * math.pi

FILE_HEADER = "puppytrack v1"


class PuppyError(Exception):
    """Base class for all engine errors."""


class ParseError(PuppyError):
    pass


class NotSimple(PuppyError):
    pass


class DegenerateGeometry(PuppyError):
    pass


class Tag(enum.Enum):
    FORWARD = "Forward"
    BACKWARD = "Backward"
    FINAL = "Final"
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    PIVOT_FORWARD = "PivotForward"
    PIVOT_BACKWARD = "PivotBackward"

    def is_critical(self):
        return self not in (Tag.FORWARD, Tag.BACKWARD)

    def is_pivot(self):
        return self in (Tag.PIVOT_FORWARD, Tag.PIVOT_BACKWARD)


# -- exact state -----------------------------------------------------------

class HPos(NamedTuple):
    """Human on edge j at fraction f in [0, 1]."""

    j: int
    f: Fraction


class PEdge(NamedTuple):
    """Puppy on edge i at fraction t in [0, 1]."""

    i: int
    t: Fraction


class PVert(NamedTuple):
    """Puppy at vertex i facing direction w (unnormalized, within the turn
    sweep from edge i-1 to edge i)."""

    i: int
    w: V2


PState = Union[PEdge, PVert]


# -- public parameter types -------------------------------------------------

@dataclass(frozen=True)
class PuppyParam:
    kind: str  # "edge" | "vertex"
    index: int
    t: float

    def __post_init__(self):
        if self.kind not in ("edge", "vertex"):
            raise ValueError(f"bad puppy feature kind {self.kind!r}")


@dataclass(frozen=True)
class HumanParam:
    s: float


@dataclass(frozen=True)
class Configuration:
    x: HumanParam
    y: PuppyParam


@dataclass(frozen=True)
class Track:
    """Simple CCW polygon with derived edge/turn data.

    Immutable after construction; safe to share between threads.
    """

    vertices: tuple
    name: str = ""
    normalized_from_cw: bool = False

    def __post_init__(self):
        n = len(self.vertices)
        E = tuple(self.vertices[(i + 1) % n] - self.vertices[i] for i in range(n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "len2", tuple(norm2(e) for e in E))
        lens = tuple(vlen(e) for e in E)
        object.__setattr__(self, "edge_lengths", lens)
        object.__setattr__(self, "perimeter", math.fsum(lens))
        turn_sign = tuple(sign(cross(E[i - 1], E[i])) for i in range(n))
        object.__setattr__(self, "turn_sign", turn_sign)
        angles = []
        for i in range(n):
            a = math.atan2(float(E[i].y), float(E[i].x)) - math.atan2(
                float(E[i - 1].y), float(E[i - 1].x)
            )
            while a <= -math.pi:
                a += TWO_PI
            while a > math.pi:
                a -= TWO_PI
            angles.append(a)
        object.__setattr__(self, "exterior_angles", tuple(angles))
        cum = [0.0]
        for L in lens:
            cum.append(cum[-1] + L)
        object.__setattr__(self, "cum_s", tuple(cum))
        # extended parameter: order Vertex(0), Edge(0), Vertex(1), Edge(1), ...
        widths = []
        for i in range(n):
            widths.append(abs(angles[i]))
            widths.append(lens[i])
        cum_ext = [0.0]
        for w in widths:
            cum_ext.append(cum_ext[-1] + w)
        object.__setattr__(self, "feature_widths", tuple(widths))
        object.__setattr__(self, "cum_ext", tuple(cum_ext))
        object.__setattr__(self, "ext_total", cum_ext[-1])

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_vertices(points, name="", _from_cw=False) -> "Track":
        pts = [V2(Fraction(x), Fraction(y)) for (x, y) in points]
        n = len(pts)
        if n < 3:
            raise DegenerateGeometry(f"need at least 3 vertices, got {n}")
        for i in range(n):
            if pts[i] == pts[(i + 1) % n]:
                raise DegenerateGeometry(f"zero-length edge at vertex {i}")
        seen = set()
        for p in pts:
            if p in seen:
                raise DegenerateGeometry(f"repeated vertex {p.floats()}")
            seen.add(p)
        # adjacent edges: reject 0-degree (fold-back) and 180-degree vertices
        for i in range(n):
            e_prev = pts[i] - pts[i - 1]
            e_next = pts[(i + 1) % n] - pts[i]
            if cross(e_prev, e_next) == 0:
                if dot(e_prev, e_next) < 0:
                    raise DegenerateGeometry(f"zero-angle fold at vertex {i}")
                raise DegenerateGeometry(
                    f"collinear pass-through vertex {i}; merge it into the edge"
                )
        # simplicity: non-adjacent edges must not meet at all
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                c, d = pts[j], pts[(j + 1) % n]
                if seg_seg_d2(a, b, c, d) == 0:
                    raise NotSimple(f"edges {i} and {j} intersect")
        area2 = polygon_area2(pts)
        if area2 < 0:
            return Track.from_vertices(list(reversed(pts)), name=name, _from_cw=True)
        return Track(vertices=tuple(pts), name=name, normalized_from_cw=_from_cw)

    # -- basic geometry ------------------------------------------------------

    def vertex(self, i) -> V2:
        return self.vertices[i % self.n]

    def edge_vec(self, i) -> V2:
        return self.E[i % self.n]

    def point_at(self, h: HPos) -> V2:
        return self.vertices[h.j] + self.E[h.j].scale(h.f)

    def puppy_point(self, p: PState) -> V2:
        if isinstance(p, PEdge):
            return self.vertices[p.i] + self.E[p.i].scale(p.t)
        return self.vertices[p.i]

    def puppy_dir_vec(self, p: PState) -> V2:
        return self.E[p.i] if isinstance(p, PEdge) else p.w

    # -- parameter conversions ----------------------------------------------

    def human_pos(self, s: float) -> HPos:
        s = s % self.perimeter
        j = 0
        for k in range(self.n):
            if s < self.cum_s[k + 1] or k == self.n - 1:
                j = k
                break
        f = (s - self.cum_s[j]) / self.edge_lengths[j]
        return HPos(j, Fraction(min(max(f, 0.0), 1.0)))

    def human_s(self, h: HPos) -> float:
        return self.cum_s[h.j] + float(h.f) * self.edge_lengths[h.j]

    def vertex_dir(self, i: int, t: float) -> V2:
        """Direction at fraction t through the turn at vertex i (float-based,
        snapped to rationals and clamped into the closed sweep)."""
        i %= self.n
        a0 = math.atan2(float(self.E[i - 1].y), float(self.E[i - 1].x))
        ang = a0 + t * self.exterior_angles[i]
        w = V2(Fraction(math.cos(ang)), Fraction(math.sin(ang)))
        A, B = self.E[i - 1], self.E[i]
        s = self.turn_sign[i]
        if s * sign(cross(A, w)) < 0:
            return A
        if s * sign(cross(w, B)) < 0:
            return B
        return w

    def vertex_dir_t(self, i: int, w: V2) -> float:
        """Inverse of vertex_dir: fraction of the turn at which direction w
        occurs."""
        i %= self.n
        ang = self.exterior_angles[i]
        if ang == 0.0:
            return 0.0
        a0 = math.atan2(float(self.E[i - 1].y), float(self.E[i - 1].x))
        aw = math.atan2(float(w.y), float(w.x))
        d = aw - a0
        while d <= -math.pi:
            d += TWO_PI
        while d > math.pi:
            d -= TWO_PI
        return min(max(d / ang, 0.0), 1.0)

    def puppy_state(self, y: PuppyParam) -> PState:
        i = y.index % self.n
        t = min(max(y.t, 0.0), 1.0)
        if y.kind == "edge":
            return PEdge(i, Fraction(t))
        return PVert(i, self.vertex_dir(i, t))

    def puppy_param(self, p: PState) -> PuppyParam:
        if isinstance(p, PEdge):
            return PuppyParam("edge", p.i, float(p.t))
        return PuppyParam("vertex", p.i, self.vertex_dir_t(p.i, p.w))

    def puppy_ext(self, p: PState) -> float:
        """Extended scalar parameter of a puppy state."""
        if isinstance(p, PEdge):
            return self.cum_ext[2 * p.i + 1] + float(p.t) * self.feature_widths[
                2 * p.i + 1
            ]
        return self.cum_ext[2 * p.i] + self.vertex_dir_t(p.i, p.w) * (
            self.feature_widths[2 * p.i]
        )

    def puppy_from_ext(self, yext: float) -> PState:
        yext = yext % self.ext_total
        for q in range(2 * self.n):
            if yext < self.cum_ext[q + 1] or q == 2 * self.n - 1:
                wdt = self.feature_widths[q]
                t = 0.0 if wdt == 0 else (yext - self.cum_ext[q]) / wdt
                i = q // 2
                if q % 2 == 1:
                    return PEdge(i, Fraction(min(max(t, 0.0), 1.0)))
                return PVert(i, self.vertex_dir(i, t))
        raise AssertionError

    # -- canonical forms ------------------------------------------------------

    def canon_h(self, h: HPos) -> HPos:
        if h.f == 1:
            return HPos((h.j + 1) % self.n, Fraction(0))
        return HPos(h.j % self.n, h.f)

    def canon_p(self, p: PState) -> PState:
        """Boundary puppy states are represented as vertex states with a
        primitive direction vector."""
        if isinstance(p, PEdge):
            if p.t == 0:
                return PVert(p.i, V2(*map(Fraction, primitive(self.E[p.i]))))
            if p.t == 1:
                j = (p.i + 1) % self.n
                return PVert(j, V2(*map(Fraction, primitive(self.E[p.i]))))
            return p
        w = V2(*map(Fraction, primitive(p.w)))
        return PVert(p.i % self.n, w)

    # -- classification -------------------------------------------------------

    def classify_exact(self, h: HPos, p: PState) -> Tag:
        hp = self.point_at(h)
        p = self.canon_p(p)
        if isinstance(p, PEdge):
            i = p.i
            u = hp - (self.vertices[i] + self.E[i].scale(p.t))
            if u.is_zero():
                return Tag.FINAL
            g = dot(u, self.E[i])
            if g > 0:
                return Tag.FORWARD
            if g < 0:
                return Tag.BACKWARD
            return Tag.STABLE  # dot is strictly decreasing along an edge
        k = p.i
        u = hp - self.vertices[k]
        if u.is_zero():
            return Tag.FINAL
        g = dot(u, p.w)
        if g > 0:
            return Tag.FORWARD
        if g < 0:
            return Tag.BACKWARD
        A, B = self.E[k - 1], self.E[k]
        s = self.turn_sign[k]
        on_start = same_ray(p.w, A)
        on_end = same_ray(p.w, B)
        if not on_start and not on_end:
            return Tag.STABLE if s * sign(cross(p.w, u)) < 0 else Tag.UNSTABLE
        if on_end:
            below = -s * sign(cross(B, u))
            return Tag.STABLE if below > 0 else Tag.PIVOT_BACKWARD
        above = s * sign(cross(A, u))
        return Tag.STABLE if above < 0 else Tag.PIVOT_FORWARD

    def classify(self, c: Configuration) -> Tag:
        return self.classify_exact(self.human_pos(c.x.s), self.puppy_state(c.y))

    # -- feature distances -----------------------------------------------------

    def min_feature_d2(self) -> Fraction:
        """Exact squared minimum distance between non-incident features."""
        best = None
        n = self.n
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                c, d = self.vertices[j], self.vertices[(j + 1) % n]
                d2 = seg_seg_d2(a, b, c, d)
                if best is None or d2 < best:
                    best = d2
        return best

    def locate_point(self, pt: V2) -> Optional[HPos]:
        """Exact boundary point location (None when pt is off the boundary)."""
        for j in range(self.n):
            a = self.vertices[j]
            if point_on_segment(a, self.vertices[(j + 1) % self.n], pt):
                f = (
                    dot(pt - a, self.E[j]) / self.len2[j]
                )
                return HPos(j, f)
        return None


# -- module-level operations (spec surface) ----------------------------------

def load_track(document) -> Track:
    """Parse a puppytrack v1 document (bytes or str, JSON)."""
    if isinstance(document, bytes):
        try:
            text = document.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not utf-8: {e}") from None
    else:
        text = document
    try:
        data = json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except (json.JSONDecodeError, ValueError) as e:
        raise ParseError(f"bad JSON: {e}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    header = data.get("header")
    if header != FILE_HEADER:
        raise ParseError(f"missing or unsupported header (want {FILE_HEADER!r})")
    verts = data.get("vertices")
    if not isinstance(verts, list) or len(verts) < 3:
        raise ParseError("vertices must be a list of [x, y] pairs")
    pts = []
    for row in verts:
        if not isinstance(row, (list, tuple)) or len(row) != 2:
            raise ParseError(f"bad vertex row {row!r}")
        try:
            pts.append((Fraction(str(row[0])), Fraction(str(row[1]))))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad coordinate in {row!r}: {e}") from None
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string")
    return Track.from_vertices(pts, name=name)


def dump_track(track: Track, name=None) -> str:
    body = {
        "header": FILE_HEADER,
        "name": name if name is not None else track.name,
        "vertices": [[str(v.x), str(v.y)] for v in track.vertices],
    }
    return json.dumps(body, indent=1)


def puppy_position(track: Track, y: PuppyParam):
    return track.puppy_point(track.puppy_state(y)).floats()


def puppy_direction(track: Track, y: PuppyParam):
    if y.kind == "edge":
        e = track.E[y.index % track.n]
        L = track.edge_lengths[y.index % track.n]
        return (float(e.x) / L, float(e.y) / L)
    i = y.index % track.n
    a0 = math.atan2(float(track.E[i - 1].y), float(track.E[i - 1].x))
    ang = a0 + min(max(y.t, 0.0), 1.0) * track.exterior_angles[i]
    return (math.cos(ang), math.sin(ang))


def classify(track: Track, c: Configuration) -> Tag:
    return track.classify(c)


def min_feature_distance(track: Track) -> float:
    return math.sqrt(float(track.min_feature_d2()))
