"""Verification oracles: brute-force checks of the diagram structure.

These deliberately avoid the combinatorial machinery they validate: region
membership is recomputed from pointwise classification and compared against
the assignment implied by the arc set.
"""

from __future__ import annotations

import bisect
import math
from fractions import Fraction

from .diagram import (
    AttractionDiagram,
    ColumnCritical,
    criticals_in_column,
    implied_tag_between,
)
from .geom import V2, cross, sign
from .track import HPos, PEdge, PState, PuppyError, PVert, Tag, Track


_SNAP = 1 << 20  # grid coordinates use small exact denominators for speed


def _column_samples(track: Track, nx: int):
    """Uniform-in-arc-length human sample positions as (col, Fraction)."""
    per = track.perimeter
    out = []
    for k in range(nx):
        s = (k + 0.5) / nx * per
        h = track.human_pos(s)
        out.append(HPos(h.j, Fraction(round(h.f * _SNAP), _SNAP)))
    return out


def _puppy_samples(track: Track, ny: int):
    out = []
    for m in range(ny):
        yext = (m + 0.5) / ny * track.ext_total
        p = track.puppy_from_ext(yext)
        if isinstance(p, PEdge):
            out.append(PEdge(p.i, Fraction(round(p.t * _SNAP), _SNAP)))
        else:
            w = V2(
                Fraction(round(p.w.x * _SNAP), _SNAP),
                Fraction(round(p.w.y * _SNAP), _SNAP),
            )
            # keep the snapped direction inside the closed sweep
            A, B = track.E[p.i - 1], track.E[p.i]
            s = track.turn_sign[p.i]
            if s * sign(cross(A, w)) < 0:
                w = A
            elif s * sign(cross(w, B)) < 0:
                w = B
            out.append(PVert(p.i, w))
    return out


def _int_lattice(track: Track):
    """Vertices scaled to a common integer lattice (scale returned)."""
    den = 1
    for v in track.vertices:
        for q in (v.x, v.y):
            den = den * q.denominator // math.gcd(den, q.denominator)
    iv = [(int(v.x * den), int(v.y * den)) for v in track.vertices]
    return den, iv


def grid_region_check(diagram: AttractionDiagram, nx: int = 512, ny: int = 512):
    """Compare the arc-implied forward/backward assignment against pointwise
    classification on an nx-by-ny uniform grid (exact integer predicates).
    Returns the number of samples checked; raises PuppyError on the first
    mismatch.

    A random subsample is re-classified with Track.classify_exact to pin the
    fast integer path to the public classifier."""
    track = diagram.track
    from .diagram import _vertex_order_key

    n = track.n
    den, iv = _int_lattice(track)
    ie = [
        (iv[(i + 1) % n][0] - iv[i][0], iv[(i + 1) % n][1] - iv[i][1])
        for i in range(n)
    ]

    puppy_samples = _puppy_samples(track, ny)
    pkeys = []
    pint = []  # (gx, gy, wx, wy) numerators at scale den*_SNAP / direction ints
    for p in puppy_samples:
        if isinstance(p, PEdge):
            pkeys.append((2 * p.i + 1, (0, p.t)))
            a = int(p.t * _SNAP)
            px = iv[p.i][0] * _SNAP + ie[p.i][0] * a
            py = iv[p.i][1] * _SNAP + ie[p.i][1] * a
            pint.append((px, py, ie[p.i][0], ie[p.i][1]))
        else:
            pkeys.append((2 * p.i, _vertex_order_key(track, p.i, p.w)))
            wx = int(p.w.x * _SNAP)
            wy = int(p.w.y * _SNAP)
            pint.append((iv[p.i][0] * _SNAP, iv[p.i][1] * _SNAP, wx, wy))

    import random

    rng = random.Random(0xC0FFEE)
    crosscheck = set()
    for _ in range(256):
        crosscheck.add((rng.randrange(nx), rng.randrange(ny)))

    checked = 0
    for kx, h in enumerate(_column_samples(track, nx)):
        crit = criticals_in_column(diagram, h.j, h.f)
        if not crit:
            raise PuppyError("column slice with no critical configurations")
        keys = [c.ykey for c in crit]
        af = int(h.f * _SNAP)
        hx = iv[h.j][0] * _SNAP + ie[h.j][0] * af
        hy = iv[h.j][1] * _SNAP + ie[h.j][1] * af
        implied_cache = {}
        for ky, (p, pk, (px, py, wx, wy)) in enumerate(
            zip(puppy_samples, pkeys, pint)
        ):
            g = (hx - px) * wx + (hy - py) * wy
            if g > 0:
                actual = Tag.FORWARD
            elif g < 0:
                actual = Tag.BACKWARD
            else:
                actual = track.classify_exact(h, p)
            if (kx, ky) in crosscheck and not actual.is_critical():
                ref = track.classify_exact(h, p)
                if ref is not actual:
                    raise PuppyError("integer classifier disagrees with classify")
            idx = bisect.bisect_left(keys, pk)
            if actual.is_critical():
                below = crit[idx - 1] if idx > 0 else crit[-1]
                above = crit[idx % len(crit)]
                if pk == below.ykey or pk == above.ykey:
                    checked += 1
                    continue
                raise PuppyError(
                    f"sample classifies {actual} but no arc passes through it"
                )
            implied = implied_cache.get(idx)
            if implied is None:
                below = crit[idx - 1] if idx > 0 else crit[-1]
                above = crit[idx % len(crit)]
                implied = implied_tag_between(below, above)
                implied_cache[idx] = implied
            if implied is not actual:
                raise PuppyError(
                    f"grid mismatch at h={h} p={p}: arcs imply {implied}, "
                    f"classify says {actual}"
                )
            checked += 1
    return checked


def column_region_intervals(diagram: AttractionDiagram, h: HPos):
    """Sorted critical slice plus the implied tag of each gap (cyclic)."""
    crit = criticals_in_column(diagram, h.j, h.f)
    gaps = []
    for a in range(len(crit)):
        below = crit[a]
        above = crit[(a + 1) % len(crit)]
        gaps.append((below, above, implied_tag_between(below, above)))
    return crit, gaps


def monotone_distance_profile(track: Track, trace_path, h: HPos, samples=1000):
    """Distances from the human to sample points along a run path; used to
    check monotone descent."""
    hp = track.point_at(h).floats()
    ds = []
    for seg in trace_path:
        kind, idx = seg["feature"], seg["index"]
        t0, t1 = seg["t_from"], seg["t_to"]
        m = max(2, samples // max(1, len(trace_path)))
        for q in range(m):
            t = t0 + (t1 - t0) * q / (m - 1)
            if kind == "edge":
                p = track.puppy_point(PEdge(idx, Fraction(min(max(t, 0.0), 1.0))))
            else:
                p = track.puppy_point(PVert(idx, track.vertex_dir(idx, t)))
            px, py = p.floats()
            ds.append(math.hypot(px - hp[0], py - hp[1]))
    return ds


def flood_fill_contractible(diagram: AttractionDiagram, cycle, nx=256, ny=256):
    """Grid flood-fill evidence that `cycle` is contractible: the grid minus
    the cells the cycle passes through splits into a component that does not
    wrap around the torus."""
    track = diagram.track
    per, ext = track.perimeter, track.ext_total
    blocked = set()

    def mark(xf, yf):
        gx = int(xf / per * nx) % nx
        gy = int(yf / ext * ny) % ny
        blocked.add((gx, gy))

    from .diagram import DiagVert, EdgeArc, _arc_samples

    for arc in cycle.arcs:
        if isinstance(arc, DiagVert):
            continue
        for h, p in _arc_samples(track, arc, m=4 * max(nx, ny) // len(cycle.arcs) + 8):
            mark(track.human_s(h), track.puppy_ext(p))
    # flood from every unblocked cell; measure the smallest component's extent
    seen = {}
    comp = 0
    sizes = {}
    wraps = {}
    for sx in range(nx):
        for sy in range(ny):
            if (sx, sy) in blocked or (sx, sy) in seen:
                continue
            comp += 1
            stack = [(sx, sy)]
            seen[(sx, sy)] = comp
            count = 0
            xs = set()
            ys = set()
            while stack:
                cx, cy = stack.pop()
                count += 1
                xs.add(cx)
                ys.add(cy)
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    q = ((cx + dx) % nx, (cy + dy) % ny)
                    if q in blocked or q in seen:
                        continue
                    seen[q] = comp
                    stack.append(q)
            sizes[comp] = count
            wraps[comp] = (len(xs) == nx, len(ys) == ny)
    if comp < 2:
        return False
    # contractible when some component is bounded in both directions
    return any(not wx and not wy for (wx, wy) in wraps.values())
