"""Named test tracks and seeded corpus generators.

The searched fixtures (hooked star, pocket polygon) were found by scanning
parameter families with the event simulator and are frozen here with their
interesting start configurations.
"""

from __future__ import annotations

import math
import os
import random
from fractions import Fraction

from .diagram import detect_degeneracies
from .track import Configuration, HumanParam, PuppyParam, Track

DEFAULT_SEED = 20260810


def env_seed() -> int:
    return int(os.environ.get("PUPPY_SEED", DEFAULT_SEED))


def rectangle() -> Track:
    return Track.from_vertices([(0, 0), (6, 0), (6, 4), (0, 4)], name="rectangle")


def t4() -> Track:
    """Obtuse convex pentagon (a quadrilateral cannot avoid acute or right
    angles: its interior angles sum to 360 degrees)."""
    return Track.from_vertices(
        [(0, 0), (8, 1), (10, 7), (4, 10), (-3, 5)], name="T4"
    )


def t5() -> Track:
    """Non-degenerate convex pentagon; certified by detect_degeneracies."""
    return Track.from_vertices([(0, 0), (7, 1), (9, 6), (4, 9), (-2, 5)], name="T5")


def l_shape() -> Track:
    """Long thin L-shaped octagon; closest non-incident features 0.5 apart."""
    return Track.from_vertices(
        [
            (0, 0),
            (10, 0),
            (10, 2),
            (9, 2),
            (9, Fraction(3, 2)),
            (8, Fraction(3, 2)),
            (8, Fraction(1, 2)),
            (0, Fraction(1, 2)),
        ],
        name="T_L",
    )


def staircase12() -> Track:
    """Simple orthogonal 12-gon."""
    return Track.from_vertices(
        [
            (0, 0),
            (10, 0),
            (10, 2),
            (8, 2),
            (8, 4),
            (6, 4),
            (6, 6),
            (4, 6),
            (4, 8),
            (2, 8),
            (2, 10),
            (0, 10),
        ],
        name="staircase12",
    )


def acute_triangle() -> Track:
    """All-acute isoceles triangle with rational edge lengths (6, 5, 5); the
    all-acute stand-in for the equilateral triangle, whose exact coordinates
    are irrational."""
    return Track.from_vertices([(0, 0), (6, 0), (3, 4)], name="acute-triangle")


def equilateral_float() -> Track:
    """Equilateral side-2 triangle to double precision (irrational height)."""
    return Track.from_vertices(
        [(0, 0), (2, 0), (1, 1.7320508075688772)], name="equilateral"
    )


def star() -> Track:
    """Hooked five-fold star: walking counterclockwise forever from the
    canonical start never captures (the event sequence is periodic), while
    walking clockwise does."""
    fracs = (Fraction(32, 100), Fraction(64, 100), Fraction(76, 100))
    radii = (9.0, 2.0, 6.0)
    pts = []
    for k in range(5):
        for fr, ra in zip(fracs, radii):
            a = math.pi / 2 + 2 * math.pi * (k + float(fr)) / 5
            pts.append(
                (
                    Fraction(round(10 * ra * math.cos(a)), 10),
                    Fraction(round(10 * ra * math.sin(a)), 10),
                )
            )
    return Track.from_vertices(pts, name="star")


def star_start() -> Configuration:
    """Start from which counterclockwise-forever fails on the star."""
    return Configuration(HumanParam(0.0), PuppyParam("edge", 12, 0.5))


def pocket() -> Track:
    """Non-degenerate 14-gon with a deep bay; its attraction diagram has two
    contractible critical cycles besides the diagonal and the river."""
    pts = [
        ("-11/5", "-27/10"),
        ("-1", "-57/20"),
        ("9/10", "-17/5"),
        ("27/5", "-157/20"),
        ("44/5", "-21/4"),
        ("99/10", "1/20"),
        ("87/10", "19/5"),
        ("119/20", "73/10"),
        ("61/20", "10"),
        ("-2", "211/20"),
        ("-6", "169/20"),
        ("-37/4", "17/4"),
        ("-51/5", "1/20"),
        ("-97/10", "-17/5"),
    ]
    return Track.from_vertices(
        [(Fraction(x), Fraction(y)) for x, y in pts], name="pocket"
    )


# -- corpus generators ---------------------------------------------------------


def random_nondegenerate(rng: random.Random, n_max: int = 20) -> Track:
    """Random simple polygon with no degeneracies at all (rejection-sampled;
    mix of convex-ish and mildly reflex radial shapes)."""
    for _ in range(4000):
        n = rng.randint(5, n_max)
        base = rng.uniform(0, 2 * math.pi)
        angs = [base + 2 * math.pi * (k + rng.uniform(-0.2, 0.2)) / n for k in range(n)]
        dip = rng.randrange(n) if rng.random() < 0.4 else None
        pts = []
        for k, a in enumerate(angs):
            r = 10 * rng.uniform(0.85, 1.15)
            if dip is not None and k == dip:
                r = 10 * rng.uniform(0.45, 0.62)
            pts.append(
                (
                    Fraction(round(r * math.cos(a) * 20), 20),
                    Fraction(round(r * math.sin(a) * 20), 20),
                )
            )
        try:
            t = Track.from_vertices(pts)
        except Exception:
            continue
        if detect_degeneracies(t):
            continue
        return t
    raise RuntimeError("failed to generate a non-degenerate polygon")


def corpus(count: int = 100, seed: int | None = None, n_max: int = 20):
    """Seeded corpus of non-degenerate simple polygons."""
    rng = random.Random(env_seed() if seed is None else seed)
    out = []
    for k in range(count):
        t = random_nondegenerate(rng, n_max)
        out.append(
            Track.from_vertices([(v.x, v.y) for v in t.vertices], name=f"corpus-{k}")
        )
    return out


def random_orthogonal(rng: random.Random, max_cols: int = 8) -> Track:
    """Random simple rectilinear polygon (a skyline over a flat base)."""
    while True:
        m = rng.randint(2, max_cols)
        xs = sorted(rng.sample(range(1, 4 * max_cols), m - 1))
        cuts = [0] + xs + [4 * max_cols]
        heights = []
        prev = None
        for _ in range(m):
            h = rng.randint(1, 12)
            while h == prev:
                h = rng.randint(1, 12)
            heights.append(h)
            prev = h
        pts = [(cuts[0], 0), (cuts[-1], 0), (cuts[-1], heights[-1])]
        for c in range(m - 1, 0, -1):
            pts.append((cuts[c], heights[c]))
            pts.append((cuts[c], heights[c - 1]))
        pts.append((cuts[0], heights[0]))
        try:
            return Track.from_vertices(pts)
        except Exception:
            continue


def orthogonal_corpus(count: int = 50, seed: int | None = None):
    rng = random.Random((env_seed() if seed is None else seed) ^ 0x0F0F)
    out = []
    for k in range(count):
        t = random_orthogonal(rng)
        out.append(
            Track.from_vertices(
                [(v.x, v.y) for v in t.vertices], name=f"ortho-{k}"
            )
        )
    return out


_PYTHAGOREAN = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (9, 40, 41),
    (12, 35, 37),
    (28, 45, 53),
]


def _rational_length_vector(rng: random.Random):
    """Random vector with rational Euclidean length (axis or Pythagorean)."""
    if rng.random() < 0.35:
        L = Fraction(rng.randint(1, 12))
        v = (L, Fraction(0))
    else:
        a, b, _ = rng.choice(_PYTHAGOREAN)
        s = Fraction(rng.randint(1, 6), rng.choice([1, 2, 4]))
        v = (Fraction(a) * s, Fraction(b) * s)
    # random rotation by multiples of 90 degrees keeps lengths rational
    for _ in range(rng.randrange(4)):
        v = (-v[1], v[0])
    return v


def random_degenerate_zonogon(rng: random.Random, half_edges: int = 4) -> Track:
    """Convex zonogon with rational edge lengths and injected acute / right
    vertex angles (chamfer-suite inputs).  Every edge vector appears with its
    negation, so the polygon closes exactly."""
    while True:
        vecs = []
        for _ in range(half_edges):
            vecs.append(_rational_length_vector(rng))
        if rng.random() < 0.7:
            # force a right angle: add a perpendicular partner of some vector
            vx, vy = vecs[rng.randrange(len(vecs))]
            vecs.append((-vy, vx))
        allv = vecs + [(-x, -y) for (x, y) in vecs]
        allv.sort(key=lambda v: math.atan2(float(v[1]), float(v[0])))
        pts = []
        x = y = Fraction(0)
        for vx, vy in allv:
            pts.append((x, y))
            x += vx
            y += vy
        try:
            t = Track.from_vertices(pts)
        except Exception:
            continue
        degs = detect_degeneracies(t)
        if any(d.dtype == "type1" or d.dtype.startswith("type3") for d in degs):
            return t


def degenerate_corpus(count: int = 20, seed: int | None = None):
    rng = random.Random((env_seed() if seed is None else seed) ^ 0xD6E9)
    out = []
    for k in range(count):
        if k % 4 == 3:
            t = random_orthogonal(rng, max_cols=4)
        else:
            t = random_degenerate_zonogon(rng, half_edges=rng.randint(3, 5))
        out.append(
            Track.from_vertices([(v.x, v.y) for v in t.vertices], name=f"degen-{k}")
        )
    return out


def random_starts(track: Track, count: int, rng: random.Random):
    out = []
    for _ in range(count):
        s = rng.uniform(0, track.perimeter)
        if rng.random() < 0.2:
            y = PuppyParam("vertex", rng.randrange(track.n), rng.random())
        else:
            y = PuppyParam("edge", rng.randrange(track.n), rng.random())
        out.append(Configuration(HumanParam(s), y))
    return out
