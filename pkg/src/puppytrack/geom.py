"""Exact rational plane geometry.

All sign decisions (orientation, perpendicularity, cone membership) are made
on fractions.Fraction coordinates so they are never corrupted by rounding.
Lengths and angles, which are irrational in general, are exposed as floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class V2(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, o):
        return V2(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return V2(self.x - o.x, self.y - o.y)

    def __neg__(self):
        return V2(-self.x, -self.y)

    def scale(self, k):
        return V2(self.x * k, self.y * k)

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def floats(self):
        return (float(self.x), float(self.y))


def vec(x, y) -> V2:
    return V2(Fraction(x), Fraction(y))


def dot(a: V2, b: V2) -> Fraction:
    return a.x * b.x + a.y * b.y


def cross(a: V2, b: V2) -> Fraction:
    return a.x * b.y - a.y * b.x


def perp(a: V2) -> V2:
    """Rotate by +90 degrees (counterclockwise)."""
    return V2(-a.y, a.x)


def norm2(a: V2) -> Fraction:
    return a.x * a.x + a.y * a.y


def vlen(a: V2) -> float:
    return math.hypot(float(a.x), float(a.y))


def sign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def primitive(a: V2) -> tuple[int, int]:
    """Canonical integer direction: same ray as `a`, coprime components."""
    if a.is_zero():
        raise ValueError("zero vector has no direction")
    den = a.x.denominator * a.y.denominator // math.gcd(
        a.x.denominator, a.y.denominator
    )
    nx = a.x.numerator * (den // a.x.denominator)
    ny = a.y.numerator * (den // a.y.denominator)
    g = math.gcd(nx, ny)
    return (nx // g, ny // g)


def same_ray(a: V2, b: V2) -> bool:
    return cross(a, b) == 0 and dot(a, b) > 0


def seg_point_d2(a: V2, b: V2, p: V2) -> Fraction:
    """Exact squared distance from point p to segment ab."""
    ab = b - a
    ap = p - a
    den = norm2(ab)
    if den == 0:
        return norm2(ap)
    t = dot(ap, ab) / den
    if t <= 0:
        return norm2(ap)
    if t >= 1:
        return norm2(p - b)
    foot = a + ab.scale(t)
    return norm2(p - foot)


def segs_properly_cross(a: V2, b: V2, c: V2, d: V2) -> bool:
    """True when open segments ab and cd share an interior crossing point."""
    d1 = sign(cross(b - a, c - a))
    d2 = sign(cross(b - a, d - a))
    d3 = sign(cross(d - c, a - c))
    d4 = sign(cross(d - c, b - c))
    return d1 * d2 < 0 and d3 * d4 < 0


def seg_seg_d2(a: V2, b: V2, c: V2, d: V2) -> Fraction:
    """Exact squared distance between segments ab and cd (0 when they meet)."""
    if segs_properly_cross(a, b, c, d):
        return ZERO
    return min(
        seg_point_d2(a, b, c),
        seg_point_d2(a, b, d),
        seg_point_d2(c, d, a),
        seg_point_d2(c, d, b),
    )


def point_on_segment(a: V2, b: V2, p: V2) -> bool:
    if cross(b - a, p - a) != 0:
        return False
    t = dot(p - a, b - a)
    return 0 <= t <= norm2(b - a)


def polygon_area2(pts) -> Fraction:
    """Twice the signed area; positive for counterclockwise order."""
    total = ZERO
    n = len(pts)
    for i in range(n):
        total += cross(pts[i], pts[(i + 1) % n])
    return total


def solve_linear(a: Fraction, b: Fraction):
    """Root of a + b*f = 0, or None when b == 0 (0 roots or identically 0)."""
    if b == 0:
        return None
    return -a / b


def angle_of(v: V2) -> float:
    return math.atan2(float(v.y), float(v.x))
