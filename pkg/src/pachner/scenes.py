"""Hand-built 3D motions used by the tests and the experiment scripts."""

from __future__ import annotations

from fractions import Fraction

from .dynamics import Trajectory
from .exactgeom import point


def sphere_point(u, v, radius=1, center=(0, 0, 0)):
    """Rational point of a sphere: inverse stereographic projection of (u, v)."""
    u, v = Fraction(u), Fraction(v)
    q = u * u + v * v
    raw = (2 * u / (q + 1), 2 * v / (q + 1), (q - 1) / (q + 1))
    return point(*(Fraction(c) + Fraction(radius) * x for c, x in zip(center, raw)))


def bipyramid(s) -> list:
    """Triangle 1,2,3 in the plane z=0, apex 4 above and apex 5 at depth s."""
    return [point(2, 0, 0), point(-1, 2, 0), point(-1, -2, 0), point(0, 0, 2), point(0, 0, -Fraction(s))]


def through_sphere_round_trip(near=Fraction(1, 4), far=8) -> Trajectory:
    """Apex 5 leaves the circumsphere of 1234 and comes back."""
    return Trajectory.through([bipyramid(near), bipyramid(far), bipyramid(near)])


def through_sphere_once(near=Fraction(1, 4), far=8) -> Trajectory:
    return Trajectory.through([bipyramid(near), bipyramid(far)])


SPHERE_UV = [(0, 0), (3, 1), (-2, 3), (1, -4), (Fraction(-5, 2), Fraction(-3, 2)), (Fraction(1, 3), Fraction(5, 4))]


def six_on_sphere(ra=1, rb=1) -> list:
    """Six points of the unit sphere; points 1 and 2 scaled radially by ra, rb."""
    pts = [sphere_point(u, v) for u, v in SPHERE_UV]
    pts[0] = tuple(Fraction(ra) * x for x in pts[0])
    pts[1] = tuple(Fraction(rb) * x for x in pts[1])
    return pts


def hexagon_loop(eps=Fraction(1, 20), turns=1) -> Trajectory:
    """Square loop in the (ra, rb) plane around the point where all six are co-spherical."""
    one = Fraction(1)
    corners = [(one + eps, one + eps), (one - eps, one + eps), (one - eps, one - eps), (one + eps, one - eps)]
    corners = corners * turns + [corners[0]]
    return Trajectory.through([six_on_sphere(a, b) for a, b in corners])


def contractible_loop(eps=Fraction(1, 20)) -> Trajectory:
    """Same square loop shifted so it no longer surrounds the co-spherical point."""
    one = Fraction(1)
    c = one + 3 * eps
    corners = [(c + eps, c + eps), (c - eps, c + eps), (c - eps, c - eps), (c + eps, c - eps), (c + eps, c + eps)]
    return Trajectory.through([six_on_sphere(a, b) for a, b in corners])


HULL6 = [(6, 2, 1), (-2, 2, 1), (1, 1, 2), (-1, 2, -1), (-8, -3, 2), (2, -2, 2)]


def wandering_point_loop(reach=Fraction(3, 5)) -> Trajectory:
    """Seven points: six fixed hull vertices and a seventh touring the inside.

    The tour visits the points a fraction ``reach`` of the way from the
    centroid to hull vertices 1, 3, 5, 2 and returns.
    """
    hull = [point(*p) for p in HULL6]
    cen = tuple(sum(p[k] for p in hull) / 6 for k in range(3))
    stops = [tuple(c + reach * (hull[i][k] - c) for k, c in enumerate(cen)) for i in (0, 2, 4, 1, 0)]
    return Trajectory.through([hull + [s] for s in stops])
