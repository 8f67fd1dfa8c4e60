"""Tracing Pachner moves along piecewise-linear motions of labeled points.

The tracer samples the motion, and every sample interval whose endpoint
Delaunay triangulations differ is bisected. A bracket is accepted as a flip
when its change is one bistellar move, the lifted determinant of the moving
d+2 labels changes sign, and no orientation among them does. A bracket
where only orientations change is a boundary event and emits no letter.
"""

from __future__ import annotations

import os
import random
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .delaunay import Configuration, Triangulation, delaunay
from .errors import (
    DegenerateEndpoint,
    DegenerateLift,
    DimensionMismatch,
    ExcludedConfiguration,
    NotSingleMove,
    RankDeficient,
    UnresolvedEvent,
)
from .exactgeom import lifted_sign, orientation, point
from .words import Letter, Word, letter

DEFAULT_RESOLUTION = Fraction(1, 2**32)
DEFAULT_SAMPLES = 32
_DEGENERATE = (DegenerateLift, ExcludedConfiguration, RankDeficient)
# where to probe inside a bracket, in order of preference
_PROBES = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(2, 5), Fraction(3, 5), Fraction(3, 7), Fraction(4, 7))


@dataclass(frozen=True)
class Trajectory:
    times: tuple
    paths: tuple  # paths[label - 1][breakpoint] is a point

    def __post_init__(self):
        times = tuple(Fraction(t) for t in self.times)
        paths = tuple(tuple(point(p) for p in path) for path in self.paths)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "paths", paths)
        if len(times) < 2 or times[0] != 0 or times[-1] != 1:
            raise DimensionMismatch("breakpoint times must run from 0 to 1")
        if any(a >= b for a, b in zip(times, times[1:])):
            raise DimensionMismatch("breakpoint times must increase strictly")
        if not paths or any(len(p) != len(times) for p in paths):
            raise DimensionMismatch("every path needs one point per breakpoint")
        for j in range(len(times)):
            Configuration(tuple(p[j] for p in paths))

    @classmethod
    def through(cls, configs: Sequence, times: Sequence | None = None) -> "Trajectory":
        """Piecewise-linear motion visiting the given point lists in order."""
        m = len(configs)
        if times is None:
            times = [Fraction(j, m - 1) for j in range(m)]
        pts = [c.points if isinstance(c, Configuration) else c for c in configs]
        n = len(pts[0])
        return cls(tuple(times), tuple(tuple(pts[j][i] for j in range(m)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.paths)

    @property
    def dim(self) -> int:
        return len(self.paths[0][0])

    @property
    def closed(self) -> bool:
        return all(p[0] == p[-1] for p in self.paths)

    def breakpoint(self, j: int) -> Configuration:
        return Configuration(tuple(p[j] for p in self.paths))


@dataclass(frozen=True)
class PachnerEvent:
    bracket: tuple
    letter: Letter | None
    kind: str = "flip"  # or "boundary"


def configuration_at(traj: Trajectory, t) -> Configuration:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DimensionMismatch("time outside [0, 1]")
    times = traj.times
    j = min(bisect_right(times, t) - 1, len(times) - 2)
    t0, t1 = times[j], times[j + 1]
    s = (t - t0) / (t1 - t0)
    pts = []
    for path in traj.paths:
        a, b = path[j], path[j + 1]
        pts.append(tuple(x + s * (y - x) for x, y in zip(a, b)))
    return Configuration(tuple(pts))


def triangulation_at(traj: Trajectory, t) -> Triangulation:
    return delaunay(configuration_at(traj, t))


def _bistellar(removed: frozenset, added: frozenset, d: int) -> Letter:
    support = frozenset().union(*removed, *added) if (removed or added) else frozenset()
    if len(support) != d + 2:
        raise NotSingleMove(f"changed simplices involve {len(support)} labels, not {d + 2}")
    P = {next(iter(support.difference(s))) for s in removed}
    Q = {next(iter(support.difference(s))) for s in added}
    if len(P) != len(removed) or len(Q) != len(added) or P & Q or len(P) + len(Q) != d + 2:
        raise NotSingleMove("changed simplices are not a bistellar pattern")
    if any(len(s) != d + 1 for s in removed | added):
        raise NotSingleMove("simplices of the wrong size")
    if len(P) < 2 or len(Q) < 2:
        raise NotSingleMove("one side of the move is a single vertex")
    return letter(P, Q)


def diff_move(T1: Triangulation, T2: Triangulation) -> Letter:
    """The single Pachner move a_{P,Q} turning T1 into T2."""
    if (T1.dim, T1.n) != (T2.dim, T2.n):
        raise DimensionMismatch("triangulations of different configurations")
    removed = T1.simplices - T2.simplices
    added = T2.simplices - T1.simplices
    if not removed and not added:
        raise NotSingleMove("triangulations are equal")
    return _bistellar(frozenset(removed), frozenset(added), T1.dim)


def _lifted(config: Configuration, U) -> int:
    return int(lifted_sign(config.coords(U)))


def _orient(config: Configuration, S) -> int:
    return int(orientation(config.coords(S)))


class _Tracer:
    def __init__(self, traj: Trajectory, resolution, refine: bool):
        self.traj = traj
        self.d = traj.dim
        self.resolution = Fraction(resolution)
        self.refine = refine

    def state(self, t):
        c = configuration_at(self.traj, t)
        return c, delaunay(c)

    def probe(self, lo, hi):
        for f in _PROBES:
            t = lo + f * (hi - lo)
            try:
                return (t, *self.state(t))
            except _DEGENERATE:
                continue
        return None

    def classify(self, a, b):
        """('flip', letter), ('boundary', None) or (None, None)."""
        (_, ca, Ta), (_, cb, Tb) = a, b
        removed = Ta.simplices - Tb.simplices
        added = Tb.simplices - Ta.simplices
        V = sorted(frozenset().union(*removed, *added))
        d = self.d
        lifted = [U for U in combinations(V, d + 2) if _lifted(ca, U) != _lifted(cb, U)]
        oriented = [S for S in combinations(V, d + 1) if _orient(ca, S) != _orient(cb, S)]
        if not lifted and oriented:
            return "boundary", None
        if len(lifted) == 1 and not oriented and len(V) == d + 2:
            try:
                return "flip", diff_move(Ta, Tb)
            except NotSingleMove:
                pass
        return None, None

    def split_simultaneous(self, a, b) -> list:
        """At minimal width: independent flips at one instant each explain
        their own part of the change. Emitted in lexicographic order."""
        (_, ca, Ta), (_, cb, Tb) = a, b
        removed = Ta.simplices - Tb.simplices
        added = Tb.simplices - Ta.simplices
        V = sorted(frozenset().union(*removed, *added))
        d = self.d
        if any(_orient(ca, S) != _orient(cb, S) for S in combinations(V, d + 1)):
            return []
        letters = []
        used_r, used_a = set(), set()
        for U in combinations(V, d + 2):
            if _lifted(ca, U) == _lifted(cb, U):
                continue
            sU = set(U)
            r = frozenset(s for s in removed if sU.issuperset(s))
            ad = frozenset(s for s in added if sU.issuperset(s))
            try:
                letters.append(_bistellar(r, ad, d))
            except NotSingleMove:
                return []
            if used_r & r or used_a & ad:
                return []
            used_r |= r
            used_a |= ad
        if used_r != removed or used_a != added:
            return []
        return sorted(letters, key=Letter.sort_key)

    def resolve(self, a, b) -> list:
        lo, hi = a[0], b[0]
        kind, l = self.classify(a, b)
        narrow = hi - lo < self.resolution
        if kind is not None and (narrow or not self.refine):
            return [PachnerEvent((lo, hi), l, kind)]
        if narrow:
            letters = self.split_simultaneous(a, b)
            if not letters:
                raise UnresolvedEvent((lo, hi))
            return [PachnerEvent((lo, hi), x, "flip") for x in letters]
        m = self.probe(lo, hi)
        if m is None:
            raise UnresolvedEvent((lo, hi), f"no generic time found in ({lo}, {hi})")
        out = []
        if m[2] != a[2]:
            out += self.resolve(a, m)
        if m[2] != b[2]:
            out += self.resolve(m, b)
        return out


def _sample_times(traj: Trajectory, samples: int) -> list:
    ts = {Fraction(j, samples) for j in range(samples + 1)}
    ts.update(traj.times)
    return sorted(ts)


def _threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    try:
        return max(1, int(os.environ.get("PACHNER_THREADS", "1")))
    except ValueError:
        return 1


def trace_events(
    traj: Trajectory,
    resolution=DEFAULT_RESOLUTION,
    samples: int = DEFAULT_SAMPLES,
    refine: bool = True,
    threads: int | None = None,
) -> list:
    tracer = _Tracer(traj, resolution, refine)
    ts = _sample_times(traj, samples)
    states = []
    for idx, t in enumerate(ts):
        try:
            states.append((t, *tracer.state(t)))
            continue
        except _DEGENERATE as exc:
            if t in (0, 1):
                raise DegenerateEndpoint(f"configuration at t={t} is degenerate: {exc}") from exc
        # nudge an unlucky sample towards its neighbours
        lo, hi = ts[idx - 1], ts[idx + 1]
        for f in (Fraction(1, 7), Fraction(-1, 7), Fraction(1, 11), Fraction(-1, 11), Fraction(1, 13)):
            s = t + f * ((hi - t) if f > 0 else (t - lo))
            try:
                states.append((s, *tracer.state(s)))
                break
            except _DEGENERATE:
                continue
        else:
            raise UnresolvedEvent((lo, hi), f"degenerate around t={t}")
    pairs = [(a, b) for a, b in zip(states, states[1:]) if a[2] != b[2]]
    n_threads = _threads(threads)
    if n_threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            chunks = list(pool.map(lambda ab: tracer.resolve(*ab), pairs))
    else:
        chunks = [tracer.resolve(a, b) for a, b in pairs]
    return [e for chunk in chunks for e in chunk]


def trace(
    traj: Trajectory,
    resolution=DEFAULT_RESOLUTION,
    samples: int = DEFAULT_SAMPLES,
    refine: bool = True,
    threads: int | None = None,
) -> Word:
    """The word of Pachner moves met along the motion, in time order."""
    events = trace_events(traj, resolution, samples, refine, threads)
    return tuple(e.letter for e in events if e.kind == "flip")


def reverse(traj: Trajectory) -> Trajectory:
    times = tuple(1 - t for t in reversed(traj.times))
    return Trajectory(times, tuple(tuple(reversed(p)) for p in traj.paths))


def concat(first: Trajectory, second: Trajectory) -> Trajectory:
    """first then second, each squeezed into half of [0, 1]."""
    if any(p[-1] != q[0] for p, q in zip(first.paths, second.paths)) or first.n != second.n:
        raise DimensionMismatch("paths are not composable")
    half = Fraction(1, 2)
    times = tuple(t * half for t in first.times) + tuple(half + t * half for t in second.times[1:])
    paths = tuple(p + q[1:] for p, q in zip(first.paths, second.paths))
    return Trajectory(times, paths)


def perturb(traj: Trajectory, seed: int, magnitude=Fraction(1, 10**4)) -> Trajectory:
    """Deterministic jitter of every breakpoint (endpoints of a loop stay equal)."""
    magnitude = Fraction(magnitude)
    if magnitude == 0:
        return traj
    rng = random.Random(seed)
    closed = traj.closed
    paths = []
    for path in traj.paths:
        new = [tuple(x + magnitude * Fraction(rng.randint(-1000, 1000), 1000) for x in p) for p in path]
        if closed:
            new[-1] = new[0]
        paths.append(tuple(new))
    return Trajectory(traj.times, tuple(paths))
