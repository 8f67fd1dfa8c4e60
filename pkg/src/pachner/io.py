"""Text and JSON formats.

Rationals are written as ``"p/q"`` (or ``"p"``). Words are space-separated
letters ``a[1,2|3,4,5]`` with an optional ``^-1``; oriented letters add a
twist suffix, ``a[1,2|3,4,5;+]`` or ``;-``, relative to the sorted orders.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadArity
from .linalg import to_fraction
from .words import Letter, letter, sequence_twist


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    return to_fraction(s)


def _labels(xs: Iterable[int]) -> str:
    return ",".join(str(x) for x in sorted(xs))


def format_letter(l: Letter) -> str:
    body = f"{_labels(l.P)}|{_labels(l.Q)}"
    if l.twist is not None:
        body += ";" + ("-" if l.twist else "+")
    return f"a[{body}]" + ("^-1" if l.exponent == -1 else "")


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(format_letter(l) for l in w)


_LETTER = re.compile(r"a\[\s*([\d,\s]+)\|([\d,\s]+?)\s*(?:;\s*([+\-]{1,2}))?\s*\](\^-1|\^\{-1\}|\^1)?")


def parse_word(text: str, oriented: bool = False, two_sets: bool = True) -> tuple:
    """Parse the word text format.

    For oriented words without a suffix, the written orders define the twist;
    ``two_sets`` says whether the order of a 2-element side counts.
    """
    text = text.strip()
    out = []
    pos = 0
    for m in _LETTER.finditer(text):
        if text[pos:m.start()].strip():
            raise BadArity(f"cannot parse {text[pos:m.start()]!r}")
        pos = m.end()
        P = [int(x) for x in m.group(1).split(",") if x.strip()]
        Q = [int(x) for x in m.group(2).split(",") if x.strip()]
        exp = -1 if m.group(4) in ("^-1", "^{-1}") else 1
        twist = None
        if oriented:
            twist = sequence_twist(P, Q, two_sets)
            if m.group(3):
                twist ^= m.group(3).count("-") & 1
        elif m.group(3):
            twist = m.group(3).count("-") & 1
        out.append(letter(P, Q, exp, twist))
    if text[pos:].strip():
        raise BadArity(f"cannot parse {text[pos:]!r}")
    return tuple(out)


# -- JSON ------------------------------------------------------------------


def config_to_dict(config) -> dict:
    return {"dim": config.dim, "points": [[format_rational(c) for c in p] for p in config.points]}


def config_from_dict(data: dict):
    from .delaunay import Configuration

    pts = [tuple(parse_rational(c) for c in p) for p in data["points"]]
    if "dim" in data and any(len(p) != data["dim"] for p in pts):
        raise BadArity("point dimension disagrees with 'dim'")
    return Configuration(tuple(pts))


def triangulation_to_dict(tri) -> dict:
    return {"simplices": [list(s) for s in tri.sorted()]}


def triangulation_from_dict(data: dict, dim: int, n: int):
    from .delaunay import Triangulation

    return Triangulation(dim, n, frozenset(tuple(s) for s in data["simplices"]))


def trajectory_to_dict(traj) -> dict:
    return {
        "dim": traj.dim,
        "closed": traj.closed,
        "times": [format_rational(t) for t in traj.times],
        "paths": [[[format_rational(c) for c in p] for p in path] for path in traj.paths],
    }


def trajectory_from_dict(data: dict):
    from .dynamics import Trajectory

    times = tuple(parse_rational(t) for t in data["times"])
    paths = tuple(tuple(tuple(parse_rational(c) for c in p) for p in path) for path in data["paths"])
    traj = Trajectory(times, paths)
    if "closed" in data and bool(data["closed"]) != traj.closed:
        raise BadArity("'closed' flag disagrees with the endpoint positions")
    return traj


def diagram_to_dict(D) -> dict:
    return {"order": D.order, "slots": list(D.slots)}


def diagram_from_dict(data: dict):
    from .gale import StandardGaleDiagram

    return StandardGaleDiagram(int(data["order"]), tuple(int(s) for s in data["slots"]))


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dump_json(data, path: str | None = None) -> str:
    text = json.dumps(data, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
