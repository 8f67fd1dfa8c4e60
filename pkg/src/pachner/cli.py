"""Command-line front end.

Exit codes: 0 success, 2 geometric degeneracy, 3 unresolved event, 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dynamics, flipgraph, gale, groups, io
from .delaunay import delaunay, is_delaunay
from .errors import (
    DegenerateEndpoint,
    DegenerateLift,
    DegenerateSimplex,
    ExcludedConfiguration,
    PachnerError,
    UnresolvedEvent,
)

EXIT_OK, EXIT_DEGENERATE, EXIT_UNRESOLVED, EXIT_BAD_INPUT = 0, 2, 3, 4


def _out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_delaunay(args) -> int:
    config = io.config_from_dict(io.load_json(args.config))
    tri = delaunay(config)
    data = io.triangulation_to_dict(tri)
    data["verified"] = is_delaunay(config, tri)
    _out(json.dumps(data), args.output)
    return EXIT_OK


def _ab_report(word, n: int, d: int) -> str:
    if not word:
        return "0"
    pres = groups.presentation(n, d + 2)
    return "0" if pres.ab_basis().contains(pres.ab_row(word)) else "nonzero"


def cmd_trace(args) -> int:
    traj = io.trajectory_from_dict(io.load_json(args.trajectory))
    events = dynamics.trace_events(traj, Fraction(args.resolution), args.samples)
    word = tuple(e.letter for e in events if e.kind == "flip")
    lines = [io.format_word(word)]
    if args.events:
        for e in events:
            lo, hi = e.bracket
            what = io.format_letter(e.letter) if e.letter else "boundary"
            lines.append(f"# {io.format_rational(lo)} {io.format_rational(hi)} {what}")
    if args.check:
        chain = groups.psi(word, traj.n, traj.dim)
        shown = "0" if chain.is_zero() else " ".join("".join(map(str, s)) for s in sorted(chain.support))
        lines.append(f"psi={shown}")
        lines.append(f"ab={_ab_report(word, traj.n, traj.dim)}")
    _out("\n".join(lines), args.output)
    return EXIT_OK


def _labels(text: str) -> tuple:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x)


def cmd_gale(args) -> int:
    if args.action == "transform":
        config = io.config_from_dict(io.load_json(args.config))
        gv = gale.gale_transform(config)
        diagram = gale.gale_diagram(gv)
        data = {
            "B": [[io.format_rational(x) for x in row] for row in gv.rows],
            "directions": [list(v) for v in diagram.directions],
        }
        _out(json.dumps(data), args.output)
    elif args.action == "diagrams":
        ds = gale.enumerate_standard_diagrams(args.order)
        data = {
            "order": args.order,
            "count": len(ds),
            "formula": gale.count_standard_diagrams(args.order),
            "diagrams": [io.diagram_to_dict(D) for D in ds],
        }
        _out(json.dumps(data), args.output)
    else:
        ds = gale.enumerate_standard_diagrams(args.order)
        labels = _labels(args.labels) if args.labels else tuple(range(1, args.order + 1))
        chosen = range(len(ds)) if args.index is None else [args.index]
        lines = [io.format_word(gale.relation_word(ds[t], labels)) for t in chosen]
        _out("\n".join(lines), args.output)
    return EXIT_OK


def _presentation(args):
    flavor = "oriented" if args.oriented else "plain"
    return groups.presentation(args.n, args.k, flavor, args.policy, getattr(args, "involutive", False))


def cmd_group(args) -> int:
    pres = _presentation(args)
    if args.action == "presentation":
        lines = [f"# generators {len(pres.generators)}"]
        lines += [io.format_letter(g) for g in pres.generators]
        relators = list(pres.gon_relators())
        lines.append(f"# gon relators {len(relators)}")
        lines += [io.format_word(r) for r in relators]
        if args.far:
            far = list(pres.far_relators())
            lines.append(f"# far commutativity relators {len(far)}")
            lines += [io.format_word(r) for r in far]
        extra = list(pres.extra_relators())
        if extra:
            lines.append(f"# involutive relators {len(extra)}")
            lines += [io.format_word(r) for r in extra]
        _out("\n".join(lines), args.output)
    elif args.action == "abrank":
        basis = pres.ab_basis()
        count = pres.count_gon_relators()
        _out(f"generators={len(pres.generators)} relators={count} rank={basis.rank}", args.output)
    else:
        text = args.word
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        w = io.parse_word(text, oriented=args.oriented, two_sets=(args.policy == "chirality"))
        basis = pres.ab_basis()
        before = basis.rank
        basis.add(pres.ab_row(w))
        after = basis.rank
        verdict = "nontrivial" if after > before else "trivial in the Z2 abelianization"
        _out(f"{verdict} (rank {before}->{after})", args.output)
    return EXIT_OK


def cmd_flipgraph(args) -> int:
    if args.polygon:
        config = flipgraph.convex_polygon(args.polygon)
    elif args.config:
        config = io.config_from_dict(io.load_json(args.config))
    else:
        raise ValueError("give a configuration file or --polygon N")
    graph = flipgraph.flip_graph(config)
    verified = flipgraph.verify_embedding(graph) if args.verify else None
    if args.dot:
        text = flipgraph.to_dot(graph)
        if verified is not None:
            text += f"// embedding verified: {str(verified).lower()}\n"
    else:
        data = flipgraph.to_dict(graph)
        if verified is not None:
            data["verified"] = verified
        text = json.dumps(data)
    _out(text.rstrip("\n"), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pachner", description="Exact Delaunay dynamics and triangulation groups")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("delaunay", help="Delaunay triangulation of a configuration file")
    d.add_argument("config")
    d.set_defaults(func=cmd_delaunay)

    t = sub.add_parser("trace", help="word of Pachner moves along a trajectory file")
    t.add_argument("trajectory")
    t.add_argument("--resolution", default=str(dynamics.DEFAULT_RESOLUTION))
    t.add_argument("--samples", type=int, default=dynamics.DEFAULT_SAMPLES)
    t.add_argument("--check", action="store_true", help="also print the psi and Z2-abelianized images")
    t.add_argument("--events", action="store_true", help="list event brackets")
    t.set_defaults(func=cmd_trace)

    g = sub.add_parser("gale", help="Gale transforms and standard diagrams")
    gs = g.add_subparsers(dest="action", required=True)
    gt = gs.add_parser("transform")
    gt.add_argument("config")
    gd = gs.add_parser("diagrams")
    gd.add_argument("--order", type=int, required=True)
    gr = gs.add_parser("relation")
    gr.add_argument("--order", type=int, required=True)
    gr.add_argument("--labels", help="comma-separated labels m_1..m_l")
    gr.add_argument("--index", type=int, help="only the diagram with this enumeration index")
    g.set_defaults(func=cmd_gale)

    gp = sub.add_parser("group", help="presentations and Z2 abelianization")
    gps = gp.add_subparsers(dest="action", required=True)
    for name in ("presentation", "abrank", "check-word"):
        s = gps.add_parser(name)
        s.add_argument("-n", type=int, required=True)
        s.add_argument("-k", type=int, required=True)
        s.add_argument("--oriented", action="store_true")
        s.add_argument("--policy", choices=groups.POLICIES, default=groups.DEFAULT_POLICY)
        if name == "presentation":
            s.add_argument("--far", action="store_true", help="list far-commutativity relators too")
            s.add_argument("--involutive", action="store_true", help="add the a^2 = 1 pack")
        if name == "check-word":
            s.add_argument("word", help="word text, or @file")
    gp.set_defaults(func=cmd_group)

    f = sub.add_parser("flipgraph", help="flip graph of a planar convex configuration")
    f.add_argument("config", nargs="?")
    f.add_argument("--polygon", type=int, help="use the convex n-gon (i, i^2)")
    f.add_argument("--dot", action="store_true")
    f.add_argument("--verify", action="store_true")
    f.set_defaults(func=cmd_flipgraph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateLift, ExcludedConfiguration, DegenerateEndpoint, DegenerateSimplex) as exc:
        labels = getattr(exc, "labels", None)
        print(f"degenerate: {exc}" + (f" labels={list(labels)}" if labels else ""), file=sys.stderr)
        return EXIT_DEGENERATE
    except UnresolvedEvent as exc:
        lo, hi = exc.bracket
        print(f"unresolved event in [{io.format_rational(lo)}, {io.format_rational(hi)}]: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    except (PachnerError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError, ZeroDivisionError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
