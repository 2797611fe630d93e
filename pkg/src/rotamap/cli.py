"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 unreadable input,
3 input that parses but is invalid.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import io
from .analysis import colouring_count, isomorphisms
from .errors import FormatError, RotamapError
from .export import export_drawing
from .faces import dart_label, euler, face_lines, trace_faces
from .graph import is_biconnected, is_connected
from .homotopy import default_length_cap, homotopic, sphericity_report
from .maps import count_map_classes, iter_maps, map_classes, map_count
from .synthesis import run_synthesis

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3
CAP_ENV = "ROTAMAP_LENGTH_CAP"


class Report:
    def __init__(self, stream):
        self.stream = stream

    def __call__(self, line: str = "") -> None:
        self.stream.write(line + "\n")


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _length_cap(args, g) -> int:
    if args.length_cap is not None:
        return args.length_cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise FormatError(f"{CAP_ENV}={env!r} is not an integer") from None
        if cap < 0:
            raise FormatError(f"{CAP_ENV} must be non-negative")
        return cap
    return default_length_cap(g)


def _load_pair(args):
    g = io.load_graph(args.graph)
    return g, io.load_map(args.map, g)


def cmd_info(args, out: Report) -> int:
    g = io.load_graph(args.graph)
    out(f"nodes={g.node_count} edges={g.edge_count} darts={g.dart_count}")
    out("degrees=" + " ".join(str(g.degree(x)) for x in g.nodes()))
    out(f"connected={_flag(is_connected(g))} biconnected={_flag(is_biconnected(g))}")
    out(f"maps={map_count(g)}")
    if args.map:
        m = io.load_map(args.map, g)
        out(f"faces={len(trace_faces(g, m))}")
    return EXIT_OK


def cmd_faces(args, out: Report) -> int:
    g, m = _load_pair(args)
    for line in face_lines(g, trace_faces(g, m)):
        out(line)
    return EXIT_OK


def _euler_lines(rep) -> list[str]:
    return [
        f"chi={rep.chi} genus={rep.genus} spherical={_flag(rep.spherical_by_euler)}",
        f"n={rep.nodes} e={rep.edges} f={rep.faces}",
    ]


def cmd_euler(args, out: Report) -> int:
    g, m = _load_pair(args)
    for line in _euler_lines(euler(g, m)):
        out(line)
    return EXIT_OK


def cmd_check_planar(args, out: Report) -> int:
    g, m = _load_pair(args)
    rep = euler(g, m)
    for line in _euler_lines(rep):
        out(line)
    ok = rep.spherical_by_euler
    if args.oracle:
        sph = sphericity_report(g, m, _length_cap(args, g))
        out(f"oracle={_flag(sph.spherical)} pairs={sph.pairs_checked}")
        if sph.failure:
            w1, w2, verdict = sph.failure
            out("witness " + _walk_text(g, w1) + " / " + _walk_text(g, w2))
        ok = ok and sph.spherical
    out("planar" if ok else "not planar")
    return EXIT_OK if ok else EXIT_NO


def cmd_enumerate_maps(args, out: Report) -> int:
    g = io.load_graph(args.graph)
    line = f"maps={map_count(g)}"
    if args.classes:
        line += f" classes={count_map_classes(g, not args.no_mirror)}"
    out(line)
    if args.list:
        for i, m in enumerate(iter_maps(g)):
            chi = euler(g, m).chi if is_connected(g) else "-"
            out(f"{i} chi={chi} {io.dumps_map(m)}")
    return EXIT_OK


def cmd_map_classes(args, out: Report) -> int:
    g = io.load_graph(args.graph)
    classes = map_classes(g, not args.no_mirror)
    out(f"classes={len(classes)}")
    for i, cls in enumerate(classes):
        rep = cls[0]
        chi = euler(g, rep).chi if is_connected(g) else "-"
        out(f"{i} size={len(cls)} chi={chi} {io.dumps_map(rep)}")
    return EXIT_OK


def cmd_iso(args, out: Report) -> int:
    g, h = io.load_graph(args.graph), io.load_graph(args.other)
    isos = isomorphisms(g, h)
    out(f"isomorphic={_flag(bool(isos))} count={len(isos)}")
    if isos and args.show:
        first = isos[0]
        out("nodes=" + " ".join(map(str, first.node_map)))
        out("edges=" + " ".join(map(str, first.edge_map)))
    return EXIT_OK if isos else EXIT_NO


def cmd_colour(args, out: Report) -> int:
    g = io.load_graph(args.graph)
    total, essential = colouring_count(g, args.colours)
    out(f"total={total} essential={essential}")
    return EXIT_OK


def _walk_text(g, w) -> str:
    if not w.darts:
        return f"<{w.start}>"
    return " ".join(dart_label(g, d) for d in w.darts)


def cmd_homotopy(args, out: Report) -> int:
    g, m = _load_pair(args)
    w1, w2 = io.load_walk(args.walk1, g), io.load_walk(args.walk2, g)
    verdict = homotopic(g, m, w1, w2, max(_length_cap(args, g), len(w1), len(w2)))
    line = f"related={verdict.related}"
    if verdict.witness is not None:
        line += f" steps={len(verdict.witness)}"
    if verdict.certified:
        line += " certified=true"
    out(line)
    for s in verdict.witness or ():
        direction = "ccw->cw" if s.to_cw else "cw->ccw"
        out(f"face={s.face} a={s.a} b={s.b} {direction} at={s.at}")
    return EXIT_OK if verdict else EXIT_NO


def cmd_synth(args, out: Report) -> int:
    base, steps = io.load_script(args.script)
    states = run_synthesis(base, steps)
    for i, st in enumerate(states):
        n, e, f = st.counts
        out(f"step {i}: n={n} e={e} f={f} chi={st.chi} outer={st.outer}")
    final = states[-1]
    if args.graph_out:
        io.save_graph(args.graph_out, final.graph)
    if args.map_out:
        io.save_map(args.map_out, final.map)
    return EXIT_OK


def cmd_export(args, out: Report) -> int:
    g, m = _load_pair(args)
    doc = export_drawing(g, m, trace_faces(g, m))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        out.stream.write(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotamap", description="Rotation systems, faces and planar synthesis.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, graph=True, map_=False):
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("graph")
        if map_:
            sp.add_argument("map")
        sp.set_defaults(fn=fn)
        return sp

    sp = verb("info", cmd_info, "summary of a graph (and optionally a map)")
    sp.add_argument("map", nargs="?")
    verb("faces", cmd_faces, "trace and print faces", map_=True)
    verb("euler", cmd_euler, "Euler characteristic and genus", map_=True)
    sp = verb("check-planar", cmd_check_planar, "exit 0 iff the map is spherical", map_=True)
    sp.add_argument("--oracle", action="store_true", help="also run the homotopy oracle")
    sp.add_argument("--length-cap", type=int)
    sp = verb("enumerate-maps", cmd_enumerate_maps, "count (and list) rotation systems")
    sp.add_argument("--classes", action="store_true")
    sp.add_argument("--no-mirror", action="store_true", help="do not identify mirror images")
    sp.add_argument("--list", action="store_true")
    sp = verb("map-classes", cmd_map_classes, "maps up to automorphism")
    sp.add_argument("--no-mirror", action="store_true")
    sp = verb("iso", cmd_iso, "isomorphisms between two graphs")
    sp.add_argument("other")
    sp.add_argument("--show", action="store_true", help="print the first isomorphism")
    sp = verb("colour", cmd_colour, "count n-colourings")
    sp.add_argument("colours", type=int)
    sp = verb("homotopy", cmd_homotopy, "search for a homotopy between two walks", map_=True)
    sp.add_argument("walk1")
    sp.add_argument("walk2")
    sp.add_argument("--length-cap", type=int)
    sp = verb("synth", cmd_synth, "run a synthesis script", graph=False)
    sp.add_argument("script")
    sp.add_argument("--graph-out")
    sp.add_argument("--map-out")
    sp = verb("export", cmd_export, "dot drawing of an embedding", map_=True)
    sp.add_argument("-o", "--output")
    return p


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.fn(args, Report(stdout))
    except FormatError as exc:
        stderr.write(f"rotamap: {exc}\n")
        return EXIT_PARSE
    except (RotamapError, ValueError) as exc:
        stderr.write(f"rotamap: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
