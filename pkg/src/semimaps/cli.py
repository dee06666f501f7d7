"""Command-line front end: ``semimaps <command> ...``.

Exit codes: 0 success, 1 a verification failure (``verify-paper``),
2 bad input.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import catalog
from .automorphism import automorphism_group, face_orbits, vertex_orbits
from .classify import TypeString, classify, face_cycle_type
from .enumerator import admissible_types
from .errors import MapValidationError, SemimapsError
from .polymap import dual, parse_map, read_map, write_map
from .proof_graphs import auxiliary_graph, cycles, transitivity_obstruction
from .tilings import LatticeBasis, torus_quotient

_CATALOG_PATH = re.compile(r"^(?:.*[/\\])?catalog[/\\](\w+)\.map$|^(\w+)$")


class InputError(Exception):
    pass


def load_map(path: str):
    """Read a map file; ``catalog/T5.map`` or ``T5`` fall back to bundled data."""
    p = Path(path)
    if p.is_file():
        return read_map(p)
    m = _CATALOG_PATH.match(path)
    if m:
        name = m.group(1) or m.group(2)
        if name.upper() in catalog.NAMES:
            return parse_map(catalog.map_text(name))
    raise InputError(f"cannot read {path}: no such file")


def _labels(m, vs) -> str:
    return " ".join(m.label(v) for v in vs)


def cmd_classify(args, out):
    m = load_map(args.path)
    c = classify(m)
    if c.semi_equivelar:
        print(c.type, file=out)
    else:
        u, v = c.witness
        print(f"not semi-equivelar: {m.label(u)} {face_cycle_type(m, u)} vs "
              f"{m.label(v)} {face_cycle_type(m, v)}", file=out)
    return 0


def cmd_orbits(args, out):
    m = load_map(args.path)
    vo, fo = vertex_orbits(m), face_orbits(m)
    print(f"automorphisms: {len(automorphism_group(m))}", file=out)
    print(f"vertex-orbits: {len(vo)} ({'transitive' if len(vo) == 1 else 'not transitive'})", file=out)
    for orb in vo:
        print(f"  [{len(orb)}] {_labels(m, orb)}", file=out)
    print(f"face-orbits: {len(fo)} ({'transitive' if len(fo) == 1 else 'not transitive'})", file=out)
    for orb in fo:
        print(f"  [{len(orb)}] {len(m.faces[orb[0]])}-gons", file=out)
    return 0


def cmd_enumerate(args, out):
    for t in admissible_types(args.surface):
        print(t, file=out)
    return 0


def cmd_generate(args, out):
    a1, a2, b1, b2 = args.basis
    m = torus_quotient(TypeString.parse(args.tiling), LatticeBasis((a1, a2), (b1, b2)))
    write_map(m, args.out)
    print(f"wrote {args.out}: {m.f0} vertices, {m.f2} faces", file=out)
    return 0


def cmd_dual(args, out):
    m = load_map(args.input)
    d = dual(m)
    write_map(d, args.output)
    print(f"wrote {args.output}: {d.f0} vertices, {d.f2} faces", file=out)
    return 0


def cmd_aux_graph(args, out):
    m = load_map(args.map)
    g = auxiliary_graph(m, args.selector)
    print(f"selector: {args.selector}", file=out)
    print(f"edges: {len(g.edges)}", file=out)
    try:
        comps = cycles(g)
    except SemimapsError:
        comps = None
    if comps is None:
        degs = sorted({g.degree(v) for v in m.vertices})
        print(f"components: not 2-regular (degrees {' '.join(map(str, degs))})", file=out)
    else:
        print("components: " + " ".join(f"C{len(c)}" for c in sorted(comps, key=lambda c: (len(c), c))),
              file=out)
        for c in sorted(comps, key=lambda c: (len(c), c)):
            print(f"  C{len(c)}: {_labels(m, c)}", file=out)
    w = transitivity_obstruction(m, args.selector)
    if w is None:
        print("obstruction: none", file=out)
    else:
        print("obstruction:", file=out)
        for line in w.render(m).splitlines():
            print(f"  {line}", file=out)
    return 0


def cmd_verify_paper(args, out):
    from .verify import run_all
    rep = run_all()
    print(rep.to_json() if args.json else rep.render(), file=out)
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semimaps", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="face-cycle type of a map")
    s.add_argument("path")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("orbits", help="vertex and face orbits under the automorphism group")
    s.add_argument("path")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("enumerate", help="admissible types on a surface")
    s.add_argument("--surface", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("generate", help="torus quotient of a tiling")
    s.add_argument("--tiling", required=True)
    s.add_argument("--basis", required=True, nargs=4, type=int, metavar=("A1", "A2", "B1", "B2"))
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("dual", help="write the dual map")
    s.add_argument("input")
    s.add_argument("output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("aux-graph", help="auxiliary graph components and obstruction")
    s.add_argument("--map", required=True)
    s.add_argument("--selector", required=True)
    s.set_defaults(func=cmd_aux_graph)

    s = sub.add_parser("verify-paper", help="run every published-claim check")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except MapValidationError as exc:
        print(f"error: {exc} [invariant: {exc.invariant}]", file=sys.stderr)
    except SemimapsError as exc:
        inv = getattr(exc, "invariant", None)
        print(f"error: {exc}" + (f" [invariant: {inv}]" if inv else ""), file=sys.stderr)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
