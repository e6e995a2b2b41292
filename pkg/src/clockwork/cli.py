"""Command-line front end, run as ``python3 -m clockwork``.

Exit codes: 0 success, 1 unreadable or malformed input, 2 an internal
invariant failed (the witness is printed), 3 a requested check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .alexander import alexander_matrix
from .diagram import DiagramError, load_diagram, parse_diagram
from .polyring import rat_eq
from .potential import Coloring, colored_potential
from .states import adjacent_star_pairs, clock_graph, clocked_state, counter_clocked_state, star_pair_for_arc
from .statesum import FORMAL, LINKVARS, SCHEMES
from .verify import families as fam
from .verify.checks import CHECK_NAMES, run_checks

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_CHECK = 0, 1, 2, 3


class InvariantViolation(RuntimeError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def corpus_files() -> list:
    root = resources.files("clockwork") / "corpus"
    return sorted((p for p in root.iterdir() if p.name.endswith(".pd")), key=lambda p: p.name)


def _expand(paths) -> list:
    out = []
    for p in paths:
        p = Path(p)
        out.extend(sorted(p.glob("*.pd")) if p.is_dir() else [p])
    return out


def parse_color_map(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        k, sep, label = item.partition("=")
        if not sep or not label.strip():
            raise DiagramError(f"bad --color-map entry {item!r}; expected k=label")
        out[int(k)] = label.strip()
    return out


def _stars(d, arc):
    if arc is None:
        return None
    if arc not in d.arc_component:
        raise DiagramError(f"--stars: no arc {arc}")
    return star_pair_for_arc(d, arc)


def cmd_compute(args, out) -> int:
    d = load_diagram(args.file)
    mapping = parse_color_map(args.color_map)
    unknown = set(mapping) - set(d.colors)
    if unknown:
        raise DiagramError(f"--color-map names unknown components {sorted(unknown)}")
    coloring = Coloring.of(d, mapping)
    value = colored_potential(d, coloring, _stars(d, args.stars))
    if d.connected:
        for sp in adjacent_star_pairs(d):
            other = colored_potential(d, coloring, sp)
            if not rat_eq(value, other):
                raise InvariantViolation("potential depends on the star pair",
                                         {"stars": list(sp.regions), "value": str(other), "reference": str(value)})
    if args.json:
        out.write(json.dumps(value.to_json_obj(), sort_keys=True) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_states(args, out) -> int:
    d = load_diagram(args.file)
    sp = _stars(d, args.stars) or adjacent_star_pairs(d)[0]
    g = clock_graph(d, sp)
    if args.dot:
        out.write(g.to_dot(d.name))
        return EXIT_OK
    src, snk = g.sources(), g.sinks()
    if len(src) != 1 or len(snk) != 1:
        raise InvariantViolation("clock graph does not have a unique source and sink", g.to_json_obj())
    if args.json:
        obj = g.to_json_obj()
        obj["stars"] = list(sp.regions)
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    n = len(g.nodes)
    word = "state" if n == 1 else "states"
    clocked, counter = clocked_state(d, sp), counter_clocked_state(d, sp)
    out.write(f"{n} {word}; source={clocked.key() or '-'}; sink={counter.key() or '-'}\n")
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    d = load_diagram(args.file)
    A = alexander_matrix(d, SCHEMES[args.scheme])
    if args.json:
        out.write(A.to_json() + "\n")
        return EXIT_OK
    out.write(f"{d.name}: {len(A.rows)} x {len(A.cols)} ({A.scheme}); columns are regions {list(A.cols)}\n")
    for cid, row in zip(A.rows, A.entries):
        out.write(f"v{cid}: " + " | ".join(str(e) for e in row) + "\n")
    return EXIT_OK


def _axiom_iii_report() -> dict:
    rows = []
    for ctx in ([], [1, 1], [-2, -2]):
        r = fam.check_axiom(fam.build_skein_family(None, ctx, fam.AXIOM_III))
        rows.append({"context": ctx, "sum": str(r.lhs), "pass": r.passed})
    return {"check": "axiom-iii", "pass": all(r["pass"] for r in rows), "families": rows}


def cmd_verify(args, out) -> int:
    paths = _expand(args.files) if args.files else corpus_files()
    diagrams = [load_diagram(p) for p in paths]
    checks = CHECK_NAMES if args.checks in (None, "all") else tuple(c.strip() for c in args.checks.split(","))
    bad = [c for c in checks if c not in CHECK_NAMES]
    if bad:
        raise DiagramError(f"unknown checks {bad}; choose from {', '.join(CHECK_NAMES)} or all")
    rep = run_checks(diagrams, checks)
    obj = rep.to_json_obj()
    if "axioms" in checks:
        extra = _axiom_iii_report()
        obj["axiom_iii"] = extra
        obj["pass"] = obj["pass"] and extra["pass"]
    if args.json:
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        for name, rs in obj["diagrams"].items():
            for r in rs:
                status = "skip" if r.get("skipped") else ("pass" if r["pass"] else "FAIL")
                out.write(f"{name:16s} {r['check']:10s} {status} ({r['count']})\n")
                if "witness" in r:
                    out.write(f"    witness: {json.dumps(r['witness'], sort_keys=True)}\n")
        if "axiom_iii" in obj:
            for row in obj["axiom_iii"]["families"]:
                out.write(f"axiom-iii context {row['context']}: seven-term sum = {row['sum']}\n")
        out.write("all checks passed\n" if obj["pass"] else "some checks FAILED\n")
    return EXIT_OK if obj["pass"] else EXIT_CHECK


def cmd_corpus(args, out) -> int:
    files = corpus_files()
    if args.dest:
        dest = Path(args.dest)
        dest.mkdir(parents=True, exist_ok=True)
        for p in files:
            (dest / p.name).write_text(p.read_text())
    for p in files:
        d = parse_diagram(p.read_text())
        out.write(f"{p.name:22s} {d.n:2d} crossings  {d.n_components} components\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clockwork", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print the potential function")
    p.add_argument("file")
    p.add_argument("--color-map", help="recolor components, e.g. 1=a,2=a")
    p.add_argument("--stars", type=int, metavar="ARC", help="star the two regions beside this arc")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("states", help="states and the clock graph")
    p.add_argument("file")
    p.add_argument("--stars", type=int, metavar="ARC")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("matrix", help="Alexander matrix")
    p.add_argument("file")
    p.add_argument("scheme", nargs="?", default=LINKVARS, choices=sorted(SCHEMES), help=f"default {LINKVARS}; {FORMAL} uses formal corner variables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("files", nargs="*", help="PD files or directories (default: the shipped corpus)")
    p.add_argument("--checks", help="all or a comma list of " + ",".join(CHECK_NAMES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list the shipped corpus, optionally copying it out")
    p.add_argument("dest", nargs="?")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantViolation as e:
        sys.stderr.write(f"invariant violation: {e}\n{json.dumps(e.witness, sort_keys=True)}\n")
        return EXIT_INVARIANT
    except (DiagramError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
