"""Command-line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import dimacs
from .chromatic import DEFAULT_CAP, ResourceError, clique_cover_number
from .criticality import CONTRACT, EDGE, VERTEX, criticality_report
from .dispatch import chi
from .graph import GraphError, complement
from .hfree import EXPLANATION, PATTERNS, classify_h, is_h_free
from .reductions import (
    FormulaError,
    build_clique_proof_instance,
    build_edge_gadget,
    build_grotzsch_instance,
    build_vertex_gadget,
    oracle_1in3,
    parse_formula,
    random_formula,
)
from .verify import SCHEMA, SUITES, run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _default_seed() -> int:
    return int(os.environ.get("M1IN3_SEED", "0"))


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print(text)


def _graph(path: str):
    return dimacs.read(path)


def cmd_chi(args) -> int:
    g = _graph(args.file)
    res = chi(g, args.cap)
    payload = {"chi": res.chi, "method": res.method.value}
    text = f"chi={res.chi} method={res.method.value}"
    if args.certificate:
        payload["coloring"] = list(res.coloring)
        text += "\n" + " ".join(f"{v + 1}:{c}" for v, c in enumerate(res.coloring))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sigma(args) -> int:
    g = _graph(args.file)
    sigma, cover = clique_cover_number(g, args.cap)
    cliques = [[v + 1 for v in k] for k in cover.cliques]
    text = f"sigma={sigma}\n" + "\n".join(" ".join(map(str, k)) for k in cliques)
    _emit(args, {"sigma": sigma, "cover": cliques}, text)
    return EXIT_OK


def cmd_critical(args) -> int:
    g = _graph(args.file)
    if args.all or not (args.vertices or args.edges or args.contraction):
        kinds = (VERTEX, EDGE, CONTRACT)
    else:
        kinds = tuple(k for k, on in ((VERTEX, args.vertices), (EDGE, args.edges), (CONTRACT, args.contraction)) if on)
    rep = criticality_report(
        g, kinds, exists=args.exists, witnesses=args.witnesses, assume_prop1=args.assume_prop1, jobs=args.jobs, cap=args.cap
    )
    payload = rep.to_dict()
    if args.witnesses:
        payload["witnesses"] = [
            {"kind": op, "element": el if isinstance(el, int) else [el.u, el.v], "coloring": list(w)}
            for (op, el), w in sorted(rep.witnesses.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))
        ]
    lines = [f"chi={rep.chi}"]
    for title, vals in (
        ("critical vertices", rep.critical_vertices),
        ("critical edges", rep.critical_edges),
        ("contraction-critical edges", rep.contraction_critical_edges),
    ):
        if vals is None:
            continue
        items = sorted(vals, key=lambda x: (x,) if isinstance(x, int) else (x.u, x.v))
        shown = " ".join(str(x + 1) if isinstance(x, int) else f"{x.u + 1}-{x.v + 1}" for x in items)
        if args.exists:
            lines.append(f"{title}: {'yes' if vals else 'no'} {shown}".rstrip())
        else:
            lines.append(f"{title} ({len(vals)}): {shown}".rstrip())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    path = args.h or args.file
    if path is None:
        raise ValueError("classify: give a pattern file (positional or --h)")
    res = classify_h(_graph(path))
    _emit(args, {"verdict": res.verdict.value, "rule": res.rule.value, "reason": EXPLANATION[res.rule]}, str(res))
    return EXIT_OK


def _pattern(name: str):
    if name in PATTERNS:
        return name, PATTERNS[name]
    return Path(name).stem, _graph(name)


def cmd_hfree(args) -> int:
    path = args.g or args.file
    if path is None or not args.patterns:
        raise ValueError("hfree: need --g <file> and --patterns <file|name,...>")
    g = _graph(path)
    pats = dict(_pattern(p.strip()) for p in args.patterns.split(",") if p.strip())
    rep = is_h_free(g, pats)
    lines = []
    for e in rep.entries:
        if e.present:
            lines.append(f"{e.name}: present at {' '.join(str(e.witness[p] + 1) for p in sorted(e.witness))}")
        else:
            lines.append(f"{e.name}: absent")
    lines.append("free" if rep.free else "not free")
    _emit(args, rep.to_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "formula":
        seed = _default_seed() if args.seed is None else args.seed
        text = f"# random_formula(n={args.n}, seed={seed})\n" + random_formula(args.n, seed).to_text()
        return _write(args, text)
    if args.kind == "clique-proof":
        out = build_clique_proof_instance(_graph(args.g), args.ell)
        comment = f"2G+K_{args.ell + 1} from {args.g}"
    elif args.kind == "grotzsch":
        out = build_grotzsch_instance(_graph(args.g))
        comment = f"2G+Grotzsch from {args.g}"
    else:
        f = parse_formula(Path(args.f).read_text())
        gg = build_vertex_gadget(f) if args.kind == "sat-vertex" else build_edge_gadget(f)
        out = gg.graph
        comment = f"{gg.variant.value} gadget from {args.f}"
    if args.complement:
        out = complement(out)
        comment += " (complement)"
    return _write(args, dimacs.dumps(out, comment))


def _write(args, text: str) -> int:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    f = parse_formula(Path(args.f).read_text())
    a = oracle_1in3(f)
    payload = {"n": f.n, "one_satisfiable": a is not None, "assignment": None if a is None else [int(x) for x in a]}
    if a is None:
        text = "not 1-satisfiable"
    else:
        text = "1-satisfiable: true variables " + " ".join(str(x + 1) for x in range(f.n) if a[x])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    replay = " ".join(["chromcrit", *sys.argv[1:]]) if sys.argv[1:2] == ["verify"] else None
    rep = run_suite(
        args.suite, seed=seed, samples=args.samples, n=args.n, max_n=args.max_n, jobs=args.jobs, out_dir=args.out, replay=replay
    )
    body = rep.to_dict(deterministic=args.deterministic)
    body.pop("schema")
    status = "PASS" if rep.ok else "FAIL"
    text = f"{status} {rep.suite}: {rep.passed}/{rep.run} passed (seed={seed})"
    if not args.deterministic:
        text += f" in {rep.wall_time:.1f}s"
    if rep.counterexamples:
        text += "\ncounterexamples:\n  " + "\n  ".join(rep.counterexamples)
    _emit(args, body, text)
    return EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromcrit", description="Critical vertices and edges for graph colouring.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json_flag=True, cap=True):
        if json_flag:
            sp.add_argument("--json", action="store_true", help="JSON output")
        if cap:
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex cap for exact search")

    sp = sub.add_parser("chi", help="chromatic number")
    sp.add_argument("file")
    sp.add_argument("--certificate", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("sigma", help="clique cover number")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("critical", help="critical vertices / edges / contraction-critical edges")
    sp.add_argument("file")
    for flag in ("--vertices", "--edges", "--contraction", "--all"):
        sp.add_argument(flag, action="store_true")
    sp.add_argument("--exists", action="store_true", help="stop at the first critical element of each kind")
    sp.add_argument("--witnesses", action="store_true", help="report a colouring of each reduced graph")
    sp.add_argument("--assume-prop1", action="store_true", help="reuse critical edges as contraction-critical edges")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("classify", help="complexity of the problems on H-free graphs")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--h")
    common(sp, cap=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("hfree", help="check a graph for forbidden induced subgraphs")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--g")
    sp.add_argument("--patterns", help=f"comma-separated files or names ({', '.join(PATTERNS)})")
    common(sp, cap=False)
    sp.set_defaults(func=cmd_hfree)

    sp = sub.add_parser("gen", help="build reduction instances")
    sp.add_argument("kind", choices=("clique-proof", "grotzsch", "sat-vertex", "sat-edge", "formula"))
    sp.add_argument("--g")
    sp.add_argument("--ell", type=int, default=3)
    sp.add_argument("--f")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--complement", action="store_true", help="emit the complement (target-class instance)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("oracle", help="brute-force Monotone 1-in-3-SAT")
    sp.add_argument("--f", required=True)
    common(sp, cap=False)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--n", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="directory for counterexample files")
    sp.add_argument("--deterministic", action="store_true", help="omit timings and timestamps")
    common(sp, cap=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        need = {"clique-proof": "g", "grotzsch": "g", "sat-vertex": "f", "sat-edge": "f"}.get(args.kind)
        if need and getattr(args, need) is None:
            parser.error(f"gen {args.kind} needs --{need}")
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphError, FormulaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
