"""Command-line interface: ``frobcluster <command> --type A --rank 3 ...``.

Exit status is 0 on success (PASS), 1 on a failed verification and 2 on usage
errors.  JSON output carries a top-level ``schema`` field and is written with
sorted keys so identical runs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .categorify import label_orbit_quiver, verify_main_theorem
from .clusteralg import BudgetExceeded, exchange_graph, relation_sequence, universal_seed
from .nakajima import build_config_quiver, is_admissible, orbit_quiver, parse_configuration
from .quiver import to_dot
from .rootsys import Orientation, RootSystem, diagram

SCHEMA = "frobcluster/1"
DESK_COXETER = 6  # verify runs beyond this Coxeter number need --large


class UsageError(Exception):
    pass


def _orientation(args) -> Orientation:
    try:
        d = diagram(args.type, args.rank)
        if args.orientation in (None, "", "bipartite-default"):
            q = d.bipartite_orientation()
        else:
            q = Orientation.parse(d, args.orientation)
        q.sign()
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    return q


def _config(args, q):
    if args.f_power < 1:
        raise UsageError("--f-power must be a positive integer")
    try:
        return parse_configuration(args.config, q, args.f_power)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _dump(data: dict) -> str:
    return json.dumps({"schema": SCHEMA, **data}, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(args, name: str, text: str) -> None:
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_roots(args) -> int:
    q = _orientation(args)
    rs = RootSystem(q.diagram)
    orbits = rs.tau_orbits(q)
    chains = rs.tau_pm_chains(q)
    if args.format == "json":
        _emit(args, "roots.json", _dump({
            "diagram": q.diagram.name,
            "orientation": str(q),
            "almost_positive": [str(r) for r in rs.almost_positive],
            "tau_plus": {str(r): str(rs.tau_plus(r, q)) for r in rs.almost_positive},
            "tau_minus": {str(r): str(rs.tau_minus(r, q)) for r in rs.almost_positive},
            "tau_orbits": [[str(r) for r in o] for o in orbits],
            "tau_pm_chains": [[str(r) for r in c] for c in chains],
        }))
        return 0
    lines = [f"{q.diagram.name} [{q}]: {len(rs.almost_positive)} almost positive roots",
             "  " + " ".join(str(r) for r in rs.almost_positive),
             f"tau-orbits (sizes {sorted(len(o) for o in orbits)}):"]
    lines += ["  " + " -> ".join(str(r) for r in o) for o in orbits]
    lines.append("tau_+/tau_- chains:")
    lines += ["  " + " - ".join(str(r) for r in c) for c in chains]
    _emit(args, "roots.txt", "\n".join(lines) + "\n")
    return 0


def cmd_universal_seed(args) -> int:
    q = _orientation(args)
    seed = universal_seed(q)
    if args.format == "dot":
        _emit(args, "universal_seed.dot", to_dot(seed.ice, f"universal {q.diagram.name}"))
    elif args.format == "text":
        lines = [f"universal seed of {q.diagram.name} [{q}]: "
                 f"{seed.n} mutable, {seed.ice.m} frozen"]
        for (a, b), k in sorted(seed.ice.labelled_arrows().items()):
            lines.append(f"  {a} -> {b}" + (f" x{k}" if k > 1 else ""))
        _emit(args, "universal_seed.txt", "\n".join(lines) + "\n")
    else:
        _emit(args, "universal_seed.json", _dump({
            "diagram": q.diagram.name, "orientation": str(q),
            "seed": seed.to_json(), "ice_quiver": seed.ice.to_json(),
        }))
    return 0


def _word(text: str, n: int) -> list[int]:
    try:
        word = [int(t) - 1 for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"bad mutation word {text!r}") from exc
    if any(not 0 <= k < n for k in word):
        raise UsageError(f"mutation word {text!r} uses a vertex outside 1..{n}")
    return word


def cmd_mutate(args) -> int:
    q = _orientation(args)
    seed = universal_seed(q)
    word = _word(args.word, q.n)
    final, rels = relation_sequence(seed, word)
    if args.format == "dot":
        _emit(args, "mutated_seed.dot", to_dot(final.ice, "mutated"))
    elif args.format == "text":
        _emit(args, "mutate.txt", "\n".join(str(r) for r in rels) + "\n")
    else:
        _emit(args, "mutate.json", _dump({
            "diagram": q.diagram.name, "orientation": str(q),
            "word": [k + 1 for k in word],
            "relations": [str(r) for r in rels],
            "seed": final.to_json(),
        }))
    return 0


def cmd_exchange_graph(args) -> int:
    q = _orientation(args)
    try:
        g = exchange_graph(universal_seed(q), budget=args.budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rels = sorted(str(r) for r in g.relations.values())
    if args.format == "json":
        _emit(args, "exchange_graph.json", _dump({
            "diagram": q.diagram.name, "orientation": str(q),
            "seeds": g.n_seeds, "cluster_variables": g.n_variables,
            "variables": g.variable_names(), "relations": rels,
        }))
    else:
        lines = [f"{q.diagram.name}: {g.n_seeds} seeds, {g.n_variables} cluster variables, "
                 f"{len(rels)} exchange relations"]
        lines += [f"  {r}" for r in rels]
        _emit(args, "exchange_graph.txt", "\n".join(lines) + "\n")
    return 0


def cmd_ar_quiver(args) -> int:
    q = _orientation(args)
    config = _config(args, q)
    if not is_admissible(config).admissible:
        raise UsageError(f"configuration {config.describe()} is not admissible")
    oq = orbit_quiver(build_config_quiver(config, check=False))
    labelled = config.is_full and config.f_power == 1
    loq = label_orbit_quiver(oq) if labelled else None
    if args.format == "json":
        name = (lambda v: str(loq.label[v])) if loq else str
        _emit(args, "ar_quiver.json", _dump({
            "diagram": q.diagram.name, "orientation": str(q),
            "configuration": config.describe(), "f_power": config.f_power,
            "vertices": [{"vertex": str(v), "label": name(v), "frozen": v.frozen}
                         for v in oq.vertices],
            "arrows": sorted([name(u), name(v), k] for (u, v), k in oq.arrows.items()),
        }))
    elif args.format == "text":
        name = (lambda v: str(loq.label[v])) if loq else str
        lines = [f"orbit quiver: {len(oq.mutable)} non-frozen + {len(oq.frozen)} frozen, "
                 f"{sum(oq.arrows.values())} arrows"]
        lines += sorted(f"  {name(u)} -> {name(v)}" for (u, v) in oq.arrows)
        _emit(args, "ar_quiver.txt", "\n".join(lines) + "\n")
    else:
        _emit(args, "ar_quiver.dot", loq.to_dot() if loq else oq.to_dot())
    return 0


def cmd_verify(args) -> int:
    q = _orientation(args)
    config = _config(args, q)
    if q.diagram.coxeter_number > DESK_COXETER and not args.large:
        raise UsageError(f"{q.diagram.name} is beyond desk scale; pass --large to run it")
    if not is_admissible(config).admissible:
        raise UsageError(f"configuration {config.describe()} is not admissible")
    report = verify_main_theorem(q, config)
    if args.format == "json":
        _emit(args, "verification.json", report.dumps())
    elif args.format == "dot":
        _emit(args, "verification.dot", "".join(to_dot(v, k) for k, v in report.quivers.items()))
    else:
        _emit(args, "verification.txt", report.text())
    return 0 if report.ok else 1


COMMANDS = {
    "roots": cmd_roots,
    "universal-seed": cmd_universal_seed,
    "mutate": cmd_mutate,
    "exchange-graph": cmd_exchange_graph,
    "ar-quiver": cmd_ar_quiver,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobcluster", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", required=True, choices=["A", "D", "E"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--orientation", default=None,
                       help='arrows like "1>2,3>2"; default: vertex 1 is a source')
        p.add_argument("--format", choices=["json", "dot", "text"],
                       default="text" if name in ("roots", "verify", "exchange-graph") else "json")
        p.add_argument("--out", default=None, help="write the output file into this directory")
        if name in ("ar-quiver", "verify"):
            p.add_argument("--config", default="full", help='"full" or "(i,p);(j,q)..."')
            p.add_argument("--f-power", type=int, default=1)
        if name == "verify":
            p.add_argument("--large", action="store_true",
                           help="allow diagrams beyond desk scale (D5, E6, ...)")
        if name == "exchange-graph":
            p.add_argument("--budget", type=int, default=10_000)
        if name == "mutate":
            p.add_argument("--word", required=True, help='1-based vertices, e.g. "1,2,1"')
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
