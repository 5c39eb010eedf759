"""Command-line interface: ``petersen-tsg <command> [options]``.

Exit status is 0 on success, 1 when a check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .diagram import DiagramSyntaxError, DiagramValidationError, NotACycle, SpatialDiagram, parse_embedding
from .engine import (
    CatalogMismatch,
    InvalidCertificate,
    classify,
    format_vertex_permutation,
    invariant_profile,
    kneser_labels,
    parse_certificates,
    realizability_catalog,
    symmetry_certificates,
)
from .groups import GroupName
from .knots import TooManyCrossings, identify_diagram, invariants
from .petersen import (
    NotPetersen,
    automorphism_group,
    brute_force_automorphisms,
    build_petersen,
    disjoint_five_cycle_pairs,
    enumerate_cycles,
    stabilizer,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# The six 5-cycles through the vertex {1,2}; each must belong to a disjoint pair.
LISTED_FIVE_CYCLES = (
    "12 34 15 24 35",
    "12 34 15 23 45",
    "12 34 25 13 45",
    "12 34 25 14 35",
    "12 35 14 23 45",
    "12 35 24 13 45",
)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _load_diagram(path: str) -> SpatialDiagram:
    text = _read(path)
    try:
        return parse_embedding(text)
    except DiagramSyntaxError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.args[0].split(': ', 1)[-1]}") from exc
    except DiagramValidationError as exc:
        raise InputError(f"{path}: invalid diagram: " + "; ".join(exc.violations)) from exc


def _kneser_name(v: int) -> str:
    return build_petersen().label(v)


def _cycle_text(cycle) -> str:
    return " ".join(_kneser_name(v) for v in cycle.vertices)


# -- commands ---------------------------------------------------------------------------------------


def cmd_verify_lemma(args) -> int:
    from .petersen import Cycle

    p = build_petersen()
    pairs = disjoint_five_cycle_pairs()
    fives = enumerate_cycles()[5]
    in_pairs = {c for pair in pairs for c in pair.cycles}
    listed = [Cycle(tuple(p.index(tuple(int(ch) for ch in lab)) for lab in row.split())) for row in LISTED_FIVE_CYCLES]
    listed_ok = all(c in in_pairs for c in listed) and len(set(listed)) == 6
    pointwise_ok = all(stabilizer(c, "pointwise").order == 1 for c in fives)
    brute = len(brute_force_automorphisms(p.adjacency()))
    aut_ok = automorphism_group().order == 120 == brute
    ok = len(pairs) == 6 and listed_ok and pointwise_ok and aut_ok
    if args.format == "machine":
        print(f"lemma pairs={len(pairs)} listed={int(listed_ok)} pointwise_trivial={int(pointwise_ok)} aut={brute}")
    else:
        print(f"{len(pairs)} disjoint 5-cycle pairs; pointwise stabilizers {'trivial' if pointwise_ok else 'NOT trivial'}")
        print(f"listed 5-cycles through 12 all in pairs: {'yes' if listed_ok else 'no'}")
        print(f"automorphisms: {automorphism_group().order} from S5, {brute} by brute force")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cycles(args) -> int:
    census = enumerate_cycles()
    total = sum(len(v) for v in census.values())
    if args.format == "machine":
        print("cycles " + " ".join(f"len{k}={len(v)}" for k, v in census.items()) + f" total={total}")
        for i, pair in enumerate(disjoint_five_cycle_pairs(), start=1):
            print(f"pair {i} {_cycle_text(pair.first).replace(' ', ',')} {_cycle_text(pair.second).replace(' ', ',')}")
        return EXIT_OK
    print(f"{total} cycles")
    for length, cycles in census.items():
        print(f"length {length}: {len(cycles)}")
        for c in cycles:
            print(f"  {_cycle_text(c)}")
    print("disjoint 5-cycle pairs:")
    for i, pair in enumerate(disjoint_five_cycle_pairs(), start=1):
        print(f"  {i}. ({_cycle_text(pair.first)}) | ({_cycle_text(pair.second)})")
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = _load_diagram(args.file)
    try:
        labels = kneser_labels(d)
    except NotPetersen as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    profile = invariant_profile(d)
    if args.certificates:
        try:
            certs = parse_certificates(_read(args.certificates), labels)
        except ValueError as exc:
            raise InputError(f"{args.certificates}: {exc}") from exc
    else:
        certs = symmetry_certificates(d, profile)
    try:
        report = classify(d, certs, profile)
    except InvalidCertificate as exc:
        raise InputError(f"{args.certificates}: {exc}") from exc
    if args.format == "machine":
        print(report.machine_line())
    else:
        print(f"embedding {args.file}: {len(d.crossings)} crossings")
        knotted = [(profile.cycle_label(c), k) for c, k in profile.cycle_knots.items() if str(k) != "unknot"]
        print(f"knotted cycles: {len(knotted)} of {len(profile.cycle_knots)}")
        for label, k in knotted:
            print(f"  {label}: {k}")
        print("linking |lk| of disjoint pairs: " + " ".join(str(lk) for lk, _ in profile.pair_linking.values()))
        print("certificates:")
        for c in certs:
            print(f"  {format_vertex_permutation(c.signed.perm, labels)} sign {c.signed.sign_char} via {c.provenance}")
        print(report.text())
    return EXIT_OK if report.mod2_ok else EXIT_FAIL


def _single_cycle(d: SpatialDiagram, path: str) -> list[str]:
    adj = {v: [] for v in d.vertices}
    for u, v in d.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    if not d.vertices or any(len(ns) != 2 for ns in adj.values()):
        raise InputError(f"{path}: a knot file must describe a single cycle")
    order = [d.vertices[0]]
    prev = None
    while True:
        cur = order[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == order[0]:
            break
        order.append(nxt)
        prev = cur
    if len(order) != len(d.vertices):
        raise InputError(f"{path}: the graph is not connected")
    return order


def cmd_knot_id(args) -> int:
    from .diagram import cycle_diagram

    d = _load_diagram(args.file)
    try:
        kd = cycle_diagram(d, _single_cycle(d, args.file))
        inv = invariants(kd)
    except (NotACycle, TooManyCrossings) as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    kid = identify_diagram(kd)
    if args.format == "machine":
        print(f"knot id={str(kid).replace(' ', '')} crossings={kd.n_crossings} det={inv.determinant}")
    else:
        print(f"knot: {kid}")
        print(f"crossings: {kd.n_crossings}  writhe: {kd.writhe}")
        print(f"jones: {inv.jones.format()}")
        print(f"alexander: {inv.alexander.format()}")
        print(f"determinant: {inv.determinant}")
    return EXIT_OK


def _catalog_lines(fmt: str, realizable, positive) -> list[str]:
    order = [g for g in GroupName if g != GroupName.UNRECOGNIZED]
    r = [str(g) for g in order if g in realizable]
    p = [str(g) for g in order if g in positive]
    if fmt == "machine":
        return [f"catalog realizable={','.join(r)} positive={','.join(p)}"]
    return [f"realizable: {', '.join(r)}", f"positively realizable: {', '.join(p)}"]


def _corpus_dir(args) -> Path | None:
    path = Path(args.data)
    if path.is_dir():
        return path
    if args.data_given:
        raise InputError(f"{args.data}: no such corpus directory")
    return None


def cmd_catalog(args) -> int:
    from .corpus import CorpusCorrupt, load_corpus

    try:
        entries = load_corpus(_corpus_dir(args))
    except CorpusCorrupt as exc:
        raise InputError(str(exc)) from exc
    try:
        realizable, positive = realizability_catalog(entries)
    except CatalogMismatch as exc:
        print(f"catalog mismatch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("\n".join(_catalog_lines(args.format, realizable, positive)))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .corpus import CorpusCorrupt, load_corpus

    try:
        entries = load_corpus(_corpus_dir(args))
    except CorpusCorrupt as exc:
        raise InputError(str(exc)) from exc
    failures = []
    rows = []
    for entry in entries:
        report = entry.classify()
        problems = entry.check(report)
        if not report.mod2_ok:
            problems.append(f"{entry.name}: mod-2 linking congruence fails")
        failures += problems
        if args.format == "machine":
            print(f"entry {entry.name}")
            print(report.machine_line())
        else:
            rows.append((
                entry.name,
                f"{report.full_name}{'' if report.exact_full else '?'}",
                f"{report.op_name}{'' if report.exact_op else '?'}",
                entry.expected["full"],
                entry.expected["op"],
                "ok" if not problems else "FAIL",
            ))
    if rows:
        header = ("entry", "TSG", "TSG+", "expected TSG", "expected TSG+", "status")
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(6)]
        for r in [header] + rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        print("(? marks a bound that is not known to be exact)")
    try:
        realizable, positive = realizability_catalog(entries)
        print("\n".join(_catalog_lines(args.format, realizable, positive)))
    except CatalogMismatch as exc:
        failures.append(f"catalog mismatch: {exc}")
    for f in failures:
        print(f"FAIL {f}", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


# -- entry point -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--data", default=None, help="corpus directory (default ./corpus, else the bundled copy)")

    parser = argparse.ArgumentParser(prog="petersen-tsg", description="Topological symmetry groups of Petersen-graph embeddings.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-lemma", parents=[common], help="check the disjoint 5-cycle pair facts").set_defaults(func=cmd_verify_lemma)
    sub.add_parser("cycles", parents=[common], help="print the cycle census and the six pairs").set_defaults(func=cmd_cycles)
    p = sub.add_parser("analyze", parents=[common], help="classify an embedding file")
    p.add_argument("file")
    p.add_argument("--certificates", help="certificate file (default: symmetries of the drawing)")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("knot-id", parents=[common], help="identify the knot drawn by a one-cycle embedding file")
    p.add_argument("file")
    p.set_defaults(func=cmd_knot_id)
    sub.add_parser("catalog", parents=[common], help="print the realizability catalog").set_defaults(func=cmd_catalog)
    sub.add_parser("reproduce", parents=[common], help="classify the whole corpus").set_defaults(func=cmd_reproduce)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.data_given = args.data is not None
    if args.data is None:
        args.data = "corpus"
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
