"""Command line front end.

Subcommands: hfk (full pipeline with oracle verdicts), algebra (one
complete resolution's quotient algebra), alexander (Burau polynomial),
grid (rectangle-complex oracle), verify (invariant suite with a pass/fail
matrix).  Exit code 0 iff every enabled check passed.  JSON output is
sorted-key and timestamp-free, so identical configs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .alexander import alexander_from_braid
from .algebra import build_algebra, count_kauffman_states, generate_relations
from .braid import BraidSyntaxError, NotAKnotError, build_diagram, parse_braid
from .cube import assemble
from .grid import (
    GridError,
    grid_from_braid,
    grid_homology_tilde,
    lambda_is_cycle,
    marking_from_crossing,
    simplify_grid,
    special_composite_check,
    special_grid_from_braid,
    zip_on_lambda_check,
)
from .homology import euler_characteristic, homology, text_table
from .resolution import is_connected, resolve

GRID_ORACLE_CAP = 7  # exhaustive n! enumeration stays under a few seconds


@dataclass
class RunConfig:
    braid: str = ""
    mode: str = None            # None picks the size-based default
    subset_cap: int = 22
    degree_cap: int = None
    check_faces: bool = None    # None: on for up to 8 crossings
    json_out: bool = False
    threads: int = 1
    report_dir: str = None
    max_size: int = 8
    corrupt_signs: bool = False

    def validate(self):
        if self.subset_cap <= 0 or self.max_size <= 0 or self.threads <= 0:
            raise ValueError("caps and thread counts must be positive")
        if self.degree_cap is not None and self.degree_cap <= 0:
            raise ValueError("caps and thread counts must be positive")
        return self


def _emit_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def _assemble(config, diagram):
    return assemble(diagram, mode=config.mode, check_faces=config.check_faces,
                    degree_cap=config.degree_cap, subset_cap=config.subset_cap,
                    corrupt_signs=config.corrupt_signs)


def _grid_verdict(config, word, entries):
    """Compare simplified-grid GF(2) ranks against the cube ranks."""
    grid = simplify_grid(grid_from_braid(word))
    if grid.n > min(config.max_size, GRID_ORACLE_CAP):
        return {"verdict": "SKIPPED", "n": grid.n,
                "reason": f"simplified grid size {grid.n} above the cap"}
    ranks = grid_homology_tilde(grid, max_size=grid.n).deflated
    return {"verdict": "MATCH" if ranks == entries else "MISMATCH",
            "n": grid.n}


def cmd_hfk(config):
    word = parse_braid(config.braid)
    total = _assemble(config, build_diagram(word))
    poly = homology(total, knot_name=config.braid)
    burau = alexander_from_braid(word)
    euler_ok = euler_characteristic(poly) == burau
    grid = _grid_verdict(config, word, poly.entries)

    report_files = []
    if config.report_dir:
        from .report import write_report
        report_files = write_report(poly, config.report_dir)

    if config.json_out:
        data = poly.to_json()
        data["total"] = poly.total_rank()
        data["burau"] = str(burau)
        data["euler_match"] = euler_ok
        data["grid"] = grid
        if report_files:
            data["report_files"] = report_files
        _emit_json(data)
    else:
        print(text_table(poly))
        print(f"burau: {burau}")
        print(f"euler: {'MATCH' if euler_ok else 'MISMATCH'}")
        if grid["verdict"] == "SKIPPED":
            print(f"grid: SKIPPED ({grid['reason']})")
        else:
            print(f"grid: {grid['verdict']} (size {grid['n']})")
        for path in report_files:
            print(f"report: {path}")
    return 0 if euler_ok and grid["verdict"] != "MISMATCH" else 1


def _format_poly(poly):
    def mono(m):
        return "*".join(f"U{v}" for v in m) if m else "1"

    parts = [f"({coeff!r})*{mono(m)}" for m, coeff in sorted(poly.items())]
    return " + ".join(parts) if parts else "0"


def cmd_algebra(config, assignment):
    word = parse_braid(config.braid)
    diagram = build_diagram(word)
    if (len(assignment) != diagram.n
            or any(ch not in "01" for ch in assignment)):
        raise ValueError(
            f"assignment must be {diagram.n} characters of 0/1")
    bits = tuple(int(ch) for ch in assignment)
    graph = resolve(diagram, bits)
    mode = config.mode or ("all" if diagram.n <= 6 else "coherent_cycles")
    alg = build_algebra(graph, mode=mode, degree_cap=config.degree_cap,
                        subset_cap=config.subset_cap)

    if alg.zero:
        if config.json_out:
            _emit_json({"braid": config.braid, "assignment": assignment,
                        "zero": True, "reason": "disconnected"})
        else:
            print("zero algebra (disconnected)")
        return 0

    relations = generate_relations(graph, mode=mode,
                                   subset_cap=config.subset_cap)
    kauffman = count_kauffman_states(graph).total
    if config.json_out:
        _emit_json({
            "braid": config.braid,
            "assignment": assignment,
            "sigma": graph.sigma,
            "dims": alg.json_dims(),
            "total": alg.total_dim,
            "basis": {str(d): ["*".join(f"U{v}" for v in m) or "1"
                               for m in alg.degrees[d]["basis"]]
                      for d in sorted(alg.degrees)},
            "relations": [{"kind": r.kind, "poly": _format_poly(r.poly)}
                          for r in relations],
            "kauffman_states": kauffman,
        })
        return 0
    print(f"braid: {config.braid}")
    print(f"assignment: {assignment}  (sigma = {graph.sigma})")
    print("relations:")
    for r in relations:
        print(f"  {r.kind}: {_format_poly(r.poly)}")
    print("dimensions by symmetrized Alexander grading:")
    for a, dim in sorted(alg.dims.items(), reverse=True):
        print(f"  A={a}: {dim}")
    print(f"total: {alg.total_dim}")
    print("basis monomials:")
    for d in sorted(alg.degrees):
        monos = ["*".join(f"U{v}" for v in m) or "1"
                 for m in alg.degrees[d]["basis"]]
        print(f"  degree {d}: {', '.join(monos)}")
    print(f"kauffman states: {kauffman}")
    return 0


def cmd_alexander(config):
    word = parse_braid(config.braid)
    delta = alexander_from_braid(word)
    if config.json_out:
        _emit_json({"braid": config.braid, "alexander": str(delta)})
    else:
        print(f"alexander: {delta}")
    return 0


def cmd_grid(config):
    word = parse_braid(config.braid)
    raw = grid_from_braid(word)
    grid = simplify_grid(raw)
    ranks = None
    if grid.n <= config.max_size:
        ranks = grid_homology_tilde(grid, max_size=config.max_size)
    if config.json_out:
        data = {"braid": config.braid, "constructed_size": raw.n,
                "grid": grid.to_json()}
        if ranks is not None:
            data["hfk"] = ranks.to_json()
        else:
            data["hfk"] = None
        _emit_json(data)
        return 0
    print(f"braid: {config.braid}")
    print(f"grid size: {grid.n} (constructed {raw.n}, then simplified)")
    print(f"grid: {json.dumps(grid.to_json(), sort_keys=True)}")
    if ranks is None:
        print(f"ranks: SKIPPED (size {grid.n} above --max-size "
              f"{config.max_size})")
        return 0
    print("note: ranks over GF(2); integral torsion is invisible")
    print("  s    m   rank")
    for (m, a), r in sorted(ranks.deflated.items(),
                            key=lambda kv: (-kv[0][1], -kv[0][0])):
        print(f"{a:>3} {m:>4} {r:>6}")
    print(f"total: {ranks.total_deflated()}")
    return 0


def _check_d_squared(config, diagram):
    total = _assemble(config, diagram)
    total.verify_d_squared()
    return "PASS", ""


def _check_faces(config, diagram):
    assemble(diagram, mode=config.mode, check_faces=True,
             degree_cap=config.degree_cap, subset_cap=config.subset_cap,
             corrupt_signs=config.corrupt_signs)
    return "PASS", ""


def _check_mode_equivalence(config, diagram):
    for mask in range(1 << diagram.n):
        bits = tuple(mask >> p & 1 for p in range(diagram.n))
        graph = resolve(diagram, bits)
        a = build_algebra(graph, mode="all", subset_cap=config.subset_cap)
        b = build_algebra(graph, mode="coherent_cycles")
        if a.dims_by_degree != b.dims_by_degree:
            return "FAIL", f"dimension tables differ at assignment {bits}"
    return "PASS", f"{1 << diagram.n} resolutions"


def _check_kauffman(config, diagram):
    sing_bits = tuple(0 if x.sign > 0 else 1 for x in diagram.crossings)
    graph = resolve(diagram, sing_bits)
    alg = build_algebra(graph, mode=config.mode or "all",
                        subset_cap=config.subset_cap)
    if not is_connected(graph):
        if not alg.zero:
            return "FAIL", "disconnected singularization gave a nonzero algebra"
        return "PASS", "disconnected; zero algebra"
    count = count_kauffman_states(graph).total
    if alg.total_dim != count:
        return "FAIL", f"dim {alg.total_dim} != {count} Kauffman states"
    return "PASS", f"dim {alg.total_dim} == Kauffman count"


def _check_euler(config, diagram, word):
    poly = homology(_assemble(config, diagram))
    burau = alexander_from_braid(word)
    if euler_characteristic(poly) != burau:
        return "FAIL", f"{euler_characteristic(poly)} != {burau}"
    return "PASS", ""


def _check_grid(config, diagram, word):
    poly = homology(_assemble(config, diagram))
    verdict = _grid_verdict(config, word, poly.entries)
    if verdict["verdict"] == "SKIPPED":
        return "SKIP", verdict["reason"]
    return ("PASS" if verdict["verdict"] == "MATCH" else "FAIL",
            f"grid size {verdict['n']}")


def _check_special(config, word):
    grid = special_grid_from_braid(word)
    squares = grid.crossing_squares()
    for sq in squares:
        marking = marking_from_crossing(grid, sq)
        if not lambda_is_cycle(marking.grid_a()):
            return "FAIL", f"Lambda not a cycle in the A diagram at {sq}"
        if not lambda_is_cycle(marking.grid_b()):
            return "FAIL", f"Lambda not a cycle in the B diagram at {sq}"
        sample = None if grid.n <= 7 else 10
        ok, msg = special_composite_check(marking, sample=sample)
        if not ok:
            return "FAIL", f"composite identity at {sq}: {msg}"
        zip_report = zip_on_lambda_check(marking)
        if not zip_report["ok"]:
            return "FAIL", f"zip count at {sq}: {zip_report}"
    return "PASS", f"{len(squares)} crossings"


def cmd_verify(config):
    word = parse_braid(config.braid)
    diagram = build_diagram(word)
    checks = [
        ("d_squared", lambda: _check_d_squared(config, diagram)),
        ("face_anticommutation", lambda: _check_faces(config, diagram)),
        ("mode_equivalence", lambda: _check_mode_equivalence(config, diagram)),
        ("kauffman_count", lambda: _check_kauffman(config, diagram)),
        ("euler_vs_burau", lambda: _check_euler(config, diagram, word)),
        ("grid_oracle", lambda: _check_grid(config, diagram, word)),
        ("special_diagram", lambda: _check_special(config, word)),
    ]

    def run(item):
        name, fn = item
        try:
            status, detail = fn()
        except (AssertionError, GridError, ValueError, RuntimeError) as exc:
            status, detail = "FAIL", f"{type(exc).__name__}: {exc}"
        return name, status, detail

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(item) for item in checks]

    ok = all(status != "FAIL" for _, status, _ in results)
    if config.json_out:
        _emit_json({"braid": config.braid, "ok": ok,
                    "checks": [{"name": n, "status": s, "detail": d}
                               for n, s, d in results]})
    else:
        print(f"braid: {config.braid}")
        width = max(len(n) for n, _, _ in results)
        for name, status, detail in results:
            line = f"{name:<{width}}  {status}"
            if detail:
                line += f"  ({detail})"
            print(line)
        print("result:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="braidhfk",
        description="knot Floer homology of braid closures "
                    "(ranks over Q(t); torsion is invisible)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("braid", help='braid word, e.g. "B2: s1 s1 s1"')
    common.add_argument("--mode", choices=("all", "coherent_cycles"),
                        default=None,
                        help="relation generation mode (default: all for "
                             "up to 6 crossings, coherent_cycles above)")
    common.add_argument("--json", action="store_true", dest="json_out",
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $HFK_THREADS or 1)")
    common.add_argument("--degree-cap", type=int, default=None,
                        help="abort if algebra degrees exceed this bound")
    common.add_argument("--subset-cap", type=int, default=22,
                        help="vertex count limit for mode=all (default 22)")
    common.add_argument("--check-faces", choices=("auto", "on", "off"),
                        default="auto",
                        help="2-face anticommutation check (auto: on for "
                             "up to 8 crossings)")

    sub = parser.add_subparsers(dest="command", required=True)
    p_hfk = sub.add_parser("hfk", parents=[common],
                           help="bigraded homology with oracle verdicts")
    p_hfk.add_argument("--report", default=None, metavar="DIR",
                       help="write CSV and figure report files to DIR")
    p_alg = sub.add_parser("algebra", parents=[common],
                           help="quotient algebra of one complete resolution")
    p_alg.add_argument("assignment",
                       help="resolution bit-string, one 0/1 per crossing")
    sub.add_parser("alexander", parents=[common],
                   help="symmetrized Alexander polynomial (Burau)")
    p_grid = sub.add_parser("grid", parents=[common],
                            help="grid-diagram oracle ranks over GF(2)")
    p_grid.add_argument("--max-size", type=int, default=8,
                        help="largest grid enumerated exhaustively (default 8)")
    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the invariant suite")
    p_verify.add_argument("--corrupt-signs", action="store_true",
                          help="test fixture: break one edge sign so the "
                               "face check must fail")
    return parser


def _config_from(args):
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("HFK_THREADS", "1"))
    check_faces = {"auto": None, "on": True, "off": False}[args.check_faces]
    return RunConfig(
        braid=args.braid,
        mode=args.mode,
        subset_cap=args.subset_cap,
        degree_cap=args.degree_cap,
        check_faces=check_faces,
        json_out=args.json_out,
        threads=threads,
        report_dir=getattr(args, "report", None),
        max_size=getattr(args, "max_size", 8),
        corrupt_signs=getattr(args, "corrupt_signs", False),
    ).validate()


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from(args)
        if args.command == "hfk":
            return cmd_hfk(config)
        if args.command == "algebra":
            return cmd_algebra(config, args.assignment)
        if args.command == "alexander":
            return cmd_alexander(config)
        if args.command == "grid":
            return cmd_grid(config)
        return cmd_verify(config)
    except (BraidSyntaxError, NotAKnotError, GridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
