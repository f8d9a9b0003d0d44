"""Command-line interface.

Every command writes one JSON run report to stdout and a one-line summary
to stderr. Report fields, in order: ``command``, ``input_digest``,
``results``, ``exit_status``, ``timing`` (left out with ``--no-timing`` so
reports compare byte for byte).

Exit codes:

====  =====================================================
0     success / property holds / graph is free of the pattern
2     usage, parse or cap error
10    ``detect``: pattern or family member found
11    ``color``: input is not in the class (witness reported)
12    ``willow verify``: certificate does not define the graph
13    ``willow search``: no certificate in the bounded space
14    ``construct``: a construction contract or claim failed
====  =====================================================
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from .colorers import (
    color_bowtie_free, color_lollipop_free, color_mkt_free, color_pineapple_free,
)
from .constructions import (
    NO_CYCLE, OrientedGraph, build_descartes, min_direction_changes, shift_power,
    verify_acyclic_properties, verify_shift_claims,
)
from . import config
from .errors import ChiboundError, NotMemberError
from .io import from_dimacs, from_graph6, to_graph6
from .patterns import contains_family_member
from .solvers import chromatic_number
from .willow import (
    BUILTINS, WillowCertificate, builtin_certificate, search_certificate, verify_certificate,
)

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_FOUND = 10
EXIT_NOT_MEMBER = 11
EXIT_VERIFY_FAIL = 12
EXIT_ABSENT = 13
EXIT_CONTRACT = 14


class _Inputs:
    """Reads input files once and accumulates their digest."""

    def __init__(self):
        self._hash = hashlib.sha256()
        self._stdin: str | None = None

    def text(self, path: str) -> str:
        if path == "-":
            if self._stdin is None:
                self._stdin = sys.stdin.read()
            data = self._stdin
        else:
            data = Path(path).read_text()
        self._hash.update(data.encode())
        return data

    def graph(self, path: str, fmt: str):
        text = self.text(path)
        if fmt == "dimacs":
            return from_dimacs(text)
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise ValueError(f"{path}: expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])

    @property
    def digest(self) -> str:
        return "sha256:" + self._hash.hexdigest()


def _witness(w) -> dict | None:
    if w is None:
        return None
    return {"mapping": list(w.mapping), "kind": w.kind, "note": w.note}


def _certificate_from(text: str) -> WillowCertificate:
    data = json.loads(text)
    if isinstance(data, dict) and "modulus" not in data:
        # a run report from `willow builtin` or `willow search`
        data = (data.get("results") or {}).get("certificate")
        if data is None:
            raise ValueError("input holds no certificate")
    return WillowCertificate.from_json(data)


# ------------------------------------------------------------------ commands

def cmd_detect(args, inputs: _Inputs) -> tuple[int, dict]:
    G = inputs.graph(args.graph, args.format)
    target = args.pattern if args.pattern is not None else args.family
    w = contains_family_member(G, target)
    results = {"target": target, "found": w is not None, "witness": _witness(w)}
    return (EXIT_FOUND if w is not None else EXIT_OK), results


def cmd_color(args, inputs: _Inputs) -> tuple[int, dict]:
    G = inputs.graph(args.graph, args.format)
    try:
        if args.alg == "exact":
            k, col = chromatic_number(G)
            report = None
        elif args.alg == "mkt":
            col, report = color_mkt_free(G, _need(args.m, "--m"), _need(args.t, "--t"))
        elif args.alg == "pineapple":
            col, report = color_pineapple_free(G, _need(args.t, "--t"), _need(args.k, "--k"))
        elif args.alg == "lollipop":
            col, report = color_lollipop_free(G, _need(args.t, "--t"))
        else:
            col, report = color_bowtie_free(G)
    except NotMemberError as e:
        return EXIT_NOT_MEMBER, {
            "algorithm": args.alg, "member": False, "pattern": str(e.pattern),
            "message": str(e), "witness": _witness(e.witness),
        }
    col.check(G)
    return EXIT_OK, {
        "algorithm": args.alg,
        "member": True,
        "colors": list(col.colors),
        "count": col.count,
        "proper": True,
        "bound": report.to_dict() if report is not None else None,
    }


def _need(value, flag):
    if value is None:
        raise ValueError(f"this algorithm needs {flag}")
    return value


def cmd_willow(args, inputs: _Inputs) -> tuple[int, dict]:
    if args.action == "builtin":
        cert = builtin_certificate(args.name, args.n, args.length)
        return EXIT_OK, {"name": args.name, "certificate": json.loads(cert.to_json())}
    G = inputs.graph(args.graph, args.format)
    if args.action == "verify":
        cert = _certificate_from(inputs.text(args.cert))
        ok, w = verify_certificate(G, cert)
        results = {"valid": ok, "violation": list(w.mapping) if w else None, "detail": w.note if w else None}
        return (EXIT_OK if ok else EXIT_VERIFY_FAIL), results
    cert = search_certificate(G, args.n, args.steiner, timeout=args.timeout)
    results = {
        "modulus": args.n, "max_steiner": args.steiner, "found": cert is not None,
        "certificate": json.loads(cert.to_json()) if cert else None,
    }
    return (EXIT_OK if cert else EXIT_ABSENT), results


def cmd_construct(args, inputs: _Inputs) -> tuple[int, dict]:
    if args.action == "descartes":
        og = build_descartes(args.k)
        report = verify_acyclic_properties(og, args.k)
        if args.out:
            Path(args.out).write_text(og.to_text())
        results = {"k": args.k, "vertices": og.n, "arcs": len(og.arcs), "contract": report.to_dict(),
                   "oriented_graph": og.to_text()}
        return (EXIT_OK if report.all_hold else EXIT_CONTRACT), results
    og = OrientedGraph.from_text(inputs.text(args.oriented))
    if args.action == "shiftpower":
        Gp = shift_power(og, args.p)
        return EXIT_OK, {"p": args.p, "graph6": to_graph6(Gp), "vertices": Gp.n, "edges": Gp.num_edges}
    k = args.k if args.k is not None else chromatic_number(og.graph)[0]
    contract = verify_acyclic_properties(og, k)
    if og.n <= config.caps.direction_changes:
        changes = min_direction_changes(og)
        changes = None if changes == NO_CYCLE else changes
    else:
        changes = "skipped"
    claims = verify_shift_claims(og, args.p, args.samples, args.seed, k=k)
    results = {
        "contract": contract.to_dict(),
        "min_direction_changes": changes,
        "shift_claims": claims.to_dict(),
    }
    ok = contract.all_hold and not claims.claim_falsified
    return (EXIT_OK if ok else EXIT_CONTRACT), results


# ------------------------------------------------------------------ plumbing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "dimacs"), default="graph6",
                        help="input graph format (default graph6)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker cap; results never depend on it")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    parser = argparse.ArgumentParser(prog="chibound", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="look for an induced pattern or family member")
    p.add_argument("graph")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern", help="pattern spec, e.g. pineapple:3,1")
    g.add_argument("--family", help="family name, e.g. nonwillow_obstructions")
    p.set_defaults(run=cmd_detect)

    p = sub.add_parser("color", parents=[common], help="colour with one of the class colourers")
    p.add_argument("graph")
    p.add_argument("--alg", choices=("mkt", "pineapple", "lollipop", "bowtie", "exact"), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(run=cmd_color)

    p = sub.add_parser("willow", help="willow certificates")
    wsub = p.add_subparsers(dest="action", required=True)
    q = wsub.add_parser("builtin", parents=[common], help="print a built-in certificate")
    q.add_argument("name", choices=sorted(BUILTINS))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--length", type=int, help="cycle length (cycle) or clique size (complete)")
    q = wsub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    q.add_argument("graph")
    q.add_argument("--cert", default="-", help="certificate JSON or run report (default stdin)")
    q = wsub.add_parser("search", parents=[common], help="bounded certificate search")
    q.add_argument("graph")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--steiner", type=int, default=3)
    q.add_argument("--timeout", type=float)
    p.set_defaults(run=cmd_willow)

    p = sub.add_parser("construct", help="oriented constructions and shift powers")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("descartes", parents=[common], help="build and self-check the level-k graph")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--out", help="also write the oriented graph file here")
    q = csub.add_parser("shiftpower", parents=[common], help="mod-p shift power as graph6")
    q.add_argument("oriented")
    q.add_argument("--p", type=int, required=True)
    q = csub.add_parser("check", parents=[common], help="contract, direction changes and shift claims")
    q.add_argument("oriented")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--samples", type=int, default=0)
    q.add_argument("--k", type=int, help="contract parameter (default: chi of the graph)")
    q.add_argument("--seed", type=int, default=None)
    p.set_defaults(run=cmd_construct)
    return parser


_MEANING = {
    EXIT_OK: "ok", EXIT_FOUND: "found", EXIT_NOT_MEMBER: "not a member",
    EXIT_VERIFY_FAIL: "verification failed", EXIT_ABSENT: "no certificate in the bounded space",
    EXIT_CONTRACT: "contract or claim failed",
}


def _summary(label: str, code: int, results: dict) -> str:
    if code == EXIT_ERROR:
        return f"{label}: error: {results.get('error')}"
    return f"{label}: {_MEANING[code]} (exit {code})"


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        args.seed = int(os.environ.get("CHIBOUND_SEED", "0"))
    inputs = _Inputs()
    start = time.perf_counter()
    try:
        code, results = args.run(args, inputs)
    except (ChiboundError, ValueError, OSError, json.JSONDecodeError, KeyError) as e:
        code, results = EXIT_ERROR, {"error": f"{type(e).__name__}: {e}"}
    report = {
        "command": argv,
        "input_digest": inputs.digest,
        "results": results,
        "exit_status": code,
    }
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    sys.stdout.write(json.dumps(report) + "\n")
    sys.stdout.flush()
    label = " ".join(x for x in (args.command, getattr(args, "action", None)) if x)
    print(_summary(label, code, results), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
