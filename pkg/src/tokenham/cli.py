"""Command-line front end.

Exit codes are frozen: 0 success/certificate found, 1 verification reject,
2 proven non-Hamiltonian or no listing exists, 3 unknown or budget
exhausted, 64 usage error, 65 materialization cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .certificates import CycleCertificate, HAMILTONIAN, NOT_HAMILTONIAN
from .errors import CapExceeded, ContractViolation, ParameterError
from .fan_ham import fan_feasibility, normalize_certificate
from .graph_core import FAMILY_TAGS, build_family, parse_edge_list, to_dot, to_edge_list
from .graycode import (
    ClosenessRelation,
    fan_gray_code,
    fan_relation,
    search_gray_code,
    verify_code,
)
from .tokens import format_token, token_graph
from .verification import (
    BUDGET_EXHAUSTED,
    DEFAULT_BUDGET,
    FOUND,
    brute_ham_cycle,
    brute_ham_path,
    verify_cycle,
)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_NEGATIVE = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_CAP = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tokenham", description=__doc__)
    parser.add_argument("--version", action="version", version=f"tokenham {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fan-cycle", help="certificate or witness for a fan")
    p.add_argument("--m", type=int, required=True, help="number of hubs")
    p.add_argument("--n", type=int, required=True, help="path length")
    p.add_argument("--k", type=int, required=True, help="token count")
    p.add_argument("--normalize", action="store_true", help="rotate the marker to positions 0,1")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("token-graph", help="emit a k-token graph")
    p.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p.add_argument("--params", required=True, help="comma-separated family parameters")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", choices=("dot", "edges"), default="edges")
    p.add_argument("--cap", type=int, default=None, help="materialization cap override")

    p = sub.add_parser("verify", help="check a cycle certificate")
    p.add_argument("--graph", required=True, help="base graph edge-list file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cert", required=True, help="certificate JSON file")

    p = sub.add_parser("graycode", help="emit a Gray code listing")
    p.add_argument("--relation", required=True, choices=("transposition", "adjacent", "apart2", "fan"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="hub count (fan relation only)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("brute", help="exhaustive Hamiltonian search")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--path", action="store_true", help="search for a Hamiltonian path instead")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    return parser


def _cmd_fan_cycle(args) -> int:
    feasibility = fan_feasibility(args.m, args.n, args.k)
    if feasibility.status == HAMILTONIAN:
        cert = feasibility.certificate
        if args.normalize:
            cert = normalize_certificate(cert)
        if args.format == "json":
            sys.stdout.write(cert.to_json())
        else:
            fan = (args.m, args.n)
            for vertex in cert.cycle:
                sys.stdout.write(format_token(vertex, fan=fan) + "\n")
            if cert.marker is not None:
                sys.stdout.write(f"marker: {cert.marker[0]} {cert.marker[1]}\n")
        return EXIT_OK
    if feasibility.status == NOT_HAMILTONIAN:
        if feasibility.witness is not None:
            if args.format == "json":
                sys.stdout.write(feasibility.witness.to_json())
            else:
                fan = (args.m, args.n)
                for vertex in feasibility.witness.cut:
                    sys.stdout.write(format_token(vertex, fan=fan) + "\n")
                sys.stdout.write(f"cut_size: {feasibility.witness.cut_size}\n")
                sys.stdout.write(f"components: {feasibility.witness.component_count}\n")
        else:
            if args.format == "json":
                sys.stdout.write(
                    json.dumps({"verdict": "not_hamiltonian", "reason": feasibility.reason}) + "\n"
                )
            else:
                sys.stdout.write(f"not hamiltonian: {feasibility.reason}\n")
        return EXIT_NEGATIVE
    if args.format == "json":
        sys.stdout.write(json.dumps({"verdict": "unknown", "reason": feasibility.reason}) + "\n")
    else:
        sys.stdout.write(f"unknown: {feasibility.reason}\n")
    return EXIT_UNKNOWN


def _cmd_token_graph(args) -> int:
    try:
        params = [int(x) for x in args.params.split(",") if x.strip() != ""]
    except ValueError:
        raise _UsageError(f"--params must be comma-separated integers, got {args.params!r}")
    base = build_family(args.family, params)
    tg = token_graph(base, args.k, cap=args.cap)
    if args.out == "edges":
        sys.stdout.write(to_edge_list(tg.graph))
    else:
        fan = tuple(params) if args.family == "fan" else None
        labels = [f'"{format_token(tg.vertex(r), fan=fan)}"' for r in range(tg.graph.order)]
        sys.stdout.write(to_dot(tg.graph, labels=labels))
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph = parse_edge_list(Path(args.graph).read_text())
    cert = CycleCertificate.from_json(Path(args.cert).read_text())
    verdict = verify_cycle(graph, args.k, cert)
    sys.stdout.write(verdict.to_json())
    return EXIT_OK if verdict.ok else EXIT_REJECT


def _cmd_graycode(args) -> int:
    if args.relation == "fan":
        if args.m is None:
            raise _UsageError("--relation fan requires --m")
        listing = fan_gray_code(args.m, args.n, args.k)
        verdict = verify_code(listing, fan_relation(args.m, args.n))
        if not verdict.ok:
            raise ParameterError(f"constructed listing failed verification: {verdict.reason}")
        status = FOUND
    else:
        rel = ClosenessRelation(args.relation, args.n)
        status, listing = search_gray_code(rel, args.k, budget=args.budget)
    if status == FOUND:
        if args.format == "json":
            sys.stdout.write(json.dumps(listing.to_json_dict()) + "\n")
        else:
            sys.stdout.write(listing.to_text())
        return EXIT_OK
    if status == BUDGET_EXHAUSTED:
        sys.stdout.write("budget\n")
        return EXIT_UNKNOWN
    sys.stdout.write("none\n")
    return EXIT_NEGATIVE


def _cmd_brute(args) -> int:
    graph = parse_edge_list(Path(args.graph).read_text())
    if args.path:
        result = brute_ham_path(graph, budget=args.budget)
    else:
        result = brute_ham_cycle(graph, budget=args.budget)
    if result.found:
        sys.stdout.write(" ".join(str(v) for v in result.sequence) + "\n")
        return EXIT_OK
    if result.status == BUDGET_EXHAUSTED:
        sys.stdout.write("budget\n")
        return EXIT_UNKNOWN
    sys.stdout.write("none\n")
    return EXIT_NEGATIVE


_HANDLERS = {
    "fan-cycle": _cmd_fan_cycle,
    "token-graph": _cmd_token_graph,
    "verify": _cmd_verify,
    "graycode": _cmd_graycode,
    "brute": _cmd_brute,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (ParameterError, ContractViolation) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
