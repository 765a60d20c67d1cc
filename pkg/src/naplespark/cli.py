"""Command-line front end; a thin client over the service handlers.

Exit codes: 0 on success, 1 when a verification ran but the claim failed
(the report is still printed), 2 on invalid arguments or inputs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from pydantic import BaseModel, ValidationError

from . import service
from .errors import ParkingError
from .schemas import (
    CountRequest,
    DecomposeRequest,
    EnumerateRequest,
    MapRequest,
    ParkRequest,
    StatsRequest,
    VerifyRequest,
)

FORMATS = ("json", "csv", "plain")


def _parse_prefs(text: str) -> list[int]:
    items = [chunk.strip() for chunk in text.split(",") if chunk.strip()]
    try:
        return [int(chunk) for chunk in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def _emit_json(model: BaseModel) -> None:
    print(json.dumps(model.model_dump()))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _lot_plain(lot) -> str:
    if lot is None:
        return "lot: none"
    ob = f"{lot.obstruction[0]}-{lot.obstruction[1]}" if lot.obstruction else "none"
    return f"lot: total={lot.total} obstruction={ob}"


def _emit_park(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        w = _csv_writer()
        w.writerow(["car", "pref", "spot", "mode", "path_lo", "path_hi"])
        for i, car in enumerate(resp.cars, 1):
            w.writerow([i, car.pref, car.spot, car.mode, car.path[0], car.path[1]])
    else:
        print(f"parked: {_join(resp.parked)}")
        print(f"failed_at: {resp.failed_at if resp.failed_at is not None else 'none'}")


def _emit_map(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        _csv_writer().writerow(resp.prefs)
    else:
        print(_join(resp.prefs))
        if resp.lot is not None:
            print(_lot_plain(resp.lot))


def _emit_decompose(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        w = _csv_writer()
        w.writerow(["part", "start", "len"])
        for i, part in enumerate(resp.parts, 1):
            w.writerow([i, part.start, part.len])
    else:
        for i, part in enumerate(resp.parts, 1):
            print(f"part {i}: {_join(part.prefs)}")
        print(f"boundary_cars: {_join(resp.boundary_cars)}")


def _emit_stats(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        w = _csv_writer()
        w.writerow(["ascents", "descents", "ties"])
        w.writerow([resp.ascents, resp.descents, resp.ties])
    else:
        print(f"ascents={resp.ascents} descents={resp.descents} ties={resp.ties}")


def _emit_enumerate(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        w = _csv_writer()
        for seq in resp.sequences:
            w.writerow(seq)
    else:
        for seq in resp.sequences:
            print(_join(seq))


def _emit_count(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        _csv_writer().writerow([resp.value])
    else:
        print(resp.value)


def _emit_verify(resp, fmt: str) -> None:
    if fmt == "json":
        _emit_json(resp)
    elif fmt == "csv":
        w = _csv_writer()
        w.writerow(["claim", "lhs", "rhs", "ok"])
        w.writerow([resp.claim, resp.lhs, resp.rhs, resp.ok])
    else:
        params = " ".join(f"{key}={val}" for key, val in resp.params.items())
        print(
            f"claim={resp.claim} {params} lhs={resp.lhs} rhs={resp.rhs} "
            f"ok={'yes' if resp.ok else 'no'}"
        )
        for seq in resp.counterexamples:
            print(f"counterexample: {_join(seq)}")


def _cmd_park(args) -> int:
    req = ParkRequest(
        family=args.family,
        prefs=args.prefs,
        n=args.n,
        k=args.k,
        obstruction_start=args.obstruction_start,
    )
    _emit_park(service.park(req), args.format)
    return 0


def _cmd_map(args) -> int:
    req = MapRequest(
        op=args.op,
        prefs=args.prefs,
        n=args.n,
        k=args.k,
        obstruction_start=args.obstruction_start,
    )
    _emit_map(service.apply_map(req), args.format)
    return 0


def _cmd_decompose(args) -> int:
    req = DecomposeRequest(prefs=args.prefs, n=args.n, k=args.k)
    _emit_decompose(service.decompose(req), args.format)
    return 0


def _cmd_stats(args) -> int:
    _emit_stats(service.sequence_stats(StatsRequest(prefs=args.prefs)), args.format)
    return 0


def _cmd_enumerate(args) -> int:
    req = EnumerateRequest(
        family=args.family,
        m=args.m,
        n=args.n,
        k=args.k,
        obstruction_start=args.obstruction_start,
        limit=args.limit,
        threads=args.threads,
        force=args.force,
    )
    _emit_enumerate(service.enumerate_members(req), args.format)
    return 0


def _cmd_count(args) -> int:
    req = CountRequest(formula=args.formula, m=args.m, n=args.n, k=args.k)
    _emit_count(service.count(req), args.format)
    return 0


def _cmd_verify(args) -> int:
    req = VerifyRequest(
        claim=args.claim,
        m=args.m,
        n=args.n,
        k=args.k,
        threads=args.threads,
        force=args.force,
    )
    resp = service.verify_claim(req)
    _emit_verify(resp, args.format)
    return 0 if resp.ok else 1


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("naplespark.api:app", host=args.host, port=args.port)
    return 0


def _add_common(sub, prefs=True):
    if prefs:
        sub.add_argument("--prefs", type=_parse_prefs, required=True,
                         help="comma-separated 1-based preferences, e.g. '4,9,6'")
    sub.add_argument("--format", choices=FORMATS, default="json")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="naplespark",
        description="Simulate, map, enumerate, count and verify parking functions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("park", help="simulate one parking run")
    p.add_argument("--family", choices=["classical", "naples", "obstructed"], required=True)
    p.add_argument("--n", type=int, required=True, help="parkable vertices")
    p.add_argument("--k", type=int, help="backup limit / obstruction length")
    p.add_argument("--obstruction-start", type=int, dest="obstruction_start")
    _add_common(p)
    p.set_defaults(handler=_cmd_park)

    p = subs.add_parser("map", help="apply a structural map")
    p.add_argument(
        "--op",
        choices=["phi", "phi-bar", "iota", "xi", "xi-inv", "xi-bar", "psi", "Psi"],
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--obstruction-start", type=int, dest="obstruction_start",
                   help="input block position, needed by phi-bar")
    _add_common(p)
    p.set_defaults(handler=_cmd_map)

    p = subs.add_parser("decompose", help="alternating run decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_decompose)

    p = subs.add_parser("stats", help="ascent/descent/tie counts")
    _add_common(p)
    p.set_defaults(handler=_cmd_stats)

    p = subs.add_parser("enumerate", help="stream family members lexicographically")
    p.add_argument("--family", type=str.upper,
                   choices=["PF", "NAPLES", "CONTAINED", "OPF", "LPF"], required=True)
    p.add_argument("--m", type=int, required=True, help="number of cars")
    p.add_argument("--n", type=int, required=True, help="parkable vertices")
    p.add_argument("--k", type=int)
    p.add_argument("--obstruction-start", type=int, dest="obstruction_start")
    p.add_argument("--limit", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true", help="lift the candidate-count guard")
    _add_common(p, prefs=False)
    p.set_defaults(handler=_cmd_enumerate)

    p = subs.add_parser("count", help="closed-form or recursive counts")
    p.add_argument(
        "--formula",
        choices=["classical", "contained", "lpf", "naples-recursive"],
        required=True,
    )
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    _add_common(p, prefs=False)
    p.set_defaults(handler=_cmd_count)

    p = subs.add_parser("verify", help="replay one identity exhaustively")
    p.add_argument(
        "--claim",
        choices=["bijection", "ties", "injection", "recursion", "lpf-count", "bound"],
        required=True,
    )
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true")
    _add_common(p, prefs=False)
    p.set_defaults(handler=_cmd_verify)

    p = subs.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as exc:
        print(f"error: invalid request: {exc}", file=sys.stderr)
        return 2
    except ParkingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
