"""Command-line client for the HTTP service.

Every subcommand maps onto one service endpoint. By default the app is
driven in-process (no socket, no network); pass ``--server URL`` to
talk to a running instance instead. Data goes to stdout, diagnostics to
stderr; identical invocations produce byte-identical output.

Exit codes: 0 success; 1 domain error (or a failed validate/verify);
2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Callable, Optional

import httpx

Payload = Optional[dict]
Renderer = Callable[[dict], str]
Failure = Optional[Callable[[dict], bool]]


# --------------------------------------------------------------------------
# transport

def _request(server: Optional[str], method: str, path: str,
             payload: Payload) -> tuple[int, dict]:
    if server:
        with httpx.Client(base_url=server, timeout=30.0) as client:
            resp = client.request(method, path, json=payload)
            return resp.status_code, resp.json()

    async def run() -> tuple[int, dict]:
        from .service import create_app  # deferred: keeps --help snappy

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://dodeca.invalid"
        ) as client:
            resp = await client.request(method, path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(run())


# --------------------------------------------------------------------------
# small parsers for argument strings

def _int_list(text: str, what: str = "integer list") -> list[int]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    toks = body.replace(",", " ").split()
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ValueError(f"not an {what}: {text!r}") from None


def _fmt_pcs(pcs: list[int]) -> str:
    return "[" + ", ".join(str(p) for p in pcs) + "]"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_cycles(cs: list[list[int]]) -> str:
    return "".join(
        "(" + " ".join(str(x) for x in c) + ")" for c in cs
    )


# --------------------------------------------------------------------------
# renderers (service JSON -> plain text)

def _r_modes_list(body: dict) -> str:
    return "\n".join(
        f"mode {m['index']}  period {m['period']}  {_fmt_pcs(m['pcs'])}  "
        + " ".join(m["note_names"])
        for m in body["modes"]
    )


def _r_classify(body: dict) -> str:
    lines = [
        f"limited: {_fmt_bool(body['is_limited'])}",
        f"period: {body['period']}",
    ]
    if body["truncations"] is not None:
        if body["truncations"]:
            lines.append("truncation of: " + ", ".join(
                f"mode {t['mode']} (t={t['transposition']})"
                for t in body["truncations"]
            ))
        else:
            lines.append("truncation of: none")
    return "\n".join(lines)


def _r_enumerate(body: dict) -> str:
    lines = [f"count: {body['count']}"]
    if body.get("closure_holds") is not None:
        lines.append(
            f"closure: {body['closure_classified']}/"
            f"{body['closure_nondegenerate']} nondegenerate subsets are "
            f"mode truncations (holds: {_fmt_bool(body['closure_holds'])})"
        )
    for sub in body["subsets"]:
        line = f"{_fmt_pcs(sub['pcs'])} period {sub['period']}"
        if sub["degenerate"]:
            line += " degenerate"
        lines.append(line)
    return "\n".join(lines)


def _r_pcs(body: dict) -> str:
    return _fmt_pcs(body["pcs"])


def _r_stabilizer(body: dict) -> str:
    return " ".join(str(t) for t in body["transpositions"])


def _r_period(body: dict) -> str:
    return str(body["period"])


def _r_validate(body: dict) -> str:
    if body["valid"]:
        return "valid"
    return f"invalid: {body['reason']}"


def _r_forms(body: dict) -> str:
    return "\n".join(
        f"{f['label']}: " + " ".join(str(p) for p in f["row"])
        for f in body["forms"]
    )


def _r_nrr(body: dict) -> str:
    return _fmt_bool(body["non_retrogradable"])


def _r_durations(body: dict) -> str:
    return " ".join(body["durations"])


def _r_total(body: dict) -> str:
    if body["is_prime"] is None:
        return body["total"]
    tag = "prime" if body["is_prime"] else "not prime"
    return f"{body['total']} ({tag})"


def _r_chain(body: dict) -> str:
    if not body["found"]:
        return "none"
    return (
        "block: " + " ".join(body["block"])
        + "\nfactors: " + " ".join(body["factors"])
    )


def _r_interleave(body: dict) -> str:
    return (
        f"odd: {' '.join(body['odd'])} ({body['odd_shape']})\n"
        f"even: {' '.join(body['even'])} ({body['even_shape']})"
    )


def _r_images(body: dict) -> str:
    return " ".join(str(i) for i in body["images"])


def _r_order(body: dict) -> str:
    return str(body["order"])


def _r_cycles(body: dict) -> str:
    return _fmt_cycles(body["cycles"])


def _r_iterate(body: dict) -> str:
    return "\n".join(" ".join(state) for state in body["orbit"])


def _r_chronochromie(body: dict) -> str:
    return "\n".join([
        "images: " + " ".join(str(i) for i in body["images"]),
        "cycles: " + _fmt_cycles(body["cycles"]),
        f"order: {body['order']}",
        f"documented return steps: {body['documented_return_steps']}",
        f"matches documented: {_fmt_bool(body['matches_documented'])}",
    ])


def _r_ratio(body: dict) -> str:
    return body["ratio"]


def _r_factors(body: dict) -> str:
    return " ".join(body["factors"])


def _r_ratios_lines(body: dict) -> str:
    return "\n".join(body["ratios"])


def _r_divcheck(body: dict) -> str:
    return _fmt_bool(body["divisible"])


def _r_verify(body: dict) -> str:
    if body["ok"]:
        return "exact"
    return f"residual: {body['residual']}"


def _r_means(body: dict) -> str:
    geometric = body["geometric"]
    return "\n".join([
        f"arithmetic: {body['arithmetic']}",
        f"geometric: {geometric if geometric is not None else 'irrational'}",
        f"harmonic: {body['harmonic']}",
    ])


def _r_cents(body: dict) -> str:
    return f"{body['cents']:.3f}"


def _r_decompose(body: dict) -> str:
    return "\n".join(" ".join(fs) for fs in body["decompositions"])


def _r_table(body: dict) -> str:
    return body["table"].rstrip("\n")


# --------------------------------------------------------------------------
# per-leaf request builders

def _perm_spec(args: argparse.Namespace) -> dict:
    if args.images is not None:
        return {"images": _int_list(args.images, "image list")}
    if args.fan is not None:
        return {"fan": args.fan}
    return {"chronochromie": True}


def _h_modes_list(args):
    return "GET", "/api/modes", None, _r_modes_list


def _h_modes_classify(args):
    payload = {"pcs": _int_list(args.set, "pitch-class list"),
               "modulus": args.modulus}
    return "POST", "/api/modes/classify", payload, _r_classify


def _h_modes_enumerate(args):
    return ("POST", "/api/modes/enumerate",
            {"modulus": args.modulus}, _r_enumerate)


def _h_pcs_transpose(args):
    payload = {"pcs": _int_list(args.set, "pitch-class list"),
               "t": args.t, "modulus": args.modulus}
    return "POST", "/api/pcs/transpose", payload, _r_pcs


def _h_pcs_invert(args):
    payload = {"pcs": _int_list(args.set, "pitch-class list"),
               "axis": args.axis, "modulus": args.modulus}
    return "POST", "/api/pcs/invert", payload, _r_pcs


def _h_pcs_stabilizer(args):
    payload = {"pcs": _int_list(args.set, "pitch-class list"),
               "modulus": args.modulus}
    return "POST", "/api/pcs/stabilizer", payload, _r_stabilizer


def _h_pcs_period(args):
    payload = {"pcs": _int_list(args.set, "pitch-class list"),
               "modulus": args.modulus}
    return "POST", "/api/pcs/period", payload, _r_period


def _h_row_validate(args):
    payload = {"row": _int_list(args.row, "pitch-class list")}
    return "POST", "/api/row/validate", payload, _r_validate


def _h_row_forms(args):
    payload = {"row": _int_list(args.row, "pitch-class list")}
    return "POST", "/api/row/forms", payload, _r_forms


def _h_rhythm_nrr(args):
    return "POST", "/api/rhythm/nrr", {"durations": args.durations}, _r_nrr


def _h_rhythm_augment(args):
    payload = {"durations": args.durations, "factor": args.factor}
    return "POST", "/api/rhythm/augment", payload, _r_durations


def _h_rhythm_amplify(args):
    payload = {"durations": args.durations, "wing": args.wing}
    return "POST", "/api/rhythm/amplify", payload, _r_durations


def _h_rhythm_central(args):
    payload = {"durations": args.durations, "delta": args.delta}
    return "POST", "/api/rhythm/central", payload, _r_durations


def _h_rhythm_total(args):
    return "POST", "/api/rhythm/total", {"durations": args.durations}, _r_total


def _h_rhythm_chain(args):
    return "POST", "/api/rhythm/chain", {"durations": args.durations}, _r_chain


def _h_rhythm_interleave(args):
    return ("POST", "/api/rhythm/interleave",
            {"durations": args.durations}, _r_interleave)


def _h_perm_fan(args):
    return "GET", f"/api/perm/fan/{args.n}", None, _r_images


def _h_perm_order(args):
    return "POST", "/api/perm/order", {"perm": _perm_spec(args)}, _r_order


def _h_perm_cycles(args):
    return "POST", "/api/perm/cycles", {"perm": _perm_spec(args)}, _r_cycles


def _h_perm_iterate(args):
    payload: dict = {"perm": _perm_spec(args)}
    if args.sequence is not None:
        payload["sequence"] = args.sequence.split()
    return "POST", "/api/perm/iterate", payload, _r_iterate


def _h_perm_chronochromie(args):
    return "GET", "/api/perm/chronochromie", None, _r_chronochromie


def _h_ratio_combine(args):
    return "POST", "/api/ratio/combine", {"ratios": args.ratios}, _r_ratio


def _h_ratio_difference(args):
    return ("POST", "/api/ratio/difference",
            {"a": args.a, "b": args.b}, _r_ratio)


def _h_ratio_split2(args):
    return "POST", "/api/ratio/split2", {"ratio": args.ratio}, _r_factors


def _h_ratio_split3(args):
    return "POST", "/api/ratio/split3", {"ratio": args.ratio}, _r_factors


def _h_ratio_smooth(args):
    payload = {"primes": _int_list(args.primes, "prime list"),
               "bound": args.bound}
    return "POST", "/api/ratio/smooth", payload, _r_ratios_lines


def _h_ratio_divcheck(args):
    payload = {"ratio": args.ratio, "parts": args.parts}
    return "POST", "/api/ratio/divcheck", payload, _r_divcheck


def _h_ratio_verify(args):
    payload = {"factors": args.factors, "target": args.target}
    return "POST", "/api/ratio/verify", payload, _r_verify


def _h_ratio_means(args):
    return "POST", "/api/ratio/means", {"a": args.a, "b": args.b}, _r_means


def _h_ratio_cents(args):
    return "POST", "/api/ratio/cents", {"ratio": args.ratio}, _r_cents


def _h_ratio_decompose(args):
    payload = {"ratio": args.ratio, "parts": args.parts,
               "max_den": args.max_den}
    return "POST", "/api/ratio/decompose", payload, _r_decompose


def _h_catalog_analyze(args):
    if args.bundled:
        payload: dict = {"bundled": True}
    else:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        payload = {"tsv": text}
    return "POST", "/api/catalog/analyze", payload, _r_table


# --------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the raw service response as JSON")
    common.add_argument("--server", metavar="URL", default=None,
                        help="talk to a running service instead of "
                             "in-process")

    mod = argparse.ArgumentParser(add_help=False)
    mod.add_argument("--modulus", type=int, default=12, metavar="N",
                     help="pitch classes per octave (default 12)")

    parser = argparse.ArgumentParser(
        prog="dodeca",
        description="Exact pitch-class, rhythm, permutation, and "
                    "interval-ratio computations.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    # modes
    modes = groups.add_parser("modes", help="modes of limited transposition")
    sub = modes.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("list", parents=[common],
                       help="the seven modes with periods and note names")
    p.set_defaults(handler=_h_modes_list)
    p = sub.add_parser("classify", parents=[common, mod],
                       help="limited-transposition status of a pc-set")
    p.add_argument("set", help='pitch classes, e.g. "[0, 3, 6, 9]"')
    p.set_defaults(handler=_h_modes_classify)
    p = sub.add_parser("enumerate", parents=[common, mod],
                       help="every limited-transposition subset of Z_n")
    p.set_defaults(handler=_h_modes_enumerate)

    # pcs
    pcs = groups.add_parser("pcs", help="pitch-class set operations")
    sub = pcs.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("transpose", parents=[common, mod])
    p.add_argument("set")
    p.add_argument("t", type=int, help="translation amount")
    p.set_defaults(handler=_h_pcs_transpose)
    p = sub.add_parser("invert", parents=[common, mod])
    p.add_argument("set")
    p.add_argument("--axis", type=int, default=0,
                   help="inversion axis (default 0)")
    p.set_defaults(handler=_h_pcs_invert)
    p = sub.add_parser("stabilizer", parents=[common, mod])
    p.add_argument("set")
    p.set_defaults(handler=_h_pcs_stabilizer)
    p = sub.add_parser("period", parents=[common, mod])
    p.add_argument("set")
    p.set_defaults(handler=_h_pcs_period)

    # row
    row = groups.add_parser("row", help="twelve-tone rows")
    sub = row.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("validate", parents=[common])
    p.add_argument("row", help='twelve pitch classes, e.g. "0 11 3 ..."')
    p.set_defaults(handler=_h_row_validate, fails=lambda b: not b["valid"])
    p = sub.add_parser("forms", parents=[common])
    p.add_argument("row")
    p.set_defaults(handler=_h_row_forms)

    # rhythm
    rhythm = groups.add_parser("rhythm", help="duration-sequence operations")
    sub = rhythm.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("nrr", parents=[common],
                       help="is the sequence non-retrogradable?")
    p.add_argument("durations", help='rational durations, e.g. "2 1 2"')
    p.set_defaults(handler=_h_rhythm_nrr)
    p = sub.add_parser("augment", parents=[common])
    p.add_argument("durations")
    p.add_argument("--factor", required=True,
                   help='augmentation factor, e.g. "3/2"')
    p.set_defaults(handler=_h_rhythm_augment)
    p = sub.add_parser("amplify", parents=[common])
    p.add_argument("durations")
    p.add_argument("--wing", required=True,
                   help="rhythm added on the left, retrograded on the right")
    p.set_defaults(handler=_h_rhythm_amplify)
    p = sub.add_parser("central", parents=[common])
    p.add_argument("durations")
    p.add_argument("--delta", required=True,
                   help="amount added to the central value")
    p.set_defaults(handler=_h_rhythm_central)
    p = sub.add_parser("total", parents=[common])
    p.add_argument("durations")
    p.set_defaults(handler=_h_rhythm_total)
    p = sub.add_parser("chain", parents=[common],
                       help="detect a block repeated under one ratio")
    p.add_argument("durations")
    p.set_defaults(handler=_h_rhythm_chain)
    p = sub.add_parser("interleave", parents=[common],
                       help="split into position-parity subsequences")
    p.add_argument("durations")
    p.set_defaults(handler=_h_rhythm_interleave)

    # perm
    perm = groups.add_parser("perm", help="permutation operations")
    sub = perm.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("fan", parents=[common],
                       help="the center-outward fan permutation")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_h_perm_fan)

    def add_spec(p: argparse.ArgumentParser) -> None:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--images", help='1-based images, e.g. "2 3 1 4"')
        g.add_argument("--fan", type=int, metavar="N")
        g.add_argument("--chronochromie", action="store_true")

    p = sub.add_parser("order", parents=[common])
    add_spec(p)
    p.set_defaults(handler=_h_perm_order)
    p = sub.add_parser("cycles", parents=[common])
    add_spec(p)
    p.set_defaults(handler=_h_perm_cycles)
    p = sub.add_parser("iterate", parents=[common],
                       help="orbit of a sequence under repeated application")
    add_spec(p)
    p.add_argument("--sequence", help='elements, e.g. "a b c d" '
                                      "(default: 1..n)")
    p.set_defaults(handler=_h_perm_iterate)
    p = sub.add_parser("chronochromie", parents=[common],
                       help="the 32-element interversion permutation")
    p.set_defaults(handler=_h_perm_chronochromie)

    # ratio
    ratio = groups.add_parser("ratio", help="exact interval arithmetic")
    sub = ratio.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("combine", parents=[common])
    p.add_argument("ratios", nargs="+", help='ratios, e.g. 3/2 4/3')
    p.set_defaults(handler=_h_ratio_combine)
    p = sub.add_parser("difference", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_h_ratio_difference)
    p = sub.add_parser("split2", parents=[common],
                       help="two-factor superparticular split")
    p.add_argument("ratio")
    p.set_defaults(handler=_h_ratio_split2)
    p = sub.add_parser("split3", parents=[common],
                       help="three-factor superparticular split")
    p.add_argument("ratio")
    p.set_defaults(handler=_h_ratio_split3)
    p = sub.add_parser("smooth", parents=[common],
                       help="superparticulars with smooth terms")
    p.add_argument("--primes", required=True, help='e.g. "2,3,5"')
    p.add_argument("--bound", type=int, default=10**6,
                   help="search bound on denominators (default 10^6)")
    p.set_defaults(handler=_h_ratio_smooth)
    p = sub.add_parser("divcheck", parents=[common],
                       help="can the ratio split into k equal rational "
                            "parts?")
    p.add_argument("ratio")
    p.add_argument("parts", type=int)
    p.set_defaults(handler=_h_ratio_divcheck)
    p = sub.add_parser("verify", parents=[common],
                       help="do the factors multiply to the target?")
    p.add_argument("target")
    p.add_argument("factors", nargs="+")
    p.set_defaults(handler=_h_ratio_verify, fails=lambda b: not b["ok"])
    p = sub.add_parser("means", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_h_ratio_means)
    p = sub.add_parser("cents", parents=[common])
    p.add_argument("ratio")
    p.set_defaults(handler=_h_ratio_cents)
    p = sub.add_parser("decompose", parents=[common],
                       help="superparticular factorizations under a "
                            "denominator cap")
    p.add_argument("ratio")
    p.add_argument("parts", type=int)
    p.add_argument("max_den", type=int)
    p.set_defaults(handler=_h_ratio_decompose)

    # catalog
    catalog = groups.add_parser("catalog", help="rhythm corpus analysis")
    sub = catalog.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("analyze", parents=[common])
    p.add_argument("file", nargs="?", default=None,
                   help='corpus TSV path, or "-" for stdin')
    p.add_argument("--bundled", action="store_true",
                   help="analyze the embedded corpus")
    p.set_defaults(handler=_h_catalog_analyze)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    if getattr(args, "handler", None) is _h_catalog_analyze:
        if (args.file is None) == (not args.bundled):
            print("usage error: catalog analyze takes either FILE or "
                  "--bundled", file=sys.stderr)
            return 2

    try:
        method, path, payload, render = args.handler(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        status, body = _request(args.server, method, path, payload)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 1

    if status == 200:
        if args.json:
            print(json.dumps(body, indent=2, sort_keys=True,
                             ensure_ascii=False))
        else:
            print(render(body))
        fails = getattr(args, "fails", None)
        return 1 if fails is not None and fails(body) else 0
    if status == 400:
        print(f"error: {body.get('detail', body)}", file=sys.stderr)
        return 1
    if status == 422:
        print(f"usage error: {json.dumps(body.get('detail', body))}",
              file=sys.stderr)
        return 2
    print(f"error: service returned {status}: {body}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
