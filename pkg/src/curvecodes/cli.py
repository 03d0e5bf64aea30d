"""Command-line front end. Each subcommand validates its flags, sends one
request through the service client (in-process unless --server is given),
and renders the response as text, CSV, or JSON.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .client import ServiceClient, ServiceError, UsageError

SECTIONS_HELP = (
    "qseries, hecke, points, table1, genus, table2, dualpath, codes42, "
    "example13, shokrollahi, bounds"
)


def _add_curve_flags(sub: argparse.ArgumentParser, need_a: bool = False) -> None:
    sub.add_argument("--level", type=int, help="catalog level of the curve")
    sub.add_argument(
        "--family",
        choices=["xpx"],
        help="use the y^2 = x^p - x family instead of a catalog level",
    )
    sub.add_argument("--p", type=int, required=True, help="field characteristic")
    if need_a:
        sub.add_argument(
            "--a", type=int, required=True, help="pole-order bound at infinity"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecodes",
        description="evaluation codes on curves over prime fields, exactly",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the raw JSON response")
    common.add_argument("--server", help="post to a running service instead of in-process")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("points", parents=[common], help="rational points of a curve model")
    _add_curve_flags(sp)

    sm = subs.add_parser("model", parents=[common], help="catalog model and discriminant for a level")
    sm.add_argument("--level", type=int, required=True)

    sg = subs.add_parser("genus", parents=[common], help="genus of the level-N curve")
    sg.add_argument("--N", type=int, required=True)

    sc = subs.add_parser("code", parents=[common], help="parameters of a one-point evaluation code")
    _add_curve_flags(sc, need_a=True)
    sc.add_argument("--show-matrices", action="store_true")
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--max-words", type=int)

    sw = subs.add_parser("weights", parents=[common], help="exact weight distribution of a code")
    _add_curve_flags(sw, need_a=True)
    sw.add_argument("--convention", choices=["table2", "plain"], default="table2")
    sw.add_argument("--strategy", choices=["auto", "direct", "dual"], default="auto")
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--max-words", type=int)

    sb = subs.add_parser("bounds", parents=[common], help="rate bound curves as CSV")
    sb.add_argument("--q", type=int, required=True)
    sb.add_argument("--grid", type=int, default=1000)
    sb.add_argument("--genus", type=int)
    sb.add_argument("--n", type=int)

    sq = subs.add_parser("qseries", parents=[common], help="classical q-expansions")
    sq.add_argument(
        "--which", choices=["j", "delta", "eta11", "e4", "e6", "eta"], required=True
    )
    sq.add_argument("--M", type=int, default=60, help="truncation order")
    sq.add_argument(
        "--eta-spec",
        help="comma-separated scale:exponent factors for --which eta, e.g. 1:2,11:2",
    )

    sh = subs.add_parser(
        "hecke", parents=[common], help="trace by point count, cross-checked at level 11"
    )
    sh.add_argument("--N", type=int, required=True)
    sh.add_argument("--p", type=int, required=True)

    subs.add_parser(
        "conic-example", parents=[common], help="the conic-intersection worked example"
    )

    sr = subs.add_parser("reproduce", parents=[common], help="run the full reproduction suite")
    sr.add_argument("--only", help=f"restrict to one section: {SECTIONS_HELP}")
    sr.add_argument("--include-slow", action="store_true")
    sr.add_argument("--jobs", type=int, default=1)

    sv = subs.add_parser("serve", help="run the HTTP service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8000)

    return parser


def _render_points(resp: dict) -> str:
    lines = [f"[{x}, {y}]" for x, y in resp["affine"]]
    lines.extend(["inf"] * resp["infinity"])
    lines.append(f"count: {resp['count']}")
    return "\n".join(lines)


def _render_code(resp: dict) -> str:
    lines = [
        f"[{resp['n']}, {resp['k']}, {resp['d']}] over GF({resp['p']}), "
        f"{'MDS' if resp['mds'] else 'not MDS'}, corrects {resp['t']} errors",
        f"construction: {resp['provenance']}",
    ]
    for key, title in (
        ("generator", "generator matrix"),
        ("systematic", "systematic form"),
        ("check", "check matrix"),
    ):
        if resp.get(key):
            lines.append(f"{title}:")
            lines.extend("  " + " ".join(str(v) for v in row) for row in resp[key])
    if resp.get("column_permutation"):
        lines.append(f"column permutation: {resp['column_permutation']}")
    return "\n".join(lines)


def _render_bounds_csv(resp: dict) -> str:
    lines = [",".join(resp["columns"])]
    for row in resp["rows"]:
        lines.append(",".join(repr(v) for v in row))
    return "\n".join(lines)


def _payload_points(args) -> tuple[str, dict]:
    return "/v1/points", {"level": args.level, "family": args.family, "p": args.p}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    client = ServiceClient(base_url=args.server)
    try:
        path, payload, render = _dispatch(args)
        resp = client.call(path, payload)
    except ServiceError as exc:
        print(f"error ({exc.error_type}): {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(resp, indent=2))
    else:
        print(render(resp))
    return 0


def _dispatch(args):
    if args.command == "points":
        path, payload = _payload_points(args)
        return path, payload, _render_points
    if args.command == "model":
        return (
            "/v1/model",
            {"level": args.level},
            lambda r: f"level {r['level']}: {r['equation']}\ndiscriminant: {r['discriminant']}",
        )
    if args.command == "genus":
        return (
            "/v1/genus",
            {"N": args.N},
            lambda r: (
                f"N={r['N']} mu={r['mu']} mu2={r['mu2']} mu3={r['mu3']} "
                f"mu_inf={r['mu_inf']} genus={r['genus']}"
            ),
        )
    if args.command == "code":
        payload = {
            "level": args.level,
            "family": args.family,
            "p": args.p,
            "a": args.a,
            "with_matrices": args.show_matrices,
            "jobs": args.jobs,
        }
        if args.max_words is not None:
            payload["max_words"] = args.max_words
        return "/v1/code", payload, _render_code
    if args.command == "weights":
        payload = {
            "level": args.level,
            "family": args.family,
            "p": args.p,
            "a": args.a,
            "convention": args.convention,
            "strategy": args.strategy,
            "jobs": args.jobs,
        }
        if args.max_words is not None:
            payload["max_words"] = args.max_words
        return "/v1/weights", payload, lambda r: r["polynomial"]
    if args.command == "bounds":
        payload = {"q": args.q, "grid": args.grid}
        if args.genus is not None:
            payload["genus"] = args.genus
        if args.n is not None:
            payload["n"] = args.n
        return "/v1/bounds", payload, _render_bounds_csv
    if args.command == "qseries":
        payload = {"which": args.which, "M": args.M}
        if args.eta_spec:
            factors = []
            for part in args.eta_spec.split(","):
                try:
                    d, e = part.split(":")
                    factors.append((int(d), int(e)))
                except ValueError:
                    raise UsageError(
                        f"bad eta factor {part!r}, expected scale:exponent"
                    ) from None
            payload["eta_spec"] = factors
        return (
            "/v1/qseries",
            payload,
            lambda r: r["text"]
            + f"\n(lowest exponent {r['lowest_exponent']}, truncation {r['truncation']})",
        )
    if args.command == "hecke":
        return "/v1/hecke", {"N": args.N, "p": args.p}, lambda r: r["text"]
    if args.command == "conic-example":
        return (
            "/v1/conic-example",
            {},
            lambda r: "\n".join(
                f"{row['status']:7s} {row['id']:3s} {row['description']}"
                + (f"  [{row['detail']}]" if row["detail"] else "")
                for row in r["rows"]
            ),
        )
    if args.command == "reproduce":
        payload = {"only": args.only, "include_slow": args.include_slow, "jobs": args.jobs}
        return "/v1/reproduce", payload, lambda r: r["text"]
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
