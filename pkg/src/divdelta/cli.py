"""Command-line front end.

Subcommands: check, triples, enumerate, primitive, classify, family,
realize, verify.  Output is JSON on stdout (lower-camel-case keys, lists
ascending) unless --format picks csv or dot; enumerations above 100000
stream as JSON Lines.  Exit codes: 0 success, 1 verification failure,
2 usage or domain error.  Output is byte-identical for identical arguments:
no timestamps or timings are ever printed (timings live on the RunReport
object returned to callers of ``execute``).
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from divdelta import arith, classify, delta, graphs, polyfam, realize, verify

JSONL_THRESHOLD = 100_000


@dataclass(frozen=True)
class RunReport:
    command: str
    inputs: dict
    results: object
    elapsed_ms: int
    exit_code: int


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="divdelta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("check", help="membership, witness triples, primitivity")
    q.add_argument("n", type=int)

    q = sub.add_parser("triples", help="all witness triples of n")
    q.add_argument("n", type=int)

    q = sub.add_parser("enumerate", help="members up to a bound")
    q.add_argument("--max", type=int, required=True, dest="max_n")
    q.add_argument("--primitive-only", action="store_true")
    q.add_argument("--squares-only", action="store_true")
    q.add_argument("--odd-only", action="store_true")
    q.add_argument("--format", choices=("json", "csv"), default="json")

    q = sub.add_parser("primitive", help="square-times-primitive decompositions")
    q.add_argument("n", type=int)

    q = sub.add_parser("classify", help="membership with the deciding rule")
    q.add_argument("n", type=int)

    q = sub.add_parser("family", help="degree-3 generating family")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--c", type=int, required=True)
    g = q.add_mutually_exclusive_group()
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--square-scan", type=int, dest="square_scan")

    q = sub.add_parser("realize", help="split graph realizing a triple")
    q.add_argument("x", type=int)
    q.add_argument("y", type=int)
    q.add_argument("z", type=int)
    g = q.add_mutually_exclusive_group()
    g.add_argument("--da", type=int)
    g.add_argument("--all-active", action="store_true")
    q.add_argument("--format", choices=("json", "dot"), default="json")

    q = sub.add_parser("verify", help="run a self-verification suite")
    q.add_argument("--suite", required=True, choices=("bounds", "classification", "families", "graphs", "all"))
    q.add_argument("--max", type=int, default=100_000, dest="max_n")

    return p


def _triple_rows(triples):
    return [[t.x, t.y, t.z] for t in triples]


def _cmd_check(args, out):
    n = args.n
    arith.check_natural(n, minimum=2)
    member = delta.has_delta(n)
    payload = {
        "n": n,
        "member": member,
        "triples": _triple_rows(delta.delta_triples(n)),
        "primitive": delta.is_delta_primitive(n),
    }
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _cmd_triples(args, out):
    arith.check_natural(args.n, minimum=2)
    payload = {"n": args.n, "triples": _triple_rows(delta.delta_triples(args.n))}
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _member_row(n):
    return {
        "n": n,
        "member": True,
        "primitive": delta.is_delta_primitive(n),
        "tau": arith.tau(n),
        "squarefreePart": arith.squarefree_part(n),
    }


def _cmd_enumerate(args, out):
    members = delta.delta_set(args.max_n)
    if args.odd_only:
        members = [n for n in members if n % 2]
    if args.squares_only:
        members = [n for n in members if arith.is_perfect_square(n)[0]]
    rows = [_member_row(n) for n in members]
    if args.primitive_only:
        rows = [r for r in rows if r["primitive"]]
    if args.format == "csv":
        out.write("n,member,primitive,tau,squarefreePart\n")
        for r in rows:
            out.write(
                f"{r['n']},{str(r['member']).lower()},{str(r['primitive']).lower()},"
                f"{r['tau']},{r['squarefreePart']}\n"
            )
        return rows, 0
    if args.max_n > JSONL_THRESHOLD:
        for r in rows:
            out.write(json.dumps(r) + "\n")
        return rows, 0
    payload = {"max": args.max_n, "count": len(rows), "rows": rows}
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _cmd_primitive(args, out):
    n = args.n
    arith.check_natural(n, minimum=2)
    member = delta.has_delta(n)
    decs = delta.primitive_decompositions(n) if member else []
    payload = {
        "n": n,
        "member": member,
        "primitive": member and len(decs) == 1 and decs[0].alpha == 1,
        "decompositions": [[d.alpha, d.m] for d in decs],
    }
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _cmd_classify(args, out):
    arith.check_natural(args.n, minimum=2)
    verdict = classify.classify(args.n)
    payload = {
        "n": args.n,
        "member": verdict.decision.is_member,
        "rule": verdict.rule,
        "decision": verdict.decision.value,
    }
    if verdict.witness is not None:
        payload["witness"] = list(verdict.witness.as_tuple())
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _cmd_family(args, out):
    fam = polyfam.make_family(args.a, args.b, args.c)
    payload = {
        "a": fam.a,
        "b": fam.b,
        "c": fam.c,
        "alpha": fam.alpha,
        "beta": fam.beta,
        "n0": fam.n0,
    }
    if args.square_scan is not None:
        hits = polyfam.square_scan(fam, args.square_scan)
        payload["squares"] = [[h.x, h.value, h.primitive] for h in hits]
    else:
        payload["members"] = [[x, n] for x, n in polyfam.family_members(fam, args.count)]
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _realization_payload(params, s):
    return {
        "n": params.n,
        "triple": [params.x, params.y, params.z],
        "da": params.d_a,
        "kSize": params.k_size,
        "degrees": {lab: s.degree(lab) for lab in s.i_labels},
        "eta": {"ab": params.eta_ab, "bc": params.eta_bc, "ac": params.eta_ac, "abc": params.eta_abc},
        "sigma": params.n,
        "triangleType": graphs.triangle_type(s, s.i_labels).value,
        "balanced": graphs.shape_stats(s)[2],
        "graph": graphs.split_graph_to_json(s),
    }


def _cmd_realize(args, out):
    n = delta.triple_number(args.x, args.y, args.z)
    if args.all_active:
        gs = realize.active_realizations((n, args.x, args.y, args.z))
        if args.format == "dot":
            for s in gs:
                out.write(graphs.split_graph_dot(s, expand_clique=True))
            return None, 0
        rows = []
        for s in gs:
            params = realize.realization_params((n, args.x, args.y, args.z), s.degree("a"))
            rows.append(_realization_payload(params, s))
        payload = {"n": n, "triple": [args.x, args.y, args.z], "realizations": rows}
        out.write(json.dumps(payload) + "\n")
        return payload, 0
    d_a = args.da if args.da is not None else args.z
    params = realize.realization_params((n, args.x, args.y, args.z), d_a)
    s = realize.realize_graph(params)
    if args.format == "dot":
        out.write(graphs.split_graph_dot(s, expand_clique=True))
        return None, 0
    payload = _realization_payload(params, s)
    out.write(json.dumps(payload) + "\n")
    return payload, 0


def _cmd_verify(args, out):
    results = verify.run_suites([args.suite], args.max_n)
    code = 0
    for r in results:
        out.write(
            json.dumps(
                {"suite": r.suite, "checked": r.checked, "failures": r.failure_count, "ok": r.ok}
            )
            + "\n"
        )
        if not r.ok:
            code = 1
            for msg in r.failures:
                print(f"[{r.suite}] {msg}", file=sys.stderr)
    return None, code


_HANDLERS = {
    "check": _cmd_check,
    "triples": _cmd_triples,
    "enumerate": _cmd_enumerate,
    "primitive": _cmd_primitive,
    "classify": _cmd_classify,
    "family": _cmd_family,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
}


def execute(argv=None, out=None) -> RunReport:
    """Parse and run, returning the full report (callers get timings here;
    they are deliberately kept off the byte-stable stdout)."""
    out = out if out is not None else sys.stdout
    parser = _parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    payload, code = _HANDLERS[args.command](args, out)
    elapsed = int((time.perf_counter() - started) * 1000)
    inputs = {k: v for k, v in vars(args).items() if k != "command"}
    return RunReport(args.command, inputs, payload, elapsed, code)


def run(argv=None) -> int:
    try:
        return execute(argv).exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
