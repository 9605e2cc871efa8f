"""Command-line front end.

Exit codes: 0 ok or positive verdict, 1 negative verdict, 2 usage/input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from . import acceptance, analysis, canonicality, coin_core, recurrences
from .coin_core import CoinSystem
from .errors import GreedySeqError
from .recurrences import MINUS, PLUS, NonHomogParams, Type1Params, Type2Params

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: Any = None
    status: str = "ok"
    error_kind: Optional[str] = None
    message: Optional[str] = None
    exit_code: int = field(default=EXIT_OK, repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "status": self.status,
            "error_kind": self.error_kind,
        }
        if self.message is not None:
            out["message"] = self.message
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        d = json.loads(text)
        return cls(
            command=d["command"],
            inputs=d["inputs"],
            result=d["result"],
            status=d["status"],
            error_kind=d["error_kind"],
            message=d.get("message"),
        )


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _params(args) -> recurrences.Params:
    if args.a is None or args.p is None or args.q is None:
        raise UsageError("-a, -p and -q are required")
    if args.family == "type1":
        return Type1Params(args.a, args.p, args.q)
    if args.family == "type2":
        return Type2Params(args.a, args.p, args.q)
    if args.r is None:
        raise UsageError("-r is required for the nonhomog family")
    sign = PLUS if args.sign == "plus" else MINUS
    return NonHomogParams(args.a, args.p, args.q, args.r, sign)


def _interval_family(params) -> tuple[str, int]:
    if isinstance(params, Type2Params):
        return "type2", params.p
    if isinstance(params, NonHomogParams) and params.sign == MINUS:
        return "type2", params.p
    return "type1", params.p


def cmd_pay(args) -> OutputRecord:
    system = CoinSystem.parse(args.set)
    if args.amount < 0:
        raise UsageError("amount must be nonnegative")
    if args.mode == "greedy":
        pv = coin_core.greedy_payment(system, args.amount)
    else:
        limit = _env_int("GREEDY_DP_LIMIT", coin_core.DEFAULT_DP_LIMIT)
        pv = coin_core.optimal_payment(system, args.amount, limit)
    result = {"counts": list(pv.counts), "cost": pv.cost, "amount": pv.amount}
    return OutputRecord("pay", {"set": list(system), "amount": args.amount, "mode": args.mode}, result)


def cmd_check(args) -> OutputRecord:
    system = CoinSystem.parse(args.set)
    if args.mode == "greedy":
        rep = canonicality.is_greedy(system)
    else:
        rep = analysis.find_counterexample(
            system.denoms, _env_int("GREEDY_DP_LIMIT", coin_core.DEFAULT_DP_LIMIT)
        )
    rec = OutputRecord("check", {"set": list(system), "mode": args.mode}, rep.to_dict())
    rec.exit_code = EXIT_OK if rep.verdict.positive else EXIT_NEGATIVE
    return rec


def _n(args) -> int:
    n = args.n if args.n is not None else _env_int("GREEDY_DEPTH", analysis.DEFAULT_DEPTH)
    if n < 1:
        raise UsageError("-n must be positive")
    return n


def cmd_gen(args) -> OutputRecord:
    params = _params(args)
    n = _n(args)
    terms = recurrences.generate(params, n)
    result = {"params": params.to_dict(), "terms": terms}
    rec = OutputRecord("gen", {**params.to_dict(), "n": n, "verify": args.verify}, result)
    if args.verify:
        rep = analysis.find_counterexample(
            terms, _env_int("GREEDY_DP_LIMIT", coin_core.DEFAULT_DP_LIMIT)
        )
        result["report"] = rep.to_dict()
        family, p = _interval_family(params)
        result["ratio_analysis"] = (
            analysis.compute_k0(terms, family, p, n - 1).to_dict() if n >= 6 else None
        )
        rec.exit_code = EXIT_OK if rep.verdict.positive else EXIT_NEGATIVE
    return rec


def cmd_subseq(args) -> OutputRecord:
    params = _params(args)
    if isinstance(params, NonHomogParams):
        raise UsageError("subsequences are defined for type1 and type2 only")
    n = _n(args)
    if args.parity == "odd":
        sub = recurrences.odd_subsequence(params, n)
    else:
        sub = recurrences.even_subsequence_modified(params, n)
    rep = canonicality.is_totally_greedy(CoinSystem(sub.terms))
    result = {
        "terms": sub.terms,
        "transformed_params": sub.params.to_dict(),
        "base_equality_holds": sub.base_equality_holds,
        "report": rep.to_dict(),
    }
    inputs = {**params.to_dict(), "parity": args.parity, "n": n}
    return OutputRecord("subseq", inputs, result)


def cmd_k0(args) -> OutputRecord:
    params = _params(args)
    horizon = args.horizon
    terms = recurrences.generate(params, horizon + 1)
    family, p = _interval_family(params)
    ra = analysis.compute_k0(terms, family, p, horizon)
    return OutputRecord("k0", {**params.to_dict(), "horizon": horizon}, ra.to_dict())


def cmd_roots(args) -> OutputRecord:
    roots = recurrences.char_roots(args.p, args.q, args.family, args.a)
    inputs = {"family": args.family, "p": args.p, "q": args.q, "a": args.a}
    return OutputRecord("roots", inputs, roots.to_dict())


def cmd_verify_paper(args) -> OutputRecord:
    rows = acceptance.run_all()
    rec = OutputRecord("verify-paper", {}, {"checks": [r.to_dict() for r in rows]})
    rec.exit_code = EXIT_OK if all(r.passed for r in rows) else EXIT_NEGATIVE
    return rec


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")

    parser = _Parser(prog="greedyseq", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pay", parents=[common], help="pay an amount")
    p.add_argument("--set", required=True, help="comma-separated denominations")
    p.add_argument("--amount", type=int, required=True)
    p.add_argument("--mode", choices=["greedy", "optimal"], default="greedy")
    p.set_defaults(func=cmd_pay)

    p = sub.add_parser("check", parents=[common], help="greediness of a coin system")
    p.add_argument("--set", required=True)
    p.add_argument("--mode", choices=["greedy", "totally-greedy"], default="greedy")
    p.set_defaults(func=cmd_check)

    def seq_args(p, families):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("-a", type=int)
        p.add_argument("-p", type=int)
        p.add_argument("-q", type=int)

    p = sub.add_parser("gen", parents=[common], help="generate sequence terms")
    seq_args(p, ["type1", "type2", "nonhomog"])
    p.add_argument("-r", type=int)
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")
    p.add_argument("-n", type=int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("subseq", parents=[common], help="odd or modified even subsequence")
    seq_args(p, ["type1", "type2"])
    p.add_argument("--parity", choices=["odd", "even"], required=True)
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_subseq, r=None, sign="plus")

    p = sub.add_parser("k0", parents=[common], help="ratio onset analysis")
    seq_args(p, ["type1", "type2", "nonhomog"])
    p.add_argument("-r", type=int)
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")
    p.add_argument("--horizon", type=int, default=20)
    p.set_defaults(func=cmd_k0)

    p = sub.add_parser("roots", parents=[common], help="characteristic roots")
    p.add_argument("--family", choices=["type1", "type2"], required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-a", type=int)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify-paper", parents=[common], help="run every acceptance check")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def _render_text(rec: OutputRecord) -> str:
    if rec.status == "error":
        return f"error [{rec.error_kind}]: {rec.message}"
    r = rec.result
    if rec.command == "pay":
        return f"vector ({', '.join(map(str, r['counts']))}), cost {r['cost']}"
    if rec.command == "check":
        return _render_report(r)
    if rec.command == "gen":
        lines = [" ".join(map(str, r["terms"]))]
        if "report" in r:
            lines.append(_render_report(r["report"]))
            ra = r.get("ratio_analysis")
            if ra is not None:
                lines.append(f"K0 = {ra['k0']} for interval {tuple(ra['interval'])}")
        return "\n".join(lines)
    if rec.command == "subseq":
        tp = r["transformed_params"]
        lines = [
            " ".join(map(str, r["terms"])),
            f"recurrence X_k = {tp['p']} X_(k-1) - {tp['q']} X_(k-2)",
        ]
        if r["base_equality_holds"] is not None:
            lines.append(f"base equality holds: {str(r['base_equality_holds']).lower()}")
        lines.append(_render_report(r["report"]))
        return "\n".join(lines)
    if rec.command == "k0":
        lo, hi = r["interval"]
        text = f"K0 = {r['k0']} for interval ({lo}, {hi}) up to n = {r['horizon']}"
        if r["worst_case_bracket"] is not None:
            text += f"\nJ4/J3 in (p-2, p-1]: {str(r['worst_case_bracket']).lower()}"
        return text
    if rec.command == "roots":
        lines = [f"lambda = {r['lambda']}", f"mu     = {r['mu']}", f"disc   = {r['discriminant']}"]
        if r["c1"] is not None:
            lines += [f"c1     = {r['c1']}", f"c2     = {r['c2']}"]
        return "\n".join(lines)
    if rec.command == "verify-paper":
        rows = r["checks"]
        width = max(len(c["key"]) for c in rows)
        lines = [
            f"{'PASS' if c['passed'] else 'FAIL'}  {c['key']:<{width}}  {c['detail']}" for c in rows
        ]
        lines.append(f"{sum(c['passed'] for c in rows)}/{len(rows)} checks passed")
        return "\n".join(lines)
    return json.dumps(r)


def _render_report(r: dict) -> str:
    text = r["verdict"]
    if r["failing_prefix_length"] is not None:
        text += f" (failing prefix length {r['failing_prefix_length']})"
    if r["witness_amount"] is not None:
        text += (
            f", witness {r['witness_amount']}"
            f" (greedy {r['greedy_cost_at_witness']}, optimal {r['optimal_cost_at_witness']})"
        )
    return text


def run(argv: Optional[list[str]] = None) -> OutputRecord:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if not a.startswith("-")), "")
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return OutputRecord(command, {"argv": argv}, None, "error", "UsageError", str(exc), EXIT_USAGE)
    except GreedySeqError as exc:
        return OutputRecord(command, {"argv": argv}, None, "error", exc.kind, str(exc), EXIT_USAGE)
    except ValueError as exc:
        return OutputRecord(command, {"argv": argv}, None, "error", "InvalidInput", str(exc), EXIT_USAGE)


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "-h" in argv or "--help" in argv:
        build_parser().parse_args(argv)  # prints help and exits
    rec = run(argv)
    as_json = "--json" in argv
    out = rec.to_json() if as_json else _render_text(rec)
    stream = sys.stderr if rec.status == "error" and not as_json else sys.stdout
    print(out, file=stream)
    return rec.exit_code


if __name__ == "__main__":
    sys.exit(main())
