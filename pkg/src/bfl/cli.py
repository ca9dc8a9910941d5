"""Command-line driver: one subcommand per check, deterministic reports.

Exit codes: 0 every verdict holds or is skipped, 1 some verdict fails,
2 indeterminate present without a failure, 64 usage error, 65 data error.
JSON output is byte-identical for identical argv + seed, with the timestamp
and elapsed time isolated in a "header" object; per-verdict wall times stay
a library-level detail and are dropped from the structured body.
"""

import argparse
import json
import sys
import time
from datetime import datetime, timezone

from .battery import standard_battery
from .catalog import FAMILIES, construct, order_formula, parse_blueprint
from .chartab import TableError, class_mult_count, load_table, product_support
from .classes import NormalSet, SelectorError, enumerate_classes, select_class
from .elements import Overflow
from .genfile import ParseError
from .modrep import cor22_check, lemma21_check
from .report import ScanPlan, Verdict, emit_report, exit_code
from .smallgroup import SmallGroup
from .wreath import wreath_section_detect
from . import verify

USAGE_EXIT = 64
DATA_EXIT = 65


class _ArgError(Exception):
    """Raised instead of argparse's sys.exit so main can map to exit 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError("%s: %s" % (self.prog, message))


def _add_common(sp):
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.add_argument("--out", help="write the report to this path")
    sp.add_argument("--dry-run", action="store_true",
                    help="resolve inputs and print the plan without computing")
    sp.add_argument("--threads", type=int, default=0,
                    help="worker bound; scans run serially and give "
                         "identical results for any value")


def _add_sampling(sp, samples=1000):
    sp.add_argument("--samples", type=int, default=samples)
    sp.add_argument("--seed", type=lambda s: int(s, 0), default=0xBF)


def _add_plan(sp, samples=1000):
    sp.add_argument("--plan", choices=("exhaustive", "sample"))
    _add_sampling(sp, samples)


def _build_parser():
    p = _Parser(prog="bfl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("catalog", help="describe a group blueprint")
    sp.add_argument("--group")
    _add_common(sp)

    sp = sub.add_parser("classes", help="list conjugacy classes")
    sp.add_argument("--group", required=True)
    _add_common(sp)

    for name in ("bf-pair", "wreath-free"):
        sp = sub.add_parser(name)
        sp.add_argument("--group", required=True)
        sp.add_argument("--c-class", required=True)
        sp.add_argument("--d-class", required=True)
        sp.add_argument("--p", type=int, required=True)
        _add_plan(sp)
        _add_common(sp)

    for name in ("comm-closed", "cc-inverse"):
        sp = sub.add_parser(name)
        sp.add_argument("--group", required=True)
        sp.add_argument("--class", dest="cls", action="append", required=True)
        sp.add_argument("--p", type=int, required=True)
        _add_common(sp)

    sp = sub.add_parser("structconst", help="class-algebra pair counts")
    sp.add_argument("--table", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--e", type=int)
    sp.add_argument("--list-support", action="store_true")
    _add_common(sp)

    sp = sub.add_parser("wreath-section")
    sp.add_argument("--group", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--tier", choices=("full", "quotient"), default="full")
    _add_common(sp)

    sp = sub.add_parser("repn-check", help="module dimension checks")
    sp.add_argument("--case", action="append",
                    help="battery case name (default: every case)")
    _add_common(sp)

    sp = sub.add_parser("scan-sym")
    sp.add_argument("--n", type=int, required=True)
    _add_plan(sp)
    _add_common(sp)

    sp = sub.add_parser("scan-o3")
    sp.add_argument("--q", type=int, action="append")
    _add_common(sp)

    sp = sub.add_parser("scan-sl2n3")
    _add_plan(sp)
    _add_common(sp)

    sp = sub.add_parser("l2q-trace")
    sp.add_argument("--q", type=int, action="append")
    _add_common(sp)

    sp = sub.add_parser("l2q-laurent")
    sp.add_argument("--q", type=int, action="append")
    _add_sampling(sp, samples=100)
    _add_common(sp)

    sp = sub.add_parser("identity-scan")
    sp.add_argument("--group", required=True)
    _add_sampling(sp)
    _add_common(sp)

    return p


def _plan_from(args, default=None):
    if getattr(args, "plan", None) == "exhaustive":
        return ScanPlan.exhaustive()
    if getattr(args, "plan", None) == "sample" or default is None:
        return ScanPlan.sample(args.samples, args.seed)
    return default


def _plan_dict(plan):
    if plan is None:
        return {"mode": "by-operation-default"}
    d = {"mode": plan.mode}
    if plan.mode == "sample":
        d["samples"] = plan.size
        d["seed"] = plan.seed
    return d


def _resolved_group(args):
    bp = parse_blueprint(args.group)
    return bp, construct(bp)


def _resolve_classes(G, specs):
    classes = enumerate_classes(G)
    return [select_class(classes, s) for s in specs]


# ---- subcommand handlers ---------------------------------------------------

def _cmd_catalog(args):
    if not args.group:
        if args.dry_run:
            return {"plan": {"action": "list families"}}
        return {"info": {"families": list(FAMILIES)}}
    bp = parse_blueprint(args.group)
    if args.dry_run:
        return {"plan": {"blueprint": str(bp), "family": bp.family,
                         "order_formula": order_formula(bp)}}
    G = construct(bp)
    order = order_formula(bp)
    if order is None:
        order = G.order()
    info = {"blueprint": str(bp), "family": bp.family, "order": order,
            "generators": len(G.gens), "element_kind": G.kind}
    return {"info": info}


def _cmd_classes(args):
    bp, G = _resolved_group(args)
    if args.dry_run:
        return {"plan": {"group": str(bp), "action": "enumerate classes"}}
    classes = enumerate_classes(G)
    rows = [{"label": c.label, "size": c.size, "order": c.order}
            for c in classes]
    return {"info": {"group": str(bp), "n_classes": len(rows),
                     "classes": rows}}


def _cmd_pair(args):
    bp, G = _resolved_group(args)
    c, d = _resolve_classes(G, (args.c_class, args.d_class))
    plan = _plan_from(args)
    if args.dry_run:
        return {"plan": {"group": str(bp), "p": args.p,
                         "c_class": {"label": c.label, "size": c.size},
                         "d_class": {"label": d.label, "size": d.size},
                         "scan": _plan_dict(plan)}}
    op = (verify.bf_pair_direct if args.command == "bf-pair"
          else verify.wreath_free_pair_check)
    return {"verdicts": [op(G, c, d, args.p, plan)]}


def _cmd_normal_set(args):
    bp, G = _resolved_group(args)
    C = NormalSet(_resolve_classes(G, args.cls))
    if args.dry_run:
        return {"plan": {"group": str(bp), "p": args.p,
                         "classes": list(C.labels), "set_size": C.size}}
    if args.command == "comm-closed":
        v = verify.commutator_closed_check(G, C, args.p)
    else:
        v = verify.cc_inverse_check(C, args.p)
    return {"verdicts": [v]}


def _cmd_structconst(args):
    T = load_table(args.table)
    for name, k in (("--i", args.i), ("--j", args.j)):
        if not 0 <= k < T.n_classes:
            raise _ArgError("%s must be in [0, %d)" % (name, T.n_classes))
    if args.e is not None and not 0 <= args.e < T.n_classes:
        raise _ArgError("--e must be in [0, %d)" % T.n_classes)
    if args.dry_run:
        return {"plan": {"table": T.name, "order": T.order,
                         "n_classes": T.n_classes, "i": args.i, "j": args.j,
                         "e": args.e, "list_support": bool(args.list_support
                                                           or args.e is None)}}
    info = {"table": T.name, "order": T.order, "i": args.i, "j": args.j}
    if args.e is not None:
        info["e"] = args.e
        info["count"] = class_mult_count(T, args.i, args.j, args.e)
    if args.list_support or args.e is None:
        support = product_support(T, args.i, args.j)
        info["support"] = [{"class": k, "element_order": T.element_order(k),
                            "size": T.size(k), "count": support[k]}
                           for k in sorted(support)]
    return {"info": info}


def _cmd_wreath_section(args):
    bp, G = _resolved_group(args)
    if args.dry_run:
        return {"plan": {"group": str(bp), "p": args.p, "tier": args.tier}}
    S = SmallGroup.from_group(G)
    sv = wreath_section_detect(S, args.p, tier=args.tier)
    scenario = "wreath-section:%s,p=%d,tier=%s" % (str(bp), args.p, args.tier)
    if sv.found:
        v = Verdict(scenario, "fails", witnesses=[sv.witness],
                    notes=["a Z_%d wr Z_%d section exists (tier=%s)"
                           % (args.p, args.p, sv.tier)])
    elif sv.tier == "full":
        v = Verdict(scenario, "holds",
                    notes=["no Z_%d wr Z_%d section (full subgroup search)"
                           % (args.p, args.p)])
    elif sv.tier == "quotient":
        v = Verdict(scenario, "indeterminate",
                    notes=["no section among quotients of the whole group; "
                           "subgroup sections unexplored (tier=quotient)"])
    else:
        v = Verdict(scenario, "indeterminate", notes=[sv.note])
    return {"verdicts": [v]}


def _cmd_repn_check(args):
    cases = standard_battery()
    if args.case:
        by_name = {c["name"]: c for c in cases}
        missing = [n for n in args.case if n not in by_name]
        if missing:
            raise _ArgError("unknown case(s) %s; known: %s"
                            % (", ".join(missing),
                               ", ".join(sorted(by_name))))
        cases = [by_name[n] for n in args.case]
    if args.dry_run:
        return {"plan": {"cases": [c["name"] for c in cases]}}
    verdicts = []
    for c in cases:
        verdicts.append(lemma21_check(c["group"], c["action"], c["p"],
                                      name=c["name"]))
        verdicts.append(cor22_check(c["group"], c["action"], c["p"],
                                    name=c["name"]))
    return {"verdicts": verdicts}


def _cmd_scan_sym(args):
    plan = None if args.plan is None else _plan_from(args)
    if args.dry_run:
        return {"plan": {"n": args.n, "scan": _plan_dict(plan)}}
    return {"verdicts": [verify.symmetric_bf_scan(args.n, plan)]}


def _cmd_scan_o3(args):
    qs = args.q or [3, 5, 7, 9]
    if args.dry_run:
        return {"plan": {"q": qs}}
    return {"verdicts": [verify.reflections_o3_scan(q) for q in qs]}


def _cmd_scan_sl2n3(args):
    plan = _plan_from(args)
    if args.dry_run:
        return {"plan": {"dimension": 4, "scan": _plan_dict(plan)}}
    return {"verdicts": [verify.sl2n3_scan(2, plan)]}


def _cmd_l2q_trace(args):
    qs = args.q or [3, 5, 7, 9, 11, 13]
    if args.dry_run:
        return {"plan": {"q": qs}}
    return {"verdicts": [verify.l2q_trace_identity(q) for q in qs]}


def _cmd_l2q_laurent(args):
    qs = args.q or [11, 13]
    if args.dry_run:
        return {"plan": {"q": qs, "samples": args.samples, "seed": args.seed}}
    return {"verdicts": [verify.l2q_laurent_scan(q, samples=args.samples,
                                                 seed=args.seed)
                         for q in qs]}


def _cmd_identity_scan(args):
    bp, G = _resolved_group(args)
    plan = ScanPlan.sample(args.samples, args.seed)
    if args.dry_run:
        return {"plan": {"group": str(bp), "scan": _plan_dict(plan)}}
    return {"verdicts": [verify.inversion_identity_scan(G, plan)]}


_HANDLERS = {
    "catalog": _cmd_catalog,
    "classes": _cmd_classes,
    "bf-pair": _cmd_pair,
    "wreath-free": _cmd_pair,
    "comm-closed": _cmd_normal_set,
    "cc-inverse": _cmd_normal_set,
    "structconst": _cmd_structconst,
    "wreath-section": _cmd_wreath_section,
    "repn-check": _cmd_repn_check,
    "scan-sym": _cmd_scan_sym,
    "scan-o3": _cmd_scan_o3,
    "scan-sl2n3": _cmd_scan_sl2n3,
    "l2q-trace": _cmd_l2q_trace,
    "l2q-laurent": _cmd_l2q_laurent,
    "identity-scan": _cmd_identity_scan,
}


# ---- output ----------------------------------------------------------------

def _timestamp():
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _json_verdict(v):
    d = v.to_json()
    del d["seconds"]
    return d


def _info_lines(info, indent=""):
    lines = []
    for key in info:
        val = info[key]
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append("%s%s:" % (indent, key))
            for row in val:
                cells = "  ".join("%s=%s" % (k, row[k]) for k in row)
                lines.append("%s  %s" % (indent, cells))
        elif isinstance(val, dict):
            lines.append("%s%s:" % (indent, key))
            lines.extend(_info_lines(val, indent + "  "))
        elif isinstance(val, list):
            lines.append("%s%s: %s" % (indent, key,
                                       " ".join(str(x) for x in val)))
        else:
            lines.append("%s%s: %s" % (indent, key, val))
    return lines


def _render(args, payload, elapsed):
    verdicts = payload.get("verdicts")
    code = exit_code(verdicts) if verdicts is not None else 0
    if args.format == "json":
        body = {"command": args.command,
                "header": {"timestamp": _timestamp(),
                           "elapsed_seconds": round(elapsed, 3)}}
        if verdicts is not None:
            body["verdicts"] = [_json_verdict(v) for v in verdicts]
            body["exit_code"] = code
        if "info" in payload:
            body["info"] = payload["info"]
        if "plan" in payload:
            body["plan"] = payload["plan"]
            body["dry_run"] = True
        text = json.dumps(body, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["# bfl %s  %s  (%.3fs)" % (args.command, _timestamp(),
                                            elapsed)]
        if "plan" in payload:
            lines.append("dry run; plan:")
            lines.extend(_info_lines(payload["plan"], "  "))
        if "info" in payload:
            lines.extend(_info_lines(payload["info"]))
        if verdicts is not None:
            lines.append(emit_report(verdicts, "human").rstrip("\n"))
            lines.append("exit: %d" % code)
        text = "\n".join(lines) + "\n"
    return text, code


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except _ArgError as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE_EXIT
    t0 = time.perf_counter()
    try:
        payload = _HANDLERS[args.command](args)
    except _ArgError as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE_EXIT
    except (TableError, ParseError) as e:
        print("error: %s" % e, file=sys.stderr)
        return DATA_EXIT
    except Overflow as e:
        print("error: %s" % e, file=sys.stderr)
        return DATA_EXIT
    except ValueError as e:  # bad blueprint, selector, prime, or parameter
        print("error: %s" % e, file=sys.stderr)
        return USAGE_EXIT
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return DATA_EXIT
    text, code = _render(args, payload, time.perf_counter() - t0)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print("error: cannot write %s: %s" % (args.out, e),
                  file=sys.stderr)
            return DATA_EXIT
    else:
        sys.stdout.write(text)
    return code
