"""Command-line interface.

    macvogan census  --group gl|sl --n INT --q INT [--format json|tsv]
    macvogan fibers  --n INT --q INT [--class FILE.json] [--format json|tsv]
    macvogan packet  --param FILE.json [--format json|tsv]
    macvogan example --which surjectivity|injectivity --n INT --q INT [--e INT]
    macvogan verify  --suite counting|twist|torsor|examples|all --n INT --q INT [--seed INT]

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .cuspidal import FieldParams
from .exceptions import MacVoganError
from .partitions import PartitionFn, enumerate_degree
from .sl import (
    census_record,
    check_compatibility_packet,
    check_finalcomp,
    class_record,
    hp_sl_packet,
    hp_sl_member,
    l_packet,
    mv_class_of,
    sl_canonicalize,
)
from .tame import TameParameter, component_group_inertial, component_group_L, iota_hat, stab_full
from .verify import SUITES, example_report, run_suite


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def _fn_str(M: PartitionFn) -> str:
    return " ".join(f"{t.d}:{t.orbit}:{','.join(map(str, lam.parts))}" for t, lam in M.entries) or "-"


def _field(q: int) -> FieldParams:
    try:
        return FieldParams(q)
    except MacVoganError as exc:
        raise UsageError(str(exc)) from None


def _positive(name, value):
    if value < 1:
        raise UsageError(f"--{name} must be >= 1")
    return value


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_census(args) -> tuple:
    F = _field(args.q)
    n = _positive("n", args.n)
    if args.group == "gl":
        fns = enumerate_degree(F, n)
        if args.format == "tsv":
            lines = ["representative"] + [_fn_str(M) for M in fns] + [f"# total={len(fns)}"]
            return 0, "\n".join(lines) + "\n"
        rec = {"group": "gl", "q": F.q, "N": n, "total": len(fns), "classes": [M.to_json_obj() for M in fns]}
        return 0, _dump(rec)
    rec = census_record(F, n)
    rec["group"] = "sl"
    if args.format == "tsv":
        return 0, _records_tsv(rec)
    return 0, _dump(rec)


def _records_tsv(rec) -> str:
    lines = ["representative\tstab_order\tfiber"]
    for c in rec["classes"]:
        M = PartitionFn.from_json_obj(c["representative"])
        fiber = ";".join(",".join(map(str, i)) or "()" for i in c["fiber"])
        lines.append(f"{_fn_str(M)}\t{c['stab_order']}\t{fiber}")
    lines.append(f"# total={sum(c['stab_order'] for c in rec['classes'])}")
    return "\n".join(lines) + "\n"


def cmd_fibers(args) -> tuple:
    F = _field(args.q)
    n = _positive("n", args.n)
    if args.class_file:
        try:
            M = PartitionFn.from_json_obj(_load_json(args.class_file))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed partition function: {exc}") from None
        if M.q != F.q or M.degree != n:
            raise UsageError(f"class has q={M.q}, degree {M.degree}; expected q={F.q}, N={n}")
        c = mv_class_of(M)
        rec = {"q": F.q, "N": n, "total": c.stab.order, "classes": [class_record(c)]}
    else:
        rec = census_record(F, n)
    if args.format == "tsv":
        return 0, _records_tsv(rec)
    return 0, _dump(rec)


def packet_record(P: TameParameter) -> dict:
    c = sl_canonicalize(P)
    ih = iota_hat(c.canonical)
    mv = hp_sl_packet(c)
    members = []
    for lab in l_packet(c):
        heads = sorted(x.torsor_index for x in hp_sl_member(c, lab.packet_index))
        members.append({"psi": list(lab.packet_index), "head": [list(h) for h in heads]})
    return {
        "parameter": P.to_json_obj(),
        "sl_class": c.canonical.to_json_obj(),
        "component_group_L": list(component_group_L(P).group.invariant_factors),
        "component_group_inertial": list(component_group_inertial(P).group.invariant_factors),
        "l_packet_size": stab_full(c.canonical).order,
        "mv_class": class_record(mv),
        "iota_hat": {
            "injective": ih.is_injective(),
            "surjective": ih.is_surjective(),
            "kernel_order": ih.kernel().order,
            "image_order": ih.image().order,
        },
        "members": members,
        "compatibility": check_compatibility_packet(P),
        "finalcomp": check_finalcomp(c),
    }


def cmd_packet(args) -> tuple:
    try:
        P = TameParameter.from_json_obj(_load_json(args.param))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed parameter: {exc}") from None
    rec = packet_record(P)
    if args.format == "tsv":
        lines = ["psi\thead"]
        for m in rec["members"]:
            head = ";".join(",".join(map(str, h)) or "()" for h in m["head"]) or "-"
            lines.append(f"{','.join(map(str, m['psi'])) or '()'}\t{head}")
        return 0, "\n".join(lines) + "\n"
    return 0, _dump(rec)


def _group_str(factors) -> str:
    return " x ".join(f"Z/{d}" for d in factors) or "1"


def cmd_example(args) -> tuple:
    F = _field(args.q)
    n = _positive("n", args.n)
    try:
        r = example_report(args.which, n, F.q, args.e)
    except MacVoganError as exc:
        raise UsageError(str(exc)) from None
    lines = [
        f"example: {r['example']}",
        f"q: {r['q']}",
        f"N: {r['N']}",
    ]
    if r["e"] is not None:
        lines.append(f"e: {r['e']}")
    lines += [
        f"parameter: {json.dumps(r['parameter'].to_json_obj(), sort_keys=True)}",
        f"l_packet_size: {r['l_packet_size']}",
        f"component_group_L: {_group_str(r['component_group_L'])}",
        f"mv_fiber_size: {r['mv_fiber_size']}",
        f"component_group_inertial: {_group_str(r['component_group_inertial'])}",
        f"iota_hat injective={str(r['iota_hat_injective']).lower()} "
        f"surjective={str(r['iota_hat_surjective']).lower()} "
        f"kernel_order={r['iota_hat_kernel_order']}",
        f"compatibility: {str(r['compatibility']).lower()}",
        f"finalcomp: {str(r['finalcomp']).lower()}",
    ]
    return 0, "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple:
    F = _field(args.q)
    n = _positive("n", args.n)
    checks = run_suite(args.suite, n, F.q, args.seed)
    lines = [c.line() for c in checks]
    failed = sum(not c.passed and not c.skipped for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed" if not failed else f"{failed} check(s) FAILED")
    return (1 if failed else 0), "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macvogan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("census", help="count irreducibles of GL_N(F_q) or SL_N(F_q)")
    p.add_argument("--group", choices=("gl", "sl"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("fibers", help="Macdonald-Vogan classes and their fibers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--class", dest="class_file", metavar="FILE.json")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("packet", help="L-packet and head labels of a tame parameter")
    p.add_argument("--param", required=True, metavar="FILE.json")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_packet)

    p = sub.add_parser("example", help="reproduce the two fiber-comparison examples")
    p.add_argument("--which", choices=("surjectivity", "injectivity"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--e", type=int)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        stderr.write(f"macvogan: error: {exc}\n")
        return 2
    except MacVoganError as exc:
        stderr.write(f"macvogan: error: {exc}\n")
        return 2
    stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
