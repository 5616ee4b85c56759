"""Command-line surface: construct / count / verify / report.

Exit codes: 0 success, 1 malformed input (with a file:line:column diagnostic
where one exists), 2 verification failure (witness included in the output).
Every construct subcommand writes a parameter sidecar sufficient to
reproduce its artifact bit-exactly; randomness always flows from --seed
(or the CORNERFORGE_SEED environment variable).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .avoiders import (
    build_corner_avoider,
    build_five_point_avoider,
    lift_avoider,
    load_avoider,
    verify_corner_avoidance,
)
from .behrend import (
    behrend_3ap_free,
    behrend_qc_free,
    behrend_sum_free,
    find_qc_witness,
    find_relation_witness,
    qc_coefficients,
)
from .contfrac import AlphaSequence, build_alpha_hard, verify_alpha
from .diamond import verify_diamond_free
from .formats import (
    ParseError,
    read_grid_set,
    read_group_set,
    read_hypergraph,
    read_kernel,
    read_residues,
    read_tripartite,
    write_grid_set,
    write_group_set,
    write_residues,
    write_spectrum_csv,
)
from .hypergraph import (
    edge_density,
    hom_count,
    kforce_density,
    kforce_motif,
    single_edge_motif,
    triforce_motif,
    triforce_weighted,
)
from .mandache import kernel_fingerprint, mandache_report, sample_mandache
from .patterns import GridSet, Group, Pattern, spectrum

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_VERIFY_FAILED = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # malformed command lines are malformed input
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


class VerificationFailure(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _parse_group(text: str) -> Group:
    parts = text.replace(":", " ").split()
    if len(parts) == 2 and parts[0] == "zN":
        return Group.zmod(int(parts[1]))
    if len(parts) == 3 and parts[0] == "fp":
        return Group.vector(int(parts[1]), int(parts[2]))
    raise ValueError(f"unknown group {text!r}; use 'zN:<N>' or 'fp:<p>:<n>'")


def _parse_pattern(text: str) -> Pattern:
    if text.startswith("corner"):
        return Pattern.corner(int(text[len("corner") :]))
    if text.startswith("ap"):
        return Pattern.arithmetic(int(text[len("ap") :]))
    if text.startswith("a:"):
        return Pattern.one_dim(int(v) for v in text[2:].split(","))
    if text.startswith("points:"):
        pts = [tuple(int(c) for c in chunk.split(",")) for chunk in text[7:].split(";")]
        return Pattern(len(pts[0]), tuple(pts))
    raise ValueError(f"unknown pattern {text!r}; use cornerK, apK, a:..., or points:...")


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def _parse_seeds(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi)))
    return [int(v) for v in text.split(",")]


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CORNERFORGE_SEED")
    return int(env) if env else 0


def _write_params(args, payload: dict) -> None:
    path = getattr(args, "params_out", None)
    if path is None and getattr(args, "output", None):
        path = args.output + ".params.json"
    if path is None:
        return
    payload = {"tool_version": __version__, **payload}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _open_out(args):
    if getattr(args, "output", None):
        return open(args.output, "w")
    return contextlib.nullcontext(sys.stdout)


def _sniff_set(path: str):
    with open(path) as fh:
        head = fh.readline().split()
    with open(path) as fh:
        if head and head[0] == "group":
            return read_group_set(fh, path)
        return read_grid_set(fh, path)


# -- construct ----------------------------------------------------------------


def _cmd_construct_residue(args, builder, name):
    out = builder(args.length)
    with _open_out(args) as fh:
        write_residues(fh, out.members, args.length)
    _write_params(
        args,
        {
            "command": f"construct {name}",
            "length": args.length,
            "size": len(out),
            "params": {
                "dim": out.params.dim,
                "base": out.params.base,
                "headroom": out.params.headroom,
                "radius_sq": out.params.radius_sq,
            },
        },
    )
    return EXIT_OK


def _cmd_construct_qcfree(args):
    a = _parse_ints(args.a)
    out = behrend_qc_free(a, args.length)
    with _open_out(args) as fh:
        write_residues(fh, out.members, args.length)
    _write_params(
        args,
        {
            "command": "construct qcfree",
            "a": list(a),
            "length": args.length,
            "size": len(out),
            "qc_system": json.loads(qc_coefficients(a).to_json()),
        },
    )
    return EXIT_OK


def _cmd_construct_alpha(args):
    seq = build_alpha_hard(args.m, Fraction(args.r))
    with _open_out(args) as fh:
        fh.write(seq.to_json() + "\n")
    _write_params(args, {"command": "construct alpha", "m": args.m, "r": str(args.r)})
    return EXIT_OK


def _cmd_construct_corner3d(args):
    avoider = build_corner_avoider(
        args.delta,
        args.c,
        length=args.length,
        q_max=args.q_max,
        n_target=args.n_target,
    )
    grid = avoider.materialize()
    with _open_out(args) as fh:
        write_grid_set(fh, grid)
    _write_params(args, json.loads(avoider.params.to_json(avoider.alpha)))
    report = avoider.density_report()
    print(
        f"side {grid.side}, {len(grid)} members, density {report['measured_float']:.5f} "
        f"(target {report['target_float']:.5f})",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_construct_fivepoint(args):
    avoider = build_five_point_avoider(
        _parse_ints(args.a),
        args.delta,
        args.c,
        length=args.length,
        q_max=args.q_max,
        n_target=args.n_target,
    )
    grid = avoider.materialize()
    with _open_out(args) as fh:
        write_grid_set(fh, grid)
    _write_params(args, json.loads(avoider.params.to_json(avoider.alpha)))
    return EXIT_OK


def _cmd_construct_lift(args):
    pattern = _parse_pattern(args.pattern)
    with open(args.base) as fh:
        base = read_grid_set(fh, args.base)
    lifted = lift_avoider(pattern, base)
    with _open_out(args) as fh:
        write_grid_set(fh, lifted)
    _write_params(
        args,
        {"command": "construct lift", "pattern": args.pattern, "base": args.base, "side": lifted.side},
    )
    return EXIT_OK


def _cmd_construct_mandache(args):
    with open(args.kernel) as fh:
        kernel = read_kernel(fh, args.kernel)
    group = _parse_group(args.group)
    seed = _seed(args)
    pairs = sample_mandache(kernel, group, seed)
    with _open_out(args) as fh:
        write_group_set(fh, pairs)
    _write_params(
        args,
        {
            "command": "construct mandache",
            "kernel_hash": kernel_fingerprint(kernel),
            "group": group.label(),
            "seed": seed,
            "size": len(pairs),
        },
    )
    return EXIT_OK


# -- count --------------------------------------------------------------------


def _cmd_count_spectrum(args):
    carrier = _sniff_set(args.set)
    pattern = _parse_pattern(args.pattern) if args.pattern else None
    spec = spectrum(carrier, pattern, threads=args.threads)
    with _open_out(args) as fh:
        if args.format == "csv":
            write_spectrum_csv(fh, spec)
        else:
            best = spec.max_entry()
            json.dump(
                {
                    "counts": {key: count for key, count in spec.rows()},
                    "total": spec.total(),
                    "max_d": None if best is None else str(best[0]),
                    "max_count": None if best is None else best[1],
                },
                fh,
                indent=2,
            )
            fh.write("\n")
    return EXIT_OK


def _cmd_count_density(args):
    carrier = _sniff_set(args.set)
    if isinstance(carrier, GridSet):
        total = carrier.side**carrier.dim
    else:
        total = carrier.group.order ** 2
    density = Fraction(len(carrier), total)
    print(json.dumps({"members": len(carrier), "cells": total, "density": str(density), "density_float": float(density)}))
    return EXIT_OK


def _cmd_count_homs(args):
    with open(args.hypergraph) as fh:
        h = read_hypergraph(fh, args.hypergraph)
    name = args.motif
    if name == "triforce":
        motif = triforce_motif()
    elif name.startswith("kforce"):
        motif = kforce_motif(int(name[len("kforce") :]))
    elif name.startswith("edge"):
        motif = single_edge_motif(int(name[len("edge") :]))
    else:
        raise ValueError(f"unknown motif {name!r}; use triforce, kforceK, or edgeK")
    count = hom_count(motif, h)
    print(
        json.dumps(
            {
                "motif": name,
                "hom_count": count,
                "density": str(Fraction(count, h.n**motif.n)),
                "edge_density": str(edge_density(h)),
                "kforce_density": str(kforce_density(h)) if motif.k == h.k else None,
            }
        )
    )
    return EXIT_OK


def _cmd_count_triforce(args):
    with open(args.kernel) as fh:
        kernel = read_kernel(fh, args.kernel)
    value = triforce_weighted(kernel)
    print(
        json.dumps(
            {
                "triforce": str(value),
                "triforce_float": float(value),
                "mean": str(kernel.mean()),
                "mean_fourth_power": str(kernel.mean() ** 4),
            }
        )
    )
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _input_path(args, flag: str, positional: str) -> str:
    path = getattr(args, flag, None) or getattr(args, positional, None)
    if path is None:
        raise ValueError(f"missing input file: pass --{flag} or a positional path")
    return path


def _cmd_verify_diamondfree(args):
    path = _input_path(args, "graph", "graph_path")
    with open(path) as fh:
        graph = read_tripartite(fh, path)
    verdict = verify_diamond_free(graph)
    if verdict is True:
        print(json.dumps({"diamond_free": True, "edges": graph.edge_count()}))
        return EXIT_OK
    family, edge, count = verdict
    raise VerificationFailure(
        "edge in the wrong number of triangles",
        witness={"family": family, "edge": list(edge), "triangles": count},
    )


def _cmd_verify_relationfree(args):
    relation = _parse_ints(args.relation)
    path = _input_path(args, "set", "set_path")
    with open(path) as fh:
        members, _ = read_residues(fh, path)
    witness = find_relation_witness(members, relation)
    if witness is None:
        print(json.dumps({"relation_free": True, "relation": list(relation), "size": len(members)}))
        return EXIT_OK
    raise VerificationFailure("nontrivial solution found", witness=list(witness))


def _cmd_verify_qcfree(args):
    a = _parse_ints(args.a)
    path = _input_path(args, "set", "set_path")
    with open(path) as fh:
        members, _ = read_residues(fh, path)
    witness = find_qc_witness(qc_coefficients(a), members)
    if witness is None:
        print(json.dumps({"qc_free": True, "a": list(a), "size": len(members)}))
        return EXIT_OK
    raise VerificationFailure("quadratic configuration found", witness=list(witness))


def _cmd_verify_alpha(args):
    with open(args.alpha) as fh:
        seq = AlphaSequence.from_json(fh.read())
    indices = _parse_ints(args.indices) if args.indices else range(seq.start_index, seq.start_index + 5)
    rows = []
    failed = False
    for i in indices:
        check = verify_alpha(seq, i)
        rows.append(
            {
                "i": i,
                "q": check.q,
                "guaranteed": check.guaranteed,
                "smooth": check.smooth_ok,
                "interval": check.interval_ok if check.guaranteed else "not guaranteed",
                "approx": check.approx_ok,
            }
        )
        if check.guaranteed and not check.passed:
            failed = True
    print(json.dumps({"checks": rows}, indent=2))
    if failed:
        raise VerificationFailure("a guaranteed index failed its checks", witness=rows)
    return EXIT_OK


def _cmd_verify_avoidance(args):
    with open(args.set) as fh:
        grid = read_grid_set(fh, args.set)
    with open(args.params) as fh:
        avoider = load_avoider(fh.read(), grid)
    report = verify_corner_avoidance(avoider)
    with _open_out(args) as fh:
        report.write_csv(fh)
    if not report.all_ok():
        bad = [r for r in report.rows if not (r[3] and r[4] and r[5])]
        raise VerificationFailure(
            "avoidance bound or transfer check failed",
            witness={"d": bad[0][0], "count": bad[0][1]},
        )
    d, count = report.max_count()
    print(f"max corners {count} at d={d}; bound {float(report.rows[0][2]):.1f}", file=sys.stderr)
    return EXIT_OK


# -- report ------------------------------------------------------------------


def _cmd_report_mandache(args):
    with open(args.kernel) as fh:
        kernel = read_kernel(fh, args.kernel)
    group = _parse_group(args.group)
    report = mandache_report(kernel, group, _parse_seeds(args.seeds))
    with _open_out(args) as fh:
        fh.write(report.to_json() + "\n")
    return EXIT_OK


# -- wiring -------------------------------------------------------------------


def _add_output(p, required=False):
    p.add_argument("-o", "--output", required=required, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cornerforge", description=__doc__)
    parser.add_argument("--version", action="version", version=f"cornerforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build sets, streams, and samples").add_subparsers(
        dest="what", required=True
    )
    for name, builder in (("behrend", behrend_3ap_free), ("sumfree", behrend_sum_free)):
        p = construct.add_parser(name)
        p.add_argument("--length", "--L", "-L", type=int, required=True)
        _add_output(p)
        p.add_argument("--params-out")
        p.set_defaults(func=lambda a, b=builder, n=name: _cmd_construct_residue(a, b, n))
    p = construct.add_parser("qcfree")
    p.add_argument("--a", required=True, help="five distinct integers, comma-separated")
    p.add_argument("--length", "--L", "-L", type=int, required=True)
    _add_output(p)
    p.add_argument("--params-out")
    p.set_defaults(func=_cmd_construct_qcfree)
    p = construct.add_parser("alpha")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", required=True, help="positive rational scale, e.g. 2 or 5/4")
    _add_output(p)
    p.add_argument("--params-out")
    p.set_defaults(func=_cmd_construct_alpha)
    for name, fn in (("corner3d", _cmd_construct_corner3d), ("fivepoint", _cmd_construct_fivepoint)):
        p = construct.add_parser(name)
        p.add_argument("--delta", type=float, required=True)
        p.add_argument("--c", type=float, default=0.1)
        p.add_argument("--length", "--L", "-L", type=int, help="override the interval count L")
        p.add_argument("--q-max", type=int, default=600)
        p.add_argument("--n-target", type=int, help="pick N within a factor of 4 of this")
        if name == "fivepoint":
            p.add_argument("--a", required=True)
        _add_output(p)
        p.add_argument("--params-out")
        p.set_defaults(func=fn)
    p = construct.add_parser("lift")
    p.add_argument("--pattern", required=True)
    p.add_argument("--base", required=True, help="grid set file of the base avoider")
    _add_output(p)
    p.add_argument("--params-out")
    p.set_defaults(func=_cmd_construct_lift)
    p = construct.add_parser("mandache")
    p.add_argument("--kernel", required=True)
    p.add_argument("--group", required=True, help="zN:<N> or fp:<p>:<n>")
    p.add_argument("--seed", type=int)
    _add_output(p)
    p.add_argument("--params-out")
    p.set_defaults(func=_cmd_construct_mandache)

    count = sub.add_parser("count", help="densities and spectra").add_subparsers(
        dest="what", required=True
    )
    p = count.add_parser("spectrum")
    p.add_argument("--set", required=True)
    p.add_argument("--pattern", help="cornerK, apK, a:..., or points:... (grid sets only)")
    p.add_argument("--threads", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_output(p)
    p.set_defaults(func=_cmd_count_spectrum)
    p = count.add_parser("density")
    p.add_argument("--set", required=True)
    p.set_defaults(func=_cmd_count_density)
    p = count.add_parser("homs")
    p.add_argument("--motif", required=True, help="triforce, kforceK, or edgeK")
    p.add_argument("--hypergraph", required=True)
    p.set_defaults(func=_cmd_count_homs)
    p = count.add_parser("triforce")
    p.add_argument("--kernel", required=True)
    p.set_defaults(func=_cmd_count_triforce)

    verify = sub.add_parser("verify", help="check artifacts; exit 2 with a witness on failure").add_subparsers(
        dest="what", required=True
    )
    p = verify.add_parser("diamondfree")
    p.add_argument("graph_path", nargs="?", help="graph file (alternative to --graph)")
    p.add_argument("--graph")
    p.set_defaults(func=_cmd_verify_diamondfree)
    p = verify.add_parser("relationfree")
    p.add_argument("--relation", required=True, help="coefficients, e.g. 1,1,1,-3")
    p.add_argument("set_path", nargs="?", help="set file (alternative to --set)")
    p.add_argument("--set")
    p.set_defaults(func=_cmd_verify_relationfree)
    p = verify.add_parser("qcfree")
    p.add_argument("--a", required=True)
    p.add_argument("set_path", nargs="?", help="set file (alternative to --set)")
    p.add_argument("--set")
    p.set_defaults(func=_cmd_verify_qcfree)
    p = verify.add_parser("alpha")
    p.add_argument("--alpha", required=True, help="alpha sequence JSON file")
    p.add_argument("--indices", help="comma-separated indices (default: first five guaranteed)")
    p.set_defaults(func=_cmd_verify_alpha)
    p = verify.add_parser("avoidance")
    p.add_argument("--set", required=True)
    p.add_argument("--params", required=True, help="params JSON from construct corner3d")
    _add_output(p)
    p.set_defaults(func=_cmd_verify_avoidance)

    report = sub.add_parser("report", help="statistical summaries").add_subparsers(
        dest="what", required=True
    )
    p = report.add_parser("mandache")
    p.add_argument("--kernel", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--seeds", required=True, help="lo:hi range or comma list")
    _add_output(p)
    p.set_defaults(func=_cmd_report_mandache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except VerificationFailure as exc:
        print(json.dumps({"verified": False, "reason": str(exc), "witness": exc.witness}))
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
