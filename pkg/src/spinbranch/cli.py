"""Command-line front end: weight/partition analysis, crystal-graph export,
and the verification suites, all with machine-readable output."""
from __future__ import annotations

import argparse
import json
import sys

from . import crystal as cr
from . import indices as ix
from . import verify as vf
from .core import InvalidCharacteristic, Weight, check_characteristic, res_p
from .sigseq import r_beta, reduced_product, seq_to_json


class ParseError(ValueError):
    pass


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def _check_partition(parts: tuple[int, ...], p: int) -> None:
    for k, (a, b) in enumerate(zip(parts, parts[1:]), start=1):
        if a < b:
            raise ParseError(f"parts increase at rows {k},{k + 1}: {a} < {b}")
        if a == b and a > 0 and (p == 0 or a % p != 0):
            raise ParseError(
                f"equal positive parts {a},{b} at rows {k},{k + 1}"
                f" are not divisible by p={p}"
            )
    if any(x < 0 for x in parts):
        raise ParseError("partition parts must be non-negative")


def _seq_jsonable(u):
    return json.loads(seq_to_json(u))


def _weight_report(lam: Weight) -> dict:
    p = lam.p
    if p:
        betas = sorted(range(p))
    else:
        betas = sorted(
            {lam.residue(i) for i in range(1, lam.n + 1)}
            | {res_p(lam.entry(i) + 1, 0) for i in range(1, lam.n + 1)}
        )
    indices = []
    for i in range(1, lam.n + 1):
        cls = ix.classify_index(lam, i)
        entry = {
            "i": i,
            "entry": lam.entry(i),
            "residue": cls.residue,
            "tensor_normal": cls.tensor_normal,
            "normal": cls.normal,
            "tensor_conormal": cls.tensor_conormal,
            "good": cls.good,
            "tensor_good": cls.tensor_good,
            "tensor_cogood": cls.tensor_cogood,
        }
        if i < lam.n and not cls.normal:
            entry["certificate"] = json.loads(
                ix.non_normal_certificate(lam, i).to_json()
            )
        indices.append(entry)
    r_maps = {}
    signatures = {}
    for beta in betas:
        u = r_beta(lam, beta)
        r_maps[str(beta)] = json.loads(u.to_json())
        signatures[str(beta)] = _seq_jsonable(reduced_product(u))
    return {"indices": indices, "r_maps": r_maps, "reduced_signatures": signatures}


def _partition_report(lam: cr.PStrictPartition) -> dict:
    width = max([1] + [v + 2 for v in lam.parts])
    contents = {}
    for i in cr.contents_for(lam.p, width):
        removable, addable = cr.rim_nodes(lam, i)
        reduced = cr.rim_signature(lam, i, reduced=True)
        et = cr.e_tilde(i, lam)
        ft = cr.f_tilde(i, lam)
        contents[str(i)] = {
            "removable": [list(nd) for nd in removable],
            "addable": [list(nd) for nd in addable],
            "signature": _seq_jsonable(cr.rim_signature(lam, i)),
            "reduced": _seq_jsonable(reduced),
            "good": [list(nd) for nd in cr.good_nodes(lam, i)],
            "normal": [list(nd) for nd in cr.normal_nodes(lam, i)],
            "conormal": [list(nd) for nd in cr.conormal_nodes(lam, i)],
            "cogood": [list(nd) for nd in cr.cogood_nodes(lam, i)],
            "e_tilde": list(et.parts) if et is not None else None,
            "f_tilde": list(ft.parts) if ft is not None else None,
        }
    h, kind, gamma = cr.spin_stats(lam)
    out = {
        "contents": contents,
        "spin": {"h_p_prime": h, "type": kind, "gamma": list(gamma)},
    }
    if lam.is_restricted():
        rsoc, rsp, isoc, isp = cr.branching_tables(lam)

        def rows(table):
            return [
                {"partition": list(mu.parts), "node": list(node)}
                for mu, node in table
            ]

        out["branching"] = {
            "restriction_socle": rows(rsoc),
            "restriction_specht": rows(rsp),
            "induction_socle": rows(isoc),
            "induction_specht": rows(isp),
        }
    return out


def cmd_analyze(args) -> int:
    p = check_characteristic(args.p)
    report: dict = {"p": p}
    if args.partition is not None:
        parts = _parse_parts(args.partition)
        _check_partition(parts, p)
        lam = cr.PStrictPartition(parts, p)
        report["input"] = {"kind": "partition", "parts": list(lam.parts)}
        report.update(_partition_report(lam))
        report["padded_weight"] = _weight_report(lam.pad_weight())
    else:
        parts = _parse_parts(args.weight)
        lam = Weight(parts, p)
        report["input"] = {"kind": "weight", "parts": list(lam.parts)}
        report.update(_weight_report(lam))
    _emit(json.dumps(report, indent=2, sort_keys=True), args.out)
    return 0


def cmd_crystal(args) -> int:
    p = check_characteristic(args.p)
    graph = cr.crystal_graph(p, args.max)
    text = graph.to_dot() if args.format == "dot" else graph.to_json()
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    kwargs: dict = {}
    if args.suite in ("poly-identities", "raising-oracle") and args.width:
        kwargs["width"] = args.width
    if args.suite in ("signature-bridge", "duality", "certificates"):
        if args.samples:
            kwargs["samples"] = args.samples
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.n:
            kwargs["max_n"] = args.n
        if args.p:
            kwargs["ps"] = (check_characteristic(args.p),)
    if args.suite == "reduction":
        if args.samples:
            kwargs["samples"] = args.samples
        if args.seed is not None:
            kwargs["seed"] = args.seed
    if args.suite == "flows" and args.n:
        kwargs["max_domain"] = args.n
    try:
        report = vf.run_suite(args.suite, **kwargs)
    except KeyError:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(vf.SUITES)}",
              file=sys.stderr)
        return 2
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbranch",
        description="signature-sequence, crystal and raising-coefficient toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify a weight or partition")
    pa.add_argument("--p", type=int, required=True)
    group = pa.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", help="comma-separated parts")
    group.add_argument("--weight", help="comma-separated entries")
    pa.add_argument("--out")
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("crystal", help="export the crystal graph")
    pc.add_argument("--p", type=int, required=True)
    pc.add_argument("--max", type=int, required=True)
    pc.add_argument("--format", choices=("dot", "json"), default="json")
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_crystal)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=vf.SUITES)
    pv.add_argument("--p", type=int)
    pv.add_argument("--n", type=int)
    pv.add_argument("--width", type=int)
    pv.add_argument("--samples", type=int)
    pv.add_argument("--seed", type=int)
    pv.add_argument("--out")
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidCharacteristic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
