"""Command line client for the quadric Frobenius calculator.

Thin layer over the library: parse flags, dispatch, render JSON or a table,
write atomically.  Exit codes: 0 success (and CERTIFIED), 2 usage errors or
unsupported parameters, 3 computation-level failures (degenerate solves,
inconsistent multiplicities, failed certification premises, exhausted
witness searches).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import api
from .certify import CERTIFIED
from .errors import (
    DegenerateDecomposition,
    InconsistentMultiplicity,
    MalformedShape,
    SearchExhausted,
    UnsupportedParameters,
)

USAGE_EXIT = 2
COMPUTE_EXIT = 3

_KIND_CHOICES = ("O", "S+", "S-", "S")


def _parse_threads():
    raw = os.environ.get("QFROB_THREADS")
    if raw is None:
        return 1
    try:
        val = int(raw)
    except ValueError:
        raise UnsupportedParameters(f"QFROB_THREADS must be a positive integer, got {raw!r}")
    if val < 1:
        raise UnsupportedParameters(f"QFROB_THREADS must be a positive integer, got {raw!r}")
    return val


def _write_output(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qfrob-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render_json(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _add_common(parser):
    parser.add_argument("--format", choices=("json", "table"), default="table")
    parser.add_argument("--output", default=None, help="write output to this path atomically")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qfrob",
        description=(
            "Exact computations with Frobenius pushforwards and spinor "
            "bundles on the even-dimensional smooth quadric.  The quadric "
            "index is m; the quadric has dimension n = 2m."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mf = sub.add_parser("mf", help="build and verify the canonical matrix factorization pair")
    mf.add_argument("--p", type=int, required=True)
    mf.add_argument("--m", type=int, required=True)
    mf.add_argument("--check-involution", action="store_true")
    _add_common(mf)

    dec = sub.add_parser("decompose", help="decompose a Frobenius pushforward into summands")
    dec.add_argument("--p", type=int, required=True)
    dec.add_argument("--m", type=int, required=True)
    dec.add_argument("--e", type=int, required=True)
    dec.add_argument("--sheaf", choices=_KIND_CHOICES, required=True)
    dec.add_argument("--twist", type=int, required=True)
    _add_common(dec)

    hom = sub.add_parser("hom", help="graded Hom dimension between bundle modules")
    ext = sub.add_parser("ext", help="first Ext dimension between bundle modules")
    for sp in (hom, ext):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--src", choices=_KIND_CHOICES, required=True)
        sp.add_argument("--src-twist", type=int, default=0)
        sp.add_argument("--tgt", choices=_KIND_CHOICES, required=True)
        sp.add_argument("--tgt-twist", type=int, default=0)
        sp.add_argument("--degree", type=int, default=0)
        _add_common(sp)
    hom.add_argument("--stable", action="store_true", help="kill maps through free covers")

    hil = sub.add_parser("hilbert", help="section counts of a bundle or its pushforward")
    hil.add_argument("--m", type=int, required=True)
    hil.add_argument("--sheaf", choices=_KIND_CHOICES, required=True)
    hil.add_argument("--twist", type=int, default=0)
    hil.add_argument("--max-degree", type=int, default=8)
    hil.add_argument("--e", type=int, default=0)
    hil.add_argument("--p", type=int, default=3)
    _add_common(hil)

    cert = sub.add_parser("certify", help="run the non-D-affinity premise pipeline")
    cert.add_argument("--p", type=int, required=True)
    cert.add_argument("--m", type=int, required=True)
    cert.add_argument("--e-max", type=int, required=True)
    _add_common(cert)
    return parser


def _mf_table(payload):
    lines = [f"matrix factorization pair, size {payload['size']}, p={payload['p']}, m={payload['m']}"]

    def term_str(term):
        facs = []
        for i, e in enumerate(term["exps"]):
            if e == 1:
                facs.append(f"x{i + 1}")
            elif e > 1:
                facs.append(f"x{i + 1}^{e}")
        body = "*".join(facs) if facs else "1"
        return body if term["coeff"] == 1 and facs else f"{term['coeff']}*{body}"

    for name in ("A", "B"):
        lines.append(f"{name}:")
        for row in payload[name]:
            cells = [" + ".join(term_str(t) for t in entry) if entry else "0" for entry in row]
            lines.append("  [" + ", ".join(cells) + "]")
    lines.append(f"verified: {str(payload['verified']).lower()}")
    if "involution_witness" in payload:
        w = payload["involution_witness"]
        lines.append(
            "involution witness (swapped first vs second): "
            + ("found" if w["alpha_first_vs_second"] else "none")
        )
        lines.append(
            "plain witness (first vs second): "
            + ("found" if w["first_vs_second"] else "none")
        )
    return "\n".join(lines) + "\n"


def _decompose_table(payload):
    src = payload["source"]
    lines = [
        f"pushforward of {src['kind']}({src['twist']}) at e={payload['e']}, "
        f"p={payload['p']}, m={payload['m']} (n={2 * payload['m']})"
    ]
    for label, key in (
        ("line bundles", "line"),
        ("spinor S+", "spinor_plus"),
        ("spinor S-", "spinor_minus"),
        ("spinor (unsplit pairs of signs)", "unresolved_spinor"),
    ):
        entries = payload[key]
        if entries:
            body = ", ".join(f"O({it['twist']})^{it['mult']}" if key == "line"
                             else f"({it['twist']})^{it['mult']}" for it in entries)
            lines.append(f"  {label}: {body}")
    lines.append(f"  rank: {payload['rank_total']} (expected {payload['rank_expected']})")
    lines.append(f"  support basis: {payload['support_basis']}")
    lines.append(f"  oracle agrees: {str(payload['oracle_agrees']).lower()}")
    return "\n".join(lines) + "\n"


def _hilbert_table(payload):
    sym = payload["sheaf"]
    head = f"h0 of {sym['kind']}({sym['twist']})"
    if payload["e"]:
        head += f" pushed forward e={payload['e']} at p={payload['p']}"
    lines = [head + f" on the quadric of dimension {2 * payload['m']}"]
    for item in payload["values"]:
        lines.append(f"  d={item['d']}: {item['h0']}")
    return "\n".join(lines) + "\n"


def _value_table(payload, label):
    src, tgt = payload["src"], payload["tgt"]
    return (
        f"{label}({src['kind']}({src['twist']}), {tgt['kind']}({tgt['twist']})) "
        f"degree {payload['degree']} at p={payload['p']}, m={payload['m']}: "
        f"{payload['value']}\n"
    )


def _certificate_table(payload):
    lines = [
        f"certificate for p={payload['p']}, m={payload['m']} "
        f"(n={payload['n']}), exponents {payload['e0']}..{payload['e_max']}"
    ]
    for pr in payload["premises"]:
        lines.append(f"  [{pr['status']}] {pr['name']}")
    lines.append(f"u: {payload['u']}")
    lines.append(f"v: {payload['v']}")
    lines.append(f"verdict: {payload['verdict']}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _parse_threads()
        if args.command == "mf":
            payload = api.mf_payload(args.p, args.m, args.check_involution)
            text = _render_json(payload) if args.format == "json" else _mf_table(payload)
            exit_code = 0
        elif args.command == "decompose":
            payload = api.decompose_payload(args.p, args.m, args.e, args.sheaf, args.twist)
            text = _render_json(payload) if args.format == "json" else _decompose_table(payload)
            exit_code = 0
        elif args.command == "hom":
            payload = api.hom_payload(
                args.p, args.m, args.src, args.src_twist, args.tgt, args.tgt_twist,
                args.degree, args.stable,
            )
            text = _render_json(payload) if args.format == "json" else _value_table(payload, "hom")
            exit_code = 0
        elif args.command == "ext":
            payload = api.ext_payload(
                args.p, args.m, args.src, args.src_twist, args.tgt, args.tgt_twist, args.degree
            )
            text = _render_json(payload) if args.format == "json" else _value_table(payload, "ext1")
            exit_code = 0
        elif args.command == "hilbert":
            payload = api.hilbert_payload(
                args.m, args.sheaf, args.twist, args.max_degree, args.e, args.p
            )
            text = _render_json(payload) if args.format == "json" else _hilbert_table(payload)
            exit_code = 0
        elif args.command == "certify":
            payload, verdict = api.certify_payload(args.p, args.m, args.e_max)
            text = _render_json(payload) if args.format == "json" else _certificate_table(payload)
            exit_code = 0 if verdict == CERTIFIED else COMPUTE_EXIT
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown command {args.command}")
    except UnsupportedParameters as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (DegenerateDecomposition, InconsistentMultiplicity, MalformedShape, SearchExhausted) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return COMPUTE_EXIT
    _write_output(text, args.output)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
