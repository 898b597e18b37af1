"""Request handlers shared by the command line client and the HTTP service.

Each handler validates its inputs, runs the corresponding library operation,
and returns a plain JSON-serializable dict.  Everything is deterministic:
identical inputs produce identical payloads.
"""

from __future__ import annotations

from .bundles import KINDS, SheafSymbol, h0, rank, symbol_presentation
from .certify import certify_non_d_affine
from .errors import UnsupportedParameters
from .homcalc import ext1_dim, graded_hom_dim, stable_hom_dim
from .matfac import (
    apply_involution,
    build_factorization_pair,
    find_base_change_witness,
    verify_factorization,
)
from .oracle import support_prediction
from .pushforward import decompose, pushforward_hilbert


def _symbol(kind, twist, m):
    if kind not in KINDS:
        raise UnsupportedParameters(f"sheaf kind must be one of {KINDS}, got {kind!r}")
    return SheafSymbol(kind, twist, m)


def mf_payload(p, m, check_involution=False):
    minus, plus = build_factorization_pair(p, m)
    payload = minus.to_json_dict()
    payload["verified"] = verify_factorization(minus) and verify_factorization(plus)
    payload["entries_homogeneous_linear"] = (
        minus.entries_homogeneous() and plus.entries_homogeneous()
    )
    if check_involution:
        swapped = apply_involution(minus)
        w_alpha = find_base_change_witness(swapped, plus)
        w_plain = find_base_change_witness(minus, plus)
        payload["involution_witness"] = {
            "alpha_first_vs_second": w_alpha.to_json_dict() if w_alpha else None,
            "first_vs_second": w_plain.to_json_dict() if w_plain else None,
        }
    return payload


def decompose_payload(p, m, e, kind, twist):
    sym = _symbol(kind, twist, m)
    ms = decompose(sym, e, p)
    payload = ms.to_json_dict()
    if e >= 1:
        pred = support_prediction(sym.kind, p, m, e, twist)
        line_pred = pred.line_support_twists()
        spin_pred = pred.spinor_support_twists()
        if kind in ("O", "S"):
            agrees = ms.line_support() == line_pred and ms.spinor_support() == spin_pred
        else:
            # For a single spinor source the oracle bounds the pair support.
            agrees = set(ms.line_support()) <= set(line_pred) and set(
                ms.spinor_support()
            ) <= set(spin_pred)
        payload["oracle_agrees"] = agrees
        payload["oracle_support"] = {
            "line": list(line_pred),
            "spinor": list(spin_pred),
        }
    else:
        payload["oracle_agrees"] = True
        payload["oracle_support"] = None
    return payload


def hom_payload(p, m, src_kind, src_twist, tgt_kind, tgt_twist, degree, stable=False):
    src = symbol_presentation(_symbol(src_kind, src_twist, m), p)
    tgt = symbol_presentation(_symbol(tgt_kind, tgt_twist, m), p)
    fn = stable_hom_dim if stable else graded_hom_dim
    value = fn(src, tgt, degree)
    return {
        "p": p,
        "m": m,
        "src": {"kind": src_kind, "twist": src_twist},
        "tgt": {"kind": tgt_kind, "twist": tgt_twist},
        "degree": degree,
        "stable": stable,
        "value": value,
    }


def ext_payload(p, m, src_kind, src_twist, tgt_kind, tgt_twist, degree):
    src = symbol_presentation(_symbol(src_kind, src_twist, m), p)
    tgt = symbol_presentation(_symbol(tgt_kind, tgt_twist, m), p)
    value = ext1_dim(src, tgt, degree)
    return {
        "p": p,
        "m": m,
        "src": {"kind": src_kind, "twist": src_twist},
        "tgt": {"kind": tgt_kind, "twist": tgt_twist},
        "degree": degree,
        "value": value,
    }


def hilbert_payload(m, kind, twist, max_degree, e=0, p=3):
    sym = _symbol(kind, twist, m)
    values = []
    for d in range(max_degree + 1):
        val = pushforward_hilbert(sym, e, p, d) if e else h0(sym, d)
        values.append({"d": d, "h0": val})
    return {
        "m": m,
        "sheaf": {"kind": kind, "twist": twist},
        "rank": rank(sym),
        "e": e,
        "p": p if e else None,
        "values": values,
    }


def certify_payload(p, m, e_max):
    cert = certify_non_d_affine(p, m, e_max)
    return cert.to_json_dict(), cert.verdict
