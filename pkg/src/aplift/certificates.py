"""Checkable JSON certificates for search results.

A certificate embeds its own canonicalized inputs, the parameters of the
claim, and a witness. Verification recomputes membership facts from inputs
plus witness only; it never re-runs any search. Two digests bind the pieces
together: ``input_digest`` hashes the canonical inputs, ``digest`` hashes
the whole body (everything except itself and the ``created`` timestamp), so
any single-field edit is detectable. Serialization is sorted-key JSON with
no floating-point values, identical bytes for identical runs apart from
``created``.

One asymmetry is deliberate: a "vdw" certificate whose verdict is "false"
carries the counterexample coloring and is re-checked independently, while a
"true" verdict is a universal claim with no succinct witness, so only its
integrity and well-formedness are checked.
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from typing import Optional, Sequence

from ._version import __version__
from .dsl import parse_dsl, print_expr
from .fileformats import (
    read_chain,
    read_family,
    read_family2d,
    read_intset,
    write_chain,
    write_family,
    write_family2d,
    write_intset,
)
from .jsets import FuncFamily, FuncFamily2D, JWitness, JWitness2D, verify_jwitness, verify_transfer_witness
from .largeness import VdwResult, _has_mono_ap, is_syndetic_on
from .lift import APWitness, Box2D, Set2D, is_syndetic_2d, lift, verify_ap
from .sets import IntSet, SetExpr, Window, evaluate
from .towers import Chain, ChainReport, translate_inclusion_holds

SCHEMA = "aplift.cert/1"
CERT_KINDS = ("ap", "pws", "pws2d", "jset", "jset2d", "chain", "vdw")

_TRUNCATION_NOTES = {
    "ap": [],
    "pws": [],
    "pws2d": ["pairs whose progression leaves the window are excluded from the lift"],
    "jset": ["sums landing outside the window count as non-members"],
    "jset2d": [
        "sums landing outside the window count as non-members",
        "pairs whose progression leaves the window are excluded from the lift",
    ],
    "chain": ["translate inclusions are checked on the window truncated by each shift"],
    "vdw": [],
}


class CertificateError(Exception):
    pass


class DigestMismatch(CertificateError):
    pass


class UnknownKind(CertificateError):
    pass


class MalformedPayload(CertificateError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _sha(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def build_certificate(kind: str, inputs: dict, params: dict, witness: dict) -> dict:
    if kind not in CERT_KINDS:
        raise ValueError(f"unknown certificate kind {kind!r}")
    body = {
        "schema": SCHEMA,
        "kind": kind,
        "tool_version": __version__,
        "inputs": inputs,
        "params": params,
        "witness": witness,
        "truncation": list(_TRUNCATION_NOTES[kind]),
        "input_digest": _sha(canonical_json(inputs)),
    }
    body["digest"] = _sha(canonical_json(body))
    body["created"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return body


def dumps_certificate(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# --- input descriptors -------------------------------------------------------


def inputs_for_expr(expr: SetExpr, window: Window) -> dict:
    return {"expr": print_expr(expr), "window": [window.lo, window.hi]}


def inputs_for_set_text(text: str) -> dict:
    return {"set_text": write_intset(read_intset(text))}


def _resolve_set(inputs: dict) -> IntSet:
    if "expr" in inputs:
        window = inputs.get("window")
        if (
            not isinstance(window, list)
            or len(window) != 2
            or not all(isinstance(v, int) for v in window)
        ):
            raise MalformedPayload("inputs.window must be [lo, hi]")
        return evaluate(parse_dsl(inputs["expr"]).expr, Window(window[0], window[1]))
    if "set_text" in inputs:
        return read_intset(inputs["set_text"])
    raise MalformedPayload("inputs carry neither an expression nor a set text")


# --- certificate builders ----------------------------------------------------


def ap_certificate(set_inputs: dict, wit: APWitness) -> dict:
    return build_certificate(
        "ap", set_inputs, {"l": wit.l}, {"a": wit.a, "d": wit.d}
    )


def pws_certificate(set_inputs: dict, r: int, L: int, start: int) -> dict:
    return build_certificate("pws", set_inputs, {"r": r, "L": L}, {"start": start})


def pws2d_certificate(
    set_inputs: dict,
    l: int,
    box: Box2D,
    r1: int,
    r2: int,
    L1: int,
    L2: int,
    subbox: Box2D,
) -> dict:
    params = {
        "l": l,
        "box": [box.a_lo, box.a_hi, box.d_lo, box.d_hi],
        "r1": r1,
        "r2": r2,
        "L1": L1,
        "L2": L2,
    }
    return build_certificate(
        "pws2d", set_inputs, params, {"a0": subbox.a_lo, "d0": subbox.d_lo}
    )


def jset_certificate(
    set_inputs: dict, family: FuncFamily, a_max: int, wit: JWitness
) -> dict:
    inputs = dict(set_inputs)
    inputs["family"] = write_family(family)
    return build_certificate(
        "jset", inputs, {"a_max": a_max}, {"a": wit.a, "H": list(wit.H)}
    )


def jset2d_certificate(
    set_inputs: dict,
    family2d: FuncFamily2D,
    b: int,
    l: int,
    a_max: int,
    wit: JWitness2D,
) -> dict:
    inputs = dict(set_inputs)
    inputs["family2d"] = write_family2d(family2d)
    return build_certificate(
        "jset2d",
        inputs,
        {"b": b, "l": l, "a_max": a_max},
        {"a1": wit.a1, "a2": wit.a2, "H": list(wit.H)},
    )


def chain_certificate(
    chain: Chain,
    report: ChainReport,
    r: Optional[int] = None,
    L: Optional[int] = None,
    a_max: Optional[int] = None,
    families: Sequence[FuncFamily] = (),
) -> dict:
    """Certificate for a passing chain report (failing runs have no witness)."""
    if not report.passed:
        raise ValueError("only passing chain reports are certifiable")
    inputs: dict = {"chain": write_chain(chain)}
    params: dict = {"x_max": report.x_max}
    witness: dict = {
        "translate": [[p.level, p.x, p.found_level] for p in report.probes]
    }
    if report.pws_witnesses is not None:
        if r is None or L is None:
            raise ValueError("quasi-central evidence needs r and L")
        params["r"] = r
        params["L"] = L
        witness["levels"] = [{"pws_start": w.start} for w in report.pws_witnesses]
    elif report.jset_witnesses is not None:
        if a_max is None:
            raise ValueError("c-set evidence needs a_max")
        params["a_max"] = a_max
        inputs["families"] = [write_family(F) for F in families]
        witness["levels"] = [
            {"jset": [{"a": w.a, "H": list(w.H)} for w in per_level]}
            for per_level in report.jset_witnesses
        ]
    else:
        witness["levels"] = []
    return build_certificate("chain", inputs, params, witness)


def vdw_certificate(n: int, colors: int, ap_len: int, result: VdwResult) -> dict:
    if result.verdict not in ("true", "false"):
        raise ValueError("only decided outcomes are certifiable")
    witness = {
        "verdict": result.verdict,
        "strategy": result.strategy,
        "explored": result.explored,
        "coloring": list(result.coloring) if result.coloring is not None else None,
    }
    return build_certificate(
        "vdw", {"n": n, "colors": colors, "ap_len": ap_len}, {}, witness
    )


# --- verification ------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise MalformedPayload(msg)


def _int_field(obj: dict, key: str, minimum: int = 1) -> int:
    v = obj.get(key)
    _require(isinstance(v, int) and not isinstance(v, bool), f"{key} must be an integer")
    _require(v >= minimum, f"{key} must be >= {minimum}")
    return v


def verify_certificate(cert: dict, inputs: Optional[dict] = None) -> bool:
    """Re-check a certificate. Returns the semantic verdict of the witness.

    Raises DigestMismatch when either digest fails, UnknownKind for an
    unrecognized kind, MalformedPayload for structural defects. Passing
    ``inputs`` checks the claim against those instead of the embedded copy;
    they must hash to the recorded input digest.
    """
    _require(isinstance(cert, dict), "certificate must be an object")
    for key in ("schema", "kind", "inputs", "params", "witness", "digest", "input_digest"):
        _require(key in cert, f"missing field {key!r}")
    _require(cert["schema"] == SCHEMA, f"unsupported schema {cert.get('schema')!r}")
    kind = cert["kind"]
    if kind not in CERT_KINDS:
        raise UnknownKind(f"unknown certificate kind {kind!r}")

    body = {k: v for k, v in cert.items() if k not in ("digest", "created")}
    if _sha(canonical_json(body)) != cert["digest"]:
        raise DigestMismatch("certificate digest does not match its content")
    if inputs is None:
        inputs = cert["inputs"]
    if _sha(canonical_json(inputs)) != cert["input_digest"]:
        raise DigestMismatch("inputs do not match the recorded input digest")

    _require(isinstance(inputs, dict), "inputs must be an object")
    _require(isinstance(cert["params"], dict), "params must be an object")
    _require(isinstance(cert["witness"], dict), "witness must be an object")
    checker = _CHECKERS[kind]
    try:
        return checker(inputs, cert["params"], cert["witness"])
    except CertificateError:
        raise
    except (ValueError, TypeError, KeyError, IndexError):
        # structurally plausible but semantically unusable payloads
        return False


def _check_ap(inputs: dict, params: dict, witness: dict) -> bool:
    A = _resolve_set(inputs)
    l = _int_field(params, "l")
    a = _int_field(witness, "a")
    d = _int_field(witness, "d")
    return verify_ap(A, APWitness(a, d, l))


def _check_pws(inputs: dict, params: dict, witness: dict) -> bool:
    A = _resolve_set(inputs)
    r = _int_field(params, "r")
    L = _int_field(params, "L")
    start = _int_field(witness, "start")
    w = A.window
    if start < w.lo or start + L - 1 > w.hi:
        return False
    return is_syndetic_on(A, (start, start + L - 1), r)


def _check_pws2d(inputs: dict, params: dict, witness: dict) -> bool:
    A = _resolve_set(inputs)
    l = _int_field(params, "l")
    box_raw = params.get("box")
    _require(
        isinstance(box_raw, list) and len(box_raw) == 4 and all(isinstance(v, int) for v in box_raw),
        "box must be [a_lo, a_hi, d_lo, d_hi]",
    )
    r1 = _int_field(params, "r1")
    r2 = _int_field(params, "r2")
    L1 = _int_field(params, "L1")
    L2 = _int_field(params, "L2")
    a0 = _int_field(witness, "a0")
    d0 = _int_field(witness, "d0")
    box = Box2D(*box_raw)
    subbox = Box2D(a0, a0 + L1 - 1, d0, d0 + L2 - 1)
    if not box.contains_box(subbox):
        return False
    B = lift(A, l, box)
    return is_syndetic_2d(B, subbox, r1, r2)


def _check_jset(inputs: dict, params: dict, witness: dict) -> bool:
    A = _resolve_set(inputs)
    _require("family" in inputs, "jset inputs need a family text")
    F = read_family(inputs["family"])
    a_max = _int_field(params, "a_max")
    a = _int_field(witness, "a")
    H = witness.get("H")
    _require(isinstance(H, list) and all(isinstance(t, int) for t in H), "H must be a list of integers")
    if a > a_max:
        return False
    return verify_jwitness(A, F, JWitness(a, tuple(H)))


def _check_jset2d(inputs: dict, params: dict, witness: dict) -> bool:
    A = _resolve_set(inputs)
    _require("family2d" in inputs, "jset2d inputs need a family2d text")
    F2D = read_family2d(inputs["family2d"])
    b = _int_field(params, "b")
    l = _int_field(params, "l")
    a_max = _int_field(params, "a_max")
    a1 = _int_field(witness, "a1")
    a2 = _int_field(witness, "a2")
    H = witness.get("H")
    _require(isinstance(H, list) and all(isinstance(t, int) for t in H), "H must be a list of integers")
    if a1 > a_max or a2 != b * len(H):
        return False
    return verify_transfer_witness(A, F2D, JWitness2D(a1, a2, tuple(H)), l)


def _check_chain(inputs: dict, params: dict, witness: dict) -> bool:
    _require("chain" in inputs, "chain inputs need a chain text")
    chain = read_chain(inputs["chain"])
    x_max = _int_field(params, "x_max")
    w = chain.window

    translate = witness.get("translate")
    _require(isinstance(translate, list), "translate table must be a list")
    # coverage: the recorded probes must be exactly the required ones
    expected = []
    for n, level in enumerate(chain.levels, start=1):
        for x in level.members():
            if x > x_max:
                break
            expected.append((n, x))
    seen = []
    for entry in translate:
        _require(
            isinstance(entry, list) and len(entry) == 3 and all(isinstance(v, int) for v in entry),
            "translate entries must be [level, x, found_level]",
        )
        n, x, m = entry
        seen.append((n, x))
        if not (1 <= n <= m <= chain.depth):
            return False
        if not translate_inclusion_holds(chain, m, n, x):
            return False
    if sorted(seen) != expected:
        return False

    levels = witness.get("levels")
    _require(isinstance(levels, list), "levels evidence must be a list")
    if "r" in params:
        r = _int_field(params, "r")
        L = _int_field(params, "L")
        if len(levels) != chain.depth:
            return False
        for level_set, ev in zip(chain.levels, levels):
            start = _int_field(ev, "pws_start")
            if start < w.lo or start + L - 1 > w.hi:
                return False
            if not is_syndetic_on(level_set, (start, start + L - 1), r):
                return False
    elif "a_max" in params:
        a_max = _int_field(params, "a_max")
        fam_texts = inputs.get("families")
        _require(isinstance(fam_texts, list), "c-set inputs need family texts")
        families = [read_family(t) for t in fam_texts]
        if len(levels) != chain.depth:
            return False
        for level_set, ev in zip(chain.levels, levels):
            wit_list = ev.get("jset")
            _require(isinstance(wit_list, list), "level evidence must list jset witnesses")
            if len(wit_list) != len(families):
                return False
            for F, wraw in zip(families, wit_list):
                a = _int_field(wraw, "a")
                H = wraw.get("H")
                _require(
                    isinstance(H, list) and all(isinstance(t, int) for t in H),
                    "H must be a list of integers",
                )
                if a > a_max:
                    return False
                if not verify_jwitness(level_set, F, JWitness(a, tuple(H))):
                    return False
    elif levels:
        return False
    return True


def _check_vdw(inputs: dict, params: dict, witness: dict) -> bool:
    n = _int_field(inputs, "n")
    colors = _int_field(inputs, "colors")
    ap_len = _int_field(inputs, "ap_len")
    verdict = witness.get("verdict")
    _require(verdict in ("true", "false"), "verdict must be 'true' or 'false'")
    coloring = witness.get("coloring")
    if verdict == "true":
        # universal claim: no succinct witness; integrity checks only
        return coloring is None
    _require(isinstance(coloring, list), "a false verdict needs a coloring")
    if len(coloring) != n:
        return False
    if not all(isinstance(c, int) and 0 <= c < colors for c in coloring):
        return False
    if ap_len == 1:
        return False  # any point is a one-term progression
    return not _has_mono_ap(tuple(coloring), ap_len)


_CHECKERS = {
    "ap": _check_ap,
    "pws": _check_pws,
    "pws2d": _check_pws2d,
    "jset": _check_jset,
    "jset2d": _check_jset2d,
    "chain": _check_chain,
    "vdw": _check_vdw,
}
