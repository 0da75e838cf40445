"""Command-line interface.

Loads JSON artifacts, runs verification and construction pipelines, and
emits machine-readable reports.  Exit codes: 0 pass, 1 verified failure,
2 structural or parse error, 3 inconclusive.  PIVOTFUN_TOL overrides the
default tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io as pio
from .bimodule import verify_bimodule, verify_morita_witness, morita_decide_fhilb
from .cdagcat import FHILB
from .classify import classify_graded_upts
from .errors import PivotfunError, StructuralError
from .frobenius import verify_frobenius
from .groups import FiniteGroup, verify_group
from .matkernel import DEFAULT_SEED, Tolerance
from .repg import verify_fibre_functor, verify_rep
from .report import Report
from .upt import (
    dual_certificate,
    equivalence_from_star_iso,
    frobenius_from_upt,
    star_iso_from_equivalence,
    upt_dagger,
    upt_dual,
    verify_modification,
    verify_upt,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_STRUCTURAL = 2
EXIT_INCONCLUSIVE = 3

_VERIFIERS = {
    "group": lambda art, tol: verify_group(art.table),
    "rep": verify_rep,
    "functor": verify_fibre_functor,
    "frobenius": verify_frobenius,
    "bimodule": verify_bimodule,
    "upt": verify_upt,
    "modification": verify_modification,
}


def _default_tol() -> float:
    env = os.environ.get("PIVOTFUN_TOL")
    return float(env) if env else 1e-9


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise StructuralError(
            f"parse error in {path}: {exc.msg} at line {exc.lineno} "
            f"column {exc.colno}") from exc
    except OSError as exc:
        raise StructuralError(f"cannot read {path}: {exc}") from exc


def _emit(payload: dict, args) -> None:
    sys.stdout.write(pio.dumps(payload, indent=2) + "\n")


def _report_payload(command: str, args, report: Report, extra: dict | None = None,
                    overall: str | None = None) -> dict:
    payload = {
        "command": command,
        "tolerance": float(args.tol),
        "seed": int(getattr(args, "seed", DEFAULT_SEED)),
        "overall": overall or ("pass" if report.passed else "fail"),
        "checks": [c.to_json() for c in report.checks],
    }
    if extra:
        payload.update(extra)
    return payload


def _write_artifact(path: str, payload: dict) -> None:
    Path(path).write_text(pio.dumps(payload, indent=2) + "\n", encoding="utf-8")


def cmd_check(args) -> int:
    tol = Tolerance(args.tol)
    obj = _read_json(args.path)
    artifact = pio.load_artifact(args.kind, obj)
    verifier = _VERIFIERS[args.kind]
    report = verifier(artifact, tol) if args.kind != "group" else verify_group(artifact.table)
    _emit(_report_payload(f"check {args.kind} {args.path}", args, report), args)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _construct_command(args, name: str) -> int:
    tol = Tolerance(args.tol)
    a = pio.upt_from_json(_read_json(args.path))
    pre = verify_upt(a, tol)
    if not pre.passed:
        _emit(_report_payload(f"{name} {args.path}", args, pre,
                              extra={"stage": "input verification"}), args)
        return EXIT_FAIL
    if name == "pants":
        monoid, cert = frobenius_from_upt(a, tol)
        artifact = pio.monoid_to_json(monoid)
        default_out = args.path + ".pants.json"
    elif name == "dual":
        out_upt = upt_dual(a, tol)
        cert = dual_certificate(a, tol)
        artifact = pio.upt_to_json(out_upt)
        default_out = args.path + ".dual.json"
    else:
        out_upt = upt_dagger(a)
        cert = verify_upt(out_upt, tol)
        artifact = pio.upt_to_json(out_upt)
        default_out = args.path + ".dagger.json"
    if not cert.passed:
        _emit(_report_payload(f"{name} {args.path}", args, cert,
                              extra={"stage": "certificate"}), args)
        return EXIT_FAIL
    out_path = args.out or default_out
    _write_artifact(out_path, artifact)
    _emit(_report_payload(f"{name} {args.path}", args, cert,
                          extra={"artifact": out_path}), args)
    return EXIT_PASS


def cmd_pants(args) -> int:
    return _construct_command(args, "pants")


def cmd_dual(args) -> int:
    return _construct_command(args, "dual")


def cmd_dagger(args) -> int:
    return _construct_command(args, "dagger")


def cmd_morita(args) -> int:
    tol = Tolerance(args.tol)
    a = pio.monoid_from_json(_read_json(args.a))
    b = pio.monoid_from_json(_read_json(args.b))
    pre = Report("morita", tol.eps)
    pre.extend(verify_frobenius(a, tol), prefix="a.")
    pre.extend(verify_frobenius(b, tol), prefix="b.")
    if not pre.passed:
        _emit(_report_payload("morita", args, pre,
                              extra={"stage": "monoid verification"}), args)
        return EXIT_FAIL
    if args.witness:
        m = pio.bimodule_from_json(_read_json(args.witness[0]))
        n = pio.bimodule_from_json(_read_json(args.witness[1]))
        rep = verify_morita_witness(a, b, m, n, tol, seed=args.seed)
        overall = "pass" if rep.passed and not rep.inconclusive else (
            "inconclusive" if rep.inconclusive else "fail")
        _emit(_report_payload("morita", args, rep, overall=overall), args)
        if overall == "pass":
            return EXIT_PASS
        return EXIT_INCONCLUSIVE if overall == "inconclusive" else EXIT_FAIL
    if a.carrier.instance == FHILB and b.carrier.instance == FHILB:
        verdict = morita_decide_fhilb(a, b, tol)
        rep = Report("morita", tol.eps)
        rep.add("center_dimensions_equal", 0.0 if verdict else 1.0)
        _emit(_report_payload("morita", args, rep,
                              extra={"equivalent": verdict}), args)
        return EXIT_PASS if verdict else EXIT_FAIL
    rep = Report("morita", tol.eps)
    rep.add_status("decision", "inconclusive",
                   witness="no witnesses and no FHilb centre oracle")
    _emit(_report_payload("morita", args, rep, overall="inconclusive"), args)
    return EXIT_INCONCLUSIVE


def cmd_roundtrip(args) -> int:
    tol = Tolerance(args.tol)
    a1 = pio.upt_from_json(_read_json(args.a1))
    a2 = pio.upt_from_json(_read_json(args.a2))
    e = pio.upt_from_json(_read_json(args.e))
    tau = pio.modification_from_json(_read_json(args.tau))
    stage = "forward certification"
    try:
        f, rep_fwd = star_iso_from_equivalence(a1, a2, e, tau, tol)
        if not rep_fwd.passed:
            raise StructuralError("forward certification failed")
        stage = "backward recovery"
        e2, tau2, rep_bwd = equivalence_from_star_iso(a1, a2, f, tol)
        if not rep_bwd.passed:
            raise StructuralError("backward recovery failed")
        stage = "re-derivation"
        f2, rep_re = star_iso_from_equivalence(a1, a2, e2, tau2, tol)
    except PivotfunError as exc:
        payload = {
            "command": "roundtrip",
            "tolerance": float(args.tol),
            "seed": int(args.seed),
            "overall": "fail",
            "stage": stage,
            "error": str(exc),
        }
        _emit(payload, args)
        return EXIT_FAIL
    deviation = tol.residual(f.mat, f2.mat)
    rep = Report("roundtrip", tol.eps)
    rep.extend(rep_fwd, prefix="forward.")
    rep.extend(rep_bwd, prefix="backward.")
    rep.extend(rep_re, prefix="rederive.")
    rep.add("roundtrip_deviation", deviation)
    _emit(_report_payload("roundtrip", args, rep,
                          extra={"deviation": deviation}), args)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_classify_upt(args) -> int:
    tol = Tolerance(args.tol)
    if args.max_dim > 6:
        raise StructuralError("classification bound is k <= 6")
    group = FiniteGroup.from_json(_read_json(args.group))
    classes, twists = classify_graded_upts(group, args.max_dim, tol=tol,
                                           seed=args.seed)
    rep = Report("classify", tol.eps)
    for k, cls in enumerate(classes):
        rep.add(f"class_{k}_certificate",
                0.0 if cls.certificate_pass else 1.0,
                witness=f"mult={list(cls.representative)}")
    payload = _report_payload("classify-upt", args, rep, extra={
        "class_count": len(classes),
        "twists": twists,
        "classes": [
            {
                "representative": list(c.representative),
                "members": [list(m) for m in c.members],
                "dimension": sum(c.representative),
                "twist_orbit": c.twist_orbit,
                "pants_dim": c.pants_dim,
                "center_dim": c.center_dim,
                "certificate": "pass" if c.certificate_pass else "fail",
                "certificate_residual": c.certificate_residual,
            }
            for c in classes
        ],
    })
    _emit(payload, args)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=_default_tol(),
                   help="numerical tolerance (default 1e-9, env PIVOTFUN_TOL)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for randomised searches (default {DEFAULT_SEED})")
    p.add_argument("--out", type=str, default=None,
                   help="output path for constructed artifacts")
    p.add_argument("--json", action="store_true", default=True,
                   help="emit JSON reports (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotfun",
        description="verify and classify unitary pseudonatural transformations "
                    "and Frobenius monoids at desk scale")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="verify a JSON artifact")
    p.add_argument("path")
    p.add_argument("--kind", required=True, choices=sorted(_VERIFIERS))
    _add_common(p)
    p.set_defaults(func=cmd_check)

    for name, fn, hlp in (
        ("pants", cmd_pants, "pair-of-pants monoid of a UPT"),
        ("dual", cmd_dual, "right dual of a UPT"),
        ("dagger", cmd_dagger, "dagger of a UPT"),
    ):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("path")
        _add_common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("morita", help="decide or certify Morita equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", nargs=2, metavar=("M", "N"), default=None)
    _add_common(p)
    p.set_defaults(func=cmd_morita)

    p = sub.add_parser("roundtrip",
                       help="classification round trip through the pants monoids")
    p.add_argument("a1")
    p.add_argument("a2")
    p.add_argument("e")
    p.add_argument("tau")
    _add_common(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("classify-upt",
                       help="enumerate graded UPT classes over a finite group")
    p.add_argument("group")
    p.add_argument("--max-dim", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_classify_upt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StructuralError as exc:
        sys.stdout.write(pio.dumps({"error": str(exc), "overall": "error"},
                                   indent=2) + "\n")
        return EXIT_STRUCTURAL
    except PivotfunError as exc:
        sys.stdout.write(pio.dumps({"error": str(exc), "overall": "fail"},
                                   indent=2) + "\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
