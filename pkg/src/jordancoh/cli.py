"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input or config.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .bimodule import SuperBimodule, check_bimodule, load_bimodule, regular_bimodule
from .cohomology import (
    DEFAULT_SAMPLES,
    CoboundaryVariant,
    CohomologyReport,
    IdentityVariant,
    check_sampled_agreement,
    cocycle_from_document,
    cocycle_system,
    cocycle_to_document,
    cohomology_group,
    coboundary_space,
    describe_group,
    extension_by_cocycle,
    paper_identity_check,
)
from .errors import ConsistencyError, JordanCohError
from .field import format_scalar, parse_rational, parse_scalar
from .linalg import Echelon
from .superalgebra import (
    BUILTINS,
    SuperAlgebra,
    algebra_to_document,
    check_jordan,
    check_supercommutative,
    format_element,
    load_json_file,
    read_algebra,
    specialize_algebra,
)

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


class ConfigError(JordanCohError):
    pass


@dataclass
class RunConfig:
    algebra: str
    t: Optional[str] = None
    module: Optional[str] = None
    parity: str = "both"
    output: str = "text"
    representatives: bool = False
    coboundary_variant: str = CoboundaryVariant.SIGNED_ODD.value
    identity_variants: bool = False
    samples: Tuple[str, ...] = DEFAULT_SAMPLES
    cocycle: Optional[str] = None
    quotient: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def parities(self) -> Tuple[int, ...]:
        return (0, 1) if self.parity == "both" else (int(self.parity),)

    def validate(self):
        if self.algebra == "builtin:Dt" and self.t is None:
            raise ConfigError("builtin:Dt needs --t (generic or a rational value)")
        if self.algebra == "builtin:M11plus" and self.t is not None:
            raise ConfigError("builtin:M11plus takes no --t")
        if self.algebra.startswith("builtin:") and self.algebra[8:] not in BUILTINS:
            raise ConfigError(f"unknown builtin {self.algebra!r}; choose from "
                              + ", ".join(f"builtin:{k}" for k in BUILTINS))


def load_algebra_from_config(cfg: RunConfig) -> SuperAlgebra:
    t = cfg.t
    if t is not None and t != "generic":
        value = parse_rational(t)
        if value == 0 and cfg.algebra == "builtin:Dt":
            cfg.notes.append("t = 0: D_0 is not simple; the cohomology below is still "
                             "well defined but describes a degenerate algebra")
    if cfg.algebra == "builtin:Dt":
        return BUILTINS["Dt"]("t" if t == "generic" else t)
    if cfg.algebra == "builtin:M11plus":
        return BUILTINS["M11plus"]()
    A = read_algebra(cfg.algebra)
    if t is not None and t != "generic":
        A = specialize_algebra(A, parse_rational(t))
    return A


def load_module_from_config(cfg: RunConfig, A: SuperAlgebra) -> SuperBimodule:
    if cfg.module in (None, "regular"):
        return regular_bimodule(A)
    return load_bimodule(A, load_json_file(cfg.module))


def _t_label(cfg: RunConfig) -> str:
    if cfg.t is None:
        return "none"
    if cfg.t == "generic":
        return "generic"
    return format_scalar(parse_scalar(cfg.t))


def _emit(cfg: RunConfig, text_lines: Sequence[str], payload: dict, out=None):
    out = out or sys.stdout
    if cfg.output == "json":
        if cfg.notes:
            payload = dict(payload, notes=list(cfg.notes))
        json.dump(payload, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        for note in cfg.notes:
            out.write(f"note: {note}\n")
        for line in text_lines:
            out.write(line + "\n")


# -- commands ---------------------------------------------------------------------

def cmd_check(cfg: RunConfig) -> int:
    A = load_algebra_from_config(cfg)
    results = [("supercommutativity", check_supercommutative(A))]
    if results[0][1].passed:
        results.append(("super-Jordan identity", check_jordan(A)))
    if cfg.module is not None:
        M = load_module_from_config(cfg, A)
        results.append((f"bimodule {M.name}", check_bimodule(A, M)))
    ok = all(r.passed for _, r in results)
    lines = [f"algebra {A.name} (dims {A.basis.dims[0]}|{A.basis.dims[1]}, t = {_t_label(cfg)})"]
    payload = {"algebra": A.name, "t": _t_label(cfg), "passed": ok, "checks": []}
    for label, rep in results:
        lines.append(f"  {label}: {'PASS' if rep.passed else 'FAIL'} "
                     f"({rep.checked} tuples checked, {len(rep.violations)} violations)")
        lines.extend("    " + v for v in rep.describe())
        payload["checks"].append({
            "name": label, "passed": rep.passed, "checked": rep.checked,
            "violations": [{"tuple": [rep.names[i] for i in quad],
                            "residual": format_element(res, rep.names)}
                           for quad, res in rep.violations]})
    _emit(cfg, lines, payload)
    return EXIT_OK if ok else EXIT_MATH


def _prerequisites(A: SuperAlgebra, M: SuperBimodule) -> Optional[str]:
    rep = check_jordan(A) if check_supercommutative(A).passed else None
    if rep is None or not rep.passed:
        return f"{A.name} is not a Jordan superalgebra (run `check`)"
    if not check_bimodule(A, M).passed:
        return f"{M.name} is not a Jordan superbimodule over {A.name}"
    return None


def report_payload(A: SuperAlgebra, cfg: RunConfig, rep: CohomologyReport) -> dict:
    payload = {"algebra": A.name, "t": _t_label(cfg), "parity": rep.parity,
               "dim_Z": rep.dim_Z, "dim_B": rep.dim_B, "dim_H": rep.dim_H,
               "coboundary_variant": rep.variant}
    if cfg.representatives:
        payload["representatives"] = [cocycle_to_document(h) for h in rep.H_representatives]
    return payload


def identity_variant_table(A, M, rep: CohomologyReport) -> List[dict]:
    rows = []
    for n, z in enumerate(rep.Z_basis):
        row = {"parity": rep.parity, "basis_index": n}
        for v in IdentityVariant:
            r = paper_identity_check(A, M, z, v)
            row[v.value] = {"passed": r.passed, "violations": len(r.violations)}
        rows.append(row)
    return rows


def cmd_cohomology(cfg: RunConfig) -> int:
    A = load_algebra_from_config(cfg)
    M = load_module_from_config(cfg, A)
    problem = _prerequisites(A, M)
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_MATH
    reports = []
    for k in cfg.parities:
        rep = cohomology_group(A, M, k, cfg.coboundary_variant)  # raises on B not in Z
        if A.is_symbolic() and cfg.samples:
            check_sampled_agreement(A, M, rep, cfg.samples, cfg.coboundary_variant)
        reports.append(rep)
    lines = [f"H^2({A.name}, {M.name}), t = {_t_label(cfg)}"]
    for rep in reports:
        lines.append(f"  parity {rep.parity}: dim Z = {rep.dim_Z}, dim B = {rep.dim_B}, "
                     f"dim H = {rep.dim_H}   (maps: {rep.dim_maps}, kernel of delta: {rep.dim_kernel})")
        if cfg.representatives:
            for h in rep.H_representatives:
                lines.append("    representative " + json.dumps(cocycle_to_document(h), ensure_ascii=False))
    if len(reports) == 2:
        lines.append(f"  H^2 = {describe_group(reports)}")
    if A.is_symbolic() and cfg.samples:
        lines.append("  sampled t = " + ", ".join(cfg.samples) + ": dimensions agree")
    payloads = [report_payload(A, cfg, r) for r in reports]
    if cfg.identity_variants:
        table = [row for r in reports for row in identity_variant_table(A, M, r)]
        for row in table:
            lines.append(f"  identity check, parity {row['parity']} Z-basis {row['basis_index']}: "
                         + ", ".join(f"{v.value} {'pass' if row[v.value]['passed'] else 'FAIL'}"
                                     f" ({row[v.value]['violations']} violations)"
                                     for v in IdentityVariant))
        for p in payloads:
            p["identity_variants"] = [r for r in table if r["parity"] == p["parity"]]
    if len(payloads) == 1:
        payload = payloads[0]
    else:
        payload = {"algebra": A.name, "t": _t_label(cfg), "H2": describe_group(reports),
                   "reports": payloads}
    _emit(cfg, lines, payload)
    return EXIT_OK


def cmd_verify_cocycle(cfg: RunConfig) -> int:
    if not cfg.cocycle:
        raise ConfigError("verify-cocycle needs --cocycle FILE")
    A = load_algebra_from_config(cfg)
    M = load_module_from_config(cfg, A)
    h = cocycle_from_document(load_json_file(cfg.cocycle), A, M)
    system = cocycle_system(A, M, h.layout.parity)
    failing = system.failing_rows(h)
    ok = not failing
    payload = {"algebra": A.name, "t": _t_label(cfg), "parity": h.layout.parity,
               "is_cocycle": ok, "violated_constraints": len(failing)}
    lines = [f"parity {h.layout.parity} cochain: "
             + ("cocycle" if ok else f"NOT a cocycle ({len(failing)} constraints violated, "
                                     f"first {failing[0]})")]
    if cfg.quotient and ok:
        B = coboundary_space(A, M, h.layout.parity, cfg.coboundary_variant)
        ech = Echelon(len(h.layout))
        ech.extend([b.coefficients for b in B])
        is_cob = ech.contains(h.coefficients)
        payload["is_coboundary"] = is_cob
        lines.append("coboundary" if is_cob else "not a coboundary (nonzero class in H^2)")
    _emit(cfg, lines, payload)
    return EXIT_OK if ok else EXIT_MATH


def cmd_extension(cfg: RunConfig) -> int:
    if not cfg.cocycle:
        raise ConfigError("extension needs --cocycle FILE")
    A = load_algebra_from_config(cfg)
    M = load_module_from_config(cfg, A)
    h = cocycle_from_document(load_json_file(cfg.cocycle), A, M)
    E = extension_by_cocycle(A, M, h)
    doc = algebra_to_document(E)
    jordan = check_jordan(E)
    doc["jordan"] = jordan.passed
    names = E.basis.names
    lines = [f"extension {E.name} (dims {E.basis.dims[0]}|{E.basis.dims[1]}), "
             f"super-Jordan identity: {'PASS' if jordan.passed else 'FAIL'}"]
    for entry in doc["products"]:
        rhs = " + ".join(f"({c})*{b}" for b, c in entry["result"].items())
        lines.append(f"  {entry['left']}*{entry['right']} = {rhs}")
    lines.extend("  violation " + v for v in jordan.describe(5))
    _emit(cfg, lines, doc)
    return EXIT_OK if jordan.passed else EXIT_MATH


COMMANDS = {"check": cmd_check, "cohomology": cmd_cohomology,
            "verify-cocycle": cmd_verify_cocycle, "extension": cmd_extension}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordancoh", description="Second cohomology of Jordan superalgebras in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--algebra", required=True,
                       help="builtin:Dt, builtin:M11plus, or a JSON algebra file")
        p.add_argument("--t", help="'generic' or a rational value (required for builtin:Dt)")
        p.add_argument("--module", help="'regular' (default) or a JSON bimodule file")
        p.add_argument("--format", dest="output", choices=("text", "json"), default="text")
        p.add_argument("--coboundary-variant", choices=[v.value for v in CoboundaryVariant],
                       default=CoboundaryVariant.SIGNED_ODD.value)
        if name == "cohomology":
            p.add_argument("--parity", choices=("0", "1", "both"), default="both")
            p.add_argument("--representatives", action="store_true")
            p.add_argument("--identity-variants", action="store_true",
                           help="evaluate both sign variants of the four-variable identity "
                                "on every Z basis vector")
            p.add_argument("--samples", default=",".join(DEFAULT_SAMPLES),
                           help="comma-separated t values for the generic/sampled check ('' to skip)")
        if name in ("verify-cocycle", "extension"):
            p.add_argument("--cocycle", required=True, help="cocycle JSON document")
        if name == "verify-cocycle":
            p.add_argument("--quotient", action="store_true",
                           help="also report whether the cocycle is a coboundary")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    samples = getattr(args, "samples", ",".join(DEFAULT_SAMPLES))
    sample_list = tuple(s.strip() for s in samples.split(",") if s.strip())
    for s in sample_list:
        parse_rational(s)
    cfg = RunConfig(algebra=args.algebra, t=args.t, module=args.module,
                    parity=getattr(args, "parity", "both"), output=args.output,
                    representatives=getattr(args, "representatives", False),
                    coboundary_variant=args.coboundary_variant,
                    identity_variants=getattr(args, "identity_variants", False),
                    samples=sample_list, cocycle=getattr(args, "cocycle", None),
                    quotient=getattr(args, "quotient", False))
    cfg.validate()
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](cfg)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    except JordanCohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
