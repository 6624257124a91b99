"""Command-line front end.

    cayleychar <subcommand> <group-spec> [options]

Subcommands: classes, chartab, weight, spectrum, classify, verify, oracle.
A group spec is a catalog name (``sym:5``, ``mathieu:11``...) or ``@file``.
Exit codes: 0 ok, 1 input error, 2 computation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import dixon, spectra, tableio, vanishing
from .catalog import resolve_group
from .errors import CayleyCharError, InputError
from .permgroup import DEFAULT_CAP, PermGroup

SUBCOMMANDS = ("classes", "chartab", "weight", "spectrum", "classify", "verify", "oracle")
ORACLE_TOLERANCE = 1e-6


@dataclass
class RunConfig:
    format: str = "table"
    prime: int | None = None
    max_order: int = DEFAULT_CAP
    oracle_cap: int = spectra.DEFAULT_ORACLE_CAP
    precision: int = 10
    export: str | None = None
    import_path: str | None = None
    class_labels: tuple[str, ...] = ()


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _s(n: int) -> str:
    return str(int(n))


def _weight_json(wr: vanishing.WeightReport, digits: int) -> dict:
    return {
        "num": _s(wr.weight.numerator),
        "den": _s(wr.weight.denominator),
        "decimal": wr.decimal(digits),
        "repeating": wr.repetend(),
    }


def _table_for(G: PermGroup, cfg: RunConfig) -> dixon.CharacterTable:
    if cfg.import_path:
        return tableio.import_table(cfg.import_path, G)
    if cfg.prime is not None and not dixon.is_valid_prime(cfg.prime, G.exponent, G.order):
        raise InputError(
            f"--prime {cfg.prime} rejected: need a prime p = 1 mod {G.exponent} with p > 2*sqrt({G.order})"
        )
    return dixon.character_table(G, prime=cfg.prime)


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def cmd_classes(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    classes = G.classes
    report = {
        "group": spec,
        "order": _s(G.order),
        "exponent": _s(G.exponent),
        "classes": [
            {
                "label": c.label,
                "size": _s(c.size),
                "order": _s(c.element_order),
                "centralizer": _s(c.centralizer_order),
                "rational": c.is_rational,
                "inverse": classes[c.inverse_class].label,
                "representative": str(c.representative),
            }
            for c in classes
        ],
    }
    rows = [["label", "size", "order", "centralizer", "rational", "inverse", "representative"]]
    for c in report["classes"]:
        rows.append([c["label"], c["size"], c["order"], c["centralizer"], "yes" if c["rational"] else "no", c["inverse"], c["representative"]])
    text = f"{spec}: order {G.order}, exponent {G.exponent}, {len(classes)} classes\n" + _align(rows)
    return report, text


def cmd_chartab(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    table = _table_for(G, cfg)
    if cfg.export:
        tableio.export_table(table, cfg.export, name=spec)
    report = {
        "group": spec,
        "order": _s(table.order),
        "exponent": _s(table.exponent),
        "prime": _s(table.prime_used),
        "degrees": [_s(d) for d in dixon.degree_multiset(table)],
        "decomposition": dixon.group_algebra_string(table),
        "classes": [c.label for c in table.classes],
        "characters": [[str(v) for v in row] for row in table.values],
    }
    return report, tableio.format_table(table, name=spec)


def cmd_weight(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    table = _table_for(G, cfg)
    wr = vanishing.weight(table)
    report = {
        "group": spec,
        "order": _s(table.order),
        "degree_sum": _s(wr.degree_sum),
        "weight": _weight_json(wr, cfg.precision),
    }
    text = f"{wr.weight.numerator}/{wr.weight.denominator} ≈ {wr.decimal(cfg.precision)}\n"
    return report, text


def _connection_set(G: PermGroup, cfg: RunConfig) -> spectra.ConnectionSet:
    labels = [lab for item in cfg.class_labels for lab in item.split(",") if lab.strip()]
    if not labels:
        raise InputError("spectrum needs --class LABEL (repeat or comma-separate for a union of classes)")
    return spectra.ConnectionSet.from_labels(G.classes, labels)


def _eigen_json(ev: spectra.Eigenvalue) -> dict:
    out = {"value": str(ev.value), "multiplicity": _s(ev.multiplicity), "character": _s(ev.character)}
    if not ev.is_integer:
        out["approx"] = ev.as_float()
    return out


def cmd_spectrum(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    S = _connection_set(G, cfg)
    table = _table_for(G, cfg)
    rep = spectra.normal_cayley_spectrum(table, S)
    labels = [G.classes[i].label for i in sorted(S.class_indices)]
    report = {
        "group": spec,
        "order": _s(table.order),
        "connection_set": labels,
        "degree": _s(rep.degree),
        "eigenvalues": [_eigen_json(ev) for ev in rep.eigenvalues],
        "energy": _s(rep.energy) if rep.energy_exact else rep.energy,
        "exact": rep.energy_exact,
        "singular": rep.is_singular,
        "mcclelland_bound": rep.mcclelland_bound,
    }
    if not rep.energy_exact:
        report["energy_error"] = rep.energy_error
    lines = [f"Cay({spec}, {'+'.join(labels)}): {rep.degree}-regular on {table.order} vertices"]
    for value, mult in rep.grouped():
        shown = str(value) if value.is_rational_integer() else f"{value.to_complex().real:.10g}"
        lines.append(f"  {shown:>14} x{mult}")
    energy = str(rep.energy) if rep.energy_exact else f"{rep.energy:.12g} (+- {rep.energy_error:.1e})"
    lines.append(f"energy {energy}{' exact' if rep.energy_exact else ''}")
    lines.append(f"singular {'yes' if rep.is_singular else 'no'}")
    lines.append(f"|G| sqrt|S| = {rep.mcclelland_bound:.6f}")
    return report, "\n".join(lines) + "\n"


def _verdict_json(v: vanishing.ClassVerdict) -> dict:
    return {
        "label": v.label,
        "size": _s(v.size),
        "order": _s(v.element_order),
        "rational": v.is_rational,
        "vanishing": v.is_vanishing,
        "witnesses": [_s(w) for w in v.vanishing_witnesses],
        "centralizer": _s(v.centralizer_order),
        "comparison": v.weight_comparison,
    }


def _verdict_rows(verdicts) -> list[list[str]]:
    rows = [["label", "size", "order", "centralizer", "rational", "vanishing", "vs omega", "witnesses"]]
    for v in verdicts:
        rows.append([
            v.label, str(v.size), str(v.element_order), str(v.centralizer_order),
            "yes" if v.is_rational else "no", "yes" if v.is_vanishing else "no",
            v.weight_comparison, ",".join(str(w) for w in v.vanishing_witnesses) or "-",
        ])
    return rows


def cmd_classify(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    table = _table_for(G, cfg)
    wr = vanishing.weight(table)
    verdicts = vanishing.classify_classes(table)
    report = {
        "group": spec,
        "order": _s(table.order),
        "weight": _weight_json(wr, cfg.precision),
        "classes": [_verdict_json(v) for v in verdicts],
    }
    text = f"{spec}: omega = {wr.weight} ≈ {wr.decimal(cfg.precision)}\n" + _align(_verdict_rows(verdicts))
    return report, text


def cmd_verify(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    table = _table_for(G, cfg)
    vr = vanishing.verify_main_theorem(table)
    labels = [c.label for c in table.classes]
    report = {
        "group": spec,
        "order": _s(table.order),
        "weight": _weight_json(vr.weight, cfg.precision),
        "classes": [_verdict_json(v) for v in vr.verdicts],
        "theorem_holds": vr.theorem_holds,
        "energy_checks": [
            {
                "label": c.label,
                "energy": _s(c.energy),
                "bound": _s(c.bound),
                "holds": c.holds,
                "singular": c.singular,
                "mcclelland_ok": c.mcclelland_ok,
            }
            for c in vr.energy_checks
        ],
        "contrapositive": [labels[i] for i in vr.contrapositive],
        "diagnostics": vr.diagnostics,
    }
    lines = [f"{spec}: omega = {vr.weight.weight} ≈ {vr.weight.decimal(cfg.precision)}"]
    lines.append(_align(_verdict_rows(vr.verdicts)).rstrip("\n"))
    for c in vr.energy_checks:
        lines.append(f"energy {c.label}: {c.energy} >= {c.bound} {'ok' if c.holds else 'FAIL'}")
    if vr.contrapositive:
        lines.append("forced vanishing (rational, centralizer < omega): " + ", ".join(labels[i] for i in vr.contrapositive))
    lines.extend(vr.diagnostics)
    lines.append("theorem holds" if vr.theorem_holds else "THEOREM CHECK FAILED")
    return report, "\n".join(lines) + "\n"


def cmd_oracle(G: PermGroup, spec: str, cfg: RunConfig) -> tuple[dict, str]:
    if G.order > cfg.oracle_cap:
        raise InputError(f"brute-force oracle refuses |G| = {G.order} > cap {cfg.oracle_cap}")
    table = _table_for(G, cfg)
    if cfg.class_labels:
        sets = [_connection_set(G, cfg)]
    else:
        sets = spectra.valid_connection_sets(table.classes, 2)
    worst = 0.0
    mismatches = []
    for S in sets:
        dev = spectra.oracle_mismatch(table, S, cfg.oracle_cap)
        worst = max(worst, dev)
        if dev > ORACLE_TOLERANCE:
            mismatches.append({"connection_set": [G.classes[i].label for i in sorted(S.class_indices)], "deviation": dev})
    report = {
        "group": spec,
        "order": _s(G.order),
        "sets_checked": _s(len(sets)),
        "tolerance": ORACLE_TOLERANCE,
        "max_deviation": worst,
        "mismatches": mismatches,
    }
    text = f"{spec}: {len(sets)} connection sets, max deviation {worst:.3e}, {len(mismatches)} mismatches\n"
    return report, text


COMMANDS = {
    "classes": cmd_classes,
    "chartab": cmd_chartab,
    "weight": cmd_weight,
    "spectrum": cmd_spectrum,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def run_subcommand(name: str, spec: str, cfg: RunConfig) -> tuple[str, int]:
    """Rendered report and exit code."""
    if name not in COMMANDS:
        raise InputError(f"unknown subcommand {name!r}")
    G = resolve_group(spec, cap=cfg.max_order)
    report, text = COMMANDS[name](G, spec, cfg)
    code = 0
    if name == "verify" and not report["theorem_holds"]:
        code = 3
    if name == "oracle" and report["mismatches"]:
        code = 3
    return (render_json(report) if cfg.format == "json" else text), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleychar",
        description="Character tables, normal Cayley graph spectra and the rational non-vanishing centralizer bound.",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("group", help="catalog name (cyclic:n, dihedral:2n, sym:n, alt:n, quaternion:8, mathieu:11) or @file")
    parser.add_argument("--class", dest="class_labels", action="append", default=[], metavar="LABEL",
                        help="class label(s) for spectrum/oracle; repeat or comma-separate")
    parser.add_argument("--format", choices=("json", "table"), default="table")
    parser.add_argument("--prime", type=int, help="Dixon prime override (p = 1 mod exponent, p > 2 sqrt|G|)")
    parser.add_argument("--max-order", type=int, default=DEFAULT_CAP, help="enumeration cap")
    parser.add_argument("--oracle-cap", type=int, default=spectra.DEFAULT_ORACLE_CAP)
    parser.add_argument("--precision", type=int, default=10, help="decimal digits for omega")
    parser.add_argument("--export", metavar="PATH", help="chartab: write the table to PATH")
    parser.add_argument("--import", dest="import_path", metavar="PATH", help="read a previously exported table")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        format=args.format,
        prime=args.prime,
        max_order=args.max_order,
        oracle_cap=args.oracle_cap,
        precision=args.precision,
        export=args.export,
        import_path=args.import_path,
        class_labels=tuple(args.class_labels),
    )
    try:
        out, code = run_subcommand(args.subcommand, args.group, cfg)
    except CayleyCharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
