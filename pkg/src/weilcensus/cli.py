"""Command-line front end for batch computations.

Configuration is a single TOML document per run; every numeric field must be
an exact integer (floats are rejected), and unknown keys warn by default or
fail under --strict.  Output defaults to aligned human-readable tables;
--format csv and --format json emit byte-stable documents whose integers are
serialized as decimal strings, so downstream tools never overflow on them.

Exit codes: 0 success, 2 input or contract violation, 3 internal
theorem-check failure (a formula disagreed with its exhaustive oracle, which
must never happen).

WEIL_CENSUS_THREADS caps the worker pool used for census rows; output order
is by n regardless of completion order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from . import modpoly
from .algebra import IntPolynomial, v_ell
from .census import (
    BetaRecord,
    DihedralCensusInput,
    asymptotic_ratio_probe,
    census_series,
    leading_coefficients,
)
from .curves import (
    ENUM_CAP,
    CurveModel,
    CurveSpec,
    ZetaData,
    l_polynomial,
    zeta_data,
    zeta_from_counts,
)
from .recurrences import detect_lefschetz
from .torsion import ell_invariants, verify_torsion_law
from .twists import (
    DihedralDatum,
    InconsistentDatum,
    InvolutionModule,
    consistent_m_order,
    count_dihedral_ell_adic,
    count_dihedral_mod_ell,
    lift_fiber_size,
    oracle_count,
)
from .weil import InvalidWeilPolynomial, curve_point_count, point_count, validate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_THEOREM = 3


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# config plumbing
# ---------------------------------------------------------------------------

_SCHEMAS = {
    "zeta": {
        "curve": {
            "q", "genus", "label", "counts", "l_polynomial",
            ("model", frozenset({"type", "a", "h", "f"})),
        },
        "run": {"nmax"},
    },
    "torsion": {
        "weil": {"q", "ch"},
        "curve": {
            "q", "genus", "label", "counts", "l_polynomial",
            ("model", frozenset({"type", "a", "h", "f"})),
        },
        "run": {"ell", "nmax"},
    },
    "dihedral": {
        "census": {
            ("base", frozenset({"q", "genus", "ch", "counts"})),
            ("beta", frozenset({"label", "n_beta", "e_beta", "cover_ch"})),
        },
        "run": {"ell", "nmax", "probe"},
    },
    "twistcount": {
        "datum": {"label", "invariant_factors", "c_action", "m_order", "comm_generators"},
        "run": {"ell", "oracle_cap"},
    },
}


def _check_no_floats(node, path: str) -> None:
    if isinstance(node, float):
        raise ConfigError(f"{path}: floats are not allowed; every number must be an exact integer")
    if isinstance(node, dict):
        for key, value in node.items():
            _check_no_floats(value, f"{path}.{key}")
    elif isinstance(node, list):
        for i, value in enumerate(node):
            _check_no_floats(value, f"{path}[{i}]")


def _schema_lookup(schema, key):
    for entry in schema:
        if entry == key:
            return True, None
        if isinstance(entry, tuple) and entry[0] == key:
            return True, entry[1]
    return False, None


def _check_keys(node, schema, path: str, strict: bool, warnings: list[str]) -> None:
    if not isinstance(node, dict):
        return
    for key, value in node.items():
        known, sub = _schema_lookup(schema, key)
        if not known:
            message = f"unknown key {path}.{key}"
            if strict:
                raise ConfigError(message)
            warnings.append(message)
            continue
        if sub is not None:
            targets = value if isinstance(value, list) else [value]
            for target in targets:
                _check_keys(target, sub, f"{path}.{key}", strict, warnings)


def load_config(path: str, command: str, strict: bool) -> dict:
    try:
        with open(path, "rb") as handle:
            cfg = tomllib.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    _check_no_floats(cfg, "config")
    schema = _SCHEMAS[command]
    warnings: list[str] = []
    for key, value in cfg.items():
        known, sub = _schema_lookup(set(schema), key)
        if not known:
            if strict:
                raise ConfigError(f"unknown section [{key}]")
            warnings.append(f"unknown section [{key}]")
            continue
    for section, keys in schema.items():
        if section in cfg:
            entries = cfg[section] if isinstance(cfg[section], list) else [cfg[section]]
            for entry in entries:
                _check_keys(entry, keys, section, strict, warnings)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return cfg


def _curve_from_config(section: dict) -> CurveSpec:
    q = section.get("q")
    genus = section.get("genus")
    if q is None or genus is None:
        raise ConfigError("[curve] needs q and genus")
    model = None
    if "model" in section:
        msec = section["model"]
        kind = msec.get("type")
        if kind == "elliptic":
            a = msec.get("a")
            if not isinstance(a, list) or len(a) != 5:
                raise ConfigError("elliptic model needs a = [a1, a2, a3, a4, a6]")
            a1, a2, a3, a4, a6 = a
            model = CurveModel.elliptic(a1=a1, a2=a2, a3=a3, a4=a4, a6=a6)
        elif kind == "hyperelliptic":
            model = CurveModel.hyperelliptic(h=msec.get("h", []), f=msec.get("f", []))
        else:
            raise ConfigError(f"unknown model type {kind!r}")
    counts = tuple(section["counts"]) if "counts" in section else None
    lpoly = IntPolynomial(section["l_polynomial"]) if "l_polynomial" in section else None
    return CurveSpec(
        q=q,
        genus=genus,
        model=model,
        counts=counts,
        l_polynomial=lpoly,
        label=section.get("label", ""),
    )


def _zeta_from_config(cfg: dict, enum_cap: int) -> ZetaData:
    if "curve" in cfg:
        return zeta_data(_curve_from_config(cfg["curve"]), enum_cap=enum_cap)
    if "weil" in cfg:
        section = cfg["weil"]
        weil = validate(section["q"], IntPolynomial(section["ch"]))
        counts = tuple(curve_point_count(weil, m) for m in range(1, weil.g + 1))
        return ZetaData(q=weil.q, g=weil.g, weil=weil, point_counts=counts)
    raise ConfigError("config needs a [curve] or [weil] section")


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(row):
        return "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
    print(fmt(headers))
    print("  ".join("-" * w for w in widths))
    for row in rows:
        print(fmt(row))


def _emit_csv(headers: list[str], rows: list[list[str]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _emit_json(document) -> None:
    print(json.dumps(document, indent=2, sort_keys=True))


def _emit(fmt: str, headers: list[str], rows: list[list[str]], document) -> None:
    if fmt == "table":
        _emit_table(headers, rows)
    elif fmt == "csv":
        _emit_csv(headers, rows)
    elif fmt == "json":
        _emit_json(document)
    else:  # pragma: no cover
        raise ConfigError(f"unknown format {fmt!r}")


def _s(x) -> str:
    """Integers as decimal strings (also Fractions as num/den strings)."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_zeta(args) -> int:
    cfg = load_config(args.config, "zeta", args.strict)
    if "curve" not in cfg:
        raise ConfigError("zeta needs a [curve] section")
    curve = _curve_from_config(cfg["curve"])
    zeta = zeta_data(curve, enum_cap=args.enum_cap)
    nmax = args.nmax or cfg.get("run", {}).get("nmax", max(zeta.g, 1) * 3)
    headers = ["n", "curve_points", "picard_order"]
    rows = [
        [_s(n), _s(curve_point_count(zeta.weil, n)), _s(point_count(zeta.weil, n))]
        for n in range(1, nmax + 1)
    ]
    document = {
        "label": curve.label,
        "q": _s(zeta.q),
        "genus": _s(zeta.g),
        "ch": [_s(c) for c in zeta.weil.ch.coeffs],
        "l_polynomial": [_s(c) for c in l_polynomial(zeta).coeffs],
        "rows": [dict(zip(headers, row)) for row in rows],
    }
    if args.format == "table":
        print(f"curve: {curve.label or '(unlabelled)'}")
        print(f"q = {zeta.q}, genus = {zeta.g}")
        print(f"ch  = {zeta.weil.ch}")
        print(f"L   = {l_polynomial(zeta)}")
    _emit(args.format, headers, rows, document)
    return EXIT_OK


def cmd_torsion(args) -> int:
    cfg = load_config(args.config, "torsion", args.strict)
    zeta = _zeta_from_config(cfg, args.enum_cap)
    run = cfg.get("run", {})
    ell = args.ell or run.get("ell")
    nmax = args.nmax or run.get("nmax", 30)
    if ell is None:
        raise ConfigError("torsion needs --ell or run.ell")
    invariants = ell_invariants(zeta.weil, ell)
    report = verify_torsion_law(zeta.weil, ell, nmax, invariants)
    headers = ["ell", "d", "j", "N", "increment"]
    rows = []
    for (d, j) in sorted(invariants.n_table):
        value = invariants.n_table[(d, j)]
        nxt = invariants.n_table.get((d, j + 1))
        inc = _s(v_ell(nxt // value, ell)) if nxt else ""
        rows.append([_s(ell), _s(d), _s(j), _s(value), inc])
    document = {
        "ell": _s(ell),
        "h_ell": _s(invariants.h_ell),
        "g_of_d": {str(d): _s(g) for d, g in invariants.g_of_d.items()},
        "j_ell_empirical": _s(invariants.j_ell),
        "table": [dict(zip(headers, row)) for row in rows],
        "verification": {
            "n_max": _s(nmax),
            "passed": report.passed,
            "failures": [
                {"n": _s(c.n), "expected": _s(c.expected), "actual": _s(c.actual)}
                for c in report.failures()
            ],
        },
    }
    if args.format == "table":
        print(f"ell = {ell}: h = {invariants.h_ell}, "
              f"g_d = {invariants.g_of_d}, empirical j_ell = {invariants.j_ell}")
    _emit(args.format, headers, rows, document)
    if args.format == "table":
        status = "PASS" if report.passed else "FAIL"
        print(f"torsion law for n <= {nmax}: {status}")
    if not report.passed:
        return EXIT_THEOREM
    return EXIT_OK


def _census_row(census: DihedralCensusInput, ell: int, n: int):
    import math as _math

    from .census import CensusRow, census_ell_adic, census_mod_ell

    adic = census_ell_adic(census, n)
    mod = census_mod_ell(census, ell, n)
    if mod > adic:
        raise ArithmeticError(f"mod-ell census exceeds the ell-adic census at n = {n}")
    j = v_ell(n, ell)
    assert isinstance(j, int)
    return CensusRow(n=n, count_ell_adic=adic, count_mod_ell=mod,
                     ratio=Fraction(adic, mod) if mod else None,
                     j=j, d=_math.gcd(n, census.n_b))


def _census_from_config(cfg: dict) -> DihedralCensusInput:
    if "census" not in cfg:
        raise ConfigError("dihedral needs a [census] section")
    section = cfg["census"]
    base_cfg = section.get("base")
    if base_cfg is None:
        raise ConfigError("dihedral needs [census.base]")
    q = base_cfg["q"]
    genus = base_cfg["genus"]
    if "ch" in base_cfg:
        weil = validate(q, IntPolynomial(base_cfg["ch"]))
        if weil.g != genus:
            raise ConfigError("base ch degree does not match the genus")
        counts = tuple(curve_point_count(weil, m) for m in range(1, genus + 1))
        base = ZetaData(q=q, g=genus, weil=weil, point_counts=counts)
    elif "counts" in base_cfg:
        base = zeta_from_counts(q, genus, base_cfg["counts"])
    else:
        raise ConfigError("[census.base] needs ch or counts")
    betas = []
    for bcfg in section.get("beta", []):
        betas.append(
            BetaRecord(
                label=bcfg.get("label", f"beta{len(betas) + 1}"),
                n_beta=bcfg["n_beta"],
                e_beta=bcfg["e_beta"],
                cover_weil=validate(q ** bcfg["n_beta"], IntPolynomial(bcfg["cover_ch"])),
            )
        )
    return DihedralCensusInput(base=base, betas=tuple(betas))


def cmd_dihedral(args) -> int:
    cfg = load_config(args.config, "dihedral", args.strict)
    census = _census_from_config(cfg)
    run = cfg.get("run", {})
    ell = args.ell or run.get("ell")
    nmax = args.nmax or run.get("nmax", 12)
    if ell is None:
        raise ConfigError("dihedral needs --ell or run.ell")
    threads = int(os.environ.get("WEIL_CENSUS_THREADS", "1"))
    if threads > 1:
        # rows are independent; output stays ordered by n via pool.map
        with ThreadPoolExecutor(max_workers=threads) as pool:
            all_rows = list(pool.map(lambda n: _census_row(census, ell, n),
                                     range(1, nmax + 1)))
    else:
        all_rows = census_series(census, ell, nmax)
    headers = ["n", "d", "j", "T_dihedral_ell_adic", "T_dihedral_mod_ell", "ratio_v_ell"]
    rows = []
    for r in all_rows:
        v_ratio = ""
        if r.ratio is not None:
            v_num = v_ell(r.ratio.numerator, ell)
            v_den = v_ell(r.ratio.denominator, ell)
            v_ratio = _s(v_num - v_den)
        rows.append([_s(r.n), _s(r.d), _s(r.j),
                     _s(r.count_ell_adic), _s(r.count_mod_ell), v_ratio])
    lead = leading_coefficients(census)
    probe_ns = run.get("probe")
    probe_doc = None
    if probe_ns:
        probe = asymptotic_ratio_probe(census, ell, probe_ns)
        probe_doc = {
            "rows": [
                {"n": _s(r.n), "j": _s(r.j), "v_ratio": None if r.v_ratio is None else _s(r.v_ratio)}
                for r in probe.rows
            ],
            "fixed_j": [
                {"j": _s(c.j), "stabilized": c.stabilized,
                 "tail_value": None if c.tail_value is None else _s(c.tail_value)}
                for c in probe.fixed_j
            ],
            "geometric": [
                {"n0": _s(c.n0), "affine": c.affine,
                 "slope": None if c.slope is None else _s(c.slope)}
                for c in probe.geometric
            ],
        }
    document = {
        "q": _s(census.base.q),
        "genus": _s(census.base.g),
        "ell": _s(ell),
        "n_B": _s(census.n_b),
        "leading_coefficients": {str(d): _s(c) for d, c in lead.by_divisor.items()},
        "C1_is_zero": lead.c1_is_zero,
        "rows": [dict(zip(headers, row)) for row in rows],
        "probe": probe_doc,
    }
    if args.format == "table":
        print(f"census: q = {census.base.q}, genus = {census.base.g}, "
              f"{len(census.betas)} labels, ell = {ell}")
        coeffs = ", ".join(f"C_{d} = {_s(c)}" for d, c in sorted(lead.by_divisor.items()))
        print(f"leading coefficients ({coeffs}); C_1 zero: {lead.c1_is_zero}")
    _emit(args.format, headers, rows, document)
    if args.format == "table" and probe_doc is not None:
        print("ratio probe:")
        for entry in probe_doc["rows"]:
            print(f"  n = {entry['n']}: j = {entry['j']}, v_ell(ratio) = {entry['v_ratio']}")
        for check in probe_doc["fixed_j"]:
            print(f"  fixed j = {check['j']}: stabilized = {check['stabilized']}"
                  f" (tail value {check['tail_value']})")
        for check in probe_doc["geometric"]:
            print(f"  chain from n0 = {check['n0']}: affine = {check['affine']}"
                  f" (slope {check['slope']})")
    return EXIT_OK


def cmd_twistcount(args) -> int:
    cfg = load_config(args.config, "twistcount", args.strict)
    data = cfg.get("datum")
    if not data:
        raise ConfigError("twistcount needs at least one [[datum]]")
    run = cfg.get("run", {})
    ells = run.get("ell", [3])
    if isinstance(ells, int):
        ells = [ells]
    if args.ell:
        ells = [args.ell]
    cap = run.get("oracle_cap", 10 ** 6)
    headers = ["label", "m_prime", "m", "e", "mode", "formula", "oracle"]
    rows = []
    doc_rows = []
    mismatch = False
    for i, entry in enumerate(data):
        label = entry.get("label", f"datum{i + 1}")
        module = InvolutionModule(
            invariant_factors=tuple(entry["invariant_factors"]),
            c_action=tuple(tuple(row) for row in entry["c_action"]),
        )
        comm = entry.get("comm_generators")
        comm_t = tuple(tuple(g) for g in comm) if comm is not None else None
        m_order = entry.get("m_order")
        if m_order is None:
            m_order = consistent_m_order(module, comm_t)
        datum = DihedralDatum(mprime=module, m_order=m_order, comm_generators=comm_t)
        run_oracle = module.order <= cap
        modes: list[tuple[str, int, int | None]] = []
        value = count_dihedral_ell_adic(datum)
        modes.append(("ell-adic", value, oracle_count(datum, "all", cap) if run_oracle else None))
        for ell in ells:
            mod_value = count_dihedral_mod_ell(datum, ell)
            oracle = oracle_count(datum, ell, cap) if run_oracle else None
            modes.append((f"mod-{ell}", mod_value, oracle))
        for mode, value, oracle in modes:
            ok = oracle is None or oracle == value
            if not ok:
                mismatch = True
            rows.append([label, _s(module.order), _s(m_order), _s(datum.e), mode,
                         _s(value), "" if oracle is None else _s(oracle)])
            doc_rows.append({
                "label": label,
                "m_prime_order": _s(module.order),
                "m_order": _s(m_order),
                "e": _s(datum.e),
                "mode": mode,
                "formula": _s(value),
                "oracle": None if oracle is None else _s(oracle),
                "fibers": {str(ell): _s(lift_fiber_size(datum, ell)) for ell in ells},
            })
    document = {"data": doc_rows, "oracle_cap": _s(cap)}
    _emit(args.format, headers, rows, document)
    if mismatch:
        print("error: formula disagreed with the exhaustive oracle", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def cmd_recfit(args) -> int:
    try:
        with open(args.sequence) as handle:
            terms = []
            for line in handle:
                line = line.split("#", 1)[0].strip()
                if line:
                    terms.append(int(line))
    except OSError as exc:
        raise ConfigError(f"cannot read sequence file: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"sequence file must hold one integer per line: {exc}") from exc
    if len(terms) < 2:
        raise ConfigError("need at least 2 terms")
    report = detect_lefschetz(terms, args.q, args.g)
    document = {
        "q": _s(args.q),
        "genus": _s(args.g),
        "terms": _s(len(terms)),
        "fits": report.fits,
        "k": None if report.k is None else _s(report.k),
        "leading_root": report.leading_root,
        "drinfeld_shape": report.drinfeld_shape,
        "failure_reason": report.failure_reason,
        "weights": [
            {"factor": w.factor, "modulus": f"{w.modulus:.9g}",
             "weight": None if w.weight is None else _s(w.weight)}
            for w in report.weight_table
        ],
        "tolerance_note": report.tolerance_note,
    }
    if args.format == "json":
        _emit_json(document)
    else:
        print(f"terms: {len(terms)}, fits: {report.fits}", end="")
        if report.fits:
            print(f", k = {report.k}, leading root {report.leading_root}")
        else:
            print(f" ({report.failure_reason})")
        for w in report.weight_table:
            tag = f"weight {w.weight}" if w.weight is not None else "no half-integral weight"
            print(f"  {w.factor}: |mu| = {w.modulus:.6g} ({tag})")
        print(f"drinfeld_shape: {report.drinfeld_shape}")
        print(report.tolerance_note)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilcensus",
        description="Exact point counts, torsion invariants, and dihedral censuses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("config", help="TOML configuration file")
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--strict", action="store_true",
                       help="reject unknown config keys instead of warning")
        p.add_argument("--enum-cap", type=int, default=ENUM_CAP,
                       help="largest q^n for brute-force enumeration")
        p.add_argument("--seed", type=int, default=None,
                       help="PRNG seed for polynomial factorization (results are seed-independent)")

    p = sub.add_parser("zeta", help="curve zeta data and point-count table")
    common(p)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("torsion", help="ell-power torsion invariants and verification")
    common(p)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("dihedral", help="dihedral census series, probe, leading coefficients")
    common(p)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("twistcount", help="involution-module counts with oracle comparison")
    common(p)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(func=cmd_twistcount)

    p = sub.add_parser("recfit", help="recurrence fit and Lefschetz-shape report")
    p.add_argument("sequence", help="file with one integer per line")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_recfit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is not None:
        modpoly.FACTOR_SEED = args.seed
    try:
        return args.func(args)
    except (ConfigError, InvalidWeilPolynomial, InconsistentDatum, ValueError) as exc:
        if isinstance(exc, InvalidWeilPolynomial):
            for violation in exc.violations:
                print(f"error: {violation}", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
