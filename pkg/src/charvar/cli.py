"""Command line front end.

Subcommands: analyze, strata, classify, fixed-loci, terminalize, verify,
presets.  Every subcommand takes --json for machine-readable output and
--config pointing at a JSON file whose keys mirror the flag names (explicit
flags win).  Exit codes: 0 success, 1 input error, 2 verification failure,
so CI can tell a typo from mathematics disagreeing with an oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd, lcm
from typing import Optional, Sequence

from .classify import classify_resolution, properties_report, singular_locus_codim
from .fixed_loci import (
    codim_highgenus_from_orders,
    fixed_codim_genus1,
    fixed_codim_highgenus,
    fixed_tangent_oracle,
    genus1_orbit_oracle,
    min_nonfree_codim,
    per_factor_orders,
)
from .groups import (
    PRESET_CATALOG,
    GroupSpecError,
    canonical_decomposition,
    char_variety_dim,
    parse_group_spec,
)
from .numerics import (
    ConvergenceError,
    centralizer_dim,
    cohomology_dims,
    fixed_point_tangent_check,
    moment_residual,
    mpa_to_surface,
    newton_refine_rep,
    refine_moment_map_point,
    sample_diagonal_rep,
    sample_moment_start,
    sample_random_rep,
)
from .strata import strata_table
from .terminalize import plan_terminalization, render_plan

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFY_FAILURE = 2

# which rule justifies each analyze field, stated by content
CITATIONS = {
    "dimension": (
        "dimension count: 2gh for the torus plus 2(g-1)(n_i^2-1)+2 summed "
        "over SL factors at genus >= 2, and 2h plus 2(n_i-1) at genus one"
    ),
    "strata": (
        "stratification by weighted partitions: multiplicities and block "
        "dimensions of the underlying semisimple representation type"
    ),
    "singular_codim": (
        "minimum over non-generic stratum codimensions and non-free central "
        "twist codimensions"
    ),
    "properties": (
        "symplectic singularities and Q-factoriality hold for every quotient "
        "here; terminality is the codimension >= 4 cut"
    ),
    "verdict": (
        "case analysis on genus and the torus-invisible kernel: genus one "
        "needs a product of SL factors and PGL(2) slots, genus two a pure "
        "SL(2) product, genus >= 3 nothing survives"
    ),
    "terminalization": (
        "factor-wise modification (Hilbert-Chow at genus one, singular-locus "
        "blowup for SL(2) at genus two) followed by central and etale "
        "quotients"
    ),
}

_VERIFY_SUITES = ("cohomology", "moment-map", "fixed-loci", "all")
_MAX_RESAMPLES = 5


class CliInputError(Exception):
    """Bad flags, config, or group description; maps to exit code 1."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; 2 is reserved for oracle
    # failures here, so reroute through the input-error path
    def error(self, message):
        raise CliInputError("usage", message)


def _fail(err: CliInputError) -> int:
    print(f"error[{err.code}]: {err}", file=sys.stderr)
    return EXIT_INPUT_ERROR


# --------------------------------------------------------------------------
# flag plumbing


def _build_parser() -> _Parser:
    parser = _Parser(prog="charvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def common(p, group=True, genus=True):
        if group:
            p.add_argument(
                "--group",
                default=None,
                help="preset like SL(2), GL(3)xPGL(2), or a JSON object",
            )
        if genus:
            p.add_argument("--genus", type=int, default=None)
        p.add_argument("--json", action="store_true", default=None)
        p.add_argument("--config", default=None, help="JSON file of defaults")

    p = sub.add_parser("analyze", help="full report: dimensions to terminalization")
    common(p)

    p = sub.add_parser("strata", help="stratum table per SL factor")
    common(p)

    p = sub.add_parser("classify", help="does a symplectic resolution exist")
    common(p)

    p = sub.add_parser("fixed-loci", help="codimensions of central-twist fixed loci")
    common(p)
    p.add_argument(
        "--oracle",
        action="store_true",
        default=None,
        help="cross-check each codimension against brute-force counts",
    )

    p = sub.add_parser("terminalize", help="Q-factorial terminalization plan")
    common(p)

    p = sub.add_parser("verify", help="numerical suites against exact predictions")
    common(p, group=False, genus=False)
    p.add_argument("--suite", choices=_VERIFY_SUITES, default=None)
    p.add_argument("--n", dest="sizes", default=None, help="comma-separated sizes")
    p.add_argument(
        "--genus", dest="genera", default=None, help="comma-separated genera"
    )
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument(
        "--strict",
        action="store_true",
        default=None,
        help="treat unreliable rank cuts as failures",
    )

    p = sub.add_parser("presets", help="list --group preset patterns")
    p.add_argument("--json", action="store_true", default=None)
    p.add_argument("--config", default=None)
    return parser


def _load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        with open(path) as handle:
            config = json.load(handle)
    except OSError as exc:
        raise CliInputError("config", f"cannot read config file: {exc}")
    except json.JSONDecodeError as exc:
        raise CliInputError("config", f"config is not valid JSON: {exc}")
    if not isinstance(config, dict):
        raise CliInputError("config", "config must be a JSON object")
    return config


def _merged(args, config: dict, key: str, default=None, required: bool = False):
    value = getattr(args, key, None)
    if value is None:
        value = config.get(key, default)
    if value is None and required:
        raise CliInputError("usage", f"--{key.replace('_', '-')} is required")
    return value


def _resolve_spec(args, config):
    text = _merged(args, config, "group", required=True)
    try:
        if isinstance(text, dict):
            return parse_group_spec(text)
        return parse_group_spec(str(text))
    except GroupSpecError as exc:
        raise CliInputError("group-spec", str(exc))


def _resolve_genus(args, config) -> int:
    genus = _merged(args, config, "genus", required=True)
    try:
        genus = int(genus)
    except (TypeError, ValueError):
        raise CliInputError("genus", f"genus must be an integer, got {genus!r}")
    if genus < 1:
        raise CliInputError("genus", f"genus must be >= 1, got {genus}")
    return genus


def _parse_int_list(value, flag: str) -> list[int]:
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = str(value).split(",")
    try:
        out = [int(x) for x in items]
    except (TypeError, ValueError):
        raise CliInputError("usage", f"--{flag} wants comma-separated integers")
    if not out:
        raise CliInputError("usage", f"--{flag} must not be empty")
    return out


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


# --------------------------------------------------------------------------
# report-building subcommands


def _analysis_report(spec, genus: int) -> dict:
    decomp = canonical_decomposition(spec)
    flags = properties_report(spec, genus, decomp)
    verdict = classify_resolution(spec, genus)
    plan = plan_terminalization(spec, genus)
    return {
        "group": spec.to_json(),
        "genus": genus,
        "decomposition": decomp.summary(),
        "dimension": char_variety_dim(spec, genus),
        "strata": strata_table(spec, genus).to_json(),
        "singular_codim": singular_locus_codim(spec, genus, decomp),
        "properties": flags.to_json(),
        "verdict": verdict.to_json(),
        "terminalization": plan.to_json(),
        "verification": None,
        "citations": dict(CITATIONS),
    }


def _cmd_analyze(args, config) -> int:
    spec = _resolve_spec(args, config)
    genus = _resolve_genus(args, config)
    report = _analysis_report(spec, genus)
    verdict = report["verdict"]
    lines = [
        f"group: {_merged(args, config, 'group')}",
        f"genus: {genus}",
        f"dimension: {report['dimension']}",
        f"singular locus codimension: {report['singular_codim']}",
        f"verdict: {verdict['kind']}"
        + (f" ({verdict['case']})" if verdict["case"] else ""),
        f"  {verdict['witness']}",
        render_plan(plan_terminalization(spec, genus)),
    ]
    _emit(report, _merged(args, config, "json", False), "\n".join(lines))
    return EXIT_OK


def _cmd_strata(args, config) -> int:
    spec = _resolve_spec(args, config)
    genus = _resolve_genus(args, config)
    table = strata_table(spec, genus)
    lines = [f"total dimension: {char_variety_dim(spec, genus)}"]
    for n, rows in table.factor_tables:
        lines.append(f"factor SL({n}):")
        for row in rows:
            fiber = (
                f"fiber=[{row.fiber_bounds[0]},{row.fiber_bounds[1]}]"
                if row.fiber_bounds
                else "fiber=-"
            )
            lines.append(
                f"  {str(row.nu):<18} dim_gl={row.dim_gl:<4} dim_sl={row.dim_sl:<4} "
                f"codim={row.codim:<4} {fiber:<15} open={row.is_open}"
            )
    _emit(table.to_json(), _merged(args, config, "json", False), "\n".join(lines))
    return EXIT_OK


def _cmd_classify(args, config) -> int:
    spec = _resolve_spec(args, config)
    genus = _resolve_genus(args, config)
    verdict = classify_resolution(spec, genus)
    payload = verdict.to_json()
    payload["citation"] = CITATIONS["verdict"]
    payload["properties"] = properties_report(spec, genus).to_json()
    text = (
        f"verdict: {verdict.kind}"
        + (f" ({verdict.case})" if verdict.case else "")
        + f"\n  {verdict.witness}"
    )
    _emit(payload, _merged(args, config, "json", False), text)
    return EXIT_OK


def _cmd_terminalize(args, config) -> int:
    spec = _resolve_spec(args, config)
    genus = _resolve_genus(args, config)
    plan = plan_terminalization(spec, genus)
    _emit(plan.to_json(), _merged(args, config, "json", False), render_plan(plan))
    return EXIT_OK


def _fixed_locus_rows(spec, genus: int) -> list[dict]:
    rows = []
    for element in spec.full_center_subgroup():
        if element.is_identity:
            continue
        if genus == 1:
            result = fixed_codim_genus1(element, spec.factors)
        else:
            result = fixed_codim_highgenus(element, spec.factors, genus)
        row = {"element": element.to_json(), **result.to_json()}
        rows.append(row)
    return rows


def _oracle_mismatches(spec, genus: int) -> list[str]:
    """Brute-force recounts of every per-factor codimension contribution."""
    problems = []
    for element in spec.full_center_subgroup():
        if element.is_identity or not element.torus_trivial:
            continue
        orders = per_factor_orders(element, spec.factors)
        for i, (n, ell) in enumerate(zip(spec.factors, orders)):
            if genus == 1:
                closed_dim = (2 * n - 2) - (2 * n - 2 * (n // ell))
                counted = genus1_orbit_oracle(n, (element.ss_part[i], 0))
                if counted != closed_dim:
                    problems.append(
                        f"genus-1 factor {i}: orbit count {counted} vs "
                        f"formula {closed_dim} for twist {element.ss_part}"
                    )
            else:
                closed = codim_highgenus_from_orders([n], [ell], genus)
                counted = fixed_tangent_oracle(n, ell, genus)
                numeric = fixed_point_tangent_check(n, ell, genus)
                if counted != closed or numeric != closed:
                    problems.append(
                        f"factor {i}: tangent counts {counted}/{numeric} vs "
                        f"formula {closed} for order-{ell} twist"
                    )
    return problems


def _cmd_fixed_loci(args, config) -> int:
    spec = _resolve_spec(args, config)
    genus = _resolve_genus(args, config)
    decomp = canonical_decomposition(spec)
    rows = _fixed_locus_rows(spec, genus)
    best = min_nonfree_codim(decomp, genus)
    payload = {
        "genus": genus,
        "group": spec.to_json(),
        "twists": rows,
        "min_codim": None if best is None else best[0],
        "min_witness": None if best is None else best[1].to_json(),
    }
    lines = []
    for row in rows:
        codim = "empty" if row["empty"] else f"codim {row['codim']}"
        lines.append(f"twist {row['element']['factors']}: {codim} ({row['note']})")
    if best is None:
        lines.append("no nontrivial torus-invisible twist: center acts freely")
    else:
        lines.append(f"minimum codimension: {best[0]} at {best[1].ss_part}")

    if _merged(args, config, "oracle", False):
        problems = _oracle_mismatches(spec, genus)
        payload["oracle_mismatches"] = problems
        if problems:
            _emit(payload, _merged(args, config, "json", False), "\n".join(lines))
            for p in problems:
                print(f"error[oracle]: {p}", file=sys.stderr)
            return EXIT_VERIFY_FAILURE
        lines.append("oracle cross-checks passed")
    _emit(payload, _merged(args, config, "json", False), "\n".join(lines))
    return EXIT_OK


def _cmd_presets(args, config) -> int:
    payload = [{"pattern": name, "description": desc} for name, desc in PRESET_CATALOG]
    text = "\n".join(f"{name:<10} {desc}" for name, desc in PRESET_CATALOG)
    _emit({"presets": payload}, _merged(args, config, "json", False), text)
    return EXIT_OK


# --------------------------------------------------------------------------
# verification suites


def _trial_seed(master: int, *indices: int) -> int:
    x = master % (2**63)
    for k in indices:
        x = (x * 1_000_003 + k + 1) % (2**63)
    return x


def _cohomology_records(sizes, genera, trials, master_seed) -> list[dict]:
    records = []
    for n in sizes:
        for genus in genera:
            if genus < 2:
                raise CliInputError(
                    "genus",
                    "cohomology suite needs genus >= 2 "
                    "(no irreducible points exist at genus one)",
                )
            expected_h1 = 2 * (genus - 1) * (n * n - 1)
            for trial in range(trials):
                rec = {
                    "suite": "cohomology",
                    "kind": "irreducible-random",
                    "n": n,
                    "genus": genus,
                    "trial": trial,
                    "resamples": 0,
                    "failures": [],
                }
                rep = None
                for attempt in range(_MAX_RESAMPLES):
                    seed = _trial_seed(master_seed, 1, n, genus, trial, attempt)
                    try:
                        candidate = newton_refine_rep(
                            sample_random_rep(n, genus, seed=seed), tol=1e-12
                        )
                    except ConvergenceError:
                        rec["resamples"] += 1
                        continue
                    if centralizer_dim(candidate, mode="gl", seed=seed) == 1:
                        rep = candidate
                        rec["seed"] = seed
                        break
                    rec["resamples"] += 1
                if rep is None:
                    rec["failures"].append("no irreducible point found")
                else:
                    report = cohomology_dims(rep)
                    rec.update(
                        {
                            "relator_residual": rep.relator_residual(),
                            "h": [report.h0, report.h1, report.h2],
                            "expected_h1": expected_h1,
                            "euler_residual": report.euler_residual,
                            "singular_value_gap": report.to_json()[
                                "singular_value_gap"
                            ],
                            "reliable": report.reliable,
                        }
                    )
                    if rec["relator_residual"] > 1e-12:
                        rec["failures"].append("relator residual above 1e-12")
                    if (report.h0, report.h2) != (0, 0):
                        rec["failures"].append("nonzero h0 or h2 at irreducible point")
                    if report.h1 != expected_h1:
                        rec["failures"].append(
                            f"h1 = {report.h1}, expected {expected_h1}"
                        )
                    if report.euler_residual != 0:
                        rec["failures"].append("nonzero euler residual")
                rec["ok"] = not rec["failures"]
                records.append(rec)

            # one commuting tuple per (n, genus): exact and reducible
            seed = _trial_seed(master_seed, 2, n, genus)
            rep = sample_diagonal_rep(n, genus, seed=seed)
            report = cohomology_dims(rep)
            rec = {
                "suite": "cohomology",
                "kind": "commuting-diagonal",
                "n": n,
                "genus": genus,
                "seed": seed,
                "relator_residual": rep.relator_residual(),
                "h": [report.h0, report.h1, report.h2],
                "euler_residual": report.euler_residual,
                "singular_value_gap": report.to_json()["singular_value_gap"],
                "reliable": report.reliable,
                "failures": [],
            }
            if (report.h0, report.h2) != (n - 1, n - 1):
                rec["failures"].append(f"h0 = {report.h0}, expected {n - 1}")
            if report.euler_residual != 0:
                rec["failures"].append("nonzero euler residual")
            rec["ok"] = not rec["failures"]
            records.append(rec)
    return records


def _moment_records(sizes, genera, trials, master_seed) -> list[dict]:
    records = []
    for n in sizes:
        for genus in genera:
            for trial in range(trials):
                rec = {
                    "suite": "moment-map",
                    "n": n,
                    "genus": genus,
                    "trial": trial,
                    "failures": [],
                }
                seed = _trial_seed(master_seed, 3, n, genus, trial)
                rec["seed"] = seed
                try:
                    solved = refine_moment_map_point(
                        sample_moment_start(n, genus, seed=seed, spread=0.3),
                        tol=1e-8,
                    )
                    mres = moment_residual(solved)
                    rep = mpa_to_surface(solved, tol=1e-7)
                    rres = rep.relator_residual()
                    rec["moment_residual"] = mres
                    rec["relator_residual"] = rres
                    if mres > 1e-8:
                        rec["failures"].append("moment residual above 1e-8")
                    if rres > 1e-7:
                        rec["failures"].append(
                            "relator residual above ten times the moment tolerance"
                        )
                except (ConvergenceError, ValueError) as exc:
                    rec["failures"].append(str(exc))
                rec["ok"] = not rec["failures"]
                records.append(rec)
    return records


def _fixed_loci_records(sizes, genera) -> list[dict]:
    records = []
    for n in sizes:
        for genus in genera:
            rec = {
                "suite": "fixed-loci",
                "n": n,
                "genus": genus,
                "checks": 0,
                "failures": [],
            }
            if genus == 1:
                for a in range(n):
                    for b in range(n):
                        ell = lcm(n // gcd(a, n), n // gcd(b, n))
                        closed_dim = (2 * n - 2) - (2 * n - 2 * (n // ell))
                        counted = genus1_orbit_oracle(n, (a, b))
                        rec["checks"] += 1
                        if counted != closed_dim:
                            rec["failures"].append(
                                f"pair ({a},{b}): counted {counted}, "
                                f"formula {closed_dim}"
                            )
            else:
                for ell in range(1, n + 1):
                    if n % ell:
                        continue
                    closed = codim_highgenus_from_orders([n], [ell], genus)
                    counted = fixed_tangent_oracle(n, ell, genus)
                    numeric = fixed_point_tangent_check(n, ell, genus)
                    rec["checks"] += 1
                    if counted != closed or numeric != closed:
                        rec["failures"].append(
                            f"order {ell}: counted {counted}, numeric {numeric}, "
                            f"formula {closed}"
                        )
            rec["ok"] = not rec["failures"]
            records.append(rec)
    return records


def _cmd_verify(args, config) -> int:
    suite = _merged(args, config, "suite", required=True)
    if suite not in _VERIFY_SUITES:
        raise CliInputError("usage", f"unknown suite {suite!r}")
    sizes = _parse_int_list(_merged(args, config, "sizes", "2"), "n")
    genera = _parse_int_list(_merged(args, config, "genera", "2"), "genus")
    trials = int(_merged(args, config, "trials", 3))
    if trials < 1:
        raise CliInputError("usage", "--trials must be >= 1")
    master_seed = int(_merged(args, config, "seed", 0))
    strict = bool(_merged(args, config, "strict", False))

    records = []
    if suite in ("cohomology", "all"):
        records += _cohomology_records(sizes, genera, trials, master_seed)
    if suite in ("moment-map", "all"):
        records += _moment_records(sizes, genera, trials, master_seed)
    if suite in ("fixed-loci", "all"):
        records += _fixed_loci_records(sizes, genera)

    failed = [r for r in records if not r["ok"]]
    unreliable = [r for r in records if r.get("reliable") is False]
    ok = not failed and not (strict and unreliable)
    payload = {
        "suite": suite,
        "seed": master_seed,
        "trials": trials,
        "sizes": sizes,
        "genera": genera,
        "strict": strict,
        "records": records,
        "ok": ok,
    }
    lines = []
    for rec in records:
        tag = f"{rec['suite']}"
        for key in ("n", "genus", "trial", "kind"):
            if key in rec:
                tag += f" {key}={rec[key]}"
        status = "ok" if rec["ok"] else "FAIL: " + "; ".join(rec["failures"])
        lines.append(f"{tag}: {status}")
    lines.append(
        f"{len(records) - len(failed)}/{len(records)} record(s) passed"
        + (f", {len(unreliable)} unreliable rank cut(s)" if unreliable else "")
    )
    _emit(payload, _merged(args, config, "json", False), "\n".join(lines))
    if failed:
        print(
            f"error[verify]: {len(failed)} record(s) disagreed with the oracle",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILURE
    if strict and unreliable:
        print(
            f"error[verify]: {len(unreliable)} unreliable rank cut(s) in strict mode",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILURE
    return EXIT_OK


# --------------------------------------------------------------------------


_HANDLERS = {
    "analyze": _cmd_analyze,
    "strata": _cmd_strata,
    "classify": _cmd_classify,
    "fixed-loci": _cmd_fixed_loci,
    "terminalize": _cmd_terminalize,
    "verify": _cmd_verify,
    "presets": _cmd_presets,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise CliInputError("usage", "a subcommand is required (see --help)")
        config = _load_config(getattr(args, "config", None))
        return _HANDLERS[args.command](args, config)
    except CliInputError as exc:
        return _fail(exc)
    except ValueError as exc:
        return _fail(CliInputError("input", str(exc)))


if __name__ == "__main__":
    sys.exit(main())
