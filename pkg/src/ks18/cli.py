"""Command-line interface: graph, verify, invariants, simulate, certify, strategy.

All machine-readable output is deterministic: JSON keys are sorted,
floats are printed with 12 significant digits, and the SVG chart carries
no timestamps.  Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click
import numpy as np

from . import classical, invariants, ksets, quantum
from .algebra import DensityMatrix, PureState, is_density_matrix
from .certify import (
    CertificationReport,
    NoiseParams,
    band_chart_svg,
    certify as run_certify,
    corrected_classical_bound,
    estimate_epsilon,
    expected_band,
    recompute_xi_from_terms,
    summary_statistics,
)
from .datasets import (FIXTURE_FILES, dedupe_records, dump_fixtures,
                       duplicate_keys, load_table)
from .graphs import ExclusivityGraph


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def render_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, 12-significant-digit floats."""
    pad = "  " * indent
    child = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj, key=str):
            items.append(f"{child}{json.dumps(str(key))}: {render_json(obj[key], indent + 1)}")
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            return "[]"
        items = [f"{child}{render_json(x, indent + 1)}" for x in seq]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _common_options(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write output to this file instead of stdout.")(fn)
    fn = click.option("--data", "data", type=str, default=None,
                      help="Table source: fixture id or CSV path.")(fn)
    fn = click.option("--tolerance", type=float, default=None,
                      help="Override the default numeric tolerance.")(fn)
    fn = click.option("--seed", type=int, default=20240, show_default=True,
                      help="Seed for random sweeps.")(fn)
    fn = click.option("--format", "fmt",
                      type=click.Choice(["json", "csv", "svg", "text"]),
                      default=None, help="Output format.")(fn)
    return fn


def _dump_fixtures_cb(ctx: click.Context, _param, value):
    if not value or ctx.resilient_parsing:
        return None
    paths = dump_fixtures(value)
    for p in paths:
        click.echo(str(p))
    ctx.exit(0)


@click.group()
@click.option("--dump-fixtures", type=click.Path(file_okay=False), default=None,
              is_eager=True, expose_value=False, callback=_dump_fixtures_cb,
              help="Export the embedded CSV fixtures into a directory and exit.")
def main() -> None:
    """Tools for the 18-test set: graph, invariants, simulation, certification."""


def _load_graph_file(path: str) -> tuple[ExclusivityGraph, list[ksets.Basis]]:
    text = Path(path).read_text()
    if not text.strip():
        raise click.UsageError(f"empty graph input: {path}")
    if path.endswith(".json") or text.lstrip().startswith("{"):
        payload = json.loads(text)
        if "vertices" in payload:
            n = len(payload["vertices"])
            g = ExclusivityGraph(n, payload["edges"],
                                 [v.get("label", f"v{v['id']}") for v in payload["vertices"]])
        else:
            g = ExclusivityGraph.from_dict(payload)
        bases = [ksets.Basis(tuple(b)) for b in payload.get("bases", [])]
        return g, bases
    return ExclusivityGraph.from_edge_list_text(text), []


@main.command("graph")
@_common_options
@click.option("--check-edges", is_flag=True,
              help="Cross-check a directed edge-probability table against the derived graph.")
def cmd_graph(fmt, seed, tolerance, data, out, check_edges) -> None:
    """Emit the vectors, derived graph, bases, and discrepancy flags."""
    if data is not None and not check_edges:
        g, _ = _load_graph_file(data)
        payload = g.to_dict()
    else:
        payload = ksets.ks_set_dict()
        if check_edges:
            source = data or "edges"
            try:
                records = load_table(source)
            except (ValueError, OSError, KeyError) as exc:
                raise click.UsageError(str(exc))
            g = ExclusivityGraph(len(payload["vertices"]), payload["edges"])
            unmatched = [list(r.edge) for r in records
                         if not g.has_edge(r.edge[0], r.edge[1])]
            dupes = [list(k[1]) for k in duplicate_keys(records) if k[0] == "edge"]
            payload["edge_check"] = {
                "source": str(source),
                "records": len(records),
                "unmatched_directed_pairs": unmatched,
                "unmatched_count": len(unmatched),
                "duplicate_keys": dupes,
            }
    fmt = fmt or "json"
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "csv":
        lines = ["i,j"] + [f"{i},{j}" for i, j in payload["edges"]]
        _emit("\n".join(lines) + "\n", out)
    elif fmt == "text":
        lines = [
            f"vertices: {len(payload.get('vertices', [])) or payload.get('n', 0)}",
            f"edges: {len(payload['edges'])}",
        ]
        if "bases" in payload:
            lines.append(f"bases: {len(payload['bases'])}")
        if "edge_check" in payload:
            ec = payload["edge_check"]
            lines.append(f"edge records: {ec['records']}, unmatched: {ec['unmatched_count']}, "
                         f"duplicates: {len(ec['duplicate_keys'])}")
        _emit("\n".join(lines) + "\n", out)
    else:
        raise click.UsageError("graph supports json, csv, or text output")


@main.command("verify")
@_common_options
@click.option("--graph", "graph_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Verify an external graph JSON instead of the built-in set.")
@click.option("--drop-basis", type=int, default=None,
              help="Drop the k-th basis constraint (1-indexed) before solving.")
def cmd_verify(fmt, seed, tolerance, data, out, graph_path, drop_basis) -> None:
    """Run the uncolorability, completeness, parity, and correspondence checks."""
    certificates: list[dict] = []
    if graph_path is not None:
        g, bases = _load_graph_file(graph_path)
        result = ksets.verify_ks_uncolorability(g, bases)
        certificates.append({
            "name": "uncolorability",
            "passed": not result.satisfiable,
            "detail": ("UNSAT" if not result.satisfiable else "assignment found"),
            "nodes": result.nodes,
            "assignment": ({str(k): v for k, v in result.assignment.items()}
                           if result.assignment else None),
        })
    else:
        vectors = ksets.ks18_vectors()
        g = ksets.orthogonality_graph(vectors)
        bases = ksets.find_bases(g, vectors)
        if drop_basis is not None:
            if not 1 <= drop_basis <= len(bases):
                raise click.UsageError(
                    f"--drop-basis must lie in 1..{len(bases)}")
            kept = [b for i, b in enumerate(bases, start=1) if i != drop_basis]
            result = ksets.verify_ks_uncolorability(g, kept)
            certificates.append({
                "name": f"uncolorability(dropped basis {drop_basis})",
                "passed": not result.satisfiable,
                "detail": ("UNSAT" if not result.satisfiable else "assignment found"),
                "nodes": result.nodes,
                "assignment": ({str(k): v for k, v in result.assignment.items()}
                               if result.assignment else None),
            })
        else:
            result = ksets.verify_ks_uncolorability(g, bases)
            certificates.append({
                "name": "uncolorability",
                "passed": not result.satisfiable,
                "detail": ("UNSAT" if not result.satisfiable else "assignment found"),
                "nodes": result.nodes,
            })
            total = ksets.operator_completeness(vectors)
            from .exact import ExactMatrix

            ok = total.exact == ExactMatrix.identity(4, Fraction(9, 2))
            certificates.append({
                "name": "completeness-identity",
                "passed": ok,
                "detail": "sum of projectors equals 4.5 * identity exactly" if ok
                          else "completeness identity violated",
            })
            expected_signs = {ids: (-1 if ids == (2, 5, 8) else 1)
                              for ids in quantum.CANONICAL_CONTEXT_IDS}
            parities = {c.label: c.parity() for c in quantum.canonical_contexts()}
            parity_ok = all(parities["".join(map(str, ids))] == sign
                            for ids, sign in expected_signs.items())
            certificates.append({
                "name": "parity-identities",
                "passed": parity_ok,
                "detail": {label: p for label, p in sorted(parities.items())},
            })
            try:
                vmap = quantum.proposition_vertex_map()
                omap = quantum.omitted_vertex_map()
                corr_ok = len(vmap) == 18 and len(omap) == 6
                detail = {
                    "terms": {t.label: f"v{v}" for t, v in vmap.items()},
                    "omitted": {t.label: f"v{v}" for t, v in omap.items()},
                }
            except ValueError as exc:
                corr_ok = False
                detail = str(exc)
            certificates.append({
                "name": "proposition-correspondence",
                "passed": corr_ok,
                "detail": detail,
            })
    all_passed = all(c["passed"] for c in certificates)
    payload = {"certificates": certificates, "all_passed": all_passed}
    fmt = fmt or "text"
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "text":
        lines = []
        for c in certificates:
            status = "PASS" if c["passed"] else "FAIL"
            detail = c["detail"] if isinstance(c["detail"], str) else "checked"
            lines.append(f"{status} {c['name']}: {detail}")
        lines.append(f"all certificates passed: {all_passed}")
        _emit("\n".join(lines) + "\n", out)
    else:
        raise click.UsageError("verify supports json or text output")
    if not all_passed:
        sys.exit(1)


def _parse_budget(raw: str) -> float:
    text = raw.strip().lower()
    if text.endswith("s"):
        text = text[:-1]
    try:
        value = float(text)
    except ValueError:
        raise click.UsageError(f"bad budget: {raw!r}")
    if value < 0:
        raise click.UsageError("budget must be nonnegative")
    return value


@main.command("invariants")
@_common_options
@click.option("--graph", "graph_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Graph file (edge list or JSON) instead of the built-in set.")
@click.option("--budget", type=str, default="60",
              help="Time budget in seconds for the cover minimality proof.")
def cmd_invariants(fmt, seed, tolerance, data, out, graph_path, budget) -> None:
    """Report alpha, alpha*, theta, and a clique edge cover of the complement."""
    vectors = None
    if graph_path is not None:
        g, _ = _load_graph_file(graph_path)
    else:
        vecs = ksets.ks18_vectors()
        g = ksets.orthogonality_graph(vecs)
        vectors = vecs
    budget_s = _parse_budget(budget)
    tol = tolerance if tolerance is not None else invariants.TOL_SDP
    alpha = invariants.independence_number(g)
    packing = invariants.fractional_packing(g)
    theta = invariants.lovasz_theta(g, vectors=vectors, tol=tol)
    cover = invariants.clique_edge_cover_complement(g, budget_s=budget_s)
    payload = {
        "n": g.n,
        "alpha": alpha.alpha,
        "alpha_witness": list(alpha.witness),
        "alpha_star": packing.value_float,
        "alpha_star_mode": packing.mode,
        "theta": theta.value,
        "theta_method": theta.method,
        "cover_size": cover.size,
        "cover_minimal": cover.minimal,
        "cover": [list(c) for c in cover.cliques],
        "alpha_over_n": alpha.alpha / g.n,
        "theta_over_n": theta.value / g.n,
    }
    if packing.mode == "exact-rational":
        payload["alpha_star_exact"] = str(packing.value)
    fmt = fmt or "json"
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "text":
        lines = [
            f"n: {g.n}",
            f"alpha: {alpha.alpha} (witness {list(alpha.witness)})",
            f"alpha_star: {_fmt(packing.value_float)} ({packing.mode})",
            f"theta: {_fmt(theta.value)} ({theta.method})",
            f"cover: {cover.size} cliques ({cover.minimal})",
        ]
        _emit("\n".join(lines) + "\n", out)
    else:
        raise click.UsageError("invariants supports json or text output")


def _complex_from_json(x) -> complex:
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, float)):
        return complex(x)
    raise click.UsageError(f"bad complex entry: {x!r} (use a number or [re, im])")


def _parse_state(state: str) -> tuple[str, DensityMatrix]:
    try:
        return state, ksets.catalog_state(state)
    except KeyError:
        pass
    text = None
    path = Path(state)
    if state.lstrip().startswith(("{", "[")):
        text = state
    elif path.exists():
        text = path.read_text()
    if text is None:
        raise click.UsageError(f"unknown state: {state!r} (catalog code, JSON, or file)")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"bad state JSON: {exc}")
    if isinstance(payload, dict) and "matrix" in payload:
        rows = [[_complex_from_json(x) for x in row] for row in payload["matrix"]]
        arr = np.asarray(rows, dtype=complex)
        check = is_density_matrix(arr)
        if not check.ok:
            raise click.UsageError(f"not a density matrix: {', '.join(check.failures)}")
        return "custom", DensityMatrix(arr)
    amps = payload["amplitudes"] if isinstance(payload, dict) else payload
    vec = [_complex_from_json(x) for x in amps]
    try:
        return "custom", PureState.from_vector(vec).density()
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.command("simulate")
@_common_options
@click.option("--state", type=str, default=None,
              help="Catalog code (v1..v24, rho25..rho28), JSON, or a JSON file.")
@click.option("--quantity", type=click.Choice(["sigma", "xi", "both"]), default="both",
              show_default=True)
@click.option("--terms", "show_terms", is_flag=True, help="Include the 18 term probabilities.")
@click.option("--random", "n_random", type=int, default=None,
              help="Sweep this many seeded random pure states.")
@click.option("--random-mixed", "n_mixed", type=int, default=None,
              help="Also sweep this many seeded random mixed states.")
@click.option("--noise", type=float, default=None,
              help="Visibility V of the mixing channel applied to the state.")
def cmd_simulate(fmt, seed, tolerance, data, out, state, quantity, show_terms,
                 n_random, n_mixed, noise) -> None:
    """Evaluate sigma and xi for a state, or sweep random states."""
    tol = tolerance if tolerance is not None else 1e-12
    fmt = fmt or "text"
    if n_random is not None or n_mixed is not None:
        rng = np.random.default_rng(seed)
        max_dev_sigma = 0.0
        max_dev_xi = 0.0
        n_pure = n_random or 0
        n_mix = n_mixed or 0
        for _ in range(n_pure):
            rho = quantum.random_pure_state(rng).density()
            max_dev_sigma = max(max_dev_sigma, abs(quantum.sigma(rho) - 4.5))
            max_dev_xi = max(max_dev_xi, abs(quantum.xi(rho) - 4.5))
        for _ in range(n_mix):
            rho = quantum.random_density_matrix(rng)
            max_dev_sigma = max(max_dev_sigma, abs(quantum.sigma(rho) - 4.5))
            max_dev_xi = max(max_dev_xi, abs(quantum.xi(rho) - 4.5))
        payload = {
            "seed": seed,
            "n_pure": n_pure,
            "n_mixed": n_mix,
            "max_abs_dev_sigma": max_dev_sigma,
            "max_abs_dev_xi": max_dev_xi,
            "tolerance": tol,
            "within_tolerance": max(max_dev_sigma, max_dev_xi) <= tol,
        }
        if fmt == "json":
            _emit(render_json(payload) + "\n", out)
        elif fmt == "text":
            _emit(
                f"states: {n_pure} pure + {n_mix} mixed (seed {seed})\n"
                f"max |sigma - 4.5|: {_fmt(max_dev_sigma)}\n"
                f"max |xi - 4.5|: {_fmt(max_dev_xi)}\n"
                f"within tolerance {_fmt(tol)}: {payload['within_tolerance']}\n",
                out)
        else:
            raise click.UsageError("simulate supports json or text output")
        if not payload["within_tolerance"]:
            sys.exit(1)
        return
    if state is None:
        raise click.UsageError("provide --state or --random N")
    code, rho = _parse_state(state)
    if noise is not None:
        try:
            rho = quantum.apply_noise(rho, quantum.NoiseChannel(v=noise))
        except ValueError as exc:
            raise click.UsageError(str(exc))
    payload = {"state": code}
    if noise is not None:
        payload["noise_visibility"] = noise
    if quantity in ("sigma", "both"):
        payload["sigma"] = quantum.sigma(rho)
    if quantity in ("xi", "both"):
        payload["xi"] = quantum.xi(rho)
    if show_terms:
        payload["terms"] = quantum.ideal_probability_table(rho)
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "csv":
        if not show_terms:
            raise click.UsageError("csv output requires --terms")
        lines = ["term,value"]
        lines += [f"{k},{_fmt(v)}" for k, v in sorted(payload["terms"].items())]
        _emit("\n".join(lines) + "\n", out)
    elif fmt == "text":
        lines = [f"state: {code}"]
        if "sigma" in payload:
            lines.append(f"sigma: {_fmt(payload['sigma'])}")
        if "xi" in payload:
            lines.append(f"xi: {_fmt(payload['xi'])}")
        if show_terms:
            lines += [f"  {k} = {_fmt(v)}" for k, v in sorted(payload["terms"].items())]
        _emit("\n".join(lines) + "\n", out)
    else:
        raise click.UsageError("simulate supports json, csv, or text output")


@main.command("certify")
@_common_options
@click.option("--edges", "edges_source", type=str, default="edges", show_default=True,
              help="Edge-probability table for the epsilon estimate.")
@click.option("--epsilon", "epsilon_override", type=float, default=None,
              help="Use this epsilon instead of estimating it.")
@click.option("--quantity", type=click.Choice(["sigma", "xi"]), default="sigma",
              show_default=True, help="Quantity of the measurement table.")
@click.option("--recompute-xi", is_flag=True,
              help="Recompute xi totals from the per-term table.")
@click.option("--terms", "terms_source", type=str, default="terms", show_default=True)
@click.option("--xi", "xi_source", type=str, default="xi15", show_default=True)
@click.option("--strict", is_flag=True,
              help="Exit 1 unless every state shows the advantage and epsilon passes the gate.")
@click.option("--dedupe", type=click.Choice(["keep-all", "keep-first"]),
              default="keep-all", show_default=True,
              help="Duplicate-key handling for the loaded tables.")
def cmd_certify(fmt, seed, tolerance, data, out, edges_source, epsilon_override,
                quantity, recompute_xi, terms_source, xi_source, strict, dedupe) -> None:
    """Estimate epsilon, compare states against the corrected bound and band."""
    source = data or "sigma28"
    try:
        records = dedupe_records(load_table(source, quantity=quantity), dedupe)
        edge_records = dedupe_records(load_table(edges_source), dedupe)
    except (ValueError, OSError, KeyError) as exc:
        raise click.UsageError(str(exc))
    if epsilon_override is not None:
        try:
            params = NoiseParams(epsilon_override)
        except ValueError as exc:
            raise click.UsageError(str(exc))
    else:
        params = estimate_epsilon(edge_records)
    report = run_certify(records, params, edge_records=edge_records)
    payload = report.to_dict()
    payload["measurements_source"] = str(source)
    summary = summary_statistics(records)
    payload["summary"] = {
        "n": summary.n,
        "mean": summary.mean,
        "se_of_mean": summary.se_of_mean,
        "weighted_mean": summary.weighted_mean,
        "weighted_se": summary.weighted_se,
    }
    if recompute_xi:
        try:
            term_records = load_table(terms_source)
            xi_records = load_table(xi_source, quantity="xi")
            recomp = recompute_xi_from_terms(term_records, xi_records)
        except (ValueError, OSError, KeyError) as exc:
            raise click.UsageError(str(exc))
        payload["xi_recomputation"] = [
            {
                "state_code": r.state_code,
                "total": r.total,
                "quadrature_uncertainty": r.quadrature_uncertainty,
                "reference_value": r.reference_value,
                "reference_uncertainty": r.reference_uncertainty,
                "abs_diff": r.abs_diff,
                "tolerance": r.tolerance,
                "matches": r.matches,
            }
            for r in recomp
        ]
        payload["xi_recomputation_all_match"] = all(r.matches for r in recomp
                                                    if r.matches is not None)
    fmt = fmt or "json"
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "csv":
        lines = ["state_code,value,uncertainty,advantage,in_band"]
        for v in report.verdicts:
            unc = "" if v.uncertainty is None else _fmt(v.uncertainty)
            lines.append(f"{v.state_code},{_fmt(v.value)},{unc},"
                         f"{str(v.advantage).lower()},{str(v.in_band).lower()}")
        _emit("\n".join(lines) + "\n", out)
    elif fmt == "svg":
        _emit(band_chart_svg(report), out)
    else:
        lines = [
            f"epsilon: {_fmt(report.epsilon)} +- {_fmt(report.epsilon_uncertainty)}",
            f"corrected classical bound: {_fmt(report.corrected_bound)}",
            f"band: [{_fmt(report.band[0])}, {_fmt(report.band[1])}]",
            f"epsilon below threshold {report.threshold_exact} "
            f"(= {_fmt(report.threshold_value)}): {report.epsilon_below_threshold}",
            f"advantage: {report.n_advantage}/{report.n_states}",
            f"in band: {report.n_in_band}/{report.n_states}",
        ]
        if "global" in report.flags:
            lines.append(f"flag: {report.flags['global']}")
        if recompute_xi:
            lines.append(f"xi recomputation matches: "
                         f"{payload['xi_recomputation_all_match']}")
        _emit("\n".join(lines) + "\n", out)
    if strict:
        failed = (not report.all_advantage or not report.epsilon_below_threshold
                  or (recompute_xi and not payload["xi_recomputation_all_match"]))
        if failed:
            sys.exit(1)


@main.command("strategy")
@_common_options
@click.option("--validate", "validate_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Validate a strategy JSON file instead of constructing one.")
def cmd_strategy(fmt, seed, tolerance, data, out, validate_path) -> None:
    """Emit (or validate) the ball-in-box classical strategy."""
    vectors = ksets.ks18_vectors()
    g = ksets.orthogonality_graph(vectors)
    if validate_path is not None:
        try:
            payload_in = json.loads(Path(validate_path).read_text())
            if "strategy" in payload_in:
                payload_in = payload_in["strategy"]
            strategy = classical.BoxStrategy.from_dict(payload_in)
        except (ValueError, KeyError, TypeError) as exc:
            raise click.UsageError(f"bad strategy file: {exc}")
    else:
        strategy = classical.construct_box_strategy(g)
    report = classical.validate_box_strategy(g, strategy)
    payload = {
        "strategy": strategy.to_dict(),
        "validation": {
            "ok": report.ok,
            "failures": list(report.failures),
            "balanced": report.balanced,
            "tests_per_vertex": {str(v): c for v, c in report.tests_per_vertex},
            "box_true_counts": {str(b): c for b, c in report.box_true_counts},
            "sigma_min": report.sigma_min,
            "sigma_max": report.sigma_max,
            "sigma_avg": report.sigma_avg,
            "complement_edges_covered": report.complement_edges_covered,
            "complement_edge_total": report.complement_edge_total,
        },
    }
    fmt = fmt or "json"
    if fmt == "json":
        _emit(render_json(payload) + "\n", out)
    elif fmt == "text":
        lines = [
            f"boxes: {len(strategy.boxes)}",
            f"valid: {report.ok}",
            f"balanced: {report.balanced}",
            f"sigma per placement: min {report.sigma_min}, max {report.sigma_max}",
            f"complement edges covered: {report.complement_edges_covered}"
            f"/{report.complement_edge_total}",
        ]
        lines += [f"FAIL {msg}" for msg in report.failures]
        if not report.balanced:
            lines.append("FAIL balance violated: test or box counts are not uniform")
        _emit("\n".join(lines) + "\n", out)
    else:
        raise click.UsageError("strategy supports json or text output")
    if not report.ok or not report.balanced:
        sys.exit(1)


if __name__ == "__main__":
    main()
