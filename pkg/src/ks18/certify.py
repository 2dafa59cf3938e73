"""Noise-corrected certification of the quantum advantage from table data.

The mean leakage probability epsilon lifts the classical bound from 4 to
4 + 14*epsilon and widens the expected quantum value into the band
[4.5*(1-epsilon), 4.5*(1-epsilon) + 18*epsilon].  Certification compares
measured state totals against both, recomputes the xi totals from the
per-term tables, and renders a band chart as deterministic SVG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .datasets import MeasurementRecord, duplicate_keys
from .graphs import ExclusivityGraph
from .ksets import ks18_vectors, orthogonality_graph

EXACT_ADVANTAGE_THRESHOLD = Fraction(1, 28)
REPORTED_ADVANTAGE_THRESHOLD = 0.035
QUANTUM_VALUE = 4.5


@dataclass(frozen=True)
class NoiseParams:
    """Mean leakage probability with its standard error."""

    epsilon: float
    epsilon_uncertainty: float = 0.0
    mismatched_pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not 0.0 <= self.epsilon < 1.0:
            raise ValueError("epsilon must lie in [0, 1)")


def estimate_epsilon(records: Sequence[MeasurementRecord],
                     graph: ExclusivityGraph | None = None) -> NoiseParams:
    """Unweighted mean of edge probabilities with standard error of the mean.

    Pairs that are not edges of the reference graph are flagged in the
    result, not rejected.
    """
    values = [r.value for r in records if r.quantity == "edge-probability"]
    if len(values) != len(records):
        bad = next(r for r in records if r.quantity != "edge-probability")
        raise ValueError(f"expected edge probabilities, got {bad.quantity}")
    if not values:
        raise ValueError("no edge records to average")
    if graph is None:
        graph = orthogonality_graph(ks18_vectors())
    mismatched = tuple(
        r.edge for r in records if not graph.has_edge(r.edge[0], r.edge[1])
    )
    mean = sum(values) / len(values)
    if len(values) > 1:
        var = sum((v - mean) ** 2 for v in values) / (len(values) - 1)
        se = math.sqrt(var / len(values))
    else:
        se = 0.0
    return NoiseParams(mean, se, mismatched)


def _epsilon_of(p: "NoiseParams | float") -> float:
    eps = p.epsilon if isinstance(p, NoiseParams) else float(p)
    if not 0.0 <= eps < 1.0:
        raise ValueError("epsilon must lie in [0, 1)")
    return eps


def corrected_classical_bound(p: "NoiseParams | float") -> float:
    """Classical ceiling once each no-test may leak with probability epsilon."""
    eps = _epsilon_of(p)
    return 4.0 + 14.0 * eps


def expected_band(p: "NoiseParams | float") -> tuple[float, float]:
    """Range of state totals compatible with leakage epsilon."""
    eps = _epsilon_of(p)
    low = QUANTUM_VALUE * (1.0 - eps)
    return (low, low + 18.0 * eps)


def advantage_threshold() -> Fraction:
    """Exact epsilon at which the corrected bound meets the quantum value."""
    return EXACT_ADVANTAGE_THRESHOLD


@dataclass(frozen=True)
class StateVerdict:
    state_code: str
    value: float
    uncertainty: float | None
    advantage: bool
    in_band: bool


@dataclass(frozen=True)
class CertificationReport:
    epsilon: float
    epsilon_uncertainty: float
    corrected_bound: float
    band: tuple[float, float]
    threshold_exact: str
    threshold_value: float
    threshold_reported: float
    epsilon_below_threshold: bool
    verdicts: tuple[StateVerdict, ...]
    flags: dict = field(default_factory=dict)

    @property
    def n_states(self) -> int:
        return len(self.verdicts)

    @property
    def n_advantage(self) -> int:
        return sum(1 for v in self.verdicts if v.advantage)

    @property
    def n_in_band(self) -> int:
        return sum(1 for v in self.verdicts if v.in_band)

    @property
    def all_advantage(self) -> bool:
        return self.n_advantage == self.n_states

    @property
    def all_in_band(self) -> bool:
        return self.n_in_band == self.n_states

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "epsilon_uncertainty": self.epsilon_uncertainty,
            "corrected_bound": self.corrected_bound,
            "band": list(self.band),
            "threshold_exact": self.threshold_exact,
            "threshold_value": self.threshold_value,
            "threshold_reported": self.threshold_reported,
            "epsilon_below_threshold": self.epsilon_below_threshold,
            "n_states": self.n_states,
            "n_advantage": self.n_advantage,
            "n_in_band": self.n_in_band,
            "all_advantage": self.all_advantage,
            "all_in_band": self.all_in_band,
            "flags": dict(self.flags),
            "verdicts": [
                {
                    "state_code": v.state_code,
                    "value": v.value,
                    "uncertainty": v.uncertainty,
                    "advantage": v.advantage,
                    "in_band": v.in_band,
                }
                for v in self.verdicts
            ],
        }


def certify(records: Sequence[MeasurementRecord], p: NoiseParams,
            edge_records: Sequence[MeasurementRecord] | None = None) -> CertificationReport:
    """Per-state advantage and band verdicts, plus the global epsilon gate.

    A state shows the advantage when its measured value minus its stated
    uncertainty still exceeds the corrected classical bound.
    """
    bound = corrected_classical_bound(p)
    band = expected_band(p)
    verdicts = []
    for r in records:
        if r.quantity not in ("sigma", "xi"):
            raise ValueError(f"expected sigma or xi records, got {r.quantity}")
        unc = r.uncertainty if r.uncertainty is not None else 0.0
        verdicts.append(StateVerdict(
            state_code=r.state_code,
            value=r.value,
            uncertainty=r.uncertainty,
            advantage=(r.value - unc) > bound,
            in_band=band[0] <= r.value <= band[1],
        ))
    flags: dict = {"mismatched_pairs": [list(e) for e in p.mismatched_pairs]}
    if edge_records is not None:
        flags["duplicate_edge_keys"] = [
            list(key[1]) for key in duplicate_keys(edge_records) if key[0] == "edge"
        ]
    below = p.epsilon < float(EXACT_ADVANTAGE_THRESHOLD)
    if not below:
        flags["global"] = "classical bound exceeds quantum value"
    return CertificationReport(
        epsilon=p.epsilon,
        epsilon_uncertainty=p.epsilon_uncertainty,
        corrected_bound=bound,
        band=band,
        threshold_exact="1/28",
        threshold_value=float(EXACT_ADVANTAGE_THRESHOLD),
        threshold_reported=REPORTED_ADVANTAGE_THRESHOLD,
        epsilon_below_threshold=below,
        verdicts=tuple(verdicts),
        flags=flags,
    )


@dataclass(frozen=True)
class XiRecomputation:
    state_code: str
    total: float
    quadrature_uncertainty: float
    reference_value: float | None
    reference_uncertainty: float | None
    abs_diff: float | None
    tolerance: float | None
    matches: bool | None


def recompute_xi_from_terms(term_records: Sequence[MeasurementRecord],
                            references: Sequence[MeasurementRecord] | None = None,
                            ) -> list[XiRecomputation]:
    """Per-state sums of the 18 term probabilities, checked against references.

    Each state must contribute exactly the 18 expected term keys; the
    comparison tolerance is max(1e-3, combined quadrature uncertainty).
    """
    from .quantum import xi_terms

    expected = [t.label for t in xi_terms()]
    expected_set = set(expected)
    by_state: dict[str, dict[str, MeasurementRecord]] = {}
    order: list[str] = []
    for r in term_records:
        if r.quantity != "term-probability":
            raise ValueError(f"expected term probabilities, got {r.quantity}")
        if r.state_code not in by_state:
            by_state[r.state_code] = {}
            order.append(r.state_code)
        by_state[r.state_code][r.term] = r
    ref_map = {}
    if references is not None:
        ref_map = {r.state_code: r for r in references}
    out = []
    for code in order:
        terms = by_state[code]
        missing = sorted(expected_set - set(terms))
        extra = sorted(set(terms) - expected_set)
        if missing:
            raise ValueError(f"state {code}: missing terms {missing}")
        if extra:
            raise ValueError(f"state {code}: unexpected terms {extra}")
        total = sum(terms[k].value for k in expected)
        quad = math.sqrt(sum(
            (terms[k].uncertainty or 0.0) ** 2 for k in expected
        ))
        ref = ref_map.get(code)
        if ref is None:
            out.append(XiRecomputation(code, total, quad, None, None, None, None, None))
            continue
        combined = math.sqrt(quad ** 2 + (ref.uncertainty or 0.0) ** 2)
        tol = max(1e-3, combined)
        diff = abs(total - ref.value)
        out.append(XiRecomputation(code, total, quad, ref.value, ref.uncertainty,
                                   diff, tol, diff <= tol))
    return out


@dataclass(frozen=True)
class TableSummary:
    n: int
    mean: float
    se_of_mean: float
    weighted_mean: float | None
    weighted_se: float | None


def summary_statistics(records: Sequence[MeasurementRecord]) -> TableSummary:
    """Plain and inverse-variance weighted aggregates of a value table.

    The weighted aggregate uses the stated uncertainties and is omitted
    when any are missing or zero.
    """
    values = [r.value for r in records]
    if not values:
        raise ValueError("no records to summarize")
    n = len(values)
    mean = sum(values) / n
    if n > 1:
        var = sum((v - mean) ** 2 for v in values) / (n - 1)
        se = math.sqrt(var / n)
    else:
        se = 0.0
    uncs = [r.uncertainty for r in records]
    if all(u is not None and u > 0 for u in uncs):
        weights = [1.0 / (u * u) for u in uncs]
        wsum = sum(weights)
        wmean = sum(w * v for w, v in zip(weights, values)) / wsum
        wse = math.sqrt(1.0 / wsum)
    else:
        wmean = None
        wse = None
    return TableSummary(n, mean, se, wmean, wse)


def band_chart_svg(report: CertificationReport, width: int = 900,
                   height: int = 480) -> str:
    """Deterministic SVG: states on x, values on y, bounds and band overlaid."""
    verdicts = report.verdicts
    if not verdicts:
        raise ValueError("nothing to chart")
    ml, mr, mt, mb = 64.0, 16.0, 18.0, 64.0
    plot_w = width - ml - mr
    plot_h = height - mt - mb
    values = [v.value for v in verdicts]
    lows = [v.value - (v.uncertainty or 0.0) for v in verdicts]
    highs = [v.value + (v.uncertainty or 0.0) for v in verdicts]
    y_lo = min(min(lows), report.corrected_bound, report.band[0], 4.0) - 0.1
    y_hi = max(max(highs), report.band[1], QUANTUM_VALUE) + 0.1

    def fx(i: int) -> float:
        return ml + (i + 0.5) * plot_w / len(verdicts)

    def fy(v: float) -> float:
        return mt + (y_hi - v) * plot_h / (y_hi - y_lo)

    def f(x: float) -> str:
        return format(x, ".2f")

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{f(ml)}" y="{f(fy(report.band[1]))}" width="{f(plot_w)}" '
        f'height="{f(fy(report.band[0]) - fy(report.band[1]))}" fill="#f7c8c4"/>',
    ]
    tick = math.ceil(y_lo * 10) / 10
    while tick <= y_hi + 1e-9:
        parts.append(
            f'<line x1="{f(ml)}" y1="{f(fy(tick))}" x2="{f(ml + plot_w)}" '
            f'y2="{f(fy(tick))}" stroke="#eeeeee" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{f(ml - 8)}" y="{f(fy(tick) + 4)}" font-size="11" '
            f'text-anchor="end" font-family="sans-serif">{format(tick, ".1f")}</text>'
        )
        tick = round(tick + 0.1, 10)
    parts.append(
        f'<line x1="{f(ml)}" y1="{f(fy(4.0))}" x2="{f(ml + plot_w)}" y2="{f(fy(4.0))}" '
        f'stroke="#222222" stroke-width="1.5"/>'
    )
    parts.append(
        f'<line x1="{f(ml)}" y1="{f(fy(report.corrected_bound))}" x2="{f(ml + plot_w)}" '
        f'y2="{f(fy(report.corrected_bound))}" stroke="#b22222" stroke-width="1.5" '
        f'stroke-dasharray="6,4"/>'
    )
    for i, v in enumerate(verdicts):
        x = fx(i)
        if v.uncertainty:
            parts.append(
                f'<line x1="{f(x)}" y1="{f(fy(v.value - v.uncertainty))}" '
                f'x2="{f(x)}" y2="{f(fy(v.value + v.uncertainty))}" '
                f'stroke="#1f4e9c" stroke-width="1"/>'
            )
        parts.append(
            f'<circle cx="{f(x)}" cy="{f(fy(v.value))}" r="3" fill="#1f4e9c"/>'
        )
        parts.append(
            f'<text x="{f(x)}" y="{f(mt + plot_h + 12)}" font-size="10" '
            f'font-family="sans-serif" text-anchor="end" '
            f'transform="rotate(-60 {f(x)} {f(mt + plot_h + 12)})">{v.state_code}</text>'
        )
    parts.append(
        f'<rect x="{f(ml)}" y="{f(mt)}" width="{f(plot_w)}" height="{f(plot_h)}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>'
    )
    legend_y = mt + 14
    parts.append(
        f'<text x="{f(ml + 8)}" y="{f(legend_y)}" font-size="11" '
        f'font-family="sans-serif">classical bound 4, corrected bound '
        f'{format(report.corrected_bound, ".12g")} (dashed), band '
        f'[{format(report.band[0], ".12g")}, {format(report.band[1], ".12g")}] (shaded)</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
