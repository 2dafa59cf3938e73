"""Graph invariants bounding classical, quantum, and postquantum models.

Independence number (classical bound), fractional packing number
(postquantum ceiling, exact rational LP), Lovasz number (quantum ceiling,
certificate pinching or SDP), and clique edge covers of the complement
(smallest classical memory).  All solvers are deterministic.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .algebra import PureState
from .exact import ComplexFraction, ExactMatrix, inner, outer
from .graphs import ExclusivityGraph

TOL_LP = 1e-9
TOL_SDP = 1e-6
INDEPENDENCE_LIMIT = 40
EXACT_LP_LIMIT = 24
SDP_LIMIT = 32
COVER_BUDGET_S = 60.0


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class FractionalPackingResult:
    value: Fraction | float
    weights: tuple
    mode: str  # "exact-rational" or "float"

    @property
    def value_float(self) -> float:
        return float(self.value)


@dataclass(frozen=True, eq=False)
class ThetaCertificate:
    """Orthonormal-representation lower bound: handle, vectors, value."""

    handle: PureState
    vectors: tuple[PureState, ...]
    value: float


@dataclass(frozen=True, eq=False)
class ThetaResult:
    value: float
    method: str  # "certificate" or "sdp"
    lower: float | None = None
    upper: float | None = None
    certificate: ThetaCertificate | None = None
    solver: str | None = None


@dataclass(frozen=True)
class CoverResult:
    cliques: tuple[tuple[int, ...], ...]
    minimal: str  # "proven" or "upper-bound-only"
    nodes: int
    elapsed_s: float

    @property
    def size(self) -> int:
        return len(self.cliques)


def maximal_cliques(g: ExclusivityGraph) -> list[tuple[int, ...]]:
    """All maximal cliques via pivoting enumeration, sorted by size then lex."""
    out: list[tuple[int, ...]] = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(g.neighbors(u) & p))
        for v in sorted(p - g.neighbors(pivot)):
            expand(r | {v}, p & g.neighbors(v), x & g.neighbors(v))
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return sorted(out, key=lambda c: (len(c), c))


def independence_number(g: ExclusivityGraph, limit: int = INDEPENDENCE_LIMIT) -> IndependenceResult:
    """Exact maximum independent set by branch and bound.

    Branching includes vertices in increasing id order, include before
    exclude, so the first optimum found (and returned) is the
    lexicographically smallest maximum independent set.
    """
    if g.n > limit:
        raise ValueError("instance too large for exact mode")
    best: list[int] = []

    def clique_cover_bound(cands: list[int]) -> int:
        remaining = list(cands)
        count = 0
        while remaining:
            seed = remaining.pop(0)
            clique = [seed]
            keep = []
            for u in remaining:
                if all(g.has_edge(u, w) for w in clique):
                    clique.append(u)
                else:
                    keep.append(u)
            remaining = keep
            count += 1
        return count

    def dfs(current: list[int], cands: list[int]) -> None:
        nonlocal best
        if not cands:
            if len(current) > len(best):
                best = list(current)
            return
        if len(current) + clique_cover_bound(cands) <= len(best):
            return
        v = cands[0]
        rest = cands[1:]
        dfs(current + [v], [u for u in rest if not g.has_edge(u, v)])
        dfs(current, rest)

    dfs([], list(g.vertices))
    return IndependenceResult(len(best), tuple(best))


def _exact_simplex(a: list[list[Fraction]], b: list[Fraction],
                   c: list[Fraction]) -> tuple[Fraction, list[Fraction]]:
    """Maximize c.x subject to a@x <= b, x >= 0, over exact rationals.

    Dense tableau simplex with Bland's rule; requires b >= 0 so the slack
    basis is feasible.
    """
    m, n = len(a), len(c)
    rows = [list(a[i]) + [Fraction(int(k == i)) for k in range(m)] + [b[i]]
            for i in range(m)]
    obj = list(c) + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        best_ratio = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[pivot_row])):
                    best_ratio = ratio
                    pivot_row = i
        if pivot_row is None:
            raise ArithmeticError("LP is unbounded")
        pe = rows[pivot_row][enter]
        rows[pivot_row] = [x / pe for x in rows[pivot_row]]
        for i in range(m):
            if i != pivot_row and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * p for x, p in zip(rows[i], rows[pivot_row])]
        f = obj[enter]
        obj = [x - f * p for x, p in zip(obj, rows[pivot_row])]
        basis[pivot_row] = enter
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return value, x


def fractional_packing(g: ExclusivityGraph, tol: float = TOL_LP) -> FractionalPackingResult:
    """LP maximum of sum(w) over w in [0,1]^n with sum(w) <= 1 per maximal clique.

    Exact rational simplex for n <= 24, floating-point LP otherwise.
    """
    cliques = maximal_cliques(g)
    if g.n <= EXACT_LP_LIMIT:
        a = [[Fraction(int(v in c)) for v in g.vertices] for c in cliques]
        a.extend([Fraction(int(v == u)) for v in g.vertices] for u in g.vertices)
        b = [Fraction(1)] * len(a)
        c = [Fraction(1)] * g.n
        value, weights = _exact_simplex(a, b, c)
        return FractionalPackingResult(value, tuple(weights), "exact-rational")
    from scipy.optimize import linprog

    a_ub = np.zeros((len(cliques), g.n))
    for r, cl in enumerate(cliques):
        for v in cl:
            a_ub[r, v - 1] = 1.0
    res = linprog(c=-np.ones(g.n), A_ub=a_ub, b_ub=np.ones(len(cliques)),
                  bounds=[(0.0, 1.0)] * g.n, method="highs")
    if not res.success:
        raise ArithmeticError(f"LP solver failed: {res.message}")
    return FractionalPackingResult(-float(res.fun), tuple(float(w) for w in res.x), "float")


def _normalize_components(components: Sequence) -> PureState:
    arr = np.asarray([complex(x) for x in components], dtype=complex)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("degenerate vector")
    return PureState(arr / norm)


def _certificate_lower_bound(g: ExclusivityGraph, component_rows: list) -> ThetaCertificate:
    """Best lower bound from an orthonormal representation.

    The representation value max over handles of sum |<psi|v_i>|^2 is the
    top eigenvalue of the projector sum; the handle is its eigenvector.
    """
    if len(component_rows) != g.n:
        raise ValueError("vector count does not match graph size")
    exact_mode = all(
        isinstance(x, (int, Fraction, ComplexFraction)) and not isinstance(x, bool)
        for row in component_rows for x in row
    )
    for i, j in g.edges:
        if exact_mode:
            if not inner(component_rows[i - 1], component_rows[j - 1]).is_zero:
                raise ValueError(f"representation vectors for edge ({i},{j}) are not orthogonal")
        else:
            a = np.asarray([complex(x) for x in component_rows[i - 1]])
            b = np.asarray([complex(x) for x in component_rows[j - 1]])
            if abs(np.vdot(a, b)) > 1e-9 * np.linalg.norm(a) * np.linalg.norm(b):
                raise ValueError(f"representation vectors for edge ({i},{j}) are not orthogonal")
    states = tuple(_normalize_components(row) for row in component_rows)
    if exact_mode:
        dim = len(component_rows[0])
        total = ExactMatrix.zeros(dim)
        for row in component_rows:
            norm2 = inner(row, row).re
            total = total + outer(row, row) * (Fraction(1) / norm2)
        scaled = ExactMatrix.identity(dim, total.rows[0][0].re)
        if total == scaled:
            # Projector sum is a scaled identity: top eigenvalue is exact.
            value = float(total.rows[0][0].re)
            handle = PureState(np.eye(dim, dtype=complex)[0])
            return ThetaCertificate(handle, states, value)
        m = total.to_numpy()
    else:
        dim = states[0].dim
        m = np.zeros((dim, dim), dtype=complex)
        for s in states:
            m += np.outer(s.amplitudes, s.amplitudes.conj())
    eigvals, eigvecs = np.linalg.eigh(m)
    value = float(eigvals[-1])
    handle = PureState(eigvecs[:, -1])
    return ThetaCertificate(handle, states, value)


def _theta_sdp(g: ExclusivityGraph, tol: float) -> ThetaResult:
    if g.n > SDP_LIMIT:
        raise ValueError("instance too large for sdp mode")
    import cvxpy as cp

    x = cp.Variable((g.n, g.n), symmetric=True)
    constraints = [x >> 0, cp.trace(x) == 1]
    constraints += [x[i - 1, j - 1] == 0 for i, j in g.edges]
    problem = cp.Problem(cp.Maximize(cp.sum(x)), constraints)
    errors = []
    for solver in ("CLARABEL", "CVXOPT", "SCS"):
        try:
            problem.solve(solver=solver)
        except Exception as exc:  # solver unavailable or failed; try the next
            errors.append(f"{solver}: {exc}")
            continue
        if problem.status in ("optimal", "optimal_inaccurate"):
            return ThetaResult(float(problem.value), "sdp", solver=solver)
        errors.append(f"{solver}: status {problem.status}")
    raise ArithmeticError("SDP solvers failed: " + "; ".join(errors))


def lovasz_theta(g: ExclusivityGraph, vectors: Sequence | None = None,
                 method: str = "auto", tol: float = TOL_SDP) -> ThetaResult:
    """Lovasz number by certificate pinching or the standard SDP.

    Certificate mode needs per-vertex representation vectors whose
    adjacent pairs are orthogonal; its lower bound is pinched against the
    fractional packing upper bound.  ``vectors`` entries may be objects
    with a ``components`` attribute or plain component sequences.
    """
    if method not in ("auto", "certificate", "sdp"):
        raise ValueError(f"unknown method: {method}")
    if vectors is not None and method in ("auto", "certificate"):
        rows = [list(getattr(v, "components", v)) for v in vectors]
        cert = _certificate_lower_bound(g, rows)
        upper = fractional_packing(g).value_float
        if abs(upper - cert.value) <= tol:
            return ThetaResult(cert.value, "certificate", lower=cert.value,
                               upper=upper, certificate=cert)
        if method == "certificate":
            raise ValueError("theta undetermined")
        result = _theta_sdp(g, tol)
        return ThetaResult(result.value, "sdp", lower=cert.value, upper=upper,
                           certificate=cert, solver=result.solver)
    if method == "certificate":
        raise ValueError("theta undetermined")
    return _theta_sdp(g, tol)


def validate_clique_cover(g: ExclusivityGraph, cliques: Sequence[Sequence[int]]) -> list[str]:
    """Failure messages for a claimed clique edge cover of the complement."""
    failures = []
    comp = g.complement()
    for c in cliques:
        if not comp.is_clique(c):
            failures.append(f"set {tuple(sorted(c))} is not a clique of the complement")
    covered = set()
    for c in cliques:
        covered.update((min(a, b), max(a, b)) for a, b in combinations(sorted(c), 2))
    missing = [e for e in comp.edges if e not in covered]
    if missing:
        failures.append(f"{len(missing)} complement edges uncovered, first {missing[0]}")
    return failures


def clique_edge_cover_complement(g: ExclusivityGraph,
                                 budget_s: float = COVER_BUDGET_S) -> CoverResult:
    """Cover all complement edges with as few complement cliques as possible.

    Greedy set cover gives the starting upper bound; branch and bound then
    repeatedly searches one size below the incumbent, so every success
    shrinks the cover and one exhausted level proves minimality.  On
    budget exhaustion the best cover found is returned with
    ``minimal="upper-bound-only"``.
    """
    comp = g.complement()
    comp_edges = list(comp.edges)
    if not comp_edges:
        return CoverResult((), "proven", 0, 0.0)
    candidates = [c for c in maximal_cliques(comp) if len(c) >= 2]
    edge_sets = [frozenset((min(a, b), max(a, b)) for a, b in combinations(c, 2))
                 for c in candidates]
    all_edges = frozenset(comp_edges)
    by_edge: dict[tuple[int, int], list[int]] = {e: [] for e in all_edges}
    for idx, es in enumerate(edge_sets):
        for e in es:
            by_edge[e].append(idx)

    greedy: list[int] = []
    uncovered = set(all_edges)
    while uncovered:
        idx = max(range(len(candidates)),
                  key=lambda k: (len(edge_sets[k] & uncovered), candidates[k]))
        if not edge_sets[idx] & uncovered:
            raise ArithmeticError("complement edge not coverable")  # unreachable: every edge is a 2-clique
        greedy.append(idx)
        uncovered -= edge_sets[idx]

    max_cap = max(len(es) for es in edge_sets)
    lower = math.ceil(len(all_edges) / max_cap)
    start = time.perf_counter()
    deadline = start + max(budget_s, 0.0)
    nodes = 0

    class _Timeout(Exception):
        pass

    def exists_cover(k: int) -> list[int] | None:
        chosen: list[int] = []

        def dfs(uncov: frozenset) -> list[int] | None:
            nonlocal nodes
            nodes += 1
            if nodes % 256 == 0 and time.perf_counter() > deadline:
                raise _Timeout
            if not uncov:
                return list(chosen)
            if len(chosen) + math.ceil(len(uncov) / max_cap) > k:
                return None
            target = min(uncov, key=lambda e: (len(by_edge[e]), e))
            opts = sorted(by_edge[target],
                          key=lambda idx: (-len(edge_sets[idx] & uncov), candidates[idx]))
            for idx in opts:
                chosen.append(idx)
                found = dfs(uncov - edge_sets[idx])
                chosen.pop()
                if found is not None:
                    return found
            return None

        return dfs(all_edges)

    best = list(greedy)
    try:
        while len(best) > lower:
            found = exists_cover(len(best) - 1)
            if found is None:
                break
            best = found
        minimal = "proven"
    except _Timeout:
        minimal = "upper-bound-only"
    elapsed = time.perf_counter() - start
    cliques = tuple(sorted(candidates[i] for i in best))
    failures = validate_clique_cover(g, cliques)
    if failures:
        raise ArithmeticError("invalid cover produced: " + "; ".join(failures))
    return CoverResult(cliques, minimal, nodes, elapsed)


def classical_quantum_gap(g: ExclusivityGraph, vectors: Sequence | None = None) -> dict:
    """Bundle alpha, alpha*, theta, and the per-test probabilities."""
    alpha = independence_number(g)
    alpha_star = fractional_packing(g)
    theta = lovasz_theta(g, vectors=vectors)
    return {
        "n": g.n,
        "alpha": alpha.alpha,
        "alpha_star": alpha_star.value_float,
        "theta": theta.value,
        "alpha_over_n": alpha.alpha / g.n,
        "theta_over_n": theta.value / g.n,
    }
