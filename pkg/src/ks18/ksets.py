"""The 18-test set: vectors, graph, bases, uncolorability, state catalog.

The eighteen integer 4-vectors below are pairwise orthogonal exactly when
their plain integer dot product vanishes; that relation defines the
exclusivity graph.  Six further vectors complete the four-outcome
contexts, and four mixed states extend the catalog to 28 entries.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import DensityMatrix, HermitianOperator, Projector, convex_mix, projector_from_vector
from .exact import ExactMatrix, inner
from .graphs import ExclusivityGraph

KS18_COMPONENTS: dict[int, tuple[int, int, int, int]] = {
    1: (1, 0, 0, 0),
    2: (0, 1, 0, 0),
    3: (0, 0, 1, 1),
    4: (0, 0, 1, -1),
    5: (1, -1, 0, 0),
    6: (1, 1, -1, -1),
    7: (1, 1, 1, 1),
    8: (1, -1, 1, -1),
    9: (1, 0, -1, 0),
    10: (0, 1, 0, -1),
    11: (1, 0, 1, 0),
    12: (1, 1, -1, 1),
    13: (-1, 1, 1, 1),
    14: (1, 1, 1, -1),
    15: (1, 0, 0, 1),
    16: (0, 1, -1, 0),
    17: (0, 1, 1, 0),
    18: (0, 0, 0, 1),
}

OMITTED_COMPONENTS: dict[int, tuple[int, int, int, int]] = {
    19: (0, 0, 1, 0),
    20: (1, 1, 0, 0),
    21: (0, 1, 0, 1),
    22: (1, -1, -1, 1),
    23: (1, -1, 1, 1),
    24: (1, 0, 0, -1),
}

MIXTURE_BASIS_COMPONENTS: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, 1, -1, 0),
    (0, 1, 1, 0),
)

MIXTURE_WEIGHTS: dict[str, tuple[Fraction, ...]] = {
    "rho25": (Fraction(13, 16), Fraction(1, 16), Fraction(1, 16), Fraction(1, 16)),
    "rho26": (Fraction(5, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 8)),
    "rho27": (Fraction(7, 16), Fraction(3, 16), Fraction(3, 16), Fraction(3, 16)),
    "rho28": (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)),
}

QUOTED_PAIR_COUNT = 42


@dataclass(frozen=True)
class KsVector:
    """Integer 4-vector with its catalog id."""

    id: int
    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if all(c == 0 for c in comps):
            raise ValueError("degenerate vector")

    @property
    def label(self) -> str:
        return f"v{self.id}"

    def projector(self) -> Projector:
        return projector_from_vector(self.components)


@dataclass(frozen=True)
class Basis:
    """Four pairwise orthogonal vertices whose projectors sum to the identity."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(int(m) for m in self.members)))


@dataclass(frozen=True)
class KsCatalogEntry:
    """State catalog row: code, density matrix, free-text description."""

    code: str
    state: DensityMatrix
    description: str


@dataclass(frozen=True)
class ColoringSearchResult:
    """Outcome of the exhaustive 0/1 assignment search."""

    satisfiable: bool
    assignment: dict[int, int] | None
    nodes: int
    elapsed_s: float


def ks18_vectors() -> list[KsVector]:
    """The eighteen integer vectors, in id order."""
    return [KsVector(i, KS18_COMPONENTS[i]) for i in sorted(KS18_COMPONENTS)]


def omitted_vectors() -> list[KsVector]:
    """The six directions completing each context to four outcomes (ids 19-24)."""
    return [KsVector(i, OMITTED_COMPONENTS[i]) for i in sorted(OMITTED_COMPONENTS)]


def orthogonality_graph(vectors: Sequence[KsVector]) -> ExclusivityGraph:
    """Graph with an edge wherever two vectors have exact zero dot product.

    Vertex k of the result corresponds to ``vectors[k-1]``; for the
    standard eighteen-vector input, vertex ids coincide with vector ids.
    """
    n = len(vectors)
    dims = {len(v.components) for v in vectors}
    if len(dims) != 1:
        raise ValueError("vectors must share one dimension")
    edges = []
    for a, b in combinations(range(n), 2):
        if inner(vectors[a].components, vectors[b].components).is_zero:
            edges.append((a + 1, b + 1))
    labels = [v.label for v in vectors]
    return ExclusivityGraph(n, edges, labels)


def find_bases(g: ExclusivityGraph, vectors: Sequence[KsVector]) -> list[Basis]:
    """All 4-cliques of ``g`` whose projectors sum exactly to the identity."""
    if len(vectors) != g.n:
        raise ValueError("graph size does not match vector count")
    dim = len(vectors[0].components)
    ident = ExactMatrix.identity(dim)
    projs = {k + 1: vectors[k].projector().exact for k in range(g.n)}
    bases = []
    for quad in combinations(g.vertices, 4):
        if not g.is_clique(quad):
            continue
        total = ExactMatrix.zeros(dim)
        for m in quad:
            total = total + projs[m]
        if total == ident:
            bases.append(Basis(quad))
    return bases


def operator_completeness(vectors: Sequence[KsVector]) -> HermitianOperator:
    """Exact rational sum of all rank-1 projectors of ``vectors``."""
    dim = len(vectors[0].components)
    total = ExactMatrix.zeros(dim)
    for v in vectors:
        total = total + v.projector().exact
    return HermitianOperator.from_exact(total)


def verify_ks_uncolorability(g: ExclusivityGraph, bases: Sequence[Basis]) -> ColoringSearchResult:
    """Exhaustive search for a 0/1 assignment obeying both constraints.

    Constraint (i): no edge has both endpoints assigned 1.  Constraint
    (ii): every basis has exactly one member assigned 1.  Vertices are
    branched in degree-descending order (lexicographic tie-break) with
    value 1 tried before 0.
    """
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    basis_sets = [frozenset(b.members) for b in bases]
    touching = {v: [bs for bs in basis_sets if v in bs] for v in g.vertices}
    values: dict[int, int] = {}
    nodes = 0
    start = time.perf_counter()

    def consistent(v: int) -> bool:
        if values[v] == 1 and any(values.get(u) == 1 for u in g.neighbors(v)):
            return False
        for bs in touching[v]:
            ones = sum(1 for m in bs if values.get(m) == 1)
            unassigned = sum(1 for m in bs if m not in values)
            if ones > 1 or ones + unassigned < 1:
                return False
        return True

    def search(depth: int) -> dict[int, int] | None:
        nonlocal nodes
        if depth == len(order):
            return dict(values)
        v = order[depth]
        for val in (1, 0):
            nodes += 1
            values[v] = val
            if consistent(v):
                found = search(depth + 1)
                if found is not None:
                    return found
            del values[v]
        return None

    assignment = search(0)
    elapsed = time.perf_counter() - start
    return ColoringSearchResult(assignment is not None, assignment, nodes, elapsed)


def state_catalog() -> list[KsCatalogEntry]:
    """All 28 catalog states: 24 pure directions plus 4 mixtures."""
    entries = []
    for v in ks18_vectors() + omitted_vectors():
        proj = v.projector()
        rho = DensityMatrix.from_exact(proj.exact)
        entries.append(
            KsCatalogEntry(v.label, rho, f"pure state along {v.components}")
        )
    psi = [projector_from_vector(c) for c in MIXTURE_BASIS_COMPONENTS]
    psi_rhos = [DensityMatrix.from_exact(p.exact) for p in psi]
    for code in sorted(MIXTURE_WEIGHTS):
        weights = MIXTURE_WEIGHTS[code]
        rho = convex_mix(list(zip(weights, psi_rhos)))
        desc = " + ".join(
            f"{w} along {c}" for w, c in zip(weights, MIXTURE_BASIS_COMPONENTS)
        )
        entries.append(KsCatalogEntry(code, rho, f"mixture: {desc}"))
    return entries


def catalog_state(code: str) -> DensityMatrix:
    """Look up a catalog density matrix by its code (v1..v24, rho25..rho28)."""
    for entry in state_catalog():
        if entry.code == code:
            return entry.state
    raise KeyError(f"unknown state code: {code}")


def discrepancy_flags(g: ExclusivityGraph) -> dict:
    """Record the derived edge count next to the commonly quoted pair count."""
    derived = g.edge_count
    return {
        "derived_edge_count": derived,
        "directed_edge_records": 2 * derived,
        "quoted_pair_count": QUOTED_PAIR_COUNT,
        "consistent": derived == QUOTED_PAIR_COUNT,
        "note": (
            "a commonly quoted count of 42 exclusive pairs differs from the "
            "count derived from the vectors; both are recorded"
        ),
    }


def ks_set_dict() -> dict:
    """JSON-ready payload: vectors, derived graph, bases, and flags."""
    vectors = ks18_vectors()
    g = orthogonality_graph(vectors)
    bases = find_bases(g, vectors)
    return {
        "vertices": [
            {"id": v.id, "label": v.label, "components": list(v.components)}
            for v in vectors
        ],
        "edges": [list(e) for e in g.edges],
        "bases": [list(b.members) for b in bases],
        "flags": discrepancy_flags(g),
    }
