"""Noncontextual classical side: 0/1 assignments and ball-in-box strategies.

A deterministic assignment answers every test in advance; admissibility
forbids two yes answers on adjacent tests, capping the total at the
independence number.  The box strategy realizes that optimum with the
smallest classical memory: one ball among 18 boxes, each test asking
whether the ball sits in one of its four boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import ExclusivityGraph
from .invariants import independence_number


@dataclass(frozen=True)
class Assignment:
    """Predetermined 0/1 answers, one per vertex."""

    values: tuple[tuple[int, int], ...]

    def __init__(self, values: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = dict(values)
        normalized = tuple(sorted((int(v), int(b)) for v, b in items.items()))
        if any(b not in (0, 1) for _, b in normalized):
            raise ValueError("assignment values must be 0 or 1")
        object.__setattr__(self, "values", normalized)

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    @classmethod
    def from_indicator(cls, g: ExclusivityGraph, ones: Iterable[int]) -> "Assignment":
        one_set = set(ones)
        return cls({v: int(v in one_set) for v in g.vertices})


def violated_edge(g: ExclusivityGraph, assignment: Assignment) -> tuple[int, int] | None:
    """First edge (lexicographic) whose endpoints are both assigned 1, if any."""
    values = assignment.as_dict()
    for i, j in g.edges:
        if values.get(i) == 1 and values.get(j) == 1:
            return (i, j)
    return None


def classical_sigma(g: ExclusivityGraph, assignment: Assignment) -> int:
    """Number of yes answers of an admissible assignment."""
    values = assignment.as_dict()
    missing = [v for v in g.vertices if v not in values]
    if missing:
        raise ValueError(f"assignment misses vertices {missing}")
    bad = violated_edge(g, assignment)
    if bad is not None:
        raise ValueError(
            f"inadmissible assignment: both endpoints of edge ({bad[0]}, {bad[1]}) are 1"
        )
    return sum(values[v] for v in g.vertices)


def max_classical_sigma(g: ExclusivityGraph) -> tuple[int, tuple[int, ...]]:
    """Best achievable yes count and a witness assignment support."""
    result = independence_number(g)
    return result.alpha, result.witness


@dataclass(frozen=True)
class BoxStrategy:
    """Ball-in-box encoding: box_sets[b] lists the tests answering yes on b."""

    boxes: tuple[int, ...]
    box_sets: tuple[tuple[int, tuple[int, ...]], ...]

    def __init__(self, box_sets: Mapping[int, Iterable[int]]):
        normalized = tuple(
            (int(b), tuple(sorted(int(v) for v in vs)))
            for b, vs in sorted(box_sets.items())
        )
        object.__setattr__(self, "box_sets", normalized)
        object.__setattr__(self, "boxes", tuple(b for b, _ in normalized))

    def box_set(self, box: int) -> tuple[int, ...]:
        for b, vs in self.box_sets:
            if b == box:
                return vs
        raise KeyError(f"unknown box {box}")

    def tests(self) -> dict[int, frozenset[int]]:
        """Dual view: for each test vertex, the set of boxes answering yes."""
        out: dict[int, set[int]] = {}
        for b, vs in self.box_sets:
            for v in vs:
                out.setdefault(v, set()).add(b)
        return {v: frozenset(bs) for v, bs in sorted(out.items())}

    def ball_assignment(self, g: ExclusivityGraph, box: int) -> Assignment:
        """Assignment induced by placing the ball in ``box``."""
        members = set(self.box_set(box))
        return Assignment({v: int(v in members) for v in g.vertices})

    def to_dict(self) -> dict:
        return {
            "boxes": list(self.boxes),
            "box_sets": {str(b): list(vs) for b, vs in self.box_sets},
            "tests": {str(v): sorted(bs) for v, bs in self.tests().items()},
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "BoxStrategy":
        raw = d["box_sets"]
        return cls({int(b): [int(v) for v in vs] for b, vs in raw.items()})


def construct_box_strategy(g: ExclusivityGraph) -> BoxStrategy:
    """Search for n independent alpha-sets with every vertex in exactly alpha.

    Candidate boxes are the maximum independent sets, scanned in
    lexicographic order with include-before-exclude branching, so the
    result is deterministic.  The chosen boxes must additionally realize
    every non-adjacent pair inside some common box, which ties the
    strategy to a clique edge cover of the complement.
    """
    alpha = independence_number(g).alpha
    num_boxes = g.n
    cands = _independent_sets_of_size(g, alpha)
    comp_edges = list(g.complement().edges)
    pair_index = {e: k for k, e in enumerate(comp_edges)}
    cand_pairs = []
    for c in cands:
        pairs = set()
        for x in range(len(c)):
            for y in range(x + 1, len(c)):
                e = (c[x], c[y])
                if e in pair_index:
                    pairs.add(e)
        cand_pairs.append(frozenset(pairs))
    suffix_vertex = [dict() for _ in range(len(cands) + 1)]
    suffix_pair = [dict() for _ in range(len(cands) + 1)]
    for k in range(len(cands) - 1, -1, -1):
        sv = dict(suffix_vertex[k + 1])
        for v in cands[k]:
            sv[v] = sv.get(v, 0) + 1
        suffix_vertex[k] = sv
        sp = dict(suffix_pair[k + 1])
        for e in cand_pairs[k]:
            sp[e] = sp.get(e, 0) + 1
        suffix_pair[k] = sp

    need = {v: alpha for v in g.vertices}
    uncovered = set(comp_edges)
    chosen: list[int] = []

    def feasible(k: int) -> bool:
        if len(cands) - k < num_boxes - len(chosen):
            return False
        if any(cnt > suffix_vertex[k].get(v, 0) for v, cnt in need.items() if cnt > 0):
            return False
        return all(suffix_pair[k].get(e, 0) > 0 for e in uncovered)

    def dfs(k: int) -> bool:
        if len(chosen) == num_boxes:
            return all(cnt == 0 for cnt in need.values()) and not uncovered
        if k == len(cands) or not feasible(k):
            return False
        cand = cands[k]
        if all(need[v] > 0 for v in cand):
            chosen.append(k)
            newly = [e for e in cand_pairs[k] if e in uncovered]
            for v in cand:
                need[v] -= 1
            uncovered.difference_update(newly)
            if dfs(k + 1):
                return True
            uncovered.update(newly)
            for v in cand:
                need[v] += 1
            chosen.pop()
        return dfs(k + 1)

    if not dfs(0):
        raise ValueError("no balanced box strategy found")
    return BoxStrategy({b + 1: cands[idx] for b, idx in enumerate(chosen)})


def _independent_sets_of_size(g: ExclusivityGraph, size: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def extend(current: list[int], start: int) -> None:
        if len(current) == size:
            out.append(tuple(current))
            return
        for v in range(start, g.n + 1):
            if g.n - v + 1 < size - len(current):
                break
            if all(not g.has_edge(v, u) for u in current):
                current.append(v)
                extend(current, v + 1)
                current.pop()

    extend([], 1)
    return out


@dataclass(frozen=True)
class StrategyReport:
    """Validation outcome for a box strategy."""

    ok: bool
    failures: tuple[str, ...]
    balanced: bool
    tests_per_vertex: tuple[tuple[int, int], ...]
    box_true_counts: tuple[tuple[int, int], ...]
    sigma_min: int
    sigma_max: int
    sigma_avg: float
    complement_edges_covered: int
    complement_edge_total: int


def validate_box_strategy(g: ExclusivityGraph, strategy: BoxStrategy) -> StrategyReport:
    """Check exclusivity, independence, balance, and per-placement totals."""
    failures: list[str] = []
    tests = strategy.tests()
    for i, j in g.edges:
        shared = tests.get(i, frozenset()) & tests.get(j, frozenset())
        if shared:
            failures.append(
                f"adjacent tests ({i}, {j}) share box(es) {sorted(shared)}"
            )
    for b, vs in strategy.box_sets:
        for x in range(len(vs)):
            for y in range(x + 1, len(vs)):
                if g.has_edge(vs[x], vs[y]):
                    failures.append(
                        f"box {b} holds adjacent tests ({vs[x]}, {vs[y]})"
                    )
    per_vertex = tuple((v, len(tests.get(v, frozenset()))) for v in g.vertices)
    per_box = tuple((b, len(vs)) for b, vs in strategy.box_sets)
    counts = [c for _, c in per_box] or [0]
    vertex_counts = {c for _, c in per_vertex}
    balanced = len(vertex_counts) == 1 and len(set(counts)) == 1
    covered = set()
    for _, vs in strategy.box_sets:
        for x in range(len(vs)):
            for y in range(x + 1, len(vs)):
                covered.add((vs[x], vs[y]))
    comp_edges = g.complement().edges
    n_covered = sum(1 for e in comp_edges if e in covered)
    return StrategyReport(
        ok=not failures,
        failures=tuple(failures),
        balanced=balanced,
        tests_per_vertex=per_vertex,
        box_true_counts=per_box,
        sigma_min=min(counts),
        sigma_max=max(counts),
        sigma_avg=sum(counts) / len(counts),
        complement_edges_covered=n_covered,
        complement_edge_total=len(comp_edges),
    )
