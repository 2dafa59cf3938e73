"""Exclusivity graphs: immutable small graphs with 1-indexed vertices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True, eq=False)
class ExclusivityGraph:
    """Undirected simple graph on vertices 1..n with optional labels."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    _adj: dict = field(default=None, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]],
                 labels: Sequence[str] | None = None):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        normalized = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label count must equal vertex count")
        object.__setattr__(self, "labels", labels)
        adj = {v: set() for v in range(1, n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj.get(i, frozenset())

    def neighbors(self, i: int) -> frozenset:
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in self.vertices)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(not self.has_edge(a, b) for idx, a in enumerate(vs) for b in vs[idx + 1:])

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for idx, a in enumerate(vs) for b in vs[idx + 1:])

    def complement(self) -> "ExclusivityGraph":
        comp = [(i, j) for i in self.vertices for j in range(i + 1, self.n + 1)
                if not self.has_edge(i, j)]
        return ExclusivityGraph(self.n, comp, self.labels)

    def relabel(self, perm: Mapping[int, int]) -> "ExclusivityGraph":
        """Apply a vertex permutation: old id v becomes perm[v]."""
        if sorted(perm) != list(self.vertices) or sorted(perm.values()) != list(self.vertices):
            raise ValueError("perm must be a bijection on 1..n")
        new_edges = [(perm[i], perm[j]) for i, j in self.edges]
        new_labels = None
        if self.labels is not None:
            inv = {v: k for k, v in perm.items()}
            new_labels = [self.labels[inv[v] - 1] for v in self.vertices]
        return ExclusivityGraph(self.n, new_edges, new_labels)

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "ExclusivityGraph":
        return cls(int(d["n"]), d["edges"], d.get("labels"))

    def to_edge_list_text(self) -> str:
        lines = [str(self.n)]
        lines.extend(f"{i} {j}" for i, j in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> "ExclusivityGraph":
        """Parse the plain format: first line n, then one `i j` pair per line."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty edge-list input")
        try:
            n = int(lines[0])
        except ValueError as exc:
            raise ValueError(f"bad vertex count line: {lines[0]!r}") from exc
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls(n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExclusivityGraph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.labels))

    def __repr__(self) -> str:
        return f"ExclusivityGraph(n={self.n}, edges={self.edge_count})"
