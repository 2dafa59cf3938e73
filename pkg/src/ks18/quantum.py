"""State-independent quantum predictions for the 18-test set.

Nine two-qubit Pauli products form six three-observable contexts.  Joint
outcomes of sequential projective measurements are computed by the Lüders
rule and cross-checked against the commuting-product formula.  The sum of
yes-probabilities over the 18 tests (sigma) and the 18-term sequential
figure of merit (xi) both equal 4.5 for every state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .algebra import (
    TOL_ALG,
    DensityMatrix,
    HermitianOperator,
    Projector,
    PureState,
    eigenprojectors_pm,
    expectation,
)
from .exact import ComplexFraction, ExactMatrix, kron
from .ksets import ks18_vectors, omitted_vectors

PAULI_I = ExactMatrix([[1, 0], [0, 1]])
PAULI_X = ExactMatrix([[0, 1], [1, 0]])
PAULI_Y = ExactMatrix([[0, ComplexFraction(0, -1)], [ComplexFraction(0, 1), 0]])
PAULI_Z = ExactMatrix([[1, 0], [0, -1]])

_OBSERVABLE_FACTORS: tuple[tuple[ExactMatrix, ExactMatrix], ...] = (
    (PAULI_Z, PAULI_I),
    (PAULI_I, PAULI_Z),
    (PAULI_Z, PAULI_Z),
    (PAULI_I, PAULI_X),
    (PAULI_X, PAULI_I),
    (PAULI_X, PAULI_X),
    (PAULI_Z, PAULI_X),
    (PAULI_X, PAULI_Z),
    (PAULI_Y, PAULI_Y),
)

CANONICAL_CONTEXT_IDS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2),
    (0, 3, 6),
    (3, 4, 5),
    (1, 4, 7),
    (6, 7, 8),
    (2, 5, 8),
)

_XI_OUTCOME_TABLE: tuple[tuple[tuple[int, int, int], tuple[tuple[int, int, int], ...]], ...] = (
    ((0, 1, 2), ((0, 0, 1), (1, 1, 1), (1, 0, 0))),
    ((0, 3, 6), ((0, 1, 0), (0, 0, 1), (1, 0, 0))),
    ((3, 4, 5), ((1, 0, 0), (1, 1, 1), (0, 1, 0))),
    ((1, 4, 7), ((1, 0, 0), (0, 0, 1), (1, 1, 1))),
    ((6, 7, 8), ((1, 0, 0), (0, 0, 1), (1, 1, 1))),
    ((2, 5, 8), ((1, 1, 0), (0, 0, 0), (0, 1, 1))),
)


@dataclass(frozen=True, eq=False)
class Observable:
    """One of the nine +-1-valued two-qubit Pauli products, by id 0..8."""

    id: int
    operator: HermitianOperator

    def __post_init__(self):
        ident = ExactMatrix.identity(4)
        if not (self.operator.exact @ self.operator.exact == ident):
            raise ValueError("observable is not ±1-valued")


@lru_cache(maxsize=None)
def observable(obs_id: int) -> Observable:
    """The observable with the given id (0..8)."""
    if not 0 <= obs_id <= 8:
        raise ValueError(f"observable id {obs_id} out of range 0..8")
    left, right = _OBSERVABLE_FACTORS[obs_id]
    return Observable(obs_id, HermitianOperator.from_exact(kron(left, right)))


def observables() -> list[Observable]:
    return [observable(i) for i in range(9)]


@dataclass(frozen=True)
class Context:
    """Ordered triple of pairwise commuting observable ids."""

    ids: tuple[int, int, int]

    def __post_init__(self):
        ids = tuple(int(i) for i in self.ids)
        object.__setattr__(self, "ids", ids)
        if len(ids) != 3:
            raise ValueError("a context has exactly three observables")
        ops = [observable(i).operator.exact for i in ids]
        for a in range(3):
            for b in range(a + 1, 3):
                if not (ops[a] @ ops[b] == ops[b] @ ops[a]):
                    raise ValueError("incompatible sequence")

    @property
    def operators(self) -> list[HermitianOperator]:
        return [observable(i).operator for i in self.ids]

    @property
    def label(self) -> str:
        return "".join(str(i) for i in self.ids)

    def parity(self) -> int | None:
        """+1 or -1 when the operator product is a signed identity, else None."""
        ops = [observable(i).operator.exact for i in self.ids]
        product = ops[0] @ ops[1] @ ops[2]
        ident = ExactMatrix.identity(4)
        if product == ident:
            return 1
        if product == ident * Fraction(-1):
            return -1
        return None


@lru_cache(maxsize=None)
def _context(ids: tuple[int, int, int]) -> Context:
    return Context(ids)


def canonical_contexts() -> list[Context]:
    """The six fixed contexts of the 18-term figure of merit."""
    return [_context(ids) for ids in CANONICAL_CONTEXT_IDS]


@dataclass(frozen=True)
class Proposition:
    """Outcome bits (1 means eigenvalue +1) for a context's three observables."""

    outcomes: tuple[int, int, int]
    context: Context

    def __post_init__(self):
        outs = tuple(int(o) for o in self.outcomes)
        object.__setattr__(self, "outcomes", outs)
        if len(outs) != 3 or any(o not in (0, 1) for o in outs):
            raise ValueError("outcomes must be three bits")

    @property
    def label(self) -> str:
        bits = "".join(str(o) for o in self.outcomes)
        return f"P({bits}|{self.context.label})"

    def outcome_sign_product(self) -> int:
        sign = 1
        for o in self.outcomes:
            sign *= 1 if o == 1 else -1
        return sign


@lru_cache(maxsize=1)
def _xi_terms() -> tuple[Proposition, ...]:
    terms = []
    for ids, outcome_list in _XI_OUTCOME_TABLE:
        ctx = _context(ids)
        terms.extend(Proposition(outs, ctx) for outs in outcome_list)
    return tuple(terms)


def xi_terms() -> list[Proposition]:
    """The 18 propositions of the figure of merit, in canonical order."""
    return list(_xi_terms())


@lru_cache(maxsize=1)
def _omitted_propositions() -> tuple[Proposition, ...]:
    omitted = []
    for ids, outcome_list in _XI_OUTCOME_TABLE:
        ctx = _context(ids)
        parity = ctx.parity()
        for bits in range(8):
            outs = ((bits >> 2) & 1, (bits >> 1) & 1, bits & 1)
            prop = Proposition(outs, ctx)
            if prop.outcome_sign_product() == parity and outs not in outcome_list:
                omitted.append(prop)
    return tuple(omitted)


def omitted_propositions() -> list[Proposition]:
    """Per context, the one parity-allowed outcome triple not in the 18 terms."""
    return list(_omitted_propositions())


@lru_cache(maxsize=None)
def outcome_projector(obs_id: int, a: int) -> Projector:
    """Eigenprojector of observable ``obs_id`` for result bit ``a``."""
    if a not in (0, 1):
        raise ValueError("outcome bit must be 0 or 1")
    plus, minus = eigenprojectors_pm(observable(obs_id).operator)
    return plus if a == 1 else minus


def proposition_projector(prop: Proposition) -> Projector:
    """Product of the three outcome projectors (zero for parity-violating triples)."""
    product = ExactMatrix.identity(4)
    for obs_id, a in zip(prop.context.ids, prop.outcomes):
        product = product @ outcome_projector(obs_id, a).exact
    return Projector.from_exact(product)


def sequential_probability(rho: DensityMatrix, prop: Proposition) -> float:
    """Joint probability of the outcome triple under sequential measurement.

    Computes the Lüders chain trace(Pc Pb Pa rho Pa Pb Pc) and the
    commuting-product form trace(rho Pa Pb Pc), and cross-checks them.
    """
    projs = [outcome_projector(obs_id, a)
             for obs_id, a in zip(prop.context.ids, prop.outcomes)]
    if rho.exact is not None:
        m = projs[2].exact @ projs[1].exact @ projs[0].exact
        luders = (m @ rho.exact @ m.conjugate_transpose()).trace()
        product = (rho.exact @ projs[0].exact @ projs[1].exact @ projs[2].exact).trace()
        if luders != product:
            raise ArithmeticError("sequential and product probabilities disagree")
        return float(luders.re)
    arrs = [p.array for p in projs]
    m = arrs[2] @ arrs[1] @ arrs[0]
    luders = float(np.trace(m @ rho.array @ m.conj().T).real)
    product = float(np.trace(rho.array @ arrs[0] @ arrs[1] @ arrs[2]).real)
    if abs(luders - product) > TOL_ALG:
        raise ArithmeticError("sequential and product probabilities disagree")
    return min(max(luders, 0.0), 1.0)


@lru_cache(maxsize=1)
def _ks_projectors() -> tuple[Projector, ...]:
    return tuple(v.projector() for v in ks18_vectors())


def sigma(rho: DensityMatrix) -> float:
    """Sum of yes-probabilities over the 18 tests; 4.5 for every state."""
    return sum(expectation(rho, p) for p in _ks_projectors())


def xi(rho: DensityMatrix) -> float:
    """Sum of the 18 sequential term probabilities; 4.5 for every state."""
    return sum(sequential_probability(rho, term) for term in xi_terms())


def proposition_vertex_map() -> dict[Proposition, int]:
    """Exact bijection between the 18 terms and the 18 test directions."""
    ks_exact = {v.id: v.projector().exact for v in ks18_vectors()}
    mapping: dict[Proposition, int] = {}
    for term in xi_terms():
        proj = proposition_projector(term).exact
        matches = [vid for vid, p in ks_exact.items() if p == proj]
        if len(matches) != 1:
            raise ValueError("correspondence broken")
        mapping[term] = matches[0]
    if len(set(mapping.values())) != 18:
        raise ValueError("correspondence broken")
    return mapping


def omitted_vertex_map() -> dict[Proposition, int]:
    """Map the six omitted parity-allowed outcomes to directions 19..24."""
    extra_exact = {v.id: v.projector().exact for v in omitted_vectors()}
    mapping: dict[Proposition, int] = {}
    for prop in omitted_propositions():
        proj = proposition_projector(prop).exact
        matches = [vid for vid, p in extra_exact.items() if p == proj]
        if len(matches) != 1:
            raise ValueError("correspondence broken")
        mapping[prop] = matches[0]
    if len(set(mapping.values())) != 6:
        raise ValueError("correspondence broken")
    return mapping


def ideal_probability_table(rho_or_code: Union[DensityMatrix, str]) -> dict[str, float]:
    """Ideal values of all 18 terms, keyed by the P(abc|xyz) labels."""
    rho = _resolve_state(rho_or_code)
    return {term.label: sequential_probability(rho, term) for term in xi_terms()}


def _resolve_state(rho_or_code: Union[DensityMatrix, str]) -> DensityMatrix:
    if isinstance(rho_or_code, DensityMatrix):
        return rho_or_code
    from .ksets import catalog_state

    return catalog_state(rho_or_code)


@dataclass(frozen=True)
class NoiseChannel:
    """Visibility mixing toward the maximally mixed state."""

    kind: str = "visibility-mixing"
    v: float | Fraction = 1.0

    def __post_init__(self):
        if self.kind not in ("visibility-mixing", "none"):
            raise ValueError(f"unknown noise kind: {self.kind}")
        if not 0 <= float(self.v) <= 1:
            raise ValueError("visibility must lie in [0, 1]")


def apply_noise(rho: DensityMatrix, channel: NoiseChannel) -> DensityMatrix:
    """Return V*rho + (1-V)*I/4 (exact when both factors are exact)."""
    if channel.kind == "none":
        return rho
    v = channel.v
    if isinstance(v, Fraction) and rho.exact is not None:
        mixed = ExactMatrix.identity(rho.dim, Fraction(1, rho.dim))
        return DensityMatrix.from_exact(rho.exact * v + mixed * (1 - v))
    vf = float(v)
    eye = np.eye(rho.dim, dtype=complex) / rho.dim
    return DensityMatrix(vf * rho.array + (1.0 - vf) * eye)


def random_pure_state(rng: np.random.Generator, dim: int = 4) -> PureState:
    """Haar-random pure state: normalized standard-normal complex amplitudes."""
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(amps / np.linalg.norm(amps))


def random_density_matrix(rng: np.random.Generator, dim: int = 4) -> DensityMatrix:
    """Random full-rank mixed state from a complex Ginibre matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)


@dataclass(frozen=True)
class AuditReport:
    """Numerical evidence that a context behaves as compatible observables."""

    context_ids: tuple[int, int, int]
    n_states: int
    max_repeat_deviation: float
    max_order_deviation: float
    max_marginal_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return max(self.max_repeat_deviation, self.max_order_deviation,
                   self.max_marginal_deviation) <= self.tolerance


def _chain_probability(rho_arr: np.ndarray, projs: Sequence[np.ndarray]) -> float:
    m = np.eye(rho_arr.shape[0], dtype=complex)
    for p in projs:
        m = p @ m
    return float(np.trace(m @ rho_arr @ m.conj().T).real)


def compatibility_audit(context: Union[Context, Iterable[int]],
                        n_states: int = 100, seed: int = 20240,
                        tolerance: float = 1e-12) -> AuditReport:
    """Check repeat idempotence, order invariance, and marginal consistency.

    Random pure and mixed states are drawn from the given seed; every
    deviation reported is a maximum over states and outcome triples.
    """
    ctx = context if isinstance(context, Context) else Context(tuple(context))
    rng = np.random.default_rng(seed)
    states = []
    for k in range(n_states):
        if k % 2 == 0:
            states.append(random_pure_state(rng).density())
        else:
            states.append(random_density_matrix(rng))
    proj = {(pos, a): outcome_projector(ctx.ids[pos], a).array
            for pos in range(3) for a in (0, 1)}
    triples = [((b >> 2) & 1, (b >> 1) & 1, b & 1) for b in range(8)]
    orderings = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    max_repeat = 0.0
    max_order = 0.0
    max_marginal = 0.0
    for rho in states:
        arr = rho.array
        joints = {}
        for perm in orderings:
            joints[perm] = {
                t: _chain_probability(arr, [proj[(p, t[p])] for p in perm])
                for t in triples
            }
        base = joints[orderings[0]]
        for t in triples:
            chain = [proj[(0, t[0])], proj[(1, t[1])], proj[(2, t[2])]]
            for pos in range(3):
                same = _chain_probability(arr, chain + [proj[(pos, t[pos])]])
                wrong = _chain_probability(arr, chain + [proj[(pos, 1 - t[pos])]])
                max_repeat = max(max_repeat, abs(same - base[t]), abs(wrong))
        for perm in orderings[1:]:
            for t in triples:
                max_order = max(max_order, abs(joints[perm][t] - base[t]))
        for pos in range(3):
            for a in (0, 1):
                direct = float(np.trace(arr @ proj[(pos, a)]).real)
                for perm in orderings:
                    marginal = sum(p for t, p in joints[perm].items() if t[pos] == a)
                    max_marginal = max(max_marginal, abs(marginal - direct))
    return AuditReport(ctx.ids, n_states, max_repeat, max_order, max_marginal, tolerance)
