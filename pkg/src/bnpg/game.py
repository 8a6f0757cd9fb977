"""Game representation and the equilibrium predicates everything else builds on.

Players are 0-indexed here. File formats and CLI output use 1-indexed ids.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .errors import InvalidInstance

HETEROGENEOUS = "heterogeneous"
HOMOGENEOUS = "homogeneous"
FULLY_HOMOGENEOUS = "fully_homogeneous"
HOMOGENEITY_TAGS = (HETEROGENEOUS, HOMOGENEOUS, FULLY_HOMOGENEOUS)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on players ``0..n-1`` stored as adjacency lists.

    The constructor does not check the invariants (``validate`` does), so a
    malformed adjacency can be represented and reported. Use
    :meth:`from_edges` to build a graph that is correct by construction.
    """

    n: int
    adjacency: tuple

    def __post_init__(self):
        adj = tuple(tuple(sorted(int(j) for j in nbrs)) for nbrs in self.adjacency)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        nbrs = [set() for _ in range(n)]
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise InvalidInstance([f"self-loop at player {i + 1}"])
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidInstance([f"edge ({i + 1}, {j + 1}) out of range for n={n}"])
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(n, tuple(tuple(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(tuple(j for j in range(n) if j != i) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int, center: int = 0) -> "Graph":
        return cls.from_edges(n, [(center, j) for j in range(n) if j != center])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def neighbors(self, i: int) -> tuple:
        return self.adjacency[i]

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @property
    def num_edges(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list:
        return [(i, j) for i in range(self.n) for j in self.adjacency[i] if i < j]

    @cached_property
    def matrix(self) -> sp.csr_matrix:
        """Sparse 0/1 adjacency matrix."""
        indptr = np.concatenate([[0], np.cumsum(self.degrees)])
        indices = np.fromiter((j for a in self.adjacency for j in a), dtype=np.int64,
                              count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int64)
        return sp.csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def is_complete(self) -> bool:
        return bool(np.all(self.degrees == self.n - 1))

    def components(self) -> list:
        seen = np.zeros(self.n, dtype=bool)
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.num_edges == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def subgraph_degrees(self, nodes) -> dict:
        """Degree of each node of ``nodes`` inside the induced subgraph."""
        s = set(nodes)
        return {v: sum(1 for w in self.adjacency[v] if w in s) for v in s}


@dataclass(frozen=True, eq=False)
class BnpgInstance:
    """A binary networked public goods game.

    ``tables[i][t]`` is the externality ``g_i(t)`` for ``t = 0..deg_i + 1``.
    ``tol`` is the absolute tolerance used when comparing a marginal
    benefit against a cost; the default 0 means exact comparison.
    """

    graph: Graph
    costs: np.ndarray
    tables: tuple
    homogeneity: str = HETEROGENEOUS
    tol: float = 0.0

    def __post_init__(self):
        costs = np.array(self.costs, dtype=float).reshape(-1)
        costs.setflags(write=False)
        tables = []
        for t in self.tables:
            arr = np.array(t, dtype=float).reshape(-1)
            arr.setflags(write=False)
            tables.append(arr)
        object.__setattr__(self, "costs", costs)
        object.__setattr__(self, "tables", tuple(tables))

    @classmethod
    def homogeneous(cls, graph: Graph, g: Sequence[float], costs, **kw) -> "BnpgInstance":
        """Every player shares ``g``; it is truncated to each player's degree."""
        g = np.asarray(g, dtype=float)
        if len(g) < graph.max_degree + 2:
            raise ValueError(f"g needs at least {graph.max_degree + 2} entries, got {len(g)}")
        tables = tuple(g[: d + 2] for d in graph.degrees)
        kw.setdefault("homogeneity", HOMOGENEOUS)
        return cls(graph, costs, tables, **kw)

    @classmethod
    def fully_homogeneous(cls, graph: Graph, g: Sequence[float], c: float, **kw) -> "BnpgInstance":
        kw.setdefault("homogeneity", FULLY_HOMOGENEOUS)
        return cls.homogeneous(graph, g, np.full(graph.n, float(c)), **kw)

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def padded(self) -> np.ndarray:
        """Tables as an ``(n, d_max + 2)`` array, right-padded with the last value."""
        width = self.graph.max_degree + 2
        out = np.empty((self.n, width))
        for i, t in enumerate(self.tables):
            out[i, : len(t)] = t[:width]
            out[i, len(t):] = t[-1]
        return out

    @cached_property
    def deltas(self) -> np.ndarray:
        """``deltas[i, t]`` is ``g_i(t+1) - g_i(t)`` for ``t = 0..d_max``."""
        return np.diff(self.padded, axis=1)

    @cached_property
    def utility_range(self) -> np.ndarray:
        """Spread of each player's utility over both actions and all counts."""
        g = self.padded
        deg = self.graph.degrees
        idx = np.arange(self.n)
        hi = np.maximum(g[idx, deg], g[idx, deg + 1] - self.costs)
        lo = np.minimum(g[:, 0], g[:, 1] - self.costs)
        return hi - lo

    def shared_externality(self) -> bool:
        """True when all tables agree on their common prefix."""
        if self.n == 0:
            return True
        longest = max(self.tables, key=len)
        return all(np.array_equal(t, longest[: len(t)]) for t in self.tables)

    def common_table(self) -> np.ndarray:
        """The shared ``g`` of a homogeneous game (the longest table)."""
        return max(self.tables, key=len)

    def shared_cost(self) -> bool:
        return bool(np.all(self.costs == self.costs[0])) if self.n else True


def detect_homogeneity(instance: BnpgInstance) -> str:
    """Strongest homogeneity class the instance actually satisfies."""
    if not instance.shared_externality():
        return HETEROGENEOUS
    return FULLY_HOMOGENEOUS if instance.shared_cost() else HOMOGENEOUS


class Status(str, enum.Enum):
    PSNE = "psne"
    NO_PSNE = "no_psne"
    APPROX = "approx"


@dataclass
class SolveReport:
    """Outcome of a solver run.

    A ``PSNE`` report carries a profile that passes :func:`is_psne`. ``NO_PSNE``
    is a certificate from an exact method. ``APPROX`` carries the profile and
    its epsilon.
    """

    status: Status
    method: str
    profile: np.ndarray | None = None
    epsilon: float | None = None
    diagnostics: dict = field(default_factory=dict)
    alternatives: tuple = ()

    @property
    def found(self) -> bool:
        return self.status is Status.PSNE


def as_profile(instance: BnpgInstance, x) -> np.ndarray:
    if isinstance(x, str):
        x = parse_profile(x)
    arr = np.asarray(x)
    if arr.shape != (instance.n,):
        raise ValueError(f"profile has length {arr.size}, expected {instance.n}")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("profile entries must be 0 or 1")
    return arr.astype(np.int64)


def parse_profile(s: str) -> np.ndarray:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 profile string: {s!r}")
    return np.array([int(ch) for ch in s], dtype=np.int64)


def profile_str(x) -> str:
    return "".join(str(int(v)) for v in x)


def _check_player(instance, i):
    if not 0 <= i < instance.n:
        raise IndexError(f"player {i} out of range for n={instance.n}")


def neighbor_counts(instance: BnpgInstance, x) -> np.ndarray:
    """Number of investing neighbours of every player."""
    x = as_profile(instance, x)
    return instance.graph.matrix @ x


def neighbor_invest_count(instance: BnpgInstance, x, i: int) -> int:
    _check_player(instance, i)
    x = as_profile(instance, x)
    return int(sum(x[j] for j in instance.graph.adjacency[i]))


def utility(instance: BnpgInstance, x, i: int) -> float:
    x = as_profile(instance, x)
    n_i = neighbor_invest_count(instance, x, i)
    return float(instance.tables[i][x[i] + n_i] - instance.costs[i] * x[i])


def utilities(instance: BnpgInstance, x) -> np.ndarray:
    x = as_profile(instance, x)
    counts = neighbor_counts(instance, x)
    return instance.padded[np.arange(instance.n), counts + x] - instance.costs * x


def delta_g(instance: BnpgInstance, i: int, t: int) -> float:
    _check_player(instance, i)
    deg = len(instance.graph.adjacency[i])
    if not 0 <= t <= deg:
        raise IndexError(f"t={t} outside 0..{deg} for player {i}")
    table = instance.tables[i]
    return float(table[t + 1] - table[t])


def is_best_response(instance: BnpgInstance, x, i: int) -> bool:
    """Whether player ``i``'s current action is a (weak) best response."""
    x = as_profile(instance, x)
    d = delta_g(instance, i, neighbor_invest_count(instance, x, i))
    c = instance.costs[i]
    if x[i] == 1:
        return bool(d >= c - instance.tol)
    return bool(d <= c + instance.tol)


def _best_response_mask(instance, x, counts):
    d = instance.deltas[np.arange(instance.n), counts]
    c = instance.costs
    return np.where(x == 1, d >= c - instance.tol, d <= c + instance.tol)


def is_psne(instance: BnpgInstance, x) -> bool:
    x = as_profile(instance, x)
    return bool(np.all(_best_response_mask(instance, x, neighbor_counts(instance, x))))


def deviation_gains(instance: BnpgInstance, x, normalized: bool = False) -> np.ndarray:
    """Per-player gain from flipping, ``U_i(1-x_i) - U_i(x_i)`` (may be negative)."""
    x = as_profile(instance, x)
    counts = neighbor_counts(instance, x)
    d = instance.deltas[np.arange(instance.n), counts]
    gain = np.where(x == 0, d - instance.costs, instance.costs - d)
    if normalized:
        gain = _normalize(gain, instance.utility_range)
    return gain


def _normalize(gain, rng):
    out = np.zeros_like(gain, dtype=float)
    ok = rng > 0
    np.divide(gain, rng, out=out, where=ok)
    return out


def max_epsilon(instance: BnpgInstance, x, normalized: bool = False) -> float:
    """Largest profitable deviation; 0 exactly when ``x`` is a PSNE."""
    gains = deviation_gains(instance, x, normalized)
    return float(max(gains.max(initial=0.0), 0.0))


def social_welfare(instance: BnpgInstance, x) -> float:
    return float(utilities(instance, x).sum())


def validate(instance: BnpgInstance) -> list:
    """List every invariant violation; an empty list means the game is well formed."""
    out = []
    g = instance.graph
    n = g.n
    if n < 1:
        out.append("graph must have at least one player")
    if len(g.adjacency) != n:
        out.append(f"adjacency has {len(g.adjacency)} rows for n={n}")
        return out
    for i, nbrs in enumerate(g.adjacency):
        if len(set(nbrs)) != len(nbrs):
            out.append(f"player {i + 1}: duplicate edge")
        for j in nbrs:
            if not 0 <= j < n:
                out.append(f"player {i + 1}: neighbor {j + 1} out of range")
            elif j == i:
                out.append(f"player {i + 1}: self-loop")
            elif i not in g.adjacency[j]:
                out.append(f"edge ({i + 1}, {j + 1}): symmetry violation, "
                           f"{i + 1} not a neighbor of {j + 1}")
    if len(instance.costs) != n:
        out.append(f"expected {n} costs, got {len(instance.costs)}")
    if len(instance.tables) != n:
        out.append(f"expected {n} externality tables, got {len(instance.tables)}")
        return out
    for i, t in enumerate(instance.tables):
        want = len(g.adjacency[i]) + 2
        if len(t) != want:
            out.append(f"player {i + 1}: table length {len(t)}, expected deg+2={want}")
        if not np.all(np.isfinite(t)):
            out.append(f"player {i + 1}: non-finite table entry")
        bad = np.nonzero(np.diff(t) < 0)[0]
        if len(bad):
            out.append(f"player {i + 1}: monotonicity violation at index {int(bad[0]) + 1}")
    if not np.all(np.isfinite(instance.costs)):
        out.append("non-finite cost")
    tag = instance.homogeneity
    if tag not in HOMOGENEITY_TAGS:
        out.append(f"unknown homogeneity tag {tag!r}")
    elif tag != HETEROGENEOUS and len(instance.costs) == n:
        if not instance.shared_externality():
            out.append(f"tagged {tag} but externality tables differ")
        if tag == FULLY_HOMOGENEOUS and not instance.shared_cost():
            out.append("tagged fully_homogeneous but costs differ")
    return out


def check(instance: BnpgInstance) -> BnpgInstance:
    """Raise :class:`InvalidInstance` unless ``validate`` is clean."""
    problems = validate(instance)
    if problems:
        raise InvalidInstance(problems)
    return instance
