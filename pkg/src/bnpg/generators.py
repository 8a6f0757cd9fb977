"""Random graphs, the experimental utility families, reduction gadgets and edge lists."""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import networkx as nx
import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta

from .errors import BnpgError, InvalidInstance
from .game import (FULLY_HOMOGENEOUS, HETEROGENEOUS, BnpgInstance, Graph)

ALPHA_POOL = (0.1, 0.3, 0.5, 0.7, 0.9)
BETA_POOL = (1.2, 1.5, 2.0)

GRAPH_KINDS = ("complete", "path", "star", "cycle", "random_tree", "erdos_renyi",
               "barabasi_albert", "watts_strogatz")


@dataclass(frozen=True)
class GraphSpec:
    """What graph to build.

    ``m`` is the number of edges each new BA node brings; ``exponent`` (optional)
    targets a BA degree exponent through initial attractiveness ``m*(exponent-3)``.
    ``k`` is the WS lattice degree, ``p`` the WS rewiring or ER edge probability.
    """

    kind: str
    n: int
    m: int = 3
    k: int = 4
    p: float = 0.1
    exponent: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GRAPH_KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("a cycle needs n >= 3")
        if self.kind == "barabasi_albert":
            if not 1 <= self.m < self.n:
                raise ValueError(f"BA needs 1 <= m < n, got m={self.m}, n={self.n}")
            if self.exponent is not None and self.exponent <= 2:
                raise ValueError("BA exponent must exceed 2")
        if self.kind == "watts_strogatz" and (self.k >= self.n or self.k < 2 or self.k % 2):
            raise ValueError("WS needs an even lattice degree 2 <= k < n")
        if self.kind in ("watts_strogatz", "erdos_renyi") and not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class UtilityFamilyParams:
    gamma: float = 0.5  # probability that a player gets the convex family
    alpha_set: tuple = ALPHA_POOL
    beta_set: tuple = BETA_POOL
    lambda_range: tuple = (0.0, 1.0)

    def __post_init__(self):
        if not 0 <= self.gamma <= 1:
            raise ValueError("gamma must lie in [0, 1]")
        if not self.alpha_set or not self.beta_set:
            raise ValueError("parameter pools must be non-empty")
        object.__setattr__(self, "alpha_set", tuple(float(a) for a in self.alpha_set))
        object.__setattr__(self, "beta_set", tuple(float(b) for b in self.beta_set))
        object.__setattr__(self, "lambda_range", tuple(float(v) for v in self.lambda_range))

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}


def _from_nx(g: nx.Graph) -> Graph:
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def _barabasi_albert(n, m, attractiveness, rng):
    """Preferential attachment with probability proportional to ``deg + A``.

    Starts from a clique on ``m + 1`` nodes. ``A > -m`` keeps every weight
    positive; the degree exponent is ``3 + A/m``.
    """
    if not 1 <= m < n:
        raise ValueError(f"BA needs 1 <= m < n, got m={m}, n={n}")
    if attractiveness <= -m:
        raise ValueError("attractiveness must exceed -m")
    deg = np.zeros(n)
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    deg[: m + 1] = m
    for v in range(m + 1, n):
        w = deg[:v] + attractiveness
        targets = rng.choice(v, size=m, replace=False, p=w / w.sum())
        for t in targets:
            edges.append((int(t), v))
        deg[targets] += 1
        deg[v] = m
    return Graph.from_edges(n, edges)


def gen_graph(spec: GraphSpec) -> Graph:
    n = spec.n
    kind = spec.kind
    if kind == "complete":
        return Graph.complete(n)
    if kind == "path":
        return Graph.path(n)
    if kind == "star":
        return Graph.star(n)
    if kind == "cycle":
        return Graph.cycle(n)
    if kind == "random_tree":
        if n == 1:
            return Graph.empty(1)
        return _from_nx(nx.random_labeled_tree(n, seed=spec.seed))
    if kind == "erdos_renyi":
        return _from_nx(nx.gnp_random_graph(n, spec.p, seed=spec.seed))
    if kind == "barabasi_albert":
        a = 0.0 if spec.exponent is None else spec.m * (spec.exponent - 3.0)
        return _barabasi_albert(n, spec.m, a, np.random.default_rng(spec.seed))
    return _from_nx(nx.watts_strogatz_graph(n, spec.k, spec.p, seed=spec.seed))


def concave_family(alpha: float, beta: float, t):
    return alpha * beta * np.log(np.asarray(t, dtype=float) + 1.0)


def convex_family(alpha: float, beta: float, t):
    return alpha * ((np.asarray(t, dtype=float) + 1.0) ** beta - 1.0)


def gen_utilities(graph: Graph, params: UtilityFamilyParams = UtilityFamilyParams(),
                  seed: int = 0) -> BnpgInstance:
    """Random heterogeneous game: ``c_i ~ U[0,1]`` and ``g_i = λ_i h_i``.

    Each ``h_i`` is convex with probability ``gamma`` (``α((t+1)^β - 1)``),
    otherwise concave (``αβ log(t+1)``); both are increasing. So ``gamma = 1``
    makes every player's incentive grow with investing neighbours.
    """
    n = graph.n
    rng = np.random.default_rng(seed)
    costs = rng.uniform(0.0, 1.0, n)
    convex = rng.random(n) < params.gamma
    lam = rng.uniform(*params.lambda_range, n)
    alpha = rng.choice(np.array(params.alpha_set), n)
    beta = rng.choice(np.array(params.beta_set), n)
    tables = []
    for i, d in enumerate(graph.degrees):
        t = np.arange(d + 2)
        fam = convex_family if convex[i] else concave_family
        tables.append(lam[i] * fam(alpha[i], beta[i], t))
    return BnpgInstance(graph, costs, tuple(tables), HETEROGENEOUS)


def independent_set_gadget(base: Graph, k: int) -> BnpgInstance:
    """Game with a PSNE iff ``base`` has an independent set of size ``>= k``.

    An apex player (index ``base.n``) is joined to every base node. Base
    players invest only when no neighbour does; the apex invests only when
    ``0 < n_t < k``. For ``k = 1`` that interval is empty and the apex gets a
    flat ``g``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n0 = base.n
    graph = Graph.from_edges(n0 + 1, base.edges() + [(i, n0) for i in range(n0)])
    tables = []
    for i in range(n0):
        d = graph.degrees[i]
        tables.append([0.0] + [1.0] * (d + 1))
    t = np.arange(n0 + 2)
    if k == 1:
        apex = np.zeros(n0 + 2)
    else:
        apex = np.where(t <= 1, 0.0, np.minimum(t, k)).astype(float)
    tables.append(apex)
    costs = np.full(n0 + 1, 0.5)
    return BnpgInstance(graph, costs, tuple(tables), HETEROGENEOUS)


def three_ris_g(t):
    t = np.asarray(t)
    return np.where(t <= 3, t, t + 1).astype(float)


def three_ris_gadget(base: Graph, pad: bool = True) -> BnpgInstance:
    """Fully homogeneous game (``c = 2``) whose investors must have exactly 3
    investing neighbours.

    Non-zero PSNE correspond to 3-regular induced subgraphs. With ``pad`` an
    isolated player (who never invests) is appended, so an induced subgraph
    covering all of ``base`` still yields a non-trivial PSNE.
    """
    n = base.n + (1 if pad else 0)
    graph = Graph(n, base.adjacency + (((),) if pad else ()))
    g = three_ris_g(np.arange(graph.max_degree + 2))
    return BnpgInstance.fully_homogeneous(graph, g, 2.0, homogeneity=FULLY_HOMOGENEOUS)


def load_edge_list(path, zero_indexed: bool = False, compact: bool = True,
                   largest_component: bool = False) -> Graph:
    """Read whitespace-separated integer pairs, one edge per line.

    ``#`` lines and blank lines are skipped; duplicate and reversed edges
    collapse. With ``compact`` ids are renumbered in first-appearance order;
    otherwise ids are used directly (shifted by one unless ``zero_indexed``).
    """
    ids = {}
    pairs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            parts = s.split()
            if len(parts) < 2:
                raise BnpgError(f"line {lineno}: expected two node ids, got {s!r}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise BnpgError(f"line {lineno}: non-integer node id in {s!r}") from None
            if a == b:
                raise InvalidInstance([f"line {lineno}: self-loop at node {a}"])
            for v in (a, b):
                if v not in ids:
                    ids[v] = len(ids)
            pairs.append((a, b))
    if compact:
        n = len(ids)
        edges = [(ids[a], ids[b]) for a, b in pairs]
    else:
        off = 0 if zero_indexed else 1
        if ids and min(ids) - off < 0:
            raise BnpgError("negative node id after offset")
        n = max(ids) - off + 1 if ids else 0
        edges = [(a - off, b - off) for a, b in pairs]
    graph = Graph.from_edges(n, edges)
    if largest_component and n:
        comp = max(graph.components(), key=len)
        index = {v: i for i, v in enumerate(comp)}
        graph = Graph.from_edges(len(comp), [(index[a], index[b]) for a, b in graph.edges()
                                             if a in index])
    return graph


def write_edge_list(graph: Graph, path) -> None:
    with open(path, "w") as fh:
        for i, j in graph.edges():
            fh.write(f"{i + 1} {j + 1}\n")


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` nodes."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def measured_exponent(graph: Graph, dmin: int | None = None) -> float:
    """Discrete power-law exponent fitted by maximum likelihood to degrees ``>= dmin``.

    ``dmin`` defaults to twice the minimum degree, which skips the
    non-power-law head of preferential-attachment graphs.
    """
    deg = graph.degrees
    dmin = 2 * max(int(deg.min()), 1) if dmin is None else dmin
    tail = deg[deg >= dmin].astype(float)
    total = np.log(tail).sum()

    def nll(a):
        return len(tail) * np.log(zeta(a, dmin)) + a * total

    return float(minimize_scalar(nll, bounds=(1.01, 8.0), method="bounded").x)


def clustering(graph: Graph) -> float:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return nx.average_clustering(g)
