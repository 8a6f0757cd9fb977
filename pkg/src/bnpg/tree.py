"""PSNE on trees by a leaf-to-root feasibility pass and a root-to-leaf assignment.

Every non-root node ``v`` with parent ``h`` reports, for each parent action
``a`` and own action ``b``, whether its subtree can be completed to a profile
in which every node of the subtree best-responds. Such a completion exists
iff some count ``t`` of investing children is achievable given ``b`` and
satisfies ``Δg_v(t + a) >= c_v`` (``b = 1``) or ``<= c_v`` (``b = 0``).
Children are independent of one another once ``b`` is fixed, so the
achievable counts form the interval ``[forced_in, m - forced_out]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotATree, TableInconsistency
from .game import BnpgInstance, Graph, SolveReport, Status

NO_WITNESS = -1


@dataclass
class TreeDecomposition:
    roots: tuple
    parent: np.ndarray  # -1 at roots
    children: tuple
    order: tuple  # depth-first preorder; parents precede children

    @property
    def root(self) -> int:
        return self.roots[0]


@dataclass
class ConditionalBestResponseTable:
    """``witness[a, b]`` is the smallest feasible investing-children count when
    the parent plays ``a`` and this node plays ``b``, or ``-1`` if infeasible.

    For a root only row 0 is meaningful (there is no parent term).
    """

    node: int
    witness: np.ndarray

    def actions(self, parent_action: int) -> list:
        return [b for b in (0, 1) if self.witness[parent_action, b] != NO_WITNESS]

    def entries(self) -> list:
        return [(a, b, int(self.witness[a, b])) for a in (0, 1) for b in (0, 1)
                if self.witness[a, b] != NO_WITNESS]


def root_and_order(graph: Graph, forest: bool = False) -> TreeDecomposition:
    """Root each component at its smallest player; children in index order."""
    n = graph.n
    if n == 0:
        raise NotATree("empty graph")
    if forest:
        if not graph.is_forest():
            raise NotATree("graph contains a cycle")
    elif graph.num_edges != n - 1 or not graph.is_connected():
        raise NotATree("graph is not a tree")
    parent = np.full(n, -1, dtype=np.int64)
    seen = np.zeros(n, dtype=bool)
    children = [[] for _ in range(n)]
    order = []
    roots = []
    for r in range(n):
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        stack = [r]
        while stack:
            v = stack.pop()
            order.append(v)
            kids = [w for w in graph.adjacency[v] if not seen[w]]
            for w in kids:
                seen[w] = True
                parent[w] = v
            children[v] = kids
            stack.extend(reversed(kids))
    return TreeDecomposition(tuple(roots), parent, tuple(tuple(c) for c in children),
                             tuple(order))


def _child_range(tables, kids, b):
    """Feasible ``(lo, hi)`` count of investing children when the parent plays ``b``."""
    lo = 0
    hi = len(kids)
    for j in kids:
        w = tables[j].witness[b]
        can0 = w[0] != NO_WITNESS
        can1 = w[1] != NO_WITNESS
        if not (can0 or can1):
            return None
        if not can0:
            lo += 1
        elif not can1:
            hi -= 1
    return lo, hi


def _first_feasible(d, c, tol, lo, hi, shift, invest):
    for t in range(lo, hi + 1):
        v = d[t + shift]
        if (v >= c - tol) if invest else (v <= c + tol):
            return t
    return NO_WITNESS


def downstream_pass(instance: BnpgInstance, decomp: TreeDecomposition):
    """Build every node's table, or return ``None`` when no PSNE exists."""
    n = instance.n
    tol = instance.tol
    costs = instance.costs.tolist()
    tables = [None] * n
    is_root = decomp.parent < 0
    for v in reversed(decomp.order):
        kids = decomp.children[v]
        d = instance.tables[v]
        d = (d[1:] - d[:-1]).tolist()
        c = costs[v]
        witness = np.full((2, 2), NO_WITNESS, dtype=np.int64)
        parent_actions = (0,) if is_root[v] else (0, 1)
        for b in (0, 1):
            rng = _child_range(tables, kids, b)
            if rng is None:
                continue
            for a in parent_actions:
                witness[a, b] = _first_feasible(d, c, tol, rng[0], rng[1], a, b == 1)
        table = ConditionalBestResponseTable(v, witness)
        if not table.entries():
            return None
        tables[v] = table
    return tables


def upstream_pass(instance: BnpgInstance, decomp: TreeDecomposition, tables) -> np.ndarray:
    """Materialise a PSNE from the tables; roots prefer not investing."""
    n = instance.n
    x = np.full(n, -1, dtype=np.int64)
    count = np.full(n, -1, dtype=np.int64)
    for r in decomp.roots:
        acts = tables[r].actions(0)
        if not acts:
            raise TableInconsistency(f"root {r} has no best response")
        x[r] = acts[0]
        count[r] = tables[r].witness[0, x[r]]
    for v in decomp.order:
        if x[v] < 0 or count[v] < 0:
            raise TableInconsistency(f"node {v} was not assigned")
        b = int(x[v])
        need = int(count[v])
        flexible = []
        for j in decomp.children[v]:
            acts = tables[j].actions(b)
            if len(acts) == 1:
                x[j] = acts[0]
                need -= acts[0]
            elif len(acts) == 2:
                flexible.append(j)
            else:
                raise TableInconsistency(f"child {j} of {v} has no response to {b}")
        if not 0 <= need <= len(flexible):
            raise TableInconsistency(f"witness {count[v]} unreachable at node {v}")
        for pos, j in enumerate(flexible):
            x[j] = 1 if pos < need else 0
        for j in decomp.children[v]:
            count[j] = tables[j].witness[b, x[j]]
    return x


def solve_tree(instance: BnpgInstance, forest: bool = False) -> SolveReport:
    """Exact PSNE (or a certificate that none exists) on a tree.

    With ``forest=True`` every component is rooted separately, which is the
    same as solving the components independently.
    """
    decomp = root_and_order(instance.graph, forest=forest)
    tables = downstream_pass(instance, decomp)
    if tables is None:
        return SolveReport(Status.NO_PSNE, "tree")
    x = upstream_pass(instance, decomp, tables)
    return SolveReport(Status.PSNE, "tree", x, 0.0, {"roots": len(decomp.roots)})
