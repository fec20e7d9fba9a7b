"""Deterministic force-directed 2-D spatialization.

Connected nodes attract with a force linear in their distance; every node
pair repels with a force proportional to the product of their degrees plus
one, divided by the distance. Positions advance by a fixed-step synchronous
update (all forces are evaluated on the pre-step snapshot) with a per-node
displacement cap, which makes runs reproducible bit for bit.

Repulsion is evaluated exactly over all O(n^2) pairs; the graphs this
package targets stay in the low hundreds of nodes, where exactness beats
any spatial-index approximation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from coauthnet.graph import Graph, NodeId

_SEED_MASK = (1 << 64) - 1
_JITTER_MAGNITUDE = 1e-6


class LayoutError(RuntimeError):
    """Non-finite forces or an otherwise unusable layout state."""


@dataclass(frozen=True)
class LayoutParams:
    """Force coefficients and integration schedule.

    ``attraction`` scales the linear spring force on connected pairs;
    ``repulsion`` scales the (deg+1)(deg+1)/d force between all pairs.
    ``weight_exponent`` raises edge weights to this power as an attraction
    multiplier; the default 0 ignores weights entirely.
    """

    attraction: float = 1.0
    repulsion: float = 1.0
    iterations: int = 1000
    step: float = 0.01
    max_displacement: float = 1.0
    seed: int = 42
    weight_exponent: float = 0.0

    def __post_init__(self) -> None:
        if self.attraction <= 0 or self.repulsion <= 0:
            raise ValueError("force coefficients must be positive")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.step <= 0 or self.max_displacement <= 0:
            raise ValueError("step and max_displacement must be positive")


@dataclass
class LayoutState:
    """Per-node 2-D coordinates, in graph node order."""

    nodes: tuple[NodeId, ...]
    coords: np.ndarray  # shape (len(nodes), 2), float64
    mean_net_force: float | None = None  # convergence diagnostic set by run_layout

    def __post_init__(self) -> None:
        self.coords = np.asarray(self.coords, dtype=np.float64).reshape(len(self.nodes), 2)

    @property
    def positions(self) -> dict[NodeId, tuple[float, float]]:
        return {node: (float(x), float(y)) for node, (x, y) in zip(self.nodes, self.coords)}

    def position(self, node: NodeId) -> tuple[float, float]:
        x, y = self.coords[self._index(node)]
        return float(x), float(y)

    def _index(self, node: NodeId) -> int:
        try:
            return self.nodes.index(node)
        except ValueError:
            raise LayoutError(f"unknown node {node!r}") from None


def _jitter_vector(seed: int, index: int, attempt: int) -> np.ndarray:
    rng = np.random.default_rng([seed & _SEED_MASK, index, attempt])
    angle = rng.uniform(0.0, 2.0 * np.pi)
    return _JITTER_MAGNITUDE * np.array([np.cos(angle), np.sin(angle)])


def _separated(coords: np.ndarray, seed: int) -> np.ndarray:
    """Coordinates with exact duplicates nudged apart deterministically.

    Returns the input array unchanged (same object) when all rows are
    distinct, so the common path costs nothing and stays bit-identical.
    """
    seen: dict[tuple[float, float], int] = {}
    out = coords
    for i, row in enumerate(coords):
        key = (float(row[0]), float(row[1]))
        if key not in seen:
            seen[key] = i
            continue
        if out is coords:
            out = coords.copy()
        attempt = 0
        while True:
            candidate = coords[i] + _jitter_vector(seed, i, attempt)
            key = (float(candidate[0]), float(candidate[1]))
            if key not in seen:
                break
            attempt += 1
        seen[key] = i
        out[i] = candidate
    return out


def init_positions(graph: Graph, seed: int) -> LayoutState:
    """Seeded uniform placement in the unit disk; coincident draws are redrawn."""
    rng = np.random.default_rng(seed & _SEED_MASK)
    taken: set[tuple[float, float]] = set()
    points = np.zeros((graph.node_count, 2))
    for i in range(graph.node_count):
        while True:
            x, y = rng.uniform(-1.0, 1.0, 2)
            if x * x + y * y <= 1.0 and (x, y) not in taken:
                break
        taken.add((x, y))
        points[i] = (x, y)
    return LayoutState(graph.nodes, points)


def attraction_force(
    state: LayoutState, n1: NodeId, n2: NodeId, params: LayoutParams
) -> np.ndarray:
    """Spring force on ``n1`` toward ``n2``: magnitude attraction * distance.

    Coincident nodes yield the zero vector (the direction is undefined, and
    the linear law vanishes at zero distance anyway).
    """
    if n1 == n2:
        raise LayoutError("attraction undefined for a node with itself")
    p1 = state.coords[state._index(n1)]
    p2 = state.coords[state._index(n2)]
    return params.attraction * (p2 - p1)


def repulsion_force(
    state: LayoutState, graph: Graph, n1: NodeId, n2: NodeId, params: LayoutParams
) -> np.ndarray:
    """Force on ``n1`` pushing it away from ``n2``.

    Magnitude is repulsion * (deg(n1)+1)(deg(n2)+1) / d. Exactly coincident
    nodes receive a deterministic 1e-6 jitter before evaluation so the
    force stays finite.
    """
    if n1 == n2:
        raise LayoutError("repulsion undefined for a node with itself")
    i1, i2 = state._index(n1), state._index(n2)
    p1 = state.coords[i1]
    p2 = state.coords[i2]
    attempt = 0
    while np.array_equal(p1, p2):
        p1 = state.coords[i1] + _jitter_vector(params.seed, i1, attempt)
        attempt += 1
    delta = p1 - p2
    distance = float(np.hypot(*delta))
    magnitude = (
        params.repulsion * (graph.degree(n1) + 1) * (graph.degree(n2) + 1) / distance
    )
    return magnitude * delta / distance


class _ForceKernel:
    """Precomputed arrays for evaluating net forces on a whole snapshot."""

    def __init__(self, graph: Graph, params: LayoutParams):
        self.params = params
        n = graph.node_count
        index = {node: i for i, node in enumerate(graph.nodes)}
        deg_plus_one = np.array([graph.degree(node) + 1 for node in graph.nodes], dtype=np.float64)
        self.deg_products = params.repulsion * np.outer(deg_plus_one, deg_plus_one)
        np.fill_diagonal(self.deg_products, 0.0)
        sources, targets, weights = [], [], []
        for a, b, w in graph.edges():
            if a == b:
                continue  # a self-loop exerts no pairwise force
            sources.append(index[a])
            targets.append(index[b])
            weights.append(w)
        self.edge_src = np.array(sources, dtype=np.intp)
        self.edge_dst = np.array(targets, dtype=np.intp)
        edge_w = np.array(weights, dtype=np.float64)
        self.edge_pull = params.attraction * edge_w**params.weight_exponent
        self.n = n

    def _repulsion_rows(self, coords: np.ndarray, rows: slice) -> np.ndarray:
        delta = coords[rows, None, :] - coords[None, :, :]
        dist_sq = (delta * delta).sum(axis=2)
        row_indices = np.arange(rows.start, rows.stop)
        dist_sq[np.arange(len(row_indices)), row_indices] = np.inf  # no self-repulsion
        # A squared distance that underflows to zero leaves an infinite
        # coefficient here on purpose; the step-level finiteness check turns
        # that into a diagnostic instead of silently dropping the force.
        # Row-wise sums reduce along axis 1 with a stride pattern independent of
        # the number of rows in the block, keeping chunked results bit-identical.
        with np.errstate(divide="ignore", invalid="ignore"):
            coef = self.deg_products[rows] / dist_sq
            return (coef[:, :, None] * delta).sum(axis=1)

    def net_forces(self, coords: np.ndarray, workers: int = 1) -> np.ndarray:
        if self.n == 0:
            return np.zeros((0, 2))
        eval_coords = _separated(coords, self.params.seed)
        if workers <= 1 or self.n < 2 * workers:
            forces = self._repulsion_rows(eval_coords, slice(0, self.n))
        else:
            # Chunking over rows leaves each row's reduction untouched, so the
            # result is bit-identical for every worker count.
            bounds = np.linspace(0, self.n, workers + 1, dtype=int)
            chunks = [slice(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda rows: self._repulsion_rows(eval_coords, rows), chunks))
            forces = np.vstack(parts)
        if len(self.edge_src):
            # Attraction uses the raw coordinates: coincident endpoints pull with
            # the zero vector rather than a jittered epsilon force.
            pull = self.edge_pull[:, None] * (coords[self.edge_dst] - coords[self.edge_src])
            np.add.at(forces, self.edge_src, pull)
            np.add.at(forces, self.edge_dst, -pull)
        return forces


def net_forces(
    state: LayoutState, graph: Graph, params: LayoutParams, *, workers: int = 1
) -> np.ndarray:
    """Net force on every node (repulsion over all pairs plus attraction over
    incident edges), evaluated on the given snapshot."""
    _check_state(state, graph)
    return _ForceKernel(graph, params).net_forces(state.coords, workers)


def _check_state(state: LayoutState, graph: Graph) -> None:
    if state.nodes != graph.nodes:
        raise LayoutError("layout state does not match the graph's node set")


def _advance(coords: np.ndarray, forces: np.ndarray, params: LayoutParams) -> np.ndarray:
    if not np.isfinite(forces).all():
        raise LayoutError(
            "non-finite force encountered; the step/coefficient combination has blown up"
        )
    displacement = forces * params.step
    norms = np.linalg.norm(displacement, axis=1)
    over = norms > params.max_displacement
    if over.any():
        displacement[over] *= (params.max_displacement / norms[over])[:, None]
    return coords + displacement


def step(state: LayoutState, graph: Graph, params: LayoutParams, *, workers: int = 1) -> LayoutState:
    """One synchronous update: every displacement derives from the pre-step
    snapshot, scaled by ``step`` and clamped to ``max_displacement``."""
    _check_state(state, graph)
    kernel = _ForceKernel(graph, params)
    forces = kernel.net_forces(state.coords, workers)
    return LayoutState(state.nodes, _advance(state.coords, forces, params))


def run_layout(graph: Graph, params: LayoutParams, *, workers: int = 1) -> LayoutState:
    """Seeded initialization followed by ``params.iterations`` synchronous
    steps. Deterministic given (graph, params); the returned state carries the
    final mean net-force magnitude as a convergence diagnostic."""
    state = init_positions(graph, params.seed)
    if graph.node_count == 0:
        state.mean_net_force = 0.0
        return state
    kernel = _ForceKernel(graph, params)
    coords = state.coords
    for _ in range(params.iterations):
        coords = _advance(coords, kernel.net_forces(coords, workers), params)
    final_forces = kernel.net_forces(coords, workers)
    residual = float(np.linalg.norm(final_forces, axis=1).mean())
    return LayoutState(graph.nodes, coords, mean_net_force=residual)
