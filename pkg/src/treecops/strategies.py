"""Simple players and the by-name strategy registry used by the CLI."""
from __future__ import annotations

from .engine import CopStrategy, GameState, Graph, MoveOrder, RobberStrategy
from .generators import splitmix64_next
from .graphs import bfs_distances
from .products import ProductGraph
from .solver import solve, optimal_cop_strategy, optimal_robber_strategy
from .trees import is_tree
from .tree_strategies import one_cop_strategy, two_cop_strategy


class StationaryCop(CopStrategy):
    """Places at fixed positions and never moves."""

    def __init__(self, positions: tuple[int, ...]):
        self.positions = tuple(positions)

    def place(self, g: Graph):
        return self.positions, None

    def respond(self, g: Graph, state: GameState, memory):
        return state.cops, memory


class RandomCop(CopStrategy):
    """Seeded uniform placement and uniform legal moves."""

    def __init__(self, k: int, seed: int):
        self.k = k
        self.seed = seed

    def place(self, g: Graph):
        state = self.seed
        cops = []
        for _ in range(self.k):
            value, state = splitmix64_next(state)
            cops.append(value % g.vertex_count)
        return tuple(cops), state

    def respond(self, g: Graph, state: GameState, memory):
        rng_state = memory
        new = []
        for c in state.cops:
            options = g.closed_neighborhood(c)
            value, rng_state = splitmix64_next(rng_state)
            new.append(options[value % len(options)])
        return tuple(new), rng_state


class StationaryRobber(RobberStrategy):
    """Places as far from the cops as possible and stays there."""

    def place(self, g: Graph, cops):
        dists = [bfs_distances(g, c) for c in cops]
        best, best_v = -1, -1
        for v in range(g.vertex_count):
            d = min(dist[v] for dist in dists)
            if d > best:
                best, best_v = d, v
        return best_v, None

    def respond(self, g: Graph, state: GameState, memory):
        return state.robber, memory


class RandomRobber(RobberStrategy):
    def __init__(self, seed: int):
        self.seed = seed

    def place(self, g: Graph, cops):
        value, state = splitmix64_next(self.seed)
        return value % g.vertex_count, state

    def respond(self, g: Graph, state: GameState, memory):
        options = g.closed_neighborhood(state.robber)
        value, state = splitmix64_next(memory)
        return options[value % len(options)], state


COP_STRATEGY_NAMES = ("thm1", "lemma2", "optimal", "random", "stationary")
ROBBER_STRATEGY_NAMES = ("optimal", "random", "stationary")


class StrategyMismatchError(ValueError):
    """Strategy name incompatible with the given graph."""


def make_cop_strategy(
    name: str,
    g: Graph,
    k: int,
    *,
    product: ProductGraph | None = None,
    order: MoveOrder = MoveOrder.ROBBER_FIRST,
    seed: int = 0,
    state_budget: int | None = None,
) -> CopStrategy:
    if name == "thm1":
        if product is not None or not is_tree(g):
            raise StrategyMismatchError("'thm1' plays one cop on a single tree")
        if k != 1:
            raise StrategyMismatchError("'thm1' needs exactly one cop")
        return one_cop_strategy(g)
    if name == "lemma2":
        if product is None:
            raise StrategyMismatchError("'lemma2' plays on a product of two trees")
        if k != 2:
            raise StrategyMismatchError("'lemma2' needs exactly two cops")
        return two_cop_strategy(product)
    if name == "optimal":
        kwargs = {} if state_budget is None else {"state_budget": state_budget}
        return optimal_cop_strategy(solve(g, k, order, **kwargs))
    if name == "random":
        return RandomCop(k, seed)
    if name == "stationary":
        return StationaryCop(tuple(0 for _ in range(k)))
    raise StrategyMismatchError(f"unknown cop strategy {name!r}")


def make_robber_strategy(
    name: str,
    g: Graph,
    k: int,
    *,
    order: MoveOrder = MoveOrder.ROBBER_FIRST,
    seed: int = 0,
    state_budget: int | None = None,
) -> RobberStrategy:
    if name == "optimal":
        kwargs = {} if state_budget is None else {"state_budget": state_budget}
        return optimal_robber_strategy(solve(g, k, order, **kwargs))
    if name == "random":
        return RandomRobber(seed)
    if name == "stationary":
        return StationaryRobber()
    raise StrategyMismatchError(f"unknown robber strategy {name!r}")
