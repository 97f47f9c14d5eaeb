"""The pursuit game as a pure state machine.

Round structure: in round 0 the cops place, then the robber places
(seeing them).  Every later round is one robber half-move and one cop
half-move, in the order fixed by the config; capture is checked after
each half-move, so a robber stepping onto a cop is caught in that round
without a cop reply.  Vertex sharing among cops is legal.

Strategies are immutable templates; per-game state lives in an opaque
hashable memory value the engine threads through `respond` calls.  A
strategy's `respond` must be a pure function of (state, memory) so that
:func:`best_response_length` can memoize over it.
"""
from __future__ import annotations

import enum
import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Callable, Hashable, TextIO

from .graphs import Graph


class EscapeType:
    """Singleton sentinel for 'the robber is never captured'.

    Deliberately supports no arithmetic; adding to it is a bug.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ESCAPE"


ESCAPE = EscapeType()
CaptureValue = int | EscapeType


def is_escape(value: CaptureValue) -> bool:
    return value is ESCAPE


class MoveOrder(enum.Enum):
    ROBBER_FIRST = "robber-first"
    COPS_FIRST = "cops-first"


class Side(enum.Enum):
    COPS = "cops"
    ROBBER = "robber"


class IllegalMoveError(RuntimeError):
    """A strategy returned a move that is not a stay or an adjacent step."""


class ResourceBudgetError(RuntimeError):
    """A search or solve exceeded its configured state budget."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


@dataclass(frozen=True)
class GameConfig:
    cop_count: int
    move_order: MoveOrder = MoveOrder.ROBBER_FIRST
    max_rounds: int | None = None  # None: 4 * |V|^2

    def __post_init__(self):
        if self.cop_count < 1:
            raise ValueError("cop_count must be >= 1")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")

    def effective_max_rounds(self, g: Graph) -> int:
        if self.max_rounds is not None:
            return self.max_rounds
        return 4 * g.vertex_count * g.vertex_count


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]
    robber: int | None
    round: int
    to_move: Side

    @property
    def captured(self) -> bool:
        return self.robber is not None and self.robber in self.cops


@dataclass(frozen=True)
class Outcome:
    captured: bool
    round: int

    def __str__(self) -> str:
        return f"{'CAPTURED' if self.captured else 'SURVIVED'} {self.round}"


@dataclass(frozen=True)
class RoundRecord:
    """Positions after one full round (or after a capturing half-move)."""

    index: int
    robber: int
    cops: tuple[int, ...]


@dataclass
class Trace:
    graph: Graph
    config: GameConfig
    cops_start: tuple[int, ...]
    robber_start: int
    rounds: list[RoundRecord] = field(default_factory=list)
    outcome: Outcome | None = None


class CopStrategy(ABC):
    """Cop-side player: placement plus a per-round response.

    Both sides see the full state.  `respond` receives the state at the
    cops' half-move and the strategy memory, and returns the new cop
    tuple (each entry in N[old position]) plus the new memory.
    """

    @abstractmethod
    def place(self, g: Graph) -> tuple[tuple[int, ...], Hashable]: ...

    def observe_placement(self, g: Graph, state: GameState, memory: Hashable) -> Hashable:
        """Called once after the robber placed; default keeps memory."""
        return memory

    @abstractmethod
    def respond(self, g: Graph, state: GameState, memory: Hashable) -> tuple[tuple[int, ...], Hashable]: ...


class RobberStrategy(ABC):
    @abstractmethod
    def place(self, g: Graph, cops: tuple[int, ...]) -> tuple[int, Hashable]: ...

    @abstractmethod
    def respond(self, g: Graph, state: GameState, memory: Hashable) -> tuple[int, Hashable]: ...


def legal_cop_moves(g: Graph, cops: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All ordered cop move tuples: the product of N[c_i] over the cops."""
    options = [g.closed_neighborhood(c) for c in cops]
    return list(itertools.product(*options))


def _check_vertex(g: Graph, v: int, who: str) -> None:
    if not isinstance(v, int) or not 0 <= v < g.vertex_count:
        raise IllegalMoveError(f"{who} chose invalid vertex {v!r}")


def _check_robber_move(g: Graph, old: int, new: int) -> None:
    _check_vertex(g, new, "robber")
    if new != old and not g.has_edge(old, new):
        raise IllegalMoveError(f"robber moved {old} -> {new}, not a stay or an edge")


def _check_cop_moves(g: Graph, old: tuple[int, ...], new: tuple[int, ...]) -> None:
    if len(new) != len(old):
        raise IllegalMoveError(f"cops returned {len(new)} positions for {len(old)} cops")
    for i, (a, b) in enumerate(zip(old, new)):
        _check_vertex(g, b, f"cop {i}")
        if b != a and not g.has_edge(a, b):
            raise IllegalMoveError(f"cop {i} moved {a} -> {b}, not a stay or an edge")


def advance_round(
    g: Graph,
    config: GameConfig,
    state: GameState,
    robber_strategy: RobberStrategy,
    robber_memory: Hashable,
    cop_strategy: CopStrategy,
    cop_memory: Hashable,
) -> tuple[GameState, Hashable, Hashable, RoundRecord]:
    """Execute one full round; capture ends the round mid-way."""
    if state.robber is None:
        raise ValueError("advance_round before placements are complete")
    if state.captured:
        raise ValueError("advance_round on a finished game")
    rnd = state.round + 1
    if config.move_order is MoveOrder.ROBBER_FIRST:
        r_new, robber_memory = robber_strategy.respond(
            g, replace(state, to_move=Side.ROBBER), robber_memory
        )
        _check_robber_move(g, state.robber, r_new)
        if r_new in state.cops:
            new_state = GameState(state.cops, r_new, rnd, Side.ROBBER)
            return new_state, robber_memory, cop_memory, RoundRecord(rnd, r_new, state.cops)
        mid = GameState(state.cops, r_new, state.round, Side.COPS)
        c_new, cop_memory = cop_strategy.respond(g, mid, cop_memory)
        _check_cop_moves(g, state.cops, c_new)
        new_state = GameState(c_new, r_new, rnd, Side.ROBBER)
        return new_state, robber_memory, cop_memory, RoundRecord(rnd, r_new, c_new)
    else:
        c_new, cop_memory = cop_strategy.respond(
            g, replace(state, to_move=Side.COPS), cop_memory
        )
        _check_cop_moves(g, state.cops, c_new)
        if state.robber in c_new:
            new_state = GameState(c_new, state.robber, rnd, Side.COPS)
            return new_state, robber_memory, cop_memory, RoundRecord(rnd, state.robber, c_new)
        mid = GameState(c_new, state.robber, state.round, Side.ROBBER)
        r_new, robber_memory = robber_strategy.respond(g, mid, robber_memory)
        _check_robber_move(g, state.robber, r_new)
        new_state = GameState(c_new, r_new, rnd, Side.COPS)
        return new_state, robber_memory, cop_memory, RoundRecord(rnd, r_new, c_new)


def simulate(
    g: Graph,
    config: GameConfig,
    cop_strategy: CopStrategy,
    robber_strategy: RobberStrategy,
) -> Trace:
    """Play placements plus rounds until capture or the round cutoff."""
    cops0, cop_memory = cop_strategy.place(g)
    if len(cops0) != config.cop_count:
        raise IllegalMoveError(
            f"cop strategy placed {len(cops0)} cops, config wants {config.cop_count}"
        )
    for i, c in enumerate(cops0):
        _check_vertex(g, c, f"cop {i}")
    r0, robber_memory = robber_strategy.place(g, cops0)
    _check_vertex(g, r0, "robber")

    first_side = Side.ROBBER if config.move_order is MoveOrder.ROBBER_FIRST else Side.COPS
    state = GameState(tuple(cops0), r0, 0, first_side)
    cop_memory = cop_strategy.observe_placement(g, state, cop_memory)
    trace = Trace(g, config, tuple(cops0), r0)
    if state.captured:
        trace.outcome = Outcome(True, 0)
        return trace
    limit = config.effective_max_rounds(g)
    for _ in range(limit):
        state, robber_memory, cop_memory, record = advance_round(
            g, config, state, robber_strategy, robber_memory, cop_strategy, cop_memory
        )
        trace.rounds.append(record)
        if state.captured:
            trace.outcome = Outcome(True, state.round)
            return trace
    trace.outcome = Outcome(False, limit)
    return trace


# --- best response ----------------------------------------------------------


def best_response_length(
    g: Graph,
    config: GameConfig,
    cop_strategy: CopStrategy,
    memo_budget: int = 2_000_000,
) -> CaptureValue:
    """Longest survival any robber can force against the fixed cop strategy.

    Exhaustive DFS over robber choices with memoization on the
    round-invariant state (cop tuple, robber vertex, strategy memory).
    A reachable cycle of uncaptured states means the robber escapes
    forever.  Requires the strategy's `respond` to be deterministic,
    independent of the round counter, and to keep its memory values
    hashable and finitely many.
    """
    closed = [g.closed_neighborhood(v) for v in range(g.vertex_count)]
    cops0, memory0 = cop_strategy.place(g)
    if len(cops0) != config.cop_count:
        raise IllegalMoveError(
            f"cop strategy placed {len(cops0)} cops, config wants {config.cop_count}"
        )
    cops0 = tuple(cops0)
    robber_first = config.move_order is MoveOrder.ROBBER_FIRST

    memo: dict[tuple, CaptureValue] = {}
    on_stack: set[tuple] = set()

    def cop_reply(cops: tuple[int, ...], robber: int, memory) -> tuple[tuple[int, ...], Hashable]:
        state = GameState(cops, robber, 1, Side.COPS)
        new_cops, new_memory = cop_strategy.respond(g, state, memory)
        _check_cop_moves(g, cops, new_cops)
        return tuple(new_cops), new_memory

    def successors(key: tuple) -> list[tuple | None]:
        """None entries are capture-this-round branches (value 1).

        Moves onto a cop are dropped: staying is always available to an
        uncaptured robber, and every branch is worth at least one round,
        so a suicide can never raise the max.
        """
        cops, robber, memory = key
        out: list[tuple | None] = []
        if robber_first:
            for r_new in closed[robber]:
                if r_new in cops:
                    continue
                new_cops, new_memory = cop_reply(cops, r_new, memory)
                if r_new in new_cops:
                    out.append(None)
                else:
                    out.append((new_cops, r_new, new_memory))
        else:
            new_cops, new_memory = cop_reply(cops, robber, memory)
            if robber in new_cops:
                return [None]
            for r_new in closed[robber]:
                if r_new not in new_cops:
                    out.append((new_cops, r_new, new_memory))
        return out

    def evaluate(root: tuple) -> CaptureValue:
        if root in memo:
            return memo[root]
        # Iterative DFS; frames are [key, successor list, index, best, escape?].
        stack = [[root, successors(root), 0, 0, False]]
        on_stack.add(root)
        while stack:
            frame = stack[-1]
            key, succ, idx, best, escaped = frame
            descended = False
            while idx < len(succ) and not escaped:
                child = succ[idx]
                if child is None:
                    best = max(best, 1)
                    idx += 1
                    continue
                if child in memo:
                    value = memo[child]
                    if value is ESCAPE:
                        escaped = True
                    else:
                        best = max(best, 1 + value)
                        idx += 1
                    continue
                if child in on_stack:
                    escaped = True  # robber can force a cycle
                    continue
                if len(memo) + len(on_stack) > memo_budget:
                    raise ResourceBudgetError(
                        f"best-response search exceeded {memo_budget} states",
                        len(memo) + len(on_stack),
                    )
                frame[2], frame[3], frame[4] = idx, best, escaped
                on_stack.add(child)
                stack.append([child, successors(child), 0, 0, False])
                descended = True
                break
            if descended:
                continue
            memo[key] = ESCAPE if escaped else best
            on_stack.discard(key)
            stack.pop()
        return memo[root]

    best: CaptureValue = 0
    for r0 in range(g.vertex_count):
        if r0 in cops0:
            continue  # placement value 0; never the robber's best
        state0 = GameState(cops0, r0, 0, Side.ROBBER if robber_first else Side.COPS)
        memory = cop_strategy.observe_placement(g, state0, memory0)
        value = evaluate((cops0, r0, memory))
        if value is ESCAPE:
            return ESCAPE
        if value > best:  # type: ignore[operator]
            best = value
    return best


# --- trace text format ------------------------------------------------------
#
# Header lines "#graph <label>", "#order robber-first|cops-first",
# "#cops k"; then "P r c1 ... ck" for placement and one line
# "t r c1 ... ck" per round with positions AFTER the round; final line
# "CAPTURED t" or "SURVIVED t".


def format_trace(
    trace: Trace,
    graph_label: str = "<memory>",
    vertex_label: Callable[[int], str] | None = None,
) -> str:
    lab = vertex_label if vertex_label is not None else str
    lines = [
        f"#graph {graph_label}",
        f"#order {trace.config.move_order.value}",
        f"#cops {trace.config.cop_count}",
        "P " + lab(trace.robber_start) + " " + " ".join(lab(c) for c in trace.cops_start),
    ]
    for rec in trace.rounds:
        lines.append(
            f"{rec.index} " + lab(rec.robber) + " " + " ".join(lab(c) for c in rec.cops)
        )
    if trace.outcome is None:
        raise ValueError("trace has no outcome")
    lines.append(str(trace.outcome))
    return "\n".join(lines) + "\n"


def write_trace(trace: Trace, out: TextIO, graph_label: str = "<memory>",
                vertex_label: Callable[[int], str] | None = None) -> None:
    out.write(format_trace(trace, graph_label, vertex_label))


@dataclass
class RawTrace:
    """Parsed trace text, positions kept as label strings."""

    graph_label: str
    order: MoveOrder
    cop_count: int
    placement: list[str]
    rounds: list[tuple[int, list[str]]]
    outcome_captured: bool
    outcome_round: int


def parse_trace(text: str) -> RawTrace:
    graph_label = ""
    order = MoveOrder.ROBBER_FIRST
    cop_count = 0
    placement: list[str] = []
    rounds: list[tuple[int, list[str]]] = []
    captured = False
    final_round = -1
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#graph "):
            graph_label = line[len("#graph "):]
        elif line.startswith("#order "):
            order = MoveOrder(line[len("#order "):])
        elif line.startswith("#cops "):
            cop_count = int(line.split()[1])
        elif line.startswith("P "):
            placement = line.split()[1:]
        elif line.startswith("CAPTURED ") or line.startswith("SURVIVED "):
            word, num = line.split()
            captured = word == "CAPTURED"
            final_round = int(num)
        else:
            parts = line.split()
            rounds.append((int(parts[0]), parts[1:]))
    if final_round < 0:
        raise ValueError("trace text has no outcome line")
    return RawTrace(graph_label, order, cop_count, placement, rounds, captured, final_round)


# --- scripted strategies (replay) -------------------------------------------


class ScriptedCop(CopStrategy):
    """Replays a fixed placement and per-round cop tuples."""

    def __init__(self, placement: tuple[int, ...], moves: list[tuple[int, ...]]):
        self.placement = tuple(placement)
        self.moves = [tuple(m) for m in moves]

    def place(self, g: Graph):
        return self.placement, 0

    def respond(self, g: Graph, state: GameState, memory):
        return self.moves[memory], memory + 1


class ScriptedRobber(RobberStrategy):
    def __init__(self, placement: int, moves: list[int]):
        self.placement = placement
        self.moves = list(moves)

    def place(self, g: Graph, cops):
        return self.placement, 0

    def respond(self, g: Graph, state: GameState, memory):
        return self.moves[memory], memory + 1


def replay_trace(trace: Trace) -> Trace:
    """Re-run a trace through the engine; the result must be identical."""
    # A capturing half-move ends its round early; the scripted player on
    # the other side simply never gets asked for the phantom move.
    robber_moves = [rec.robber for rec in trace.rounds]
    cop_moves = [rec.cops for rec in trace.rounds]
    cop = ScriptedCop(trace.cops_start, cop_moves)
    robber = ScriptedRobber(trace.robber_start, robber_moves)
    return simulate(trace.graph, trace.config, cop, robber)
