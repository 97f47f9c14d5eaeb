"""Exact capture times by retrograde analysis, plus a naive oracle.

State space and conventions
---------------------------

Values live on two-ply boundary states (cop tuple, robber vertex) with
the robber uncaptured; cop tuples are canonicalized as sorted multisets
because the value function cannot distinguish the cops.  Captured
states are implicitly 0 and never stored.

For robber-first rounds the stored value V is taken with the robber to
move and satisfies

    V(c, r) = max over r' in N[r] minus set(c) of
              min over c' in M(c) of (1 if r' in set(c') else 1 + V(c', r'))

where M(c) is the product of the cops' closed neighborhoods.  For
cops-first rounds the stored value W is taken with the cops to move:

    W(c, r) = min over c' in M(c) of
              (1 if r in set(c') else
               1 + max over r' in N[r] minus set(c') of W(c', r')).

States the propagation never resolves have value ESCAPE.  The capture
time of the graph is min over cop placements of the max over robber
placements (0 when the robber must place on a cop).

Algorithm
---------

Retrograde analysis: seed every one-move-capture position at value 1,
then propagate backwards processing values in nondecreasing order.
Min-type nodes resolve at their first resolved successor; max-type
nodes keep an unresolved-successor counter and resolve when it hits
zero, at which point the current processing value is their maximum.
The naive oracle recomputes the same fixed point by repeated full
passes over all states (no canonicalization, no ordering) and is kept
structurally independent on purpose.

Inputs are immutable, a solve owns its tables exclusively until it
returns, and returned results are immutable, so independent solves can
run concurrently and results can be shared freely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .engine import (
    CaptureValue,
    CopStrategy,
    ESCAPE,
    GameState,
    Graph,
    MoveOrder,
    ResourceBudgetError,
    RobberStrategy,
    is_escape,
)

DEFAULT_STATE_BUDGET = 50_000_000
DEFAULT_NAIVE_BUDGET = 1_000_000


@dataclass(frozen=True)
class ValueTable:
    """Game values for every uncaptured (sorted cop tuple, robber) state."""

    graph: Graph
    cop_count: int
    move_order: MoveOrder
    value: dict[tuple[tuple[int, ...], int], CaptureValue]

    def value_of(self, cops: Iterable[int], robber: int) -> CaptureValue:
        key = tuple(sorted(cops))
        if robber in key:
            return 0
        return self.value[(key, robber)]

    def dump_lines(self) -> list[str]:
        """Lines "c1 ... ck r v" with v an integer or ESC, sorted."""
        out = []
        for (cops, r), v in sorted(self.value.items()):
            tag = "ESC" if is_escape(v) else str(v)
            out.append(" ".join(str(c) for c in cops) + f" {r} {tag}")
        return out


@dataclass(frozen=True)
class SolveResult:
    capture_time: CaptureValue
    central_tuples: tuple[tuple[int, ...], ...]
    table: ValueTable
    resolution_order: tuple[tuple[tuple[int, ...], int, int], ...] | None = None


def dump_value_table(table: ValueTable) -> str:
    return "\n".join(table.dump_lines()) + "\n"


def _closed_lists(g: Graph) -> list[tuple[int, ...]]:
    return [g.closed_neighborhood(v) for v in range(g.vertex_count)]


def _cop_configuration_space(g: Graph, k: int, closed):
    """Sorted cop tuples, their vertex sets, and the canonical move relation.

    The move relation is symmetric: c' is reachable from c in one cop
    half-move iff c is reachable from c', so one table serves both as
    successor and predecessor map.
    """
    n = g.vertex_count
    tuples = list(itertools.combinations_with_replacement(range(n), k))
    index = {t: i for i, t in enumerate(tuples)}
    sets = [frozenset(t) for t in tuples]
    moves: list[list[int]] = []
    for t in tuples:
        seen = set()
        for mv in itertools.product(*(closed[c] for c in t)):
            seen.add(index[tuple(sorted(mv))])
        moves.append(sorted(seen))
    return tuples, index, sets, moves


def _estimate_pairs(g: Graph, k: int) -> int:
    # Upper estimate of state-successor pairs without building anything big.
    n = g.vertex_count
    tuple_count = 1
    for i in range(k):
        tuple_count = tuple_count * (n + i) // (i + 1)
    max_branch = (max(g.degree(v) for v in range(n)) + 1) ** k
    avg_deg = 2 * g.edge_count / n + 1
    return int(tuple_count * n * (avg_deg + max_branch))


def solve(
    g: Graph,
    k: int,
    order: MoveOrder = MoveOrder.ROBBER_FIRST,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    record_order: bool = False,
) -> SolveResult:
    """Exact capture time, central tuples, and the full value table."""
    if k < 1:
        raise ValueError("solve needs k >= 1")
    estimate = _estimate_pairs(g, k)
    if estimate > state_budget:
        raise ResourceBudgetError(
            f"solve budget exceeded: ~{estimate} state-successor pairs "
            f"> budget {state_budget}",
            estimate,
        )
    n = g.vertex_count
    closed = _closed_lists(g)
    tuples, _, sets, moves = _cop_configuration_space(g, k, closed)
    T = len(tuples)
    covered = []
    for t in tuples:
        cov = set()
        for c in t:
            cov.update(closed[c])
        covered.append(cov)

    # State ids: ti * n + r.  Sentinels: -2 invalid (robber on a cop),
    # -1 unresolved.  `first` holds the min-type values (U for
    # robber-first, W for cops-first); `last` holds the max-type values
    # (V resp. X) resolved by counters in `pending`.
    size = T * n
    first = [-2] * size
    last = [-2] * size
    pending = [0] * size
    buckets: list[list[tuple[int, int]]] = [[], []]  # kind 0 = min-type, 1 = max-type
    order_log: list[tuple[tuple[int, ...], int, int]] = []
    robber_first = order is MoveOrder.ROBBER_FIRST

    for ti in range(T):
        ts = sets[ti]
        cov = covered[ti]
        base = ti * n
        for r in range(n):
            if r in ts:
                continue
            sid = base + r
            first[sid] = -1
            last[sid] = -1
            pending[sid] = sum(1 for x in closed[r] if x not in ts)
            if r in cov:
                first[sid] = 1
                buckets[1].append((0, sid))
                if record_order and not robber_first:
                    order_log.append((tuples[ti], r, 1))

    value = 1
    while value < len(buckets):
        queue = buckets[value]
        i = 0
        while i < len(queue):
            kind, sid = queue[i]
            i += 1
            ti, r = divmod(sid, n)
            if kind == 0:
                # Min-type state resolved at `value`; its predecessors are
                # max-type states over robber moves with the same cop tuple.
                ts = sets[ti]
                base = ti * n
                for rp in closed[r]:
                    if rp in ts:
                        continue
                    psid = base + rp
                    if last[psid] != -1:
                        continue
                    pending[psid] -= 1
                    if pending[psid] == 0:
                        last[psid] = value
                        queue.append((1, psid))
                        if record_order and robber_first:
                            order_log.append((tuples[ti], rp, value))
            else:
                # Max-type state resolved at `value`; its predecessors are
                # min-type states one cop half-move away, same robber.
                for tj in moves[ti]:
                    if r in sets[tj]:
                        continue
                    psid = tj * n + r
                    if first[psid] == -1:
                        first[psid] = value + 1
                        while len(buckets) <= value + 1:
                            buckets.append([])
                        buckets[value + 1].append((0, psid))
                        if record_order and not robber_first:
                            order_log.append((tuples[tj], r, value + 1))
        value += 1

    # Robber-first stores the max-type (robber to move) values; cops-first
    # stores the min-type (cops to move) values.
    stored = last if robber_first else first
    table_values: dict[tuple[tuple[int, ...], int], CaptureValue] = {}
    for ti in range(T):
        t = tuples[ti]
        base = ti * n
        for r in range(n):
            sid = base + r
            if stored[sid] == -2:
                continue
            table_values[(t, r)] = ESCAPE if stored[sid] == -1 else stored[sid]

    capture_time: CaptureValue = ESCAPE
    central: list[tuple[int, ...]] = []
    for ti in range(T):
        t = tuples[ti]
        worst = 0
        ok = True
        base = ti * n
        for r in range(n):
            if r in sets[ti]:
                continue
            v = stored[base + r]
            if v == -1:
                ok = False
                break
            if v > worst:
                worst = v
        if not ok:
            continue
        if is_escape(capture_time) or worst < capture_time:
            capture_time = worst
            central = [t]
        elif worst == capture_time:
            central.append(t)

    table = ValueTable(g, k, order, table_values)
    return SolveResult(
        capture_time=capture_time,
        central_tuples=tuple(central),
        table=table,
        resolution_order=tuple(order_log) if record_order else None,
    )


def capture_time_both_orders(
    g: Graph, k: int, *, state_budget: int = DEFAULT_STATE_BUDGET
) -> tuple[CaptureValue, CaptureValue]:
    """(robber-first, cops-first) capture times; equality is a test concern."""
    rf = solve(g, k, MoveOrder.ROBBER_FIRST, state_budget=state_budget)
    cf = solve(g, k, MoveOrder.COPS_FIRST, state_budget=state_budget)
    return rf.capture_time, cf.capture_time


# --- naive oracle ------------------------------------------------------------


def _vmin(a, b):
    # None plays plus-infinity.
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _vmax(a, b):
    if a is None or b is None:
        return None
    return max(a, b)


def naive_value_iteration(
    g: Graph,
    k: int,
    order: MoveOrder = MoveOrder.ROBBER_FIRST,
    *,
    state_budget: int = DEFAULT_NAIVE_BUDGET,
) -> SolveResult:
    """Same values as :func:`solve`, by a structurally different method.

    All values start at escape (None) and the defining recurrence is
    re-evaluated over all states until a full pass changes nothing.
    Cop tuples are deliberately kept ordered (no canonicalization); the
    projection onto sorted tuples checks permutation invariance and
    doubles as the canonicalization soundness oracle.
    """
    if k < 1:
        raise ValueError("naive_value_iteration needs k >= 1")
    n = g.vertex_count
    if n ** (k + 1) > state_budget:
        raise ResourceBudgetError(
            f"naive oracle budget exceeded: {n ** (k + 1)} > {state_budget}",
            n ** (k + 1),
        )
    closed = _closed_lists(g)
    ordered = list(itertools.product(range(n), repeat=k))
    cop_moves = {t: list(itertools.product(*(closed[c] for c in t))) for t in ordered}
    robber_first = order is MoveOrder.ROBBER_FIRST

    val: dict[tuple[tuple[int, ...], int], int | None] = {}
    for t in ordered:
        ts = set(t)
        for r in range(n):
            if r not in ts:
                val[(t, r)] = None

    keys = list(val.keys())
    changed = True
    while changed:
        changed = False
        for key in keys:
            t, r = key
            ts = set(t)
            if robber_first:
                outer = None
                best_outer = -1  # max over robber moves; None dominates
                saw_escape = False
                for rp in closed[r]:
                    if rp in ts:
                        continue
                    inner = None
                    for mv in cop_moves[t]:
                        if rp in mv:
                            inner = _vmin(inner, 1)
                        else:
                            cv = val[(mv, rp)]
                            inner = _vmin(inner, None if cv is None else 1 + cv)
                    if inner is None:
                        saw_escape = True
                    elif inner > best_outer:
                        best_outer = inner
                new = None if saw_escape else best_outer
            else:
                new = None
                for mv in cop_moves[t]:
                    if r in mv:
                        new = _vmin(new, 1)
                        continue
                    mvs = set(mv)
                    inner = -1
                    saw_escape = False
                    for rp in closed[r]:
                        if rp in mvs:
                            continue
                        cv = val[(mv, rp)]
                        if cv is None:
                            saw_escape = True
                            break
                        if cv > inner:
                            inner = cv
                    if not saw_escape:
                        new = _vmin(new, 1 + inner)
            if new != val[key]:
                val[key] = new
                changed = True

    # Project onto canonical tuples, checking permutation invariance.
    canonical: dict[tuple[tuple[int, ...], int], CaptureValue] = {}
    for (t, r), v in val.items():
        ck = (tuple(sorted(t)), r)
        cv: CaptureValue = ESCAPE if v is None else v
        if ck in canonical:
            if canonical[ck] != cv and not (is_escape(canonical[ck]) and is_escape(cv)):
                raise AssertionError(
                    f"value not invariant under cop permutation at {ck}: "
                    f"{canonical[ck]} vs {cv}"
                )
        else:
            canonical[ck] = cv

    capture_time: CaptureValue = ESCAPE
    central: list[tuple[int, ...]] = []
    for t in itertools.combinations_with_replacement(range(n), k):
        ts = set(t)
        worst: CaptureValue = 0
        for r in range(n):
            if r in ts:
                continue
            v = canonical[(t, r)]
            if is_escape(v):
                worst = ESCAPE
                break
            if v > worst:  # type: ignore[operator]
                worst = v
        if is_escape(worst):
            continue
        if is_escape(capture_time) or worst < capture_time:  # type: ignore[operator]
            capture_time = worst
            central = [t]
        elif worst == capture_time:
            central.append(t)

    table = ValueTable(g, k, order, canonical)
    return SolveResult(capture_time=capture_time, central_tuples=tuple(central), table=table)


# --- optimal strategy extraction ---------------------------------------------


class OptimalCop(CopStrategy):
    """Table-driven cops: smallest central placement, argmin responses.

    Ties among equal-value replies go to the lexicographically smallest
    ordered cop tuple.
    """

    def __init__(self, result: SolveResult):
        if is_escape(result.capture_time):
            raise ValueError("no optimal cop strategy: the robber escapes")
        self.result = result
        self.table = result.table

    def place(self, g: Graph):
        return min(self.result.central_tuples), None

    def _reply_value(self, mv: tuple[int, ...], robber: int) -> CaptureValue:
        if robber in mv:
            return 1
        table = self.table
        if table.move_order is MoveOrder.ROBBER_FIRST:
            v = table.value_of(mv, robber)
            return ESCAPE if is_escape(v) else 1 + v
        g = table.graph
        mvs = set(mv)
        worst: CaptureValue = 0
        for rp in g.closed_neighborhood(robber):
            if rp in mvs:
                continue
            v = table.value_of(mv, rp)
            if is_escape(v):
                return ESCAPE
            if v > worst:  # type: ignore[operator]
                worst = v
        return 1 + worst  # type: ignore[operator]

    def respond(self, g: Graph, state: GameState, memory):
        best_mv = None
        best: CaptureValue = ESCAPE
        for mv in itertools.product(*(g.closed_neighborhood(c) for c in state.cops)):
            v = self._reply_value(mv, state.robber)
            if is_escape(v):
                continue
            if best_mv is None or is_escape(best) or v < best:  # type: ignore[operator]
                best = v
                best_mv = mv
        if best_mv is None:
            # Every reply lets the robber escape; stay put.
            best_mv = tuple(state.cops)
        return best_mv, memory


class OptimalRobber(RobberStrategy):
    """Table-driven robber: escape beats any finite value, ties to small ids."""

    def __init__(self, result: SolveResult):
        self.result = result
        self.table = result.table

    def _placement_value(self, cops: tuple[int, ...], r: int) -> CaptureValue:
        if r in cops:
            return 0
        return self.table.value_of(cops, r)

    def place(self, g: Graph, cops: tuple[int, ...]):
        best_r = 0
        best: CaptureValue = self._placement_value(cops, 0)
        for r in range(1, g.vertex_count):
            v = self._placement_value(cops, r)
            if is_escape(best):
                break
            if is_escape(v) or v > best:  # type: ignore[operator]
                best = v
                best_r = r
        return best_r, None

    def _continuation(self, cops: tuple[int, ...], rp: int) -> CaptureValue:
        table = self.table
        if table.move_order is MoveOrder.ROBBER_FIRST:
            # Cops still to move: fold their best reply into the value.
            g = table.graph
            best: CaptureValue = ESCAPE
            for mv in itertools.product(*(g.closed_neighborhood(c) for c in cops)):
                if rp in mv:
                    v: CaptureValue = 1
                else:
                    tv = table.value_of(mv, rp)
                    v = ESCAPE if is_escape(tv) else 1 + tv
                if is_escape(v):
                    continue
                if is_escape(best) or v < best:  # type: ignore[operator]
                    best = v
            return best
        return self.table.value_of(cops, rp)

    def respond(self, g: Graph, state: GameState, memory):
        best_r = None
        best: CaptureValue = 0
        for rp in g.closed_neighborhood(state.robber):
            if rp in state.cops:
                continue
            v = self._continuation(state.cops, rp)
            if best_r is None or is_escape(v) or (not is_escape(best) and v > best):  # type: ignore[operator]
                best_r = rp
                best = v
            if is_escape(v):
                break
        if best_r is None:
            best_r = state.robber  # staying is always legal while uncaptured
        return best_r, memory


def optimal_cop_strategy(result: SolveResult) -> OptimalCop:
    return OptimalCop(result)


def optimal_robber_strategy(result: SolveResult) -> OptimalRobber:
    return OptimalRobber(result)
