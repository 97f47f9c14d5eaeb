"""Constructive cop strategies for trees and products of two trees.

One cop on a tree: start at the diametral-path center and walk toward
the robber every round; this captures within ceil(diam/2).

Two cops on a product of two trees capture within floor((d1+d2)/2)
rounds.  After parity normalization the factors are an odd-diameter
tree (diam 2m+1) and an even-diameter tree (diam 2n).  The cops start
on the middle edge of the first factor's diametral path, both at the
center of the second factor's, and play two phases:

* Equalize: while the robber's distance in the even tree differs from
  both of her distances to the cop pair in the odd tree, the cops
  descend toward her in whichever tree closes that gap.  The tree to
  descend is committed from the distances at the start of the round
  (her reply cannot flip the committed side, only close the gap, and a
  gap closed mid-round stays closed through the committed descent).

* Endgame: once the distances match at a round boundary, the cops fix
  their pair orientation and roots and answer every robber move with a
  five-case response (ascents in either tree run into an immediate
  capture; otherwise the cops descend so that the matching of
  distances, the descendant containment of the robber below both cops,
  and the off-by-one spacing of the pair are all restored).

Orientation (which physical cop plays the near side of the pair) is
left floating while the cops have not yet moved in the odd tree: until
then their odd-tree coordinates are the fixed center pair and the
robber may still cross from one side to the other, mirroring the
labels.  The orientation and the odd tree's root are frozen at the
first odd-tree descent or at endgame entry, whichever comes first.

Every endgame entry and every endgame cop move asserts the full state
invariants; violations raise StrategyInvariantError rather than
guessing a repair.  Parity normalization may extend one factor by a
virtual leaf; the strategy computes on the extended tree but an
assertion guarantees no cop is ever told to stand on the virtual
vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .engine import CopStrategy, GameState, Graph
from .graphs import bfs_distances
from .products import ProductGraph
from .trees import RootedTree, add_leaf, diametral_path, is_tree, next_hop_table, root_tree

PHASE_EQUALIZE = "equalize"
PHASE_ENDGAME = "endgame"


class StrategyInvariantError(RuntimeError):
    """A two-phase strategy invariant failed; carries the full state."""


def _ceil_half(d: int) -> int:
    return (d + 1) // 2


def center_start(t: Graph) -> int:
    """Vertex at 1-based index 1 + ceil(d/2) on a diametral path.

    Its eccentricity is at most ceil(diam/2).
    """
    path = diametral_path(t)
    d = len(path) - 1
    return path[_ceil_half(d)]


class TreeChaseCop(CopStrategy):
    """One cop: place centrally, then always step toward the robber."""

    def __init__(self, tree: Graph):
        if not is_tree(tree):
            raise ValueError("TreeChaseCop plays on a tree")
        self.tree = tree
        self.start = center_start(tree)
        self._hop = next_hop_table(tree)

    def place(self, g: Graph):
        return (self.start,), None

    def respond(self, g: Graph, state: GameState, memory):
        cop = state.cops[0]
        if cop == state.robber:
            return state.cops, memory
        return (self._hop[state.robber][cop],), memory


def one_cop_strategy(t: Graph) -> TreeChaseCop:
    return TreeChaseCop(t)


@dataclass(frozen=True)
class ParityRecord:
    """How the factors were arranged: swap and optional virtual leaf."""

    swapped: bool
    augmented: int | None  # 0/1: which arranged tree carries the leaf
    virtual_vertex: int | None
    anchor: int | None


def normalize_parity(t1: Graph, t2: Graph) -> tuple[Graph, Graph, ParityRecord]:
    """Arrange (odd-diameter, even-diameter) factors, adding a leaf if needed.

    Appending a leaf to a diametral endpoint raises the diameter by
    exactly one and cannot lower the product's capture time, so the
    capture bound computed on the extended tree is still valid.
    """
    d1 = len(diametral_path(t1)) - 1
    d2 = len(diametral_path(t2)) - 1
    if d1 % 2 == 1 and d2 % 2 == 0:
        return t1, t2, ParityRecord(False, None, None, None)
    if d1 % 2 == 0 and d2 % 2 == 1:
        return t2, t1, ParityRecord(True, None, None, None)
    if d1 % 2 == 0:  # both even: first factor gains the leaf
        anchor = diametral_path(t1)[-1]
        a1 = add_leaf(t1, anchor)
        return a1, t2, ParityRecord(False, 0, a1.vertex_count - 1, anchor)
    anchor = diametral_path(t2)[-1]  # both odd: second factor gains the leaf
    a2 = add_leaf(t2, anchor)
    return t1, a2, ParityRecord(False, 1, a2.vertex_count - 1, anchor)


@dataclass(frozen=True)
class PlacementPlan:
    m: int
    n: int
    path1: tuple[int, ...]
    path2: tuple[int, ...]
    cop1: tuple[int, int]
    cop2: tuple[int, int]


def product_initial_placement(a1: Graph, a2: Graph) -> PlacementPlan:
    """Starting squares on the middle edge / center of the diametral paths.

    a1 must have odd diameter 2m+1 and a2 even diameter 2n; the cops
    start at (a_{m+1}, b_{n+1}) and (a_{m+2}, b_{n+1}) in 1-based path
    labels.
    """
    path1 = diametral_path(a1)
    path2 = diametral_path(a2)
    d1, d2 = len(path1) - 1, len(path2) - 1
    if d1 % 2 != 1 or d2 % 2 != 0:
        raise ValueError(f"need diameters (odd, even), got ({d1}, {d2})")
    m, n = (d1 - 1) // 2, d2 // 2
    return PlacementPlan(
        m=m,
        n=n,
        path1=tuple(path1),
        path2=tuple(path2),
        cop1=(path1[m], path2[n]),
        cop2=(path1[m + 1], path2[n]),
    )


@dataclass(frozen=True)
class TwoPhaseMemory:
    """Per-game state of the two-cop strategy (hashable by design)."""

    phase: str
    prev_robber: int | None  # flat vertex at the start of the coming round
    c1_slot: int | None      # physical slot playing the near cop; None = floating
    root1: int | None        # root of the odd tree once frozen


class ProductTwoCop(CopStrategy):
    """Two-phase two-cop strategy on the product of two trees."""

    def __init__(self, product: ProductGraph):
        if not (is_tree(product.factor1) and is_tree(product.factor2)):
            raise ValueError("two-cop product strategy needs tree factors")
        if product.factor1.vertex_count < 2 or product.factor2.vertex_count < 2:
            raise ValueError("factors must have diameter > 0")
        self.product = product
        self.tree1, self.tree2, self.parity = normalize_parity(
            product.factor1, product.factor2
        )
        self.plan = product_initial_placement(self.tree1, self.tree2)
        self.root2 = self.plan.path2[self.plan.n]  # b_{n+1}, fixed for the game
        self.initial_root1 = self.plan.path1[self.plan.m + 1]
        self._dist1 = [bfs_distances(self.tree1, v) for v in range(self.tree1.vertex_count)]
        self._dist2 = [bfs_distances(self.tree2, v) for v in range(self.tree2.vertex_count)]
        self._hop1 = next_hop_table(self.tree1)
        self._hop2 = next_hop_table(self.tree2)
        self._rooted_cache: dict[tuple[int, int], RootedTree] = {}
        self.stats = {"endgame_entries": 0, "invariant_checks": 0, "responses": 0}

    # -- coordinate plumbing ------------------------------------------------

    def _virtual_of(self, which: int) -> int | None:
        if self.parity.augmented == which:
            return self.parity.virtual_vertex
        return None

    def _internal(self, flat: int) -> tuple[int, int]:
        x1, x2 = self.product.pair_of(flat)
        return (x2, x1) if self.parity.swapped else (x1, x2)

    def _flat(self, pair: tuple[int, int]) -> int:
        i1, i2 = pair
        if i1 == self._virtual_of(0) or i2 == self._virtual_of(1):
            raise StrategyInvariantError(
                f"strategy prescribed a move onto virtual vertex: internal {pair}"
            )
        if self.parity.swapped:
            return self.product.flat_of(i2, i1)
        return self.product.flat_of(i1, i2)

    def _rooted(self, which: int, root: int) -> RootedTree:
        key = (which, root)
        rt = self._rooted_cache.get(key)
        if rt is None:
            rt = root_tree(self.tree1 if which == 1 else self.tree2, root)
            self._rooted_cache[key] = rt
        return rt

    # -- contract -------------------------------------------------------------

    def place(self, g: Graph):
        cops = (self._flat(self.plan.cop1), self._flat(self.plan.cop2))
        return cops, TwoPhaseMemory(PHASE_EQUALIZE, None, None, None)

    def observe_placement(self, g: Graph, state: GameState, memory):
        return replace(memory, prev_robber=state.robber)

    def height_potential(self, cops_flat: tuple[int, ...], memory: TwoPhaseMemory) -> int:
        """h(u1)+h(v1)+h(u2)+h(v2) under the current (or provisional) roots."""
        root1 = memory.root1 if memory.root1 is not None else self.initial_root1
        rt1 = self._rooted(1, root1)
        rt2 = self._rooted(2, self.root2)
        pairs = [self._internal(c) for c in cops_flat]
        return sum(rt1.height[p[0]] for p in pairs) + sum(rt2.height[p[1]] for p in pairs)

    def respond(self, g: Graph, state: GameState, memory: TwoPhaseMemory):
        self.stats["responses"] += 1
        if memory.prev_robber is None:
            raise StrategyInvariantError(
                "two-cop strategy was not shown the robber placement"
            )
        r_start = self._internal(memory.prev_robber)
        r_now = self._internal(state.robber)
        pairs = [self._internal(c) for c in state.cops]
        (x1, w1), (y1, w2) = pairs
        if w1 != w2 or self._dist1[x1][y1] != 1:
            raise StrategyInvariantError(
                f"cop pair structure broken: T1 coords {x1},{y1}, T2 coords {w1},{w2}"
            )
        u2 = w1

        # Orientation at the start of the round.
        if memory.c1_slot is None:
            dx = self._dist1[x1][r_start[0]]
            dy = self._dist1[y1][r_start[0]]
            if dx == dy:
                raise StrategyInvariantError(
                    f"tied pair distances {dx} in a tree; parity violated"
                )
            c1_slot = 0 if dx < dy else 1
        else:
            c1_slot = memory.c1_slot
        u1 = pairs[c1_slot][0]
        v1 = pairs[1 - c1_slot][0]
        dU = self._dist1[u1][r_start[0]]
        dV = self._dist1[v1][r_start[0]]
        d2 = self._dist2[u2][r_start[1]]
        if dV != dU + 1:
            raise StrategyInvariantError(
                f"pair spacing broken at round start: d(u1,r1)={dU}, d(v1,r1)={dV}"
            )

        phase = memory.phase
        root1 = memory.root1
        if phase == PHASE_EQUALIZE and d2 in (dU, dV):
            # Endgame entry happens at a round boundary: the conditions held
            # with the robber to move, so her latest move gets the five-case
            # response below.
            phase = PHASE_ENDGAME
            if root1 is None:
                root1 = v1
            self.stats["endgame_entries"] += 1
            self._assert_invariants(u1, v1, u2, r_start, root1, "endgame entry")

        if phase == PHASE_EQUALIZE:
            new_pairs, c1_slot, root1 = self._equalize_move(
                pairs, c1_slot, root1, u1, v1, u2, dU, dV, d2, r_now
            )
        else:
            new_pairs = self._endgame_move(c1_slot, u1, v1, u2, r_start, r_now, root1)
            captured = r_now in new_pairs
            if not captured:
                nu1 = new_pairs[c1_slot][0]
                nv1 = new_pairs[1 - c1_slot][0]
                nu2 = new_pairs[0][1]
                self._assert_invariants(nu1, nv1, nu2, r_now, root1, "after endgame move")

        new_cops = tuple(self._flat(p) for p in new_pairs)
        new_memory = TwoPhaseMemory(phase, state.robber, c1_slot, root1)
        return new_cops, new_memory

    # -- phase one -------------------------------------------------------------

    def _equalize_move(self, pairs, c1_slot, root1, u1, v1, u2, dU, dV, d2, r_now):
        """Committed descent; the tree is chosen from round-start distances."""
        new_pairs = list(pairs)
        if d2 < dU:
            # Close the gap in the odd tree; this is the first odd-tree
            # descent or a later one, either way orientation freezes here.
            if root1 is None:
                root1 = v1
            t1 = r_now[0]
            if u1 == t1:
                raise StrategyInvariantError(
                    f"odd-tree descent with cop already at robber column {t1}"
                )
            nu1 = self._hop1[t1][u1]
            nv1 = self._hop1[t1][v1]
            if nv1 != u1:
                raise StrategyInvariantError(
                    f"pair did not contract while descending: {v1}->{nv1}, expected {u1}"
                )
            new_pairs[c1_slot] = (nu1, pairs[c1_slot][1])
            new_pairs[1 - c1_slot] = (nv1, pairs[1 - c1_slot][1])
            return new_pairs, c1_slot, root1
        if d2 > dV:
            t2 = r_now[1]
            if u2 == t2:
                raise StrategyInvariantError(
                    f"even-tree descent with cop already at robber row {t2}"
                )
            w = self._hop2[t2][u2]
            new_pairs[0] = (pairs[0][0], w)
            new_pairs[1] = (pairs[1][0], w)
            # Orientation may still float: the pair has not moved in the
            # odd tree, so the robber can legitimately cross sides.
            return new_pairs, c1_slot if root1 is not None else None, root1
        raise StrategyInvariantError(
            f"equalize move requested with gap closed: d2={d2}, dU={dU}, dV={dV}"
        )

    # -- phase two ---------------------------------------------------------------

    def _endgame_move(self, c1_slot, u1, v1, u2, r_start, r_now, root1):
        """The five-case response to the robber's last half-move."""
        rt1 = self._rooted(1, root1)
        rt2 = self._rooted(2, self.root2)
        pairs = [None, None]

        def set_pair(slot, coord1, coord2):
            pairs[slot] = (coord1, coord2)

        def descend_t1(target):
            nu1 = self._hop1[target][u1]
            nv1 = self._hop1[target][v1]
            if nv1 != u1:
                raise StrategyInvariantError(
                    f"endgame odd-tree descent did not contract the pair: {v1}->{nv1}"
                )
            set_pair(c1_slot, nu1, u2)
            set_pair(1 - c1_slot, nv1, u2)

        def descend_t2(target):
            w = self._hop2[target][u2]
            set_pair(c1_slot, u1, w)
            set_pair(1 - c1_slot, v1, w)

        if r_now == r_start:
            # Robber stayed: descend in the tree whose distance matches.
            d2 = self._dist2[u2][r_now[1]]
            if d2 == self._dist1[v1][r_now[0]]:
                descend_t2(r_now[1])
            elif d2 == self._dist1[u1][r_now[0]]:
                descend_t1(r_now[0])
            else:
                raise StrategyInvariantError(
                    f"stay case with unmatched distances: d2={d2}"
                )
        elif r_now[1] == r_start[1]:
            # Odd-tree move.
            if rt1.parent[r_start[0]] == r_now[0]:
                # Up. From the near cop's column the only ascent lands on
                # the far cop's column, one even-tree step from its cop.
                if r_start[0] == u1:
                    if r_now[0] != v1:
                        raise StrategyInvariantError(
                            f"ascent from {r_start[0]} missed the far column {v1}"
                        )
                    if self._dist2[u2][r_now[1]] != 1:
                        raise StrategyInvariantError(
                            "capture case (odd-tree ascent) without unit distance"
                        )
                    set_pair(c1_slot, u1, u2)
                    set_pair(1 - c1_slot, v1, r_now[1])
                else:
                    descend_t2(r_now[1])
            else:
                descend_t1(r_now[0])
        elif r_now[0] == r_start[0]:
            # Even-tree move.
            if rt2.parent[r_start[1]] == r_now[1]:
                # Up.
                if r_now[1] == u2:
                    if self._dist1[u1][r_now[0]] != 1:
                        raise StrategyInvariantError(
                            "capture case (even-tree ascent) without unit distance"
                        )
                    set_pair(c1_slot, self._hop1[r_now[0]][u1], u2)
                    set_pair(1 - c1_slot, v1, u2)
                else:
                    descend_t1(r_now[0])
            else:
                descend_t2(r_now[1])
        else:
            raise StrategyInvariantError(
                f"robber changed both coordinates: {r_start} -> {r_now}"
            )
        return pairs

    # -- invariants -----------------------------------------------------------

    def _assert_invariants(self, u1, v1, u2, r, root1, where):
        self.stats["invariant_checks"] += 1
        rt1 = self._rooted(1, root1)
        rt2 = self._rooted(2, self.root2)
        r1, r2 = r
        problems = []
        if not rt1.is_descendant(u1, r1):
            problems.append(f"r1={r1} not a descendant of u1={u1}")
        if not rt1.is_descendant(v1, r1):
            problems.append(f"r1={r1} not a descendant of v1={v1}")
        if not rt2.is_descendant(u2, r2):
            problems.append(f"r2={r2} not a descendant of u2={u2}")
        dU = self._dist1[u1][r1]
        dV = self._dist1[v1][r1]
        d2 = self._dist2[u2][r2]
        if dV != dU + 1:
            problems.append(f"d(v1,r1)={dV} != 1 + d(u1,r1)={dU}")
        if d2 not in (dU, dV):
            problems.append(f"d(u2,r2)={d2} not in {{{dU}, {dV}}}")
        if problems:
            raise StrategyInvariantError(
                f"invariants failed {where}: "
                + "; ".join(problems)
                + f" [u1={u1} v1={v1} u2={u2} r={r} root1={root1} root2={self.root2}]"
            )


def two_cop_strategy(product: ProductGraph) -> ProductTwoCop:
    return ProductTwoCop(product)
