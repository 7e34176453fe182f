"""Reverse row insertion: the inverse of forward multi-insertion.

A horizontal strip is removed from the outer shape and the displaced entries
bump upward, each chain landing on the inner frontier.  Reverse routes
retrace the forward routes point for point, in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .geometry import Box, Point, SkewShape, lift
from .insertion import (
    BumpingRoute,
    InsertionError,
    InsertionEvent,
    TableauState,
    _Tracker,
)
from .tableau import CylTableau


class NotOutsideCorner(InsertionError):
    pass


class QueueNotReverseRegular(InsertionError):
    pass


class ReversePreconditionViolated(InsertionError):
    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(clause)


@dataclass(frozen=True, slots=True)
class ReverseQueue:
    """FIFO of (letter, row) pairs; among equal rows, larger letters come first."""

    items: tuple[tuple[int, int], ...]
    k: int

    @staticmethod
    def build(items: Iterable[tuple[int, int]], k: int) -> "ReverseQueue":
        return ReverseQueue(tuple((x, r % k) for x, r in items), k)

    def is_reverse_regular(self) -> bool:
        seen: dict[int, int] = {}
        for x, r in self.items:
            if r in seen and x > seen[r]:
                return False
            seen[r] = x
        return True

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True, slots=True)
class ReverseMultiResult:
    tableau: CylTableau
    reverse_new_set: frozenset[Box]
    routes: tuple[BumpingRoute, ...]
    queues: tuple[ReverseQueue, ...]
    events: tuple[InsertionEvent, ...]


def outside_corners(t: CylTableau) -> list[Box]:
    """Boxes removable from the outer shape."""
    lam = t.outer
    out = []
    for r in range(t.params.k):
        c = lam.window[r]
        if c > lam.part(r + 1):
            out.append(Box(r, c))
    return out


def _check_strip_from_outer(t: CylTableau, boxes: list[Box]) -> None:
    params = t.params
    k = params.k
    lam = list(t.outer.window)
    per_row: dict[int, list[int]] = {}
    for b in boxes:
        if not 0 <= b.row < k:
            raise ReversePreconditionViolated(f"box {b} row outside [0, {k})")
        if b.col > lam[b.row]:
            raise ReversePreconditionViolated(f"box {b} lies outside the outer shape")
        per_row.setdefault(b.row, []).append(b.col)
    xi = list(lam)
    for r, cols in per_row.items():
        cols.sort()
        if cols != list(range(lam[r] - len(cols) + 1, lam[r] + 1)):
            raise ReversePreconditionViolated(
                f"row {r} boxes {cols} do not peel the outer shape contiguously"
            )
        xi[r] = cols[0] - 1
    for i in range(k - 1):
        if xi[i] < xi[i + 1]:
            raise ReversePreconditionViolated("outer shape minus boxes is not a partition")
    if xi[k - 1] < xi[0] - params.width:
        raise ReversePreconditionViolated("outer shape minus boxes violates the wrap")
    for i in range(k):
        nxt = lam[i + 1] if i + 1 < k else lam[0] - params.width
        if xi[i] < nxt:
            raise ReversePreconditionViolated("boxes do not form a horizontal strip")


def reverse_one_step_multi(
    state: TableauState, queue: ReverseQueue
) -> tuple[TableauState, ReverseQueue]:
    """Reverse-insert every queued letter into its row, collecting bumped letters."""
    if not queue.is_reverse_regular():
        raise QueueNotReverseRegular(f"queue {queue.items} is not reverse-regular")
    st = state.copy()
    out: list[tuple[int, int]] = []
    for x, r in queue.items:
        row = st.rows[r]
        if not row or x <= row[0]:
            st.mu[r] -= 1
            row.insert(0, x)
        else:
            idx = _rightmost_less(row, x)
            out.append((row[idx], (r - 1) % st.params.k))
            row[idx] = x
    return st, ReverseQueue(tuple(out), queue.k)


def _rightmost_less(row: list[int], x: int) -> int:
    for i in range(len(row) - 1, -1, -1):
        if row[i] < x:
            return i
    raise AssertionError("no entry less than x; caller checked the landing case")


def _seed_reverse(
    t: CylTableau, boxes: Iterable[Box], seed_row: int, tr: _Tracker
) -> tuple[TableauState, list[tuple[int, int, int, int]]]:
    bs = sorted(set(boxes), key=lambda b: (b.row, b.col))
    _check_strip_from_outer(t, bs)
    st = TableauState.from_tableau(t)
    k = st.params.k
    queue: list[tuple[int, int, int, int]] = []
    for h in range(seed_row, seed_row - k, -1):
        r = h % k
        for b in sorted((b for b in bs if b.row == r), key=lambda b: -b.col):
            rid = tr.new_route(lift(b, h, st.params))
            if b.col > st.mu[r]:
                x = st.rows[r].pop()
                st.lam[r] -= 1
                queue.append((x, (h - 1) % k, h - 1, rid))
                tr.emit("seed", b, None, x)
            else:
                st.mu[r] -= 1
                st.lam[r] -= 1
                tr.emit("seed_out", b, None, None)
    return st, queue


def seed_reverse_multi(
    t: CylTableau, boxes: Iterable[Box], seed_row: int = 0
) -> tuple[TableauState, ReverseQueue]:
    """Remove a horizontal strip from the outer shape, yielding the start queue."""
    state, queue = _seed_reverse(t, boxes, seed_row, _Tracker())
    return state, ReverseQueue(tuple((x, r) for x, r, _, _ in queue), t.params.k)


def reverse_full_multi(
    t: CylTableau, boxes: Iterable[Box], seed_row: int = 0
) -> ReverseMultiResult:
    """Remove a horizontal strip from the outer shape and cascade entries upward.

    Rows are peeled from seed_row downward in index (right to left within a
    row); displaced entries bump the rightmost smaller entry of the row above
    until each chain lands just inside the inner shape.  The boxes shed by
    the inner shape form a horizontal strip.
    """
    tr = _Tracker()
    mu_start = t.inner
    st, queue = _seed_reverse(t, boxes, seed_row, tr)
    k = st.params.k
    queues = [ReverseQueue(tuple((x, r) for x, r, _, _ in queue), k)]
    while queue:
        nxt: list[tuple[int, int, int, int]] = []
        for x, r, plane, rid in queue:
            row = st.rows[r]
            if not row or x <= row[0]:
                box = Box(r, st.mu[r])
                st.mu[r] -= 1
                row.insert(0, x)
                tr.extend(rid, lift(box, plane, st.params))
                tr.emit("land", box, x, None)
            else:
                idx = _rightmost_less(row, x)
                box = Box(r, st.mu[r] + 1 + idx)
                bumped = row[idx]
                row[idx] = x
                nxt.append((bumped, (r - 1) % k, plane - 1, rid))
                tr.extend(rid, lift(box, plane, st.params))
                tr.emit("bump", box, x, bumped)
        queue = nxt
        queues.append(ReverseQueue(tuple((x, r) for x, r, _, _ in queue), k))
    result = st.to_tableau()
    # Measured against the inner shape of the input tableau, so boxes shed
    # degenerately during seeding count as part of the reverse new set.
    shed = SkewShape(mu_start, result.inner)
    routes = tuple(
        BumpingRoute(tuple(ps), tuple(ss))
        for ps, ss in zip(tr.route_points, tr.route_steps)
    )
    return ReverseMultiResult(
        tableau=result,
        reverse_new_set=frozenset(shed.boxes()),
        routes=routes,
        queues=tuple(queues),
        events=tuple(tr.events),
    )


def reverse_insert(t: CylTableau, b: Box) -> tuple[CylTableau, BumpingRoute]:
    """Remove a single outside corner, bumping one chain of entries upward."""
    st = TableauState.from_tableau(t)
    k = st.params.k
    r = b.row
    lam = t.outer
    if not (0 <= r < k and b.col == st.lam[r] and b.col > lam.part(r + 1)):
        raise NotOutsideCorner(f"box {b} is not an outside corner")
    points = [Point(r, b.col)]
    steps = [0]
    st.lam[r] -= 1
    if b.col <= st.mu[r]:
        st.mu[r] -= 1
        return st.to_tableau(), BumpingRoute(tuple(points), tuple(steps))
    x = st.rows[r].pop()
    plane = r
    step = 1
    while True:
        plane -= 1
        r = plane % k
        row = st.rows[r]
        if not row or x <= row[0]:
            points.append(lift(Box(r, st.mu[r]), plane, st.params))
            steps.append(step)
            st.mu[r] -= 1
            row.insert(0, x)
            break
        idx = _rightmost_less(row, x)
        points.append(lift(Box(r, st.mu[r] + 1 + idx), plane, st.params))
        steps.append(step)
        x, row[idx] = row[idx], x
        step += 1
    return st.to_tableau(), BumpingRoute(tuple(points), tuple(steps))
