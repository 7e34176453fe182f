"""Row insertion on the cylinder: single-box internal insertion and multi-insertion.

Multi-insertion removes a horizontal strip of boxes into the inner shape and
bumps the displaced entries downward row by row, driven by a FIFO queue of
(letter, row) pairs.  Bumping routes record the chain of plane points each
displaced box travels through; they always trend weakly left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geometry import Box, CylParams, CylPartition, Point, SkewShape, lift
from .tableau import CylTableau, TableauError


class InsertionError(TableauError):
    pass


class NotInsideCocorner(InsertionError):
    pass


class QueueNotRegular(InsertionError):
    pass


class PreconditionViolated(InsertionError):
    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(clause)


@dataclass(frozen=True, slots=True)
class InsertionQueue:
    """FIFO of (letter, row) pairs; rows are stored canonically in [0, k).

    Regular means that among pairs sharing a row, smaller letters come first.
    """

    items: tuple[tuple[int, int], ...]
    k: int

    @staticmethod
    def build(items: Iterable[tuple[int, int]], k: int) -> "InsertionQueue":
        return InsertionQueue(tuple((x, r % k) for x, r in items), k)

    def is_regular(self) -> bool:
        seen: dict[int, int] = {}
        for x, r in self.items:
            if r in seen and x < seen[r]:
                return False
            seen[r] = x
        return True

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True, slots=True)
class BumpingRoute:
    """Plane points visited by one insertion chain, with global step stamps.

    Rows are consecutive: increasing for forward routes, decreasing for
    reverse routes.
    """

    points: tuple[Point, ...]
    steps: tuple[int, ...]

    def _index(self, plane_row: int) -> int | None:
        first = self.points[0].x
        sign = 1 if len(self.points) < 2 or self.points[1].x > first else -1
        idx = (plane_row - first) * sign
        return idx if 0 <= idx < len(self.points) else None

    def row_point(self, plane_row: int) -> Point | None:
        idx = self._index(plane_row)
        return None if idx is None else self.points[idx]

    def row_step(self, plane_row: int) -> int | None:
        idx = self._index(plane_row)
        return None if idx is None else self.steps[idx]


@dataclass(frozen=True, slots=True)
class InsertionEvent:
    """One state change: a seed removal, a bump, or a landing."""

    step: int
    kind: str  # "seed", "seed_out", "bump", "land"
    box: Box
    inserted: int | None
    bumped: int | None


@dataclass(frozen=True, slots=True)
class MultiInsertResult:
    tableau: CylTableau
    new_set: frozenset[Box]
    routes: tuple[BumpingRoute, ...]
    queues: tuple[InsertionQueue, ...]
    events: tuple[InsertionEvent, ...]


@dataclass
class TableauState:
    """Mutable working copy of a tableau; not necessarily valid mid-run."""

    params: CylParams
    mu: list[int]
    lam: list[int]
    rows: list[list[int]]

    @staticmethod
    def from_tableau(t: CylTableau) -> "TableauState":
        return TableauState(
            t.params,
            list(t.inner.window),
            list(t.outer.window),
            [list(r) for r in t.rows],
        )

    def copy(self) -> "TableauState":
        return TableauState(
            self.params, list(self.mu), list(self.lam), [list(r) for r in self.rows]
        )

    def to_tableau(self) -> CylTableau:
        shape = SkewShape(
            CylPartition(self.params, tuple(self.lam)),
            CylPartition(self.params, tuple(self.mu)),
        )
        return CylTableau(shape, tuple(tuple(r) for r in self.rows))


def point_order_le(p: Point, q: Point) -> bool:
    """Total order on points: above, or same row and weakly right."""
    return p.x < q.x or (p.x == q.x and p.y >= q.y)


def point_order_lt(p: Point, q: Point) -> bool:
    return p != q and point_order_le(p, q)


def inside_cocorners(t: CylTableau) -> list[Box]:
    """Boxes addable to the inner shape: left and upper neighbors lie in it."""
    mu = t.inner
    k = t.params.k
    out = []
    for r in range(k):
        c = mu.window[r] + 1
        if c <= mu.part(r - 1):
            out.append(Box(r, c))
    return out


def _check_strip_into_inner(t: CylTableau, boxes: Sequence[Box]) -> None:
    params = t.params
    k = params.k
    mu = list(t.inner.window)
    per_row: dict[int, list[int]] = {}
    for b in boxes:
        if not 0 <= b.row < k:
            raise PreconditionViolated(f"box {b} row outside [0, {k})")
        if b.col <= mu[b.row]:
            raise PreconditionViolated(f"box {b} lies in the inner shape")
        per_row.setdefault(b.row, []).append(b.col)
    nu = list(mu)
    for r, cols in per_row.items():
        cols.sort()
        if cols != list(range(mu[r] + 1, mu[r] + len(cols) + 1)):
            raise PreconditionViolated(
                f"row {r} boxes {cols} do not extend the inner shape contiguously"
            )
        nu[r] = cols[-1]
    for i in range(k - 1):
        if nu[i] < nu[i + 1]:
            raise PreconditionViolated("inner shape plus boxes is not a partition")
    if nu[k - 1] < nu[0] - params.width:
        raise PreconditionViolated("inner shape plus boxes violates the wrap")
    for i in range(k):
        nxt = nu[i + 1] if i + 1 < k else nu[0] - params.width
        if mu[i] < nxt:
            raise PreconditionViolated("boxes do not form a horizontal strip")


def one_step_multi(
    state: TableauState, queue: InsertionQueue
) -> tuple[TableauState, InsertionQueue]:
    """Insert every queued letter into its row, collecting the bumped letters.

    Returns a fresh state and the queue of bumped (letter, next row) pairs,
    which is again regular.
    """
    if not queue.is_regular():
        raise QueueNotRegular(f"queue {queue.items} is not regular")
    st = state.copy()
    out: list[tuple[int, int]] = []
    for x, r in queue.items:
        row = st.rows[r]
        if not row or x >= row[-1]:
            st.lam[r] += 1
            row.append(x)
        else:
            idx = _leftmost_greater(row, x)
            out.append((row[idx], (r + 1) % st.params.k))
            row[idx] = x
    return st, InsertionQueue(tuple(out), queue.k)


def _leftmost_greater(row: list[int], x: int) -> int:
    for i, v in enumerate(row):
        if v > x:
            return i
    raise AssertionError("no entry greater than x; caller checked the landing case")


@dataclass
class _Tracker:
    step: int = 0
    events: list[InsertionEvent] = field(default_factory=list)
    route_points: list[list[Point]] = field(default_factory=list)
    route_steps: list[list[int]] = field(default_factory=list)

    def new_route(self, p: Point) -> int:
        self.route_points.append([p])
        self.route_steps.append([self.step])
        return len(self.route_points) - 1

    def extend(self, rid: int, p: Point) -> None:
        self.route_points[rid].append(p)
        self.route_steps[rid].append(self.step)

    def emit(self, kind: str, box: Box, inserted: int | None, bumped: int | None) -> None:
        self.events.append(InsertionEvent(self.step, kind, box, inserted, bumped))
        self.step += 1


def seed_multi(
    t: CylTableau, boxes: Iterable[Box], seed_row: int = 0
) -> tuple[TableauState, InsertionQueue]:
    """Remove a horizontal strip into the inner shape, yielding the start queue."""
    state, queue = _seed_forward(t, boxes, seed_row, _Tracker())
    return state, InsertionQueue(tuple((x, r) for x, r, _, _ in queue), t.params.k)


def _seed_forward(
    t: CylTableau, boxes: Iterable[Box], seed_row: int, tr: _Tracker
) -> tuple[TableauState, list[tuple[int, int, int, int]]]:
    bs = sorted(set(boxes), key=lambda b: (b.row, b.col))
    _check_strip_into_inner(t, bs)
    st = TableauState.from_tableau(t)
    k = st.params.k
    queue: list[tuple[int, int, int, int]] = []  # letter, row, plane row, route id
    for h in range(seed_row, seed_row + k):
        r = h % k
        for b in sorted((b for b in bs if b.row == r), key=lambda b: b.col):
            rid = tr.new_route(lift(b, h, st.params))
            if b.col <= st.lam[r]:
                x = st.rows[r].pop(0)
                st.mu[r] += 1
                queue.append((x, (h + 1) % k, h + 1, rid))
                tr.emit("seed", b, None, x)
            else:
                st.mu[r] += 1
                st.lam[r] += 1
                tr.emit("seed_out", b, None, None)
    return st, queue


def full_multi(t: CylTableau, boxes: Iterable[Box], seed_row: int = 0) -> MultiInsertResult:
    """Insert a horizontal strip of boxes into the inner shape of a tableau.

    The strip is removed row by row (left to right within a row) starting at
    seed_row, then the displaced entries cascade downward until every chain
    lands.  The result records the grown tableau, the set of boxes added to
    the outer shape (always a horizontal strip), one bumping route per
    removed box, and the successive queues.
    """
    tr = _Tracker()
    lam_start = t.outer
    st, queue = _seed_forward(t, boxes, seed_row, tr)
    k = st.params.k
    queues = [InsertionQueue(tuple((x, r) for x, r, _, _ in queue), k)]
    while queue:
        nxt: list[tuple[int, int, int, int]] = []
        for x, r, plane, rid in queue:
            row = st.rows[r]
            if not row or x >= row[-1]:
                st.lam[r] += 1
                row.append(x)
                box = Box(r, st.lam[r])
                tr.extend(rid, lift(box, plane, st.params))
                tr.emit("land", box, x, None)
            else:
                idx = _leftmost_greater(row, x)
                box = Box(r, st.mu[r] + 1 + idx)
                bumped = row[idx]
                row[idx] = x
                nxt.append((bumped, (r + 1) % k, plane + 1, rid))
                tr.extend(rid, lift(box, plane, st.params))
                tr.emit("bump", box, x, bumped)
        queue = nxt
        queues.append(InsertionQueue(tuple((x, r) for x, r, _, _ in queue), k))
    result = st.to_tableau()
    # The new set is measured against the outer shape of the input tableau,
    # so boxes absorbed degenerately during seeding count as new.
    new_shape = SkewShape(result.outer, lam_start)
    routes = tuple(
        BumpingRoute(tuple(ps), tuple(ss))
        for ps, ss in zip(tr.route_points, tr.route_steps)
    )
    return MultiInsertResult(
        tableau=result,
        new_set=frozenset(new_shape.boxes()),
        routes=routes,
        queues=tuple(queues),
        events=tuple(tr.events),
    )


def internal_insert(t: CylTableau, b: Box) -> tuple[CylTableau, BumpingRoute]:
    """Insert a single inside cocorner, bumping one chain of entries downward."""
    st = TableauState.from_tableau(t)
    k = st.params.k
    r = b.row
    if not (
        0 <= r < k
        and b.col == st.mu[r] + 1
        and b.col <= CylPartition(st.params, tuple(st.mu)).part(r - 1)
    ):
        raise NotInsideCocorner(f"box {b} is not an inside cocorner")
    points = [Point(r, b.col)]
    steps = [0]
    st.mu[r] += 1
    if b.col > st.lam[r]:
        st.lam[r] += 1
        return st.to_tableau(), BumpingRoute(tuple(points), tuple(steps))
    x = st.rows[r].pop(0)
    plane = r
    step = 1
    while True:
        plane += 1
        r = plane % k
        row = st.rows[r]
        if not row or x >= row[-1]:
            st.lam[r] += 1
            row.append(x)
            points.append(lift(Box(r, st.lam[r]), plane, st.params))
            steps.append(step)
            break
        idx = _leftmost_greater(row, x)
        points.append(lift(Box(r, st.mu[r] + 1 + idx), plane, st.params))
        steps.append(step)
        x, row[idx] = row[idx], x
        step += 1
    return st.to_tableau(), BumpingRoute(tuple(points), tuple(steps))
