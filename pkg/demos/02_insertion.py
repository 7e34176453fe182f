"""Row insertion on the cylinder, single box and multi-box, with bumping routes."""

import cyltab as ct


def show(t, label):
    print(f"{label}: inner {t.inner.window}, outer {t.outer.window}")
    for r, row in enumerate(t.rows):
        lo, _ = t.shape.row_interval(r)
        print(f"  row {r} (cols {lo + 1}..{lo + len(row)}): {list(row)}")


# Single-box insertion: bump the smallest entry of the top row and watch the
# chain wrap around the cylinder twice before landing.
params = ct.CylParams(3, 5)
t = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (5, 5, 5)), ct.CylPartition(params, (3, 2, 2))),
    [[1, 4], [2, 5, 6], [3, 7, 7]],
)
show(t, "start")
out, route = ct.internal_insert(t, ct.Box(0, 4))
show(out, "after inserting the box at (0, 4)")
print("bumping route (plane points):", [(p.x, p.y) for p in route.points])
print("note the route trends weakly left and descends one plane row per step")

# Multi-insertion: remove a three-box horizontal strip into the inner shape.
params = ct.CylParams(3, 6)
t = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (7, 5, 4)), ct.CylPartition(params, (4, 3, 1))),
    [[2, 3, 5], [2, 6], [1, 2, 4]],
)
strip = [ct.Box(1, 4), ct.Box(2, 2), ct.Box(2, 3)]
print("\nmulti-insertion of", [(b.row, b.col) for b in strip])
res = ct.full_multi(t, strip)
for i, q in enumerate(res.queues):
    print(f"  queue {i}: {list(q.items)}")
show(res.tableau, "result")
print("new outer boxes:", sorted((b.row, b.col) for b in res.new_set), "(always a horizontal strip)")

# Reverse multi-insertion undoes it exactly.
back = ct.reverse_full_multi(res.tableau, res.new_set)
print("\nreverse recovers the start:", back.tableau == t)
print("and returns the removed strip:", sorted((b.row, b.col) for b in back.reverse_new_set))
