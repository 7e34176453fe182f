"""Tour of the cylinder: points, boxes, partitions, and the flip involution.

The cylinder with parameters (k, n) is the integer plane modulo the shift
(-k, n - k): moving k rows up and n - k columns right lands on the same box.
"""

import cyltab as ct

params = ct.CylParams(k=2, n=4)
print(f"cylinder parameters: k={params.k}, n={params.n}, horizontal period {params.width}")

# Every plane point projects to a canonical box with row in [0, k).
p = ct.Point(2, 0)
print(f"\npoint {p} projects to {ct.project(p, params)}")
for m in range(-2, 3):
    q = ct.Point(p.x - m * params.k, p.y + m * params.width)
    print(f"  shift by {m:+d} periods: {q} -> {ct.project(q, params)}")

# A cylindric partition is a weakly decreasing bi-infinite sequence with
# lam[m] = lam[m+k] + (n-k); one window of k values determines it.
lam = ct.CylPartition(params, (3, 1))
print(f"\npartition window {lam.window} extends to", [lam.part(m) for m in range(-3, 6)])

# Skew shapes are ordered pairs of nested partitions; their boxes are finite.
mu = ct.CylPartition(params, (1, 0))
sh = ct.SkewShape(lam, mu)
print(f"shape {lam.window}/{mu.window} has boxes", sorted((b.row, b.col) for b in ct.skew_boxes(sh)))
print("horizontal strip?", ct.is_horizontal_strip(sh))

# Flip rotates the cylinder 180 degrees; it is an involution.
flipped = ct.flip_partition(lam)
print(f"\nflip of {lam.window} is {flipped.window}; flipping back gives", ct.flip_partition(flipped).window)

# Regular partitions embed by zero-padding the window.
print("\nregular partition (2, 1) embedded at k=5, n=10:", ct.cyl_embed((2, 1), ct.CylParams(5, 10)).window)
