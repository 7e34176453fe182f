"""The cylindric RSK correspondence: pairs sharing an inner shape map
bijectively to pairs sharing an outer shape, preserving both weights."""

import cyltab as ct

params = ct.CylParams(3, 6)
mu = ct.CylPartition(params, (4, 3, 1))
T = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (7, 5, 4)), mu), [[2, 3, 5], [2, 6], [1, 2, 4]]
)
U = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (6, 6, 5)), mu), [[2, 4], [1, 3, 5], [1, 1, 3, 4]]
)

print("T rows:", [list(r) for r in T.rows], "shape", T.outer.window, "/", T.inner.window)
print("U rows:", [list(r) for r in U.rows], "shape", U.outer.window, "/", U.inner.window)

out = ct.crsk(T, U)
print("\ncommon outer shape:", out.lam.window)
print("P rows:", [list(r) for r in out.p.rows], "shape", out.p.outer.window, "/", out.p.inner.window)
print("Q rows:", [list(r) for r in out.q.rows], "shape", out.q.outer.window, "/", out.q.inner.window)
print("weights preserved:", ct.weight(out.p) == ct.weight(T), ct.weight(out.q) == ct.weight(U))

back = ct.crsk_inverse(out.p, out.q)
print("\ninverse recovers (T, U, mu):", back.t == T and back.u == U and back.mu == mu)

# The symmetry property: swapping the inputs swaps the outputs.
swapped = ct.crsk(U, T)
print("swap symmetry:", (swapped.p, swapped.q) == (out.q, out.p))

# On the diagonal the two outputs coincide.
diag = ct.crsk(T, T)
print("diagonal gives P = Q:", diag.p == diag.q)
