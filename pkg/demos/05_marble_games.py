"""The marble-game encoding: k players in a ring, n - k marbles, one turn
per letter.  Games from a partition's arrangement encode exactly the
tableaux with that inner shape."""

import cyltab as ct

params = ct.CylParams(3, 7)
mu = ct.CylPartition(params, (5, 4, 2))
t = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (10, 9, 6)), mu),
    [[1, 2, 2, 5, 6], [1, 2, 6, 6, 6], [1, 1, 4, 5]],
)

print("tableau rows:", [list(r) for r in t.rows])
print("inner shape", mu.window, "-> initial arrangement", ct.arrangement(mu).counts)

game = ct.tableau_to_game(t, 6)
arr = game.initial
for j, turn in enumerate(game.turns, start=1):
    arr = ct.marbles.apply_turn(arr, turn)
    print(f"  turn {j} = {turn}  ->  holdings {arr.counts}")
print("final arrangement equals the outer shape's:", arr == ct.arrangement(t.outer))

back = ct.game_to_tableau(mu, game)
print("decoding the game recovers the tableau:", back == t)

# Standard tableaux are exactly the games moving one marble per turn.
std = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(ct.CylParams(2, 4), (2, 1)), ct.CylPartition(ct.CylParams(2, 4), (0, 0))),
    [[1, 2], [3]],
)
g = ct.tableau_to_game(std, 3)
print("\nstandard tableau turns:", g.turns, "-> one marble each:", all(sum(x) == 1 for x in g.turns))
