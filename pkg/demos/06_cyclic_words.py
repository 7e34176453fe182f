"""Cyclic Knuth moves: catalyzed adjacent switches plus rotation collapse all
words of equal content into one class, which the sorting algorithm certifies."""

import cyltab as ct
from cyltab.words import Move, ROTATE

w = (3, 3, 4, 6, 3, 5, 4)
print("word:", "".join(map(str, w)))
print("available moves:", [(m.kind, m.pos) for m in ct.applicable_moves(w)])
print("rotation:", "".join(map(str, ct.apply_move(w, Move(ROTATE)))))

# Sorting a permutation: the leftmost catalyzed switch, repeated.  Words
# reached by switching the first two letters are the critical words; their
# positional monovariant strictly decreases, which proves termination.
start = (1, 5, 9, 3, 6, 2, 8, 4, 7)
res = ct.word_transform(start)
print(f"\nsorting {''.join(map(str, start))}: {len(res.switch_positions)} switches,"
      f" {len(res.critical_words)} critical words")
for word in res.critical_words[:5]:
    print("  ", "".join(map(str, word)), " monovariant", ct.monovariant(word))
print("   ... down to", ct.monovariant(res.critical_words[-1]))

# Words with repeats are lifted to permutations by an exact perturbation.
lifted = ct.lift_word((4, 3, 2, 4, 2))
print("\nlift of 43242:", "".join(map(str, lifted.permutation)), f"(anchor {lifted.anchor})")

# Any two rearrangements are connected by a replayable certificate.
cert = ct.connect((1, 2, 1, 2), (2, 1, 1, 2))
print(f"\nconnecting 1212 to 2112 in {len(cert.moves)} moves; replay ->",
      "".join(map(str, cert.replay())))

# Tableau words of the same tableau read from different window anchors
# differ by rotations alone.
params = ct.CylParams(2, 4)
t = ct.tableau_validate(
    ct.SkewShape(ct.CylPartition(params, (2, 1)), ct.CylPartition(params, (0, 0))),
    [[1, 2], [3]],
)
from cyltab.tableau import shift_rows

print("\ntableau word:", ct.tableau_word(t), " shifted window word:", ct.tableau_word(shift_rows(t, 1)))
