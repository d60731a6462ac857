"""A2 x A3 with a hand-picked refinement of the 3 x 4 grid poset."""
from coxtile import (CoxeterGroup, build_embedding, build_poset, check_tiling,
                     enumerate_min_reps, refine, tile_word, verify_strong_E)

W = CoxeterGroup("A2xA3")
cosets = enumerate_min_reps(W, [1, 3, 4])
poset = build_poset(cosets.reps)
print(f"|W| = {W.order()}, |W^J| = {cosets.m}, {len(poset.covers)} covers")

# rows of the grid come from the A2 factor, columns from A3
order = [[], [2], [2, 1], [5], [2, 5], [2, 1, 5], [5, 4], [2, 5, 4], [2, 1, 5, 4],
         [5, 4, 3], [5, 4, 3, 2], [5, 4, 3, 2, 1]]
table = build_embedding(cosets, refine(poset, order))
for s, img in table.images.items():
    print(f"s{s} -> {img}")
print(verify_strong_E(table).summary())

word = [1, 2, 3, 4, 5, 4, 3, 4]
doc = tile_word(table, word)
print(f"{word}: {len(doc.tiles)} tiles on a {2 * doc.m}-gon,",
      "ok" if check_tiling(doc, table).ok else "FAILED")
