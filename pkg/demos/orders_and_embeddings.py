"""Which total orders of A2 give strong E-embeddings?

Every order with the identity first is tried; the strong condition holds
exactly for the Bruhat refinements.
"""
import itertools

from coxtile import (CoxeterGroup, build_embedding, build_poset, enumerate_min_reps,
                     verify_E, verify_strong_E)
from coxtile.orders import LinearExtension

W = CoxeterGroup("A2")
cosets = enumerate_min_reps(W, [])
poset = build_poset(cosets.reps)

rows = []
for rest in itertools.permutations(range(1, 6)):
    ext = LinearExtension(poset, (0,) + rest)
    table = build_embedding(cosets, ext, check=False)
    rows.append((ext.is_refinement, verify_strong_E(table).passed, verify_E(table).passed, ext))

print("refinement  strong-E  E   count")
for key, group in itertools.groupby(sorted(rows, key=lambda r: r[:3]), key=lambda r: r[:3]):
    print(f"{key[0]!s:>10} {key[1]!s:>9} {key[2]!s:>5} {len(list(group)):>5}")

print("\nthe refinements:")
for ref, strong, _, ext in rows:
    if ref:
        print("  ", " << ".join(repr(u) for u in ext.ordered_elements()))
