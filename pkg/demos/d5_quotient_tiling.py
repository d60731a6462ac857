"""D5 acting on the ten cosets of D4: quotient poset, both refinements, tilings.

Writes SVG drawings to the directory given as the first argument
(default: ./demo_output).
"""
import sys
from pathlib import Path

from coxtile import (CoxeterGroup, build_embedding, build_poset, check_tiling,
                     count_linear_extensions, enumerate_min_reps, format_cycles, refine,
                     render_svg, tile_word)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

W = CoxeterGroup("D5")
print(W, "order", W.order(), "positive roots", W.num_positive_roots())

cosets = enumerate_min_reps(W, [1, 2, 3, 4])
poset = build_poset(cosets.reps)
print(f"{cosets.m} minimal coset representatives")
for i, j in poset.covers:
    print(f"  {poset.elements[i]!r:>12} < {poset.elements[j]!r}")

# the chain has one diamond, so there are exactly two refinements
print("linear extensions:", count_linear_extensions(poset))

for strategy in ("length-lex-desc", "length-lex-asc"):
    ext = refine(poset, strategy)
    table = build_embedding(cosets, ext)
    print(f"\n{strategy}:", " << ".join(repr(u) for u in ext.ordered_elements()))
    for s, img in table.images.items():
        print(f"  s{s} -> {img}")

table = build_embedding(cosets, refine(poset, "length-lex-desc"))
words = {
    "cpower": [5, 4, 3, 2, 1] * 4,
    "mixed": [5, 3, 4, 2, 3, 1, 2, 4, 3, 2, 5, 4, 5, 3, 4, 2, 1, 3, 4, 2],
}
for name, word in words.items():
    doc = tile_word(table, word)
    mega = [t.position for t in doc.tiles if not t.is_rhombus]
    print(f"\n{name}: {len(doc.tiles)} tiles, megatiles at letters {mega}")
    print("  polygon of", format_cycles(doc.frontiers[-1].perm))
    print("  checks:", check_tiling(doc, table))
    (out / f"d5_{name}.svg").write_text(render_svg(doc))
print("\nwrote", sorted(p.name for p in out.glob("d5_*.svg")))
