"""E8 on the 240 cosets of E7: two reduced words for w0 tiled on a 480-gon."""
import sys
import time
from pathlib import Path

from coxtile import (CoxeterGroup, build_embedding, build_poset, check_tiling,
                     enumerate_min_reps, refine, render_svg, tile_word, verify_strong_E)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

t0 = time.perf_counter()
W = CoxeterGroup("E8")
w0 = W.longest_element()
print(f"|W| = {W.order()}, l(w0) = {w0.length()}  ({time.perf_counter() - t0:.1f}s)")

cosets = enumerate_min_reps(W, range(1, 8))
table = build_embedding(cosets, refine(build_poset(cosets.reps)))
print(f"m = {table.m}  ({time.perf_counter() - t0:.1f}s)")
print(verify_strong_E(table, scope=200, seed=0).summary())

cpow = list(range(1, 9)) * 15
print("c^15 reduced:", W.is_reduced(cpow), " equals w0:", W.word_to_element(cpow) == w0)

for name, word in [("cpower", cpow), ("lexmin", W.lex_min_reduced_word(w0, side="right"))]:
    doc = tile_word(table, word)
    chk = check_tiling(doc, table)
    print(f"{name}: {len(doc.tiles)} tiles, closure={chk.closure}, "
          f"conservation={chk.conservation}  ({time.perf_counter() - t0:.1f}s)")
    (out / f"e8_{name}.svg").write_text(render_svg(doc, scale=8))
