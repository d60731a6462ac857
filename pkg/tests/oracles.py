"""Brute-force oracles that share no code path with the package.

Group elements here are geometric-representation matrices (rounded for
hashing), permutations of 1..n for type A, or integer root vectors built
from a Cartan matrix.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np


def reflection_matrices(m):
    """Geometric representation of a Coxeter matrix (list of lists)."""
    m = np.array(m, dtype=float)
    form = -np.cos(np.pi / m)
    n = len(m)
    mats = []
    for i in range(n):
        s = np.eye(n)
        s[i, :] -= 2 * form[i, :]
        mats.append(s)
    return mats


def _key(mat):
    return tuple(np.round(mat, 6).ravel().tolist())


class MatrixGroup:
    """Cayley-graph enumeration on matrices; distance from 1 is the length."""

    def __init__(self, coxeter_matrix):
        self.gens = reflection_matrices(coxeter_matrix)
        n = len(self.gens)
        start = np.eye(n)
        self.dist = {_key(start): 0}
        self.mats = {_key(start): start}
        queue = deque([start])
        while queue:
            g = queue.popleft()
            d = self.dist[_key(g)]
            for s in self.gens:
                h = g @ s
                k = _key(h)
                if k not in self.dist:
                    self.dist[k] = d + 1
                    self.mats[k] = h
                    queue.append(h)

    def __len__(self):
        return len(self.dist)

    def of_word(self, word):
        g = np.eye(len(self.gens))
        for i in word:
            g = g @ self.gens[i - 1]
        return g

    def length(self, word) -> int:
        return self.dist[_key(self.of_word(word))]

    def same(self, w1, w2) -> bool:
        return _key(self.of_word(w1)) == _key(self.of_word(w2))


def cartan_positive_root_count(m) -> int:
    """Positive roots by integer closure with a Cartan matrix (crystallographic only)."""
    n = len(m)
    a = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            if i == j:
                a[i, j] = 2
            elif m[i][j] == 2:
                a[i, j] = 0
            elif m[i][j] == 3:
                a[i, j] = -1
            elif m[i][j] in (4, 6):
                # long root at the smaller index
                a[i, j] = -1 if i < j else -(m[i][j] // 2)
            else:
                raise ValueError("not crystallographic")
    roots = {tuple(int(i == k) for i in range(n)) for k in range(n)}
    queue = deque(roots)
    while queue:
        r = queue.popleft()
        for i in range(n):
            # s_i(r) = r - <r, alpha_i^vee> alpha_i
            pairing = sum(r[j] * a[j, i] for j in range(n))
            v = list(r)
            v[i] -= pairing
            v = tuple(v)
            if all(x >= 0 for x in v) and any(v) and v not in roots:
                roots.add(v)
                queue.append(v)
    return len(roots)


def sym_of_word(word, n):
    """Type A_{n-1} as Sym(n); s_i = (i, i+1); returns one-line notation of the map, left to right."""
    p = list(range(n))
    for i in word:
        # apply s_i after p: (x)p s_i
        p = [i if x == i - 1 else i - 1 if x == i else x for x in p]
    return tuple(p)


def all_words(rank, length):
    return itertools.product(range(1, rank + 1), repeat=length)


def subword_bruhat_leq(group, u, word_w) -> bool:
    """u <= w iff some reduced subword of the reduced word ``word_w`` gives u.

    Dynamic programming over the letters, keeping only products of reduced
    subwords (length grows by one with each kept letter).
    """
    reach = {group.identity().key(): group.identity()}
    for s in word_w:
        g = group.generator(s)
        new = dict(reach)
        for x in reach.values():
            y = x * g
            if y.length() == x.length() + 1:
                new.setdefault(y.key(), y)
        reach = new
    return u.key() in reach


def is_linear_extension(order, less) -> bool:
    """``order`` lists indices; ``less(i, j)`` is the strict relation."""
    rank = {x: k for k, x in enumerate(order)}
    return all(rank[i] < rank[j] for i in order for j in order if less(i, j))


def partition_defects(tile_polygons, outline):
    """Shapely check that tiles partition the outline.

    Returns ``(invalid, overlap, mismatch)``: the number of invalid tile
    polygons, total tile area minus union area, and the area of the
    symmetric difference between the union and the outline.
    """
    from shapely.geometry import Polygon
    from shapely.ops import unary_union

    # snap to a 1e-9 grid; shared edges otherwise differ by float noise
    polys = [Polygon(np.round(v, 9)) for v in tile_polygons]
    invalid = sum(not p.is_valid for p in polys)
    if invalid:
        return invalid, float("nan"), float("nan")
    union = unary_union(polys)
    overlap = sum(p.area for p in polys) - union.area
    mismatch = union.symmetric_difference(Polygon(np.round(outline, 9))).area
    return 0, overlap, mismatch


def first_non_reduced(group, word):
    """1-based position of the first letter that shortens the prefix, or None."""
    w = group.identity()
    for k, s in enumerate(word, start=1):
        nxt = w * group.generator(s)
        if nxt.length() < w.length():
            return k
        w = nxt
    return None


def random_reduced_word(group, rng, length):
    """Extend by a random non-descent until ``length`` letters or w0."""
    w = group.identity()
    word = []
    while len(word) < length:
        ups = [s for s in range(1, group.rank + 1) if not w.has_right_descent(s)]
        if not ups:
            break
        s = rng.choice(ups)
        word.append(s)
        w = w * group.generator(s)
    return word
