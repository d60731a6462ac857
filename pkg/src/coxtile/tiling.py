"""Elnitsky-style tilings of a 2m-gon from a reduced word.

The right boundary of the polygon is the identity frontier: edges with
directions ``d_1, ..., d_m`` read upwards from the base vertex.  Each letter
of the word permutes the frontier's edges inside the windows of its
transpositions; the region swept between the old and new frontier over a
window is one tile.  Interleaved transpositions share a window and give a
single larger tile (the type D megatile); disjoint ones give rhombi.

Every frontier is y-monotone (all directions point upwards), which makes
the partition property a pointwise comparison of consecutive frontiers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .coxeter import GroupElement
from .embedding import EmbeddingTable, GeneratorImage, invert, transposition_array

GEOM_TOL = 1e-6
DEFAULT_SPREAD = np.pi / 2


class NotReducedError(ValueError):
    """A letter does not extend the word so far to a longer element."""

    def __init__(self, position: int, letter: int, transposition: tuple[int, int]):
        a, b = transposition
        super().__init__(f"word not reduced at position {position} (letter s{letter}, "
                         f"transposition ({a},{b}))")
        self.position = position
        self.letter = letter
        self.transposition = transposition


class DirectionSet:
    """Unit edge directions ``d_p`` at angle ``pi/2 + (2p - m - 1) * spread / (2m)``.

    The fan is symmetric about the vertical and increasing in ``p``.
    ``spread=pi`` gives half of a regular 2m-gon.  With it some Bruhat steps
    fold over (e.g. type D megatiles whose edges use directions 1 and 8 of
    10), so tiles self-intersect.  The default ``pi/2`` keeps all directions
    within a right angle of each other; with it every step we have tested
    sweeps a simple region, and :func:`check_tiling` confirms this per word.
    """

    def __init__(self, m: int, spread: float = DEFAULT_SPREAD):
        if not 0 < spread <= np.pi:
            raise ValueError("spread must lie in (0, pi]")
        self.m = m
        self.spread = spread
        p = np.arange(1, m + 1)
        self.angles = np.pi / 2 + (2 * p - m - 1) * spread / (2 * m)
        self.vectors = np.column_stack([np.cos(self.angles), np.sin(self.angles)])

    def __getitem__(self, p: int) -> np.ndarray:
        return self.vectors[p - 1]


def _path(directions: DirectionSet, perm: np.ndarray) -> np.ndarray:
    # edge at (0-based) position i has direction index (i)perm^-1
    steps = directions.vectors[invert(perm)]
    return np.vstack([np.zeros((1, 2)), np.cumsum(steps, axis=0)])


@dataclass(frozen=True)
class Frontier:
    perm: np.ndarray
    path: np.ndarray

    @classmethod
    def initial(cls, directions: DirectionSet) -> "Frontier":
        perm = np.arange(directions.m)
        return cls(perm, _path(directions, perm))


@dataclass(frozen=True)
class Cluster:
    window: tuple[int, int]
    transpositions: tuple[tuple[int, int], ...]


@dataclass
class Tile:
    position: int
    generator: int
    window: tuple[int, int]
    vertices: np.ndarray

    @property
    def area(self) -> float:
        return polygon_area(self.vertices)

    def edge_lengths(self) -> np.ndarray:
        v = self.vertices
        return np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)

    @property
    def is_rhombus(self) -> bool:
        return len(self.vertices) == 4


@dataclass
class Outline:
    right: np.ndarray
    left: np.ndarray

    @property
    def polygon(self) -> np.ndarray:
        """Counter-clockwise vertex cycle: up the right side, down the left."""
        return np.vstack([self.right, self.left[-2:0:-1]])

    @property
    def area(self) -> float:
        return polygon_area(self.polygon)


@dataclass
class TilingDoc:
    outline: Outline
    tiles: list[Tile]
    word: list[int]
    frontiers: list[Frontier]
    metadata: dict = field(default_factory=dict)
    spread: float = DEFAULT_SPREAD

    @property
    def m(self) -> int:
        return len(self.outline.right) - 1


def polygon_area(vertices: np.ndarray) -> float:
    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_outline(table: EmbeddingTable, w: GroupElement | Sequence[int],
                    spread: float = DEFAULT_SPREAD) -> Outline:
    """Boundary of the polygon for ``w`` (an element or a word)."""
    directions = DirectionSet(table.m, spread)
    word = w.reduced_word() if isinstance(w, GroupElement) else list(w)
    return Outline(_path(directions, np.arange(table.m)),
                   _path(directions, table.image_of_word(word)))


def cluster_transpositions(img: GeneratorImage) -> list[Cluster]:
    """Group transpositions whose windows ``[a, b]`` share a point."""
    clusters: list[list[tuple[int, int]]] = []
    bounds: list[list[int]] = []
    for a, b in sorted(img.transpositions):
        if bounds and a <= bounds[-1][1]:
            clusters[-1].append((a, b))
            bounds[-1][1] = max(bounds[-1][1], b)
        else:
            clusters.append([(a, b)])
            bounds.append([a, b])
    return [Cluster((lo, hi), tuple(ts)) for (lo, hi), ts in zip(bounds, clusters)]


def advance_frontier(frontier: Frontier, table: EmbeddingTable, letter: int,
                     position: int, directions: DirectionSet | None = None):
    """Apply one letter: returns the new frontier and one tile per cluster.

    Raises :class:`NotReducedError` if some transposition ``(a, b)`` of the
    letter's image has ``(a)sigma^-1 > (b)sigma^-1``, i.e. the letter
    shortens the element.
    """
    directions = directions or DirectionSet(table.m)
    img = table.images[letter]
    sigma_inv = invert(frontier.perm)
    for a, b in img.transpositions:
        if sigma_inv[a - 1] > sigma_inv[b - 1]:
            raise NotReducedError(position, letter, (a, b))
    perm = table.generator_array(letter)[frontier.perm]
    new = Frontier(perm, _path(directions, perm))
    tiles = []
    for cl in cluster_transpositions(img):
        a, b = cl.window
        right = frontier.path[a - 1:b + 1]
        left = new.path[a:b][::-1]
        tiles.append(Tile(position, letter, cl.window, np.vstack([right, left])))
    return new, tiles


def tile_word(table: EmbeddingTable, word: Sequence[int], metadata: dict | None = None,
              spread: float = DEFAULT_SPREAD) -> TilingDoc:
    """Tile the polygon of ``word`` letter by letter; positions are 1-based."""
    word = table.group.check_word(word)
    directions = DirectionSet(table.m, spread)
    frontier = Frontier.initial(directions)
    frontiers = [frontier]
    tiles: list[Tile] = []
    for pos, s in enumerate(word, start=1):
        frontier, new_tiles = advance_frontier(frontier, table, s, pos, directions)
        frontiers.append(frontier)
        tiles.extend(new_tiles)
    outline = Outline(frontiers[0].path, frontier.path)
    meta = {"group": table.group.name, "m": table.m}
    if table.cosets is not None:
        meta["J"] = sorted(table.cosets.J)
    if table.extension is not None:
        meta["order"] = table.extension.name
    meta.update(metadata or {})
    return TilingDoc(outline, tiles, list(word), frontiers, meta, spread)


# ---------------------------------------------------------------------------
# Structural checks

def left_of(new: np.ndarray, old: np.ndarray, tol: float = GEOM_TOL) -> bool:
    """Whether y-monotone path ``new`` lies weakly left of ``old`` everywhere."""
    ys = np.union1d(new[:, 1], old[:, 1])
    return bool(np.all(np.interp(ys, new[:, 1], new[:, 0])
                       <= np.interp(ys, old[:, 1], old[:, 0]) + tol))


@dataclass
class TilingCheck:
    closure: bool
    conservation: bool
    nested_frontiers: bool
    unit_edges: bool
    positive_tiles: bool
    tile_count: bool

    @property
    def ok(self) -> bool:
        return all(vars(self).values())


def check_tiling(doc: TilingDoc, table: EmbeddingTable, tol: float = GEOM_TOL) -> TilingCheck:
    """Closure, area conservation, frontier nesting and per-tile sanity."""
    m = doc.m
    final = doc.frontiers[-1]
    target = polygon_outline(table, doc.word, doc.spread)
    closure = bool(np.array_equal(final.perm, table.image_of_word(doc.word))
                   and np.abs(final.path - target.left).max() <= tol)
    total = sum(t.area for t in doc.tiles)
    conservation = abs(total - doc.outline.area) <= tol * m
    nested = all(left_of(b.path, a.path, tol) for a, b in zip(doc.frontiers, doc.frontiers[1:]))
    unit = all(np.abs(t.edge_lengths() - 1).max() <= tol for t in doc.tiles) if doc.tiles else True
    positive = all(t.area > tol for t in doc.tiles)
    expected = sum(len(cluster_transpositions(table.images[s])) for s in doc.word)
    return TilingCheck(closure, conservation, nested, unit, positive, expected == len(doc.tiles))


# ---------------------------------------------------------------------------
# Rendering

PALETTE = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
           "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"]


def _num(v: float, digits: int) -> float:
    r = round(float(v), digits)
    return 0.0 if r == 0 else r


def render_json(doc: TilingDoc) -> str:
    """JSON with coordinates rounded to 6 decimals (byte-stable)."""
    pts = lambda arr: [[_num(x, 6), _num(y, 6)] for x, y in arr]
    data = {
        "m": doc.m,
        "group": doc.metadata.get("group"),
        "J": doc.metadata.get("J", []),
        "word": doc.word,
        "outline": pts(doc.outline.polygon),
        "tiles": [{"pos": t.position, "gen": t.generator, "window": list(t.window),
                   "vertices": pts(t.vertices)} for t in doc.tiles],
    }
    return json.dumps(data, indent=1)


def render_svg(doc: TilingDoc, scale: float = 30.0, margin: float = 10.0,
               upto: int | None = None, stroke: str = "#000000") -> str:
    """SVG 1.1 drawing; ``upto`` keeps only tiles from the first ``upto`` letters."""
    poly = doc.outline.polygon
    xmin, ymin = poly.min(axis=0)
    xmax, ymax = poly.max(axis=0)
    width = (xmax - xmin) * scale + 2 * margin
    height = (ymax - ymin) * scale + 2 * margin

    def fmt(arr):
        return " ".join(f"{_num((x - xmin) * scale + margin, 3):.3f},"
                        f"{_num((ymax - y) * scale + margin, 3):.3f}" for x, y in arr)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
    ]
    for t in doc.tiles:
        if upto is not None and t.position > upto:
            continue
        color = PALETTE[(t.generator - 1) % len(PALETTE)]
        lines.append(f'<polygon points="{fmt(t.vertices)}" fill="{color}" '
                     f'fill-opacity="0.6" stroke="{stroke}" stroke-width="1" '
                     f'data-pos="{t.position}" data-gen="{t.generator}"/>')
    lines.append(f'<path d="M {fmt(poly)} Z" fill="none" stroke="{stroke}" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def step_frames(doc: TilingDoc, **options) -> list[str]:
    """One SVG per prefix of the word, the empty prefix included."""
    return [render_svg(doc, upto=k, **options) for k in range(len(doc.word) + 1)]
