"""Permutation embeddings from coset systems and total orders, and their checks.

Permutations of ``m`` points act on the right and compose left to right.
Internally a permutation is a 0-based integer array ``p`` with
``p[i] = (i)sigma``; everything user-facing uses points ``1..m``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .coxeter import CoxeterGroup, GroupElement
from .orders import LinearExtension, RefinementError
from .parabolic import CosetSystem


# ---------------------------------------------------------------------------
# Permutation helpers

def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """``p`` then ``q``."""
    return q[p]


def invert(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p))
    return inv


def transposition_array(m: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    p = np.arange(m)
    for a, b in pairs:
        p[a - 1], p[b - 1] = b - 1, a - 1
    return p


def involution_pairs(p: np.ndarray) -> list[tuple[int, int]]:
    """1-based disjoint transpositions of an involution."""
    if not np.array_equal(p[p], np.arange(len(p))):
        raise ValueError("permutation is not an involution")
    return [(i + 1, int(p[i]) + 1) for i in range(len(p)) if p[i] > i]


def format_cycles(p: np.ndarray) -> str:
    """Cycle notation on points 1..m, e.g. ``(1,10)(2,9)``; ``()`` for the identity."""
    seen = np.zeros(len(p), dtype=bool)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = int(p[j])
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def sym_bruhat_leq(x: np.ndarray, y: np.ndarray) -> bool:
    """Bruhat order on permutations, by the rank-matrix (tableau) criterion."""
    n = len(x)
    # r[i, k] = #{a <= i : x(a) >= k}
    rx = np.cumsum(np.eye(n, dtype=np.int64)[x][:, ::-1].cumsum(axis=1), axis=0)
    ry = np.cumsum(np.eye(n, dtype=np.int64)[y][:, ::-1].cumsum(axis=1), axis=0)
    return bool(np.all(rx <= ry))


def bruhat_step_up(sigma_inv: np.ndarray, a: int, b: int) -> bool:
    """Whether ``sigma < sigma (a,b)`` for 1-based ``a < b``: ``(a)sigma^-1 < (b)sigma^-1``."""
    return bool(sigma_inv[a - 1] < sigma_inv[b - 1])


# ---------------------------------------------------------------------------
# Embedding tables

@dataclass(frozen=True)
class GeneratorImage:
    generator: int
    transpositions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        points = [p for t in self.transpositions for p in t]
        if len(points) != len(set(points)):
            raise ValueError(f"image of s{self.generator} has overlapping transpositions")
        if any(a >= b for a, b in self.transpositions):
            raise ValueError("transpositions must be written (a, b) with a < b")
        object.__setattr__(self, "transpositions", tuple(sorted(self.transpositions)))

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.transpositions) or "()"


class EmbeddingTable:
    """Generator images on ``m`` points.

    ``extension`` and ``cosets`` are ``None`` for imported tables.
    """

    def __init__(self, group: CoxeterGroup, m: int, images: dict[int, GeneratorImage],
                 extension: LinearExtension | None = None, cosets: CosetSystem | None = None):
        if sorted(images) != list(range(1, group.rank + 1)):
            raise ValueError("need exactly one image per generator")
        for img in images.values():
            if img.transpositions and img.transpositions[-1][1] > m:
                raise ValueError(f"image of s{img.generator} moves a point beyond {m}")
        self.group = group
        self.m = m
        self.images = images
        self.extension = extension
        self.cosets = cosets
        self._arrays = [transposition_array(m, images[s].transpositions)
                        for s in range(1, group.rank + 1)]

    def generator_array(self, s: int) -> np.ndarray:
        return self._arrays[s - 1]

    def image_of_word(self, word: Iterable[int]) -> np.ndarray:
        p = np.arange(self.m)
        for s in self.group.check_word(word):
            p = self._arrays[s - 1][p]
        return p

    def image_of_element(self, w: GroupElement) -> np.ndarray:
        return self.image_of_word(w.reduced_word())

    def to_json(self) -> str:
        return json.dumps({
            "m": self.m,
            "points_base": 1,
            "generators": {str(s): [list(t) for t in img.transpositions]
                           for s, img in sorted(self.images.items())},
        })

    @classmethod
    def from_json(cls, text: str, group: CoxeterGroup) -> "EmbeddingTable":
        data = json.loads(text)
        if data.get("points_base", 1) != 1:
            raise ValueError("only 1-based embedding files are supported")
        images = {int(s): GeneratorImage(int(s), tuple(tuple(t) for t in pairs))
                  for s, pairs in data["generators"].items()}
        return cls(group, int(data["m"]), images)


def image_of_word(table: EmbeddingTable, word: Iterable[int]) -> np.ndarray:
    return table.image_of_word(word)


def build_embedding(cosets: CosetSystem, extension: LinearExtension,
                    check: bool = True) -> EmbeddingTable:
    """Generator images ``prod (L(u)+1, L(us)+1)`` over ``u < us`` in ``W^J``.

    With ``check`` the extension must be a Bruhat refinement; pass
    ``check=False`` to build tables from arbitrary orders for verification.
    """
    poset = extension.poset
    if len(poset) != cosets.m or any(poset.position(u) != k for k, u in enumerate(cosets.reps)):
        raise ValueError("the linear extension is not on this coset system's representatives")
    if check and not extension.is_refinement:
        raise RefinementError("the linear extension is not a Bruhat refinement")
    group = cosets.group
    rank = extension.rank
    images = {}
    for s in range(1, group.rank + 1):
        row = cosets.action[s - 1]
        pairs = []
        for i in range(cosets.m):
            j = int(row[i])
            if j != i and cosets.reps[j].length() == cosets.reps[i].length() + 1:
                a, b = sorted((int(rank[i]) + 1, int(rank[j]) + 1))
                pairs.append((a, b))
        images[s] = GeneratorImage(s, tuple(pairs))
    return EmbeddingTable(group, cosets.m, images, extension=extension, cosets=cosets)


# ---------------------------------------------------------------------------
# Verification

@dataclass
class Violation:
    word: list[int]
    letter: int | None
    detail: str


@dataclass
class VerificationReport:
    check: str
    scope: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        seed = "" if self.seed is None else f" seed={self.seed}"
        return (f"{self.check}: {status} scope={self.scope}{seed} "
                f"checked={self.checked} violations={len(self.violations)}")


def _scope_elements(table: EmbeddingTable, scope, seed: int):
    """Yield ``(word, element, image)`` triples for a verification scope."""
    group = table.group
    if scope == "exhaustive":
        elements, parents, letters = group.cayley_bfs()
        images = [np.arange(table.m)]
        words: list[list[int]] = [[]]
        for k in range(1, len(elements)):
            images.append(table.generator_array(letters[k])[images[parents[k]]])
            words.append(words[parents[k]] + [letters[k]])
        for k, w in enumerate(elements):
            yield words[k], w, images[k]
        return
    if isinstance(scope, int):
        rng = random.Random(seed)
        top = group.num_positive_roots()
        for _ in range(scope):
            word = [rng.randint(1, group.rank) for _ in range(rng.randint(0, top))]
            yield word, group.word_to_element(word), table.image_of_word(word)
        return
    for word in scope:
        word = group.check_word(word)
        yield word, group.word_to_element(word), table.image_of_word(word)


def _scope_name(scope) -> str:
    if scope == "exhaustive":
        return "exhaustive"
    if isinstance(scope, int):
        return f"sampled({scope})"
    return "explicit"


def verify_strong_E(table: EmbeddingTable, scope="exhaustive", seed: int = 0) -> VerificationReport:
    """Every transposition of ``phi(s)`` is a Bruhat step up from ``phi(w)`` when ``w < ws``.

    ``scope`` is ``"exhaustive"``, an integer sample count, or an explicit
    iterable of words.
    """
    report = VerificationReport("strong-E", _scope_name(scope),
                                seed=seed if isinstance(scope, int) else None)
    group = table.group
    for word, w, sigma in _scope_elements(table, scope, seed):
        sigma_inv = invert(sigma)
        for s in range(1, group.rank + 1):
            if w.has_right_descent(s):
                continue
            for a, b in table.images[s].transpositions:
                report.checked += 1
                if not bruhat_step_up(sigma_inv, a, b):
                    report.violations.append(Violation(
                        word, s, f"phi(w) !< phi(w)({a},{b}) with phi(w)={format_cycles(sigma)}"))
    return report


def verify_strong_E_reflections(table: EmbeddingTable, scope="exhaustive",
                                seed: int = 0) -> VerificationReport:
    """The same check quantified over all reflections ``t`` with ``w < wt``."""
    report = VerificationReport("strong-E-reflections", _scope_name(scope),
                                seed=seed if isinstance(scope, int) else None)
    group = table.group
    npos = group.roots.npos
    refl = [(k, t, involution_pairs(table.image_of_element(t))) for k, t in group.reflections()]
    for word, w, sigma in _scope_elements(table, scope, seed):
        sigma_inv = invert(sigma)
        for k, t, pairs in refl:
            if w.perm[k] >= npos:
                # w(alpha_t) < 0, so wt < w
                continue
            for a, b in pairs:
                report.checked += 1
                if not bruhat_step_up(sigma_inv, a, b):
                    report.violations.append(Violation(
                        word, None, f"t={t!r}: phi(w) !< phi(w)({a},{b})"))
    return report


def verify_E(table: EmbeddingTable, scope="exhaustive", seed: int = 0,
             all_pairs: bool = False) -> VerificationReport:
    """``u <_R v`` implies ``phi(u) <_B phi(v)`` in the symmetric group.

    By default only weak-order covers ``w < ws`` are checked, which implies
    the full statement by transitivity of both orders.  ``all_pairs`` (with
    the exhaustive scope) checks every comparable pair directly.
    """
    report = VerificationReport("E", _scope_name(scope) + (" all-pairs" if all_pairs else ""),
                                seed=seed if isinstance(scope, int) else None)
    group = table.group
    items = list(_scope_elements(table, scope, seed))
    if all_pairs:
        from .orders import weak_leq
        for wu, u, pu in items:
            for wv, v, pv in items:
                if u.length() < v.length() and weak_leq(u, v):
                    report.checked += 1
                    if not sym_bruhat_leq(pu, pv) or np.array_equal(pu, pv):
                        report.violations.append(Violation(wv, None, f"fails against {wu}"))
        return report
    for word, w, sigma in items:
        for s in range(1, group.rank + 1):
            if w.has_right_descent(s):
                continue
            nxt = table.generator_array(s)[sigma]
            report.checked += 1
            if np.array_equal(nxt, sigma) or not sym_bruhat_leq(sigma, nxt):
                report.violations.append(Violation(word, s, "phi(w) !< phi(ws)"))
    return report
