"""Minimal representatives of right cosets ``W_J u`` and the coset action.

A right coset ``W_J u`` has a unique shortest element, characterised by
having no left descent in ``J``.  The group acts on the cosets by right
multiplication, which composes correctly with left-to-right words.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .coxeter import CoxeterGroup, GroupElement


class ParabolicError(ValueError):
    pass


def _check_J(group: CoxeterGroup, J: Iterable[int], proper: bool = True) -> frozenset:
    J = frozenset(group.check_word(J))
    if proper and len(J) == group.rank:
        raise ParabolicError("J must be a proper subset of the generators")
    return J


def is_min_rep(w: GroupElement, J: Iterable[int]) -> bool:
    return not any(w.has_left_descent(j) for j in J)


class CosetSystem:
    """Minimal coset representatives in breadth-first discovery order.

    ``action[s - 1, i]`` is the index of the representative of
    ``reps[i] * s``.  Index order is the discovery order, which grows with
    length and has the identity at 0; the L-ranks used by embeddings come
    from a :class:`~coxtile.orders.LinearExtension`, not from this order.
    """

    def __init__(self, group: CoxeterGroup, J: frozenset, reps: list, action: np.ndarray):
        self.group = group
        self.J = J
        self.reps = reps
        self.action = action
        self.index = {u.key(): k for k, u in enumerate(reps)}

    @property
    def m(self) -> int:
        return len(self.reps)

    def __len__(self) -> int:
        return len(self.reps)

    def position(self, w: GroupElement) -> int:
        """Index of the coset containing ``w``."""
        return self.index[project(w, self.J).key()]

    def act(self, i: int, word: Iterable[int]) -> int:
        for s in word:
            i = int(self.action[s - 1, i])
        return i

    def to_json(self) -> str:
        return json.dumps({
            "m": self.m,
            "reps": [u.reduced_word() for u in self.reps],
            "action": {str(s + 1): row.tolist() for s, row in enumerate(self.action)},
        })


def enumerate_min_reps(group: CoxeterGroup, J: Iterable[int]) -> CosetSystem:
    """Breadth-first enumeration of ``W^J`` with the generator action table."""
    J = _check_J(group, J)
    reps = [group.identity()]
    index = {reps[0].key(): 0}
    columns: list[list[int]] = []
    k = 0
    while k < len(reps):
        u = reps[k]
        col = []
        for s in range(1, group.rank + 1):
            v = u * group.generator(s)
            if not is_min_rep(v, J):
                # Deodhar: u s = s_j u for some j in J, so the coset is fixed
                if not any(group.generator(j) * u == v for j in J):
                    raise AssertionError(f"Deodhar dichotomy failed at {u!r}, s{s}")
                col.append(k)
                continue
            j = index.get(v.key())
            if j is None:
                j = index[v.key()] = len(reps)
                reps.append(v)
            col.append(j)
        columns.append(col)
        k += 1
    action = np.array(columns, dtype=np.int64).T.copy()
    action.setflags(write=False)
    return CosetSystem(group, J, reps, action)


def project(w: GroupElement, J: Iterable[int]) -> GroupElement:
    """Minimal representative of ``W_J w``: strip left descents in ``J``."""
    J = sorted(set(J))
    group = w.group
    while True:
        for j in J:
            if w.has_left_descent(j):
                w = group.generator(j) * w
                break
        else:
            return w


def decompose(w: GroupElement, J: Iterable[int]) -> tuple[GroupElement, GroupElement]:
    """Split ``w = a * u`` with ``a`` in ``W_J`` and ``u`` minimal; lengths add."""
    J = set(J)
    u = project(w, J)
    a = w * u.inverse()
    word = a.reduced_word()
    if not set(word) <= J or a.length() + u.length() != w.length():
        raise AssertionError(f"parabolic decomposition of {w!r} failed")
    return a, u


@dataclass
class CoreFreeResult:
    faithful: bool
    mode: str
    witness: GroupElement | None = None

    def __bool__(self) -> bool:
        return self.faithful


def _acts_trivially(cosets: CosetSystem, word) -> bool:
    points = np.arange(cosets.m)
    for s in word:
        points = cosets.action[s - 1][points]
    return bool(np.array_equal(points, np.arange(cosets.m)))


def core_free_check(group: CoxeterGroup, J: Iterable[int], mode: str = "exhaustive",
                    samples: int = 1000, seed: int = 0) -> CoreFreeResult:
    """Is the action of ``W`` on ``W_J``-cosets faithful?

    ``"exhaustive"`` checks every element (needs ``|W| <= 10**6``).
    ``"sampled"`` checks the longest element, the Coxeter element, random
    words and the generators of ``W_J``; a sampled pass is only advisory.
    """
    J = _check_J(group, J)
    cosets = enumerate_min_reps(group, J)
    if mode == "exhaustive":
        elements, parents, letters = group.cayley_bfs(limit=10**6)
        images = [np.arange(cosets.m)]
        for k in range(1, len(elements)):
            img = cosets.action[letters[k] - 1][images[parents[k]]]
            images.append(img)
            if np.array_equal(img, images[0]):
                return CoreFreeResult(False, mode, elements[k])
        return CoreFreeResult(True, mode)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    tests = [group.longest_element().reduced_word(), list(range(1, group.rank + 1))]
    tests += [[j] for j in sorted(J)]
    top = group.num_positive_roots()
    for _ in range(samples):
        tests.append([rng.randint(1, group.rank) for _ in range(rng.randint(1, top))])
    for word in tests:
        w = group.word_to_element(word)
        if w.length() > 0 and _acts_trivially(cosets, word):
            return CoreFreeResult(False, mode, w)
    return CoreFreeResult(True, mode)
