"""Weak and Bruhat orders, Hasse diagrams and linear extensions."""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Sequence

import numpy as np

from .coxeter import GroupElement


class RefinementError(ValueError):
    """A proposed total order is not a Bruhat refinement.

    ``witness`` is a pair ``(u, w)`` with ``u <_B w`` placed out of order, or
    ``None`` when the identity is not ranked first.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def bruhat_leq(u: GroupElement, w: GroupElement) -> bool:
    """``u <=_B w``, by the lifting recursion on the smallest right descent of ``w``."""
    u._check(w)
    memo = u.group.bruhat_memo
    key = (u.key(), w.key())
    hit = memo.get(key)
    if hit is not None:
        return hit
    lu, lw = u.length(), w.length()
    if lu > lw:
        result = False
    elif lu == lw:
        result = u.key() == w.key()
    elif lu == 0:
        result = True
    else:
        s = min(w.right_descents())
        g = w.group.generator(s)
        if u.has_right_descent(s):
            result = bruhat_leq(u * g, w * g)
        else:
            result = bruhat_leq(u, w * g)
    memo[key] = result
    return result


def weak_leq(u: GroupElement, w: GroupElement) -> bool:
    """Right weak order: some reduced word of ``u`` is a prefix of one of ``w``."""
    u._check(w)
    return u.length() + (u.inverse() * w).length() == w.length()


class Poset:
    """A finite poset on group elements.

    ``leq[i, j]`` is the (reflexive) relation and ``covers`` its transitive
    reduction as index pairs ``(i, j)`` with ``i`` covered by ``j``.
    """

    def __init__(self, elements: Sequence[GroupElement], leq: np.ndarray, relation: str):
        self.elements = list(elements)
        self.leq = leq
        self.relation = relation
        self.index = {w.key(): k for k, w in enumerate(self.elements)}
        self.covers = _transitive_reduction(leq)

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, w: GroupElement) -> int:
        try:
            return self.index[w.key()]
        except KeyError:
            raise KeyError(f"{w!r} is not an element of the poset") from None

    def less(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    def to_json(self) -> str:
        return json.dumps({
            "elements": [w.reduced_word() for w in self.elements],
            "covers": [list(c) for c in self.covers],
        })

    def to_dot(self, name: str = "poset") -> str:
        """Graphviz source; nodes of equal length share a rank."""
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for k, w in enumerate(self.elements):
            lines.append(f'  n{k} [label="{w!r}"];')
        by_length: dict[int, list[int]] = {}
        for k, w in enumerate(self.elements):
            by_length.setdefault(w.length(), []).append(k)
        for length in sorted(by_length):
            nodes = " ".join(f"n{k};" for k in by_length[length])
            lines.append(f"  {{ rank=same; {nodes} }}  // length {length}")
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _transitive_reduction(leq: np.ndarray) -> list[tuple[int, int]]:
    strict = leq.copy()
    np.fill_diagonal(strict, False)
    si = strict.astype(np.int64)
    # i < k < j for some k
    through = (si @ si) > 0
    cover = strict & ~through
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]


def transitive_closure(n: int, covers: Sequence[tuple[int, int]]) -> np.ndarray:
    """Reflexive transitive closure of a cover list, as a boolean matrix."""
    rel = np.eye(n, dtype=bool)
    for i, j in covers:
        rel[i, j] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


def build_poset(elements: Sequence[GroupElement], relation: str = "bruhat") -> Poset:
    cmp = {"bruhat": bruhat_leq, "weak": weak_leq}.get(relation)
    if cmp is None:
        raise ValueError(f"unknown relation {relation!r}")
    keys = [w.key() for w in elements]
    if len(set(keys)) != len(keys):
        raise ValueError("poset elements must be distinct")
    n = len(elements)
    leq = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j and elements[i].length() < elements[j].length():
                leq[i, j] = cmp(elements[i], elements[j])
    return Poset(elements, leq, relation)


class LinearExtension:
    """A total order on a poset's elements.

    ``order[r]`` is the poset index of the element ranked ``r`` and
    ``rank[i]`` the rank L of poset element ``i``.  Use :func:`refine` for
    validated refinements; building one directly (as the verification
    tests do) records whether it refines the poset without raising.
    """

    def __init__(self, poset: Poset, order: Sequence[int], name: str = "explicit"):
        order = [int(i) for i in order]
        if sorted(order) != list(range(len(poset))):
            raise ValueError("order must be a permutation of the poset indices")
        self.poset = poset
        self.order = order
        self.name = name
        self.rank = np.empty(len(order), dtype=np.int64)
        self.rank[order] = np.arange(len(order))
        self.violation = _first_violation(poset, self.rank)

    @property
    def is_refinement(self) -> bool:
        return self.violation is None

    def L(self, w: GroupElement) -> int:
        return int(self.rank[self.poset.position(w)])

    def ordered_elements(self) -> list[GroupElement]:
        return [self.poset.elements[i] for i in self.order]


def _first_violation(poset: Poset, rank: np.ndarray):
    for i, w in enumerate(poset.elements):
        if w.length() == 0 and rank[i] != 0:
            return ("identity", i)
    for i, j in zip(*np.nonzero(poset.leq)):
        if i != j and rank[i] > rank[j]:
            return (int(i), int(j))
    return None


def _resolve(poset: Poset, item) -> int:
    if isinstance(item, GroupElement):
        return poset.position(item)
    group = poset.elements[0].group
    return poset.position(group.word_to_element(item))


def refine(poset: Poset, strategy="length-lex-desc") -> LinearExtension:
    """Total refinement of the poset.

    ``strategy`` is ``"length-lex-asc"``, ``"length-lex-desc"`` (length
    first, ties broken by canonical reduced word ascending/descending) or an
    explicit sequence of elements or words, which is validated.
    """
    if isinstance(strategy, str):
        if strategy not in ("length-lex-asc", "length-lex-desc"):
            raise ValueError(f"unknown refinement strategy {strategy!r}")
        words = [w.reduced_word() for w in poset.elements]
        idx = sorted(range(len(poset)), key=lambda i: words[i],
                     reverse=strategy == "length-lex-desc")
        idx.sort(key=lambda i: poset.elements[i].length())
        ext = LinearExtension(poset, idx, name=strategy)
    else:
        ext = LinearExtension(poset, [_resolve(poset, x) for x in strategy])
    if ext.violation is not None:
        v = ext.violation
        if v[0] == "identity":
            raise RefinementError("the identity must be ranked first (L(1) = 0)")
        u, w = poset.elements[v[0]], poset.elements[v[1]]
        raise RefinementError(f"{u!r} < {w!r} in the order but is ranked after it",
                              witness=(u, w))
    return ext


def count_linear_extensions(poset: Poset, max_size: int = 20) -> int:
    """Exact number of linear extensions, by dynamic programming over down-sets."""
    n = len(poset)
    if n > max_size:
        raise ValueError(f"poset has {n} elements; counting is limited to {max_size}")
    below = [0] * n
    for i in range(n):
        for j in range(n):
            if poset.less(j, i):
                below[i] |= 1 << j
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(placed: int) -> int:
        if placed == full:
            return 1
        total = 0
        for i in range(n):
            bit = 1 << i
            if not placed & bit and below[i] & placed == below[i]:
                total += count(placed | bit)
        return total

    return count(0)
