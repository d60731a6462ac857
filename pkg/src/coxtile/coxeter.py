"""Finite Coxeter systems realized as permutations of their root systems.

Elements are stored as permutations of root indices, so multiplication is
index composition.  Words are read left to right: the element of the word
``[i1, i2, ..., ik]`` is ``s_i1 * s_i2 * ... * s_ik``.  Generators are
1-based throughout.
"""
from __future__ import annotations

import json
import re
from collections import deque
from typing import Iterable, Sequence

import numpy as np

ROOT_TOL = 1e-6


class GroupSpecError(ValueError):
    """Raised for malformed or non-finite group specifications."""


# ---------------------------------------------------------------------------
# Coxeter matrices and the group-spec DSL

def _chain(n: int, m: int = 3) -> list[tuple[int, int, int]]:
    return [(i, i + 1, m) for i in range(1, n)]


def _type_edges(letter: str, n: int) -> list[tuple[int, int, int]]:
    if letter == "A":
        if n < 1:
            raise GroupSpecError(f"A{n}: rank must be at least 1")
        return _chain(n)
    if letter == "B":
        if n < 2:
            raise GroupSpecError(f"B{n}: rank must be at least 2")
        return _chain(n - 1) + [(n - 1, n, 4)]
    if letter == "D":
        # s1 and s2 both hang off s3; s3 - s4 - ... - sn is a chain
        if n < 2:
            raise GroupSpecError(f"D{n}: rank must be at least 2")
        edges = [(1, 3, 3), (2, 3, 3)] if n >= 3 else []
        return edges + [(i, i + 1, 3) for i in range(3, n)]
    if letter == "E":
        if n not in (6, 7, 8):
            raise GroupSpecError(f"E{n}: rank must be 6, 7 or 8")
        return [(1, 3, 3), (2, 4, 3)] + [(i, i + 1, 3) for i in range(3, n)]
    if letter == "F":
        if n != 4:
            raise GroupSpecError(f"F{n}: only F4 is finite")
        return [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    if letter == "H":
        if n not in (3, 4):
            raise GroupSpecError(f"H{n}: only H3 and H4 are finite")
        return [(1, 2, 5)] + [(i, i + 1, 3) for i in range(2, n)]
    raise GroupSpecError(f"unknown type token {letter!r}")


def _factor_matrix(token: str) -> np.ndarray:
    m = re.fullmatch(r"I2\((\d+)\)", token)
    if m:
        order = int(m.group(1))
        if order < 2:
            raise GroupSpecError(f"{token}: dihedral order must be at least 2")
        n, edges = 2, [(1, 2, order)]
    else:
        m = re.fullmatch(r"([ABDEFH])(\d+)", token)
        if not m:
            raise GroupSpecError(f"unknown type token {token!r}")
        n = int(m.group(2))
        edges = _type_edges(m.group(1), n)
    mat = np.full((n, n), 2, dtype=np.int64)
    np.fill_diagonal(mat, 1)
    for i, j, order in edges:
        mat[i - 1, j - 1] = mat[j - 1, i - 1] = order
    return mat


class CoxeterMatrix:
    """Symmetric integer matrix ``m_ij`` defining a finite Coxeter system.

    ``factors`` holds the DSL tokens the matrix was built from, if any; it
    only affects :meth:`render`.
    """

    def __init__(self, entries, factors: Sequence[str] | None = None):
        mat = np.array(entries, dtype=np.int64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
            raise GroupSpecError("Coxeter matrix must be a non-empty square array")
        if not np.array_equal(mat, mat.T):
            raise GroupSpecError("Coxeter matrix must be symmetric")
        if np.any(np.diag(mat) != 1):
            raise GroupSpecError("Coxeter matrix must have 1 on the diagonal")
        off = mat[~np.eye(len(mat), dtype=bool)]
        if np.any(off < 2):
            raise GroupSpecError("off-diagonal entries must be at least 2")
        mat.setflags(write=False)
        self.entries = mat
        self.factors = tuple(factors) if factors else None
        if not self.is_finite():
            raise GroupSpecError("Coxeter matrix does not define a finite group")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> int:
        # 1-based access, m[i, j]
        i, j = ij
        return int(self.entries[i - 1, j - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __repr__(self) -> str:
        return f"CoxeterMatrix({self.render()})"

    def bilinear_form(self) -> np.ndarray:
        return -np.cos(np.pi / self.entries)

    def components(self) -> list[list[int]]:
        """Connected components of the Coxeter graph, as sorted 1-based index lists."""
        n = self.rank
        seen: set[int] = set()
        comps = []
        for start in range(n):
            if start in seen:
                continue
            comp, queue = [], deque([start])
            seen.add(start)
            while queue:
                i = queue.popleft()
                comp.append(i + 1)
                for j in range(n):
                    if j not in seen and self.entries[i, j] != 2 and i != j:
                        seen.add(j)
                        queue.append(j)
            comps.append(sorted(comp))
        return comps

    def is_finite(self) -> bool:
        # finite iff the cosine form is positive definite (componentwise
        # positive definite is the same thing for a block-diagonal form)
        eig = np.linalg.eigvalsh(self.bilinear_form())
        return bool(eig.min() > 1e-9)

    def render(self) -> str:
        """DSL text: the factor tokens joined by ``x``, or a JSON matrix."""
        if self.factors:
            return "x".join(self.factors)
        return json.dumps(self.entries.tolist(), separators=(",", ":"))


def parse_group_spec(text: str) -> CoxeterMatrix:
    """Parse ``"D5"``, ``"A2xA3"``, ``"I2(5)"`` or a JSON matrix.

    Generators are numbered left to right across the factors.
    """
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group spec")
    if text.startswith("["):
        try:
            entries = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"bad matrix JSON: {exc}") from None
        return CoxeterMatrix(entries)
    tokens = text.split("x")
    blocks = [_factor_matrix(tok.strip()) for tok in tokens]
    n = sum(len(b) for b in blocks)
    mat = np.full((n, n), 2, dtype=np.int64)
    k = 0
    for b in blocks:
        mat[k:k + len(b), k:k + len(b)] = b
        k += len(b)
    return CoxeterMatrix(mat, factors=[tok.strip() for tok in tokens])


# ---------------------------------------------------------------------------
# Root systems

class RootSystem:
    """Roots in simple-root coordinates; positives first, then negatives.

    ``roots[k + npos] == -roots[k]`` and the simple roots are ``roots[:n]``.
    ``reflections[i]`` is the permutation of root indices induced by the
    (0-based) simple reflection ``i``.
    """

    def __init__(self, roots: np.ndarray, npos: int, reflections: np.ndarray):
        self.roots = roots
        self.npos = npos
        self.reflections = reflections

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def rank(self) -> int:
        return self.roots.shape[1]

    def negate(self, k: int) -> int:
        return k + self.npos if k < self.npos else k - self.npos


def _root_key(v: np.ndarray) -> tuple:
    return tuple(np.rint(v / ROOT_TOL).astype(np.int64).tolist())


def build_root_system(matrix: CoxeterMatrix, max_roots: int = 100_000) -> RootSystem:
    """Close the simple roots under the simple reflections (breadth first)."""
    n = matrix.rank
    form = matrix.bilinear_form()

    def reflect(i, v):
        out = v.copy()
        out[i] -= 2.0 * (form[i] @ v)
        return out

    positives = [np.eye(n)[i] for i in range(n)]
    index = {_root_key(v): k for k, v in enumerate(positives)}
    k = 0
    while k < len(positives):
        v = positives[k]
        for i in range(n):
            if k == i:
                continue
            w = reflect(i, v)
            key = _root_key(w)
            if key in index:
                continue
            if np.any(w < -ROOT_TOL):
                raise GroupSpecError("root closure produced a mixed-sign root")
            index[key] = len(positives)
            positives.append(w)
            if 2 * len(positives) > max_roots:
                raise GroupSpecError(f"root closure exceeded {max_roots} roots")
        k += 1

    npos = len(positives)
    roots = np.vstack(positives + [-v for v in positives])
    for k in range(npos):
        index[_root_key(-positives[k])] = k + npos
    reflections = np.empty((n, 2 * npos), dtype=np.int32)
    for i in range(n):
        for k, v in enumerate(roots):
            w = reflect(i, v)
            j = index.get(_root_key(w))
            if j is None or np.abs(roots[j] - w).max() > ROOT_TOL:
                raise GroupSpecError("root system is not closed under reflections")
            reflections[i, k] = j
    roots.setflags(write=False)
    reflections.setflags(write=False)
    return RootSystem(roots, npos, reflections)


# ---------------------------------------------------------------------------
# Groups and elements

class GroupElement:
    """An element of a finite Coxeter group, as a permutation of roots.

    ``perm[k]`` is the index of ``w(root_k)``.  Supports ``*`` for the group
    product and ``~`` for the inverse.
    """

    __slots__ = ("group", "perm", "_length", "_inv", "_key")

    def __init__(self, group: "CoxeterGroup", perm: np.ndarray):
        perm.setflags(write=False)
        self.group = group
        self.perm = perm
        self._length = None
        self._inv = None
        self._key = None

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected a GroupElement, got {type(other).__name__}")
        if other.group is not self.group and other.group.matrix != self.group.matrix:
            raise ValueError("operands belong to different Coxeter groups")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, self.perm[other.perm])

    def inverse(self) -> "GroupElement":
        if self._inv is None:
            inv = np.empty_like(self.perm)
            inv[self.perm] = np.arange(len(self.perm), dtype=self.perm.dtype)
            self._inv = inv
        return GroupElement(self.group, self._inv.copy())

    __invert__ = inverse

    def _inverse_perm(self) -> np.ndarray:
        if self._inv is None:
            self.inverse()
        return self._inv

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.perm.tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group.matrix == other.group.matrix and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def length(self) -> int:
        if self._length is None:
            npos = self.group.roots.npos
            self._length = int(np.count_nonzero(self.perm[:npos] >= npos))
        return self._length

    def has_right_descent(self, s: int) -> bool:
        return bool(self.perm[s - 1] >= self.group.roots.npos)

    def has_left_descent(self, s: int) -> bool:
        return bool(self._inverse_perm()[s - 1] >= self.group.roots.npos)

    def right_descents(self) -> set[int]:
        """Generators ``s`` with ``l(ws) < l(w)``."""
        return {s for s in range(1, self.group.rank + 1) if self.has_right_descent(s)}

    def left_descents(self) -> set[int]:
        """Generators ``s`` with ``l(sw) < l(w)``."""
        return {s for s in range(1, self.group.rank + 1) if self.has_left_descent(s)}

    def is_identity(self) -> bool:
        return self.key() == self.group.identity().key()

    def reduced_word(self, side: str = "left") -> list[int]:
        return self.group.lex_min_reduced_word(self, side)

    def __repr__(self) -> str:
        word = self.reduced_word()
        return "e" if not word else "".join(f"s{i}" for i in word)


class CoxeterGroup:
    """A finite Coxeter group together with its root system.

    >>> W = CoxeterGroup("A2")
    >>> W.word_to_element([1, 2, 1]) == W.word_to_element([2, 1, 2])
    True
    """

    def __init__(self, spec: str | CoxeterMatrix, max_roots: int = 100_000):
        self.matrix = spec if isinstance(spec, CoxeterMatrix) else parse_group_spec(spec)
        self.roots = build_root_system(self.matrix, max_roots=max_roots)
        self._identity = GroupElement(self, np.arange(len(self.roots), dtype=np.int32))
        self._gens = [GroupElement(self, self.roots.reflections[i].copy())
                      for i in range(self.rank)]
        self._order = None
        self._reflections = None
        # shared memo for orders.bruhat_leq; plain dict ops are atomic under the GIL
        self.bruhat_memo: dict[tuple[bytes, bytes], bool] = {}

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def name(self) -> str:
        return self.matrix.render()

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.name})"

    def identity(self) -> GroupElement:
        return self._identity

    def generator(self, s: int) -> GroupElement:
        self._check_letter(s)
        return self._gens[s - 1]

    def generators(self) -> list[GroupElement]:
        return list(self._gens)

    def _check_letter(self, s) -> None:
        if not isinstance(s, (int, np.integer)) or not 1 <= s <= self.rank:
            raise ValueError(f"generator index {s!r} outside 1..{self.rank}")

    def check_word(self, word: Iterable[int]) -> list[int]:
        word = [int(s) for s in word]
        for s in word:
            self._check_letter(s)
        return word

    def word_to_element(self, word: Iterable[int]) -> GroupElement:
        perm = self._identity.perm
        for s in self.check_word(word):
            perm = perm[self.roots.reflections[s - 1]]
        return GroupElement(self, perm.copy())

    def element_from_perm(self, perm) -> GroupElement:
        return GroupElement(self, np.asarray(perm, dtype=np.int32).copy())

    def is_reduced(self, word: Sequence[int]) -> bool:
        word = self.check_word(word)
        return self.word_to_element(word).length() == len(word)

    def num_positive_roots(self) -> int:
        return self.roots.npos

    def longest_element(self) -> GroupElement:
        """Greedy ascent by the smallest non-descent until every generator descends."""
        w = self._identity
        while True:
            for s in range(1, self.rank + 1):
                if not w.has_right_descent(s):
                    w = w * self._gens[s - 1]
                    break
            else:
                return w

    def coxeter_element(self) -> GroupElement:
        return self.word_to_element(range(1, self.rank + 1))

    def power(self, w: GroupElement, k: int) -> GroupElement:
        if k < 0:
            raise ValueError("power must be non-negative")
        out = self._identity
        for _ in range(k):
            out = out * w
        return out

    def lex_min_reduced_word(self, w: GroupElement, side: str = "left") -> list[int]:
        """Greedy normal form.

        ``side="left"`` strips the smallest left descent each step and builds
        the word left to right (this is the lexicographically least reduced
        word).  ``side="right"`` strips the smallest right descent and builds
        the word right to left.
        """
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        word: list[int] = []
        while w.length() > 0:
            if side == "left":
                s = min(w.left_descents())
                w = self._gens[s - 1] * w
            else:
                s = min(w.right_descents())
                w = w * self._gens[s - 1]
            word.append(s)
        return word if side == "left" else word[::-1]

    def cayley_bfs(self, limit: int = 10**6):
        """Breadth-first walk of the right Cayley graph from the identity.

        Returns ``(elements, parents, letters)`` where ``elements[k] ==
        elements[parents[k]] * s_letters[k]``; the root has parent -1.
        Generators are tried in index order, so the recorded words are the
        canonical (lex-least) reduced words.
        """
        elements = [self._identity]
        parents, letters = [-1], [0]
        seen = {self._identity.key(): 0}
        k = 0
        while k < len(elements):
            w = elements[k]
            for s in range(1, self.rank + 1):
                if w.has_right_descent(s):
                    continue
                v = w * self._gens[s - 1]
                if v.key() not in seen:
                    seen[v.key()] = len(elements)
                    elements.append(v)
                    parents.append(k)
                    letters.append(s)
                    if len(elements) > limit:
                        raise ValueError(f"group has more than {limit} elements")
            k += 1
        return elements, parents, letters

    def elements(self, limit: int = 10**6) -> list[GroupElement]:
        return self.cayley_bfs(limit)[0]

    def parabolic_order(self, J: Iterable[int]) -> int:
        """Order of the standard parabolic subgroup generated by ``J``.

        Computed as a product of quotient sizes along a chain of parabolics,
        so it never enumerates the subgroup itself.
        """
        J = sorted(set(self.check_word(J)))
        total = 1
        for k in range(len(J), 0, -1):
            total *= len(_min_coset_reps(self, J[:k], J[:k - 1]))
        return total

    def order(self) -> int:
        if self._order is None:
            self._order = self.parabolic_order(range(1, self.rank + 1))
        return self._order

    def reflections(self) -> list[tuple[int, GroupElement]]:
        """All reflections, one per positive root, as ``(root index, element)``."""
        if self._reflections is None:
            rs = self.roots
            refl: dict[int, GroupElement] = {i: self._gens[i] for i in range(self.rank)}
            queue = deque(range(self.rank))
            while queue:
                k = queue.popleft()
                for i in range(self.rank):
                    j = int(rs.reflections[i, k])
                    if j < rs.npos and j not in refl:
                        g = self._gens[i]
                        refl[j] = g * refl[k] * g
                        queue.append(j)
            self._reflections = sorted(refl.items())
        return list(self._reflections)


def _min_coset_reps(group: CoxeterGroup, gens: Sequence[int], J: Sequence[int]):
    """Minimal representatives of ``W_J \\ W_gens`` (no left descent in ``J``)."""
    reps = [group.identity()]
    seen = {reps[0].key()}
    k = 0
    while k < len(reps):
        u = reps[k]
        for s in gens:
            v = u * group.generator(s)
            if v.key() in seen or any(v.has_left_descent(j) for j in J):
                continue
            seen.add(v.key())
            reps.append(v)
        k += 1
    return reps
