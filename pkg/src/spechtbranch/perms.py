"""Permutations as 1-based one-line tuples, acting on the right.

``p[i-1]`` is the image of ``i``.  Products compose left to right:
``compose(p, q)`` applies p first, matching the row-vector convention used
by the module code (vectors times matrices, matrices multiplied in
application order).
"""

from __future__ import annotations

from functools import lru_cache

Perm = tuple[int, ...]


def identity_perm(k: int) -> Perm:
    return tuple(range(1, k + 1))


def transposition(k: int, i: int, j: int) -> Perm:
    if not (1 <= i <= k and 1 <= j <= k and i != j):
        raise ValueError(f"bad transposition ({i},{j}) in degree {k}")
    img = list(range(1, k + 1))
    img[i - 1], img[j - 1] = j, i
    return tuple(img)


def adjacent(k: int, i: int) -> Perm:
    """The Coxeter generator s_i = (i, i+1) in degree k."""
    return transposition(k, i, i + 1)


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    if len(p) != len(q):
        raise ValueError("degrees differ")
    return tuple(q[x - 1] for x in p)


def inverse(p: Perm) -> Perm:
    img = [0] * len(p)
    for i, x in enumerate(p):
        img[x - 1] = i + 1
    return tuple(img)


def embed(p: Perm, k: int) -> Perm:
    """View p inside the symmetric group of (larger) degree k."""
    if len(p) > k:
        raise ValueError(f"cannot embed degree {len(p)} into degree {k}")
    return p + tuple(range(len(p) + 1, k + 1))


def perm_sign(p: Perm) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def adjacent_word(p: Perm) -> tuple[int, ...]:
    """Indices i_1, ..., i_T with p = s_{i_1} s_{i_2} ... s_{i_T}.

    Bubble sort of the one-line form; each recorded swap is a Coxeter
    generator, applied in the recorded order.
    """
    arr = list(p)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
                changed = True
    return tuple(word)
