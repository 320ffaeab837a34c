"""Finite-word utilities: border tables, primitivity, canonical rotations."""

from __future__ import annotations

Word = tuple[int, ...]


def failure_function(w: Word) -> list[int]:
    """KMP border table: f[i] = length of the longest proper border of w[:i+1]."""
    f = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = f[k - 1]
        if w[i] == w[k]:
            k += 1
        f[i] = k
    return f


def primitive_root_length(w: Word) -> int:
    """Length of the shortest u with w = u^m; equals len(w) iff w is primitive."""
    if not w:
        raise ValueError("empty word has no primitive root")
    p = len(w) - failure_function(w)[-1]
    return p if len(w) % p == 0 else len(w)


def is_primitive(w: Word) -> bool:
    return primitive_root_length(w) == len(w)


def least_rotation_index(w: Word) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm).

    >>> least_rotation_index((2, 3, 1))
    2
    >>> least_rotation_index((1,))
    0
    """
    s = w + w
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        c = s[j]
        i = f[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != s[k + i + 1]:
            if c < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_rotation(w: Word) -> Word:
    if not w:
        return w
    k = least_rotation_index(w)
    return w[k:] + w[:k]
