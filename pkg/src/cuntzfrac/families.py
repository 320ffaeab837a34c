"""Closed-form quadratic surds whose expansions repeat blocks of length 1 to 4.

Used by the verification command and the acceptance sweeps; each constructor
returns the canonical surd (the longer ones also return the raw radicand
before square extraction, which differs from the discriminant in general).
"""

from __future__ import annotations

from .surds import QuadraticSurd, normalize


def single_block_surd(k: int) -> QuadraticSurd:
    """Value whose expansion repeats (k)."""
    return normalize(-k, 1, 2, k * k + 4)


def pair_block_surd(j: int, k: int) -> QuadraticSurd:
    """Value whose expansion repeats (j, k); collapses to the single-letter
    family when j = k."""
    m = j * k
    return normalize(-m, 1, 2 * j, m * m + 4 * m)


def triple_block_surd(i: int, j: int, k: int) -> tuple[QuadraticSurd, int]:
    """Value expected to repeat (i, j, k), plus the raw radicand."""
    dd = (i * j * k + i + j + k) ** 2 + 4
    return normalize(-(i * j * k + i + k - j), 1, 2 * (i * j + 1), dd), dd


def quad_block_surd(i: int, j: int, k: int, l: int) -> tuple[QuadraticSurd, int]:
    """Value expected to repeat (i, j, k, l), plus the raw radicand."""
    m = i * j * k * l + i * j + j * k + k * l + l * i
    dd = m * (m + 4)
    return (
        normalize(-(i * j * k * l + i * j + k * l + l * i - j * k), 1, 2 * (i * j * k + i + k), dd),
        dd,
    )
