"""Skeleton ideals of the parking function ideal and their standard monomials.

For ``0 <= k <= n-1`` the skeleton ideal ``M_n^(k)`` in ``n`` variables is
generated by ``m_sigma = prod_{i in sigma} x_i^(n - |sigma| + 1)`` over the
nonempty subsets ``sigma`` of ``{1..n}`` with ``|sigma| <= k + 1``. ``k = n-1``
is the full parking function ideal, ``k = n-2`` drops only ``x_1 x_2 ... x_n``.

Monomials are identified with exponent vectors. Everything here decides
standardness by literal divisibility against the generator list; no closed
forms are used, so the counts can serve as an oracle for them.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ParameterError

__all__ = [
    "GeneratorSet",
    "skeleton_generators",
    "divides",
    "is_standard",
    "enumerate_standard",
    "count_standard",
    "raised_set_members",
    "count_standard_by_raised_set",
]


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generators of ``M_n^(k)``, ordered by subset size then subset."""

    n: int
    k: int
    generators: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.generators


def skeleton_generators(n: int, k: int) -> GeneratorSet:
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise ParameterError(f"k must lie in [0, {n - 1}], got {k}")
    gens = []
    for size in range(1, k + 2):
        exponent = n - size + 1
        for sigma in itertools.combinations(range(n), size):
            g = [0] * n
            for i in sigma:
                g[i] = exponent
            gens.append(tuple(g))
    return GeneratorSet(n, k, tuple(gens))


def divides(g: Sequence[int], m: Sequence[int]) -> bool:
    if len(g) != len(m):
        raise DimensionError(f"lengths differ: {len(g)} vs {len(m)}")
    return all(gi <= mi for gi, mi in zip(g, m))


def is_standard(m: Sequence[int], gens: GeneratorSet) -> bool:
    if len(m) != gens.n:
        raise DimensionError(f"monomial has {len(m)} variables, ideal has {gens.n}")
    return not any(divides(g, m) for g in gens.generators)


def _standard_mask(block: np.ndarray, gens: GeneratorSet) -> np.ndarray:
    """Row mask of ``block`` (one exponent vector per row) marking standard rows."""
    # skeleton generators carry a single exponent on their support;
    # at_least[e][i] marks rows whose column i is >= e
    at_least: dict[int, list[np.ndarray]] = {}
    divisible = np.zeros(len(block), dtype=bool)
    for g in gens.generators:
        support = [i for i, x in enumerate(g) if x]
        e = g[support[0]]
        if e not in at_least:
            at_least[e] = [np.ascontiguousarray(block[:, i] >= e) for i in range(block.shape[1])]
        cols = at_least[e]
        hit = cols[support[0]].copy()
        for i in support[1:]:
            hit &= cols[i]
        divisible |= hit
    return ~divisible


def _box_chunks(n: int, bound: int) -> Iterator[np.ndarray]:
    # All vectors in [0, bound)^n in lexicographic order, one chunk per first entry.
    if n == 1:
        yield np.arange(bound, dtype=np.int16).reshape(-1, 1)
        return
    rest = np.indices((bound,) * (n - 1), dtype=np.int16).reshape(n - 1, -1).T
    for first in range(bound):
        head = np.full((len(rest), 1), first, dtype=np.int16)
        yield np.hstack([head, rest])


def enumerate_standard(n: int, k: int, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    """Standard monomials of ``M_n^(k)`` in lexicographic order.

    Every standard monomial has entries ``<= n-1``: the singleton generator
    ``x_i^n`` divides anything with ``a_i >= n``. ``bound`` widens the search
    box (exclusive upper entry) for checking that claim.
    """
    gens = skeleton_generators(n, k)
    for block in _box_chunks(n, n if bound is None else bound):
        for row in block[_standard_mask(block, gens)]:
            yield tuple(int(x) for x in row)


def count_standard(n: int, k: int) -> int:
    gens = skeleton_generators(n, k)
    return sum(int(_standard_mask(block, gens).sum()) for block in _box_chunks(n, n))


def _raised_candidates(n: int, raised: Iterable[int]) -> Iterator[tuple[int, ...]]:
    positions = sorted(set(raised))
    if any(not 1 <= p <= n for p in positions):
        raise ParameterError(f"raised positions must lie in 1..{n}, got {positions}")
    for values in itertools.product(range(2, n), repeat=len(positions)):
        m = [1] * n
        for p, v in zip(positions, values):
            m[p - 1] = v
        yield tuple(m)


def raised_set_members(n: int, raised: Iterable[int]) -> list[tuple[int, ...]]:
    """Standard monomials of ``M_n^(n-2)`` with exponent >= 2 exactly on
    ``raised`` (1-based positions) and exponent 1 elsewhere."""
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    gens = skeleton_generators(n, n - 2)
    return [m for m in _raised_candidates(n, raised) if is_standard(m, gens)]


def count_standard_by_raised_set(n: int, raised: Iterable[int]) -> int:
    """Size of :func:`raised_set_members`; 0 when every position is raised."""
    return len(raised_set_members(n, raised))
