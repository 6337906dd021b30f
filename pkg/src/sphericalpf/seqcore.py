"""Parking functions, spherical parking functions and u-parking functions.

Sequences are plain tuples of nonnegative integers. All predicates look only
at the ascending rearrangement ``c`` of the input, so they are invariant under
permuting entries. Positions are 1-based in the docstrings below:

* parking function: ``c_i < i`` for every ``i``
* spherical parking function: ``c_1 = 1`` and ``c_i < i`` for ``i >= 2``
* u-parking function: ``c_j < u_1 + ... + u_j`` for every ``j``

Enumerators yield tuples in lexicographic order.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from math import comb, factorial

from .errors import DimensionError, ParameterError

__all__ = [
    "Distribution",
    "UVector",
    "as_sequence",
    "is_parking_function",
    "is_spherical_parking_function",
    "is_u_parking_function",
    "make_u_nk",
    "parking_profiles",
    "spherical_profiles",
    "multiset_permutations",
    "rearrangement_count",
    "enumerate_parking",
    "enumerate_spherical",
    "enumerate_spherical_naive",
    "count_spherical",
    "degree",
    "spherical_degree_distribution",
    "pf_degree_distribution",
]


class Distribution(Mapping):
    """Immutable histogram ``statistic value -> exact count``.

    Zero counts are dropped on construction, so two distributions compare
    equal exactly when they agree bucket by bucket.
    """

    __slots__ = ("_buckets",)

    def __init__(self, buckets: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = buckets.items() if isinstance(buckets, Mapping) else buckets
        acc: dict[int, int] = {}
        for key, count in items:
            if count < 0:
                raise ParameterError(f"negative count {count} for bucket {key}")
            acc[int(key)] = acc.get(int(key), 0) + int(count)
        self._buckets = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Distribution":
        return cls(Counter(values))

    def __getitem__(self, key: int) -> int:
        return self._buckets[key]

    def __iter__(self) -> Iterator[int]:
        return iter(self._buckets)

    def __len__(self) -> int:
        return len(self._buckets)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Distribution):
            return self._buckets == other._buckets
        if isinstance(other, Mapping):
            return self._buckets == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._buckets.items()))

    def __repr__(self) -> str:
        return f"Distribution({self._buckets!r})"

    @property
    def total(self) -> int:
        return sum(self._buckets.values())

    def relabel(self, fn) -> "Distribution":
        """Return the distribution with every key ``x`` replaced by ``fn(x)``."""
        return Distribution((fn(k), v) for k, v in self._buckets.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._buckets)


def as_sequence(a: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(int(x) for x in a)
    if not seq:
        raise ParameterError("a sequence needs at least one entry")
    if min(seq) < 0:
        raise ParameterError(f"negative entry in {seq}")
    return seq


@dataclass(frozen=True)
class UVector:
    """Weight vector ``u`` for u-parking functions."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w or min(w) < 0:
            raise ParameterError(f"weights must be a nonempty nonnegative vector, got {w}")
        if w[0] < 1:
            raise ParameterError("first weight must be at least 1")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def bounds(self) -> tuple[int, ...]:
        """Partial sums ``u_1 + ... + u_j``; the j-th sorted entry must stay below them."""
        return tuple(itertools.accumulate(self.weights))


def is_parking_function(a: Sequence[int]) -> bool:
    c = sorted(as_sequence(a))
    return all(ci < i for i, ci in enumerate(c, start=1))


def is_spherical_parking_function(a: Sequence[int]) -> bool:
    c = sorted(as_sequence(a))
    # length 1 is excluded: c_1 = 1 would clash with the bound c_n < n
    return len(c) > 1 and c[0] == 1 and all(ci < i for i, ci in enumerate(c[1:], start=2))


def is_u_parking_function(a: Sequence[int], u: UVector | Sequence[int]) -> bool:
    c = sorted(as_sequence(a))
    if not isinstance(u, UVector):
        u = UVector(tuple(u))
    if len(c) != len(u):
        raise DimensionError(f"sequence has length {len(c)}, weight vector {len(u)}")
    return all(cj < bound for cj, bound in zip(c, u.bounds))


def make_u_nk(n: int, k: int) -> UVector:
    """``(n-k, 0 x (n-k-1), 1 x k)``; its u-parking functions are the
    standard monomials of the skeleton ideal with subsets of size <= k+1."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise ParameterError(f"k must lie in [0, {n - 1}], got {k}")
    return UVector((n - k,) + (0,) * (n - k - 1) + (1,) * k)


def degree(a: Sequence[int]) -> int:
    return sum(as_sequence(a))


def _profiles(n: int, first_lo: int, first_hi: int) -> Iterator[tuple[int, ...]]:
    # nondecreasing c with c_1 in [first_lo, first_hi] and c_i <= i-1 for i >= 2
    def extend(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        for v in range(prefix[-1], i):
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()

    for first in range(first_lo, first_hi + 1):
        yield from extend([first])


def parking_profiles(n: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing parking functions of length n (Catalan many)."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return _profiles(n, 0, 0)


def spherical_profiles(n: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing spherical parking functions of length n."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if n == 1:
        return iter(())
    return _profiles(n, 1, 1)


def rearrangement_count(profile: Sequence[int]) -> int:
    """Number of distinct rearrangements of a multiset."""
    out = factorial(len(profile))
    for m in Counter(profile).values():
        out //= factorial(m)
    return out


def multiset_permutations(profile: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of ``profile`` in lexicographic order."""
    a = sorted(profile)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _expand(profiles: Iterable[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    return heapq.merge(*(multiset_permutations(p) for p in profiles))


def enumerate_parking(n: int) -> Iterator[tuple[int, ...]]:
    return _expand(list(parking_profiles(n)))


def enumerate_spherical(n: int) -> Iterator[tuple[int, ...]]:
    """Spherical parking functions of length n, lexicographically.

    Each sorted profile is expanded into its distinct rearrangements and the
    per-profile streams are merged, so nothing close to ``n**n`` candidates
    is ever touched.
    """
    return _expand(list(spherical_profiles(n)))


def enumerate_spherical_naive(n: int) -> Iterator[tuple[int, ...]]:
    """Filter of all ``n**n`` vectors with entries in ``[0, n-1]``.

    Entries >= n fail the predicate because the largest sorted entry must be
    below n, so the box is exhaustive.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return filter(is_spherical_parking_function, itertools.product(range(n), repeat=n))


def count_spherical(n: int) -> int:
    """Sum of rearrangement counts over spherical profiles."""
    return sum(rearrangement_count(p) for p in spherical_profiles(n))


def _degree_distribution(profiles: Iterable[tuple[int, ...]]) -> Distribution:
    acc: Counter = Counter()
    for p in profiles:
        acc[sum(p)] += rearrangement_count(p)
    return Distribution(acc)


def spherical_degree_distribution(n: int) -> Distribution:
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    return _degree_distribution(spherical_profiles(n))


def pf_degree_distribution(n: int) -> Distribution:
    return _degree_distribution(parking_profiles(n))
