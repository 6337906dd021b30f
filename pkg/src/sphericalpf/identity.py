"""Closed forms and summation identities, in exact integer arithmetic.

``forest_count(n, s)`` is the number of rooted forests on ``n`` labeled
vertices with ``s`` trees whose roots are ``s`` prescribed vertices,
``s * n**(n-s-1)``. It also counts the spherical standard monomials in
``n + 1`` variables whose raised exponents sit on a fixed set of ``n - s``
positions.

The two chain sums run over index tuples ``(k_1, ..., k_{n-2})`` with
``k_1 + ... + k_i <= i`` for every ``i``; there are ``catalan(n - 1)`` of
them and both sums equal ``(n-1)**(n-1)``. The ``*_terms`` functions list the
summands tuple by tuple, the ``*_sum`` functions evaluate the same sums with a
dynamic program over partial sums so that large ``n`` stays cheap.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from functools import lru_cache

from .errors import ParameterError

__all__ = [
    "binomial",
    "factorial",
    "power",
    "catalan",
    "forest_count",
    "forest_count_recursive",
    "enumerate_index_tuples",
    "binomial_chain_terms",
    "binomial_chain_sum",
    "multinomial_chain_terms",
    "multinomial_chain_sum",
    "root_degree_terms",
    "root_degree_sum",
    "u_parking_count",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``; zero when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ParameterError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ParameterError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def power(base: int, exponent: int) -> int:
    if base < 0 or exponent < 0:
        raise ParameterError(f"power needs nonnegative arguments, got {base}, {exponent}")
    return base**exponent


def catalan(n: int) -> int:
    if n < 0:
        raise ParameterError(f"catalan needs n >= 0, got {n}")
    return binomial(2 * n, n) // (n + 1)


def _check_ns(n: int, s: int) -> None:
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 0 <= s <= n:
        raise ParameterError(f"s must lie in [0, {n}], got {s}")


def forest_count(n: int, s: int) -> int:
    """``s * n**(n-s-1)``, with the ``s = n`` case returned as 1 directly."""
    _check_ns(n, s)
    if s == 0:
        return 0
    if s == n:
        return 1
    return s * n ** (n - s - 1)


@lru_cache(maxsize=None)
def _forest_rec(n: int, s: int) -> int:
    if s == 0:
        return 0
    if n == 1:
        return 1
    t = n - s
    return sum(math.comb(t, j) * _forest_rec(n - 1, s + j - 1) for j in range(t + 1))


def forest_count_recursive(n: int, s: int) -> int:
    """Same numbers as :func:`forest_count`, from the recursion
    ``F(n, s) = sum_j C(n-s, j) F(n-1, s+j-1)`` with ``F(1, 1) = 1``, ``F(n, 0) = 0``."""
    _check_ns(n, s)
    return _forest_rec(n, s)


def enumerate_index_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Tuples ``(k_1, ..., k_{n-2})`` with every partial sum ``k_1+...+k_i <= i``,
    lexicographically."""
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    length = n - 2

    def extend(prefix: list[int], total: int):
        i = len(prefix) + 1
        if i > length:
            yield tuple(prefix)
            return
        for k in range(i - total + 1):
            prefix.append(k)
            yield from extend(prefix, total + k)
            prefix.pop()

    return extend([], 0)


def _binomial_chain(n: int, ks: tuple[int, ...]) -> int:
    out, used = 1, 0
    for k in ks:
        out *= binomial(n - used, k)
        used += k
    return out


def binomial_chain_terms(n: int) -> list[int]:
    """``C(n, k_1) C(n-k_1, k_2) ...`` for each index tuple, in tuple order."""
    return [_binomial_chain(n, ks) for ks in enumerate_index_tuples(n)]


def multinomial_chain_terms(n: int) -> list[int]:
    """``(n-1)! / (k_1! k_2! ...)`` for each index tuple, in tuple order."""
    top = factorial(n - 1)
    out = []
    for ks in enumerate_index_tuples(n):
        denom = 1
        for k in ks:
            denom *= factorial(k)
        out.append(top // denom)
    return out


def _chain_dp(n: int, top: int) -> dict[int, int]:
    # weight[S] = sum over index-tuple prefixes with sum S of prod C(top - used, k_i)
    weight = {0: 1}
    for i in range(1, n - 1):
        nxt: dict[int, int] = {}
        for used, w in weight.items():
            for k in range(i - used + 1):
                nxt[used + k] = nxt.get(used + k, 0) + w * binomial(top - used, k)
        weight = nxt
    return weight


def binomial_chain_sum(n: int) -> int:
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    return sum(_chain_dp(n, n).values())


def multinomial_chain_sum(n: int) -> int:
    # (n-1)!/prod k_i! = prod C(n-1-used, k_i) * (n-1-total)!
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    return sum(w * factorial(n - 1 - used) for used, w in _chain_dp(n, n - 1).items())


def root_degree_terms(n: int) -> list[int]:
    """``C(n+1, s+1) * forest_count(n, s)`` for ``s = 1..n``."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return [binomial(n + 1, s + 1) * forest_count(n, s) for s in range(1, n + 1)]


def root_degree_sum(n: int) -> int:
    return sum(root_degree_terms(n))


def u_parking_count(n: int, k: int) -> int:
    """Closed count of the standard monomials of ``M_n^(k)``:
    ``sum_j C(n, j) (k+1-j) (k+1)**(j-1) (n-k)**(n-j)`` for ``j = 0..k``."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise ParameterError(f"k must lie in [0, {n - 1}], got {k}")
    total = (n - k) ** n  # j = 0: the (k+1) factors cancel
    for j in range(1, k + 1):
        total += binomial(n, j) * (k + 1 - j) * (k + 1) ** (j - 1) * (n - k) ** (n - j)
    return total
