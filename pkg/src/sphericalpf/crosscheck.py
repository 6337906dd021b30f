"""Independent-oracle comparisons between brute-force counts and closed forms.

Each ``check_*`` function computes a left-hand side by enumeration (``seqcore``,
``ideal``, ``arbor``) and a right-hand side from formulas (``identity``) or from
a second, unrelated enumeration, and returns a :class:`VerificationReport`.
Checks never raise on disagreement; callers read ``report.ok``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any, Union

from . import arbor, ideal, identity, seqcore
from .errors import ParameterError
from .seqcore import Distribution

__all__ = [
    "VerificationReport",
    "WITNESS_CAP",
    "check_theorem_main",
    "check_spherical_count",
    "check_conjecture",
    "check_kreweras",
    "check_u_correspondence",
    "check_raised_set_formula",
    "check_eq2",
    "check_eq4",
    "check_eq5",
    "check_recursion",
    "check_yan",
    "CHECKS",
]

WITNESS_CAP = 10

Value = Union[int, Distribution]


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    parameters: dict[str, int]
    lhs_label: str
    rhs_label: str
    lhs: Value
    rhs: Value
    verdict: str
    witnesses: tuple[dict, ...] = ()
    details: dict[str, Any] = field(default_factory=dict)
    note: str = ""
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict == "match"

    def to_dict(self, timing: bool = True) -> dict:
        """JSON-ready form; integers become decimal strings."""
        out = {
            "check": self.check_name,
            "parameters": {k: v for k, v in self.parameters.items()},
            "lhs_label": self.lhs_label,
            "rhs_label": self.rhs_label,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "verdict": self.verdict,
            "witnesses": [_jsonable(w) for w in self.witnesses],
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Distribution):
        return {
            "buckets": {str(k): str(v) for k, v in value.items()},
            "total": str(value.total),
        }
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [int(x) if isinstance(x, int) else _jsonable(x) for x in value]
    return value


def _distribution_witnesses(lhs: Distribution, rhs: Distribution, cap: int | None):
    keys = sorted(set(lhs) | set(rhs))
    out = [
        {"key": k, "lhs": lhs.get(k, 0), "rhs": rhs.get(k, 0)}
        for k in keys
        if lhs.get(k, 0) != rhs.get(k, 0)
    ]
    return tuple(out if cap is None else out[:cap])


def _set_witnesses(lhs: set, rhs: set, cap: int | None):
    out = [{"side": "lhs", "element": e} for e in sorted(lhs - rhs)]
    out += [{"side": "rhs", "element": e} for e in sorted(rhs - lhs)]
    return tuple(out if cap is None else out[:cap])


def _finish(name, params, lhs_label, lhs, rhs_label, rhs, started, *,
            ok=None, witnesses=(), details=None, note=""):
    if ok is None:
        ok = lhs == rhs
    return VerificationReport(
        check_name=name,
        parameters=params,
        lhs_label=lhs_label,
        rhs_label=rhs_label,
        lhs=lhs,
        rhs=rhs,
        verdict="match" if ok else "mismatch",
        witnesses=() if ok else tuple(witnesses),
        details=details or {},
        note=note,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def check_theorem_main(n: int) -> VerificationReport:
    """Standard monomials of M_n^(n-2) vs ``(n+1)^(n-1) + (n-1)^(n-1)``."""
    _need(n >= 2, f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    lhs = ideal.count_standard(n, n - 2)
    rhs = identity.power(n + 1, n - 1) + identity.power(n - 1, n - 1)
    return _finish("theorem", {"n": n}, "brute-force standard monomials of M_n^(n-2)", lhs,
                   "(n+1)^(n-1) + (n-1)^(n-1)", rhs, t0)


def check_spherical_count(n: int, naive_limit: int = 7, full: bool = False) -> VerificationReport:
    """Profile-expansion count vs ``(n-1)^(n-1)``; for ``n <= naive_limit`` the
    expanded stream is also compared element-wise with the naive filter."""
    _need(n >= 2, f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    lhs = seqcore.count_spherical(n)
    rhs = identity.power(n - 1, n - 1)
    ok = lhs == rhs
    details: dict[str, Any] = {}
    witnesses: tuple = ()
    if n <= naive_limit:
        expanded = list(seqcore.enumerate_spherical(n))
        naive = set(seqcore.enumerate_spherical_naive(n))
        details["expanded_stream_size"] = len(expanded)
        details["naive_filter_size"] = len(naive)
        same = len(expanded) == len(set(expanded)) and set(expanded) == naive
        ok = ok and same and len(expanded) == lhs
        witnesses = _set_witnesses(set(expanded), naive, None if full else WITNESS_CAP)
    return _finish("spherical", {"n": n}, "profile-expansion spherical count", lhs,
                   "(n-1)^(n-1)", rhs, t0, ok=ok, witnesses=witnesses, details=details)


def check_conjecture(n: int, full: bool = False) -> VerificationReport:
    """Spherical degree distribution, reindexed by ``k = C(n,2) - degree + 1``,
    vs surface inversions over uprooted trees on [n]."""
    _need(n >= 2, f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    shift = identity.binomial(n, 2) + 1
    lhs = seqcore.spherical_degree_distribution(n).relabel(lambda d: shift - d)
    rhs = arbor.uprooted_statistic_distribution(n, "surface_inversions")
    return _finish("conjecture", {"n": n},
                   "spherical parking functions by C(n,2) - degree + 1", lhs,
                   "uprooted trees on [n] by surface inversions", rhs, t0,
                   witnesses=_distribution_witnesses(lhs, rhs, None if full else WITNESS_CAP),
                   note="tested instance only; no claim beyond this n")


def check_kreweras(n: int, full: bool = False) -> VerificationReport:
    """Parking functions of length n by ``C(n,2) - degree`` vs inversions of
    trees on [n+1] rooted at 1."""
    _need(n >= 1, f"n must be positive, got {n}")
    t0 = time.perf_counter()
    shift = identity.binomial(n, 2)
    lhs = seqcore.pf_degree_distribution(n).relabel(lambda d: shift - d)
    rhs = arbor.tree_inversion_distribution(n + 1)
    return _finish("kreweras", {"n": n}, "parking functions by C(n,2) - degree", lhs,
                   "trees on [n+1] rooted at 1 by inversions", rhs, t0,
                   witnesses=_distribution_witnesses(lhs, rhs, None if full else WITNESS_CAP),
                   note="reindexed with k = C(n,2) - degree; the C(n+1,2) - degree "
                        "normalization disagrees with brute force already at n = 2")


def check_u_correspondence(n: int, k: int, full: bool = False) -> VerificationReport:
    """Standard monomials of M_n^(k) vs u_{n,k}-parking functions, as sets of
    exponent vectors; also compares their number with the closed count."""
    t0 = time.perf_counter()
    u = seqcore.make_u_nk(n, k)
    lhs_set = set(ideal.enumerate_standard(n, k))
    rhs_set = {a for a in itertools.product(range(n), repeat=n)
               if seqcore.is_u_parking_function(a, u)}
    closed = identity.u_parking_count(n, k)
    ok = lhs_set == rhs_set and len(lhs_set) == closed
    return _finish("u-correspondence", {"n": n, "k": k},
                   "standard monomials of M_n^(k)", len(lhs_set),
                   "u_{n,k}-parking functions", len(rhs_set), t0, ok=ok,
                   witnesses=_set_witnesses(lhs_set, rhs_set, None if full else WITNESS_CAP),
                   details={"u": list(u.weights), "closed_count": closed})


def check_raised_set_formula(n: int, full: bool = False) -> VerificationReport:
    """Raised-set counts on n+1 variables vs ``forest_count(n, s)`` for each s,
    and their weighted total ``sum_s C(n+1, s+1) * count_s`` vs ``n^n``."""
    _need(n >= 1, f"n must be positive, got {n}")
    t0 = time.perf_counter()
    counts = {s: ideal.count_standard_by_raised_set(n + 1, range(1, n - s + 1))
              for s in range(1, n + 1)}
    lhs = Distribution(counts)
    rhs = Distribution({s: identity.forest_count(n, s) for s in range(1, n + 1)})
    weighted = sum(identity.binomial(n + 1, s + 1) * c for s, c in counts.items())
    target = identity.power(n, n)
    ok = lhs == rhs and weighted == target
    return _finish("raised-set", {"n": n},
                   "standard monomials on n+1 variables raised on {1..n-s}, by s", lhs,
                   "s * n^(n-s-1), by s", rhs, t0, ok=ok,
                   witnesses=_distribution_witnesses(lhs, rhs, None if full else WITNESS_CAP),
                   details={"weighted_total": weighted, "n_pow_n": target})


def check_eq2(n: int) -> VerificationReport:
    _need(n >= 2, f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    lhs = identity.binomial_chain_sum(n)
    rhs = identity.power(n - 1, n - 1)
    return _finish("eq2", {"n": n}, "sum of C(n,k_1) C(n-k_1,k_2) ... over index tuples",
                   lhs, "(n-1)^(n-1)", rhs, t0)


def check_eq4(n: int) -> VerificationReport:
    _need(n >= 2, f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    lhs = identity.multinomial_chain_sum(n)
    rhs = identity.power(n - 1, n - 1)
    return _finish("eq4", {"n": n}, "sum of (n-1)!/(k_1! k_2! ...) over index tuples",
                   lhs, "(n-1)^(n-1)", rhs, t0)


def check_eq5(n: int) -> VerificationReport:
    _need(n >= 1, f"n must be positive, got {n}")
    t0 = time.perf_counter()
    lhs = identity.root_degree_sum(n)
    rhs = identity.power(n, n)
    return _finish("eq5", {"n": n}, "sum_s C(n+1,s+1) s n^(n-s-1)", lhs, "n^n", rhs, t0)


def check_recursion(n: int, full: bool = False) -> VerificationReport:
    _need(n >= 1, f"n must be positive, got {n}")
    t0 = time.perf_counter()
    lhs = Distribution({s: identity.forest_count_recursive(n, s) for s in range(n + 1)})
    rhs = Distribution({s: identity.forest_count(n, s) for s in range(n + 1)})
    return _finish("recursion", {"n": n}, "recursive F(n, s), by s", lhs,
                   "s n^(n-s-1), by s", rhs, t0,
                   witnesses=_distribution_witnesses(lhs, rhs, None if full else WITNESS_CAP))


def check_yan(n: int, k: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = ideal.count_standard(n, k)
    rhs = identity.u_parking_count(n, k)
    return _finish("yan", {"n": n, "k": k}, "brute-force standard monomials of M_n^(k)", lhs,
                   "sum_j C(n,j)(k+1-j)(k+1)^(j-1)(n-k)^(n-j)", rhs, t0)


# name -> (function, takes k, accepts full)
CHECKS = {
    "theorem": (check_theorem_main, False, False),
    "spherical": (check_spherical_count, False, True),
    "conjecture": (check_conjecture, False, True),
    "kreweras": (check_kreweras, False, True),
    "u-correspondence": (check_u_correspondence, True, True),
    "raised-set": (check_raised_set_formula, False, True),
    "eq2": (check_eq2, False, False),
    "eq4": (check_eq4, False, False),
    "eq5": (check_eq5, False, False),
    "recursion": (check_recursion, False, True),
    "yan": (check_yan, True, False),
}
