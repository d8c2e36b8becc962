"""Registry of q-series identities with exact coefficient verification.

Every identity carries builders for its left and right sides; several also
carry enumeration-based builders that recount one side by summing
q^weight * aux^statistic over an exhaustively enumerated family.  ``verify``
expands every side and reports the first differing coefficient, if any.

Registry ids (stable strings): ay1, ay2, ay3, thm21, lemma22, middle,
q1limit, omega, omega1, nu1, nu2, nu3, qbinom_thm.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Mapping, Optional

from .bijections import rho
from .errors import BadParams, TruncationRequired, UnknownIdentity
from .partitions import (
    b3_weight,
    enumerate_domain,
    partitions_of,
    weight_gf,
)
from .series import (
    TRIVIAL_MONO,
    MultiSeries,
    QSeries,
    mono_str,
    poch_finite,
    poch_infinite,
    qbinom,
    qq_factorial,
)


# ---------------------------------------------------------------------------
# Elementary closed forms
# ---------------------------------------------------------------------------


def s_sum(n: int, i: int, trunc: Optional[int] = None) -> QSeries:
    """The polynomial sum over s of q^(i*s) * (q;q)_{n+s} / (q^2;q^2)_s.

    Each summand is computed by exact division (factor by factor through
    (1-q^2)(1-q^4)...(1-q^{2s})); a nonzero remainder raises DivisionInexact,
    which would signal an implementation bug rather than a user error.
    """
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    total = QSeries.zero()
    for s in range(n + 1):
        quot = qq_factorial(n + s)
        for j in range(1, s + 1):
            quot = quot.exact_div(QSeries.one() - QSeries.q(2 * j))
        total = total.add(quot.shift(i * s))
    return total if trunc is None else total.truncate(trunc)


def neg_q_poch(n: int) -> QSeries:
    """(1+q)(1+q^2)...(1+q^n) as an exact polynomial."""
    return poch_finite(QSeries.term(-1, 1), 1, n)


def thm21_lhs_term(n: int, s: int) -> QSeries:
    """Summand q^s * prod_{k=0}^{n-s-1} (1+q^{s+1+k}) * qbinom(n+s, s)."""
    p = poch_finite(QSeries.term(-1, s + 1), 1, n - s)
    return p.mul(qbinom(n + s, s)).shift(s)


def q1_limit_check(n: int, pivot_limit: int = 7) -> dict:
    """Integer identity sum_s 2^(n-s)*C(n+s,s) = sum_t C(2n+1,n+1+t) = 4^n.

    For small n the right side is also recounted by enumerating subsets of
    {1..2n+1} with at least n+1 elements, grouped by their (n+1)-th smallest
    element; each group must match the corresponding left-side term.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = sum(2 ** (n - s) * comb(n + s, s) for s in range(n + 1))
    rhs = sum(comb(2 * n + 1, n + 1 + t) for t in range(n + 1))
    power = 4**n
    pivot_ok = None
    if n <= pivot_limit:
        counts: Counter = Counter()
        for r in range(n + 1, 2 * n + 2):
            for combo in combinations(range(1, 2 * n + 2), r):
                counts[combo[n]] += 1
        pivot_ok = sum(counts.values()) == rhs and all(
            counts.get(n + 1 + s, 0) == 2 ** (n - s) * comb(n + s, s)
            for s in range(n + 1)
        )
    return {"lhs": lhs, "rhs": rhs, "power": power, "pivot_ok": pivot_ok}


# ---------------------------------------------------------------------------
# Counting oracles
# ---------------------------------------------------------------------------


def p_omega(N: int) -> int:
    """Partitions of N in which every odd part is less than twice the
    smallest part, counted by brute force."""
    if N < 1:
        raise ValueError("N must be >= 1")
    count = 0
    for parts in partitions_of(N):
        smallest = parts[-1]
        if all(p < 2 * smallest for p in parts if p % 2 == 1):
            count += 1
    return count


def p_nu(N: int) -> int:
    """Partitions of N with distinct nonnegative parts in which every odd
    part is less than twice the smallest part, counted by brute force.

    A single part 0 is admissible; a partition carrying it has smallest part
    0, so it may not contain any odd part.  Dropping the zero-part convention
    would undercount by exactly the partitions into distinct even parts.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    count = 0
    for parts in partitions_of(N):
        if len(set(parts)) != len(parts):
            continue
        smallest = parts[-1]
        if all(p < 2 * smallest for p in parts if p % 2 == 1):
            count += 1
        if all(p % 2 == 0 for p in parts):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Side builders (closed forms)
# ---------------------------------------------------------------------------

_q = MultiSeries.q


def _lift(qs: QSeries) -> MultiSeries:
    return MultiSeries.from_qseries(qs)


def _ay3_lhs(p, trunc):
    return _lift(s_sum(p["n"], 1))


def _ay3_rhs(p, trunc):
    return _lift(poch_finite(QSeries.q(2), 2, p["n"]))


def _thm21_lhs(p, trunc):
    n = p["n"]
    total = QSeries.zero()
    for s in range(n + 1):
        total = total.add(thm21_lhs_term(n, s))
    return _lift(total)


def _thm21_rhs(p, trunc):
    return _lift(neg_q_poch(p["n"]).power(2))


def _lemma22_rhs(p, trunc):
    n = p["n"]
    total = QSeries.zero()
    for t in range(n + 1):
        total = total.add(qbinom(2 * n + 1, n + 1 + t).shift(t * (t + 1) // 2))
    return _lift(total)


def _qbinom_thm_lhs(p, trunc):
    return poch_finite(MultiSeries.gen("z"), 1, p["n"])


def _qbinom_thm_rhs(p, trunc):
    n = p["n"]
    total = MultiSeries.zero()
    for t in range(n + 1):
        coeff = qbinom(n, t).shift(t * (t - 1) // 2).scale((-1) ** t)
        total = total.add(MultiSeries.from_qseries(coeff, (t, 0, 0)))
    return total


def _q1limit_lhs(p, trunc=None):
    return q1_limit_check(p["n"])["lhs"]


def _q1limit_rhs(p, trunc=None):
    return q1_limit_check(p["n"])["rhs"]


def _require_trunc(trunc, what: str) -> int:
    if trunc is None:
        raise TruncationRequired(f"{what} needs a finite truncation order")
    return trunc


def _ay1_lhs(p, trunc):
    T = _require_trunc(trunc, "ay1 lhs")
    total = MultiSeries.zero(T)
    n = 1
    while n < T:
        inner = T - n
        d1 = poch_finite(MultiSeries.term(1, qexp=n, z=1), 1, n + 1, trunc=inner)
        d2 = poch_infinite(MultiSeries.term(1, qexp=2 * n + 2, z=1), 2, inner)
        summand = d1.invert_unit(inner).mul(d2.invert_unit(inner)).shift_q(n)
        total = total.add(summand)
        n += 1
    return total


def _ay1_rhs(p, trunc):
    T = _require_trunc(trunc, "ay1 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while 2 * n * n + 2 * n + 1 < T:
        shift = 2 * n * n + 2 * n + 1
        inner = T - shift
        d1 = poch_finite(_q(1), 2, n + 1, trunc=inner)
        d2 = poch_finite(MultiSeries.term(1, qexp=1, z=1), 2, n + 1, trunc=inner)
        summand = d1.invert_unit(inner).mul(d2.invert_unit(inner))
        summand = summand.mul(MultiSeries.term(1, z=n)).shift_q(shift)
        total = total.add(summand)
        n += 1
    return total


def _ay2_lhs(p, trunc):
    T = _require_trunc(trunc, "ay2 lhs")
    total = MultiSeries.zero(T)
    n = 0
    while n < T:
        inner = T - n
        p1 = poch_finite(MultiSeries.term(-1, qexp=n + 1, z=1), 1, n, trunc=inner)
        p2 = poch_infinite(MultiSeries.term(-1, qexp=2 * n + 2, z=1), 2, inner)
        total = total.add(p1.mul(p2).truncate(inner).shift_q(n))
        n += 1
    return total


def _ay2_rhs(p, trunc):
    T = _require_trunc(trunc, "ay2 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while n * n + n < T:
        shift = n * n + n
        inner = T - shift
        inv = poch_finite(_q(1), 2, n + 1, trunc=inner).invert_unit(inner)
        total = total.add(inv.mul(MultiSeries.term(1, z=n)).shift_q(shift))
        n += 1
    return total


def _omega_lhs(p, trunc):
    T = _require_trunc(trunc, "omega lhs")
    total = MultiSeries.zero(T)
    n = 0
    while 2 * n * n + 2 * n < T:
        shift = 2 * n * n + 2 * n
        inner = T - shift
        d1 = poch_finite(_q(1), 2, n + 1, trunc=inner)
        d2 = poch_finite(MultiSeries.term(1, qexp=1, z=1), 2, n + 1, trunc=inner)
        summand = d1.invert_unit(inner).mul(d2.invert_unit(inner))
        summand = summand.mul(MultiSeries.term(1, z=n)).shift_q(shift)
        total = total.add(summand)
        n += 1
    return total


def _omega_rhs(p, trunc):
    T = _require_trunc(trunc, "omega rhs")
    total = MultiSeries.zero(T)
    n = 0
    while n < T:
        inner = T - n
        inv = poch_finite(_q(1), 2, n + 1, trunc=inner).invert_unit(inner)
        total = total.add(inv.mul(MultiSeries.term(1, z=n)).shift_q(n))
        n += 1
    return total


def _omega1_lhs(p, trunc):
    T = _require_trunc(trunc, "omega1 lhs")
    total = MultiSeries.zero(T)
    n = 0
    while (2 * n + 1) ** 2 < T:
        shift = (2 * n + 1) ** 2
        inner = T - shift
        d1 = poch_finite(_q(2), 4, n + 1, trunc=inner)
        d2 = poch_finite(MultiSeries.term(1, qexp=2, z=2), 4, n + 1, trunc=inner)
        summand = d1.invert_unit(inner).mul(d2.invert_unit(inner))
        summand = summand.mul(MultiSeries.term(1, z=2 * n + 1)).shift_q(shift)
        total = total.add(summand)
        n += 1
    return total


def _omega1_rhs(p, trunc):
    T = _require_trunc(trunc, "omega1 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while 2 * n + 1 < T:
        inner = T - (2 * n + 1)
        inv = poch_finite(_q(2), 4, n + 1, trunc=inner).invert_unit(inner)
        total = total.add(
            inv.mul(MultiSeries.term(1, z=2 * n + 1)).shift_q(2 * n + 1)
        )
        n += 1
    return total


def _nu1_lhs(p, trunc):
    T = _require_trunc(trunc, "nu1 lhs")
    total = MultiSeries.zero(T)
    n = 0
    while n * n + n < T:
        shift = n * n + n
        inner = T - shift
        inv = poch_finite(
            MultiSeries.term(-1, qexp=1, z=1), 2, n + 1, trunc=inner
        ).invert_unit(inner)
        total = total.add(inv.shift_q(shift))
        n += 1
    return total


def _nu1_rhs(p, trunc):
    T = _require_trunc(trunc, "nu1 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while n < T:
        inner = T - n
        prod = poch_finite(MultiSeries.term(1, qexp=1, z=-1), 2, n, trunc=inner)
        summand = prod.mul(MultiSeries.term((-1) ** n, z=n)).shift_q(n)
        total = total.add(summand)
        n += 1
    return total


def _nu2_lhs(p, trunc):
    T = _require_trunc(trunc, "nu2 lhs")
    total = MultiSeries.zero(T)
    n = 0
    while n * n + n < T:
        shift = n * n + n
        inner = T - shift
        inv = poch_finite(
            MultiSeries.term(-1, qexp=1), 2, n + 1, trunc=inner
        ).invert_unit(inner)
        total = total.add(inv.mul(MultiSeries.term(1, z=n)).shift_q(shift))
        n += 1
    return total


def _nu2_rhs(p, trunc):
    T = _require_trunc(trunc, "nu2 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while n < T:
        inner = T - n
        prod = poch_finite(MultiSeries.term(1, qexp=1, z=1), 2, n, trunc=inner)
        total = total.add(prod.mul(MultiSeries.const((-1) ** n)).shift_q(n))
        n += 1
    return total


def _nu3_lhs(p, trunc):
    T = _require_trunc(trunc, "nu3 lhs")
    total = MultiSeries.zero(T)
    n = 0
    while n * n + n < T:
        shift = n * n + n
        inner = T - shift
        inv = poch_finite(
            MultiSeries.term(1, qexp=1, y=1), 2, n + 1, trunc=inner
        ).invert_unit(inner)
        total = total.add(inv.mul(MultiSeries.term(1, x=n)).shift_q(shift))
        n += 1
    return total


def _nu3_rhs(p, trunc):
    T = _require_trunc(trunc, "nu3 rhs")
    total = MultiSeries.zero(T)
    n = 0
    while n < T:
        inner = T - n
        prod = poch_finite(
            MultiSeries.term(-1, qexp=1, x=1, y=-1), 2, n, trunc=inner
        )
        total = total.add(prod.mul(MultiSeries.term(1, y=n)).shift_q(n))
        n += 1
    return total


# ---------------------------------------------------------------------------
# Enumeration-based side builders
# ---------------------------------------------------------------------------


def _comb_b1(p, trunc):
    gf = weight_gf(e.weight for e in enumerate_domain("B1", n=p["n"]))
    return _lift(gf)


def _comb_b2(p, trunc):
    n = p["n"]
    weights = []
    for t, nu in enumerate_domain("B2", n=n):
        weights.append(t * (t + 1) // 2 + nu.weight)
    return _lift(weight_gf(weights))


def _comb_p_gt(p, trunc):
    # recount the staircase side by pushing P_> elements through rho and
    # shifting the run weight back to zero
    n = p["n"]
    off = n * (n + 1) // 2
    weights = []
    for lam in enumerate_domain("P_gt", n=n):
        weights.append(b3_weight(n, rho(n, lam)) + off)
    return _lift(weight_gf(weights))


def _z_stat_gf(elements, trunc) -> MultiSeries:
    """Sum z^(largest part statistic) q^weight over (stat, weight) pairs."""
    acc: dict = {}
    for stat, w in elements:
        d = acc.setdefault((stat, 0, 0), {})
        d[w] = d.get(w, 0) + 1
    return MultiSeries({m: QSeries(d, trunc) for m, d in acc.items()}, trunc)


def _comb_omega1_ds(p, trunc):
    T = _require_trunc(trunc, "DS enumeration")
    cap = T - 1
    pairs = []
    k = 0
    while 2 * k + 1 <= cap:
        for lam in enumerate_domain("DS", k=k, weight_cap=cap):
            pairs.append((2 * k + 1, lam.weight))
        k += 1
    return _z_stat_gf(pairs, T)


def _comb_omega1_oe(p, trunc):
    T = _require_trunc(trunc, "OE enumeration")
    cap = T - 1
    pairs = []
    k = 0
    while 2 * k + 1 <= cap:
        for pair in enumerate_domain("OE", k=k, weight_cap=cap):
            pairs.append((2 * k + 1, pair.weight))
        k += 1
    return _z_stat_gf(pairs, T)


def _xy_gf(entries, trunc) -> MultiSeries:
    acc: dict = {}
    for n, k, w in entries:
        d = acc.setdefault((0, n, k), {})
        d[w] = d.get(w, 0) + 1
    return MultiSeries({m: QSeries(d, trunc) for m, d in acc.items()}, trunc)


def _comb_nu3_o(p, trunc):
    T = _require_trunc(trunc, "O enumeration")
    cap = T - 1
    entries = []
    n = 0
    while n * n + n <= cap:
        k = 0
        while n * n + n + k <= cap:
            for pair in enumerate_domain("O", n=n, k=k, weight_cap=cap):
                entries.append((n, k, pair.weight))
            k += 1
        n += 1
    return _xy_gf(entries, T)


def _comb_nu3_do(p, trunc):
    T = _require_trunc(trunc, "DO enumeration")
    cap = T - 1
    entries = []
    n = 0
    while n * n + n <= cap:
        k = 0
        while n * n + n + k <= cap:
            for pair in enumerate_domain("DO", n=n, k=k, weight_cap=cap):
                entries.append((n, k, pair.weight))
            k += 1
        n += 1
    return _xy_gf(entries, T)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCase:
    """A named identity: parameter schema plus builders for each side."""

    id: str
    params: tuple
    kind: str  # "polynomial-exact" | "truncated-series" | "integer"
    lhs_builder: Callable
    rhs_builder: Callable
    comb_builders: Mapping[str, Callable] = field(default_factory=dict)
    texts: Mapping[str, str] = field(default_factory=dict)


_THM21_LHS_TEXT = "sum(s, 0, n, q^s * poch(-q^(s+1), 1, n-s) * qbinom(n+s, s))"
_STAIR_TEXT = "sum(t, 0, n, q^(binom(t+1, 2)) * qbinom(2*n+1, n+1+t))"
_NEGPOCH_SQ_TEXT = "poch(-q, 1, n)^2"

REGISTRY: dict = {}


def _register(case: IdentityCase) -> None:
    REGISTRY[case.id] = case


_register(IdentityCase(
    "ay1", (), "truncated-series", _ay1_lhs, _ay1_rhs,
    texts={
        "lhs": "sum(n, 1, N, q^n * poch(z*q^n, 1, n+1)^(-1)"
               " * poch(z*q^(2*n+2), 2, inf)^(-1))",
        "rhs": "sum(n, 0, N, z^n * q^(2*n^2+2*n+1) * poch(q, 2, n+1)^(-1)"
               " * poch(z*q, 2, n+1)^(-1))",
    },
))
_register(IdentityCase(
    "ay2", (), "truncated-series", _ay2_lhs, _ay2_rhs,
    texts={
        "lhs": "sum(n, 0, N, q^n * poch(-z*q^(n+1), 1, n)"
               " * poch(-z*q^(2*n+2), 2, inf))",
        "rhs": "sum(n, 0, N, z^n * q^(n^2+n) * poch(q, 2, n+1)^(-1))",
    },
))
_register(IdentityCase(
    "ay3", ("n",), "polynomial-exact", _ay3_lhs, _ay3_rhs,
    texts={
        "lhs": "sum(s, 0, n, q^s * poch(q, 1, n+s) * poch(q^2, 2, s)^(-1))",
        "rhs": "poch(q^2, 2, n)",
    },
))
_register(IdentityCase(
    "thm21", ("n",), "polynomial-exact", _thm21_lhs, _thm21_rhs,
    comb_builders={"b1": _comb_b1},
    texts={"lhs": _THM21_LHS_TEXT, "rhs": _NEGPOCH_SQ_TEXT},
))
_register(IdentityCase(
    "lemma22", ("n",), "polynomial-exact", _thm21_lhs, _lemma22_rhs,
    comb_builders={"b2": _comb_b2},
    texts={"lhs": _THM21_LHS_TEXT, "rhs": _STAIR_TEXT},
))
_register(IdentityCase(
    "middle", ("n",), "polynomial-exact", _lemma22_rhs, _thm21_rhs,
    comb_builders={"p_gt": _comb_p_gt},
    texts={"lhs": _STAIR_TEXT, "rhs": _NEGPOCH_SQ_TEXT},
))
_register(IdentityCase(
    "q1limit", ("n",), "integer", _q1limit_lhs, _q1limit_rhs,
    texts={
        "lhs": "sum(s, 0, n, 2^(n-s) * binom(n+s, s))",
        "rhs": "sum(t, 0, n, binom(2*n+1, n+1+t))",
    },
))
_register(IdentityCase(
    "omega", (), "truncated-series", _omega_lhs, _omega_rhs,
    texts={
        "lhs": "sum(n, 0, N, z^n * q^(2*n^2+2*n) * poch(q, 2, n+1)^(-1)"
               " * poch(z*q, 2, n+1)^(-1))",
        "rhs": "sum(n, 0, N, z^n * q^n * poch(q, 2, n+1)^(-1))",
    },
))
_register(IdentityCase(
    "omega1", (), "truncated-series", _omega1_lhs, _omega1_rhs,
    comb_builders={"ds": _comb_omega1_ds, "oe": _comb_omega1_oe},
    texts={
        "lhs": "sum(n, 0, N, z^(2*n+1) * q^((2*n+1)^2) * poch(q^2, 4, n+1)^(-1)"
               " * poch(z^2*q^2, 4, n+1)^(-1))",
        "rhs": "sum(n, 0, N, z^(2*n+1) * q^(2*n+1) * poch(q^2, 4, n+1)^(-1))",
    },
))
_register(IdentityCase(
    "nu1", (), "truncated-series", _nu1_lhs, _nu1_rhs,
    texts={
        "lhs": "sum(n, 0, N, q^(n^2+n) * poch(-z*q, 2, n+1)^(-1))",
        "rhs": "sum(n, 0, N, poch(q*z^(-1), 2, n) * (-z*q)^n)",
    },
))
_register(IdentityCase(
    "nu2", (), "truncated-series", _nu2_lhs, _nu2_rhs,
    texts={
        "lhs": "sum(n, 0, N, z^n * q^(n^2+n) * poch(-q, 2, n+1)^(-1))",
        "rhs": "sum(n, 0, N, poch(z*q, 2, n) * (-q)^n)",
    },
))
_register(IdentityCase(
    "nu3", (), "truncated-series", _nu3_lhs, _nu3_rhs,
    comb_builders={"o": _comb_nu3_o, "do": _comb_nu3_do},
    texts={
        "lhs": "sum(n, 0, N, q^(n^2+n) * x^n * poch(y*q, 2, n+1)^(-1))",
        "rhs": "sum(n, 0, N, poch(-x*q*y^(-1), 2, n) * (y*q)^n)",
    },
))
_register(IdentityCase(
    "qbinom_thm", ("n",), "polynomial-exact", _qbinom_thm_lhs, _qbinom_thm_rhs,
    texts={
        "lhs": "poch(z, 1, n)",
        "rhs": "sum(t, 0, n, qbinom(n, t) * (-1)^t * z^t * q^(binom(t, 2)))",
    },
))

IDENTITY_IDS = tuple(REGISTRY)


def get_identity(identity_id: str) -> IdentityCase:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(
            f"unknown identity {identity_id!r}; choose from {IDENTITY_IDS}"
        ) from None


def _check_params(case: IdentityCase, params: Optional[dict]) -> dict:
    given = {k: v for k, v in (params or {}).items() if v is not None}
    missing = [p for p in case.params if p not in given]
    extra = [k for k in given if k not in case.params]
    if missing:
        raise BadParams(f"identity {case.id} requires parameter(s) {missing}")
    if extra:
        raise BadParams(f"identity {case.id} does not take parameter(s) {extra}")
    for k, v in given.items():
        if not isinstance(v, int) or v < 0:
            raise BadParams(f"parameter {k} must be a nonnegative integer")
    return given


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass
class Mismatch:
    monomial: tuple
    exponent: int
    lhs: int
    rhs: int
    sides: tuple = ("lhs", "rhs")

    def monomial_str(self) -> str:
        return mono_str(self.monomial)


@dataclass
class VerifyReport:
    id: str
    params: dict
    trunc: Optional[int]
    equal: bool
    first_mismatch: Optional[Mismatch] = None

    def to_json_dict(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            mm = {
                "monomial": self.first_mismatch.monomial_str(),
                "exponent": self.first_mismatch.exponent,
                "lhs": self.first_mismatch.lhs,
                "rhs": self.first_mismatch.rhs,
            }
        return {
            "id": self.id,
            "params": self.params,
            "trunc": self.trunc,
            "equal": self.equal,
            "first_mismatch": mm,
        }


def build_side(identity_id: str, side: str, params: Optional[dict] = None,
               trunc: Optional[int] = 200, comb_cap: Optional[int] = None):
    """Expand one side of a registered identity.

    ``side`` is "lhs", "rhs", a named enumeration side, or "combinatorial"
    when the identity has exactly one enumeration side.  Enumeration sides
    enumerate every element of weight below min(trunc, comb_cap + 1), which
    becomes the truncation order of the result.
    """
    case = get_identity(identity_id)
    p = _check_params(case, params)
    if side == "lhs":
        return case.lhs_builder(p, trunc)
    if side == "rhs":
        return case.rhs_builder(p, trunc)
    names = tuple(case.comb_builders)
    if side == "combinatorial":
        if len(names) != 1:
            raise BadParams(
                f"identity {identity_id} has enumeration sides {names or '()'};"
                " name one explicitly"
            )
        side = names[0]
    if side in case.comb_builders:
        ct = trunc
        if comb_cap is not None:
            ct = comb_cap + 1 if ct is None else min(ct, comb_cap + 1)
        return case.comb_builders[side](p, ct)
    raise BadParams(
        f"identity {identity_id} has no side {side!r}"
        f" (available: lhs, rhs{', ' + ', '.join(names) if names else ''})"
    )


def verify(identity_id: str, params: Optional[dict] = None,
           trunc: Optional[int] = 200, comb_cap: Optional[int] = None,
           include_comb: bool = True) -> VerifyReport:
    """Expand every side of the identity and compare coefficient-exactly.

    Closed-form sides are compared below ``trunc``; enumeration sides are
    compared below min(trunc, comb_cap + 1).  The report carries the first
    mismatching coefficient, ordered by q-exponent then monomial.
    """
    case = get_identity(identity_id)
    p = _check_params(case, params)
    if case.kind == "integer":
        res = q1_limit_check(p["n"])
        equal = (
            res["lhs"] == res["rhs"] == res["power"]
            and res["pivot_ok"] in (None, True)
        )
        mm = None
        if not equal:
            mm = Mismatch(TRIVIAL_MONO, 0, res["lhs"], res["rhs"])
        return VerifyReport(identity_id, p, trunc, equal, mm)
    sides = [
        ("lhs", case.lhs_builder(p, trunc)),
        ("rhs", case.rhs_builder(p, trunc)),
    ]
    if include_comb:
        ct = trunc
        if comb_cap is not None:
            ct = comb_cap + 1 if ct is None else min(ct, comb_cap + 1)
        for name, builder in case.comb_builders.items():
            sides.append((name, builder(p, ct)))
    base_name, base = sides[0]
    for name, other in sides[1:]:
        found = base.first_mismatch(other, trunc)
        if found is not None:
            mono, e, lc, rc = found
            mm = Mismatch(mono, e, lc, rc, (base_name, name))
            return VerifyReport(identity_id, p, trunc, False, mm)
    return VerifyReport(identity_id, p, trunc, True, None)


# ---------------------------------------------------------------------------
# Specializations and counting series
# ---------------------------------------------------------------------------


def nu3_specialized(target: str, side: str, trunc: int) -> MultiSeries:
    """nu3 with x, y substituted to produce the nu1 or nu2 shape."""
    ms = build_side("nu3", side, None, trunc)
    if target == "nu1":
        return ms.subst_aux(x=1, y=(-1, "z"))
    if target == "nu2":
        return ms.subst_aux(x="z", y=-1)
    raise BadParams("target must be nu1 or nu2")


def p_omega_series(trunc: int) -> QSeries:
    """Single-variable counting series from the ay1 left side at z = 1."""
    return build_side("ay1", "lhs", None, trunc).subst_aux(z=1).qseries()


def p_nu_series(trunc: int) -> QSeries:
    """Single-variable counting series from the ay2 left side at z = 1."""
    return build_side("ay2", "lhs", None, trunc).subst_aux(z=1).qseries()
