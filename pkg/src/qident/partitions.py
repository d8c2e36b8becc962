"""Partition types, structural maps, and exhaustive enumerators.

Covers ordinary/distinct partitions, sets of distinct integers in a symmetric
range (whose weight may be negative), partitions-in-a-box enumeration, and the
bounded families the constructive maps act on, each paired with a validator
predicate.  Enumerators yield each element exactly once and are restartable.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterator, Optional

from .errors import MissingParam, NotSelfConjugate, UnknownDomain
from .series import QSeries


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"{type(self).__name__}{self.parts}"

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram."""
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= j)
                for j in range(1, self.parts[0] + 1)
            )
        )

    def durfee_size(self) -> int:
        """Side of the largest square inside the Ferrers diagram."""
        d = 0
        for i, p in enumerate(self.parts):
            if p >= i + 1:
                d = i + 1
            else:
                break
        return d

    def is_self_conjugate(self) -> bool:
        return self.conjugate().parts == self.parts


class DistinctPartition(Partition):
    """A partition with strictly decreasing parts."""

    __slots__ = ()

    def __init__(self, parts=()):
        super().__init__(parts)
        if any(self.parts[i] == self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be strictly decreasing: {self.parts}")


class SignedDistinctSet:
    """A set of distinct integers in [-n, n], stored increasing.

    The weight (sum of elements) may be negative or zero.
    """

    __slots__ = ("elements", "n")

    def __init__(self, elements=(), n: int = 0):
        elements = tuple(elements)
        if any(abs(e) > n for e in elements):
            raise ValueError(f"element out of range [-{n}, {n}]: {elements}")
        if any(elements[i] >= elements[i + 1] for i in range(len(elements) - 1)):
            raise ValueError(f"elements must be strictly increasing: {elements}")
        self.elements = elements
        self.n = n

    @property
    def weight(self) -> int:
        return sum(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, SignedDistinctSet)
            and self.elements == other.elements
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.elements, self.n))

    def __repr__(self):
        return f"SignedDistinctSet({self.elements}, n={self.n})"


class PartitionPair:
    """A pair of partitions whose weight is the sum of the components'."""

    __slots__ = ("first", "second")

    def __init__(self, first: Partition, second: Partition):
        self.first = first
        self.second = second

    @property
    def weight(self) -> int:
        return self.first.weight + self.second.weight

    def __eq__(self, other):
        return (
            isinstance(other, PartitionPair)
            and self.first == other.first
            and self.second == other.second
        )

    def __hash__(self):
        return hash((self.first, self.second))

    def __iter__(self):
        return iter((self.first, self.second))

    def __repr__(self):
        return f"PartitionPair({self.first!r}, {self.second!r})"


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def durfee_size(p: Partition) -> int:
    return p.durfee_size()


def selfconj_to_distinct_odd(p: Partition) -> DistinctPartition:
    """Principal-hook decomposition of a self-conjugate partition.

    Hook i contributes the odd part 2*(p_i - i) + 1; the output is a distinct
    odd partition with as many parts as the Durfee square side, and the same
    weight.
    """
    if not p.is_self_conjugate():
        raise NotSelfConjugate(f"{p!r} is not self-conjugate")
    d = p.durfee_size()
    return DistinctPartition(
        tuple(2 * (p.parts[i] - (i + 1)) + 1 for i in range(d))
    )


def distinct_odd_to_selfconj(dp: Partition) -> Partition:
    """Fold distinct odd parts back into nested principal hooks."""
    parts = dp.parts
    if any(a % 2 == 0 for a in parts):
        raise ValueError(f"parts must be odd: {parts}")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be strictly decreasing: {parts}")
    arms = [(a - 1) // 2 for a in parts]
    d = len(arms)
    rows = [i + 1 + arms[i] for i in range(d)]
    r = d
    while True:
        extra = sum(1 for i in range(d) if i + arms[i] >= r)
        if extra == 0:
            break
        rows.append(extra)
        r += 1
    return Partition(tuple(rows))


def _conj_tuple(parts) -> tuple:
    """Conjugate of a raw decreasing tuple (zeros not allowed)."""
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)
    )


# ---------------------------------------------------------------------------
# Elementary enumerators (raw tuples)
# ---------------------------------------------------------------------------


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[tuple]:
    """All partitions of n as decreasing tuples, largest part <= max_part."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _box_tuples(max_parts: int, max_part: int) -> Iterator[tuple]:
    """Partitions with at most max_parts parts, each at most max_part."""
    yield ()
    if max_parts == 0 or max_part == 0:
        return
    for first in range(max_part, 0, -1):
        for rest in _box_tuples(max_parts - 1, first):
            yield (first,) + rest


def enumerate_partitions(max_parts: int, max_part: int) -> Iterator[Partition]:
    """Every partition fitting in a max_parts x max_part box, exactly once."""
    if max_parts < 0 or max_part < 0:
        raise ValueError("box bounds must be nonnegative")
    for t in _box_tuples(max_parts, max_part):
        yield Partition(t)


def _distinct_subsets(n: int) -> Iterator[tuple]:
    """Strictly decreasing tuples with parts drawn from {1..n}."""
    for r in range(n + 1):
        for combo in combinations(range(n, 0, -1), r):
            yield combo


def _odd_exact(k: int, max_part: int) -> Iterator[tuple]:
    """Odd partitions with exactly k parts, each <= max_part, decreasing."""
    if k == 0:
        yield ()
        return
    top = max_part if max_part % 2 == 1 else max_part - 1
    for first in range(top, 0, -2):
        for rest in _odd_exact(k - 1, first):
            yield (first,) + rest


def _odd_even_mult(max_odd: int, weight_cap: int, length: Optional[int] = None,
                   ) -> Iterator[tuple]:
    """Odd partitions, each distinct part occurring an even number of times.

    Parts are <= max_odd, total weight <= weight_cap, and when ``length`` is
    given the number of parts (with multiplicity) is exactly ``length``.
    """
    top = max_odd if max_odd % 2 == 1 else max_odd - 1

    def rec(part, cap, slots):
        if part <= 0:
            if slots is None or slots == 0:
                yield ()
            return
        m = 0
        while 2 * m * part <= cap and (slots is None or 2 * m <= slots):
            head = (part,) * (2 * m)
            nslots = None if slots is None else slots - 2 * m
            for rest in rec(part - 2, cap - 2 * m * part, nslots):
                yield head + rest
            m += 1

    if length is not None and length % 2 == 1:
        return
    yield from rec(top, weight_cap, length)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def _enum_b1(n: int) -> Iterator[PartitionPair]:
    for lam in _distinct_subsets(n):
        bound = (lam[-1] - 1) if lam else n
        for pi in _box_tuples(n + 1, bound):
            yield PartitionPair(DistinctPartition(lam), Partition(pi))


def _val_b1(elt, n: int) -> bool:
    if not isinstance(elt, PartitionPair):
        return False
    lam, pi = elt.first, elt.second
    if len(set(lam.parts)) != len(lam.parts):
        return False
    if lam and lam.parts[0] > n:
        return False
    if len(pi) > n + 1:
        return False
    bound = (lam.parts[-1] - 1) if lam else n
    return not pi or pi.parts[0] <= bound


def _enum_b2(n: int) -> Iterator[tuple]:
    for t in range(n + 1):
        for nu in _box_tuples(n + 1 + t, n - t):
            yield (t, Partition(nu))


def _val_b2(elt, n: int) -> bool:
    if not (isinstance(elt, tuple) and len(elt) == 2):
        return False
    t, nu = elt
    if not (isinstance(t, int) and 0 <= t <= n and isinstance(nu, Partition)):
        return False
    if len(nu) > n + 1 + t:
        return False
    return not nu or nu.parts[0] <= n - t


# B3 elements have the same (t, nu) shape and bounds as B2; only the
# reconstruction of the first component differs (a consecutive run from -n
# instead of a staircase), so the box constraints coincide.
_enum_b3 = _enum_b2
_val_b3 = _val_b2


def staircase(t: int) -> DistinctPartition:
    """The partition (t, t-1, ..., 1) represented by its size t."""
    return DistinctPartition(tuple(range(t, 0, -1)))


def run_weight(n: int, t: int) -> int:
    """Weight of the consecutive run {-n, -n+1, ..., t}."""
    return t * (t + 1) // 2 - n * (n + 1) // 2


def b2_weight(elt) -> int:
    t, nu = elt
    return t * (t + 1) // 2 + nu.weight


def b3_weight(n: int, elt) -> int:
    t, nu = elt
    return run_weight(n, t) + nu.weight


def _enum_p(n: int) -> Iterator[SignedDistinctSet]:
    universe = range(-n, n + 1)
    for r in range(2 * n + 2):
        for combo in combinations(universe, r):
            yield SignedDistinctSet(combo, n)


def _val_p(elt, n: int) -> bool:
    if not isinstance(elt, SignedDistinctSet) or elt.n != n:
        return False
    els = elt.elements
    if any(abs(e) > n for e in els):
        return False
    return all(els[i] < els[i + 1] for i in range(len(els) - 1))


def _enum_p_gt(n: int) -> Iterator[SignedDistinctSet]:
    for s in _enum_p(n):
        if len(s) >= n + 1:
            yield s


def _val_p_gt(elt, n: int) -> bool:
    return _val_p(elt, n) and len(elt) >= n + 1


def _is_odd_even_mult(parts) -> bool:
    counts = Counter(parts)
    return all(p % 2 == 1 for p in counts) and all(
        c % 2 == 0 for c in counts.values()
    )


def _val_ds(elt, k: int) -> bool:
    if not isinstance(elt, Partition) or not elt:
        return False
    if elt.parts[0] != 2 * k + 1:
        return False
    d = elt.durfee_size()
    if d % 2 == 0:
        return False
    below = elt.parts[d:]
    if not _is_odd_even_mult(below):
        return False
    right = _conj_tuple(tuple(p - d for p in elt.parts[:d] if p > d))
    return _is_odd_even_mult(right)


def _enum_ds(k: int, cap: int) -> Iterator[Partition]:
    """Partitions with odd Durfee side, odd/even-multiplicity residue below
    and (conjugated) right of the square, largest part 2k+1, weight <= cap."""
    for d in range(1, 2 * k + 2, 2):
        cols = 2 * k + 1 - d  # number of cells the top row extends past the square
        if d * d + cols > cap:
            continue
        for c in _odd_even_mult(d, cap - d * d, length=cols):
            room = cap - d * d - sum(c)
            r = _conj_tuple(c)
            top = tuple(
                d + (r[i] if i < len(r) else 0) for i in range(d)
            )
            for b in _odd_even_mult(d, room):
                yield Partition(top + b)


def _enum_oe(k: int, cap: int) -> Iterator[PartitionPair]:
    mu = Partition((2 * k + 1,))
    if mu.weight > cap:
        return
    for nu in _odd_even_mult(2 * k + 1, cap - mu.weight):
        yield PartitionPair(mu, Partition(nu))


def _val_oe(elt, k: int) -> bool:
    if not isinstance(elt, PartitionPair):
        return False
    mu, nu = elt.first, elt.second
    if mu.parts != (2 * k + 1,):
        return False
    if nu and nu.parts[0] > 2 * k + 1:
        return False
    return _is_odd_even_mult(nu.parts)


def rectangle(n: int) -> Partition:
    """n+1 rows of width n (the empty partition when n = 0)."""
    return Partition((n,) * (n + 1) if n else ())


def _enum_o(n: int, k: int, cap: Optional[int] = None) -> Iterator[PartitionPair]:
    lam = rectangle(n)
    for pi in _odd_exact(k, 2 * n + 1):
        pair = PartitionPair(lam, Partition(pi))
        if cap is None or pair.weight <= cap:
            yield pair


def _val_o(elt, n: int, k: int) -> bool:
    if not isinstance(elt, PartitionPair):
        return False
    lam, pi = elt.first, elt.second
    if lam != rectangle(n):
        return False
    if len(pi) != k or any(p % 2 == 0 for p in pi.parts):
        return False
    return not pi or pi.parts[0] <= 2 * n + 1


def _enum_do(n: int, k: int, cap: Optional[int] = None) -> Iterator[PartitionPair]:
    mu = Partition((n + k,) if n + k else ())
    odds = range(2 * (n + k) - 1, 0, -2)
    for combo in combinations(odds, n):
        pair = PartitionPair(mu, DistinctPartition(combo))
        if cap is None or pair.weight <= cap:
            yield pair


def _val_do(elt, n: int, k: int) -> bool:
    if not isinstance(elt, PartitionPair):
        return False
    mu, nu = elt.first, elt.second
    if mu.parts != ((n + k,) if n + k else ()):
        return False
    if len(nu) != n:
        return False
    if any(p % 2 == 0 for p in nu.parts):
        return False
    if len(set(nu.parts)) != len(nu.parts):
        return False
    return not nu or nu.parts[0] <= 2 * (n + k) - 1


# name -> (required params, takes weight_cap, enumerator, validator)
_DOMAINS = {
    "B1": (("n",), False, _enum_b1, _val_b1),
    "B2": (("n",), False, _enum_b2, _val_b2),
    "B3": (("n",), False, _enum_b3, _val_b3),
    "P": (("n",), False, _enum_p, _val_p),
    "P_gt": (("n",), False, _enum_p_gt, _val_p_gt),
    "DS": (("k",), True, _enum_ds, _val_ds),
    "OE": (("k",), True, _enum_oe, _val_oe),
    "O": (("n", "k"), True, _enum_o, _val_o),
    "DO": (("n", "k"), True, _enum_do, _val_do),
}

DOMAIN_NAMES = tuple(_DOMAINS)


def enumerate_domain(name: str, n: Optional[int] = None, k: Optional[int] = None,
                     weight_cap: Optional[int] = None) -> Iterator:
    """Stream the named family exactly once.

    Finite families (B1, B2, B3, P, P_gt) ignore the weight cap; DS, OE, O
    and DO require one and yield only elements of weight <= weight_cap.
    """
    if name not in _DOMAINS:
        raise UnknownDomain(f"unknown domain {name!r}; choose from {DOMAIN_NAMES}")
    required, capped, enum, _ = _DOMAINS[name]
    args = {}
    for p in required:
        v = n if p == "n" else k
        if v is None:
            raise MissingParam(f"domain {name} requires parameter {p}")
        args[p] = v
    if capped:
        if weight_cap is None:
            raise MissingParam(f"domain {name} requires weight_cap")
        return enum(*args.values(), weight_cap)
    return enum(*args.values())


def domain_validator(name: str):
    """Membership predicate for the named family (element, **params) -> bool."""
    if name not in _DOMAINS:
        raise UnknownDomain(f"unknown domain {name!r}; choose from {DOMAIN_NAMES}")
    return _DOMAINS[name][3]


def weight_gf(weights) -> QSeries:
    """Exact generating function sum q^w over an iterable of weights."""
    acc: dict = {}
    for w in weights:
        acc[w] = acc.get(w, 0) + 1
    return QSeries(acc)
