"""Constructive weight-preserving maps between partition families.

Each map validates its input eagerly, carries an explicit inverse, and is
covered by ``check_bijection``, which exhaustively enumerates the (possibly
weight-capped) domain and codomain, applies the map both ways, and verifies
membership, the weight law, and the round trip element by element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainViolation, MissingParam, UnknownBijection
from .partitions import (
    DistinctPartition,
    Partition,
    PartitionPair,
    SignedDistinctSet,
    b2_weight,
    b3_weight,
    distinct_odd_to_selfconj,
    domain_validator,
    enumerate_domain,
    rectangle,
    selfconj_to_distinct_odd,
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainViolation(message)


# ---------------------------------------------------------------------------
# phi : B1(n) -> B2(n)
# ---------------------------------------------------------------------------


def phi(n: int, pair: PartitionPair) -> tuple:
    """Peel a staircase off the distinct component and merge the remainder.

    Removing l, l-1, ..., 1 from the l parts of the first component leaves a
    partition that sits on top of the second one; the staircase is returned
    by its size t = l.
    """
    _require(domain_validator("B1")(pair, n), f"not a B1({n}) element: {pair!r}")
    lam, pi = pair.first, pair.second
    ell = len(lam)
    lam_star = [lam.parts[i] - (ell - i) for i in range(ell)]
    nu = Partition(tuple(p for p in lam_star if p > 0) + pi.parts)
    return (ell, nu)


def phi_inv(n: int, elt: tuple) -> PartitionPair:
    """Split off the first t parts, restore the staircase, return the pair."""
    _require(domain_validator("B2")(elt, n), f"not a B2({n}) element: {elt!r}")
    t, nu = elt
    padded = nu.parts + (0,) * (t - len(nu))
    lam = tuple(padded[i] + (t - i) for i in range(t))
    pi = nu.parts[t:] if len(nu) > t else ()
    return PartitionPair(DistinctPartition(lam), Partition(pi))


# ---------------------------------------------------------------------------
# psi : negative-only sets -> distinct partitions bounded by n
# ---------------------------------------------------------------------------


def psi(n: int, mu: SignedDistinctSet) -> DistinctPartition:
    """Negate the complement of mu inside {-n, ..., -1}.

    The weight law is |mu| = -n(n+1)/2 + |psi(mu)|.
    """
    _require(
        isinstance(mu, SignedDistinctSet)
        and mu.n == n
        and all(-n <= e <= -1 for e in mu.elements),
        f"psi input must use only negative elements of [-{n},-1]: {mu!r}",
    )
    missing = sorted(set(range(-n, 0)) - set(mu.elements))
    return DistinctPartition(tuple(sorted((-e for e in missing), reverse=True)))


def psi_inv(n: int, dp: DistinctPartition) -> SignedDistinctSet:
    _require(
        isinstance(dp, Partition)
        and len(set(dp.parts)) == len(dp.parts)
        and all(1 <= p <= n for p in dp.parts),
        f"psi inverse needs a distinct partition with parts in [1,{n}]: {dp!r}",
    )
    keep = set(range(-n, 0)) - {-p for p in dp.parts}
    return SignedDistinctSet(tuple(sorted(keep)), n)


# ---------------------------------------------------------------------------
# tau : P_>(n) <-> elements of P(n) with at most n parts
# ---------------------------------------------------------------------------


def tau(n: int, lam: SignedDistinctSet) -> SignedDistinctSet:
    """Negate the complement within the full range; weight is preserved."""
    _require(
        domain_validator("P_gt")(lam, n), f"not a P_gt({n}) element: {lam!r}"
    )
    return tau_complement(n, lam)


def tau_complement(n: int, lam: SignedDistinctSet) -> SignedDistinctSet:
    """The underlying involution, with no side constraint on the part count."""
    missing = set(range(-n, n + 1)) - set(lam.elements)
    return SignedDistinctSet(tuple(sorted(-e for e in missing)), n)


# ---------------------------------------------------------------------------
# rho : P_>(n) -> B3(n)
# ---------------------------------------------------------------------------


def rho(n: int, lam: SignedDistinctSet) -> tuple:
    """Subtract the run -n, -n+1, ... elementwise from the increasing set.

    A set with n+1+t elements maps to (t, nu) where nu collects the excesses
    as an ordinary partition with at most n+1+t parts bounded by n-t.
    """
    _require(
        domain_validator("P_gt")(lam, n), f"not a P_gt({n}) element: {lam!r}"
    )
    t = len(lam) - (n + 1)
    excess = [
        lam.elements[i] - (-n + i) for i in range(len(lam))
    ]
    nu = Partition(tuple(sorted((e for e in excess if e > 0), reverse=True)))
    return (t, nu)


def rho_inv(n: int, elt: tuple) -> SignedDistinctSet:
    _require(domain_validator("B3")(elt, n), f"not a B3({n}) element: {elt!r}")
    t, nu = elt
    size = n + 1 + t
    increasing = (0,) * (size - len(nu)) + tuple(sorted(nu.parts))
    elements = tuple(increasing[i] + (-n + i) for i in range(size))
    return SignedDistinctSet(elements, n)


# ---------------------------------------------------------------------------
# durfee_split : DS_k <-> OE_k
# ---------------------------------------------------------------------------


def durfee_split(lam: Partition) -> PartitionPair:
    """Detach the largest part; the remainder keeps the odd/even-multiplicity
    structure, giving an OE element for the same k."""
    k = _ds_k(lam)
    mu = Partition((lam.parts[0],))
    nu = Partition(lam.parts[1:])
    out = PartitionPair(mu, nu)
    _require(
        domain_validator("OE")(out, k),
        f"split of {lam!r} left the OE({k}) family: {out!r}",
    )
    return out


def durfee_join(pair: PartitionPair) -> Partition:
    """Attach the single odd part on top; the Durfee side comes out odd."""
    mu, nu = pair.first, pair.second
    _require(
        len(mu) == 1 and mu.parts[0] % 2 == 1,
        f"first component must be a single odd part: {mu!r}",
    )
    k = (mu.parts[0] - 1) // 2
    _require(
        domain_validator("OE")(pair, k), f"not an OE({k}) element: {pair!r}"
    )
    lam = Partition(mu.parts + nu.parts)
    _require(
        domain_validator("DS")(lam, k),
        f"joined partition left the DS({k}) family: {lam!r}",
    )
    return lam


def _ds_k(lam: Partition) -> int:
    _require(bool(lam) and lam.parts[0] % 2 == 1, f"largest part must be odd: {lam!r}")
    k = (lam.parts[0] - 1) // 2
    _require(domain_validator("DS")(lam, k), f"not a DS({k}) element: {lam!r}")
    return k


# ---------------------------------------------------------------------------
# nu3 : O(n,k) <-> DO(n,k)
# ---------------------------------------------------------------------------


def nu3_forward(n: int, k: int, pair: PartitionPair) -> PartitionPair:
    """Fold the odd parts around the rectangle, then open the principal hooks.

    Each odd part 2s+1 of the second component splits into a column of height
    s+1 appended to the right of the diagram and a row of width s appended
    below it, processed in decreasing order.  Removing the resulting largest
    part n+k leaves a self-conjugate partition with Durfee side n, which the
    hook map turns into a distinct odd partition with exactly n parts.
    """
    _require(
        domain_validator("O")(pair, n, k), f"not an O({n},{k}) element: {pair!r}"
    )
    rows = [n] * (n + 1)
    below = []
    for part in pair.second.parts:  # stored decreasing
        s = (part - 1) // 2
        for i in range(s + 1):
            rows[i] += 1
        if s:
            below.append(s)
    nu_star = tuple(r for r in rows if r > 0) + tuple(below)
    _require(
        (not nu_star and n + k == 0) or (nu_star and nu_star[0] == n + k),
        f"largest folded part is not n+k: {nu_star}",
    )
    mu = Partition((n + k,) if n + k else ())
    nu_prime = Partition(nu_star[1:])
    _require(nu_prime.is_self_conjugate(), f"residue not self-conjugate: {nu_prime!r}")
    _require(
        nu_prime.durfee_size() == n,
        f"residue Durfee side {nu_prime.durfee_size()} != {n}",
    )
    _require(
        not nu_prime or nu_prime.parts[0] <= n + k,
        f"residue largest part exceeds n+k: {nu_prime!r}",
    )
    nu = selfconj_to_distinct_odd(nu_prime)
    out = PartitionPair(mu, nu)
    _require(
        domain_validator("DO")(out, n, k),
        f"image left the DO({n},{k}) family: {out!r}",
    )
    return out


def nu3_inverse(n: int, k: int, pair: PartitionPair) -> PartitionPair:
    """Close the hooks, put the single part back on top, unfold the columns
    and rows into odd parts."""
    _require(
        domain_validator("DO")(pair, n, k), f"not a DO({n},{k}) element: {pair!r}"
    )
    nu_prime = distinct_odd_to_selfconj(pair.second)
    _require(
        nu_prime.durfee_size() == n,
        f"hook closure has Durfee side {nu_prime.durfee_size()} != {n}",
    )
    _require(
        not nu_prime or nu_prime.parts[0] <= n + k,
        f"hook closure largest part exceeds n+k: {nu_prime!r}",
    )
    nu_star = ((n + k,) if n + k else ()) + nu_prime.parts
    head = nu_star[: n + 1]
    below = nu_star[n + 1 :]
    excess = tuple(h - n for h in head)
    _require(all(e >= 0 for e in excess), f"row short of the rectangle: {nu_star}")
    splits = _conj_of(excess)  # multiset of s+1 values, decreasing
    svals = tuple(v - 1 for v in splits)
    _require(
        tuple(s for s in svals if s >= 1) == below,
        f"appended rows {below} disagree with column excesses {svals}",
    )
    pi = Partition(tuple(2 * s + 1 for s in svals))
    out = PartitionPair(rectangle(n), pi)
    _require(
        domain_validator("O")(out, n, k),
        f"preimage left the O({n},{k}) family: {out!r}",
    )
    return out


def _conj_of(parts: tuple) -> tuple:
    nz = tuple(p for p in parts if p > 0)
    if not nz:
        return ()
    return tuple(sum(1 for p in nz if p >= j) for j in range(1, nz[0] + 1))


# ---------------------------------------------------------------------------
# Exhaustive checking
# ---------------------------------------------------------------------------


@dataclass
class BijectionReport:
    """Aggregated result of an exhaustive forward/backward sweep."""

    name: str
    domain_size: int = 0
    codomain_size: int = 0
    roundtrip_failures: int = 0
    weight_violations: int = 0
    membership_failures: int = 0
    witness: Optional[str] = None

    def passed(self) -> bool:
        return (
            self.roundtrip_failures == 0
            and self.weight_violations == 0
            and self.membership_failures == 0
            and self.domain_size == self.codomain_size
        )

    def merge(self, other: "BijectionReport") -> "BijectionReport":
        return BijectionReport(
            name=self.name,
            domain_size=self.domain_size + other.domain_size,
            codomain_size=self.codomain_size + other.codomain_size,
            roundtrip_failures=self.roundtrip_failures + other.roundtrip_failures,
            weight_violations=self.weight_violations + other.weight_violations,
            membership_failures=self.membership_failures + other.membership_failures,
            witness=self.witness or other.witness,
        )


BIJECTION_NAMES = ("phi", "psi", "tau", "rho", "durfee_split", "nu3")


def _sweep(name, domain, codomain, forward, inverse, cod_valid, dom_valid,
           w_in, w_out, delta) -> BijectionReport:
    rep = BijectionReport(name=name)
    dom_weights = []
    for x in domain:
        rep.domain_size += 1
        dom_weights.append(w_in(x) + delta)
        try:
            y = forward(x)
            if not cod_valid(y):
                rep.membership_failures += 1
                rep.witness = rep.witness or repr(x)
                continue
            if w_out(y) != w_in(x) + delta:
                rep.weight_violations += 1
                rep.witness = rep.witness or repr(x)
            if inverse(y) != x:
                rep.roundtrip_failures += 1
                rep.witness = rep.witness or repr(x)
        except DomainViolation:
            rep.membership_failures += 1
            rep.witness = rep.witness or repr(x)
    cod_weights = []
    for y in codomain:
        rep.codomain_size += 1
        cod_weights.append(w_out(y))
        try:
            x = inverse(y)
            if not dom_valid(x):
                rep.membership_failures += 1
                rep.witness = rep.witness or repr(y)
                continue
            if forward(x) != y:
                rep.roundtrip_failures += 1
                rep.witness = rep.witness or repr(y)
        except DomainViolation:
            rep.membership_failures += 1
            rep.witness = rep.witness or repr(y)
    # independent of the element-wise law: the shifted weight multisets of
    # the two enumerations must coincide
    if sorted(dom_weights) != sorted(cod_weights):
        rep.weight_violations += 1
        rep.witness = rep.witness or "domain/codomain weight multisets differ"
    return rep


def _check_single(name: str, n: Optional[int], k: Optional[int],
                  weight_cap: Optional[int]) -> BijectionReport:
    if name == "phi":
        if n is None:
            raise MissingParam("phi requires n")
        return _sweep(
            name,
            enumerate_domain("B1", n=n),
            enumerate_domain("B2", n=n),
            lambda x: phi(n, x),
            lambda y: phi_inv(n, y),
            lambda y: domain_validator("B2")(y, n),
            lambda x: domain_validator("B1")(x, n),
            lambda x: x.weight,
            b2_weight,
            0,
        )
    if name == "psi":
        if n is None:
            raise MissingParam("psi requires n")
        negatives = [
            SignedDistinctSet(tuple(sorted(-v for v in combo)), n)
            for combo in _subsets(range(1, n + 1))
        ]
        codomain = [
            DistinctPartition(tuple(sorted(combo, reverse=True)))
            for combo in _subsets(range(1, n + 1))
        ]
        return _sweep(
            name,
            negatives,
            codomain,
            lambda x: psi(n, x),
            lambda y: psi_inv(n, y),
            lambda y: all(1 <= p <= n for p in y.parts),
            lambda x: all(-n <= e <= -1 for e in x.elements),
            lambda x: x.weight,
            lambda y: y.weight,
            n * (n + 1) // 2,
        )
    if name == "tau":
        if n is None:
            raise MissingParam("tau requires n")
        return _sweep(
            name,
            enumerate_domain("P_gt", n=n),
            (s for s in enumerate_domain("P", n=n) if len(s) <= n),
            lambda x: tau(n, x),
            lambda y: tau_complement(n, y),
            lambda y: len(y) <= n,
            lambda x: domain_validator("P_gt")(x, n),
            lambda x: x.weight,
            lambda y: y.weight,
            0,
        )
    if name == "rho":
        if n is None:
            raise MissingParam("rho requires n")
        return _sweep(
            name,
            enumerate_domain("P_gt", n=n),
            enumerate_domain("B3", n=n),
            lambda x: rho(n, x),
            lambda y: rho_inv(n, y),
            lambda y: domain_validator("B3")(y, n),
            lambda x: domain_validator("P_gt")(x, n),
            lambda x: x.weight,
            lambda y: b3_weight(n, y),
            0,
        )
    if name == "durfee_split":
        if k is None or weight_cap is None:
            raise MissingParam("durfee_split requires k and weight_cap")
        return _sweep(
            name,
            enumerate_domain("DS", k=k, weight_cap=weight_cap),
            enumerate_domain("OE", k=k, weight_cap=weight_cap),
            durfee_split,
            durfee_join,
            lambda y: domain_validator("OE")(y, k),
            lambda x: domain_validator("DS")(x, k),
            lambda x: x.weight,
            lambda y: y.weight,
            0,
        )
    if name == "nu3":
        if n is None or k is None or weight_cap is None:
            raise MissingParam("nu3 requires n, k and weight_cap")
        return _sweep(
            name,
            enumerate_domain("O", n=n, k=k, weight_cap=weight_cap),
            enumerate_domain("DO", n=n, k=k, weight_cap=weight_cap),
            lambda x: nu3_forward(n, k, x),
            lambda y: nu3_inverse(n, k, y),
            lambda y: domain_validator("DO")(y, n, k),
            lambda x: domain_validator("O")(x, n, k),
            lambda x: x.weight,
            lambda y: y.weight,
            0,
        )
    raise UnknownBijection(
        f"unknown bijection {name!r}; choose from {BIJECTION_NAMES}"
    )


def _subsets(iterable):
    items = tuple(iterable)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def check_bijection(name: str, n: Optional[int] = None, k: Optional[int] = None,
                    weight_cap: Optional[int] = None,
                    max_nk: Optional[int] = None) -> BijectionReport:
    """Exhaustively verify one of the six maps.

    For ``durfee_split`` omitting k sweeps every k reachable under the weight
    cap; for ``nu3`` passing ``max_nk`` sweeps all pairs with n + k bounded by
    it.  Merged reports add sizes and failure counts.
    """
    if name not in BIJECTION_NAMES:
        raise UnknownBijection(
            f"unknown bijection {name!r}; choose from {BIJECTION_NAMES}"
        )
    if name == "durfee_split" and k is None:
        if weight_cap is None:
            raise MissingParam("durfee_split requires weight_cap")
        rep = BijectionReport(name=name)
        for kk in range((weight_cap - 1) // 2 + 1):
            rep = rep.merge(_check_single(name, None, kk, weight_cap))
        return rep
    if name == "nu3" and max_nk is not None:
        if weight_cap is None:
            raise MissingParam("nu3 requires weight_cap")
        rep = BijectionReport(name=name)
        for nn in range(max_nk + 1):
            for kk in range(max_nk - nn + 1):
                rep = rep.merge(_check_single(name, nn, kk, weight_cap))
        return rep
    return _check_single(name, n, k, weight_cap)
