import pytest
from hypothesis import given, settings, strategies as st

from qident.errors import (
    DivisionInexact,
    NonConvergent,
    NonUnitConstantTerm,
    TruncationRequired,
)
from qident.series import (
    MultiSeries,
    QSeries,
    poch_finite,
    poch_infinite,
    qbinom,
    qq_factorial,
)

ONE = QSeries.one()
Q = QSeries.q()


def same_below_common_trunc(a, b):
    """Coefficient agreement below the minimum of the two truncation orders."""
    return a.first_mismatch(b) is None


# ---------------------------------------------------------------------------
# add / mul
# ---------------------------------------------------------------------------


def test_add_cancellation():
    assert (ONE - Q) + Q == ONE


def test_add_zero_identity():
    s = QSeries({0: 3, 5: -2}, trunc=12)
    assert QSeries.zero() + s == s
    assert s + QSeries.zero() == s


def test_add_trunc_propagation():
    a = QSeries({0: 1, 1: -1}, trunc=10)
    b = QSeries({2: 1}, trunc=5)
    out = a + b
    assert out.coeffs == {0: 1, 1: -1, 2: 1}
    assert out.trunc == 5


def test_mul_frozen():
    assert (ONE - Q) * (ONE + Q) == ONE - QSeries.q(2)
    assert ((ONE - Q) * (ONE - QSeries.q(2))).coeffs == {0: 1, 1: -1, 2: -1, 3: 1}


def test_mul_trunc_shifts_with_min_exp():
    # multiplying by an exact monomial q^5 raises the trusted bound by 5
    a = QSeries({0: 1}, trunc=10)
    out = a * QSeries.q(5)
    assert out.trunc == 15
    assert out.coeffs == {5: 1}


def test_mul_exact_zero_annihilates():
    a = QSeries({0: 1, 3: 4}, trunc=9)
    out = a * QSeries.zero()
    assert out.is_zero() and out.trunc is None


def test_aux_monomial_multiplication():
    z = MultiSeries.gen("z")
    one = MultiSeries.one()
    mq = MultiSeries.q()
    out = (z * (one - mq)) * (z * (one + mq))
    assert out.entries == {(2, 0, 0): ONE - QSeries.q(2)}


def test_coeff_guard_beyond_trunc():
    s = QSeries({0: 1}, trunc=5)
    assert s.coeff(4) == 0
    with pytest.raises(TruncationRequired):
        s.coeff(5)


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


def test_invert_geometric():
    inv = (ONE - Q).invert(8)
    assert inv.coeffs == {e: 1 for e in range(8)}
    assert inv.trunc == 8


def test_invert_one_is_exact():
    assert ONE.invert() == ONE


def test_invert_self_check_q_q2_pochhammer():
    p = poch_finite(Q, 2, 2)  # (1-q)(1-q^3)
    prod = p * p.invert(50)
    assert prod.first_mismatch(ONE) is None
    p1 = poch_finite(Q, 2, 1)
    assert p1.invert(20).coeffs == {e: 1 for e in range(20)}


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        (QSeries.term(2)).invert(5)
    with pytest.raises(NonUnitConstantTerm):
        (Q + ONE.shift(-1)).invert(5)  # has q^-1 term
    with pytest.raises(TruncationRequired):
        (ONE - Q).invert()  # infinite expansion with no truncation


def test_multiseries_invert_unit():
    d = poch_finite(MultiSeries.term(1, qexp=1, z=1), 2, 3)  # (zq;q^2)_3
    inv = d.invert_unit(40)
    assert (inv * d).first_mismatch(MultiSeries.one()) is None
    with pytest.raises(NonUnitConstantTerm):
        (MultiSeries.one() - MultiSeries.gen("z")).invert_unit(10)


@given(
    tail=st.dictionaries(
        st.integers(min_value=1, max_value=12),
        st.integers(min_value=-5, max_value=5),
        max_size=5,
    ),
    trunc=st.integers(min_value=2, max_value=30),
)
def test_invert_property(tail, trunc):
    a = QSeries({0: 1, **tail})
    assert (a * a.invert(trunc)).first_mismatch(ONE) is None


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------


def test_exact_div_frozen():
    num = ONE - QSeries.q(2)
    assert num.exact_div(ONE + Q) == ONE - Q


def test_exact_div_rejects_remainder():
    with pytest.raises(DivisionInexact):
        (ONE - QSeries.q(2)).exact_div(ONE - QSeries.q(3))


def test_exact_div_roundtrip_with_mul():
    a = qq_factorial(6)
    b = poch_finite(QSeries.term(-1, 1), 1, 4)
    assert (a * b).exact_div(b) == a


# ---------------------------------------------------------------------------
# Pochhammer products
# ---------------------------------------------------------------------------


def test_poch_finite_frozen():
    assert poch_finite(Q, 1, 0) == ONE
    assert poch_finite(Q, 1, 2).coeffs == {0: 1, 1: -1, 2: -1, 3: 1}
    assert poch_finite(QSeries.term(-1, 1), 1, 1) == ONE + Q


@pytest.mark.parametrize("step", [1, 2, 4])
@pytest.mark.parametrize("n", [0, 1, 3, 6])
def test_poch_finite_recurrence(step, n):
    a = QSeries.term(-1, 1)
    lhs = poch_finite(a, step, n + 1)
    rhs = poch_finite(a, step, n) * (ONE - a.shift(step * n))
    assert lhs == rhs


def test_poch_infinite_all_factors_trivial():
    out = poch_infinite(QSeries.q(17), 1, 17)
    assert out.coeffs == {0: 1} and out.trunc == 17


def test_poch_infinite_euler_low_order():
    out = poch_infinite(Q, 1, 4)
    assert out.coeffs == {0: 1, 1: -1, 2: -1}
    assert out.trunc == 4


def test_poch_infinite_pentagonal_oracle():
    # independent oracle: sum of (-1)^k q^(k(3k-1)/2) over all integers k
    T = 60
    expected = {0: 1}
    k = 1
    while k * (3 * k - 1) // 2 < T:
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < T:
                expected[e] = (-1) ** k
        k += 1
    out = poch_infinite(Q, 1, T)
    assert out.coeffs == {e: c for e, c in expected.items() if c}


def test_poch_infinite_self_inverse():
    a = MultiSeries.term(1, qexp=2, z=1)
    p = poch_infinite(a, 2, 35)
    assert (p * p.invert_unit(35)).first_mismatch(MultiSeries.one()) is None


def test_poch_infinite_nonconvergent():
    with pytest.raises(NonConvergent):
        poch_infinite(ONE, 1, 10)
    with pytest.raises(NonConvergent):
        poch_infinite(MultiSeries.gen("z"), 2, 10)


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------


def test_qbinom_frozen():
    assert qbinom(2, 1) == ONE + Q
    assert qbinom(5, 0) == ONE
    assert qbinom(3, 1).coeffs == {0: 1, 1: 1, 2: 1}
    assert qbinom(4, 2).coeffs == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}


def test_qbinom_out_of_range_is_zero():
    assert qbinom(3, -1).is_zero()
    assert qbinom(3, 4).is_zero()


@pytest.mark.parametrize("m", range(11))
def test_qbinom_symmetry_and_q1(m):
    from math import comb

    for k in range(m + 1):
        b = qbinom(m, k)
        assert b == qbinom(m, m - k)
        assert b.eval_at_one() == comb(m, k)
        assert all(c > 0 for c in b.coeffs.values())
        if k not in (0, m):
            assert b.degree() == k * (m - k)


@pytest.mark.parametrize("N", range(13))
def test_q_binomial_theorem(N):
    lhs = poch_finite(MultiSeries.gen("z"), 1, N)
    rhs = MultiSeries.zero()
    for t in range(N + 1):
        coeff = qbinom(N, t).shift(t * (t - 1) // 2).scale((-1) ** t)
        rhs = rhs + MultiSeries.from_qseries(coeff, (t, 0, 0))
    assert lhs == rhs


# ---------------------------------------------------------------------------
# ring laws (hypothesis)
# ---------------------------------------------------------------------------

qseries_st = st.builds(
    QSeries,
    st.dictionaries(
        st.integers(min_value=-8, max_value=20),
        st.integers(min_value=-9, max_value=9),
        max_size=6,
    ),
    st.one_of(st.none(), st.integers(min_value=3, max_value=25)),
)


@given(a=qseries_st, b=qseries_st, c=qseries_st)
@settings(max_examples=120)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert same_below_common_trunc((a * b) * c, a * (b * c))
    assert same_below_common_trunc((a + b) + c, a + (b + c))
    assert same_below_common_trunc(a * (b + c), a * b + a * c)


@given(a=qseries_st)
@settings(max_examples=60)
def test_additive_inverse(a):
    assert (a - a).first_mismatch(QSeries.zero()) is None


@given(
    c1=st.dictionaries(st.integers(-5, 12), st.integers(-9, 9), max_size=5),
    c2=st.dictionaries(st.integers(-5, 12), st.integers(-9, 9), max_size=5),
)
@settings(max_examples=80)
def test_mul_against_dense_convolution(c1, c2):
    # independent dense-list oracle for exact Laurent polynomial products
    a, b = QSeries(c1), QSeries(c2)
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
        return
    lo1, lo2 = min(a.coeffs), min(b.coeffs)
    d1 = [a.coeffs.get(lo1 + i, 0) for i in range(a.degree() - lo1 + 1)]
    d2 = [b.coeffs.get(lo2 + i, 0) for i in range(b.degree() - lo2 + 1)]
    dense = [0] * (len(d1) + len(d2) - 1)
    for i, v1 in enumerate(d1):
        for j, v2 in enumerate(d2):
            dense[i + j] += v1 * v2
    expected = {
        lo1 + lo2 + i: v for i, v in enumerate(dense) if v
    }
    assert (a * b).coeffs == expected
