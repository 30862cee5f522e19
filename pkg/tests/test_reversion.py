from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from porism_lab import (
    AlgebraKind,
    Duplex,
    Mat2,
    Reversion,
    apply,
    apply_oracle,
    as_reversion,
    closing_point,
    compose_chain,
    conjugate_pair_residual,
    proj_equal,
    quadric_point,
    reduce_three,
    reversion_matrix,
)
from porism_lab.algebra import conj, is_invertible, mul, norm_sq
from porism_lab.errors import (
    DegenerateError,
    DegeneratePoint,
    EmptyChain,
    NonInvertibleDenominator,
    NotAReversion,
    NotCollinear,
    NullDirection,
)
from porism_lab.quadric import CIRCLE, HYPERBOLA, collinear, normalized_cross
from strategies import BRANCHES, collinear_points, duplexes

C, D, G = AlgebraKind.COMPLEX, AlgebraKind.HYPERBOLIC, AlgebraKind.DUAL


def real(x, kind=C):
    return Duplex.real(x, kind)


HALF = Fraction(1, 2)


def test_reversion_matrix_examples():
    assert reversion_matrix(Reversion(real(0), CIRCLE)) == Mat2(real(1), real(0), real(0), real(-1))
    conj_hyp = next(q for q in BRANCHES if q.kind == D and q.sigma == -1)
    m = reversion_matrix(Reversion(Duplex(0, 2, D), conj_hyp))
    assert m == Mat2(real(-1, D), Duplex(0, 2, D), Duplex(0, -2, D), real(1, D))


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_reversion_matrix_is_traceless(q, data):
    p = data.draw(duplexes(q.kind))
    assert reversion_matrix(Reversion(p, q)).trace() == real(0, q.kind)


def test_apply_examples():
    x = Duplex(Fraction(3, 5), Fraction(4, 5))
    assert apply(Reversion(real(0), CIRCLE), x) == -x
    assert apply(Reversion(real(2), CIRCLE), real(1)) == real(-1)
    i = Duplex(0, 1)
    expected = Duplex(Fraction(4, 5), Fraction(3, 5))
    assert apply(Reversion(real(2), CIRCLE), i) == expected
    assert apply_oracle(Reversion(real(2), CIRCLE), i) == expected
    assert apply_oracle(Reversion(real(0), CIRCLE), real(1)) == real(-1)


def test_tangent_contact_is_fixed():
    x = Duplex(Fraction(3, 5), Fraction(4, 5))
    rev = Reversion(real(Fraction(5, 3)), CIRCLE)
    assert apply_oracle(rev, x) == x == apply(rev, x)


def test_degenerate_reversion_is_constant():
    rev = Reversion(Duplex(0, 1), CIRCLE)
    assert rev.degenerate
    assert apply(rev, real(1)) == Duplex(0, 1)


def _exact_quadric_point(q, data):
    t = data.draw(st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=40))
    return quadric_point(q, t, data.draw(st.sampled_from([1, -1])))


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_apply_matches_oracle_and_is_involutive(q, data):
    x = _exact_quadric_point(q, data)
    p = data.draw(duplexes(q.kind))
    assume(not q.contains(p))
    rev = Reversion(p, q)
    try:
        y = apply(rev, x)
    except NonInvertibleDenominator:
        return
    try:
        assert apply_oracle(rev, x) == y
    except NullDirection:
        pass
    try:
        assert apply(rev, y) == x
    except NonInvertibleDenominator:
        pass


def test_compose_chain_examples():
    p = Duplex(Fraction(1, 3), 2)
    assert proj_equal(Mat2.identity(), compose_chain([p, p], CIRCLE))
    with pytest.raises(EmptyChain):
        compose_chain([], CIRCLE)
    with pytest.raises(DegeneratePoint):
        compose_chain([real(1)], CIRCLE)


def test_compose_chain_velocity_product():
    a, b = Fraction(2, 5), Fraction(-1, 7)
    # first a, then the origin, then b
    got = compose_chain([real(a), real(0), real(b)], CIRCLE)
    assert got == Mat2(real(1 + a * b), real(-a - b), real(a + b), real(-1 - a * b))
    # origin first gives the other sign pattern
    got = compose_chain([real(0), real(a), real(b)], CIRCLE)
    assert got == Mat2(real(1 - a * b), real(a - b), real(b - a), real(a * b - 1))


@given(duplexes(), duplexes())
def test_compose_chain_pair_product(p, q):
    assume(p.kind == q.kind and norm_sq(p) != 1 and norm_sq(q) != 1)
    quad = next(b for b in BRANCHES if b.kind == p.kind and b.sigma == 1)
    one = real(1, p.kind)
    expected = Mat2(one - mul(q, conj(p)), q - p, conj(q) - conj(p), one - mul(conj(q), p))
    assert compose_chain([p, q], quad) == expected


def test_reduce_three_examples():
    p, q = real(Fraction(1, 3)), real(Fraction(-3, 4))
    assert reduce_three(p, q, q, CIRCLE) == p
    assert reduce_three(real(HALF), real(0), real(HALF), CIRCLE) == real(Fraction(4, 5))
    # with the origin last, absorption of the repeated pair wins
    assert reduce_three(real(HALF), real(HALF), real(0), CIRCLE) == real(0)
    with pytest.raises(NotCollinear):
        reduce_three(real(0), real(1), Duplex(0, 1), CIRCLE)


def test_reduce_three_sigma_minus_branch():
    conj_hyp = next(b for b in BRANCHES if b.kind == D and b.sigma == -1)
    pts = [Duplex(HALF, t, D) for t in (Fraction(1, 5), Fraction(-2, 3), Fraction(3, 7))]
    s = reduce_three(*pts, conj_hyp)
    assert collinear(pts[0], pts[1], s)
    assert proj_equal(compose_chain([pts[2], pts[1], pts[0]], conj_hyp), Reversion(s, conj_hyp).matrix())


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_collinear_triples_compose_to_a_reversion(q, data):
    a, b, c = data.draw(collinear_points(q, 3))
    try:
        form = as_reversion(compose_chain([a, b, c], q), sigma=q.sigma)
    except DegenerateError:
        return
    assert form.sigma == q.sigma
    assert collinear(a, b, form.point) and collinear(b, c, form.point)


@given(duplexes(C), duplexes(C), duplexes(C))
def test_non_collinear_triples_are_not_reversions(a, b, c):
    assume(abs(normalized_cross(a, b, c)) >= 0.01)
    assume(not any(CIRCLE.contains(p) for p in (a, b, c)))
    with pytest.raises((NotAReversion, DegenerateError)):
        as_reversion(compose_chain([a, b, c], CIRCLE))


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_ternary_axioms(q, data):
    a, b, c, d, e = data.draw(collinear_points(q, 5))

    def r3(x, y, z):
        return reduce_three(x, y, z, q)

    try:
        assert r3(a, b, b) == a == r3(b, b, a)
        assert r3(a, b, c) == r3(c, b, a)
        left = r3(r3(a, b, c), d, e)
        middle = r3(a, r3(b, c, d), e)
        right = r3(a, b, r3(c, d, e))
    except DegenerateError:
        return
    assert left == middle == right


@pytest.mark.parametrize("kind", [C, D, G])
@given(data=st.data())
def test_closed_form_regression(kind, data):
    """s = (p - q + r - p conj(q) r) / (1 - conj(p) q - conj(q) r + r conj(p))."""
    q_branch = next(b for b in BRANCHES if b.kind == kind and b.sigma == 1)
    p, q, r = data.draw(collinear_points(q_branch, 3))
    one = real(1, kind)
    num = p - q + r - mul(mul(p, conj(q)), r)
    den = one - mul(conj(p), q) - mul(conj(q), r) + mul(r, conj(p))
    assume(is_invertible(den))
    try:
        s = reduce_three(r, q, p, q_branch)
    except DegenerateError:
        return
    assert s == num / den


def test_conjugate_pair_examples():
    p = Duplex(Fraction(1, 4), Fraction(2, 3))
    r = Duplex(Fraction(-1, 2), 1)
    assert conjugate_pair_residual(p, p, r, r) == real(0)
    p, q, r = real(0), real(HALF), real(Fraction(-3, 10))
    s = reduce_three(p, q, r, CIRCLE)
    assert conjugate_pair_residual(p, q, r, s) == real(0)
    off = conjugate_pair_residual(p, q, r, s + real(Fraction(1, 1000)))
    assert abs(off.re) > 1e-4


@given(collinear_points(CIRCLE, 3))
def test_conjugate_pair_vanishes_on_constructed_quadruples(pts):
    p, q, r = pts
    try:
        s = reduce_three(p, q, r, CIRCLE)
        res = conjugate_pair_residual(p, q, r, s)
    except DegenerateError:
        return
    assert res == real(0)


def test_closing_point():
    pts = [real(Fraction(1, 3)), real(HALF), real(Fraction(-2, 7))]
    s = closing_point(pts, CIRCLE)
    assert proj_equal(Mat2.identity(), compose_chain(pts + [s], CIRCLE))
    assert closing_point([real(HALF)], CIRCLE) == real(HALF)
    with pytest.raises(ValueError):
        closing_point(pts[:2], CIRCLE)


def test_float_reduce_matches_exact():
    exact = [Duplex(Fraction(1, 4), Fraction(1, 2), D), Duplex(Fraction(3, 4), Fraction(3, 2), D),
             Duplex(Fraction(-1, 2), -1, D)]
    floats = [Duplex(float(p.re), float(p.im), D) for p in exact]
    s = reduce_three(*exact, HYPERBOLA)
    sf = reduce_three(*floats, HYPERBOLA)
    assert sf.close(Duplex(float(s.re), float(s.im), D), 1e-12)
