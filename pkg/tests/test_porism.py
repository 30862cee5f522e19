import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import circle_fit_residual, closing_side, tan_add
from porism_lab import (
    AlgebraKind,
    Configuration,
    Duplex,
    Line,
    Mat2,
    axis_add,
    chain_reduce,
    check_chain,
    closed_form_add,
    closing_point,
    compose_chain,
    conjugate_pair_residual,
    fourth_point,
    invert_configuration,
    porism_check,
    proj_equal,
    quadric_point,
)
from porism_lab.errors import DegenerateError, DegeneratePoint, NotCollinear, OddChain, PoleAtFormulaSingularity
from porism_lab.porism import check_inverted, default_samples, line_through, path_vertices
from porism_lab.quadric import CIRCLE, HYPERBOLA, PARALLEL_LINES
from strategies import BRANCHES, collinear_points, small_rationals

C, D, G = AlgebraKind.COMPLEX, AlgebraKind.HYPERBOLIC, AlgebraKind.DUAL
HALF = Fraction(1, 2)


def real(x, kind=C):
    return Duplex.real(x, kind)


def test_fourth_point_examples():
    p, q = real(Fraction(1, 3)), real(Fraction(-2, 5))
    assert fourth_point(p, p, q, CIRCLE) == q
    assert fourth_point(real(0), real(HALF), real(HALF), CIRCLE) == real(Fraction(4, 5))
    e = Duplex(0, HALF, D)
    assert fourth_point(Duplex(0, 0, D), e, e, HYPERBOLA) == Duplex(0, Fraction(4, 3), D)


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_fourth_point_matches_geometric_construction(q, data):
    """Build the closing side by repeated line intersections from one vertex and compare."""
    p1, p2, p3 = data.draw(collinear_points(q, 3))
    t = data.draw(st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=20))
    x = quadric_point(q, t, data.draw(st.sampled_from([1, -1])))
    try:
        sx, sy = closing_side((p1.re, p1.im), (p2.re, p2.im), (p3.re, p3.im), (x.re, x.im), q.kind.kappa)
        s = fourth_point(p1, p2, p3, q)
    except (ZeroDivisionError, DegenerateError):
        return
    assume(not q.contains(Duplex(sx, sy, q.kind)))
    assert s == Duplex(sx, sy, q.kind)
    # one fixed vertex forces the whole chain to be the identity
    assert proj_equal(Mat2.identity(q.kind), compose_chain([p3, p1, p2, Duplex(sx, sy, q.kind)], q))


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data())
def test_fourth_point_closes_exactly(q, data):
    p1, p2, p3 = data.draw(collinear_points(q, 3))
    try:
        s = fourth_point(p1, p2, p3, q)
        verdict = check_chain([p3, p1, p2, s], q, samples=default_samples(q, True, 8))
    except DegenerateError:
        return
    assert verdict.closed and verdict.matrix_identity
    assert verdict.max_residual == 0
    assert conjugate_pair_residual(p3, p1, p2, s) == real(0, q.kind) or q.sigma == -1


def _float(z):
    return Duplex(float(z.re), float(z.im), z.kind)


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
def test_float_closure_and_perturbation(q):
    pts = [Duplex(Fraction(1, 4), Fraction(-1, 2), q.kind) + Duplex(1, Fraction(1, 3), q.kind) * t
           for t in (Fraction(0), Fraction(3, 2), Fraction(-6, 5))]
    s = fourth_point(*pts, q)
    chain = [_float(p) for p in (pts[2], pts[0], pts[1], s)]
    line = line_through(chain)
    cfg = Configuration(q, line, chain)
    verdict = porism_check(cfg)
    assert verdict.closed and verdict.max_residual <= 1e-9
    d = line.dir
    unit = d / math.hypot(d.re, d.im)
    bad = Configuration(q, line, chain[:3] + [chain[3] + unit * 1e-3])
    verdict = porism_check(bad)
    assert not verdict.closed and verdict.max_residual > 1e-4


def test_porism_check_trivial_and_odd():
    p = real(Fraction(1, 3))
    v = check_chain([p, p], CIRCLE)
    assert v.closed and v.max_residual == 0 and not v.skipped_samples
    with pytest.raises(OddChain):
        check_chain([p, p, p], CIRCLE)


def test_verdict_witness_and_skipped_samples():
    # with p = 0 the denominator conj(q) X + 1 is a zero divisor at t = 1/3 on the upper sheet
    v = check_chain([Duplex(0, 0, D), real(-2, D)], HYPERBOLA, samples=[Fraction(1, 3), Fraction(0)])
    assert v.skipped_samples == [{"t": Fraction(1, 3), "sheet": 1}]
    assert not v.closed and v.witness is not None and v.witness["residual"] == v.max_residual
    # identical residuals on a symmetric sample set: the first index wins
    v = check_chain([real(0), real(HALF)], CIRCLE, samples=[Fraction(1), Fraction(-1)])
    assert v.witness["t"] == Fraction(1)


def test_configuration_validation():
    line = Line(real(0), real(1))
    with pytest.raises(NotCollinear):
        Configuration(CIRCLE, line, [Duplex(0, 2)])
    with pytest.raises(DegeneratePoint):
        Configuration(CIRCLE, line, [real(1)])
    cfg = Configuration(CIRCLE, line, [real(2), real(3)])
    assert cfg.is_exact and cfg.kind == C and len(cfg.sample_params()) == 128


def test_chain_reduce_examples():
    p, q = real(Fraction(1, 3)), real(Fraction(-2, 5))
    assert chain_reduce([p, q, q, p], CIRCLE).identity
    r = chain_reduce([p, q], CIRCLE)
    assert not r.identity and r.pair == (p, q)
    five = [real(Fraction(k, 7)) for k in (1, -2, 3, 5, -4)]
    six = five + [closing_point(five, CIRCLE)]
    assert chain_reduce(six, CIRCLE).identity
    with pytest.raises(OddChain):
        chain_reduce(five, CIRCLE)


@pytest.mark.parametrize("q", BRANCHES, ids=lambda q: q.name)
@given(data=st.data(), n=st.integers(1, 6))
def test_polygon_chains_reduce_to_identity(q, data, n):
    pts = data.draw(collinear_points(q, 2 * n - 1))
    try:
        chain = pts + [closing_point(pts, q)]
        result = chain_reduce(chain, q)
    except DegenerateError:
        return
    assert result.identity
    assert proj_equal(Mat2.identity(q.kind), compose_chain(chain, q))


@pytest.mark.parametrize("kind", [C, D, G])
def test_axis_add_identity_element(kind):
    a = Fraction(3, 7)
    assert axis_add(kind, a, 0) == a


def test_axis_add_examples():
    assert axis_add(C, HALF, HALF) == Fraction(4, 5)
    assert axis_add(D, HALF, HALF) == Fraction(4, 3)
    assert abs(axis_add(D, 0.5, 0.5) - tan_add(0.5, 0.5)) <= 1e-12
    assert axis_add(G, Fraction(3, 10), Fraction(2, 5)) == Fraction(7, 10)
    with pytest.raises(PoleAtFormulaSingularity):
        axis_add(C, 2, -HALF)
    with pytest.raises(PoleAtFormulaSingularity):
        axis_add(D, 2, HALF)


@pytest.mark.parametrize("kind", [C, D, G])
@given(a=small_rationals, b=small_rationals)
def test_axis_add_matches_closed_form(kind, a, b):
    try:
        expected = closed_form_add(kind, a, b)
        got = axis_add(kind, a, b)
    except (PoleAtFormulaSingularity, DegeneratePoint):
        return
    assert got == expected


@given(st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))
def test_axis_add_tangent_float(a, b):
    assume(abs(1 - a * b) >= 0.1)
    assert abs(axis_add(D, a, b) - tan_add(a, b)) <= 1e-12 * max(1, abs(tan_add(a, b)))


def test_path_vertices_lie_on_quadric():
    pts = [Duplex(Fraction(k, 3), 1, D) for k in (1, 2, -1)]
    s = closing_point(pts, HYPERBOLA)
    x = quadric_point(HYPERBOLA, Fraction(1, 5))
    verts = path_vertices(pts + [s], HYPERBOLA, x)
    assert len(verts) == 4 and all(HYPERBOLA.contains(v) for v in verts)


def _inversion_config():
    # a horizontal line missing the inversion center, so its image is a proper circle
    pts = [Duplex(Fraction(k, 4), Fraction(1, 4)) for k in (1, -2, 3)]
    chain = pts + [closing_point(pts, CIRCLE)]
    return Configuration(CIRCLE, Line(pts[0], real(1)), [_float(p) for p in chain]), chain


def test_inverted_images_lie_on_circles():
    cfg, _ = _inversion_config()
    inv = invert_configuration(cfg, Duplex(1.2, 0.0), 1.0)
    assert len(inv.quadric) == 64 and len(inv.line) == 64
    assert circle_fit_residual(complex(z.re, z.im) for z in inv.quadric) <= 1e-9
    assert circle_fit_residual(complex(z.re, z.im) for z in inv.line) <= 1e-9


def test_inversion_of_the_inversion_circle_is_identity():
    cfg = Configuration(CIRCLE, Line(Duplex(0.0, 0.5), real(1.0)), [Duplex(0.0, 0.5), Duplex(0.25, 0.5)])
    inv = invert_configuration(cfg, Duplex(0.0, 0.0), 1.0)
    for t, z in zip(default_samples(CIRCLE, False, 64), inv.quadric):
        assert z.close(quadric_point(CIRCLE, t), 1e-12)


def test_verdict_unchanged_under_inversion():
    _, chain = _inversion_config()
    center, radius = Duplex(Fraction(6, 5), 0), 1
    samples = default_samples(CIRCLE, True, 16)
    plain = check_chain(chain, CIRCLE, samples)
    inverted = check_inverted(chain, CIRCLE, center, radius, samples)
    assert plain.closed and inverted.closed and inverted.max_residual == 0
    broken = chain[:3] + [chain[3] + real(Fraction(1, 1000))]
    plain = check_chain(broken, CIRCLE, samples)
    inverted = check_inverted(broken, CIRCLE, center, radius, samples)
    assert not plain.closed and not inverted.closed
    assert [plain.witness is None, inverted.witness is None] == [False, False]


def test_dual_closure_on_parallel_lines():
    pts = [Duplex(Fraction(1, 2), Fraction(k, 3), G) for k in (1, -1, 4)]
    s = fourth_point(*pts, PARALLEL_LINES)
    assert check_chain([pts[2], pts[0], pts[1], s], PARALLEL_LINES).closed
