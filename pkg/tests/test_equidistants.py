import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from ovals import random_oval

from ovalkit import (
    DegenerateRoot,
    EquidistantSupport,
    FourierSupport,
    cusp_parameters,
    curve_point,
    equidistant_length,
    equidistant_point,
    equidistant_report,
    evaluate,
    make_cusp_family,
    oriented_area,
    polyline_length,
    polyline_signed_area,
    psi_functional,
)
from ovalkit.equidistants import (
    equidistant_xy,
    predicted_cusp_angles,
    psi_integral,
    sample_equidistant,
)
from ovalkit.geometry import support_curve_xy
from ovalkit.inequalities import area_closed_form, length_closed_form

log = logging.getLogger(__name__)
seeds = st.integers(0, 2**32 - 1)
PI = math.pi


@pytest.mark.parametrize("theta", [0.0, 0.9, 2.2, 4.0])
def test_endpoints_reproduce_the_oval(stability_example, theta):
    p0 = equidistant_point(EquidistantSupport(stability_example, 0.0), theta)
    p1 = equidistant_point(EquidistantSupport(stability_example, 1.0), theta)
    assert (p0.x, p0.y) == pytest.approx(tuple(vars(curve_point(stability_example, theta + PI)).values()), abs=1e-12)
    assert (p1.x, p1.y) == pytest.approx(tuple(vars(curve_point(stability_example, theta)).values()), abs=1e-12)


def test_centrally_symmetric_caustic_is_a_point():
    thetas = np.linspace(0, 2 * PI, 50)
    xy = equidistant_xy(EquidistantSupport(FourierSupport(5.0, ((2, 1.0, 0.0),)), 0.5), thetas)
    assert np.allclose(xy, 0.0, atol=1e-13)
    # a translated copy collapses to the translation vector
    shifted = FourierSupport(5.0, ((1, 0.7, -0.2), (2, 1.0, 0.0)))
    xy = equidistant_xy(EquidistantSupport(shifted, 0.5), thetas)
    assert np.allclose(xy, [0.7, -0.2], atol=1e-13)


def test_caustic_point_is_chord_midpoint(m3):
    pt = equidistant_point(EquidistantSupport(m3, 0.5), 0.0)
    assert (pt.x, pt.y) == pytest.approx((1.0, 0.0), abs=1e-13)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, lam=st.floats(-2, 3))
def test_chord_form_matches_support_form(seed, lam):
    support = random_oval(np.random.default_rng(seed))
    eq = EquidistantSupport(support, lam)
    thetas = np.linspace(0, 2 * PI, 97)
    a = equidistant_xy(eq, thetas)
    b = support_curve_xy(eq.series, thetas)
    scale = support.a0 + sum(math.hypot(x, y) for _, x, y in support.terms)
    assert np.max(np.abs(a - b)) <= 1e-12 * scale * (abs(lam) + abs(1 - lam))


def test_psi_examples(m3, ellipse_like):
    assert psi_functional(m3) == pytest.approx(125 * PI, rel=1e-14)
    assert psi_functional(m3) == pytest.approx(
        length_closed_form(m3) ** 2 / (2 * PI) - area_closed_form(m3), rel=1e-14)
    assert psi_functional(ellipse_like) == pytest.approx(23.5 * PI, rel=1e-14)
    assert psi_integral(ellipse_like) == pytest.approx(23.5 * PI, rel=1e-12)
    assert psi_functional(FourierSupport(3.0)) == pytest.approx(9 * PI, rel=1e-15)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_psi_closed_form_matches_quadrature(seed):
    support = random_oval(np.random.default_rng(seed))
    assert psi_functional(support) == pytest.approx(psi_integral(support), rel=1e-11)


def test_oriented_area_examples(m3, stability_example, ellipse_like):
    assert oriented_area(EquidistantSupport(m3, 0.5)) == pytest.approx(-2 * PI, rel=1e-12)
    assert oriented_area(EquidistantSupport(stability_example, 0.5)) == pytest.approx(-2 * PI / 9, rel=1e-12)
    assert oriented_area(EquidistantSupport(ellipse_like, 0.5)) == 0.0
    for lam in (0.0, 1.0):
        assert oriented_area(EquidistantSupport(stability_example, lam)) == area_closed_form(stability_example)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, lam=st.floats(-3, 3))
def test_oriented_area_symmetric_in_lambda(seed, lam):
    support = random_oval(np.random.default_rng(seed))
    a = oriented_area(EquidistantSupport(support, lam))
    b = oriented_area(EquidistantSupport(support, 1 - lam))
    assert a == pytest.approx(b, rel=1e-9, abs=1e-9 * area_closed_form(support))


@settings(max_examples=25, deadline=None)
@given(seed=seeds, lam=st.sampled_from([0.1, 0.3, 0.5, 0.7, 0.9]))
def test_formula_matches_shoelace(seed, lam):
    support = random_oval(np.random.default_rng(seed))
    eq = EquidistantSupport(support, lam)
    shoelace = polyline_signed_area(sample_equidistant(eq, 100_000))
    if eq.is_wigner:
        shoelace /= 2
    assert oriented_area(eq) == pytest.approx(shoelace, rel=1e-6, abs=1e-12 * support.a0 ** 2)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_wigner_caustic_reversed_orientation(seed):
    support = random_oval(np.random.default_rng(seed))
    assert oriented_area(EquidistantSupport(support, 0.5)) <= 1e-9 * length_closed_form(support) ** 2


def test_cusps_of_m7(m7):
    found = cusp_parameters(EquidistantSupport(m7, 0.5))
    assert found == pytest.approx([(PI + 2 * k * PI) / 14 for k in range(7)], abs=1e-12)


def test_cusps_of_m3(m3):
    assert cusp_parameters(EquidistantSupport(m3, 0.5)) == pytest.approx([PI / 6, PI / 2, 5 * PI / 6], abs=1e-12)


def test_circle_caustic_is_degenerate():
    with pytest.raises(DegenerateRoot):
        cusp_parameters(EquidistantSupport(FourierSupport(2.0), 0.5))
    rep = equidistant_report(FourierSupport(2.0), 0.5)
    assert rep.degenerate and rep.cusp_thetas == () and rep.oriented_area == 0.0


def _brute_force_cusps(support, lam, span, n=400_000):
    """Sign changes of lam rho(t) - (1 - lam) rho(t + pi) evaluated pointwise."""
    t = np.linspace(0, span, n + 1)
    rho = np.array([evaluate(support, x).rho for x in t[:: n // 4000]])  # spot check
    assert np.all(rho > 0)
    p, ddp = support.values(t, (0, 2))
    q, ddq = support.values(t + PI, (0, 2))
    g = lam * (p + ddp) - (1 - lam) * (q + ddq)
    k = np.flatnonzero(g[:-1] * g[1:] < 0)
    return t[k]


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("lam", [0.5, 0.4, 0.2, 1.7])
def test_cusps_match_brute_force(seed, lam):
    support = random_oval(np.random.default_rng(seed))
    eq = EquidistantSupport(support, lam)
    span = PI if eq.is_wigner else 2 * PI
    try:
        found = cusp_parameters(eq)
    except DegenerateRoot:
        assert all(n == 1 for n, _, _ in support.odd_part().terms)
        pytest.skip("degenerate caustic")
    oracle = _brute_force_cusps(support, lam, span)
    assert len(found) == len(oracle)
    assert np.allclose(found, oracle, atol=span / 400_000 + 1e-12)
    g = eq.cusp_condition
    assert all(abs(g(t)) <= 1e-10 * support.a0 for t in found)


def test_cusp_parity_statistics():
    rng = np.random.default_rng(7)
    odd_fail = even_fail = 0
    for _ in range(200):
        support = random_oval(rng)
        try:
            n_half = len(cusp_parameters(EquidistantSupport(support, 0.5)))
            if n_half % 2 == 0 or n_half < 3:
                odd_fail += 1
        except DegenerateRoot:
            pass
        n_other = len(cusp_parameters(EquidistantSupport(support, 0.37)))
        if n_other % 2:
            even_fail += 1
    if odd_fail or even_fail:
        log.warning("non-generic cusp counts: %d at 1/2, %d at 0.37", odd_fail, even_fail)
    assert odd_fail + even_fail <= 4


def test_length_of_m3_caustic(m3):
    eq = EquidistantSupport(m3, 0.5)
    assert equidistant_length(eq) == pytest.approx(16.0, rel=1e-9)
    oracle = polyline_length(sample_equidistant(eq, 100_000, single_cover=True))
    assert equidistant_length(eq) == pytest.approx(oracle, rel=1e-6)


def test_length_of_circle_caustic():
    assert equidistant_length(EquidistantSupport(FourierSupport(4.0), 0.5)) == 0.0


@pytest.mark.parametrize("lam", [0.2, 0.4, 1.3, -0.6])
def test_length_matches_polyline(stability_example, lam):
    eq = EquidistantSupport(stability_example, lam)
    oracle = polyline_length(sample_equidistant(eq, 200_000))
    assert equidistant_length(eq, 20_000) == pytest.approx(oracle, rel=1e-6)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, lam=st.floats(-3, 4))
def test_length_bound(seed, lam):
    support = random_oval(np.random.default_rng(seed))
    eq = EquidistantSupport(support, lam)
    assert equidistant_length(eq) <= (abs(lam) + abs(1 - lam)) * length_closed_form(support) + 1e-9
    if lam == 0.5:
        assert 2 * equidistant_length(eq) <= length_closed_form(support) + 1e-9


def test_cusp_family_examples():
    assert make_cusp_family(1) == FourierSupport(11.0, ((3, 1.0, 0.0),))
    assert make_cusp_family(3) == FourierSupport(51.0, ((7, 1.0, 0.0),))
    with pytest.raises(ValueError):
        make_cusp_family(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_cusp_family_has_2n_plus_1_cusps(n):
    support = make_cusp_family(n)
    assert support.min_rho > 0
    found = cusp_parameters(EquidistantSupport(support, 0.5))
    assert len(found) == 2 * n + 1
    assert found == pytest.approx(predicted_cusp_angles(n), abs=1e-10)
