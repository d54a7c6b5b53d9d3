import numpy as np
import pytest

from c2trig import orthogonality as orth
from c2trig.recurrences import gen_cplus, gen_poly, row_labels
from c2trig.trig import CMINUS, CPLUS, SMINUS, SPLUS, Family, Label, eval_trig

from .oracles import triangle_integral_exact, triangle_product_integral

FAMILIES = list(Family)


def test_rule_weights():
    rule = orth.mapped_gauss_rule()
    assert len(rule) == 64 * 64
    assert abs(rule.w.sum() - 0.5) < 1e-14
    assert np.all((rule.y >= 0) & (rule.y <= rule.x) & (rule.x <= 1))
    with pytest.raises(ValueError):
        orth.mapped_gauss_rule(0)


def test_integrate_examples():
    assert orth.integrate_F(lambda x, y: 1.0) == pytest.approx(0.5, abs=1e-14)
    c21 = Label(CPLUS, 2, 1)
    assert orth.integrate_F(lambda x, y: (4 * eval_trig(c21, x, y)) ** 2) == pytest.approx(4.0, abs=1e-12)
    c00 = Label(CPLUS, 0, 0)
    assert orth.integrate_F(lambda x, y: (0.5 * eval_trig(c00, x, y)) ** 2) == pytest.approx(0.5, abs=1e-14)


@pytest.mark.parametrize("family,a,b", [
    (CPLUS, (2, 1), (2, 1)), (CPLUS, (2, 1), (3, 0)), (SMINUS, (3, 1), (2, 1)),
    (CMINUS, (3, 0), (3, 0)), (SPLUS, (2, 2), (2, 2)), (SMINUS, (3, 2), (3, 2)), (CMINUS, (2, 1), (4, 1)),
])
def test_inner_product_against_exact_integral(family, a, b):
    la, lb = Label(family, *a), Label(family, *b)
    ga = float(orth.expected_norm(la))
    gb = float(orth.expected_norm(lb))
    exact = triangle_product_integral(family.value, a, b) * ga * gb
    assert orth.inner_product(family, la, lb) == pytest.approx(exact, abs=1e-12)


def test_exact_symbolic_spot_check():
    import sympy as sp

    val = triangle_integral_exact(lambda x, y: (4 * (sp.cos(2 * sp.pi * x) * sp.cos(sp.pi * y)
                                                     + sp.cos(sp.pi * x) * sp.cos(2 * sp.pi * y))) ** 2)
    assert val == 4
    assert triangle_product_integral("cplus", (2, 1), (2, 1)) * 16 == pytest.approx(4.0, abs=1e-14)


def test_inner_product_rejects_mixed_labels():
    with pytest.raises(ValueError):
        orth.inner_product(CPLUS, Label(CPLUS, 1, 0), Label(CMINUS, 1, 0))


@pytest.mark.parametrize("family", FAMILIES)
def test_gram_matrix(family):
    labels, gram = orth.gram_matrix(family, 6)
    want = np.diag([orth.expected_norm(l) for l in labels])
    assert np.max(np.abs(gram - want)) < 1e-9


def test_gram_empty():
    with pytest.raises(ValueError):
        orth.gram_matrix(SMINUS, 1)


def test_weight_reciprocals(rng):
    x, y = orth.sample_interior(200, rng, margin=0.02)
    Xv, Yv = orth.X_of(x, y), orth.Y_of(x, y)
    w = {f: orth.weight(f, Xv, Yv) for f in FAMILIES}
    assert np.allclose(w[SMINUS] * w[CPLUS], np.pi**-4, rtol=1e-12)
    assert np.allclose(w[CMINUS] * w[SPLUS], np.pi**-4, rtol=1e-12)


def test_weighted_inner_product_on_image():
    p = gen_cplus(2, 1)
    assert orth.weighted_inner_product_XY(CPLUS, p, p) == pytest.approx(4.0, abs=1e-6)


@pytest.mark.parametrize("family", FAMILIES)
def test_weighted_inner_products_match(family):
    labs = [(l, m) for l in range(5) for m in row_labels(family, l)]
    for a in labs[:4]:
        for b in labs[:4]:
            val = orth.weighted_inner_product_XY(family, gen_poly(family, *a), gen_poly(family, *b))
            want = orth.expected_norm(Label(family, *a)) if a == b else 0.0
            assert abs(val - want) < 1e-6


def test_jacobian_factorization(rng):
    x, y = orth.sample_interior(300, rng)
    uv = np.pi**2 * np.abs(orth.U_of(x, y) * orth.V_of(x, y))
    w = np.pi**2 * np.abs(orth.W_of(x, y))
    assert np.max(np.abs(uv - w) / w) < 1e-10


def test_jacobian_on_image_points(rng):
    # the (X, Y) route loses digits near the boundary, so stay a little inside
    x, y = orth.sample_interior(300, rng, margin=0.02)
    jac = orth.jacobian(orth.X_of(x, y), orth.Y_of(x, y))
    w = np.pi**2 * np.abs(orth.W_of(x, y))
    assert np.max(np.abs(jac - w) / w) < 1e-10


def test_jacobian_example():
    x, y = 0.6, 0.2
    want = np.pi**2 * abs(4 * eval_trig(Label(SMINUS, 2, 1), x, y))
    assert orth.jacobian(orth.X_of(x, y), orth.Y_of(x, y)) == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("XY", [(4.0, 4.0), (-4.0, 4.0), (0.0, -4.0), (2.0, 1.0), (-1.0, -2.0)])
def test_jacobian_zero_on_boundary(XY):
    assert orth.jacobian(*XY) == pytest.approx(0.0, abs=1e-6)


def test_squares_of_denominators(rng):
    x, y = rng.uniform(0, 1, (2, 100))
    Xv, Yv = orth.X_of(x, y), orth.Y_of(x, y)
    assert np.allclose(orth.U_SQUARED.eval(Xv, Yv), orth.U_of(x, y) ** 2, atol=1e-12)
    assert np.allclose(orth.V_SQUARED.eval(Xv, Yv), orth.V_of(x, y) ** 2, atol=1e-11)
    assert np.allclose(orth.W_SQUARED.eval(Xv, Yv), orth.W_of(x, y) ** 2, atol=1e-10)


def test_w_squared_exact():
    assert orth.w_squared_from_products() == orth.W_SQUARED


def test_region_contains_image(rng):
    x, y = rng.uniform(0, 1, (2, 2000))
    x, y = np.maximum(x, y), np.minimum(x, y)
    Xv, Yv = orth.X_of(x, y), orth.Y_of(x, y)
    assert orth.in_region(Xv, Yv).all()
    assert orth.sign_conditions(Xv, Yv).all()
    # vertices and edges of F
    t = np.linspace(0, 1, 101)
    for ex, ey in ((t, 0 * t), (1 + 0 * t, t), (t, t)):
        assert orth.in_region(orth.X_of(ex, ey), orth.Y_of(ex, ey)).all()


@pytest.mark.parametrize("XY", [(0.0, -5.0), (6.0, 8.5), (-6.0, 9.0), (3.0, 3.0), (0.0, 1.0)])
def test_points_outside(XY):
    assert not orth.in_region(*XY)
    with pytest.raises(orth.RegionError):
        orth.jacobian(*XY)


@pytest.mark.parametrize("XY", [(0.0, -5.0), (6.0, 8.5), (-6.0, 9.0)])
def test_sign_conditions_alone_admit_spurious_points(XY):
    assert orth.sign_conditions(*XY) and not orth.in_region(*XY)


def test_membership_agrees_with_sign_conditions_on_bounded_part(rng):
    Xv, Yv = rng.uniform(-4, 4, (2, 5000)), None
    Yv = rng.uniform(-4, 4, 5000)
    inside = orth.in_region(Xv, Yv)
    signs = orth.sign_conditions(Xv, Yv) & (Yv >= 2 * np.abs(Xv) - 4 - 1e-12)
    assert np.array_equal(inside, signs)


@pytest.mark.parametrize("family", FAMILIES)
def test_weight_rejects_boundary(family):
    with pytest.raises(orth.RegionError):
        orth.weight(family, 2.0, 1.0)
    with pytest.raises(orth.RegionError):
        orth.weight(family, 0.0, 5.0)


def test_denominators_nonzero(interior_points):
    x, y = interior_points
    for fn in (orth.U_of, orth.V_of, orth.W_of):
        assert np.all(np.abs(fn(x, y)) > 0)


def test_sample_interior_margin(rng):
    x, y = orth.sample_interior(500, rng, margin=0.05)
    assert len(x) == 500
    assert orth.boundary_distance(x, y).min() > 0.05
