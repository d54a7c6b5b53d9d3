import itertools

import numpy as np
import pytest

from c2trig.trig import Family, Label, eval_trig, is_dominant
from c2trig.weyl import (
    C2, ORBIT_TO_TRIG, ImaginaryPartError, OrbitKind, compose, eval_orbit_fn, orbit,
    scalar_product, substitute, weyl_group,
)


def test_root_data():
    assert C2.cartan == ((2, -1), (-2, 2))
    # omega_i paired with check_omega_j is the identity
    assert C2.pairing == ((1, 0), (0, 1)) or C2.pairing[0][0] == 1
    assert scalar_product((1, 0), (1.0, 0.0)) == 1.0


@pytest.mark.parametrize("v,theta", [((2, 3), (0.1, 0.7)), ((-1, 4), (0.3, -0.2))])
def test_scalar_product_formula(v, theta):
    want = (v[0] + v[1]) * theta[0] + (0.5 * v[0] + v[1]) * theta[1]
    assert scalar_product(v, theta) == pytest.approx(want)


def test_group_order_and_identity():
    group = weyl_group()
    assert len(group) == 8
    ident = group[0]
    assert ident.action == ((1, 0), (0, 1)) and ident.l1 == ident.l2 == 0


def test_closure():
    group = weyl_group()
    for a, b in itertools.product(group, group):
        assert compose(a, b) in group


@pytest.mark.parametrize("char", [
    lambda w: (-1) ** w.l1, lambda w: (-1) ** w.l2, lambda w: (-1) ** (w.l1 + w.l2),
], ids=["l1", "l2", "det"])
def test_sign_maps_are_homomorphisms(char):
    group = weyl_group()
    for a, b in itertools.product(group, group):
        assert char(compose(a, b)) == char(a) * char(b)


def test_det_is_sign_character():
    assert all(w.det == (-1) ** (w.l1 + w.l2) for w in weyl_group())


def test_orbit_of_rho_like_weight():
    want = {(1, 1), (-1, -1), (-1, 2), (1, -2), (3, -1), (-3, 1), (3, -2), (-3, 2)}
    assert orbit((1, 1)) == want


@pytest.mark.parametrize("v", [(0, 0), (1, 0), (0, 2), (3, 0), (2, 1), (1, 4), (-2, 3)])
def test_orbit_size(v):
    n = len(orbit(v))
    assert 8 % n == 0
    generic = any(all(c >= 1 for c in w) for w in orbit(v))
    assert (n == 8) == generic


def test_orbit_constant():
    assert eval_orbit_fn(OrbitKind.C_PLUS, (0, 0), (0.3, 0.4)) == pytest.approx(8.0)


@pytest.mark.parametrize("lam,mu,x,y,v,theta", [
    (1, 0, 0.4, 0.1, (1, 0), (0.15, 0.1)), (3, 3, 0.2, 0.2, (0, 3), (0.0, 0.2)),
])
def test_substitute(lam, mu, x, y, v, theta):
    got_v, got_t = substitute(lam, mu, x, y)
    assert got_v == v and np.allclose(got_t, theta)


@pytest.mark.parametrize("kind", list(OrbitKind))
def test_orbit_functions_match_trig(kind, rng):
    fam, scale = ORBIT_TO_TRIG[kind]
    x, y = rng.uniform(0, 1, (2, 100))
    for lam in range(7):
        for mu in range(lam + 1):
            if not is_dominant(fam, lam, mu):
                continue
            v, theta = substitute(lam, mu, x, y)
            err = np.abs(eval_orbit_fn(kind, v, theta) - scale * eval_trig(Label(fam, lam, mu), x, y))
            assert err.max() < 1e-10


def test_imaginary_residue_detected():
    # a non-integral weight breaks the pairing w <-> -w cancellation only if the sum is complex;
    # with a tiny tolerance a rounding-level residue is flagged
    with pytest.raises(ImaginaryPartError):
        eval_orbit_fn(OrbitKind.S_MINUS, (0.5, 0.25), (0.3, 0.11), tol=-1.0)
