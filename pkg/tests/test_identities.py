from fractions import Fraction

import numpy as np
import pytest

from c2trig import identities as ids
from c2trig.trig import CPLUS, Label, eval_trig

ERRATA = {"A1-cminus-lam", "A1-cminus-lam-2", "A1-cminus-mu-lamp", "A1-cminus-mu-lamp-2"}
ALL_IDS = [i.id for i in ids.catalog()]
SOUND = [i for i in ALL_IDS if i not in ERRATA]
SPECIAL = [i.id for i in ids.catalog() if not i.is_generic]


def test_catalog_shape():
    cat = ids.catalog()
    assert len(cat) == 48
    assert len(set(ALL_IDS)) == 48
    assert sum(i.is_generic for i in cat) == 10
    for needed in ("v1", "v2", "A1-cplus-diag", "A1-sminus-char"):
        assert needed in ALL_IDS
    assert {i for i in ALL_IDS if ids.get(i).corrected_rhs} == ERRATA
    assert all(ids.get(i).note for i in ERRATA)


def test_unknown_id():
    with pytest.raises(KeyError):
        ids.get("nope")


def test_v1_example(plane_points):
    r = ids.verify_identity("v1", (3, 1, 2, 1), plane_points)
    assert r.passed and r.residual < 1e-12


def test_v1_zero_shift(plane_points):
    x, y = plane_points.T
    r = ids.verify_identity("v1", (4, 2, 0, 0), plane_points)
    assert r.passed
    rhs = ids.evaluate_side("cp(lam+lamp, mu+mup) + cp(lam-lamp, mu-mup)", dict(lam=4, mu=2, lamp=0, mup=0), x, y)
    assert np.allclose(rhs, 2 * eval_trig(Label(CPLUS, 4, 2), x, y))


def test_diag_example(plane_points):
    x, y = plane_points.T
    assert ids.verify_identity("A1-cplus-diag", (2, 1, 2, 1), plane_points).passed
    lhs = ids.evaluate_side(ids.get("A1-cplus-diag").lhs, dict(lam=2, mu=1, lamp=2, mup=1), x, y)
    assert np.allclose(lhs, eval_trig(Label(CPLUS, 4, 2), x, y) + 2, atol=1e-12)


def test_char_entry_form():
    ident = ids.get("A1-sminus-char")
    assert ident.rhs == "sm(lam-mu, lam+mu)" and ident.parent_scale == Fraction(1, 2)


@pytest.mark.parametrize("iid,params", [("A1-cplus-diag", (2, 1, 3, 1)), ("A1-cplus-all", (2, 1, 2, 2))])
def test_constraint_violation(iid, params, plane_points):
    with pytest.raises(ValueError):
        ids.verify_identity(iid, params, plane_points)


def test_param_arity():
    with pytest.raises(ValueError):
        ids.check_params(ids.get("v1"), (1, 2, 3))


def _worst(iid, rng, points, use_correction=False, tuples=20):
    ident = ids.get(iid)
    worst = 0.0
    for _ in range(tuples):
        r = ids.verify_identity(iid, ids.random_params(ident, rng), points, use_correction=use_correction)
        worst = max(worst, r.residual)
    return worst


@pytest.mark.parametrize("iid", SOUND)
def test_entry_holds(iid, rng, plane_points):
    assert _worst(iid, rng, plane_points) < 1e-11


@pytest.mark.parametrize("iid", sorted(ERRATA))
def test_erratum_fails_uncorrected(iid, rng, plane_points):
    # the stored right side drops a term; the gap is of order one
    assert _worst(iid, rng, plane_points) > 0.5


@pytest.mark.parametrize("iid", sorted(ERRATA))
def test_erratum_corrected(iid, rng, plane_points):
    assert _worst(iid, rng, plane_points, use_correction=True) < 1e-11


@pytest.mark.parametrize("iid", [i for i in SPECIAL if i not in ERRATA])
def test_specialization_matches_parent(iid):
    assert ids.check_specialization(iid, span=3) == []


@pytest.mark.parametrize("iid", sorted(ERRATA))
def test_erratum_specialization(iid):
    assert ids.check_specialization(iid, span=3)
    assert ids.check_specialization(iid, span=3, use_correction=True) == []


def test_generic_has_no_parent():
    with pytest.raises(ValueError):
        ids.check_specialization("v1")


@pytest.mark.parametrize("iid", ALL_IDS)
def test_structure(iid):
    ids.check_structure(ids.get(iid))


@pytest.mark.parametrize("src", [
    "__import__('os')", "cp(lam, mu) ** 2", "cp(lam*mu, 0)", "foo(lam, mu)", "cp(lam)", "lam.real",
])
def test_unsafe_or_malformed_expression(src):
    with pytest.raises(ids.ExpressionError):
        ids.evaluate_side(src, dict(lam=1, mu=0, lamp=0, mup=0), 0.1, 0.2)


def test_formal_backend_constant():
    # c+(0,0) is the constant 2
    combo = ids.formal_side("cp(0,0) - 2", dict(lam=0, mu=0, lamp=0, mup=0))
    assert not combo
