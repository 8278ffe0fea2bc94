import math

import numpy as np
import pytest

from polysphere.errors import AntipodalEndpoints, SpecMismatch
from polysphere.phi import phi_cart, phi_inverse, phi_inverse_cart
from polysphere.planner import ORIENTED, UNORIENTED, PathPlan, frame_images, plan, validate_plan
from polysphere.polygon import ModuliSpec, PolygonConfig, reflect
from polysphere.sphere import SuspensionCoords, sphere_angle

from conftest import random_unit


def _pair(spec, seed):
    rng = np.random.default_rng(seed)
    k = spec.n - 2
    return phi_inverse_cart(spec, random_unit(rng, k)), phi_inverse_cart(spec, random_unit(rng, k))


def test_quarter_turn(quad):
    p = phi_inverse(quad.spec, SuspensionCoords(4, (1.0, 0.0)))
    pl = plan(quad.spec, p, quad, steps=8)
    assert pl.angle == pytest.approx(math.pi / 2, abs=1e-12)
    assert pl.steps == 8 and len(pl.frames) == 9
    assert validate_plan(pl) == []
    assert np.allclose(pl.frames[-1].vertices, quad.vertices, atol=1e-12, rtol=0)


def test_antipodal_raises(hept_b):
    with pytest.raises(AntipodalEndpoints):
        plan(hept_b.spec, hept_b, reflect(hept_b), tol=0.05)


def test_unoriented_mirror_is_free(hept_b):
    pl = plan(hept_b.spec, hept_b, reflect(hept_b), steps=4, mode=UNORIENTED, tol=0.05)
    assert pl.angle == 0.0
    assert validate_plan(pl, 0.05) == []


def test_unoriented_never_longer():
    spec = ModuliSpec(6, 4.5)
    for seed in range(20):
        p, q = _pair(spec, seed)
        a = plan(spec, p, q, 4, ORIENTED)
        b = plan(spec, p, q, 4, UNORIENTED)
        assert b.angle <= a.angle + 1e-12
        assert b.angle <= math.pi / 2 + 1e-12
        assert validate_plan(b) == []


def test_reversible_oriented():
    spec = ModuliSpec(7, 5.2)
    p, q = _pair(spec, 11)
    ab = plan(spec, p, q, 10)
    ba = plan(spec, q, p, 10)
    assert ab.angle == pytest.approx(ba.angle, abs=1e-12)
    for f, g in zip(ab.frames, reversed(ba.frames)):
        assert np.abs(f.vertices - g.vertices).max() < 1e-8


def test_constant_speed_images():
    spec = ModuliSpec(8, 6.5)
    p, q = _pair(spec, 4)
    pl = plan(spec, p, q, 12)
    X = frame_images(pl)
    steps = [sphere_angle(X[k], X[k + 1]) for k in range(12)]
    assert np.ptp(steps) < 1e-9
    assert sum(steps) == pytest.approx(pl.angle, abs=1e-9)


def test_validate_plan_catches_faults():
    spec = ModuliSpec(6, 4.5)
    p, q = _pair(spec, 2)
    pl = plan(spec, p, q, 6)
    # displaced vertex
    V = pl.frames[3].vertices.copy()
    V[2] += (0.1, 0.0)
    bad = PathPlan(spec, ORIENTED, pl.frames[:3] + [PolygonConfig(spec, V)] + pl.frames[4:], pl.angle, p, q)
    kinds = {v.kind for v in validate_plan(bad)}
    assert any(k.startswith("frame-") for k in kinds)
    # wrong goal: the mirror image only counts in unoriented mode
    wrong = PathPlan(spec, ORIENTED, pl.frames[:-1] + [reflect(q)], pl.angle, p, q)
    assert "endpoint" in {v.kind for v in validate_plan(wrong)}
    # uneven steps
    skew = plan(spec, p, q, 6)
    uneven = PathPlan(spec, ORIENTED, skew.frames[:2] + skew.frames[3:] + [skew.frames[-1]], pl.angle, p, q)
    assert "speed" in {v.kind for v in validate_plan(uneven)}


def test_plan_arguments(quad):
    with pytest.raises(ValueError):
        plan(quad.spec, quad, quad, mode="sideways")
    with pytest.raises(ValueError):
        plan(quad.spec, quad, quad, steps=0)
    other = phi_inverse(ModuliSpec(4, 2.5), SuspensionCoords(4, (1.0, 0.0)))
    with pytest.raises(SpecMismatch):
        plan(quad.spec, quad, other)


def test_same_endpoints(quad):
    pl = plan(quad.spec, quad, quad, steps=3)
    assert pl.angle == 0.0
    assert validate_plan(pl) == []
    assert np.allclose(phi_cart(pl.frames[1]), phi_cart(quad))
