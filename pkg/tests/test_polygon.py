import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysphere.errors import InvalidSpec, TailNotFound, WrongArity
from polysphere.phi import phi_inverse
from polysphere.polygon import ModuliSpec, PolygonConfig, reflect, tail_index, validate
from polysphere.sphere import SuspensionCoords


@pytest.mark.parametrize("n,r", [(3, 1.5), (4, 1.99), (4, 3.0), (5, 4.2), (4.5, 2.5), (6, float("nan"))])
def test_spec_rejects(n, r):
    with pytest.raises(InvalidSpec):
        ModuliSpec(n, r)


@pytest.mark.parametrize("n,r", [(4, 2), (4, 2.999), (12, 10), (7, 5.2)])
def test_spec_accepts(n, r):
    assert ModuliSpec(n, r).dim == n - 2


def test_wrong_arity():
    with pytest.raises(WrongArity):
        PolygonConfig(ModuliSpec(4, 2), [(0, 0), (1, 0), (2, 0)])


def test_validate_heptagon_a(hept_a):
    assert validate(hept_a, 0.05) == []


def test_validate_exact_quad(quad):
    assert validate(quad, 1e-9) == []


def test_validate_rounded_quad_needs_looser_tol():
    # 0.8660254 is sqrt(3)/2 cut to 7 decimals: edges are off by ~3e-9
    p = PolygonConfig(ModuliSpec(4, 2), [(0, 0), (1, 0), (1.5, 0.8660254), (2, 0)])
    assert validate(p, 1e-8) == []
    assert {v.kind for v in validate(p, 1e-9)} == {"edge"}


def test_validate_degenerate():
    p = PolygonConfig(ModuliSpec(4, 2), [(0, 0), (1, 0), (2, 0), (2, 0)])
    report = validate(p, 1e-9)
    kinds = {(v.kind, v.index) for v in report}
    assert ("edge", 3) in kinds
    assert ("coincident", 2) in kinds
    edge3 = next(v for v in report if v.kind == "edge" and v.index == 3)
    assert edge3.measured == 0.0


def test_validate_moved_endpoint(quad):
    v = quad.vertices.copy()
    v[0] = (0.1, 0.0)
    kinds = {(x.kind, x.index) for x in validate(PolygonConfig(quad.spec, v))}
    assert ("endpoint", 0) in kinds


def test_reflect(quad):
    m = reflect(quad)
    assert m.vertices[2, 1] == -quad.vertices[2, 1]
    assert np.array_equal(m.vertices[[0, 3]], quad.vertices[[0, 3]])
    assert reflect(m) == quad
    assert validate(m) == []


def test_reflect_fixed_points_are_flat():
    flat = PolygonConfig(ModuliSpec(5, 3.0), [(0, 0), (1, 0), (2, 0), (2.5, 0), (3, 0)])
    assert reflect(flat) == flat
    # unit steps summing to r in [n-2, n-1) cannot all be horizontal, so no
    # valid polygon is fixed: the reflection acts freely
    spec = ModuliSpec(5, 3.0)
    for t in [(0.0, 0.0, 1.0), (0.3, -1.0, 0.0), (1.0, 0.0, 0.0)]:
        p = phi_inverse(spec, SuspensionCoords(5, t))
        assert reflect(p) != p


def test_tail_index_examples(hept_a, hept_b, quad):
    assert tail_index(hept_a, 0.05) == 5
    assert tail_index(hept_b, 0.05) == 4
    assert tail_index(quad) == 2


def test_tail_index_not_found(hept_b):
    with pytest.raises(TailNotFound) as info:
        tail_index(hept_b, 1e-6)
    assert info.value.index == 5  # |d(x_5, x_6) - 1| ~ 2e-3 is the nearest miss


coords = st.lists(st.floats(-0.999, 0.999), min_size=1, max_size=9)


@st.composite
def polygons(draw):
    t = draw(coords)
    n = len(t) + 3
    cut = draw(st.integers(1, n - 2))
    sign = draw(st.sampled_from([-1.0, 1.0]))
    full = (t + [0.0])[: n - 2]
    full[cut - 1] = sign
    r = draw(st.floats(n - 2, n - 1 - 1e-6))
    spec = ModuliSpec(n, r)
    return phi_inverse(spec, SuspensionCoords(n, tuple(full)))


@settings(max_examples=200)
@given(polygons())
def test_generated_polygons_valid_and_tail_even(p):
    assert validate(p, 1e-8) == []
    i0 = tail_index(p, 1e-12)
    assert tail_index(reflect(p), 1e-12) == i0
    n = p.spec.n
    d = p.distances_to_end()
    for i in range(1, i0):
        assert d[i] < n - 1 - i - 1e-12
    end = p.vertices[n - 1]
    head = p.vertices[i0]
    for k in range(i0, n):
        expect = head + (k - i0) * (end - head) / (n - 1 - i0)
        assert np.allclose(p.vertices[k], expect, atol=1e-11)
