import math

import numpy as np
import pytest

from polysphere import _accel
from polysphere import kernels as K
from polysphere.polygon import ModuliSpec, PolygonConfig

HEPT_A = [(0, 0), (0.6, 0.8), (1.58, 1), (2.58, 1), (3.5, 0.6), (4.49, 0.7), (5.2, 0)]
HEPT_B = [(0, 0), (0.95, 0.3), (1.76, -0.3), (2.63, 0.2), (3.38, 0.85), (4.29, 0.42), (5.2, 0)]
SQUARE_ISH = [(0, 0), (1, 0), (1.5, math.sqrt(3) / 2), (2, 0)]


@pytest.fixture
def hept_a():
    return PolygonConfig(ModuliSpec(7, 5.2), HEPT_A)


@pytest.fixture
def hept_b():
    return PolygonConfig(ModuliSpec(7, 5.2), HEPT_B)


@pytest.fixture
def quad():
    """n=4, r=2: the exact fixture with t = (0, 1)."""
    return PolygonConfig(ModuliSpec(4, 2.0), SQUARE_ISH)


def _backend_params():
    out = [pytest.param("np", id="numpy")]
    if _accel.HAVE_NUMBA:
        out.append(pytest.param("nb", id="numba"))
    return out


@pytest.fixture(params=_backend_params())
def backend(request):
    """Namespace of the four kernels of one backend."""
    suffix = request.param

    class B:
        name = suffix
        susp_to_cart = staticmethod(getattr(K, f"susp_to_cart_{suffix}"))
        cart_to_susp = staticmethod(getattr(K, f"cart_to_susp_{suffix}"))
        phi_inverse = staticmethod(getattr(K, f"phi_inverse_{suffix}"))
        phi_forward = staticmethod(getattr(K, f"phi_forward_{suffix}"))

    return B


# acceptance summary, printed at the end of every run that collects it
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")


def record(number, ok, detail):
    ACCEPTANCE[number] = (bool(ok), detail)
    return ok


def random_unit(rng, k):
    v = rng.standard_normal(k)
    return v / np.linalg.norm(v)
