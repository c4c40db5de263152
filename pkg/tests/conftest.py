import numpy as np
import pytest


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Absorb jit compilation before any timed assertions run."""
    from sl2harm import _kernels as K
    from sl2harm.spherical import phi_nn

    K.log_gamma_scalar(1.5 + 0.5j)
    K.bessel_j_scalar(1, 2.0)
    out = np.empty(4, complex)
    K.hc_coeffs_scalar(2, 1.0 + 0j, 3, out)
    phi_nn(2, 1.0, 0.5)
    phi_nn(0, 30.0, 1.0)
    yield
