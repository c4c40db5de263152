"""Numerical harmonic analysis of (n,n)-type functions on SL(2,R).

Spherical functions by three independent routes, the c-function and
Plancherel density, spectral transforms with inversion, the shear-average
(Abel) transform, Lorentz quasi-norms, and pseudo-differential operators
with their discrete/local/global kernel decomposition.
"""

from ._backend import HAVE_NUMBA, NUMBA_ENABLED
from .errors import (CFunctionPoleError, DomainError, GammaPoleError,
                     PrecisionLossError, RegularizationRequiredError,
                     UnimodularityError)
from .geometry import (CartanCoords, GroupElement, IwasawaCoords, a_flow,
                       cartan_decompose, iwasawa_decompose, k_rot, n_shear,
                       nbar_cartan_radius, nbar_shear, radial_integral)
from .hc_series import HCExpansion, hc_coefficients, phi_global_series, psi_series
from .ktypes import KType, gamma_set, z_k_contains
from .lorentz import (distribution_function, lorentz_pq_norm,
                      lorentz_weak_norm)
from .plancherel import (c_inv_minus, c_nn, plancherel_density,
                         plancherel_density_closed)
from .psido import (apply_psido, cw_symbol_extract, hormander_norm_NA,
                    kernel_continuous, kernel_discrete, kernel_global,
                    mh_norm, multiplier_apply, split_operator,
                    symbol_class_check)
from .special import BesselOrder, bessel_jnorm, gauss_2f1, log_gamma
from .spherical import (phi_nn, phi_nn_group, phi_nn_integral_rep, phi_nn_ode,
                        phi_nn_ode_residual, psi_discrete,
                        verify_functional_identity)
from .symbols import SymbolDescriptor, eta0, eta1, make_symbol, phi_highpass
from .transforms import (RadialProfile, SpectralData, abel_transform,
                         discrete_transform, forward_transform,
                         inverse_transform, spherical_transform)

__version__ = "0.1.0"
