"""Exact Waldspurger-model values, local zeta factors, and the global product.

Thin convenience layer over the compiled ``_core`` module: structured exact
values cross the boundary as JSON, and are decoded into dicts here.
"""

import json as _json

from ._core import (  # noqa: F401
    arch_I,
    arch_I_quadrature,
    cartan_z,
    is_fundamental_discriminant,
    legendre_of_prime,
    nonvanishing,
    run_verify,
    volume_gamma0,
    zeta_infinity,
)
from . import _core


def spherical_values(setup, max_m=10):
    """Spherical new-vector values A_0..A_max_m and their generating function."""
    return _json.loads(_core.spherical_values(_as_json(setup), max_m))


def steinberg_table(setup, max_m=10):
    """New-vector value table for an unramified twist of Steinberg."""
    return _json.loads(_core.steinberg_table(_as_json(setup), max_m))


def local_zeta(setup, order=50):
    """Local zeta integral: closed form, Y factor, and oracle agreement."""
    return _json.loads(_core.local_zeta(_as_json(setup), order))


def validate_config(config):
    """Violation list for a global configuration (empty means valid)."""
    return _core.validate_config(_as_json(config))


def y_table(config):
    """Exact Y_p rational functions for the primes dividing N."""
    return _json.loads(_core.y_table(_as_json(config)))


def global_value(config, s):
    """Truncated global product at a numeric s."""
    return _core.global_product(_as_json(config), s)


def inner_product_value(config):
    """Weight-2 inner-product data at s = 0 (z_at_zero, petersson, vol_gamma0)."""
    return _core.inner_product(_as_json(config))


def _as_json(obj):
    if isinstance(obj, str):
        return obj
    return _json.dumps(obj)
