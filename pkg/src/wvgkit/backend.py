"""Kernel backend selection.

Two interchangeable kernel sets exist: "numba" (JIT-compiled, the default
when numba imports cleanly) and "numpy" (pure vectorised fallback). The
environment variable WVGKIT_BACKEND forces one globally; individual calls
may also pass backend="numpy"/"numba". Both produce bit-identical results.
"""

from __future__ import annotations

import os
import warnings

from . import _kernels_numpy

BACKEND_ENV = "WVGKIT_BACKEND"

_BACKENDS = {"numpy": _kernels_numpy}

try:
    from . import _kernels_numba

    _BACKENDS["numba"] = _kernels_numba
    _PREFERRED = "numba"
except ImportError:  # pragma: no cover - depends on the environment
    _PREFERRED = "numpy"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def default_backend_name() -> str:
    name = os.environ.get(BACKEND_ENV)
    if name is None:
        return _PREFERRED
    name = name.strip().lower()
    if name in _BACKENDS:
        return name
    warnings.warn(
        f"{BACKEND_ENV}={name!r} is not available "
        f"(choices: {', '.join(available_backends())}); using {_PREFERRED}",
        stacklevel=2,
    )
    return _PREFERRED


def get_kernels(name: str | None = None):
    """Resolve a backend name (or the configured default) to its module."""
    if name is None:
        return _BACKENDS[default_backend_name()]
    key = name.strip().lower()
    if key not in _BACKENDS:
        raise ValueError(
            f"unknown backend {name!r}; choices: {', '.join(available_backends())}"
        )
    return _BACKENDS[key]
