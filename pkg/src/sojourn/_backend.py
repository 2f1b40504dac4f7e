"""Selects the kernel implementation: numba-compiled loops or pure numpy.

Set SOJOURN_BACKEND to "numba" or "numpy" to force one; the default ("auto")
uses numba when it imports and falls back to numpy otherwise.  Both backends
are exact integer counting over identical inputs and agree bit for bit; the
script under benchmarks/ measures the speed difference.
"""

from __future__ import annotations

import importlib
import os

BACKEND_ENV_VAR = "SOJOURN_BACKEND"

_BACKENDS = ("numba", "numpy")
_modules: dict[str, object] = {}
_numba_available: bool | None = None


def numba_available() -> bool:
    global _numba_available
    if _numba_available is None:
        try:
            importlib.import_module("numba")
        except ImportError:
            _numba_available = False
        else:
            _numba_available = True
    return _numba_available


def active_backend() -> str:
    """Name of the backend that get_kernels() hands out by default."""
    choice = os.environ.get(BACKEND_ENV_VAR, "").strip().lower() or "auto"
    if choice == "auto":
        return "numba" if numba_available() else "numpy"
    if choice not in _BACKENDS:
        raise ValueError(
            f"{BACKEND_ENV_VAR} must be 'numba', 'numpy' or 'auto', got {choice!r}")
    if choice == "numba" and not numba_available():
        raise RuntimeError(f"{BACKEND_ENV_VAR}=numba but numba is not importable")
    return choice


def get_kernels(name: str | None = None):
    """Return the kernel module for ``name`` (default: the active backend)."""
    if name is None:
        name = active_backend()
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name not in _modules:
        _modules[name] = importlib.import_module(f"sojourn._kernels_{name}")
    return _modules[name]
