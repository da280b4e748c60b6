"""Arithmetic backend selection.

Two interchangeable kernels implement the same API (see pure.PureKernel):
a pure-Python reference and an optional compiled extension.  The compiled
one is used when importable; UNIPOLY_BACKEND=pure|compiled forces a choice.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .pure import PureKernel

try:
    from . import _ckernel
except ImportError:
    _ckernel = None


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _ckernel is not None else ("pure",)


def default_backend() -> str:
    forced = os.environ.get("UNIPOLY_BACKEND")
    if forced:
        if forced not in ("pure", "compiled"):
            raise ValueError(f"unknown backend {forced!r}")
        if forced == "compiled" and _ckernel is None:
            raise ImportError("compiled backend requested but not built")
        return forced
    return "compiled" if _ckernel is not None else "pure"


@lru_cache(maxsize=None)
def get_kernel(p: int, m: int, modulus: tuple[int, ...], backend: str | None = None):
    """Kernel for GF(p^m) with the given monic modulus (coefficient tuple).

    When the backend is auto-selected, fields beyond the compiled kernel's
    integer range silently fall back to pure; an explicit choice never
    falls back.
    """
    forced = backend is not None or bool(os.environ.get("UNIPOLY_BACKEND"))
    choice = backend or default_backend()
    if choice == "pure":
        return PureKernel(p, m, modulus)
    if choice == "compiled":
        if _ckernel is None:
            raise ImportError("compiled backend requested but not built")
        try:
            return _ckernel.CKernel(p, m, modulus)
        except OverflowError:
            if forced:
                raise
            return PureKernel(p, m, modulus)
    raise ValueError(f"unknown backend {choice!r}")
