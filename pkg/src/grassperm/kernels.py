"""Backend selection for the exhaustive scan kernels.

The compiled module (grassperm._speedups, Cython) and the pure-Python
module (grassperm._fallback) implement the same three functions with
identical semantics; whichever is importable wins, compiled first.
Tests drive both through available_backends().
"""

from __future__ import annotations

from grassperm import _fallback

try:
    from grassperm import _speedups as _impl
    BACKEND = "compiled"
except ImportError:
    _impl = _fallback
    BACKEND = "pure-python"

count_grassmannian_avoiding_increasing = _impl.count_grassmannian_avoiding_increasing
count_grassmannian_avoiders = _impl.count_grassmannian_avoiders
count_sn_avoiding_321_2143 = _impl.count_sn_avoiding_321_2143

MAX_SCAN_SIZE = _fallback.MAX_SCAN_SIZE
MAX_FULL_SN_SIZE = _fallback.MAX_FULL_SN_SIZE


def backend() -> str:
    """Name of the backend in use: 'compiled' or 'pure-python'."""
    return BACKEND


def available_backends() -> dict[str, object]:
    """All importable backends, keyed by name."""
    out: dict[str, object] = {"pure-python": _fallback}
    try:
        from grassperm import _speedups
        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
