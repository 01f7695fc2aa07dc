"""Binary-cube kernels with backend selection at import time.

The compiled extension (built from ``_bitkernel.pyx``) is used when
available; otherwise the pure-Python twin takes over with the same
contract.  ``benchmarks/bench_bitcube.py`` compares the two.
"""

from __future__ import annotations

from . import _bitkernel_py

try:
    from . import _bitkernel as _compiled
except ImportError:  # extension not built; pure fallback
    _compiled = None

_backend = _compiled if _compiled is not None else _bitkernel_py

#: Coefficient budget under which int64 dot products cannot overflow.
_INT64_SAFE = 1 << 62

#: Hard guard against absurd cube allocations (2^26 masks is ~0.5 GiB of reps).
MAX_CUBE_BITS = 26


def backend_name() -> str:
    return "compiled" if _backend is not _bitkernel_py else "python"


def backends() -> dict:
    """Available backend modules by name (for tests and benchmarks)."""
    out = {"python": _bitkernel_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def _check_n(n: int):
    if not 1 <= n <= MAX_CUBE_BITS:
        raise ValueError("binary cube dimension %d out of range 1..%d" % (n, MAX_CUBE_BITS))


def orbit_reps(n: int, gen_maps):
    """Orbit representative (minimum mask) per mask under the generator maps."""
    _check_n(n)
    for gm in gen_maps:
        if len(gm) != n:
            raise ValueError("generator map length does not match cube dimension")
    return _backend.orbit_reps(n, [list(gm) for gm in gen_maps])


def cone_members(n: int, normals):
    """Byte per mask: 1 iff the mask weakly satisfies every normal."""
    _check_n(n)
    normals = [tuple(int(c) for c in normal) for normal in normals]
    for normal in normals:
        if len(normal) != n:
            raise ValueError("normal length does not match cube dimension")
    impl = _backend
    if impl is not _bitkernel_py and any(
        sum(abs(c) for c in normal) >= _INT64_SAFE for normal in normals
    ):
        impl = _bitkernel_py  # arbitrary-precision path
    return impl.cone_members(n, normals)
