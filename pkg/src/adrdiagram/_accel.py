"""Optional numba acceleration.

Every hot kernel in :mod:`adrdiagram.kernels` exists twice: an explicit-loop
version compiled with ``numba.njit`` and a vectorised numpy version. Which one
the library calls is decided once, at import, by ``ADRDIAGRAM_NUMBA``
(``0``/``false``/``off`` selects numpy). Without numba installed the numpy
path is always used.
"""
import os

try:
    import numba

    NUMBA_IMPORTABLE = True
except ImportError:  # pragma: no cover - depends on the environment
    numba = None
    NUMBA_IMPORTABLE = False

_flag = os.environ.get("ADRDIAGRAM_NUMBA", "1").strip().lower()
USE_NUMBA = NUMBA_IMPORTABLE and _flag not in ("0", "false", "no", "off")


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
