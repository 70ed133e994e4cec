"""Pick the kernel backend at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when HYPACK_BACKEND=python is set, the pure-Python kernels are used.
"""
import importlib
import os

from hypack import _pykernels

_FUNCTIONS = (
    "lobachevsky",
    "lobachevsky_many",
    "vol3_orthoscheme",
    "schlafli_integrand_many",
)


def load(name=None):
    """Return the kernel module for ``name`` ("cython" or "python").

    With ``name=None`` the environment variable HYPACK_BACKEND decides and
    the compiled backend is preferred when importable.
    """
    name = name or os.environ.get("HYPACK_BACKEND", "auto")
    if name == "python":
        return _pykernels
    if name not in ("auto", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    try:
        mod = importlib.import_module("hypack._ckernels")
    except ImportError:
        if name == "cython":
            raise
        return _pykernels
    return mod


def available():
    names = ["python"]
    try:
        importlib.import_module("hypack._ckernels")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


kernels = load()
BACKEND = "python" if kernels is _pykernels else "cython"

lobachevsky = kernels.lobachevsky
lobachevsky_many = kernels.lobachevsky_many
vol3_orthoscheme = kernels.vol3_orthoscheme
schlafli_integrand_many = kernels.schlafli_integrand_many
