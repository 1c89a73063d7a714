"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
numpy fallback in ``_pykernels`` is used.  Setting the environment variable
``IDEAL_PERSISTENCE_KERNELS=python`` forces the fallback.
"""

import os
from contextlib import contextmanager

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("IDEAL_PERSISTENCE_KERNELS", "").lower() != "python":
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels

member_mask = _impl.member_mask
minimal_mask = _impl.minimal_mask
rank_mod_p = _impl.rank_mod_p
reduce_rows = _impl.reduce_rows


def backends():
    """Return ``{name: module}`` for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
        found["cython"] = _ckernels
    except ImportError:
        pass
    return found


@contextmanager
def use_backend(name: str):
    """Temporarily route every kernel call to backend `name`.

    Callers look kernels up as attributes of this module, so swapping the
    module globals is enough.  Not thread safe.
    """
    global BACKEND, member_mask, minimal_mask, rank_mod_p, reduce_rows
    found = backends()
    if name not in found:
        raise ValueError(f"backend {name!r} is not available (have {sorted(found)})")
    saved = BACKEND, member_mask, minimal_mask, rank_mod_p, reduce_rows
    impl = found[name]
    BACKEND = name
    member_mask, minimal_mask = impl.member_mask, impl.minimal_mask
    rank_mod_p, reduce_rows = impl.rank_mod_p, impl.reduce_rows
    try:
        yield impl
    finally:
        BACKEND, member_mask, minimal_mask, rank_mod_p, reduce_rows = saved
