"""Backend selection for the exhaustive kernels.

The compiled extension is used when it imports; otherwise the numpy
fallback takes over.  Set ``MEDIANKIT_PURE=1`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("MEDIANKIT_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

assoc_witness = _impl.assoc_witness
derived_witness = _impl.derived_witness
hom_witness = _impl.hom_witness
brute_homs = _impl.brute_homs
prime_convex_masks = _impl.prime_convex_masks
a2_subalgebra_witness = _impl.a2_subalgebra_witness


def backends():
    """Return every importable backend module, fallback first."""
    out = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out.append(_ckernels)
    return out
