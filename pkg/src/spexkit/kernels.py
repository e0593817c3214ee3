"""Kernel backend selection.

The hot search loops exist twice: a Cython extension (``_ckern``) and a
pure-Python twin (``_pykern``).  The compiled one is used when the build
produced it; set ``SPEXKIT_KERNEL=py`` or ``=c`` to force a backend.
Both expose the same functions with identical outputs.
"""

from __future__ import annotations

import os

_forced = os.environ.get("SPEXKIT_KERNEL", "").strip().lower()

if _forced == "py":
    from . import _pykern as _impl
    BACKEND = "python"
elif _forced == "c":
    from . import _ckern as _impl  # hard import error if forced but missing
    BACKEND = "compiled"
else:
    try:
        from . import _ckern as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _pykern as _impl
        BACKEND = "python"

search_subtree = _impl.search_subtree
matching_number_masks = _impl.matching_number_masks
tutte_berge_scan = _impl.tutte_berge_scan
tutte_agreement_scan = _impl.tutte_agreement_scan
