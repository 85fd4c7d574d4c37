"""Kernel backend selection.

The compiled ``_fastcore`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` twin.  Set ``PIVOTLOOP_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os

if os.environ.get("PIVOTLOOP_PURE_PYTHON"):
    from . import _pycore as impl
else:
    try:
        from . import _fastcore as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pycore as impl  # type: ignore[no-redef]

BACKEND: str = impl.BACKEND

det = impl.det
det_masked = impl.det_masked
rank = impl.rank
kernel = impl.kernel
ppt = impl.ppt
principal_minors = impl.principal_minors
local_complement = impl.local_complement
simple_local_complement = impl.simple_local_complement
edge_complement = impl.edge_complement
elementary_moves = impl.elementary_moves
delta_matroid_witness = impl.delta_matroid_witness
