"""Hot-loop kernels with a compiled fast path and a pure-Python fallback.

The compiled extension is optional: it is built when Cython and a C compiler
are available, and skipped otherwise.  Set ``NFACOMP_FORCE_PURE=1`` to ignore
it even when present (used by the parity tests and benchmarks).
"""

import os

from . import pure as _pure

if os.environ.get("NFACOMP_FORCE_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

explore_subsets = _impl.explore_subsets
word_signature = _impl.word_signature
antichain_included = _impl.antichain_included
product_nonempty = _impl.product_nonempty


def backend_name():
    """Either ``"compiled"`` or ``"pure"``, depending on what got imported."""
    return "pure" if _impl is _pure else "compiled"
