"""Engine selection for the two-term reduction core.

The compiled extension is preferred when importable; BINIDEAL_PURE=1 forces
the pure-Python twin. Both produce identical output for identical input.
"""

from __future__ import annotations

import os

from . import _binom_py

if os.environ.get("BINIDEAL_PURE") == "1":
    _impl = _binom_py
    BACKEND = "pure"
else:
    try:
        from . import _binom_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _binom_py
        BACKEND = "pure"


def buchberger_fast(gens, nvars, order_spec):
    return _impl.buchberger(gens, nvars, order_spec)


def normal_form_fast(f, basis_enc, nvars, order_spec):
    return _impl.normal_form(f, basis_enc, nvars, order_spec)
