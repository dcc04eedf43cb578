"""Build script.

The compiled reduction core is optional: when Cython is unavailable (or
BINIDEAL_NO_EXT=1), the package installs pure-Python only and selects the
fallback engine at import time.
"""

import os

from setuptools import Extension, setup

_PYX = os.path.join("src", "binideal", "_binom_cy.pyx")

ext_modules = []
if not os.environ.get("BINIDEAL_NO_EXT") and os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("binideal._binom_cy", [_PYX])],
            language_level=3,
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
