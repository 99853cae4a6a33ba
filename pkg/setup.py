"""Build script: compiles the optional Cython term-arithmetic kernel.

The package works without the extension (a pure-Python twin is selected
at import time), so any failure to build it is non-fatal.
"""

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(
            [
                Extension(
                    "lctplane._kernel_c",
                    ["src/lctplane/_kernel_c.pyx"],
                )
            ],
            language_level=3,
        )
    except Exception:
        return []


setup(ext_modules=_extensions())
