"""Build shim: compile the optional enumeration kernel.

The package is pure Python except for one hot loop (short-vector enumeration).
If Cython or a C compiler is unavailable the build falls through to a
pure-Python install; thetalift.enumeration falls back at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("thetalift._enum_core", ["src/thetalift/_enum_core.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    import sys

    print("thetalift: building without compiled kernel (%s)" % exc, file=sys.stderr)

setup(ext_modules=ext_modules)
