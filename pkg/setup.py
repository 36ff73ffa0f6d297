"""Build the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
twin of the kernels is selected at import time), so any failure to
cythonize or compile downgrades to a source-only install instead of
aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/garsidekit/kernels/_speed.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: compiled kernels skipped ({exc}); using pure-Python backend")

setup(ext_modules=ext_modules)
