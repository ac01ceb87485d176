"""Build script: compiles the optional Cython kernel when Cython is available.

The package is fully functional without the extension; ffhyper.kernel falls
back to the pure-Python implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ffhyper/_ckernel.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover - environments without Cython
    print(f"ffhyper: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
