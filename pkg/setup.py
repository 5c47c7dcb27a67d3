"""Build hook: compile the optional Cython kernel if Cython is available.

The package is fully functional without it; ``ultrafree._kernels`` falls
back to the pure-Python implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ultrafree/_kernels/_core.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
