import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled simplex kernel is an optional speedup: if Cython or a C
# compiler is missing the build proceeds and csl falls back to the pure
# Python kernel at import time.
extensions = []
if cythonize is not None and not os.environ.get("CSL_SKIP_EXTENSION"):
    extensions = cythonize(
        [Extension("csl._simplex", ["src/csl/_simplex.pyx"], optional=True)],
        language_level=3,
    )

setup(ext_modules=extensions)
