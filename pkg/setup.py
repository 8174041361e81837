"""Build hook for the optional compiled band kernel.

The package works without the extension (a numpy fallback is selected at
import time); set BRAIDSEARCH_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BRAIDSEARCH_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("braidsearch._bandkernel", ["src/braidsearch/_bandkernel.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
