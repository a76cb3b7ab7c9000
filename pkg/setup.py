"""Build the optional compiled kernel; the package works without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HANDLENUM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("handlenum._kernel_c", ["src/handlenum/_kernel_c.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
