"""Builds the optional compiled isometry kernel.

Without Cython or a C compiler the package still installs and uses the
pure-Python kernel.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("tracefields.isometry._search", ["src/tracefields/isometry/_search.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
