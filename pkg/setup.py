"""Build script: compiles the optional kernel extension when Cython is
available; the package works from the pure-Python fallback without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("cutgame._kernels", ["src/cutgame/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
