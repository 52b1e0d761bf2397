"""Build script: compiles the loop-walking kernel as a C extension when Cython
is available; the package falls back to the pure-Python twin otherwise."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("tlcob._kernel_c", ["src/tlcob/_kernel_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
