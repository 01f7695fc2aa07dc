from setuptools import setup

# The compiled cube kernel is optional: without Cython (or a C toolchain)
# the package falls back to the pure-Python twin at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize("src/fundom/_bitkernel.pyx", language_level="3")
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
