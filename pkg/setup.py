import numpy as np
from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled Jacobi kernel is optional: if the build fails the package
# falls back to the pure NumPy implementation selected at import time.
ext = Extension(
    "renyivar._kernels._jacobi_cy",
    ["src/renyivar/_kernels/_jacobi_cy.pyx"],
    include_dirs=[np.get_include()],
    optional=True,
)

setup(ext_modules=cythonize([ext], language_level=3))
