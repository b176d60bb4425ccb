# Builds the compiled kernel extension.  The package still works without it:
# tricount.kernels falls back to the pure-Python implementations.
import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "tricount._ckernels",
        ["src/tricount/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level="3") if cythonize else [],
)
