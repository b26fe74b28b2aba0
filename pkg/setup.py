# Build with: pip install -e . --no-build-isolation
# The compiled kernels are optional; qclift falls back to pure Python when they are absent.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "qclift._kernels._ckernels",
                ["src/qclift/_kernels/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
