import os

import numpy as np
from setuptools import Extension, setup

# Set PLANECOLOUR_NO_EXT=1 to install without the compiled kernels; the
# pure-Python fallback in planecolour._kernels_py is then used.
ext_modules = []
if not os.environ.get("PLANECOLOUR_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "planecolour._kernels",
                ["src/planecolour/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
