import os

from setuptools import Extension, setup

extensions = []
if os.environ.get("NFACOMP_SKIP_SPEEDUPS") != "1":
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "nfacomp._kernels._speedups",
                    ["src/nfacomp/_kernels/_speedups.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython around: the package still works on the pure-Python kernels.
        extensions = []

setup(ext_modules=extensions)
