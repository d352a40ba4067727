import os

from setuptools import Extension, setup

# Set DIVDELTA_PURE=1 to skip the compiled kernels and exercise the
# pure-Python fallback selected at import time.
ext_modules = []
if os.environ.get("DIVDELTA_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "divdelta.kernels._fast",
                    ["src/divdelta/kernels/_fast.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
