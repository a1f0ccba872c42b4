import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup; everything runs on the pure
# Python twins in multinom/_pykernels.py.  Set MULTINOM_PURE_PYTHON=1 to skip
# the extension build entirely.
ext_modules = []
if not os.environ.get("MULTINOM_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("multinom._ckernels", ["src/multinom/_ckernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
