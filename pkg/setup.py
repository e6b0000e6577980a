import os

from setuptools import Extension, setup


def extensions():
    # the package works without the compiled kernels; skip them on request
    # or when the toolchain is missing
    if os.environ.get("SGCOL_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "sgcol._kernels._cext",
        ["src/sgcol/_kernels/_cext.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
