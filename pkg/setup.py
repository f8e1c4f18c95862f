"""Builds the optional compiled persistence kernel.

The package works without it: chartnotes.detector falls back to the
pure-Python sweep when the extension is missing or fails to build.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "chartnotes.detector._kernel_cy",
                ["src/chartnotes/detector/_kernel_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
