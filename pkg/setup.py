"""Build script: compiles the optional fast-kernel extension.

The extension is strictly optional.  If Cython or a C compiler is
unavailable the package installs anyway and falls back to the pure-Python
kernels in ``twep._kernels_py``.  Set ``TWEP_PURE=1`` to skip the
extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TWEP_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "twep._speedups",
                    ["src/twep/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
