"""Build script: compiles the optional C kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile only costs speed.  Set CHARPLAB_NO_EXT=1 to
skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CHARPLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "charplab._ckernel",
                    ["src/charplab/_ckernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
