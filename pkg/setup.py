"""Build script: compiles the optional arithmetic kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so any failure here downgrades to a warning instead of
aborting the install.  Set UNIPOLY_PURE_BUILD=1 to skip the extension
entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that gives up gracefully when no compiler is usable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"WARNING: compiled kernel build failed ({exc!r}); "
            "falling back to the pure-Python backend",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("UNIPOLY_PURE_BUILD") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; building without the compiled kernel",
              file=sys.stderr)
        return []
    ext = Extension(
        "unipoly.backend._ckernel",
        sources=["src/unipoly/backend/_ckernel.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
