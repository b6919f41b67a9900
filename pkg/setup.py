"""Build hook for the optional compiled kernel.

The extension is a pure speedup: if Cython or a C compiler is missing, the
install proceeds and the package falls back to the pure-Python node loop at
import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    def _skip(self, exc):
        print(f"warning: skipping compiled kernel ({exc}); "
              "the pure-Python backend will be used", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel",
              file=sys.stderr)
        return []
    ext = Extension(
        "eulergamma._kernels",
        ["src/eulergamma/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
