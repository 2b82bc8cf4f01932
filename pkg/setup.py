"""Build script: compiles the optional integer-kernel extension.

The package is pure Python with a compiled fast path.  If Cython or a C
compiler is missing, the build silently degrades to the pure wheel; the
import selector in ncubes.kernels falls back to the Python kernels.
Set NCUBES_PURE=1 to skip the extension on purpose.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never let a failed extension build fail the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, broken toolchain, ...
            print(f"ncubes: skipping compiled kernels ({exc!r})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"ncubes: skipping {ext.name} ({exc!r})")


ext_modules = []
if os.environ.get("NCUBES_PURE") != "1" and os.path.exists("src/ncubes/_kernels.pyx"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("ncubes._kernels", ["src/ncubes/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
