"""Build script: compiles the optional integer-kernel extension.

The extension is a speedup only; the package falls back to the pure-Python
kernel when the build is unavailable.  `URSKIT_NO_EXT=1 pip install -e .`
skips the compile step entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate a failed extension build instead of aborting the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping urskit._kernel._speedups build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: could not compile {ext.name}: {exc}")


ext_modules = []
if not os.environ.get("URSKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "urskit._kernel._speedups",
                    ["src/urskit/_kernel/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:  # pragma: no cover - Cython not installed
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
