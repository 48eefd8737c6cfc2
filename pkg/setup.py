"""Build script: compiles the optional rolling-column speedup extension.

The extension is a pure accelerator.  If Cython or a C compiler is missing
the install proceeds without it and the package falls back to the Python
implementation of the same loop.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compile failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"skipping optional C extension: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"skipping optional C extension {ext.name}: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - depends on toolchain
        warnings.warn("Cython not available; building without the speedup extension")
        return []
    return cythonize(
        [Extension("lcscount._speedups", ["src/lcscount/_speedups.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
