"""Build hook for the optional compiled sampler kernels.

The package works without the extension (a pure-Python fallback is picked
at import time), so a missing compiler or Cython only costs speed.
"""
import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, headers missing, ...
            print(f"warning: compiled kernels not built ({exc}); using the pure-Python fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); using the pure-Python fallback", file=sys.stderr)


def extensions():
    if os.environ.get("PLBKIT_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension
    ext = Extension(
        "plbkit._kernels",
        ["src/plbkit/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        language="c++",
        # contraction into FMA would change rounding relative to the fallback
        extra_compile_args=["-O2", "-ffp-contract=off"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
