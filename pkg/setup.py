"""Build script: compiles the optional exact-linear-algebra kernel.

The package is pure Python plus one optional Cython extension
(bcres._kernel._ckernel).  If Cython or a C compiler is missing the
build silently falls back to the pure-Python kernel; nothing else
changes.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    # a failed kernel build must not fail the install
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure-Python kernel" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure-Python kernel" % exc)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("bcres._kernel._ckernel", ["src/bcres/_kernel/_ckernel.pyx"])
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
