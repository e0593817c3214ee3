"""Build the optional compiled kernel.

The package works without it (a pure-Python twin is selected at import),
so a missing compiler or Cython only costs speed, not functionality.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"warning: compiled kernel skipped ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} skipped ({exc})", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the compiled "
              "kernel", file=sys.stderr)
        return []
    return cythonize(["src/spexkit/_ckern.pyx"],
                     compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
