"""Build script: compiles the optional mod-p kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernels.
Set XLIE_PURE_KERNELS=1 to skip the compile entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: skipping extension build ({exc}); using pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); using pure-Python kernels")


ext_modules = []
if os.environ.get("XLIE_PURE_KERNELS") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("xlie._kernels._fast", ["src/xlie/_kernels/_fast.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
