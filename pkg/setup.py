"""Build script: compiles the optional triple-counting extension.

The package is fully functional without the extension (a numpy/scipy
fallback is selected at import time), so any failure here degrades the
build to pure Python instead of aborting it.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: extension build skipped ({exc}); "
                  "using the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "using the pure-Python kernel")


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"warning: {exc}; building without the compiled kernel")
        return []
    return cythonize(
        [Extension("robcert._kernels_c", ["src/robcert/_kernels_c.pyx"],
                   include_dirs=[numpy.get_include()])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
