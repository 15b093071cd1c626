"""Build script for the optional compiled kernel.

The package is pure Python; `polyprime._speedups` is a Cython extension
that accelerates the Groebner engine's inner loops. If Cython or a C
compiler is unavailable the build falls back to the pure-Python kernel
(selected automatically at import time), so the extension is marked
optional.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "polyprime._speedups",
                ["src/polyprime/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
