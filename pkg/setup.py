"""Build script: compiles the segment-pass extension when Cython and a C
toolchain are present, otherwise installs pure Python only (the package
selects the fallback loop at import time)."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "haltonbound._segment_c",
                ["src/haltonbound/_segment_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
