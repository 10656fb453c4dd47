"""Build hook for the optional compiled search kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import); the compiled kernel is what makes the
full differential sweep finish in minutes instead of hours.
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
                "seqcontrol._kernel",
                ["src/seqcontrol/_kernel.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
