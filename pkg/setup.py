import os

from setuptools import setup

ext_modules = []
if os.environ.get("EXTOR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/extor/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback is always available; the extension is an optimization.
        ext_modules = []

setup(ext_modules=ext_modules)
