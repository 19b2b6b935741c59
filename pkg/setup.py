import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "fermitrap._ckernels",
                ["src/fermitrap/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                # no -ffast-math: the fallback comparison relies on IEEE semantics
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
