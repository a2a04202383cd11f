"""Build script: compiles the spectral-sum kernel extension when Cython is
available; the package falls back to the NumPy kernel otherwise."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sfcar._specsum",
                ["src/sfcar/_specsum.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
