from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sospred._detsign", ["src/sospred/_detsign.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython: install with the pure-Python kernel only.
    ext_modules = []

setup(ext_modules=ext_modules)
