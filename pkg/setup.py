from setuptools import setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in fourcolor/_pykernels.py when the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/fourcolor/_ckernels.pyx",
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
