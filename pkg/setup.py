from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("ramseykern._ckernels", ["src/ramseykern/_ckernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: the package runs on the pure-Python kernels
    ext_modules = []

setup(ext_modules=ext_modules)
