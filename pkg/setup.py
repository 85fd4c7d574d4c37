from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; _core falls back to _pycore
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pivotloop._fastcore",
                ["src/pivotloop/_fastcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
