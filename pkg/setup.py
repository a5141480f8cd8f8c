from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "hychro._count_cy",
        ["src/hychro/_count_cy.pyx"],
        extra_compile_args=["-O3"],
    ),
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
