from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("qfrob._kernel._fpkernel", ["src/qfrob/_kernel/_fpkernel.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    ),
)
