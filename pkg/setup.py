from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("e8nogo.kernels._speed", ["src/e8nogo/kernels/_speed.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
