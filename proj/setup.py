from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "nilnorm._nilnorm",
    sources=[
        "python/module.cpp",
        "src/rational.cpp",
        "src/parampoly.cpp",
        "src/coordpoly.cpp",
        "src/sl2.cpp",
        "src/cgc.cpp",
        "src/liealg.cpp",
        "src/normalform.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
