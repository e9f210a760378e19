import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension compiles the whole core in; no separate shared library needed.
sources = sorted(s for s in glob.glob("src/*.cpp") if not s.endswith("main.cpp"))

setup(
    ext_modules=[
        Pybind11Extension(
            "pyucq",
            sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
