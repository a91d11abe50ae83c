import sys

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

extra_args = [] if sys.platform == "win32" else ["-ffp-contract=off"]

ext = Pybind11Extension(
    "wsnsim._core",
    sources=[
        "bindings/module.cpp",
        "src/config.cpp",
        "src/election.cpp",
        "src/metrics.cpp",
        "src/radio.cpp",
        "src/report.cpp",
        "src/simulator.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
    extra_compile_args=extra_args,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
