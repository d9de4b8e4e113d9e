"""Builds the ``polyfield._polyfield`` extension by driving CMake.

The CMake project owns all compiler settings; this file only points the
build at the right output directory so that both regular and editable
installs find the module.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str) -> None:
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DPOLYFIELD_PYTHON=ON",
        ]
        try:
            import pybind11

            args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        env = os.environ.copy()
        subprocess.run(["cmake", str(source_dir), *args], cwd=build_dir,
                       env=env, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_polyfield",
                        f"-j{os.cpu_count() or 2}"],
                       cwd=build_dir, env=env, check=True)


setup(
    ext_modules=[CMakeExtension("polyfield._polyfield")],
    cmdclass={"build_ext": CMakeBuild},
)
