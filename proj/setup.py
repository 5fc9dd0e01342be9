# Copyright 2026 The rekolor Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Build the _rekolor extension with the project's CMake tree.

setuptools drives the packaging; CMake does the actual compile so the
extension is always built from the same sources and flags as the CLI
and the test binaries.
"""

import os
import shutil
import subprocess
import sys
import sysconfig
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)

        import pybind11

        configure = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
        ]
        if shutil.which("ninja"):
            configure += ["-G", "Ninja"]
        subprocess.run(configure, check=True)

        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_rekolor",
             "--parallel", str(os.cpu_count() or 2)],
            check=True,
        )

        suffix = sysconfig.get_config_var("EXT_SUFFIX")
        built = build_dir / f"_rekolor{suffix}"
        if not built.exists():
            matches = list(build_dir.glob("_rekolor*.so"))
            if not matches:
                raise RuntimeError("cmake did not produce the _rekolor module")
            built = matches[0]
        shutil.copy2(built, out_dir / built.name)


setup(
    ext_modules=[CMakeExtension("rekolor._rekolor")],
    cmdclass={"build_ext": CMakeBuild},
)
